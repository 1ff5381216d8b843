#include "qheis/cli/expr.hpp"

#include "qheis/error.hpp"

#include <cctype>
#include <string>

namespace qheis::cli {

namespace {

struct Token {
    enum class Type { ident, number, plus, minus, star, caret, lparen, rparen, end };
    Type type = Type::end;
    std::string text;
    Rational value;
    std::size_t offset = 0;
};

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Token tok;
        tok.offset = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                ++j;
            }
            if (j < s.size() && s[j] == '/') {
                std::size_t k = j + 1;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) {
                    ++k;
                }
                if (k == j + 1) {
                    throw ParseError("expected digits after '/'", k);
                }
                j = k;
            }
            tok.type = Token::Type::number;
            tok.text = std::string(s.substr(i, j - i));
            try {
                tok.value = parse_rational(tok.text);
            } catch (const std::invalid_argument&) {
                throw ParseError("invalid rational literal '" + tok.text + "'", i);
            }
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            tok.type = Token::Type::ident;
            if (s.substr(i, 5) == "theta") {
                tok.text = "theta";
                i += 5;
            } else {
                tok.text = std::string(1, c);
                ++i;
            }
            static const std::string known = "xyzgpq";
            if (tok.text != "theta" && known.find(tok.text) == std::string::npos) {
                throw ParseError("unknown symbol '" + tok.text + "'", tok.offset);
            }
        } else {
            switch (c) {
            case '+':
                tok.type = Token::Type::plus;
                break;
            case '-':
                tok.type = Token::Type::minus;
                break;
            case '*':
                tok.type = Token::Type::star;
                break;
            case '^':
                tok.type = Token::Type::caret;
                break;
            case '(':
                tok.type = Token::Type::lparen;
                break;
            case ')':
                tok.type = Token::Type::rparen;
                break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", i);
            }
            tok.text = std::string(1, c);
            ++i;
        }
        out.push_back(std::move(tok));
    }
    Token end;
    end.offset = s.size();
    out.push_back(end);
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    ExprPtr parse() {
        if (peek().type == Token::Type::end) {
            throw ParseError("empty expression", peek().offset);
        }
        ExprPtr e = sum();
        if (peek().type != Token::Type::end) {
            throw ParseError("unexpected '" + peek().text + "'", peek().offset);
        }
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    static ExprPtr node(Expr::Kind kind, std::size_t offset, std::vector<ExprPtr> args) {
        auto e = std::make_shared<Expr>();
        e->kind = kind;
        e->offset = offset;
        e->args = std::move(args);
        return e;
    }

    ExprPtr sum() {
        ExprPtr left = product();
        while (peek().type == Token::Type::plus || peek().type == Token::Type::minus) {
            const Token& op = next();
            ExprPtr right = product();
            left = node(op.type == Token::Type::plus ? Expr::Kind::add : Expr::Kind::sub, op.offset, {left, right});
        }
        return left;
    }

    bool starts_factor() const {
        const auto t = peek().type;
        return t == Token::Type::ident || t == Token::Type::number || t == Token::Type::lparen;
    }

    ExprPtr product() {
        ExprPtr left = unary();
        for (;;) {
            if (peek().type == Token::Type::star) {
                const Token& op = next();
                ExprPtr right = unary();
                left = node(Expr::Kind::mul, op.offset, {left, right});
            } else if (starts_factor()) {
                const std::size_t at = peek().offset;
                ExprPtr right = unary();
                left = node(Expr::Kind::mul, at, {left, right});
            } else {
                return left;
            }
        }
    }

    ExprPtr unary() {
        if (peek().type == Token::Type::minus) {
            const Token& op = next();
            return node(Expr::Kind::neg, op.offset, {unary()});
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (peek().type != Token::Type::caret) {
            return base;
        }
        const Token& op = next();
        const Token& ex = next();
        if (ex.type != Token::Type::number || ex.value.get_den() != 1 || ex.value < 0) {
            throw ParseError("exponent must be a non-negative integer literal", ex.offset);
        }
        if (ex.value > kMaxDegree) {
            throw ParseError("exponent exceeds the degree cap", ex.offset);
        }
        if (peek().type == Token::Type::caret) {
            throw ParseError("chained '^' is ambiguous; add parentheses", peek().offset);
        }
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::pow;
        e->offset = op.offset;
        e->exponent = static_cast<unsigned>(ex.value.get_num().get_ui());
        e->args = {base};
        return e;
    }

    ExprPtr atom() {
        const Token& t = next();
        switch (t.type) {
        case Token::Type::number: {
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::number;
            e->value = t.value;
            e->offset = t.offset;
            return e;
        }
        case Token::Type::ident: {
            auto e = std::make_shared<Expr>();
            e->offset = t.offset;
            if (t.text == "theta") {
                e->kind = Expr::Kind::theta;
            } else {
                switch (t.text[0]) {
                case 'x':
                    e->kind = Expr::Kind::x;
                    break;
                case 'y':
                    e->kind = Expr::Kind::y;
                    break;
                case 'z':
                    e->kind = Expr::Kind::z;
                    break;
                case 'g':
                    e->kind = Expr::Kind::g;
                    break;
                case 'p':
                    e->kind = Expr::Kind::p;
                    break;
                default:
                    e->kind = Expr::Kind::q;
                    break;
                }
            }
            return e;
        }
        case Token::Type::lparen: {
            ExprPtr inner = sum();
            if (peek().type != Token::Type::rparen) {
                throw ParseError("expected ')'", peek().offset);
            }
            next();
            return inner;
        }
        case Token::Type::end:
            throw ParseError("unexpected end of expression", t.offset);
        default:
            throw ParseError("unexpected '" + t.text + "'", t.offset);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

} // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(lex(text)).parse(); }

PbwElement evaluate(const Expr& expr, const ParamsRef& params) {
    const AlgebraParams& P = *params;
    switch (expr.kind) {
    case Expr::Kind::x:
        return PbwElement::generator(params, Generator::x);
    case Expr::Kind::y:
        return PbwElement::generator(params, Generator::y);
    case Expr::Kind::z:
        return PbwElement::generator(params, Generator::z);
    case Expr::Kind::theta:
        return theta(params);
    case Expr::Kind::g:
        return PbwElement::scalar(params, P.g_pow(1));
    case Expr::Kind::p:
        return PbwElement::scalar(params, P.p);
    case Expr::Kind::q:
        return PbwElement::scalar(params, P.q);
    case Expr::Kind::number:
        return PbwElement::scalar(params, CycNumber(P.conductor, expr.value));
    case Expr::Kind::add:
        return evaluate(*expr.args[0], params) + evaluate(*expr.args[1], params);
    case Expr::Kind::sub:
        return evaluate(*expr.args[0], params) - evaluate(*expr.args[1], params);
    case Expr::Kind::mul:
        return product(evaluate(*expr.args[0], params), evaluate(*expr.args[1], params));
    case Expr::Kind::neg:
        return -evaluate(*expr.args[0], params);
    case Expr::Kind::pow: {
        const PbwElement base = evaluate(*expr.args[0], params);
        // Every letter's exponent in base^e is at most e times its exponent in
        // base plus carries into z, which are bounded by the same total.
        unsigned long long total = 0;
        for (const auto& [mono, c] : base.terms()) {
            total = std::max<unsigned long long>(total, 0ULL + mono.i + mono.j + mono.k);
        }
        if (total * expr.exponent > kMaxDegree) {
            throw DomainError("power exceeds the degree cap of " + std::to_string(kMaxDegree));
        }
        return power(base, expr.exponent);
    }
    }
    throw std::logic_error("unreachable");
}

CycNumber evaluate_scalar(std::string_view text, const ParamsRef& params) {
    const PbwElement value = evaluate(*parse_expr(text), params);
    if (value.is_zero()) {
        return params->zero();
    }
    if (value.terms().size() != 1 || !(value.terms().begin()->first == Monomial{})) {
        throw std::invalid_argument("'" + std::string(text) + "' is not a scalar");
    }
    return value.terms().begin()->second;
}

} // namespace qheis::cli
