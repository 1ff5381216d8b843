#include "qheis/ncpoly/pbw.hpp"

#include "qheis/arith/lattice.hpp"
#include "qheis/error.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace qheis {

namespace {

unsigned checked_add(unsigned a, unsigned b) {
    const unsigned long long sum = static_cast<unsigned long long>(a) + b;
    if (sum > kMaxDegree) {
        throw DomainError("exponent exceeds the degree cap of " + std::to_string(kMaxDegree));
    }
    return static_cast<unsigned>(sum);
}

void require_params(const PbwElement& a, const PbwElement& b) {
    if (a.params() != b.params() && !a.algebra().same_algebra(b.algebra())) {
        throw std::invalid_argument("PbwElement: operands belong to different algebras");
    }
}

// Coefficients c[t] with y^k x^b = sum_t c[t] z^t x^(b-t) y^(k-t). Peeling one
// y off the left of y^k gives
//   c(k, b, t) = q^b c(k-1, b, t) + [b] p^(b-k) c(k-1, b-1, t-1).
class ReorderTable {
public:
    explicit ReorderTable(const AlgebraParams& params) : params_(params) {}

    const std::vector<CycNumber>& get(unsigned k, unsigned b) {
        const auto key = std::make_pair(k, b);
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        std::vector<CycNumber> row;
        if (k == 0 || b == 0) {
            row.push_back(params_.one());
        } else {
            const std::vector<CycNumber> keep = get(k - 1, b);
            const std::vector<CycNumber> drop = get(k - 1, b - 1);
            row.assign(std::min(k, b) + 1, params_.zero());
            const CycNumber& qb = params_.q_pow(b);
            for (std::size_t t = 0; t < keep.size(); ++t) {
                row[t] += qb * keep[t];
            }
            const CycNumber factor = pq_number(params_, b) * params_.p_pow(static_cast<long long>(b) - k);
            if (!factor.is_zero()) {
                for (std::size_t t = 0; t < drop.size(); ++t) {
                    row[t + 1] += factor * drop[t];
                }
            }
        }
        return memo_.emplace(key, std::move(row)).first->second;
    }

private:
    const AlgebraParams& params_;
    std::map<std::pair<unsigned, unsigned>, std::vector<CycNumber>> memo_;
};

} // namespace

PbwElement PbwElement::scalar(ParamsRef params, const CycNumber& value) {
    PbwElement out(std::move(params));
    out.add_term({0, 0, 0}, value);
    return out;
}

PbwElement PbwElement::monomial(ParamsRef params, Monomial mono, const CycNumber& coeff) {
    PbwElement out(std::move(params));
    out.add_term(mono, coeff);
    return out;
}

PbwElement PbwElement::monomial(ParamsRef params, Monomial mono) {
    const CycNumber one = params->one();
    return monomial(std::move(params), mono, one);
}

PbwElement PbwElement::generator(ParamsRef params, Generator gen) {
    switch (gen) {
    case Generator::x:
        return monomial(std::move(params), {0, 1, 0});
    case Generator::y:
        return monomial(std::move(params), {0, 0, 1});
    case Generator::z:
        return monomial(std::move(params), {1, 0, 0});
    }
    throw std::logic_error("unreachable");
}

void PbwElement::add_term(const Monomial& mono, const CycNumber& coeff) {
    if (coeff.is_zero()) {
        return;
    }
    if (mono.i > kMaxDegree || mono.j > kMaxDegree || mono.k > kMaxDegree) {
        throw DomainError("exponent exceeds the degree cap of " + std::to_string(kMaxDegree));
    }
    auto [it, inserted] = terms_.try_emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

void PbwElement::require_same(const PbwElement& other) const { require_params(*this, other); }

PbwElement& PbwElement::operator+=(const PbwElement& other) {
    require_same(other);
    for (const auto& [mono, c] : other.terms_) {
        add_term(mono, c);
    }
    return *this;
}

PbwElement& PbwElement::operator-=(const PbwElement& other) {
    require_same(other);
    for (const auto& [mono, c] : other.terms_) {
        add_term(mono, -c);
    }
    return *this;
}

PbwElement& PbwElement::operator*=(const CycNumber& factor) {
    if (factor.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, c] : terms_) {
        c *= factor;
    }
    return *this;
}

PbwElement PbwElement::operator-() const {
    PbwElement out = *this;
    for (auto& [mono, c] : out.terms_) {
        c = -c;
    }
    return out;
}

PbwElement operator*(const PbwElement& a, const PbwElement& b) { return product(a, b); }

bool operator==(const PbwElement& a, const PbwElement& b) {
    return a.algebra().same_algebra(b.algebra()) && a.terms_ == b.terms_;
}

std::string PbwElement::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        if (!first) {
            out << " + ";
        }
        first = false;
        const bool bare = mono.i == 0 && mono.j == 0 && mono.k == 0;
        if (bare || !c.is_one()) {
            out << '(' << c.to_string() << ')';
        }
        auto letter = [&](char name, unsigned e) {
            if (e == 0) {
                return;
            }
            out << name;
            if (e > 1) {
                out << '^' << e;
            }
        };
        letter('z', mono.i);
        letter('x', mono.j);
        letter('y', mono.k);
    }
    return out.str();
}

PbwElement product(const PbwElement& a, const PbwElement& b) {
    require_params(a, b);
    const AlgebraParams& P = a.algebra();
    PbwElement out(a.params());
    ReorderTable table(P);
    for (const auto& [left, ca] : a.terms()) {
        for (const auto& [right, cb] : b.terms()) {
            // z^i x^j y^k . z^a x^b y^c: move z^a left past y^k and x^j, then
            // reorder y^k x^b and carry the produced z^t past x^j.
            const long long shift = (static_cast<long long>(left.j) - left.k) % P.m;
            const CycNumber scale = ca * cb * P.p_pow(shift * (right.i % P.m));
            const auto& coeffs = table.get(left.k, right.j);
            for (std::size_t t = 0; t < coeffs.size(); ++t) {
                if (coeffs[t].is_zero()) {
                    continue;
                }
                const unsigned tt = static_cast<unsigned>(t);
                const Monomial mono{checked_add(checked_add(left.i, right.i), tt),
                                    checked_add(left.j, right.j - tt), checked_add(left.k - tt, right.k)};
                out.add_term(mono, scale * P.p_pow(static_cast<long long>(left.j % P.m) * (tt % P.m)) * coeffs[t]);
            }
        }
    }
    return out;
}

PbwElement product_by_rewriting(const PbwElement& a, const PbwElement& b) {
    require_params(a, b);
    const AlgebraParams& P = a.algebra();

    // Termination: every rule either removes a letter (y.x -> z) or swaps an
    // adjacent out-of-order pair without changing the length, so the pair
    // (length, number of out-of-order pairs) drops lexicographically.
    std::map<std::string, CycNumber> pending;
    auto accumulate = [](std::map<std::string, CycNumber>& into, std::string word, const CycNumber& c) {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = into.try_emplace(std::move(word), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                into.erase(it);
            }
        }
    };
    auto spell = [](const Monomial& mono) {
        return std::string(mono.i, 'z') + std::string(mono.j, 'x') + std::string(mono.k, 'y');
    };
    for (const auto& [left, ca] : a.terms()) {
        for (const auto& [right, cb] : b.terms()) {
            accumulate(pending, spell(left) + spell(right), ca * cb);
        }
    }

    PbwElement out(a.params());
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const std::string& word = node.key();
        const CycNumber& c = node.mapped();
        std::size_t pos = 0;
        while (pos + 1 < word.size()) {
            const char l = word[pos];
            const char r = word[pos + 1];
            if ((l == 'x' && r == 'z') || (l == 'y' && (r == 'z' || r == 'x'))) {
                break;
            }
            ++pos;
        }
        if (pos + 1 >= word.size()) {
            Monomial mono;
            for (char ch : word) {
                (ch == 'z' ? mono.i : ch == 'x' ? mono.j : mono.k) += 1;
            }
            out.add_term(mono, c);
            continue;
        }
        std::string swapped = word;
        std::swap(swapped[pos], swapped[pos + 1]);
        if (word[pos] == 'x') {
            accumulate(pending, std::move(swapped), c * P.p);
        } else if (word[pos + 1] == 'z') {
            accumulate(pending, std::move(swapped), c * P.p_inv);
        } else {
            accumulate(pending, std::move(swapped), c * P.q);
            std::string shorter = word.substr(0, pos) + 'z' + word.substr(pos + 2);
            accumulate(pending, std::move(shorter), c);
        }
    }
    return out;
}

PbwElement power(const PbwElement& a, unsigned exponent) {
    PbwElement result = PbwElement::scalar(a.params(), a.algebra().one());
    PbwElement base = a;
    while (exponent > 0) {
        if (exponent & 1U) {
            result = product(result, base);
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base = product(base, base);
        }
    }
    return result;
}

CycNumber pq_number(const AlgebraParams& params, unsigned k) {
    CycNumber sum = params.zero();
    for (unsigned i = 0; i < k; ++i) {
        sum += params.q_pow(i) * params.p_pow(-static_cast<long long>(k - 1 - i));
    }
    return sum;
}

std::optional<CycNumber> pq_number_quotient(const AlgebraParams& params, unsigned k) {
    const CycNumber denom = params.q - params.p_inv;
    if (denom.is_zero()) {
        return std::nullopt;
    }
    return (params.q_pow(k) - params.p_pow(-static_cast<long long>(k))) * denom.inverse();
}

PbwElement theta(const ParamsRef& params) {
    PbwElement out(params);
    out.add_term({0, 1, 1}, params->q - params->p_inv);
    out.add_term({1, 0, 0}, params->one());
    return out;
}

PbwElement omega(const ParamsRef& params) {
    const auto [r, s] = pair_rs(*params);
    return product(PbwElement::monomial(params, {r, 0, 0}), power(theta(params), s));
}

std::optional<CycNumber> commutation_twist(const PbwElement& a, Generator gen) {
    if (a.is_zero()) {
        throw DomainError("commutation_twist of zero");
    }
    const PbwElement g = PbwElement::generator(a.params(), gen);
    const PbwElement left = product(g, a);
    const PbwElement right = product(a, g);
    // H_{p,q} is a domain, so right != 0.
    const auto& [mono, rc] = *right.terms().begin();
    const auto hit = left.terms().find(mono);
    if (hit == left.terms().end()) {
        return std::nullopt;
    }
    const CycNumber c = hit->second * rc.inverse();
    if (right * c == left) {
        return c;
    }
    return std::nullopt;
}

bool is_central(const PbwElement& a) {
    for (Generator gen : {Generator::x, Generator::y, Generator::z}) {
        const PbwElement g = PbwElement::generator(a.params(), gen);
        if (!(product(g, a) == product(a, g))) {
            return false;
        }
    }
    return true;
}

std::vector<NamedElement> center_generators(const ParamsRef& params) {
    std::vector<NamedElement> out;
    out.push_back({"z^m", PbwElement::monomial(params, {params->m, 0, 0})});
    out.push_back({"theta^n", power(theta(params), params->n)});
    out.push_back({"x^l", PbwElement::monomial(params, {0, params->l, 0})});
    out.push_back({"y^l", PbwElement::monomial(params, {0, 0, params->l})});
    out.push_back({"Omega", omega(params)});
    return out;
}

LexLeading lex_degree(const PbwElement& a) {
    if (a.is_zero()) {
        throw DomainError("lex_degree of zero");
    }
    LexLeading out;
    for (const auto& [mono, c] : a.terms()) {
        out.degree = std::max(out.degree, LexDegree{mono.j, mono.k});
    }
    for (const auto& [mono, c] : a.terms()) {
        if (mono.j == out.degree.u && mono.k == out.degree.v) {
            out.z_coeff.emplace(mono.i, c);
        }
    }
    return out;
}

} // namespace qheis
