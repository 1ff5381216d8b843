#include "qheis/exactnum/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qheis {

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const BigInt& value) { return value.get_str(); }

namespace {

bool is_integer_literal(std::string_view text, bool allow_sign) {
    if (allow_sign && !text.empty() && text.front() == '-') {
        text.remove_prefix(1);
    }
    if (text.empty()) {
        return false;
    }
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
        throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
    }
    BigInt d(std::string(den), 10);
    if (d == 0) {
        throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
    }
    Rational r(BigInt(std::string(num), 10), d);
    r.canonicalize();
    return r;
}

} // namespace qheis
