#pragma once

#include "qheis/ncpoly/pbw.hpp"

#include <memory>
#include <string_view>
#include <vector>

namespace qheis::cli {

/// Parsed expression. Atoms are x, y, z, theta, g (= zeta_l), p, q and
/// rational literals; operators are + and - (binary and unary), product by *
/// or juxtaposition, and ^ with a non-negative integer literal exponent.
struct Expr {
    enum class Kind { x, y, z, theta, g, p, q, number, add, sub, mul, neg, pow };

    Kind kind = Kind::number;
    Rational value;        // number
    unsigned exponent = 0; // pow
    std::size_t offset = 0;
    std::vector<std::shared_ptr<const Expr>> args;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Throws ParseError carrying the byte offset of the offending token.
ExprPtr parse_expr(std::string_view text);

/// Normal form of the expression. Throws DomainError past the degree cap.
PbwElement evaluate(const Expr& expr, const ParamsRef& params);

/// Parses and evaluates, then requires a pure scalar. Used for --mu and
/// friends.
CycNumber evaluate_scalar(std::string_view text, const ParamsRef& params);

} // namespace qheis::cli
