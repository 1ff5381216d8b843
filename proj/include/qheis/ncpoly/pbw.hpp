#pragma once

#include "qheis/params.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qheis {

/// Exponent triple of the basis monomial z^i x^j y^k.
struct Monomial {
    unsigned i = 0;
    unsigned j = 0;
    unsigned k = 0;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Hard cap on any single exponent produced by arithmetic.
inline constexpr unsigned kMaxDegree = 1'000'000;

enum class Generator { x, y, z };

/// A finite combination of PBW monomials with nonzero coefficients. The term
/// map is the normal form, so equality is map equality.
class PbwElement {
public:
    using Terms = std::map<Monomial, CycNumber>;

    explicit PbwElement(ParamsRef params) : params_(std::move(params)) {}

    static PbwElement scalar(ParamsRef params, const CycNumber& value);
    static PbwElement monomial(ParamsRef params, Monomial mono, const CycNumber& coeff);
    static PbwElement monomial(ParamsRef params, Monomial mono);
    static PbwElement generator(ParamsRef params, Generator gen);

    const ParamsRef& params() const noexcept { return params_; }
    const AlgebraParams& algebra() const noexcept { return *params_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Adds coeff * mono, dropping the entry if it cancels.
    void add_term(const Monomial& mono, const CycNumber& coeff);

    PbwElement& operator+=(const PbwElement& other);
    PbwElement& operator-=(const PbwElement& other);
    PbwElement& operator*=(const CycNumber& factor);
    PbwElement operator-() const;

    friend PbwElement operator+(PbwElement a, const PbwElement& b) { return a += b; }
    friend PbwElement operator-(PbwElement a, const PbwElement& b) { return a -= b; }
    friend PbwElement operator*(PbwElement a, const CycNumber& c) { return a *= c; }
    friend PbwElement operator*(const CycNumber& c, PbwElement a) { return a *= c; }
    friend PbwElement operator*(const PbwElement& a, const PbwElement& b);

    friend bool operator==(const PbwElement& a, const PbwElement& b);

    std::string to_string() const;

private:
    void require_same(const PbwElement& other) const;

    ParamsRef params_;
    Terms terms_;
};

/// Normal form of a*b via the closed-form reordering of y^k x^b.
PbwElement product(const PbwElement& a, const PbwElement& b);

/// Normal form of a*b by rewriting words with x.z -> p z.x, y.z -> p^-1 z.y,
/// y.x -> q x.y + z, always at the leftmost violation. Slower; kept as an
/// independent check on product().
PbwElement product_by_rewriting(const PbwElement& a, const PbwElement& b);

PbwElement power(const PbwElement& a, unsigned exponent);

/// [k]_{p,q} = sum_{i<k} q^i p^-(k-1-i).
CycNumber pq_number(const AlgebraParams& params, unsigned k);

/// (q^k - p^-k) / (q - p^-1); nullopt when q = p^-1.
std::optional<CycNumber> pq_number_quotient(const AlgebraParams& params, unsigned k);

/// theta = yx - p^-1 xy = (q - p^-1) xy + z.
PbwElement theta(const ParamsRef& params);

/// Omega = z^r theta^s with (r, s) from pair_rs.
PbwElement omega(const ParamsRef& params);

/// The scalar c with gen*a = c*(a*gen), if there is one. Note the side: for
/// a = theta, gen = x this is q^-1, since theta x = q x theta.
/// Throws DomainError on a = 0.
std::optional<CycNumber> commutation_twist(const PbwElement& a, Generator gen);

/// Commutes with x, y and z.
bool is_central(const PbwElement& a);

struct NamedElement {
    std::string name;
    PbwElement value;
};

/// z^m, theta^n, x^l, y^l, Omega in that order.
std::vector<NamedElement> center_generators(const ParamsRef& params);

/// Lexicographic (x-exponent, y-exponent) degree.
struct LexDegree {
    unsigned u = 0;
    unsigned v = 0;
    friend auto operator<=>(const LexDegree&, const LexDegree&) = default;
};

struct LexLeading {
    LexDegree degree;
    std::map<unsigned, CycNumber> z_coeff; // power of z -> coefficient
};

/// Throws DomainError on a = 0.
LexLeading lex_degree(const PbwElement& a);

} // namespace qheis
