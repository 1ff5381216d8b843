#pragma once

#include "qheis/exactnum/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qheis {

/// Largest conductor accepted anywhere in the library.
inline constexpr unsigned kMaxConductor = 1024;

unsigned euler_phi(unsigned n);

/// Dense ascending coefficients of the n-th cyclotomic polynomial, obtained by
/// dividing t^n - 1 by the cyclotomic polynomials of the proper divisors of n.
std::vector<BigInt> cyclotomic_polynomial(unsigned n);

namespace detail {
struct CyclotomicField;
const CyclotomicField& field_for(unsigned conductor);
} // namespace detail

/// An element of Q(zeta_N), stored as the polynomial in zeta_N of degree below
/// phi(N) obtained by reduction modulo Phi_N. The representation is canonical,
/// so equality is coefficient-wise.
class CycNumber {
public:
    /// Zero of Q (conductor 1).
    CycNumber();
    /// Zero of Q(zeta_N).
    explicit CycNumber(unsigned conductor);
    CycNumber(unsigned conductor, const Rational& value);
    CycNumber(unsigned conductor, long value) : CycNumber(conductor, Rational(value)) {}
    /// Reduces an arbitrary-length coefficient vector (in powers of zeta_N).
    CycNumber(unsigned conductor, const std::vector<Rational>& powers);

    unsigned conductor() const noexcept;
    unsigned degree() const noexcept { return static_cast<unsigned>(coeffs_.size()); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    CycNumber operator-() const;
    CycNumber& operator+=(const CycNumber& other);
    CycNumber& operator-=(const CycNumber& other);
    CycNumber& operator*=(const CycNumber& other);
    CycNumber& operator*=(const Rational& factor);

    friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
    friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
    friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
    friend CycNumber operator*(CycNumber a, const Rational& b) { return a *= b; }
    friend CycNumber operator*(const Rational& a, CycNumber b) { return b *= a; }

    friend bool operator==(const CycNumber& a, const CycNumber& b);

    /// Throws DomainError on zero.
    CycNumber inverse() const;
    /// Negative exponents go through inverse().
    CycNumber pow(long long exponent) const;
    /// Image under Q(zeta_N) -> Q(zeta_M), zeta_N |-> zeta_M^(M/N). Requires N | M.
    CycNumber embed(unsigned conductor) const;

    /// Human-readable form such as "1/2 - zeta6^2".
    std::string to_string() const;

private:
    const detail::CyclotomicField* field_;
    std::vector<Rational> coeffs_;
};

/// zeta_N^j, with j reduced modulo N.
CycNumber zeta_power(unsigned conductor, long long j);

/// Smallest k >= 1 with a^k = 1, or nullopt when a is not a root of unity.
/// Every root of unity in Q(zeta_N) has order dividing lcm(2, N).
std::optional<unsigned> order_of_unit(const CycNumber& a);

/// Some r-th root of a inside Q(zeta_N), or nullopt when none is found. The
/// candidate is located numerically through the complex embeddings and
/// confirmed by exact exponentiation, so any returned value is exact.
std::optional<CycNumber> nth_root(const CycNumber& a, unsigned r);

} // namespace qheis
