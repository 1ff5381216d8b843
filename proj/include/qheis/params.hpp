#pragma once

#include "qheis/exactnum/cyclotomic.hpp"

#include <memory>
#include <vector>

namespace qheis {

/// Root-of-unity configuration of H_{p,q}: p = g^(s1*k1), q = g^(s2*k2) with
/// g = zeta_l, l = lcm(m, n), all realised inside Q(zeta_conductor).
struct AlgebraParams {
    unsigned m = 1;
    unsigned n = 1;
    unsigned k1 = 0;
    unsigned k2 = 0;
    unsigned l = 1;
    unsigned s1 = 1;
    unsigned s2 = 1;
    unsigned conductor = 1; // a multiple of l

    CycNumber p;
    CycNumber q;
    CycNumber p_inv;
    CycNumber q_inv;

    /// g^e for any integer e (g = zeta_l).
    const CycNumber& g_pow(long long e) const;
    const CycNumber& p_pow(long long e) const { return g_pow(static_cast<long long>(s1) * k1 * (e % m)); }
    const CycNumber& q_pow(long long e) const { return g_pow(static_cast<long long>(s2) * k2 * (e % n)); }

    CycNumber scalar(long value) const { return CycNumber(conductor, value); }
    CycNumber zero() const { return CycNumber(conductor); }
    CycNumber one() const { return CycNumber(conductor, 1L); }
    /// Moves a scalar from a subfield Q(zeta_N), N | conductor, into the
    /// coefficient field.
    CycNumber lift(const CycNumber& value) const { return value.embed(conductor); }

    bool same_algebra(const AlgebraParams& other) const {
        return m == other.m && n == other.n && k1 == other.k1 && k2 == other.k2 && conductor == other.conductor;
    }

    std::vector<CycNumber> g_table; // g^0 .. g^(l-1)
};

using ParamsRef = std::shared_ptr<const AlgebraParams>;

/// Validates (m, n, k1, k2) and materialises p, q. conductor 0 means l.
/// Throws DomainError for gcd violations, out-of-range k's and pq = 1.
ParamsRef derive_params(unsigned m, unsigned n, unsigned k1, unsigned k2, unsigned conductor = 0);

/// True when (k1, k2) parameterises a valid H_{p,q} for (m, n).
bool is_admissible(unsigned m, unsigned n, unsigned k1, unsigned k2);

} // namespace qheis
