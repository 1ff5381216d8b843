#pragma once

#include "qheis/arith/int_matrix.hpp"
#include "qheis/params.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qheis {

/// The skew-symmetric integer matrix of exponents attached to the quantum
/// affine space that H_{p,q} deforms to once the derivation is erased.
IntMatrix relation_matrix(const AlgebraParams& params);

struct PiDegreeReport {
    unsigned pi_degree = 0;
    BigInt h1;                           // first invariant factor
    std::vector<BigInt> invariant_factors;
};

/// PI degree read off the Smith normal form of relation_matrix: l / gcd(h1, l).
PiDegreeReport pi_degree_snf(const AlgebraParams& params);

/// Closed form: lcm(m, n). Throws DomainError if (m, n) admits no valid
/// parameterisation.
unsigned pi_degree(unsigned m, unsigned n);

/// Exponents (r, s) with p^r = q^s used to build the central element Omega.
std::pair<unsigned, unsigned> pair_rs(const AlgebraParams& params);

/// Multiplicative order of pq via l / gcd(s1 k1 + s2 k2, l); the alternative
/// mn / gcd(m k2 + n k1, mn) form is evaluated too and must agree.
unsigned ord_pq(const AlgebraParams& params);
unsigned ord_pq(unsigned m, unsigned n, unsigned k1, unsigned k2);

enum class OrderVerdict { always_max, always_nonmax, mixed };

std::string to_string(OrderVerdict verdict);

struct OrderEntry {
    unsigned k1 = 0;
    unsigned k2 = 0;
    unsigned ord = 0;
    friend bool operator==(const OrderEntry&, const OrderEntry&) = default;
};

struct OrderReport {
    unsigned m = 0;
    unsigned n = 0;
    std::vector<OrderEntry> entries; // ascending (k1, k2)
    OrderVerdict verdict = OrderVerdict::mixed;
};

/// Prime-exponent criterion for whether ord(pq) is maximal for every, no, or
/// only some parameterisation of (m, n).
OrderVerdict classify_pair(unsigned m, unsigned n);

/// Exhaustive evaluation of ord(pq) over all admissible (k1, k2).
OrderReport scan_orders(unsigned m, unsigned n);

/// All admissible (k1, k2) for (m, n), ascending.
std::vector<std::pair<unsigned, unsigned>> admissible_pairs(unsigned m, unsigned n);

/// Trial-division factorisation; n in [1, 1e9].
std::map<unsigned long, unsigned> factorize(unsigned long n);

} // namespace qheis
