#include "qheis/arith/lattice.hpp"

#include "qheis/error.hpp"

#include <numeric>
#include <stdexcept>

namespace qheis {

IntMatrix relation_matrix(const AlgebraParams& params) {
    const long a = static_cast<long>(params.s1) * params.k1;
    const long b = static_cast<long>(params.s2) * params.k2;
    return IntMatrix{{0, -a, a}, {a, 0, -b}, {-a, b, 0}};
}

PiDegreeReport pi_degree_snf(const AlgebraParams& params) {
    const SmithForm snf = smith_normal_form(relation_matrix(params));
    PiDegreeReport report;
    report.invariant_factors = snf.invariant_factors;
    report.h1 = snf.invariant_factors.front();
    BigInt g;
    const BigInt l = params.l;
    mpz_gcd(g.get_mpz_t(), report.h1.get_mpz_t(), l.get_mpz_t());
    report.pi_degree = static_cast<unsigned>(BigInt(l / g).get_ui());
    return report;
}

unsigned pi_degree(unsigned m, unsigned n) {
    if (admissible_pairs(m, n).empty()) {
        throw DomainError("(m, n) = (" + std::to_string(m) + ", " + std::to_string(n) +
                          ") admits no parameters with pq != 1");
    }
    return std::lcm(m, n);
}

std::pair<unsigned, unsigned> pair_rs(const AlgebraParams& params) {
    const unsigned g = std::gcd(params.k1, params.k2);
    const unsigned long long r = (static_cast<unsigned long long>(params.s2) * params.k2 / g) % params.m;
    const unsigned long long s = (static_cast<unsigned long long>(params.s1) * params.k1 / g) % params.n;
    if (!(params.p_pow(static_cast<long long>(r)) == params.q_pow(static_cast<long long>(s)))) {
        throw std::logic_error("pair_rs: p^r != q^s");
    }
    return {static_cast<unsigned>(r), static_cast<unsigned>(s)};
}

unsigned ord_pq(unsigned m, unsigned n, unsigned k1, unsigned k2) {
    if (!is_admissible(m, n, k1, k2)) {
        throw DomainError("ord_pq: inadmissible parameters");
    }
    const unsigned long long g = std::gcd(m, n);
    const unsigned long long l = m / g * n;
    const unsigned long long s1 = n / g;
    const unsigned long long s2 = m / g;
    const unsigned long long via_l = l / std::gcd(s1 * k1 + s2 * k2, l);
    const unsigned long long mn = static_cast<unsigned long long>(m) * n;
    const unsigned long long via_mn = mn / std::gcd(static_cast<unsigned long long>(m) * k2 + static_cast<unsigned long long>(n) * k1, mn);
    if (via_l != via_mn) {
        throw std::logic_error("ord_pq: the two closed forms disagree");
    }
    return static_cast<unsigned>(via_l);
}

unsigned ord_pq(const AlgebraParams& params) { return ord_pq(params.m, params.n, params.k1, params.k2); }

std::string to_string(OrderVerdict verdict) {
    switch (verdict) {
    case OrderVerdict::always_max:
        return "ALWAYS_MAX";
    case OrderVerdict::always_nonmax:
        return "ALWAYS_NONMAX";
    case OrderVerdict::mixed:
        return "MIXED";
    }
    return "MIXED";
}

std::vector<std::pair<unsigned, unsigned>> admissible_pairs(unsigned m, unsigned n) {
    std::vector<std::pair<unsigned, unsigned>> out;
    if (m == 0 || n == 0) {
        return out;
    }
    for (unsigned k1 = 0; k1 < m; ++k1) {
        for (unsigned k2 = 0; k2 < n; ++k2) {
            if (is_admissible(m, n, k1, k2)) {
                out.emplace_back(k1, k2);
            }
        }
    }
    return out;
}

std::map<unsigned long, unsigned> factorize(unsigned long n) {
    if (n == 0 || n > 1'000'000'000UL) {
        throw std::invalid_argument("factorize: input outside [1, 1e9]");
    }
    std::map<unsigned long, unsigned> out;
    for (unsigned long p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) {
        ++out[n];
    }
    return out;
}

OrderVerdict classify_pair(unsigned m, unsigned n) {
    if (admissible_pairs(m, n).empty()) {
        throw DomainError("no admissible parameters for (m, n) = (" + std::to_string(m) + ", " +
                          std::to_string(n) + ")");
    }
    const auto fm = factorize(m);
    const auto fn = factorize(n);
    auto exponent = [](const std::map<unsigned long, unsigned>& f, unsigned long p) {
        const auto it = f.find(p);
        return it == f.end() ? 0U : it->second;
    };

    const bool odd_prime_diagonal = m == n && m % 2 == 1 && fm.size() == 1 && fm.begin()->second == 1;
    bool all_gaps = true;
    for (const auto& [p, e] : fm) {
        if (e == exponent(fn, p)) {
            all_gaps = false;
        }
    }
    if (odd_prime_diagonal || all_gaps) {
        return OrderVerdict::always_max;
    }
    const unsigned e2 = exponent(fm, 2);
    if (e2 >= 1 && e2 == exponent(fn, 2)) {
        return OrderVerdict::always_nonmax;
    }
    return OrderVerdict::mixed;
}

OrderReport scan_orders(unsigned m, unsigned n) {
    const auto pairs = admissible_pairs(m, n);
    if (pairs.empty()) {
        throw DomainError("no admissible parameters for (m, n) = (" + std::to_string(m) + ", " +
                          std::to_string(n) + ")");
    }
    OrderReport report;
    report.m = m;
    report.n = n;
    const unsigned l = std::lcm(m, n);
    bool any_max = false;
    bool any_below = false;
    for (const auto& [k1, k2] : pairs) {
        const unsigned ord = ord_pq(m, n, k1, k2);
        report.entries.push_back({k1, k2, ord});
        (ord == l ? any_max : any_below) = true;
    }
    report.verdict = !any_below ? OrderVerdict::always_max
                     : !any_max ? OrderVerdict::always_nonmax
                                : OrderVerdict::mixed;
    return report;
}

} // namespace qheis
