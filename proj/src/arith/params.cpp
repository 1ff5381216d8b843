#include "qheis/params.hpp"

#include "qheis/error.hpp"

#include <numeric>
#include <string>

namespace qheis {

const CycNumber& AlgebraParams::g_pow(long long e) const {
    const auto period = static_cast<long long>(l);
    return g_table[static_cast<std::size_t>(((e % period) + period) % period)];
}

bool is_admissible(unsigned m, unsigned n, unsigned k1, unsigned k2) {
    if (m == 0 || n == 0 || k1 >= m || k2 >= n) {
        return false;
    }
    if (std::gcd(k1, m) != 1 || std::gcd(k2, n) != 1) {
        return false;
    }
    const unsigned long g = std::gcd(m, n);
    const unsigned long l = static_cast<unsigned long>(m) / g * n;
    const unsigned long s1 = n / g;
    const unsigned long s2 = m / g;
    return (s1 * k1 + s2 * k2) % l != 0;
}

ParamsRef derive_params(unsigned m, unsigned n, unsigned k1, unsigned k2, unsigned conductor) {
    const std::string tag = "(m,n,k1,k2)=(" + std::to_string(m) + "," + std::to_string(n) + "," +
                            std::to_string(k1) + "," + std::to_string(k2) + ")";
    if (m == 0 || n == 0) {
        throw DomainError("m and n must be positive " + tag);
    }
    if (m == 1 && n == 1) {
        throw DomainError("m = n = 1 forces pq = 1 " + tag);
    }
    if (k1 >= m || k2 >= n) {
        throw DomainError("need 0 <= k1 < m and 0 <= k2 < n " + tag);
    }
    if (std::gcd(k1, m) != 1 || std::gcd(k2, n) != 1) {
        throw DomainError("need gcd(k1, m) = gcd(k2, n) = 1 " + tag);
    }
    const unsigned g = std::gcd(m, n);
    const unsigned long long l = static_cast<unsigned long long>(m) / g * n;
    if (l > kMaxConductor) {
        throw DomainError("lcm(m, n) exceeds the supported conductor range " + tag);
    }
    auto params = std::make_shared<AlgebraParams>();
    params->m = m;
    params->n = n;
    params->k1 = k1;
    params->k2 = k2;
    params->l = static_cast<unsigned>(l);
    params->s1 = n / g;
    params->s2 = m / g;
    if ((static_cast<unsigned long long>(params->s1) * k1 + static_cast<unsigned long long>(params->s2) * k2) % l ==
        0) {
        throw DomainError("s1*k1 + s2*k2 = 0 (mod l), i.e. pq = 1 " + tag);
    }
    params->conductor = conductor == 0 ? params->l : conductor;
    if (params->conductor % params->l != 0) {
        throw DomainError("conductor " + std::to_string(params->conductor) + " is not a multiple of l = " +
                          std::to_string(params->l));
    }
    const unsigned stride = params->conductor / params->l;
    params->g_table.reserve(params->l);
    for (unsigned e = 0; e < params->l; ++e) {
        params->g_table.push_back(zeta_power(params->conductor, static_cast<long long>(stride) * e));
    }
    params->p = params->g_pow(static_cast<long long>(params->s1) * k1);
    params->q = params->g_pow(static_cast<long long>(params->s2) * k2);
    params->p_inv = params->g_pow(-static_cast<long long>(params->s1) * k1);
    params->q_inv = params->g_pow(-static_cast<long long>(params->s2) * k2);

    if (order_of_unit(params->p) != m || order_of_unit(params->q) != n) {
        throw std::logic_error("materialised p, q do not have orders m, n " + tag);
    }
    return params;
}

} // namespace qheis
