#include "qheis/exactnum/cyclotomic.hpp"

#include "qheis/error.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qheis {

namespace {

using Complex = std::complex<long double>;

constexpr unsigned long long kMaxBranchCombinations = 5'000'000ULL;

long double to_long_double(const Rational& q) { return static_cast<long double>(q.get_d()); }

// Best rational approximation with bounded denominator, accepted only when it
// lands within tolerance.
std::optional<Rational> recognise_rational(long double x, long double tolerance) {
    constexpr long kMaxDenominator = 10'000'000;
    const long double target = x;
    BigInt h_prev = 1, h = static_cast<long>(std::floor(x));
    BigInt k_prev = 0, k = 1;
    long double frac = x - std::floor(x);
    for (int iter = 0; iter < 64; ++iter) {
        const long double approx = static_cast<long double>(h.get_d()) / static_cast<long double>(k.get_d());
        if (std::fabs(approx - target) <= tolerance) {
            Rational r(h, k);
            r.canonicalize();
            return r;
        }
        if (frac < 1e-30L) {
            break;
        }
        const long double inv = 1.0L / frac;
        const long a = static_cast<long>(std::floor(inv));
        frac = inv - std::floor(inv);
        BigInt h_next = a * h + h_prev;
        BigInt k_next = a * k + k_prev;
        if (k_next > kMaxDenominator) {
            break;
        }
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    return std::nullopt;
}

std::optional<CycNumber> rational_root(const CycNumber& a, unsigned r) {
    const Rational value = a.coeffs()[0];
    if (value < 0 && r % 2 == 0) {
        return std::nullopt;
    }
    BigInt num = abs(value.get_num());
    BigInt den = value.get_den();
    BigInt num_root, den_root;
    const bool num_exact = mpz_root(num_root.get_mpz_t(), num.get_mpz_t(), r) != 0;
    const bool den_exact = mpz_root(den_root.get_mpz_t(), den.get_mpz_t(), r) != 0;
    if (!num_exact || !den_exact) {
        return std::nullopt;
    }
    Rational root(value < 0 ? BigInt(-num_root) : num_root, den_root);
    root.canonicalize();
    return CycNumber(a.conductor(), root);
}

// Inverse of a square complex matrix by Gauss-Jordan with partial pivoting.
std::vector<std::vector<Complex>> invert(std::vector<std::vector<Complex>> m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Complex>> inv(n, std::vector<Complex>(n));
    for (std::size_t i = 0; i < n; ++i) {
        inv[i][i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row) {
            if (std::abs(m[row][col]) > std::abs(m[pivot][col])) {
                pivot = row;
            }
        }
        std::swap(m[col], m[pivot]);
        std::swap(inv[col], inv[pivot]);
        const Complex scale = 1.0L / m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col) {
                continue;
            }
            const Complex f = m[row][col];
            if (f == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                m[row][j] -= f * m[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace

std::optional<CycNumber> nth_root(const CycNumber& a, unsigned r) {
    if (r == 0) {
        throw std::invalid_argument("nth_root: r must be positive");
    }
    if (r == 1 || a.is_zero()) {
        return a;
    }
    const unsigned conductor = a.conductor();
    if (conductor <= 2) {
        return rational_root(a, r);
    }

    // Complex embeddings zeta |-> omega^u for u coprime to the conductor; the
    // ones with u > N/2 are conjugates of the ones below.
    std::vector<unsigned> units;
    for (unsigned u = 1; u < conductor; ++u) {
        if (std::gcd(u, conductor) == 1) {
            units.push_back(u);
        }
    }
    const std::size_t d = units.size();
    const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    auto omega_pow = [&](unsigned long long e) {
        const long double angle = two_pi * static_cast<long double>(e % conductor) / conductor;
        return Complex(std::cos(angle), std::sin(angle));
    };

    std::vector<std::vector<Complex>> vandermonde(d, std::vector<Complex>(d));
    std::vector<Complex> images(d);
    long double scale = 1.0L;
    for (std::size_t row = 0; row < d; ++row) {
        for (std::size_t i = 0; i < d; ++i) {
            vandermonde[row][i] = omega_pow(static_cast<unsigned long long>(units[row]) * i);
            images[row] += to_long_double(a.coeffs()[i]) * vandermonde[row][i];
        }
        scale = std::max(scale, std::abs(images[row]));
    }
    const auto inverse = invert(vandermonde);

    std::vector<std::size_t> representatives;
    std::vector<std::size_t> conjugate_of(d);
    for (std::size_t row = 0; row < d; ++row) {
        const unsigned u = units[row];
        if (2 * u < conductor) {
            representatives.push_back(row);
        }
        for (std::size_t other = 0; other < d; ++other) {
            if (units[other] == conductor - u) {
                conjugate_of[row] = other;
            }
        }
    }

    std::vector<Complex> principal(d);
    for (std::size_t row = 0; row < d; ++row) {
        const long double modulus = std::pow(std::abs(images[row]), 1.0L / r);
        const long double angle = std::arg(images[row]) / r;
        principal[row] = std::polar(modulus, angle);
    }
    const Complex branch_step = std::polar(1.0L, two_pi / r);

    // If Q(zeta_N) holds all r-th roots of unity, the branch at the first
    // embedding can be fixed without losing any root.
    const bool fix_first = std::lcm(2U, conductor) % r == 0;
    const std::size_t free_slots = representatives.size() - (fix_first ? 1 : 0);
    unsigned long long combinations = 1;
    for (std::size_t i = 0; i < free_slots; ++i) {
        combinations *= r;
        if (combinations > kMaxBranchCombinations) {
            throw DomainError("nth_root: branch search too large for conductor " + std::to_string(conductor));
        }
    }

    const long double root_scale = std::pow(scale, 1.0L / r);
    const long double tolerance = 1e-7L * std::max(1.0L, root_scale);
    std::vector<unsigned> branch(representatives.size(), 0);
    std::vector<Complex> values(d);
    for (unsigned long long combo = 0; combo < combinations; ++combo) {
        unsigned long long rest = combo;
        for (std::size_t slot = fix_first ? 1 : 0; slot < representatives.size(); ++slot) {
            branch[slot] = static_cast<unsigned>(rest % r);
            rest /= r;
        }
        for (std::size_t slot = 0; slot < representatives.size(); ++slot) {
            const std::size_t row = representatives[slot];
            values[row] = principal[row] * std::pow(branch_step, static_cast<int>(branch[slot]));
            values[conjugate_of[row]] = std::conj(values[row]);
        }
        std::vector<Rational> coeffs(d);
        bool plausible = true;
        for (std::size_t i = 0; i < d && plausible; ++i) {
            Complex c{};
            for (std::size_t row = 0; row < d; ++row) {
                c += inverse[i][row] * values[row];
            }
            if (std::fabs(c.imag()) > tolerance) {
                plausible = false;
                break;
            }
            auto rational = recognise_rational(c.real(), tolerance);
            if (!rational) {
                plausible = false;
                break;
            }
            coeffs[i] = *rational;
        }
        if (!plausible) {
            continue;
        }
        CycNumber candidate(conductor, coeffs);
        if (candidate.pow(r) == a) {
            return candidate;
        }
    }
    return std::nullopt;
}

} // namespace qheis
