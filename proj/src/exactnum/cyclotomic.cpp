#include "qheis/exactnum/cyclotomic.hpp"

#include "qheis/error.hpp"

#include <array>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qheis {

namespace detail {

struct CyclotomicField {
    unsigned conductor = 1;
    unsigned degree = 1;
    std::vector<BigInt> phi;                    // monic, ascending, size degree + 1
    std::vector<std::vector<long>> zeta_powers; // zeta^e mod Phi for e in [0, conductor)
};

} // namespace detail

unsigned euler_phi(unsigned n) {
    if (n == 0) {
        throw std::invalid_argument("euler_phi: n must be positive");
    }
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) {
                n /= p;
            }
            result -= result / p;
        }
    }
    if (n > 1) {
        result -= result / n;
    }
    return result;
}

namespace {

using IntPoly = std::vector<BigInt>;

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
    IntPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Exact division of a by a monic divisor.
IntPoly divide_exact(IntPoly a, const IntPoly& monic) {
    const std::size_t db = monic.size() - 1;
    IntPoly quotient(a.size() - db, 0);
    for (std::size_t k = a.size(); k-- > db;) {
        const BigInt lead = a[k];
        quotient[k - db] = lead;
        if (lead == 0) {
            continue;
        }
        for (std::size_t j = 0; j <= db; ++j) {
            a[k - db + j] -= lead * monic[j];
        }
    }
    for (std::size_t i = 0; i < db; ++i) {
        if (a[i] != 0) {
            throw std::logic_error("cyclotomic division left a remainder");
        }
    }
    return quotient;
}

std::unique_ptr<detail::CyclotomicField> make_field(unsigned n) {
    auto field = std::make_unique<detail::CyclotomicField>();
    field->conductor = n;
    field->phi = cyclotomic_polynomial(n);
    field->degree = static_cast<unsigned>(field->phi.size() - 1);
    const unsigned d = field->degree;

    field->zeta_powers.reserve(n);
    std::vector<BigInt> current(d, 0);
    current[0] = 1;
    for (unsigned e = 0; e < n; ++e) {
        std::vector<long> row(d);
        for (unsigned i = 0; i < d; ++i) {
            if (!current[i].fits_slong_p()) {
                throw std::overflow_error("cyclotomic reduction table overflow");
            }
            row[i] = current[i].get_si();
        }
        field->zeta_powers.push_back(std::move(row));
        // multiply by t and fold t^d back using the monic relation
        const BigInt top = current[d - 1];
        for (unsigned i = d - 1; i > 0; --i) {
            current[i] = current[i - 1] - top * field->phi[i];
        }
        current[0] = -top * field->phi[0];
    }
    return field;
}

struct FieldCache {
    std::mutex mutex;
    std::map<unsigned, std::unique_ptr<detail::CyclotomicField>> owned;
    std::array<std::atomic<const detail::CyclotomicField*>, kMaxConductor + 1> fast{};
};

FieldCache& field_cache() {
    static FieldCache cache;
    return cache;
}

std::mutex& poly_cache_mutex() {
    static std::mutex m;
    return m;
}

} // namespace

std::vector<BigInt> cyclotomic_polynomial(unsigned n) {
    if (n == 0) {
        throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    }
    static std::map<unsigned, IntPoly> cache;
    {
        std::lock_guard lock(poly_cache_mutex());
        if (auto it = cache.find(n); it != cache.end()) {
            return it->second;
        }
    }
    IntPoly numerator(n + 1, 0);
    numerator[0] = -1;
    numerator[n] = 1;
    IntPoly product{1};
    for (unsigned d = 1; d < n; ++d) {
        if (n % d == 0) {
            product = multiply(product, cyclotomic_polynomial(d));
        }
    }
    IntPoly result = divide_exact(std::move(numerator), product);
    std::lock_guard lock(poly_cache_mutex());
    cache.emplace(n, result);
    return result;
}

namespace detail {

const CyclotomicField& field_for(unsigned conductor) {
    if (conductor == 0 || conductor > kMaxConductor) {
        throw std::invalid_argument("conductor " + std::to_string(conductor) + " outside [1, " +
                                    std::to_string(kMaxConductor) + "]");
    }
    auto& cache = field_cache();
    if (const auto* hit = cache.fast[conductor].load(std::memory_order_acquire)) {
        return *hit;
    }
    std::lock_guard lock(cache.mutex);
    auto& slot = cache.owned[conductor];
    if (!slot) {
        slot = make_field(conductor);
        cache.fast[conductor].store(slot.get(), std::memory_order_release);
    }
    return *slot;
}

} // namespace detail

namespace {

const detail::CyclotomicField& rational_field() {
    static const detail::CyclotomicField& field = detail::field_for(1);
    return field;
}

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

RatPoly poly_sub(const RatPoly& a, const RatPoly& b) {
    RatPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] += a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[i] -= b[i];
    }
    trim(out);
    return out;
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    RatPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    trim(out);
    return out;
}

// a = q * b + r with deg r < deg b; b nonzero and trimmed.
std::pair<RatPoly, RatPoly> poly_divmod(RatPoly a, const RatPoly& b) {
    trim(a);
    if (a.size() < b.size()) {
        return {RatPoly{}, a};
    }
    const std::size_t db = b.size() - 1;
    RatPoly q(a.size() - db);
    const Rational lead_inv = 1 / b.back();
    for (std::size_t k = a.size() - 1;; --k) {
        const Rational factor = a[k] * lead_inv;
        q[k - db] = factor;
        if (factor != 0) {
            for (std::size_t j = 0; j <= db; ++j) {
                a[k - db + j] -= factor * b[j];
            }
        }
        if (k == db) {
            break;
        }
    }
    trim(q);
    trim(a);
    return {q, a};
}

} // namespace

CycNumber::CycNumber() : field_(&rational_field()), coeffs_(1) {}

CycNumber::CycNumber(unsigned conductor)
    : field_(&detail::field_for(conductor)), coeffs_(field_->degree) {}

CycNumber::CycNumber(unsigned conductor, const Rational& value) : CycNumber(conductor) {
    coeffs_[0] = value;
}

CycNumber::CycNumber(unsigned conductor, const std::vector<Rational>& powers) : CycNumber(conductor) {
    const unsigned d = field_->degree;
    for (std::size_t e = 0; e < powers.size(); ++e) {
        if (powers[e] == 0) {
            continue;
        }
        if (e < d) {
            coeffs_[e] += powers[e];
            continue;
        }
        const auto& row = field_->zeta_powers[e % field_->conductor];
        for (unsigned i = 0; i < d; ++i) {
            if (row[i] != 0) {
                coeffs_[i] += powers[e] * row[i];
            }
        }
    }
}

unsigned CycNumber::conductor() const noexcept { return field_->conductor; }

bool CycNumber::is_zero() const {
    for (const auto& c : coeffs_) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

bool CycNumber::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) {
            return false;
        }
    }
    return true;
}

bool CycNumber::is_one() const { return coeffs_[0] == 1 && is_rational(); }

CycNumber CycNumber::operator-() const {
    CycNumber out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

namespace {

void require_same_field(const detail::CyclotomicField* a, const detail::CyclotomicField* b) {
    if (a != b) {
        throw std::invalid_argument("conductor mismatch: " + std::to_string(a->conductor) + " vs " +
                                    std::to_string(b->conductor));
    }
}

} // namespace

CycNumber& CycNumber::operator+=(const CycNumber& other) {
    require_same_field(field_, other.field_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (other.coeffs_[i] != 0) {
            coeffs_[i] += other.coeffs_[i];
        }
    }
    return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& other) {
    require_same_field(field_, other.field_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (other.coeffs_[i] != 0) {
            coeffs_[i] -= other.coeffs_[i];
        }
    }
    return *this;
}

CycNumber& CycNumber::operator*=(const Rational& factor) {
    if (factor == 0) {
        for (auto& c : coeffs_) {
            c = 0;
        }
        return *this;
    }
    for (auto& c : coeffs_) {
        if (c != 0) {
            c *= factor;
        }
    }
    return *this;
}

CycNumber& CycNumber::operator*=(const CycNumber& other) {
    *this = *this * other;
    return *this;
}

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
    require_same_field(a.field_, b.field_);
    if (b.is_rational()) {
        return a * b.coeffs_[0];
    }
    if (a.is_rational()) {
        return b * a.coeffs_[0];
    }
    const unsigned d = a.field_->degree;
    std::vector<Rational> product(2 * d - 1);
    for (unsigned i = 0; i < d; ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (unsigned j = 0; j < d; ++j) {
            if (b.coeffs_[j] != 0) {
                product[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    return CycNumber(a.field_->conductor, product);
}

bool operator==(const CycNumber& a, const CycNumber& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

CycNumber CycNumber::inverse() const {
    if (is_zero()) {
        throw DomainError("inverse of zero");
    }
    if (is_rational()) {
        return CycNumber(conductor(), 1 / coeffs_[0]);
    }
    // Extended Euclid in Q[t]: track s with s * a == r (mod Phi).
    RatPoly r0(field_->phi.begin(), field_->phi.end());
    RatPoly r1 = coeffs_;
    trim(r1);
    RatPoly s0{};
    RatPoly s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(r0, r1);
        RatPoly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) {
        throw std::logic_error("cyclotomic polynomial is not coprime to a nonzero element");
    }
    const Rational scale = 1 / r0[0];
    for (auto& c : s0) {
        c *= scale;
    }
    return CycNumber(conductor(), s0);
}

CycNumber CycNumber::pow(long long exponent) const {
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    CycNumber result(conductor(), Rational(1));
    CycNumber base = *this;
    auto e = static_cast<unsigned long long>(exponent);
    while (e != 0) {
        if (e & 1U) {
            result *= base;
        }
        e >>= 1U;
        if (e != 0) {
            base *= base;
        }
    }
    return result;
}

CycNumber CycNumber::embed(unsigned target) const {
    if (target == 0 || target % conductor() != 0) {
        throw std::invalid_argument("cannot embed Q(zeta_" + std::to_string(conductor()) + ") into Q(zeta_" +
                                    std::to_string(target) + ")");
    }
    if (target == conductor()) {
        return *this;
    }
    const unsigned stride = target / conductor();
    std::vector<Rational> powers(static_cast<std::size_t>(stride) * (coeffs_.size() - 1) + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        powers[i * stride] = coeffs_[i];
    }
    return CycNumber(target, powers);
}

std::string CycNumber::to_string() const {
    std::string out;
    const std::string zeta = "zeta" + std::to_string(conductor());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) {
            continue;
        }
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        if (i == 0) {
            out += qheis::to_string(magnitude);
            continue;
        }
        if (magnitude != 1) {
            out += qheis::to_string(magnitude) + "*";
        }
        out += zeta;
        if (i > 1) {
            out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

CycNumber zeta_power(unsigned conductor, long long j) {
    const auto& field = detail::field_for(conductor);
    const auto n = static_cast<long long>(conductor);
    const auto e = static_cast<std::size_t>(((j % n) + n) % n);
    std::vector<Rational> coeffs(field.zeta_powers[e].begin(), field.zeta_powers[e].end());
    return CycNumber(conductor, coeffs);
}

std::optional<unsigned> order_of_unit(const CycNumber& a) {
    if (a.is_zero()) {
        throw DomainError("order_of_unit: zero has no multiplicative order");
    }
    const unsigned bound = std::lcm(2U, a.conductor());
    CycNumber power = a;
    for (unsigned k = 1; k <= bound; ++k) {
        if (power.is_one()) {
            return k;
        }
        power *= a;
    }
    return std::nullopt;
}

} // namespace qheis
