// Prints one PASS/FAIL line per acceptance criterion and exits non-zero if any
// criterion fails. Usage: acceptance [golden-dir]

#include "../golden/golden.hpp"

#include "qheis/arith/lattice.hpp"
#include "qheis/error.hpp"
#include "qheis/linrep/modules.hpp"
#include "qheis/ncpoly/pbw.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace qheis;

namespace {

std::vector<ParamsRef> all_params(unsigned max_l) {
    std::vector<ParamsRef> out;
    for (unsigned m = 1; m <= max_l; ++m) {
        for (unsigned n = 1; n <= max_l; ++n) {
            if (std::lcm(m, n) > max_l) {
                continue;
            }
            for (const auto& [k1, k2] : admissible_pairs(m, n)) {
                out.push_back(derive_params(m, n, k1, k2));
            }
        }
    }
    return out;
}

std::string label(const AlgebraParams& P) {
    std::ostringstream s;
    s << "(" << P.m << "," << P.n << "," << P.k1 << "," << P.k2 << ")";
    return s.str();
}

// Each check returns an empty string on success, else the first failure.
using Check = std::function<std::string()>;

std::string criterion_pi_degree() {
    std::size_t count = 0;
    for (const auto& P : all_params(12)) {
        const auto report = pi_degree_snf(*P);
        if (report.pi_degree != P->l) {
            return "pi_degree_snf " + std::to_string(report.pi_degree) + " at " + label(*P);
        }
        ++count;
    }
    return count == 0 ? "no parameters" : "";
}

std::string criterion_center() {
    const unsigned cases[][4] = {{2, 3, 1, 1}, {4, 4, 1, 1}, {2, 4, 1, 1}, {1, 3, 0, 1}, {3, 1, 1, 0}};
    for (const auto& c : cases) {
        const auto P = derive_params(c[0], c[1], c[2], c[3]);
        const auto gens = center_generators(P);
        if (gens.size() != 5) {
            return "expected five generators at " + label(*P);
        }
        for (const auto& g : gens) {
            if (!is_central(g.value)) {
                return g.name + " not central at " + label(*P);
            }
        }
        if (is_central(PbwElement::generator(P, Generator::x)) || is_central(PbwElement::generator(P, Generator::y))) {
            return "a generator is central at " + label(*P);
        }
    }
    return "";
}

std::string criterion_theta_powers() {
    for (const auto& P : all_params(12)) {
        const PbwElement th = theta(P);
        PbwElement acc = PbwElement::scalar(P, P->one());
        const CycNumber d = P->q - P->p_inv;
        for (unsigned k = 1; k <= 6; ++k) {
            acc = product(acc, th);
            const CycNumber lead = d.pow(k) * P->q_pow(static_cast<long long>(k) * (k - 1) / 2);
            const auto& t = acc.terms();
            const auto top = t.find(Monomial{0, k, k});
            const CycNumber got = top == t.end() ? P->zero() : top->second;
            if (got != lead) {
                return "leading coefficient of theta^" + std::to_string(k) + " at " + label(*P);
            }
            const auto bottom = t.find(Monomial{k, 0, 0});
            if (bottom == t.end() || !bottom->second.is_one()) {
                return "z^k term of theta^" + std::to_string(k) + " at " + label(*P);
            }
        }
    }
    for (unsigned n : {2u, 3u, 4u}) {
        const auto P = derive_params(1, n, 0, 1);
        const PbwElement lhs = power(theta(P), n);
        PbwElement rhs = PbwElement::monomial(P, Monomial{0, n, n},
                                              (P->q - P->one()).pow(n) * P->q_pow(static_cast<long long>(n) * (n - 1) / 2));
        rhs.add_term(Monomial{n, 0, 0}, P->one());
        if (lhs != rhs) {
            return "theta^n closed form at p = 1, n = " + std::to_string(n);
        }
    }
    return "";
}

std::vector<CycNumber> diag(const FieldMatrix& M) {
    std::vector<CycNumber> out;
    for (std::size_t i = 0; i < M.rows(); ++i) {
        out.push_back(M(i, i));
    }
    return out;
}

std::string criterion_modules() {
    for (const auto& P : all_params(12)) {
        const CycNumber samples[3][3] = {{P->scalar(2), P->scalar(3), P->scalar(5)},
                                         {P->g_pow(1) + P->scalar(2), P->g_pow(2) * Rational(3, 2), P->scalar(-7)},
                                         {P->one(), P->g_pow(1) - P->scalar(4), P->g_pow(3) + P->scalar(2)}};
        for (const auto& s : samples) {
            const MatrixRep v1 = build_v1(P, s[0], s[1], s[2]);
            const MatrixRep v2 = build_v2(P, s[0], s[1]);
            const MatrixRep v3 = build_v3(P, s[1]);
            for (const MatrixRep* r : {&v1, &v2, &v3}) {
                if (!verify_relations(*r).ok) {
                    return "relations fail at " + label(*P);
                }
                const FieldMatrix th = theta_matrix(*r);
                if (th != FieldMatrix::diagonal(diag(th))) {
                    return "theta not diagonal at " + label(*P);
                }
            }
            const auto t1 = diag(theta_matrix(v1));
            const auto t2 = diag(theta_matrix(v2));
            const auto t3 = diag(theta_matrix(v3));
            for (std::size_t k = 0; k < t1.size(); ++k) {
                if (t1[k] != P->q_pow(-static_cast<long long>(k)) * s[2]) {
                    return "V1 theta action at " + label(*P);
                }
            }
            for (std::size_t k = 0; k < t2.size(); ++k) {
                if (t2[k] != s[1] * P->q_pow(static_cast<long long>(k))) {
                    return "V2 theta action at " + label(*P);
                }
            }
            for (std::size_t k = 0; k < t3.size(); ++k) {
                if (t3[k] != P->q_pow(static_cast<long long>(k)) * s[1]) {
                    return "V3 theta action at " + label(*P);
                }
            }
        }
    }
    return "";
}

std::string criterion_simplicity() {
    for (const auto& P : all_params(8)) {
        const CycNumber mu = P->g_pow(1) + P->scalar(2);
        const CycNumber lambda = P->scalar(3);
        const CycNumber gamma = P->scalar(-7);
        const unsigned bound = pi_degree(P->m, P->n);
        const unsigned ord = ord_pq(*P);
        const MatrixRep v1 = build_v1(P, mu, lambda, gamma);
        const MatrixRep v2 = build_v2(P, mu, lambda);
        const MatrixRep v3 = build_v3(P, lambda);
        if (v1.d != P->l || v2.d != P->l || v3.d != ord) {
            return "dimensions at " + label(*P);
        }
        if (!is_simple(v1) || !is_simple(v2) || !is_simple(v3)) {
            return "not simple at " + label(*P);
        }
        const MatrixRep qz = build_qplane(P, QPlaneMode::z_torsion, mu, lambda);
        const MatrixRep qt = build_qplane(P, QPlaneMode::theta_torsion, mu, lambda);
        for (const MatrixRep* r : {&v1, &v2, &v3, &qz, &qt}) {
            if (is_simple(*r) && r->d > bound) {
                return "Kaplansky bound exceeded at " + label(*P);
            }
        }
        if (v1.d != bound) {
            return "V1 does not attain the PI degree at " + label(*P);
        }
    }
    return "";
}

bool intertwines(const MatrixRep& a, const MatrixRep& b, const FieldMatrix& P) {
    return !P.is_zero() && row_reduce(P).rank == P.rows() && a.Mx * P == P * b.Mx && a.My * P == P * b.My &&
           a.Mz * P == P * b.Mz;
}

std::string criterion_isomorphism() {
    struct Pair {
        ParamsRef P;
        ModuleDescriptor a, b;
    };
    const auto A = derive_params(2, 3, 1, 1);
    const auto B = derive_params(4, 4, 1, 1);
    const auto desc = [](ModuleKind k, std::optional<CycNumber> mu, std::optional<CycNumber> lambda,
                         std::optional<CycNumber> gamma = std::nullopt) {
        return ModuleDescriptor{k, std::move(mu), std::move(lambda), std::move(gamma)};
    };
    using K = ModuleKind;
    const std::vector<Pair> positive = {
        {A, desc(K::V1, A->scalar(2), A->scalar(3), A->scalar(5)), desc(K::V1, A->scalar(2) * A->g_pow(1), A->scalar(3), A->scalar(5))},
        {A, desc(K::V1, A->scalar(2), A->scalar(3), A->scalar(5)), desc(K::V1, A->scalar(2), A->p * A->scalar(3), A->q_inv * A->scalar(5))},
        {B, desc(K::V1, B->scalar(1), B->scalar(2), B->scalar(7)), desc(K::V1, -B->scalar(1), B->p.pow(3) * B->scalar(2), B->q_inv.pow(3) * B->scalar(7))},
        {B, desc(K::V2, B->scalar(2), B->scalar(3)), desc(K::V2, B->scalar(2) * B->g_pow(1), B->scalar(3))},
        {B, desc(K::V2, B->scalar(2), B->scalar(3)), desc(K::V2, B->scalar(2), -B->scalar(3))},
        {A, desc(K::V2, A->scalar(5), A->g_pow(1)), desc(K::V2, A->scalar(5) * A->g_pow(2), A->g_pow(1))},
        {A, desc(K::V3, std::nullopt, A->scalar(3)), desc(K::V3, std::nullopt, A->scalar(3))},
        {B, desc(K::V3, std::nullopt, B->g_pow(1)), desc(K::V3, std::nullopt, B->g_pow(1))},
        {A, desc(K::V3, std::nullopt, A->g_pow(1) - A->scalar(2)), desc(K::V3, std::nullopt, A->g_pow(1) - A->scalar(2))},
    };
    const std::vector<Pair> negative = {
        {A, desc(K::V1, A->scalar(2), A->scalar(3), A->scalar(5)), desc(K::V1, A->scalar(3), A->scalar(3), A->scalar(5))},
        {A, desc(K::V1, A->scalar(2), A->scalar(3), A->scalar(5)), desc(K::V1, A->scalar(2), A->scalar(3), A->p * A->scalar(5))},
        {B, desc(K::V1, B->scalar(1), B->scalar(2), B->scalar(7)), desc(K::V1, B->scalar(1), B->scalar(2), B->scalar(8))},
        {B, desc(K::V2, B->scalar(2), B->scalar(3)), desc(K::V2, B->scalar(2), B->g_pow(1) * B->scalar(3))},
        {A, desc(K::V2, A->scalar(2), A->scalar(3)), desc(K::V2, A->scalar(2), -A->scalar(3))},
        {A, desc(K::V2, A->scalar(2), A->scalar(3)), desc(K::V2, A->scalar(3), A->scalar(3))},
        {A, desc(K::V3, std::nullopt, A->scalar(3)), desc(K::V3, std::nullopt, A->scalar(4))},
        {A, desc(K::V3, std::nullopt, A->scalar(3)), desc(K::V3, std::nullopt, A->p * A->scalar(3))},
        {B, desc(K::V3, std::nullopt, B->g_pow(1)), desc(K::V3, std::nullopt, B->q * B->g_pow(1))},
    };
    for (const auto& c : positive) {
        const IsoResult r = iso_test(c.a.kind, c.a, c.b, *c.P);
        if (!r.isomorphic) {
            return "positive " + to_string(c.a.kind) + " case rejected at " + label(*c.P);
        }
        if (!intertwines(build(c.P, c.a), build(c.P, c.b), intertwiner(c.a.kind, c.a, c.b, r.witness, c.P))) {
            return "intertwiner check for " + to_string(c.a.kind) + " at " + label(*c.P);
        }
    }
    for (const auto& c : negative) {
        if (iso_test(c.a.kind, c.a, c.b, *c.P).isomorphic) {
            return "negative " + to_string(c.a.kind) + " case accepted at " + label(*c.P);
        }
        if (!intertwiner_space(build(c.P, c.a), build(c.P, c.b)).empty()) {
            return "nonzero intertwiner for a negative " + to_string(c.a.kind) + " case at " + label(*c.P);
        }
    }
    return "";
}

std::string criterion_orders() {
    if (classify_pair(3, 3) != OrderVerdict::always_max || classify_pair(4, 4) != OrderVerdict::always_nonmax ||
        classify_pair(9, 9) != OrderVerdict::mixed) {
        return "anchor verdicts";
    }
    for (unsigned m = 1; m <= 24; ++m) {
        for (unsigned n = 1; n <= 24; ++n) {
            if (admissible_pairs(m, n).empty()) {
                continue;
            }
            const OrderReport scan = scan_orders(m, n);
            // independent verdict from the raw table
            bool any_max = false, any_small = false;
            const unsigned l = std::lcm(m, n);
            const unsigned s1 = n / std::gcd(m, n), s2 = m / std::gcd(m, n);
            for (const auto& e : scan.entries) {
                // order of pq = g^(s1 k1 + s2 k2) by stepping through its powers
                const unsigned e0 = (s1 * e.k1 + s2 * e.k2) % l;
                unsigned t = 1;
                while ((t * e0) % l != 0) {
                    ++t;
                }
                if (t != e.ord) {
                    return "scan entry order at (" + std::to_string(m) + "," + std::to_string(n) + ")";
                }
                (e.ord == std::lcm(m, n) ? any_max : any_small) = true;
            }
            const OrderVerdict brute = !any_small ? OrderVerdict::always_max
                                                   : (!any_max ? OrderVerdict::always_nonmax : OrderVerdict::mixed);
            if (classify_pair(m, n) != brute || scan.verdict != brute) {
                return "verdict at (" + std::to_string(m) + "," + std::to_string(n) + ")";
            }
        }
    }
    return "";
}

std::string criterion_ord_pq() {
    for (const auto& P : all_params(24)) {
        if (ord_pq(*P) != order_of_unit(P->p * P->q)) {
            return "mismatch at " + label(*P);
        }
    }
    return "";
}

PbwElement random_element(const ParamsRef& P, std::mt19937& rng) {
    std::uniform_int_distribution<unsigned> deg(0, 3), count(1, 3);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<long long> gp(0, P->l - 1);
    PbwElement out(P);
    const unsigned terms = count(rng);
    for (unsigned t = 0; t < terms; ++t) {
        int c = coeff(rng);
        if (c == 0) {
            c = 1;
        }
        out = out + PbwElement::monomial(P, Monomial{deg(rng), deg(rng), deg(rng)}, P->g_pow(gp(rng)) * P->scalar(c));
    }
    return out;
}

std::string criterion_identities() {
    const std::vector<ParamsRef> params = {derive_params(2, 3, 1, 1), derive_params(4, 4, 1, 1),
                                           derive_params(2, 4, 1, 1), derive_params(1, 3, 0, 1),
                                           derive_params(6, 4, 5, 3), derive_params(3, 3, 1, 1)};
    for (const auto& P : params) {
        const PbwElement x = PbwElement::generator(P, Generator::x);
        const PbwElement y = PbwElement::generator(P, Generator::y);
        const PbwElement z = PbwElement::generator(P, Generator::z);
        for (unsigned k = 1; k <= 10; ++k) {
            const PbwElement xk = power(x, k), yk = power(y, k);
            const PbwElement scal_qk = PbwElement::scalar(P, P->q_pow(k));
            const PbwElement br = PbwElement::scalar(P, pq_number(*P, k));
            if (product(y, xk) != scal_qk * product(xk, y) + br * product(power(x, k - 1), z)) {
                return "y x^k at " + label(*P) + " k=" + std::to_string(k);
            }
            if (product(yk, x) != scal_qk * product(x, yk) + br * product(z, power(y, k - 1))) {
                return "y^k x at " + label(*P) + " k=" + std::to_string(k);
            }
            if (product_by_rewriting(y, xk) != product(y, xk) || product_by_rewriting(yk, x) != product(yk, x)) {
                return "rewriting disagrees on lemma products at " + label(*P);
            }
        }
    }
    std::mt19937 rng(20240611);
    for (unsigned trial = 0; trial < 100; ++trial) {
        const auto& P = params[trial % params.size()];
        const PbwElement a = random_element(P, rng), b = random_element(P, rng), c = random_element(P, rng);
        if (product(product(a, b), c) != product(a, product(b, c))) {
            return "associativity at trial " + std::to_string(trial);
        }
    }
    for (unsigned trial = 0; trial < 100; ++trial) {
        const auto& P = params[trial % params.size()];
        const PbwElement a = random_element(P, rng), b = random_element(P, rng);
        if (product(a, b) != product_by_rewriting(a, b)) {
            return "closed form vs rewriting at trial " + std::to_string(trial);
        }
    }
    return "";
}

std::string criterion_round_trip() {
    const std::vector<ParamsRef> params = {derive_params(2, 3, 1, 1), derive_params(4, 4, 1, 1),
                                           derive_params(3, 2, 2, 1), derive_params(2, 4, 1, 3),
                                           derive_params(6, 3, 1, 2)};
    using K = ModuleKind;
    for (const K kind : {K::V1, K::V2, K::V3, K::QPlaneZ, K::QPlaneTheta}) {
        for (std::size_t i = 0; i < params.size(); ++i) {
            const auto& P = params[i];
            const CycNumber mu = P->g_pow(static_cast<long long>(i)) * P->scalar(static_cast<long>(i) + 2);
            const CycNumber lambda = P->g_pow(1) + P->scalar(static_cast<long>(i) + 1);
            const CycNumber gamma = P->scalar(3) - P->g_pow(2);
            ModuleDescriptor d{kind, mu, lambda, std::nullopt};
            if (kind == K::V1) {
                d.gamma = gamma;
            }
            if (kind == K::V3) {
                d.mu.reset();
            }
            const MatrixRep rep = build(P, d);
            const ModuleDescriptor found = classify(rep);
            if (found.kind != kind) {
                return "kind " + to_string(found.kind) + " for " + to_string(kind) + " at " + label(*P);
            }
            const IsoResult r = iso_test(kind, found, d, *P);
            if (!r.isomorphic) {
                return "non-isomorphic " + to_string(kind) + " at " + label(*P);
            }
            if (!intertwines(build(P, found), rep, intertwiner(kind, found, d, r.witness, P))) {
                return "round-trip intertwiner for " + to_string(kind) + " at " + label(*P);
            }
        }
    }
    return "";
}

std::string golden_dir;

std::string criterion_golden() {
    std::size_t count = 0;
    const auto bad = golden::check_all(golden_dir, &count);
    if (count != 20) {
        return std::to_string(count) + " golden cases, expected 20";
    }
    return bad.empty() ? "" : bad.front().name + ": " + bad.front().why;
}

} // namespace

int main(int argc, char** argv) {
    golden_dir = argc > 1 ? argv[1] : QHEIS_GOLDEN_DIR;
    const std::vector<std::pair<std::string, Check>> criteria = {
        {"pi degree equals lcm(m,n) for l <= 12", criterion_pi_degree},
        {"center generators are central", criterion_center},
        {"theta power identities", criterion_theta_powers},
        {"module constructions and theta actions", criterion_modules},
        {"simplicity and dimension bounds", criterion_simplicity},
        {"isomorphism criteria", criterion_isomorphism},
        {"order classification vs scan", criterion_orders},
        {"ord(pq) formula vs multiplicative order", criterion_ord_pq},
        {"identity suite", criterion_identities},
        {"classification round trip", criterion_round_trip},
        {"CLI golden files", criterion_golden},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string why;
        try {
            why = criteria[i].second();
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (why.empty() ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first;
        std::cout << " (" << std::fixed;
        std::cout.precision(2);
        std::cout << secs << "s)";
        if (!why.empty()) {
            std::cout << ": " << why;
            ++failures;
        }
        std::cout << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
