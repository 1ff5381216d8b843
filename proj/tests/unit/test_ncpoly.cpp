#include "qheis/arith/lattice.hpp"
#include "qheis/error.hpp"
#include "qheis/linrep/modules.hpp"
#include "qheis/ncpoly/pbw.hpp"

#include <doctest.h>

#include <random>

using namespace qheis;

namespace {

PbwElement mono(const ParamsRef& P, unsigned i, unsigned j, unsigned k) { return PbwElement::monomial(P, {i, j, k}); }

PbwElement mono(const ParamsRef& P, unsigned i, unsigned j, unsigned k, const CycNumber& c) {
    return PbwElement::monomial(P, {i, j, k}, c);
}

PbwElement random_element(std::mt19937& rng, const ParamsRef& P, unsigned max_exp = 3) {
    std::uniform_int_distribution<unsigned> e(0, max_exp);
    std::uniform_int_distribution<unsigned> count(1, 3);
    std::uniform_int_distribution<long> c(-4, 4);
    std::uniform_int_distribution<long> gp(0, P->l - 1);
    PbwElement out(P);
    const unsigned terms = count(rng);
    for (unsigned t = 0; t < terms; ++t) {
        out.add_term({e(rng), e(rng), e(rng)}, P->g_pow(gp(rng)) * Rational(c(rng)));
    }
    return out;
}

// Action of a PBW element on a module: z^i x^j y^k -> Mz^i Mx^j My^k.
FieldMatrix act(const MatrixRep& rep, const PbwElement& a) {
    FieldMatrix out(rep.d, rep.d, rep.params->conductor);
    for (const auto& [m, c] : a.terms()) {
        out += c * (rep.Mz.pow(m.i) * rep.Mx.pow(m.j) * rep.My.pow(m.k));
    }
    return out;
}

const std::vector<std::array<unsigned, 4>> kSample = {
    {2, 3, 1, 1}, {4, 4, 1, 1}, {2, 4, 1, 1}, {1, 3, 0, 1}, {3, 1, 1, 0}, {6, 4, 5, 3}, {3, 3, 1, 1}, {1, 5, 0, 2}};

} // namespace

TEST_CASE("defining relations and lemma anchors") {
    const auto P = derive_params(2, 3, 1, 1);
    const auto x = mono(P, 0, 1, 0);
    const auto y = mono(P, 0, 0, 1);
    const auto z = mono(P, 1, 0, 0);

    CHECK(product(y, x) == mono(P, 0, 1, 1, P->q) + z);
    CHECK(product(x, z) == mono(P, 1, 1, 0, P->p));
    CHECK(product(z, x) == mono(P, 1, 1, 0, P->one()));
    CHECK(product(y, z) == mono(P, 1, 0, 1, P->p_inv));

    // y x^2 = q^2 x^2 y + [2] x z = q^2 x^2 y + [2] p z x
    const CycNumber two = P->q + P->p_inv;
    CHECK(product(y, mono(P, 0, 2, 0)) == mono(P, 0, 2, 1, P->q_pow(2)) + mono(P, 1, 1, 0, two * P->p));
    // y^2 x = q^2 x y^2 + [2] z y
    CHECK(product(mono(P, 0, 0, 2), x) == mono(P, 0, 1, 2, P->q_pow(2)) + mono(P, 1, 0, 1, two));
}

TEST_CASE("lemma identities up to k = 10") {
    for (const auto& s : kSample) {
        const auto P = derive_params(s[0], s[1], s[2], s[3]);
        const auto x = mono(P, 0, 1, 0);
        const auto y = mono(P, 0, 0, 1);
        for (unsigned k = 1; k <= 10; ++k) {
            const CycNumber bracket = pq_number(*P, k);
            // x^(k-1) z = p^(k-1) z x^(k-1)
            CHECK(product(y, mono(P, 0, k, 0)) ==
                  mono(P, 0, k, 1, P->q_pow(k)) + mono(P, 1, k - 1, 0, bracket * P->p_pow(k - 1)));
            CHECK(product(mono(P, 0, 0, k), x) == mono(P, 0, 1, k, P->q_pow(k)) + mono(P, 1, 0, k - 1, bracket));
        }
    }
}

TEST_CASE("(p,q)-numbers") {
    const auto P = derive_params(2, 4, 1, 1);
    CHECK(pq_number(*P, 0).is_zero());
    CHECK(pq_number(*P, 1).is_one());
    CHECK(pq_number(*P, 4).is_zero());
    for (const auto& s : kSample) {
        const auto Q = derive_params(s[0], s[1], s[2], s[3]);
        const unsigned ord = ord_pq(*Q);
        for (unsigned k = 0; k <= 30; ++k) {
            const auto quotient = pq_number_quotient(*Q, k);
            if (quotient) {
                CHECK(*quotient == pq_number(*Q, k));
            }
            CHECK(pq_number(*Q, k).is_zero() == (k % ord == 0));
        }
    }
}

TEST_CASE("closed form agrees with rewriting") {
    std::mt19937 rng(99);
    int pairs = 0;
    for (const auto& s : kSample) {
        const auto P = derive_params(s[0], s[1], s[2], s[3]);
        for (int t = 0; t < 13; ++t, ++pairs) {
            const auto a = random_element(rng, P);
            const auto b = random_element(rng, P);
            CHECK(product(a, b) == product_by_rewriting(a, b));
        }
    }
    CHECK(pairs >= 100);
}

TEST_CASE("products act correctly on a module") {
    std::mt19937 rng(4);
    for (const auto& s : kSample) {
        const auto P = derive_params(s[0], s[1], s[2], s[3]);
        const MatrixRep rep = build_v1(P, P->scalar(2), P->scalar(3), P->g_pow(1) + P->one());
        for (int t = 0; t < 4; ++t) {
            const auto a = random_element(rng, P, 2);
            const auto b = random_element(rng, P, 2);
            CHECK(act(rep, product(a, b)) == act(rep, a) * act(rep, b));
        }
    }
}

TEST_CASE("associativity") {
    std::mt19937 rng(2024);
    for (int t = 0; t < 100; ++t) {
        const auto& s = kSample[static_cast<std::size_t>(t) % kSample.size()];
        const auto P = derive_params(s[0], s[1], s[2], s[3]);
        const auto a = random_element(rng, P, 2);
        const auto b = random_element(rng, P, 2);
        const auto c = random_element(rng, P, 2);
        CHECK(product(product(a, b), c) == product(a, product(b, c)));
    }
}

TEST_CASE("theta") {
    for (const auto& s : kSample) {
        const auto P = derive_params(s[0], s[1], s[2], s[3]);
        const auto x = mono(P, 0, 1, 0);
        const auto y = mono(P, 0, 0, 1);
        const auto z = mono(P, 1, 0, 0);
        const auto th = theta(P);
        CHECK(th == product(y, x) - product(x, y) * P->p_inv);
        CHECK(th == mono(P, 0, 1, 1, P->q - P->p_inv) + z);
        const CycNumber pq_inv = P->p_inv * P->q_inv;
        CHECK(th == product(y, x) * (P->one() - pq_inv) + z * pq_inv);

        CHECK(product(th, x) == product(x, th) * P->q);
        CHECK(product(th, y) == product(y, th) * P->q_inv);
        CHECK(product(th, z) == product(z, th));

        CHECK(commutation_twist(th, Generator::x) == P->q_inv);
        CHECK(commutation_twist(th, Generator::y) == P->q);
        CHECK(commutation_twist(th, Generator::z) == P->one());
        CHECK(commutation_twist(x, Generator::x) == P->one());
        CHECK(commutation_twist(z, Generator::x) == P->p);
        const auto twist = commutation_twist(x + y, Generator::z);
        CHECK(twist.has_value() == (P->p == P->p_inv));
        CHECK_FALSE(commutation_twist(x + z, Generator::y).has_value());
    }
    const auto P = derive_params(1, 3, 0, 1);
    CHECK(theta(P) == mono(P, 0, 1, 1, P->q - P->one()) + mono(P, 1, 0, 0));
    CHECK_THROWS_AS(commutation_twist(PbwElement(P), Generator::x), DomainError);
}

TEST_CASE("Omega and the centre") {
    const auto P44 = derive_params(4, 4, 1, 1);
    CHECK(omega(P44) == product(mono(P44, 1, 0, 0), theta(P44)));
    const auto P24 = derive_params(2, 4, 1, 1);
    CHECK(omega(P24) == product(mono(P24, 1, 0, 0), power(theta(P24), 2)));
    const auto P23 = derive_params(2, 3, 1, 1);
    CHECK(omega(P23) == PbwElement::scalar(P23, P23->one()));

    const auto gens = center_generators(P23);
    REQUIRE(gens.size() == 5);
    CHECK(gens[0].value == mono(P23, 2, 0, 0));
    CHECK(gens[1].value == power(theta(P23), 3));
    CHECK(gens[2].value == mono(P23, 0, 6, 0));
    CHECK(gens[3].value == mono(P23, 0, 0, 6));
    CHECK(gens[4].value == PbwElement::scalar(P23, P23->one()));

    const auto P13 = derive_params(1, 3, 0, 1);
    CHECK(center_generators(P13)[0].value == mono(P13, 1, 0, 0));

    for (const auto& s : kSample) {
        const auto P = derive_params(s[0], s[1], s[2], s[3]);
        for (const auto& g : center_generators(P)) {
            CHECK_MESSAGE(is_central(g.value), g.name);
        }
        CHECK_FALSE(is_central(mono(P, 0, 1, 0)));
        CHECK_FALSE(is_central(mono(P, 0, 0, 1)));
        // theta commutes with x and y exactly when q = 1
        CHECK(is_central(theta(P)) == (P->n == 1));
    }
}

TEST_CASE("central powers when m = n") {
    for (unsigned m : {3U, 4U, 5U}) {
        const auto P = derive_params(m, m, 1, 1);
        CHECK(is_central(mono(P, m, 0, 0)));
        CHECK(is_central(mono(P, 0, m, 0)));
        CHECK(is_central(mono(P, 0, 0, m)));
    }
}

TEST_CASE("lexicographic degree") {
    const auto P = derive_params(2, 3, 1, 1);
    const LexLeading t = lex_degree(theta(P));
    CHECK(t.degree == LexDegree{1, 1});
    CHECK(t.z_coeff == std::map<unsigned, CycNumber>{{0, P->q - P->p_inv}});
    const LexLeading z5 = lex_degree(mono(P, 5, 0, 0));
    CHECK(z5.degree == LexDegree{0, 0});
    CHECK(z5.z_coeff == std::map<unsigned, CycNumber>{{5, P->one()}});
    CHECK_THROWS_AS(lex_degree(PbwElement(P)), DomainError);

    for (const auto& s : kSample) {
        const auto Q = derive_params(s[0], s[1], s[2], s[3]);
        for (unsigned k = 1; k <= 6; ++k) {
            const auto tk = power(theta(Q), k);
            const LexLeading lead = lex_degree(tk);
            CHECK(lead.degree == LexDegree{k, k});
            const CycNumber expected = (Q->q - Q->p_inv).pow(k) * Q->q_pow(static_cast<long long>(k) * (k - 1) / 2);
            CHECK(lead.z_coeff == std::map<unsigned, CycNumber>{{0, expected}});
            CHECK(tk.terms().at(Monomial{k, 0, 0}).is_one());
            // every other term is z^(k-r) x^r y^r
            for (const auto& [mono_, c] : tk.terms()) {
                CHECK(mono_.j == mono_.k);
                CHECK(mono_.i + mono_.j == k);
            }
        }
    }
}

TEST_CASE("theta^n at p = 1") {
    for (unsigned n = 2; n <= 6; ++n) {
        const auto P = derive_params(1, n, 0, 1);
        const CycNumber c = (P->q - P->one()).pow(n) * P->q_pow(static_cast<long long>(n) * (n - 1) / 2);
        CHECK(power(theta(P), n) == mono(P, 0, n, n, c) + mono(P, n, 0, 0));
    }
}

TEST_CASE("H_{p,1} maps into H_{1,p^-1} with z -> theta") {
    for (unsigned m : {2U, 3U, 4U, 5U}) {
        // target algebra: p' = 1, q' = zeta_m; source p = q'^-1
        const auto T = derive_params(1, m, 0, 1);
        const CycNumber p = T->q_inv;
        const auto x = mono(T, 0, 1, 0);
        const auto y = mono(T, 0, 0, 1);
        const auto th = theta(T);
        CHECK((product(th, x) - product(x, th) * p.inverse()).is_zero());
        CHECK((product(th, y) - product(y, th) * p).is_zero());
        CHECK((product(y, x) - product(x, y) - th).is_zero());
    }
}

TEST_CASE("degree cap and parameter mismatch") {
    const auto P = derive_params(2, 3, 1, 1);
    CHECK_THROWS_AS(mono(P, kMaxDegree + 1, 0, 0), DomainError);
    CHECK_THROWS_AS(product(mono(P, kMaxDegree, 0, 0), mono(P, 1, 0, 0)), DomainError);
    const auto Q = derive_params(4, 4, 1, 1);
    CHECK_THROWS_AS(product(mono(P, 1, 0, 0), mono(Q, 1, 0, 0)), std::invalid_argument);
}
