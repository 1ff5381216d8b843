#include "qheis/linrep/modules.hpp"

#include "qheis/arith/lattice.hpp"
#include "qheis/error.hpp"
#include "qheis/ncpoly/pbw.hpp"

#include <stdexcept>

namespace qheis {

namespace {

CycNumber require_nonzero(const AlgebraParams& params, const CycNumber& value, const char* what) {
    if (value.is_zero()) {
        throw DomainError(std::string(what) + " must be nonzero");
    }
    return params.lift(value);
}

const CycNumber& require_field(const std::optional<CycNumber>& value, const char* what) {
    if (!value) {
        throw DomainError(std::string("descriptor is missing ") + what);
    }
    return *value;
}

MatrixRep empty_rep(const ParamsRef& params, std::size_t d) {
    MatrixRep rep;
    rep.params = params;
    rep.d = d;
    rep.Mx = FieldMatrix(d, d, params->conductor);
    rep.My = FieldMatrix(d, d, params->conductor);
    rep.Mz = FieldMatrix(d, d, params->conductor);
    return rep;
}

} // namespace

std::string to_string(ModuleKind kind) {
    switch (kind) {
    case ModuleKind::V1:
        return "V1";
    case ModuleKind::V2:
        return "V2";
    case ModuleKind::V3:
        return "V3";
    case ModuleKind::QPlaneZ:
        return "QPlaneZ";
    case ModuleKind::QPlaneTheta:
        return "QPlaneTheta";
    case ModuleKind::OneDim:
        return "OneDim";
    }
    return "?";
}

ModuleKind module_kind_from_string(const std::string& name) {
    for (ModuleKind kind : {ModuleKind::V1, ModuleKind::V2, ModuleKind::V3, ModuleKind::QPlaneZ,
                            ModuleKind::QPlaneTheta, ModuleKind::OneDim}) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    throw std::invalid_argument("unknown module kind '" + name + "'");
}

std::size_t canonical_dimension(const AlgebraParams& params, ModuleKind kind) {
    switch (kind) {
    case ModuleKind::V1:
    case ModuleKind::V2:
        return params.l;
    case ModuleKind::V3:
        return ord_pq(params);
    case ModuleKind::QPlaneZ:
        return params.n;
    case ModuleKind::QPlaneTheta:
        return params.m;
    case ModuleKind::OneDim:
        return 1;
    }
    return 0;
}

MatrixRep build_v1(const ParamsRef& params, const CycNumber& mu_in, const CycNumber& lambda_in,
                   const CycNumber& gamma_in) {
    const AlgebraParams& P = *params;
    const CycNumber mu = require_nonzero(P, mu_in, "mu");
    const CycNumber lambda = require_nonzero(P, lambda_in, "lambda");
    const CycNumber gamma = require_nonzero(P, gamma_in, "gamma");
    const std::size_t d = P.l;
    MatrixRep rep = empty_rep(params, d);
    const CycNumber pq = P.p * P.q;
    const CycNumber denom_inv = (pq - P.one()).inverse(); // pq != 1 by validation
    const CycNumber mu_inv = mu.inverse();
    for (std::size_t k = 0; k < d; ++k) {
        const auto kk = static_cast<long long>(k);
        rep.Mz(k, k) = lambda * P.p_pow(kk);
        rep.Mx(k, (k + 1) % d) = mu;
        const CycNumber numer = pq * gamma - pq.pow(kk) * lambda;
        rep.My(k, (k + d - 1) % d) = mu_inv * P.q_pow(-kk) * numer * denom_inv;
    }
    return rep;
}

MatrixRep build_v2(const ParamsRef& params, const CycNumber& mu_in, const CycNumber& lambda_in) {
    const AlgebraParams& P = *params;
    const CycNumber mu = require_nonzero(P, mu_in, "mu");
    const CycNumber lambda = require_nonzero(P, lambda_in, "lambda");
    const std::size_t d = P.l;
    MatrixRep rep = empty_rep(params, d);
    const CycNumber scale = mu.inverse() * lambda;
    for (std::size_t k = 0; k < d; ++k) {
        const auto kk = static_cast<long long>(k);
        rep.Mz(k, k) = lambda * P.p_pow(-kk);
        rep.My(k, (k + 1) % d) = mu;
        if (k > 0) {
            rep.Mx(k, k - 1) = scale * pq_number(P, static_cast<unsigned>(k));
        }
    }
    return rep;
}

MatrixRep build_v3(const ParamsRef& params, const CycNumber& lambda_in) {
    const AlgebraParams& P = *params;
    const CycNumber lambda = require_nonzero(P, lambda_in, "lambda");
    const std::size_t d = ord_pq(P);
    MatrixRep rep = empty_rep(params, d);
    for (std::size_t k = 0; k < d; ++k) {
        const auto kk = static_cast<long long>(k);
        rep.Mz(k, k) = lambda * P.p_pow(-kk);
        if (k + 1 < d) {
            rep.My(k, k + 1) = P.one();
        }
        if (k > 0) {
            rep.Mx(k, k - 1) = lambda * pq_number(P, static_cast<unsigned>(k));
        }
    }
    return rep;
}

MatrixRep build_qplane(const ParamsRef& params, QPlaneMode mode, const CycNumber& a_in, const CycNumber& b_in) {
    const AlgebraParams& P = *params;
    const CycNumber a = require_nonzero(P, a_in, "a");
    const CycNumber b = require_nonzero(P, b_in, "b");
    const std::size_t d = mode == QPlaneMode::z_torsion ? P.n : P.m;
    MatrixRep rep = empty_rep(params, d);
    for (std::size_t k = 0; k < d; ++k) {
        const auto kk = static_cast<long long>(k);
        rep.Mx(k, k) = mode == QPlaneMode::z_torsion ? a * P.q_pow(kk) : a * P.p_pow(-kk);
        rep.My(k, (k + 1) % d) = b;
    }
    if (mode == QPlaneMode::theta_torsion) {
        rep.Mz = (P.p_inv - P.q) * (rep.Mx * rep.My);
    }
    return rep;
}

MatrixRep build_one_dim(const ParamsRef& params, const CycNumber& x, const CycNumber& y, const CycNumber& z) {
    MatrixRep rep = empty_rep(params, 1);
    rep.Mx(0, 0) = params->lift(x);
    rep.My(0, 0) = params->lift(y);
    rep.Mz(0, 0) = params->lift(z);
    if (!verify_relations(rep).ok) {
        throw DomainError("scalars (x, y, z) do not satisfy the defining relations");
    }
    return rep;
}

MatrixRep build(const ParamsRef& params, const ModuleDescriptor& desc) {
    switch (desc.kind) {
    case ModuleKind::V1:
        return build_v1(params, require_field(desc.mu, "mu"), require_field(desc.lambda, "lambda"),
                        require_field(desc.gamma, "gamma"));
    case ModuleKind::V2:
        return build_v2(params, require_field(desc.mu, "mu"), require_field(desc.lambda, "lambda"));
    case ModuleKind::V3:
        return build_v3(params, require_field(desc.lambda, "lambda"));
    case ModuleKind::QPlaneZ:
        return build_qplane(params, QPlaneMode::z_torsion, require_field(desc.mu, "mu"),
                            require_field(desc.lambda, "lambda"));
    case ModuleKind::QPlaneTheta:
        return build_qplane(params, QPlaneMode::theta_torsion, require_field(desc.mu, "mu"),
                            require_field(desc.lambda, "lambda"));
    case ModuleKind::OneDim:
        return build_one_dim(params, require_field(desc.mu, "mu"), require_field(desc.lambda, "lambda"),
                             require_field(desc.gamma, "gamma"));
    }
    throw std::logic_error("unreachable");
}

RelationCheck verify_relations(const MatrixRep& rep) {
    const AlgebraParams& P = *rep.params;
    RelationCheck out;
    out.zx = rep.Mz * rep.Mx - P.p_inv * (rep.Mx * rep.Mz);
    out.zy = rep.Mz * rep.My - P.p * (rep.My * rep.Mz);
    out.yx = rep.My * rep.Mx - P.q * (rep.Mx * rep.My) - rep.Mz;
    out.ok = out.zx.is_zero() && out.zy.is_zero() && out.yx.is_zero();
    return out;
}

FieldMatrix theta_matrix(const MatrixRep& rep) {
    return rep.My * rep.Mx - rep.params->p_inv * (rep.Mx * rep.My);
}

bool is_simple(const MatrixRep& rep) {
    if (!verify_relations(rep).ok) {
        throw DomainError("matrices do not satisfy the defining relations");
    }
    return algebra_span_dim({rep.Mx, rep.My, rep.Mz}) == rep.d * rep.d;
}

MatrixRep direct_sum(const MatrixRep& a, const MatrixRep& b) {
    if (!a.params->same_algebra(*b.params)) {
        throw std::invalid_argument("direct_sum: modules over different algebras");
    }
    MatrixRep out;
    out.params = a.params;
    out.d = a.d + b.d;
    out.Mx = direct_sum(a.Mx, b.Mx);
    out.My = direct_sum(a.My, b.My);
    out.Mz = direct_sum(a.Mz, b.Mz);
    return out;
}

std::vector<FieldMatrix> intertwiner_space(const MatrixRep& a, const MatrixRep& b) {
    if (!a.params->same_algebra(*b.params)) {
        throw std::invalid_argument("intertwiner_space: modules over different algebras");
    }
    const std::size_t da = a.d;
    const std::size_t db = b.d;
    const unsigned N = a.params->conductor;
    // Unknown P[t][c] sits in column t*db + c; equation (r, c) of generator g
    // reads sum_t A[r][t] P[t][c] - sum_t P[r][t] B[t][c] = 0.
    FieldMatrix system(3 * da * db, da * db, N);
    const std::pair<const FieldMatrix*, const FieldMatrix*> gens[] = {
        {&a.Mx, &b.Mx}, {&a.My, &b.My}, {&a.Mz, &b.Mz}};
    std::size_t row = 0;
    for (const auto& [ma, mb] : gens) {
        for (std::size_t r = 0; r < da; ++r) {
            for (std::size_t c = 0; c < db; ++c, ++row) {
                for (std::size_t t = 0; t < da; ++t) {
                    if (!(*ma)(r, t).is_zero()) {
                        system(row, t * db + c) += (*ma)(r, t);
                    }
                }
                for (std::size_t t = 0; t < db; ++t) {
                    if (!(*mb)(t, c).is_zero()) {
                        system(row, r * db + t) -= (*mb)(t, c);
                    }
                }
            }
        }
    }
    std::vector<FieldMatrix> out;
    for (const auto& v : row_reduce(system).kernel) {
        FieldMatrix P(da, db, N);
        for (std::size_t t = 0; t < da; ++t) {
            for (std::size_t c = 0; c < db; ++c) {
                P(t, c) = v[t * db + c];
            }
        }
        out.push_back(std::move(P));
    }
    return out;
}

namespace {

// Eigenvalue candidates of M given M^order = c I: c^(1/order) * unit^i.
std::vector<CycNumber> root_candidates(const FieldMatrix& M, unsigned order, const std::vector<CycNumber>& units,
                                       const char* what) {
    const auto c = M.pow(order).as_scalar();
    if (!c || c->is_zero()) {
        throw DomainError(std::string(what) + " does not act by a nonzero scalar; module is not simple");
    }
    const auto root = nth_root(*c, order);
    if (!root) {
        throw DomainError(std::string("eigenvalues of ") + what + " lie outside the coefficient field");
    }
    std::vector<CycNumber> out;
    for (const auto& u : units) {
        out.push_back(*root * u);
    }
    return out;
}

std::vector<CycNumber> powers_of(const CycNumber& base, unsigned count) {
    std::vector<CycNumber> out;
    CycNumber cur(base.conductor(), 1L);
    for (unsigned i = 0; i < count; ++i) {
        out.push_back(cur);
        cur *= base;
    }
    return out;
}

CycNumber central_root(const FieldMatrix& M, unsigned order, const char* what) {
    const auto c = M.pow(order).as_scalar();
    if (!c || c->is_zero()) {
        throw DomainError(std::string(what) + " does not act by a nonzero scalar; module is not simple");
    }
    const auto root = nth_root(*c, order);
    if (!root) {
        throw DomainError(std::string("no root of the scalar action of ") + what + " in the coefficient field");
    }
    return *root;
}

// First candidate for which the joint left kernel of fixed + (M - c I) is
// nonzero.
std::optional<CycNumber> joint_eigenvalue(const std::vector<FieldMatrix>& fixed, const FieldMatrix& M,
                                          const std::vector<CycNumber>& candidates) {
    for (const auto& c : candidates) {
        std::vector<FieldMatrix> mats = fixed;
        mats.push_back(M - FieldMatrix::scalar(M.rows(), c));
        if (!joint_left_kernel(mats).empty()) {
            return c;
        }
    }
    return std::nullopt;
}

bool invertible(const FieldMatrix& M) { return row_reduce(M).rank == M.rows(); }

} // namespace

ModuleDescriptor classify(const MatrixRep& rep) {
    if (!is_simple(rep)) {
        throw DomainError("module is not simple");
    }
    const AlgebraParams& P = *rep.params;
    ModuleDescriptor desc;
    if (rep.d == 1) {
        desc.kind = ModuleKind::OneDim;
        desc.mu = rep.Mx(0, 0);
        desc.lambda = rep.My(0, 0);
        desc.gamma = rep.Mz(0, 0);
        return desc;
    }
    const FieldMatrix theta = theta_matrix(rep);
    const bool z_torsion = rep.Mz.is_zero();
    const bool theta_torsion = theta.is_zero();

    if (z_torsion || theta_torsion) {
        // A normal element acts by zero or invertibly; x and y must both be
        // invertible here, otherwise the module would be one-dimensional.
        const unsigned order = z_torsion ? P.n : P.m;
        if (rep.d != order || !invertible(rep.Mx) || !invertible(rep.My)) {
            throw DomainError("torsion module of unexpected shape");
        }
        desc.kind = z_torsion ? ModuleKind::QPlaneZ : ModuleKind::QPlaneTheta;
        desc.mu = central_root(rep.Mx, order, "x^order");
        desc.lambda = central_root(rep.My, order, "y^order");
    } else {
        const auto alpha = rep.Mx.pow(P.l).as_scalar();
        const auto beta = rep.My.pow(P.l).as_scalar();
        if (!alpha || !beta) {
            throw DomainError("x^l or y^l does not act by a scalar; module is not simple");
        }
        const auto z_values = root_candidates(rep.Mz, P.m, powers_of(P.p, P.m), "z^m");
        if (!alpha->is_zero()) {
            desc.kind = ModuleKind::V1;
            desc.mu = central_root(rep.Mx, P.l, "x^l");
            const auto lambda = joint_eigenvalue({}, rep.Mz, z_values);
            if (!lambda) {
                throw DomainError("no eigenvector for z in the coefficient field");
            }
            const auto t_values = root_candidates(theta, P.n, powers_of(P.q, P.n), "theta^n");
            const auto gamma =
                joint_eigenvalue({rep.Mz - FieldMatrix::scalar(rep.d, *lambda)}, theta, t_values);
            if (!gamma) {
                throw DomainError("no joint eigenvector for z and theta");
            }
            desc.lambda = *lambda;
            desc.gamma = *gamma;
        } else {
            // ker x is stable under z; its z-eigenvalue is the lambda we need.
            const auto lambda = joint_eigenvalue({rep.Mx}, rep.Mz, z_values);
            if (!lambda) {
                throw DomainError("no z-eigenvector inside ker x");
            }
            desc.lambda = *lambda;
            if (!beta->is_zero()) {
                desc.kind = ModuleKind::V2;
                desc.mu = central_root(rep.My, P.l, "y^l");
            } else {
                desc.kind = ModuleKind::V3;
            }
        }
    }
    const MatrixRep canonical = build(rep.params, desc);
    if (canonical.d != rep.d || intertwiner_space(rep, canonical).empty()) {
        throw DomainError("extracted scalars do not reproduce the module");
    }
    return desc;
}

namespace {

bool witness_ok(ModuleKind kind, const ModuleDescriptor& a, const ModuleDescriptor& b, unsigned k,
                const AlgebraParams& P) {
    const auto kk = static_cast<long long>(k);
    auto lift = [&](const std::optional<CycNumber>& v, const char* what) { return P.lift(require_field(v, what)); };
    switch (kind) {
    case ModuleKind::V1: {
        if (k >= P.l || !(lift(a.mu, "mu").pow(P.l) == lift(b.mu, "mu").pow(P.l))) {
            return false;
        }
        return lift(b.lambda, "lambda") == P.p_pow(kk) * lift(a.lambda, "lambda") &&
               lift(b.gamma, "gamma") == P.q_pow(-kk) * lift(a.gamma, "gamma");
    }
    case ModuleKind::V2: {
        // v_s x = 0 for every multiple s of ord(pq), so the generator of ker x
        // is only pinned down up to those shifts.
        if (k >= P.l || k % ord_pq(P) != 0 || !(lift(a.mu, "mu").pow(P.l) == lift(b.mu, "mu").pow(P.l))) {
            return false;
        }
        return lift(b.lambda, "lambda") == P.p_pow(-kk) * lift(a.lambda, "lambda");
    }
    case ModuleKind::V3:
        return k == 0 && lift(a.lambda, "lambda") == lift(b.lambda, "lambda");
    case ModuleKind::QPlaneZ:
        return k < P.n && lift(b.mu, "mu") == P.q_pow(kk) * lift(a.mu, "mu") &&
               lift(a.lambda, "lambda").pow(P.n) == lift(b.lambda, "lambda").pow(P.n);
    case ModuleKind::QPlaneTheta:
        return k < P.m && lift(b.mu, "mu") == P.p_pow(-kk) * lift(a.mu, "mu") &&
               lift(a.lambda, "lambda").pow(P.m) == lift(b.lambda, "lambda").pow(P.m);
    case ModuleKind::OneDim:
        return k == 0 && lift(a.mu, "mu") == lift(b.mu, "mu") && lift(a.lambda, "lambda") == lift(b.lambda, "lambda") &&
               lift(a.gamma, "gamma") == lift(b.gamma, "gamma");
    }
    return false;
}

void require_kind(ModuleKind kind, const ModuleDescriptor& d) {
    if (d.kind != kind) {
        throw std::invalid_argument("descriptor kind " + to_string(d.kind) + " does not match " + to_string(kind));
    }
}

} // namespace

IsoResult iso_test(ModuleKind kind, const ModuleDescriptor& a, const ModuleDescriptor& b, const AlgebraParams& params) {
    require_kind(kind, a);
    require_kind(kind, b);
    const std::size_t d = canonical_dimension(params, kind);
    for (unsigned k = 0; k < d; ++k) {
        if (witness_ok(kind, a, b, k, params)) {
            return {true, k};
        }
    }
    return {false, 0};
}

FieldMatrix intertwiner(ModuleKind kind, const ModuleDescriptor& a, const ModuleDescriptor& b, unsigned k,
                        const ParamsRef& params) {
    require_kind(kind, a);
    require_kind(kind, b);
    const AlgebraParams& P = *params;
    if (!witness_ok(kind, a, b, k, P)) {
        throw DomainError("shift " + std::to_string(k) + " does not witness an isomorphism");
    }
    const std::size_t d = canonical_dimension(P, kind);
    CycNumber ratio = P.one();
    if (kind == ModuleKind::V1 || kind == ModuleKind::V2) {
        ratio = P.lift(*b.mu) * P.lift(*a.mu).inverse();
    } else if (kind == ModuleKind::QPlaneZ || kind == ModuleKind::QPlaneTheta) {
        ratio = P.lift(*b.lambda) * P.lift(*a.lambda).inverse();
    }
    FieldMatrix out(d, d, P.conductor);
    CycNumber weight = P.one();
    for (std::size_t j = 0; j < d; ++j) {
        out(j, (j + d - k % d) % d) = weight;
        weight *= ratio;
    }
    return out;
}

} // namespace qheis
