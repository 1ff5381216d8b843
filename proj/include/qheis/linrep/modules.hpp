#pragma once

#include "qheis/linrep/field_matrix.hpp"
#include "qheis/params.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qheis {

/// Row-vector convention: v.a = v * M_a, hence M_{ab} = M_a * M_b.
struct MatrixRep {
    ParamsRef params;
    std::size_t d = 0;
    FieldMatrix Mx;
    FieldMatrix My;
    FieldMatrix Mz;
};

enum class ModuleKind { V1, V2, V3, QPlaneZ, QPlaneTheta, OneDim };

std::string to_string(ModuleKind kind);
/// Throws std::invalid_argument on an unknown name.
ModuleKind module_kind_from_string(const std::string& name);

/// Scalars naming a canonical module. For the quantum-plane kinds mu is the
/// x-weight a and lambda the y-scale b; for OneDim (mu, lambda, gamma) are the
/// scalars by which x, y, z act.
struct ModuleDescriptor {
    ModuleKind kind = ModuleKind::V1;
    std::optional<CycNumber> mu;
    std::optional<CycNumber> lambda;
    std::optional<CycNumber> gamma;

    friend bool operator==(const ModuleDescriptor&, const ModuleDescriptor&) = default;
};

enum class QPlaneMode { z_torsion, theta_torsion };

/// Builders throw DomainError on a zero scalar.
MatrixRep build_v1(const ParamsRef& params, const CycNumber& mu, const CycNumber& lambda, const CycNumber& gamma);
MatrixRep build_v2(const ParamsRef& params, const CycNumber& mu, const CycNumber& lambda);
MatrixRep build_v3(const ParamsRef& params, const CycNumber& lambda);
/// z_torsion: dimension n, Mz = 0, x = a diag(q^k), y = b * cyclic shift.
/// theta_torsion: dimension m, x = a diag(p^-k), y = b * cyclic shift and
/// z = (p^-1 - q) x y so that theta acts as zero.
MatrixRep build_qplane(const ParamsRef& params, QPlaneMode mode, const CycNumber& a, const CycNumber& b);
/// Throws DomainError unless the three scalars satisfy the relations.
MatrixRep build_one_dim(const ParamsRef& params, const CycNumber& x, const CycNumber& y, const CycNumber& z);
/// Dispatches on descriptor.kind; missing scalars are a DomainError.
MatrixRep build(const ParamsRef& params, const ModuleDescriptor& descriptor);

/// Dimension of the canonical module of this kind.
std::size_t canonical_dimension(const AlgebraParams& params, ModuleKind kind);

struct RelationCheck {
    bool ok = false;
    FieldMatrix zx; // Mz Mx - p^-1 Mx Mz
    FieldMatrix zy; // Mz My - p My Mz
    FieldMatrix yx; // My Mx - q Mx My - Mz
};

RelationCheck verify_relations(const MatrixRep& rep);

/// My Mx - p^-1 Mx My.
FieldMatrix theta_matrix(const MatrixRep& rep);

/// Whether {Mx, My, Mz} span the full d x d matrix algebra. Throws DomainError
/// if the relations fail.
bool is_simple(const MatrixRep& rep);

MatrixRep direct_sum(const MatrixRep& a, const MatrixRep& b);

/// Basis of {P : M^A_a P = P M^B_a for a = x, y, z}.
std::vector<FieldMatrix> intertwiner_space(const MatrixRep& a, const MatrixRep& b);

/// Descriptor of a canonical module isomorphic to rep. Throws DomainError on a
/// non-simple input or when scalar extraction leaves the coefficient field.
ModuleDescriptor classify(const MatrixRep& rep);

struct IsoResult {
    bool isomorphic = false;
    unsigned witness = 0;
};

/// Decides isomorphism between canonical modules from their scalars. The
/// witness k is the index shift of the intertwiner, see intertwiner().
/// Throws std::invalid_argument when a descriptor is not of the given kind.
IsoResult iso_test(ModuleKind kind, const ModuleDescriptor& a, const ModuleDescriptor& b, const AlgebraParams& params);

/// P with P[j][j - k mod d] = (s_B / s_A)^j, where s is mu for V1/V2, the
/// y-scale for the quantum planes, and 1 otherwise. Satisfies
/// M^A_a P = P M^B_a. Throws DomainError if k is not a witness.
FieldMatrix intertwiner(ModuleKind kind, const ModuleDescriptor& a, const ModuleDescriptor& b, unsigned k,
                        const ParamsRef& params);

} // namespace qheis
