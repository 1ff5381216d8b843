#pragma once

#include "qheis/arith/lattice.hpp"
#include "qheis/linrep/modules.hpp"
#include "qheis/ncpoly/pbw.hpp"

#include <json.hpp>

namespace qheis::io {

// Key order is part of the output contract, hence ordered_json throughout.
using Json = nlohmann::ordered_json;

/// {"conductor": N, "coeffs": ["a/b", ...]} with phi(N) coefficients.
Json to_json(const CycNumber& value);
/// Throws std::invalid_argument on malformed input.
CycNumber cyc_from_json(const Json& doc);

/// {"m","n","k1","k2"} plus "conductor" when it differs from l.
Json params_header(const AlgebraParams& params);
ParamsRef params_from_json(const Json& header);

/// {"params": {...}, "terms": [{"i","j","k","c"}]} in ascending (i, j, k).
Json to_json(const PbwElement& element);
PbwElement pbw_from_json(const Json& doc);

Json to_json(const FieldMatrix& matrix);
FieldMatrix matrix_from_json(const Json& doc, std::size_t d, const AlgebraParams& params);

/// {"params","d","Mx","My","Mz"}.
Json to_json(const MatrixRep& rep);
MatrixRep rep_from_json(const Json& doc);

/// {"kind","mu","lambda","gamma"}, absent scalars omitted.
Json to_json(const ModuleDescriptor& desc);
ModuleDescriptor descriptor_from_json(const Json& doc);

/// {"m","n","verdict","entries":[{"k1","k2","ord"}]}.
Json to_json(const OrderReport& report);

} // namespace qheis::io
