#include "qheis/io/json.hpp"

#include <stdexcept>
#include <string>

namespace qheis::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("malformed JSON: " + what); }

const Json& field(const Json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) {
        bad(std::string("missing key '") + key + "'");
    }
    return doc.at(key);
}

unsigned as_unsigned(const Json& v, const char* what) {
    if (!v.is_number_unsigned()) {
        bad(std::string(what) + " must be a non-negative integer");
    }
    const auto value = v.get<std::uint64_t>();
    if (value > 1'000'000'000ULL) {
        bad(std::string(what) + " out of range");
    }
    return static_cast<unsigned>(value);
}

} // namespace

Json to_json(const CycNumber& value) {
    Json coeffs = Json::array();
    for (const auto& c : value.coeffs()) {
        coeffs.push_back(to_string(c));
    }
    return Json{{"conductor", value.conductor()}, {"coeffs", std::move(coeffs)}};
}

CycNumber cyc_from_json(const Json& doc) {
    const unsigned conductor = as_unsigned(field(doc, "conductor"), "conductor");
    if (conductor == 0 || conductor > kMaxConductor) {
        bad("conductor out of range");
    }
    const Json& coeffs = field(doc, "coeffs");
    if (!coeffs.is_array() || coeffs.size() != euler_phi(conductor)) {
        bad("coeffs must hold phi(conductor) entries");
    }
    std::vector<Rational> values;
    for (const auto& c : coeffs) {
        if (!c.is_string()) {
            bad("coefficients are strings of the form \"a/b\"");
        }
        values.push_back(parse_rational(c.get<std::string>()));
    }
    return CycNumber(conductor, values);
}

Json params_header(const AlgebraParams& params) {
    Json out{{"m", params.m}, {"n", params.n}, {"k1", params.k1}, {"k2", params.k2}};
    if (params.conductor != params.l) {
        out["conductor"] = params.conductor;
    }
    return out;
}

ParamsRef params_from_json(const Json& header) {
    const unsigned conductor = header.contains("conductor") ? as_unsigned(header.at("conductor"), "conductor") : 0;
    return derive_params(as_unsigned(field(header, "m"), "m"), as_unsigned(field(header, "n"), "n"),
                         as_unsigned(field(header, "k1"), "k1"), as_unsigned(field(header, "k2"), "k2"), conductor);
}

Json to_json(const PbwElement& element) {
    Json terms = Json::array();
    for (const auto& [mono, c] : element.terms()) {
        terms.push_back(Json{{"i", mono.i}, {"j", mono.j}, {"k", mono.k}, {"c", to_json(c)}});
    }
    return Json{{"params", params_header(element.algebra())}, {"terms", std::move(terms)}};
}

PbwElement pbw_from_json(const Json& doc) {
    const ParamsRef params = params_from_json(field(doc, "params"));
    PbwElement out(params);
    const Json& terms = field(doc, "terms");
    if (!terms.is_array()) {
        bad("terms must be an array");
    }
    for (const auto& t : terms) {
        const Monomial mono{as_unsigned(field(t, "i"), "i"), as_unsigned(field(t, "j"), "j"),
                            as_unsigned(field(t, "k"), "k")};
        out.add_term(mono, params->lift(cyc_from_json(field(t, "c"))));
    }
    return out;
}

Json to_json(const FieldMatrix& matrix) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < matrix.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < matrix.cols(); ++c) {
            row.push_back(to_json(matrix(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

FieldMatrix matrix_from_json(const Json& doc, std::size_t d, const AlgebraParams& params) {
    if (!doc.is_array() || doc.size() != d) {
        bad("matrix must have d rows");
    }
    FieldMatrix out(d, d, params.conductor);
    for (std::size_t r = 0; r < d; ++r) {
        if (!doc[r].is_array() || doc[r].size() != d) {
            bad("matrix must have d columns");
        }
        for (std::size_t c = 0; c < d; ++c) {
            const CycNumber v = cyc_from_json(doc[r][c]);
            if (params.conductor % v.conductor() != 0) {
                bad("entry conductor does not divide the module conductor");
            }
            out(r, c) = params.lift(v);
        }
    }
    return out;
}

Json to_json(const MatrixRep& rep) {
    return Json{{"params", params_header(*rep.params)},
                {"d", rep.d},
                {"Mx", to_json(rep.Mx)},
                {"My", to_json(rep.My)},
                {"Mz", to_json(rep.Mz)}};
}

MatrixRep rep_from_json(const Json& doc) {
    MatrixRep rep;
    rep.params = params_from_json(field(doc, "params"));
    rep.d = as_unsigned(field(doc, "d"), "d");
    if (rep.d == 0 || rep.d > 4096) {
        bad("d out of range");
    }
    rep.Mx = matrix_from_json(field(doc, "Mx"), rep.d, *rep.params);
    rep.My = matrix_from_json(field(doc, "My"), rep.d, *rep.params);
    rep.Mz = matrix_from_json(field(doc, "Mz"), rep.d, *rep.params);
    return rep;
}

Json to_json(const ModuleDescriptor& desc) {
    Json out{{"kind", to_string(desc.kind)}};
    if (desc.mu) {
        out["mu"] = to_json(*desc.mu);
    }
    if (desc.lambda) {
        out["lambda"] = to_json(*desc.lambda);
    }
    if (desc.gamma) {
        out["gamma"] = to_json(*desc.gamma);
    }
    return out;
}

ModuleDescriptor descriptor_from_json(const Json& doc) {
    const Json& kind = field(doc, "kind");
    if (!kind.is_string()) {
        bad("kind must be a string");
    }
    ModuleDescriptor desc;
    desc.kind = module_kind_from_string(kind.get<std::string>());
    if (doc.contains("mu")) {
        desc.mu = cyc_from_json(doc.at("mu"));
    }
    if (doc.contains("lambda")) {
        desc.lambda = cyc_from_json(doc.at("lambda"));
    }
    if (doc.contains("gamma")) {
        desc.gamma = cyc_from_json(doc.at("gamma"));
    }
    return desc;
}

Json to_json(const OrderReport& report) {
    Json entries = Json::array();
    for (const auto& e : report.entries) {
        entries.push_back(Json{{"k1", e.k1}, {"k2", e.k2}, {"ord", e.ord}});
    }
    return Json{{"m", report.m}, {"n", report.n}, {"verdict", to_string(report.verdict)}, {"entries", std::move(entries)}};
}

} // namespace qheis::io
