#include "qheis/arith/lattice.hpp"
#include "qheis/cli/commands.hpp"
#include "qheis/cli/expr.hpp"
#include "qheis/error.hpp"
#include "qheis/io/json.hpp"
#include "qheis/linrep/modules.hpp"
#include "qheis/ncpoly/pbw.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qheis;

namespace {

// Structured results cross the boundary as JSON text in the same schema the
// command line prints; the Python package decodes them.
std::string dump(const io::Json& doc) { return doc.dump(); }

ParamsRef params(unsigned m, unsigned n, std::optional<unsigned> k1, std::optional<unsigned> k2) {
    for (const auto& [a, b] : admissible_pairs(m, n)) {
        if ((!k1 || a == *k1) && (!k2 || b == *k2)) {
            return derive_params(m, n, a, b);
        }
    }
    if (k1 && k2) {
        return derive_params(m, n, *k1, *k2); // throws with the precise reason
    }
    throw DomainError("no admissible (k1, k2) for (m, n) = (" + std::to_string(m) + ", " + std::to_string(n) + ")");
}

std::optional<CycNumber> scalar_arg(const std::optional<std::string>& text, const ParamsRef& P) {
    if (!text) {
        return std::nullopt;
    }
    return cli::evaluate_scalar(*text, P);
}

} // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Exact computations in the quantum Heisenberg algebra H_{p,q} at roots of unity";
    py::register_exception<DomainError>(mod, "DomainError", PyExc_ArithmeticError);

    const auto k1 = py::arg("k1") = py::none();
    const auto k2 = py::arg("k2") = py::none();

    mod.def("pi_degree", &pi_degree, py::arg("m"), py::arg("n"));
    mod.def(
        "pi_degree_snf",
        [](unsigned m, unsigned n, std::optional<unsigned> a, std::optional<unsigned> b) {
            const auto report = pi_degree_snf(*params(m, n, a, b));
            std::vector<std::string> factors;
            for (const auto& f : report.invariant_factors) {
                factors.push_back(f.get_str());
            }
            return py::make_tuple(report.pi_degree, factors);
        },
        py::arg("m"), py::arg("n"), k1, k2);
    mod.def(
        "ord_pq", [](unsigned m, unsigned n, std::optional<unsigned> a, std::optional<unsigned> b) {
            return ord_pq(*params(m, n, a, b));
        },
        py::arg("m"), py::arg("n"), k1, k2);
    mod.def("classify_pair", [](unsigned m, unsigned n) { return to_string(classify_pair(m, n)); }, py::arg("m"),
            py::arg("n"));
    mod.def("scan_orders", [](unsigned m, unsigned n) { return dump(io::to_json(scan_orders(m, n))); }, py::arg("m"),
            py::arg("n"));
    mod.def(
        "normal_form",
        [](const std::string& expr, unsigned m, unsigned n, std::optional<unsigned> a, std::optional<unsigned> b) {
            return dump(io::to_json(cli::evaluate(*cli::parse_expr(expr), params(m, n, a, b))));
        },
        py::arg("expr"), py::arg("m"), py::arg("n"), k1, k2);
    mod.def(
        "is_central",
        [](const std::string& expr, unsigned m, unsigned n, std::optional<unsigned> a, std::optional<unsigned> b) {
            return is_central(cli::evaluate(*cli::parse_expr(expr), params(m, n, a, b)));
        },
        py::arg("expr"), py::arg("m"), py::arg("n"), k1, k2);
    mod.def(
        "build_module",
        [](const std::string& kind, unsigned m, unsigned n, std::optional<unsigned> a, std::optional<unsigned> b,
           std::optional<std::string> mu, std::optional<std::string> lambda, std::optional<std::string> gamma) {
            const ParamsRef P = params(m, n, a, b);
            const ModuleDescriptor desc{module_kind_from_string(kind), scalar_arg(mu, P), scalar_arg(lambda, P),
                                        scalar_arg(gamma, P)};
            return dump(io::to_json(build(P, desc)));
        },
        py::arg("kind"), py::arg("m"), py::arg("n"), k1, k2, py::arg("mu") = py::none(),
        py::arg("lambda_") = py::none(), py::arg("gamma") = py::none());
    mod.def("verify_relations",
            [](const std::string& rep) { return verify_relations(io::rep_from_json(io::Json::parse(rep))).ok; },
            py::arg("rep"));
    mod.def("is_simple", [](const std::string& rep) { return is_simple(io::rep_from_json(io::Json::parse(rep))); },
            py::arg("rep"));
    mod.def("classify",
            [](const std::string& rep) { return dump(io::to_json(classify(io::rep_from_json(io::Json::parse(rep))))); },
            py::arg("rep"));
    mod.def(
        "iso_test",
        [](const std::string& a, const std::string& b, unsigned m, unsigned n, std::optional<unsigned> k1_,
           std::optional<unsigned> k2_) {
            const ModuleDescriptor da = io::descriptor_from_json(io::Json::parse(a));
            const ModuleDescriptor db = io::descriptor_from_json(io::Json::parse(b));
            const IsoResult r = iso_test(da.kind, da, db, *params(m, n, k1_, k2_));
            return py::make_tuple(r.isomorphic, r.isomorphic ? py::object(py::int_(r.witness)) : py::object(py::none()));
        },
        py::arg("a"), py::arg("b"), py::arg("m"), py::arg("n"), k1, k2);
    mod.def(
        "run",
        [](const std::vector<std::string>& args) {
            const auto r = cli::run(args);
            return py::make_tuple(r.exit_code, r.out, r.err);
        },
        py::arg("args"));
}
