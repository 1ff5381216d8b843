#include "qheis/cli/commands.hpp"

#include "qheis/arith/lattice.hpp"
#include "qheis/cli/expr.hpp"
#include "qheis/error.hpp"
#include "qheis/io/json.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace qheis::cli {

namespace {

using io::Json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParamFlags {
    unsigned m = 0;
    unsigned n = 0;
    std::optional<unsigned> k1;
    std::optional<unsigned> k2;
    unsigned conductor = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--m", m, "order of p")->required();
        cmd->add_option("--n", n, "order of q")->required();
        cmd->add_option("--k1", k1, "p = g^(s1 k1); defaults to the smallest valid value");
        cmd->add_option("--k2", k2, "q = g^(s2 k2); defaults to the smallest valid value");
        cmd->add_option("--conductor", conductor, "work in Q(zeta_N), N a multiple of lcm(m, n)");
    }

    ParamsRef resolve() const {
        unsigned a = k1.value_or(0);
        unsigned b = k2.value_or(0);
        if (!k1 || !k2) {
            // smallest admissible pair consistent with whatever was given
            bool found = false;
            for (const auto& [c1, c2] : admissible_pairs(m, n)) {
                if ((!k1 || c1 == *k1) && (!k2 || c2 == *k2)) {
                    a = c1;
                    b = c2;
                    found = true;
                    break;
                }
            }
            if (!found) {
                throw DomainError("no admissible (k1, k2) for (m, n) = (" + std::to_string(m) + ", " +
                                  std::to_string(n) + ")");
            }
        }
        return derive_params(m, n, a, b, conductor);
    }
};

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw UsageError("'" + path + "' is not valid JSON: " + e.what());
    }
}

bool is_cyc(const Json& v) { return v.is_object() && v.size() == 2 && v.contains("conductor") && v.contains("coeffs"); }

std::string scalar_text(const Json& v) {
    if (is_cyc(v)) {
        return io::cyc_from_json(v).to_string();
    }
    if (v.is_string()) {
        return v.get<std::string>();
    }
    return v.dump();
}

bool is_flat_record(const Json& v) {
    if (!v.is_object()) {
        return false;
    }
    return std::all_of(v.begin(), v.end(), [](const Json& e) { return !e.is_structured() || is_cyc(e); });
}

void render(const Json& v, const std::string& indent, std::ostringstream& out);

void render_rows(const std::vector<std::vector<std::string>>& rows, const std::string& indent,
                 std::ostringstream& out) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    for (const auto& row : rows) {
        std::string line = indent;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) {
                line += std::string(width[c] - row[c].size() + 2, ' ');
            }
        }
        out << line << '\n';
    }
}

void render(const Json& v, const std::string& indent, std::ostringstream& out) {
    if (v.is_object() && !is_cyc(v)) {
        std::vector<std::vector<std::string>> simple;
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (!it.value().is_structured() || is_cyc(it.value())) {
                simple.push_back({it.key(), scalar_text(it.value())});
                continue;
            }
            render_rows(simple, indent, out);
            simple.clear();
            out << indent << it.key() << ":\n";
            render(it.value(), indent + "  ", out);
        }
        render_rows(simple, indent, out);
        return;
    }
    if (v.is_array()) {
        if (!v.empty() && std::all_of(v.begin(), v.end(), is_flat_record)) {
            std::vector<std::vector<std::string>> rows;
            std::vector<std::string> header;
            for (auto it = v.front().begin(); it != v.front().end(); ++it) {
                header.push_back(it.key());
            }
            rows.push_back(header);
            for (const auto& rec : v) {
                std::vector<std::string> row;
                for (const auto& key : header) {
                    row.push_back(rec.contains(key) ? scalar_text(rec.at(key)) : "");
                }
                rows.push_back(std::move(row));
            }
            render_rows(rows, indent, out);
            return;
        }
        if (!v.empty() && std::all_of(v.begin(), v.end(), [](const Json& r) { return r.is_array(); })) {
            std::vector<std::vector<std::string>> rows;
            for (const auto& r : v) {
                std::vector<std::string> row;
                for (const auto& cell : r) {
                    row.push_back(scalar_text(cell));
                }
                rows.push_back(std::move(row));
            }
            render_rows(rows, indent, out);
            return;
        }
        std::vector<std::vector<std::string>> rows;
        for (const auto& e : v) {
            if (e.is_structured() && !is_cyc(e)) {
                render(e, indent + "  ", out);
            } else {
                rows.push_back({scalar_text(e)});
            }
        }
        render_rows(rows, indent, out);
        return;
    }
    out << indent << scalar_text(v) << '\n';
}

std::string format(const Json& doc, const std::string& style) {
    if (style == "table") {
        std::ostringstream out;
        render(doc, "", out);
        return out.str();
    }
    return doc.dump(2) + "\n";
}

Json terms_only(const PbwElement& e) { return io::to_json(e).at("terms"); }

} // namespace

CommandResult run(const std::vector<std::string>& args) {
    CLI::App app{"Exact computations in the quantum Heisenberg algebra H_{p,q} at roots of unity", "qheis"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string style = "json";
    app.add_option("--format", style, "output style")->check(CLI::IsMember({"json", "table"}));

    std::function<Json()> action;

    ParamFlags pideg_flags;
    auto* pideg = app.add_subcommand("pideg", "PI degree by the closed form and by Smith normal form");
    pideg_flags.attach(pideg);
    pideg->callback([&] {
        action = [&] {
            const ParamsRef P = pideg_flags.resolve();
            const PiDegreeReport snf = pi_degree_snf(*P);
            Json factors = Json::array();
            for (const auto& f : snf.invariant_factors) {
                factors.push_back(f.get_si());
            }
            return Json{{"l", P->l},
                        {"pideg_theorem", pi_degree(P->m, P->n)},
                        {"pideg_snf", snf.pi_degree},
                        {"invariant_factors", std::move(factors)}};
        };
    });

    ParamFlags order_flags;
    auto* order = app.add_subcommand("order", "multiplicative order of pq");
    order_flags.attach(order);
    order->callback([&] {
        action = [&] {
            const ParamsRef P = order_flags.resolve();
            return Json{{"ord_pq", ord_pq(*P)}};
        };
    });

    unsigned scan_m = 0;
    unsigned scan_n = 0;
    auto* scan = app.add_subcommand("scan", "ord(pq) over every admissible (k1, k2)");
    scan->add_option("--m", scan_m, "order of p")->required();
    scan->add_option("--n", scan_n, "order of q")->required();
    scan->callback([&] {
        action = [&] { return io::to_json(scan_orders(scan_m, scan_n)); };
    });

    ParamFlags center_flags;
    auto* center = app.add_subcommand("center", "generators of the center and their centrality check");
    center_flags.attach(center);
    center->callback([&] {
        action = [&] {
            const ParamsRef P = center_flags.resolve();
            Json gens = Json::array();
            for (const auto& g : center_generators(P)) {
                gens.push_back(Json{{"name", g.name}, {"central", is_central(g.value)}, {"terms", terms_only(g.value)}});
            }
            return Json{{"params", io::params_header(*P)}, {"generators", std::move(gens)}};
        };
    });

    ParamFlags nf_flags;
    std::string expr_text;
    auto* nf = app.add_subcommand("normal-form", "PBW normal form of an expression");
    nf_flags.attach(nf);
    nf->add_option("--expr", expr_text, "expression in x, y, z, theta, g, p, q")->required();
    nf->callback([&] {
        action = [&] {
            const ExprPtr expr = parse_expr(expr_text);
            return io::to_json(evaluate(*expr, nf_flags.resolve()));
        };
    });

    ParamFlags build_flags;
    std::string build_kind;
    std::optional<std::string> mu_text;
    std::optional<std::string> lambda_text;
    std::optional<std::string> gamma_text;
    auto* mbuild = app.add_subcommand("module-build", "matrices of a canonical module");
    build_flags.attach(mbuild);
    mbuild->add_option("--kind", build_kind, "V1 | V2 | V3 | QPlaneZ | QPlaneTheta | OneDim")->required();
    mbuild->add_option("--mu", mu_text, "scalar expression");
    mbuild->add_option("--lambda", lambda_text, "scalar expression");
    mbuild->add_option("--gamma", gamma_text, "scalar expression");
    mbuild->callback([&] {
        action = [&] {
            ModuleDescriptor desc;
            desc.kind = module_kind_from_string(build_kind);
            const ParamsRef P = build_flags.resolve();
            if (mu_text) {
                desc.mu = evaluate_scalar(*mu_text, P);
            }
            if (lambda_text) {
                desc.lambda = evaluate_scalar(*lambda_text, P);
            }
            if (gamma_text) {
                desc.gamma = evaluate_scalar(*gamma_text, P);
            }
            return io::to_json(build(P, desc));
        };
    });

    std::string verify_in;
    auto* mverify = app.add_subcommand("module-verify", "check the defining relations on a module file");
    mverify->add_option("--in", verify_in, "module JSON")->required();
    mverify->callback([&] {
        action = [&] {
            const RelationCheck check = verify_relations(io::rep_from_json(read_json_file(verify_in)));
            return Json{{"ok", check.ok},
                        {"residuals", Json{{"zx", io::to_json(check.zx)},
                                           {"zy", io::to_json(check.zy)},
                                           {"yx", io::to_json(check.yx)}}}};
        };
    });

    std::string simple_in;
    auto* msimple = app.add_subcommand("module-simple", "absolute irreducibility test");
    msimple->add_option("--in", simple_in, "module JSON")->required();
    msimple->callback([&] {
        action = [&] {
            const MatrixRep rep = io::rep_from_json(read_json_file(simple_in));
            if (!verify_relations(rep).ok) {
                throw DomainError("matrices do not satisfy the defining relations");
            }
            const std::size_t span = algebra_span_dim({rep.Mx, rep.My, rep.Mz});
            return Json{{"d", rep.d}, {"span_dim", span}, {"simple", span == rep.d * rep.d}};
        };
    });

    std::string classify_in;
    auto* mclassify = app.add_subcommand("module-classify", "descriptor of a simple module");
    mclassify->add_option("--in", classify_in, "module JSON")->required();
    mclassify->callback([&] {
        action = [&] { return io::to_json(classify(io::rep_from_json(read_json_file(classify_in)))); };
    });

    ParamFlags iso_flags;
    std::vector<std::string> iso_in;
    std::string iso_kind;
    auto* iso = app.add_subcommand("iso", "isomorphism test between two descriptors");
    iso_flags.attach(iso);
    iso->add_option("--in", iso_in, "descriptor JSON (twice)")->required()->expected(1)->multi_option_policy(
        CLI::MultiOptionPolicy::TakeAll);
    iso->add_option("--kind", iso_kind, "expected kind of both descriptors");
    iso->callback([&] {
        action = [&] {
            if (iso_in.size() != 2) {
                throw UsageError("iso needs exactly two --in files");
            }
            const ParamsRef P = iso_flags.resolve();
            const ModuleDescriptor a = io::descriptor_from_json(read_json_file(iso_in[0]));
            const ModuleDescriptor b = io::descriptor_from_json(read_json_file(iso_in[1]));
            const ModuleKind kind = iso_kind.empty() ? a.kind : module_kind_from_string(iso_kind);
            const IsoResult res = iso_test(kind, a, b, *P);
            const std::size_t space = intertwiner_space(build(P, a), build(P, b)).size();
            Json out{{"kind", to_string(kind)}, {"isomorphic", res.isomorphic}};
            if (res.isomorphic) {
                out["witness"] = res.witness;
                out["intertwiner"] = io::to_json(intertwiner(kind, a, b, res.witness, P));
            }
            out["intertwiner_space_dim"] = space;
            return out;
        };
    });

    CommandResult result;
    std::ostringstream out;
    std::ostringstream err;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        result.out = out.str();
        return result;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        result.out = out.str();
        return result;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        result.exit_code = kExitUsage;
        result.err = err.str();
        return result;
    }

    try {
        result.out = format(action(), style);
    } catch (const DomainError& e) {
        result.exit_code = kExitDomain;
        result.err = std::string("error: ") + e.what() + "\n";
    } catch (const std::invalid_argument& e) {
        // ParseError, malformed JSON, unknown kinds, non-scalar flags
        result.exit_code = kExitUsage;
        result.err = std::string("usage error: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        result.exit_code = kExitDomain;
        result.err = std::string("internal error: ") + e.what() + "\n";
    }
    if (result.exit_code != kExitOk) {
        result.out.clear();
    }
    return result;
}

} // namespace qheis::cli
