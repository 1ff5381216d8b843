// Replays the golden cases twice: in process through cli::run and through
// the installed binary, then checks that a handful of CLI documents equal
// the JSON of direct library calls.
// Usage: golden_runner <qheis-binary> <golden-dir>

#include "golden.hpp"

#include "qheis/arith/lattice.hpp"
#include "qheis/cli/expr.hpp"
#include "qheis/io/json.hpp"
#include "qheis/linrep/modules.hpp"

#include <cstdio>
#include <iostream>
#include <sys/wait.h>

using namespace qheis;

namespace {

std::string quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') {
            out += "'\\''";
        } else {
            out += c;
        }
    }
    return out + "'";
}

std::pair<int, std::string> run_binary(const std::string& exe, const std::vector<std::string>& args) {
    std::string cmd = quote(exe);
    for (const auto& a : args) {
        cmd += " " + quote(a);
    }
    cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        return {-1, ""};
    }
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
        out.append(buf, got);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string dump(const io::Json& doc) { return doc.dump(2) + "\n"; }

int delegation_checks() {
    int bad = 0;
    const auto expect = [&](const std::string& what, const std::vector<std::string>& args, const std::string& direct) {
        const auto r = cli::run(args);
        if (r.exit_code != 0 || r.out != direct) {
            std::cerr << "delegation mismatch: " << what << "\n";
            ++bad;
        }
    };

    const auto P = derive_params(2, 3, 1, 1);
    expect("order", {"order", "--m", "4", "--n", "4", "--k1", "1", "--k2", "1"},
           dump(io::Json{{"ord_pq", ord_pq(4, 4, 1, 1)}}));
    expect("scan", {"scan", "--m", "9", "--n", "9"}, dump(io::to_json(scan_orders(9, 9))));
    expect("normal-form", {"normal-form", "--m", "2", "--n", "3", "--k1", "1", "--k2", "1", "--expr", "y*x^2"},
           dump(io::to_json(product(PbwElement::generator(P, Generator::y),
                                    power(PbwElement::generator(P, Generator::x), 2)))));
    expect("module-build",
           {"module-build", "--m", "2", "--n", "3", "--k1", "1", "--k2", "1", "--kind", "V3", "--lambda", "2"},
           dump(io::to_json(build_v3(P, P->scalar(2)))));
    return bad;
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: golden_runner <qheis-binary> <golden-dir>\n";
        return 2;
    }
    const std::string exe = argv[1];
    const std::string dir = argv[2];
    int failures = 0;

    std::size_t count = 0;
    for (const auto& m : golden::check_all(dir, &count)) {
        std::cerr << "in-process " << m.name << ": " << m.why << "\n";
        ++failures;
    }
    if (count != 20) {
        std::cerr << "expected 20 golden cases, found " << count << "\n";
        ++failures;
    }

    for (const auto& c : golden::load_cases(dir)) {
        const auto [code, out] = run_binary(exe, c.args);
        const std::string expected = golden::read_file(dir + "/expected/" + c.name + ".out");
        if (code != c.exit_code || out != expected) {
            std::cerr << "binary " << c.name << ": exit " << code << "\n";
            ++failures;
        }
    }

    failures += delegation_checks();
    std::cout << (failures == 0 ? "golden: all cases match\n" : "golden: failures\n");
    return failures == 0 ? 0 : 1;
}
