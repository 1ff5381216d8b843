#include "qheis/cli/commands.hpp"
#include "qheis/cli/expr.hpp"
#include "qheis/error.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace qheis;
using namespace qheis::cli;
using Json = nlohmann::ordered_json;

namespace {

PbwElement eval(const std::string& text, const ParamsRef& P) { return evaluate(*parse_expr(text), P); }

std::size_t parse_offset(const std::string& text) {
    try {
        parse_expr(text);
    } catch (const ParseError& e) {
        return e.offset();
    }
    FAIL("expected a parse error for " << text);
    return 0;
}

} // namespace

TEST_CASE("expression grammar") {
    const auto P = derive_params(2, 3, 1, 1);
    const PbwElement x = PbwElement::generator(P, Generator::x);
    const PbwElement y = PbwElement::generator(P, Generator::y);
    const PbwElement z = PbwElement::generator(P, Generator::z);

    CHECK(eval("x y", P) == product(x, y));
    CHECK(eval("x*y", P) == product(x, y));
    CHECK(eval("y x - q x y", P) == z);
    CHECK(eval("-x^2", P) == -power(x, 2));
    CHECK(eval("(x+y)^2", P) == product(x + y, x + y));
    CHECK(eval("2x - x - x", P).is_zero());
    CHECK(eval("3/4 z", P) == PbwElement::scalar(P, P->scalar(3) * Rational(1, 4)) * z);
    CHECK(eval("theta", P) == theta(P));
    CHECK(eval("p q", P) == PbwElement::scalar(P, P->p * P->q));
    CHECK(eval("g^6", P) == PbwElement::scalar(P, P->one()));
    CHECK(eval("x^0", P) == PbwElement::scalar(P, P->one()));
    CHECK(evaluate_scalar("g^2 + 1", P) == P->g_pow(2) + P->one());
    CHECK(evaluate_scalar("x - x", P).is_zero());
    CHECK_THROWS_AS(evaluate_scalar("x", P), std::invalid_argument);
}

TEST_CASE("parse errors carry offsets") {
    CHECK(parse_offset("x + + ") == 4);
    CHECK(parse_offset("x ^ y") == 4);
    CHECK(parse_offset("x^2^3") == 3);
    CHECK(parse_offset("(x + y") == 6);
    CHECK(parse_offset("w") == 0);
    CHECK(parse_offset("x # y") == 2);
    CHECK(parse_offset("") == 0);
    CHECK(parse_offset("1/") == 2);
    CHECK(parse_offset("x^1/2") == 2);
    CHECK(parse_offset("x^2000000") == 2);
}

TEST_CASE("degree cap on powers") {
    const auto P = derive_params(2, 3, 1, 1);
    CHECK_THROWS_AS(eval("(x y)^600000", P), DomainError);
}

TEST_CASE("exit codes") {
    CHECK(run({"pideg", "--m", "2", "--n", "3"}).exit_code == kExitOk);
    CHECK(run({"pideg", "--m", "2", "--n", "2"}).exit_code == kExitDomain);
    CHECK(run({"pideg", "--m", "2"}).exit_code == kExitUsage);
    CHECK(run({"frobnicate"}).exit_code == kExitUsage);
    CHECK(run({}).exit_code == kExitUsage);
    CHECK(run({"--help"}).exit_code == kExitOk);
    CHECK(run({"normal-form", "--m", "2", "--n", "3", "--expr", "x +"}).exit_code == kExitUsage);
    CHECK(run({"order", "--m", "2", "--n", "3", "--k1", "2", "--k2", "1"}).exit_code == kExitDomain);
    CHECK(run({"module-build", "--m", "2", "--n", "3", "--kind", "V3", "--lambda", "0"}).exit_code == kExitDomain);
    CHECK(run({"module-build", "--m", "2", "--n", "3", "--kind", "V9", "--lambda", "1"}).exit_code == kExitUsage);
    CHECK(run({"module-verify", "--in", "/nonexistent/file.json"}).exit_code == kExitUsage);

    const CommandResult failed = run({"pideg", "--m", "2", "--n", "2"});
    CHECK(failed.out.empty());
    CHECK_FALSE(failed.err.empty());
}

TEST_CASE("command outputs") {
    const CommandResult r = run({"pideg", "--m", "2", "--n", "3", "--k1", "1", "--k2", "1"});
    REQUIRE(r.exit_code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["l"] == 6);
    CHECK(doc["pideg_theorem"] == 6);
    CHECK(doc["pideg_snf"] == 6);

    const Json ord = Json::parse(run({"order", "--m", "4", "--n", "4", "--k1", "1", "--k2", "1"}).out);
    CHECK(ord["ord_pq"] == 2);

    const Json scan = Json::parse(run({"scan", "--m", "9", "--n", "9"}).out);
    CHECK(scan["verdict"] == "MIXED");

    const Json center = Json::parse(run({"center", "--m", "2", "--n", "3", "--k1", "1", "--k2", "1"}).out);
    REQUIRE(center["generators"].size() == 5);
    for (const auto& g : center["generators"]) {
        CHECK(g["central"] == true);
    }

    const CommandResult table = run({"--format", "table", "pideg", "--m", "2", "--n", "3"});
    CHECK(table.exit_code == 0);
    CHECK(table.out.find("pideg_snf") != std::string::npos);
}
