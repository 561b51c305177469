#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "rank2/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = rank2::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("xn prints the table form") {
    const Run r = cli({"xn", "--b", "1", "--c", "4", "--n", "7"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "((x2+1)^5 + 2*x1^4 + 5*x1^4*x2 + 3*x1^4*x2^2 + x1^8) / (x1^5*x2^2)\n");
}

TEST_CASE("xn --expanded prints canonical Laurent text") {
    const Run r = cli({"xn", "--b", "2", "--c", "2", "--n", "4", "--expanded"});
    REQUIRE(r.code == 0);
    rank2::SequenceCache cache(rank2::CaseParams{2, 2});
    REQUIRE(rank2::parse_laurent(r.out.substr(0, r.out.size() - 1)) == cache.x_at(4));
}

TEST_CASE("xn --json carries numerator and denominator") {
    const Run r = cli({"xn", "--b", "1", "--c", "4", "--n", "7", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["denominator"] == nlohmann::json({5, 2}));
    REQUIRE(j["n"] == 7);
    REQUIRE(j["laurent"].size() == j["numerator"].size());
}

TEST_CASE("sequence --at-ones emits the tabulated values") {
    const Run fwd = cli({"sequence", "--b", "1", "--c", "4", "--from", "3", "--to", "13", "--at-ones"});
    REQUIRE(fwd.code == 0);
    REQUIRE(fwd.out == "2 17 9 386 43 8857 206 203321 987 4667522 4729\n");

    const Run bwd =
        cli({"sequence", "--b", "1", "--c", "4", "--from", "-11", "--to", "0", "--at-ones"});
    REQUIRE(bwd.code == 0);
    REQUIRE(bwd.out == "7369 11333521 1538 493697 321 21506 67 937 14 41 3 2\n");
}

TEST_CASE("table reproduces the reference rows") {
    const Run r = cli({"table", "--b", "1", "--c", "4", "--from", "-3", "--to", "7"});
    REQUIRE(r.code == 0);
    const std::string expected =
        "x_-3 = ((x2+1)^3 + 2*x1^4 + 3*x1^4*x2 + x1^8) / (x1^3*x2^2)\n"
        "x_-2 = ((x2+1)^4 + 3*x1^4 + 8*x1^4*x2 + 6*x1^4*x2^2 + 3*x1^8 + 4*x1^8*x2 + x1^12) / "
        "(x1^4*x2^3)\n"
        "x_-1 = ((x2+1) + x1^4) / (x1*x2)\n"
        "x_0 = (1 + x1^4) / (x2)\n"
        "x_1 = x1\n"
        "x_2 = x2\n"
        "x_3 = (x2+1) / (x1)\n"
        "x_4 = ((x2+1)^4 + x1^4) / (x1^4*x2)\n"
        "x_5 = ((x2+1)^3 + x1^4) / (x1^3*x2)\n"
        "x_6 = ((x2+1)^8 + 3*x1^4 + 16*x1^4*x2 + 34*x1^4*x2^2 + 36*x1^4*x2^3 + 19*x1^4*x2^4 + "
        "4*x1^4*x2^5 + 3*x1^8 + 8*x1^8*x2 + 6*x1^8*x2^2 + x1^12) / (x1^8*x2^3)\n"
        "x_7 = ((x2+1)^5 + 2*x1^4 + 5*x1^4*x2 + 3*x1^4*x2^2 + x1^8) / (x1^5*x2^2)\n";
    REQUIRE(r.out == expected);
}

TEST_CASE("output is identical across runs") {
    const std::vector<std::string> args = {"table", "--b", "2", "--c", "2", "--from", "-4", "--to", "8"};
    const Run a = cli(args);
    const Run b = cli(args);
    REQUIRE(a.code == 0);
    REQUIRE(a.out == b.out);

    const Run v1 = cli({"verify", "--suite", "--max", "5", "--json"});
    const Run v2 = cli({"verify", "--suite", "--max", "5", "--json"});
    REQUIRE(v1.out == v2.out);
}

TEST_CASE("matchpoly") {
    const Run r = cli({"matchpoly", "--b", "2", "--c", "2", "--n", "4"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "x2^4 + x1^2 + 2*x2^2 + 1\n");

    const Run j = cli({"matchpoly", "--b", "1", "--c", "4", "--n", "6", "--json"});
    REQUIRE(j.code == 0);
    const auto parsed = nlohmann::json::parse(j.out);
    REQUIRE(parsed["count"] == "386");
    REQUIRE(parsed["tag"] == "G14(6)");
}

TEST_CASE("graph export") {
    const Run j = cli({"graph", "--b", "1", "--c", "4", "--n", "3", "--format", "json"});
    REQUIRE(j.code == 0);
    const auto g = rank2::graph_from_json(nlohmann::json::parse(j.out));
    REQUIRE(g.vertex_count == 4);

    const Run d = cli({"graph", "--b", "1", "--c", "4", "--n", "7", "--format", "dot"});
    REQUIRE(d.code == 0);
    REQUIRE(d.out.find("style=dashed") != std::string::npos);

    const Run jf = cli({"graph", "--b", "1", "--c", "4", "--n", "3", "--json"});
    REQUIRE(jf.out == j.out);
}

TEST_CASE("verify single identity and suite") {
    const Run one = cli({"verify", "--identity", "TILDES", "--from", "-4", "--to", "4"});
    REQUIRE(one.code == 0);
    REQUIRE(one.out == "TILDES [-4,4] PASS\n");

    const Run suite = cli({"verify", "--suite", "--max", "10"});
    REQUIRE(suite.code == 0);
    REQUIRE(suite.out.find("FAIL") == std::string::npos);
    REQUIRE(suite.out.find("MAIN_14") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    REQUIRE(cli({"frobnicate"}).code == 2);
    REQUIRE(cli({"xn", "--b", "1", "--c", "4"}).code == 2);                       // missing --n
    REQUIRE(cli({"xn", "--n", "3"}).code == 2);                                   // missing case
    REQUIRE(cli({"graph", "--b", "1", "--c", "4", "--n", "0", "--format", "xml"}).code == 2);
    REQUIRE(cli({"matchpoly", "--b", "1", "--c", "3", "--n", "4"}).code == 2);    // no such family
    REQUIRE(cli({"matchpoly", "--b", "1", "--c", "4", "--n", "1"}).code == 2);    // index gap
    REQUIRE(cli({"verify", "--identity", "NOPE", "--from", "0", "--to", "1"}).code == 2);
    REQUIRE(cli({"verify", "--identity", "TILDES"}).code == 2);                   // missing range
    REQUIRE(cli({"verify"}).code == 2);
    REQUIRE(cli({"sequence", "--b", "1", "--c", "4", "--from", "5", "--to", "3"}).code == 2);
    const Run r = cli({"xn", "--b", "1", "--c", "4"});
    REQUIRE_FALSE(r.err.empty());
    REQUIRE(r.out.empty());
}

TEST_CASE("help exits cleanly") {
    const Run r = cli({"--help"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("xn") != std::string::npos);
}
