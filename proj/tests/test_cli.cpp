#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "dpb/bipoly.hpp"
#include "dpb/families.hpp"
#include "dpb/json_io.hpp"
#include "dpb/sequences.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    int code = dpb::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("table of the fully degenerate numbers")
{
    auto r = run({"table", "--family", "fdpb", "--k", "1", "--n-max", "2", "--symbolic", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "n,value\n0,1\n1,1/2\n2,(-1/2)*L + 1/6\n");
}

TEST_CASE("table of Bernoulli numbers")
{
    auto r = run({"table", "--family", "bernoulli", "--n-max", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "n,value\n0,1\n1,-1/2\n2,1/6\n");
}

TEST_CASE("table with a numeric lambda")
{
    auto r = run({"table", "--family", "fdpb", "--k", "1", "--n-max", "2", "--lambda", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "n,value\n0,1\n1,1/2\n2,-5/6\n");
}

TEST_CASE("table with negative k")
{
    auto r = run({"table", "--family", "polybernoulli", "--k", "-2", "--n-max", "3"});
    CHECK(r.code == 0);
    // B_n^(-2) = 1, 4, 14, 46
    CHECK(r.out == "n,value\n0,1\n1,4\n2,14\n3,46\n");
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({"table", "--family", "fdpb", "--n-max", "3"}).code == 2);
    CHECK(run({"table", "--family", "euler", "--n-max", "3"}).code == 2);
    CHECK(run({"table", "--family", "fdpb", "--k", "1", "--lambda", "1/x"}).code == 2);
    CHECK(run({"table", "--family", "fdpb", "--k", "1", "--lambda", "1", "--symbolic"}).code == 2);
    CHECK(run({"table", "--family", "fdpb", "--k", "1", "--format", "xml"}).code == 2);
    CHECK(run({"table", "--family", "fdpb", "--k", "x"}).code == 2);
    CHECK(run({"poly", "--family", "fdpb", "--k", "1"}).code == 2);
    CHECK(run({"verify", "--suite", "NO_SUCH"}).code == 2);
    CHECK(run({"verify", "--k-min", "2", "--k-max", "1"}).code == 2);
    CHECK(run({"expand", "--k", "1", "--poly", "x +"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    auto r = run({"table", "--family", "fdpb"});
    CHECK(r.err.find("--k") != std::string::npos);
}

TEST_CASE("help exits with 0")
{
    auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify") != std::string::npos);
    CHECK(run({"table", "--help"}).code == 0);
}

TEST_CASE("poly examples")
{
    auto a = run({"poly", "--family", "fdpb", "--k", "1", "--n", "1", "--symbolic"});
    CHECK(a.code == 0);
    CHECK(a.out == "x + 1/2\n");

    auto c = run({"poly", "--family", "carlitz", "--n", "0"});
    CHECK(c.out == "1\n");

    // B_2^(1)(x) = B_2(x + 1)
    auto pb = run({"poly", "--family", "polybernoulli", "--k", "1", "--n", "2"});
    dpb::BiPoly b2 = dpb::BiPoly::parse(run({"poly", "--family", "bernoulli", "--n", "2"}).out);
    dpb::BiPoly shifted = substitute_x(b2, dpb::BiPoly::x() + 1);
    CHECK(pb.out == canonical_string(shifted) + "\n");
    CHECK(pb.out == "x^2 + x + 1/6\n");

    auto j = run({"poly", "--family", "fdpb", "--k", "2", "--n", "1", "--format", "json"});
    auto rec = nlohmann::json::parse(j.out);
    CHECK(rec.size() == 1);
    CHECK(rec[0]["value"] == "x + 1/4");
    CHECK(rec[0]["k"] == 2);

    auto csv = run({"poly", "--family", "fdpb", "--k", "2", "--n", "1", "--format", "csv"});
    CHECK(csv.out == "n,value\n1,x + 1/4\n");
}

TEST_CASE("verify examples")
{
    auto r = run({"verify", "--suite", "THM3_K2", "--n-max", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("THM3_K2 pass") != std::string::npos);
    CHECK(r.out.find("=1/4") != std::string::npos);

    auto all = run({"verify", "--suite", "all", "--n-max", "3", "--k-min", "-2", "--k-max", "2"});
    CHECK(all.code == 0);

    auto json = run({"verify", "--n-max", "2", "--format", "json"});
    CHECK(json.code == 0);
    auto arr = nlohmann::json::parse(json.out);
    CHECK(arr.size() == 15);
    CHECK(arr[0]["identity"] == "THM1_ADDITION");

    auto literal = run({"verify", "--suite", "THM8_INTEGRAL", "--n-max", "2", "--integral-reading", "literal"});
    CHECK(literal.code == 1);
    CHECK(literal.out.find("FAIL") != std::string::npos);
}

TEST_CASE("expand subcommand")
{
    auto r = run({"expand", "--k", "1", "--poly", "x^2 + (-1/2)*L*x + 1/6"});
    CHECK(r.code == 0);
    auto e = dpb::expansion_from_json(nlohmann::json::parse(r.out));
    CHECK(e.k == 1);
    CHECK(e.n == 2);
    CHECK(reconstruct(e) == dpb::BiPoly::parse("x^2 + (-1/2)*L*x + 1/6"));
}

TEST_CASE("JSON table round-trips byte for byte")
{
    for (std::string family : {"fdpb", "carlitz", "daehee", "polybernoulli", "bernoulli"}) {
        std::vector<std::string> args = {"table", "--family", family, "--n-max", "6", "--format", "json"};
        if (family == "fdpb" || family == "polybernoulli") {
            args.insert(args.end(), {"--k", "-1"});
        }
        auto r = run(args);
        REQUIRE(r.code == 0);
        auto parsed = nlohmann::json::parse(r.out);
        nlohmann::json again = nlohmann::json::array();
        for (const auto& item : parsed) {
            auto rec = dpb::output_record_from_json(item);
            CHECK(canonical_string(dpb::BiPoly::parse(rec.value)) == rec.value);
            again.push_back(dpb::to_json(rec));
        }
        CHECK(again.dump(2) + "\n" == r.out);
    }
}

TEST_CASE("output is deterministic")
{
    std::vector<std::string> table = {"table", "--family", "fdpb", "--k", "3", "--n-max", "8"};
    CHECK(run(table).out == run(table).out);
    auto v1 = run({"verify", "--n-max", "5", "--jobs", "1", "--format", "json"});
    auto v2 = run({"verify", "--n-max", "5", "--jobs", "3", "--format", "json"});
    CHECK(v1.out == v2.out);
}

TEST_CASE("--out writes a file")
{
    std::string path = "dpb_cli_test_out.csv";
    auto r = run({"table", "--family", "bernoulli", "--n-max", "2", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == "n,value\n0,1\n1,-1/2\n2,1/6\n");
    std::remove(path.c_str());
}
