#include "cli.hpp"

#include "liegrade/serialize.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace liegrade;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run_cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("catalog subcommand")
{
    Run r = run_cli({"catalog", "--type", "E7"});
    REQUIRE(r.code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc.at("schema_version") == 1);
    CHECK(doc.at("entries").size() == 14);

    // determinism: byte-identical output on a second run
    Run r2 = run_cli({"catalog", "--type", "E7"});
    CHECK(r.out == r2.out);

    Run r6 = run_cli({"catalog", "--type", "E6"});
    CHECK(Json::parse(r6.out).at("entries").size() == 14);
}

TEST_CASE("report subcommand")
{
    Run r = run_cli({"report", "--type", "E6", "--entry", "Z3^4", "--nu", "id", "--lambda",
                     "1,0,0,0,0,0"});
    REQUIRE(r.code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc.at("schur_index") == 3);
    CHECK(doc.at("graded_simple_dim") == 81);

    Run r7 = run_cli({"report", "--type", "E7", "--entry", "Z2^8", "--lambda", "1,0,0,0,0,0,0"});
    REQUIRE(r7.code == 0);
    CHECK(Json::parse(r7.out).at("schur_index") == 2);
    CHECK(Json::parse(r7.out).at("graded_simple_dim") == 112);

    // an explicit nu matrix killing the distinguished subgroup
    Run rk = run_cli({"report", "--type", "E6", "--entry", "Z3^4", "--nu",
                      "[[0,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]", "--lambda", "1,0,0,0,0,0"});
    REQUIRE(rk.code == 0);
    CHECK(Json::parse(rk.out).at("schur_index") == 1);

    // the 56-dimensional weight in Bourbaki numbering sits at node 7
    Run rb = run_cli({"report", "--type", "E7", "--entry", "Z2^8", "--lambda", "0,0,0,0,0,0,1",
                      "--bourbaki"});
    REQUIRE(rb.code == 0);
    Json bdoc = Json::parse(rb.out);
    CHECK(bdoc.at("schur_index") == 2);
    CHECK(bdoc.at("graded_simple_dim") == 112);
    CHECK(bdoc.at("numbering") == "bourbaki");
    CHECK(bdoc.at("lambda") == Json::array({0, 0, 0, 0, 0, 0, 1}));

    // a genuine coarsening into a smaller group, keeping T faithful
    Run rt = run_cli({"report", "--type", "E7", "--entry", "Z2^8",
                      "--target", R"({"free_rank":0,"invariant_factors":[2,2]})",
                      "--nu", "[[1,0,0,0,0,0,0,0],[0,1,0,0,0,0,0,0]]",
                      "--lambda", "1,0,0,0,0,0,0"});
    REQUIRE(rt.code == 0);
    Json tdoc = Json::parse(rt.out);
    CHECK(tdoc.at("schur_index") == 2);
    CHECK(tdoc.at("quotient").at("invariant_factors") == Json::array({2, 2}));

    // the same coarsening but collapsing T onto one line: index drops to 1
    Run rc = run_cli({"report", "--type", "E7", "--entry", "Z2^8",
                      "--target", R"({"free_rank":0,"invariant_factors":[2,2]})",
                      "--nu", "[[1,1,0,0,0,0,0,0],[0,0,0,0,0,0,0,0]]",
                      "--lambda", "1,0,0,0,0,0,0"});
    REQUIRE(rc.code == 0);
    CHECK(Json::parse(rc.out).at("schur_index") == 1);
}

TEST_CASE("report with a module file")
{
    std::string path = "cli_test_module.json";
    {
        std::ofstream f(path);
        f << R"({"module": [{"lambda": [1,0,0,0,0,0,0], "multiplicity": 2}]})";
    }
    Run r = run_cli({"report", "--type", "E7", "--entry", "Z2^8", "--lambda", "1,0,0,0,0,0,0",
                     "--module", path});
    std::remove(path.c_str());
    REQUIRE(r.code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc.at("module_compatible").at("compatible") == true);
}

TEST_CASE("pauli subcommand")
{
    Run r = run_cli({"pauli", "--ell", "3"});
    REQUIRE(r.code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc.at("degree_map").size() == 9);
    CHECK(doc.at("commutation_exponent_table").size() == 9);
    CHECK(doc.at("bicharacter").at("group").at("invariant_factors") == Json::array({3, 3}));

    CHECK(run_cli({"pauli", "--ell", "7"}).code == 2);
}

TEST_CASE("exit codes")
{
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({}).code == 2);
    // weight arity mismatch -> 3
    CHECK(run_cli({"report", "--type", "E7", "--entry", "Z2^8", "--lambda", "1,0"}).code == 3);
    // unknown entry -> 2
    CHECK(run_cli({"report", "--type", "E7", "--entry", "Z9", "--lambda", "1,0,0,0,0,0,0"}).code == 2);
    // malformed nu JSON -> 2
    CHECK(run_cli({"report", "--type", "E7", "--entry", "Z2^8", "--nu", "[[1,", "--lambda",
                   "1,0,0,0,0,0,0"})
              .code == 2);
    // ambiguous entry id -> 2
    CHECK(run_cli({"report", "--type", "E6", "--entry", "Z^2xZ2^3", "--lambda", "1,0,0,0,0,0"})
              .code == 2);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("verify subcommand on the light suites")
{
    Run r = run_cli({"verify", "weights"});
    REQUIRE(r.code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc.at("suite") == "weights");
    CHECK(doc.at("pass") == true);
    for (const auto& claim : doc.at("claims"))
        CHECK(claim.at("pass") == true);

    // determinism with a fixed seed
    Run r2 = run_cli({"verify", "weights"});
    CHECK(r.out == r2.out);

    CHECK(run_cli({"verify", "nonsense"}).code == 2);
}

TEST_CASE("output file option")
{
    std::string path = "cli_test_out.json";
    Run r = run_cli({"--output", path, "catalog", "--type", "E6"});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    Json doc = Json::parse(f);
    CHECK(doc.at("entries").size() == 14);
    f.close();
    std::remove(path.c_str());
}
