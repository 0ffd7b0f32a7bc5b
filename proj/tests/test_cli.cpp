#include <doctest.h>

#include <fstream>
#include <sstream>

#include "torsion/checks.hpp"
#include "torsion/cli.hpp"
#include "torsion/json_io.hpp"
#include "helpers.hpp"

using namespace torsion;
using torsion::testing::mk_chain;

namespace {

TorsLattice pentagon() { return enumerate_torsion_classes(make_context(2)); }

int run_cli(const std::vector<std::string>& args, std::string& out, std::string& err) {
    std::ostringstream o, e;
    int code = cli::run(args, o, e);
    out = o.str();
    err = e.str();
    return code;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "cli_test_" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

const char* kChainA = R"({"n":2,"classes":[["[1,1]","[1,2]","[2,2]"],["[2,2]"],[]],"breakpoints":["1/3","2/3"]})";
const char* kChainB = R"({"n":2,"classes":[["[1,1]","[1,2]","[2,2]"],["[2,2]"],[]],"breakpoints":["1/2","3/4"]})";

}  // namespace

TEST_CASE("chain JSON round trip and errors") {
    TorsLattice l = pentagon();
    Chain c = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"1/3", "2/3"});
    json j = chain_json(l, c);
    CHECK(chain_from_json(l, j) == c);
    CHECK(j["breakpoints"][0] == "1/3");

    json bad = json::parse(R"({"n":2,"classes":[["[1,1]","[1,2]","[2,2]"],["[1,2]"],[]],"breakpoints":["1/3","2/3"]})");
    CHECK_THROWS_WITH_AS(chain_from_json(l, bad),
                         "chain JSON error at classes[1]: not a torsion class",
                         std::invalid_argument);

    json bad2 = json::parse(kChainA);
    bad2["breakpoints"][1] = "2/0";
    try {
        chain_from_json(l, bad2);
        CHECK(false);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("breakpoints[1]") != std::string::npos);
    }

    json bad3 = json::parse(kChainA);
    bad3["n"] = 3;
    CHECK_THROWS_AS(chain_from_json(l, bad3), std::invalid_argument);
}

TEST_CASE("chain JSON round trip on random chains") {
    TorsLattice l = enumerate_torsion_classes(make_context(3));
    for (const Chain& c : random_chains(l, 50, 7u)) {
        CHECK(chain_from_json(l, chain_json(l, c)) == c);
        CHECK(chain_from_json(l, json::parse(chain_json(l, c).dump())) == c);
    }
}

TEST_CASE("wsc JSON round trip") {
    TorsLattice l = pentagon();
    WeakStability cc = CentralCharge{{1, -1}, {1, 1}};
    json j = wsc_json(l, cc);
    CHECK(j["kind"] == "central_charge");
    WeakStability back = wsc_from_json(l, j);
    CHECK(std::get<CentralCharge>(back).theta == std::vector<long long>{1, -1});

    Chain c = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"1/3", "2/3"});
    json jm = wsc_json(l, ChainMho{c});
    CHECK(std::get<ChainMho>(wsc_from_json(l, jm)).chain == c);
    json jo = wsc_json(l, ChainOmega{c});
    CHECK(std::get<ChainOmega>(wsc_from_json(l, jo)).chain == c);

    CHECK_THROWS_AS(wsc_from_json(l, json::parse(R"({"kind":"slope"})")), std::invalid_argument);
    CHECK_THROWS_AS(wsc_from_json(l, json::parse(R"({"kind":"central_charge","theta":[1,-1],"delta":[1,0]})")),
                    std::invalid_argument);
}

TEST_CASE("lattice JSON and DOT") {
    TorsLattice l = pentagon();
    json j = lattice_json(l);
    CHECK(j["n"] == 2);
    CHECK(j["classes"].size() == 5);
    CHECK(j["classes"][0]["members"].empty());
    CHECK(j["hasse"].size() == 5);
    bool found = false;
    for (const auto& e : j["hasse"])
        if (e["upper"] == 4 && e["lower"] == 3) {
            CHECK(e["brick"] == "[2,2]");
            found = true;
        }
    CHECK(found);

    std::string dot = lattice_dot(l, true);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("label=\"[2,2]\"") != std::string::npos);
}

TEST_CASE("cli verbs") {
    std::string out, err;

    CHECK(run_cli({"mgs", "--n", "2"}, out, err) == 0);
    CHECK(out.find("2 maximal green sequences") != std::string::npos);

    CHECK(run_cli({"tors", "--n", "3"}, out, err) == 0);
    CHECK(out.find("14 torsion classes") != std::string::npos);

    CHECK(run_cli({"tors", "--n", "2", "--json"}, out, err) == 0);
    CHECK(json::parse(out)["classes"].size() == 5);

    CHECK(run_cli({"hasse", "--n", "2"}, out, err) == 0);
    CHECK(out.find("->") != std::string::npos);

    CHECK(run_cli({"nerve", "--n", "2"}, out, err) == 0);
    CHECK(out.find("f-vector: 1 3 1") != std::string::npos);
    CHECK(out.find("facets: 2") != std::string::npos);

    CHECK(run_cli({"nerve", "--n", "2", "--json"}, out, err) == 0);
    json nj = json::parse(out);
    CHECK(nj["f_vector"] == json::parse("[1,3,1]"));
    CHECK(nj["facets"].size() == 2);

    std::string a = write_temp("a.json", kChainA);
    std::string b = write_temp("b.json", kChainB);

    CHECK(run_cli({"hn", "--n", "2", "--chain", a, "--module", "[1,2]"}, out, err) == 0);
    CHECK(out == "[2,2]  2/3  [2,2]\n[1,2]  1/3  [1,1]\n");

    CHECK(run_cli({"dist", "--chain1", a, "--chain2", b}, out, err) == 0);
    CHECK(out == "1/6\n");
    CHECK(run_cli({"dist", "--chain1", a, "--chain2", b, "--filt-check"}, out, err) == 0);
    CHECK(out.find("filt formula: 1/6") != std::string::npos);

    CHECK(run_cli({"dist", "--separated", "--n", "1"}, out, err) == 0);
    CHECK(out == "0,1\n1,0\n");

    std::string w = write_temp("w.json", R"({"kind":"central_charge","theta":[1,-1],"delta":[1,1]})");
    CHECK(run_cli({"wsc", "--n", "2", "--spec", w, "--etapm"}, out, err) == 0);
    CHECK(out.find("1/4") != std::string::npos);
    std::string inferred;
    CHECK(run_cli({"wsc", "--spec", w, "--etapm"}, inferred, err) == 0);  // n from theta length
    CHECK(inferred == out);
    CHECK(run_cli({"wsc", "--n", "2", "--spec", w, "--seesaw", "--dim-bound", "5"}, out, err) == 0);
    CHECK(out.find("strict see-saw: pass") != std::string::npos);
    CHECK(run_cli({"wsc", "--n", "2", "--spec", w, "--semistable", "[1,2]"}, out, err) == 0);
    CHECK(out.find("semistable, phase 1/2") != std::string::npos);
}

TEST_CASE("cli exit codes") {
    std::string out, err;
    CHECK(run_cli({"bogus"}, out, err) == 2);
    CHECK(run_cli({"mgs"}, out, err) == 2);  // missing --n
    CHECK(run_cli({"tors", "--n", "9"}, out, err) == 2);
    CHECK(run_cli({"hn", "--n", "2", "--chain", "missing.json", "--module", "[1,1]"}, out, err) == 2);
    CHECK(err.find("cannot open") != std::string::npos);

    std::string broken = write_temp("broken.json",
        R"({"n":2,"classes":[["[1,1]","[1,2]","[2,2]"],["[1,2]"],[]],"breakpoints":["1/3","2/3"]})");
    CHECK(run_cli({"hn", "--n", "2", "--chain", broken, "--module", "[1,1]"}, out, err) == 2);
    CHECK(err.find("classes[1]") != std::string::npos);

    CHECK(run_cli({"check", "--suite", "stability", "--n", "2", "--dim-bound", "5"}, out, err) == 0);
    CHECK(out.find("FAIL") == std::string::npos);
}

TEST_CASE("deterministic output") {
    std::string out1, out2, err;
    run_cli({"tors", "--n", "3", "--json"}, out1, err);
    run_cli({"tors", "--n", "3", "--json"}, out2, err);
    CHECK(out1 == out2);
    run_cli({"mgs", "--n", "3"}, out1, err);
    run_cli({"mgs", "--n", "3"}, out2, err);
    CHECK(out1 == out2);
}
