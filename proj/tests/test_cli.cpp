#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hk/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = hk::cli::main_entry(args, out, err);
    return {code, out.str(), err.str()};
}

// Sets HF_MAX_CELLS for the lifetime of the object.
struct CellCap {
    explicit CellCap(const char* v) { setenv("HF_MAX_CELLS", v, 1); }
    ~CellCap() { unsetenv("HF_MAX_CELLS"); }
};

}  // namespace

TEST_CASE("documented invocations") {
    auto seq = run({"seq", "--family", "restricted", "-m", "3", "-a", "1", "-b", "1", "-n", "8"});
    CHECK(seq.code == 0);
    CHECK(seq.out == "1,1,1,2,4,7,13,26\n");

    auto det = run({"det", "--name", "catalan", "-k", "2", "--n-range", "1..5"});
    CHECK(det.code == 0);
    CHECK(det.out == "2,3,4,5,6\n");

    auto verify = run({"verify", "--id", "thm6.4", "--mode", "symbolic", "--max-n", "9"});
    CHECK(verify.code == 0);
    CHECK(verify.out.find("0 mismatch") != std::string::npos);
}

TEST_CASE("exact rational parameters") {
    auto r = run({"seq", "-a", "-3/2", "-b", "1/3", "-n", "4"});
    CHECK(r.code == 0);
    // c(2) = a^2 + b, c(3) = a^3 + 3ab for m = 2.
    CHECK(r.out == "1,-3/2,31/12,-39/8\n");
    CHECK(run({"seq", "-a", "0.5"}).code == 2);
    CHECK(run({"seq", "-a", "a"}).code == 2);
}

TEST_CASE("configuration errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"nope"}).code == 2);
    CHECK(run({"seq", "--family", "planar"}).code == 2);
    CHECK(run({"seq", "--name", "fibonacci"}).code == 2);
    CHECK(run({"seq", "--name", "catalan", "--family", "restricted"}).code == 2);
    CHECK(run({"det", "--name", "catalan", "--n-range", "5..1"}).code == 2);
    CHECK(run({"det", "--name", "catalan", "--n-range", "1-5"}).code == 2);
    CHECK(run({"det", "--name", "catalan", "--method", "gauss"}).code == 2);
    CHECK(run({"closed", "--id", "thm9.9"}).code == 2);
    CHECK(run({"verify", "--id", "thm6.4", "--mode", "exact"}).code == 2);
    CHECK(run({"conjecture", "--id", "C1.1"}).code == 2);
    CHECK(run({"oracle", "--kind", "lgv", "-n", "9"}).code == 2);  // enumeration cap
    CHECK(run({"favard", "--terms", "1,0,0,0"}).code == 2);         // singular
    CHECK(run({"--format", "xml", "seq"}).code == 2);
}

TEST_CASE("help exits 0") {
    auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("conjecture") != std::string::npos);
}

TEST_CASE("HF_MAX_CELLS caps requests and sweeps") {
    {
        CellCap cap("3");
        CHECK(run({"det", "--name", "catalan", "--n-range", "0..5"}).code == 2);
        auto v = run({"--format", "json", "verify", "--id", "thm6.4", "--mode", "numeric"});
        CHECK(v.code == 0);
        const auto j = nlohmann::json::parse(v.out);
        CHECK(j["cells"].size() == 3);
        CHECK(j["summary"]["truncated"] == true);
    }
    {
        CellCap cap("zero");
        CHECK(run({"seq"}).code == 2);
    }
}

TEST_CASE("json output: schema and string values") {
    auto r = run({"--format", "json", "det", "--name", "catalan", "-k", "1", "--n-range", "0..3"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "det");
    CHECK(j.contains("config"));
    CHECK(j.contains("summary"));
    REQUIRE(j["cells"].size() == 4);
    for (const auto& c : j["cells"]) CHECK(c["value"].is_string());
    CHECK(j["cells"][3]["value"] == "1");

    auto big = run({"--format", "json", "seq", "--name", "central-binomial", "-n", "40"});
    const auto jb = nlohmann::json::parse(big.out);
    CHECK(jb["cells"][39]["value"] == "27217014869199032015600");  // binom(78, 39)

    auto sym = run({"--format", "json", "closed", "--id", "thm6.4", "-m", "3", "-k", "2", "-n", "4", "--symbolic"});
    const auto js = nlohmann::json::parse(sym.out);
    CHECK(js["cells"][0]["value"].get<std::string>().find('b') != std::string::npos);
}

TEST_CASE("verify report cells carry params, predicted, computed, verdict") {
    auto r = run({"--format", "json", "verify", "--id", "thm7.1", "--mode", "numeric", "--max-n", "6", "--m-max",
                  "3"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(!j["cells"].empty());
    for (const auto& c : j["cells"]) {
        CHECK(c.contains("params"));
        CHECK(c["predicted"].is_string());
        CHECK(c["computed"].is_string());
        CHECK(c["verdict"] == "match");
    }
}

TEST_CASE("csv output") {
    auto r = run({"--format", "csv", "favard", "--name", "motzkin", "--count", "3"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "n,s,t\n0,1,1\n1,1,1\n2,1,\n");
}

TEST_CASE("output is deterministic for a fixed seed") {
    const std::vector<std::string> args{"--format", "json", "verify", "--id", "thm4.1", "--seed", "5", "--max-n", "6"};
    CHECK(run(args).out == run(args).out);
    auto other = args;
    other[6] = "6";
    CHECK(run(other).out != run(args).out);
}

TEST_CASE("conjecture harness exits 0 even with mismatches") {
    auto r = run({"--format", "json", "conjecture", "--id", "C7.7-dd", "--m-min", "4", "--m-max", "4", "--max-n",
                  "9", "--no-symbolic"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["summary"]["mismatches"].get<int>() > 0);
    CHECK(j["summary"]["theorem_backed_failures"] == 0);
    CHECK(j.contains("notes"));
}

TEST_CASE("favard and oracle commands") {
    auto f = run({"favard", "--terms", "1,1,2,5,14,42,132,429"});
    CHECK(f.code == 0);
    CHECK(f.out == "s: 1,2,2,2\nt: 1,1,1\n");

    auto w = run({"oracle", "--family", "unrestricted", "-m", "3", "-a", "2", "-b", "-1", "-n", "9"});
    CHECK(w.code == 0);
    auto l = run({"--format", "json", "oracle", "--kind", "lgv", "-m", "3", "-k", "1", "--n-range", "0..4"});
    CHECK(l.code == 0);
    const auto j = nlohmann::json::parse(l.out);
    CHECK(j["summary"]["mismatches"] == 0);
}

TEST_CASE("--out writes the output to a file") {
    const auto path = std::filesystem::temp_directory_path() / "hk_cli_out.txt";
    auto r = run({"--out", path.string(), "seq", "--name", "catalan", "-n", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(text == "1,1,2,5,14\n");
    std::filesystem::remove(path);
}

TEST_CASE("seq --check compares with the closed form") {
    auto r = run({"seq", "--family", "shifted", "-m", "3", "-a", "2/3", "-b", "-5", "-t", "7", "-n", "12", "--check"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all terms match") != std::string::npos);
}
