#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "decycle/cli.hpp"

using namespace decycle;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    auto dir = fs::temp_directory_path() / "decycle_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

}  // namespace

TEST_CASE("nabla") {
    auto r = run({"nabla", "pow3", "9"});
    CHECK(r.code == 0);
    CHECK(r.out == "5 (Theorem 5, n ≡ 1 mod 4)\n");
    CHECK(run({"nabla", "c3xc", "3"}).out == "4 (Theorem 2)\n");
    CHECK(run({"nabla", "pow2", "2"}).code == kExitOutOfRange);
    CHECK(run({"nabla", "pow2", "ten"}).code == kExitUsage);
    CHECK(run({"nabla", "torus", "5"}).code == kExitUsage);
    CHECK(run({"nabla", "powm", "12", "4"}).code == kExitOutOfRange);
    CHECK(run({"nabla"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("construct then verify") {
    auto path = scratch("pow2_10.json");
    auto r = run({"construct", "pow2", "10", "-o", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("verified") != std::string::npos);
    auto doc = nlohmann::json::parse(slurp(path));
    CHECK(doc["set"] == nlohmann::json::array({0, 3, 6, 9}));
    CHECK(doc["status"] == "verified");

    auto v = run({"verify", path.string()});
    CHECK(v.code == 0);
    CHECK(v.out.rfind("verified\n", 0) == 0);

    SUBCASE("tampered set") {
        doc["set"] = nlohmann::json::array({0, 3, 6});
        auto t = scratch("tampered.json");
        write(t, doc.dump());
        auto f = run({"verify", t.string()});
        CHECK(f.code == kExitRefuted);
        CHECK(f.out.find("failed") != std::string::npos);
        CHECK(f.out.find("witness cycle:") != std::string::npos);
    }
    SUBCASE("malformed json") {
        auto t = scratch("broken.json");
        write(t, "{\"schema_version\": ");
        CHECK(run({"verify", t.string()}).code == kExitUsage);
    }
    SUBCASE("missing file") {
        CHECK(run({"verify", scratch("absent.json").string()}).code == kExitIo);
    }
}

TEST_CASE("construct other families") {
    auto c4 = run({"construct", "c4xc", "8"});
    CHECK(c4.code == 0);
    CHECK(nlohmann::json::parse(c4.out)["cardinality"] == 12);
    CHECK(c4.err.find("verified") != std::string::npos);

    auto p3 = run({"construct", "pow3", "11"});
    CHECK(nlohmann::json::parse(p3.out)["set"] == nlohmann::json::array({0, 1, 2, 4, 5, 8, 9}));

    CHECK(run({"construct", "powm", "12", "4"}).code == kExitOutOfRange);
    CHECK(run({"construct", "pow2", "10", "-o", "/nonexistent-dir/x.json"}).code == kExitIo);
}

TEST_CASE("oracle") {
    auto r = run({"oracle", "c4xc", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("8\n", 0) == 0);
    CHECK(run({"oracle", "pow3", "13"}).out.rfind("7\n", 0) == 0);

    auto tri = scratch("triangle.txt");
    write(tri, "3\n0 1\n1 2\n2 0\n");
    auto t = run({"oracle", "--edges", tri.string()});
    CHECK(t.code == 0);
    CHECK(t.out.rfind("1\n", 0) == 0);

    auto bad = scratch("bad_edges.txt");
    write(bad, "3\n0 1\n1\n");
    CHECK(run({"oracle", "--edges", bad.string()}).code == kExitUsage);
    CHECK(run({"oracle", "--edges", scratch("none.txt").string()}).code == kExitIo);
    CHECK(run({"oracle", "c4xc", "7", "--node-budget", "2"}).code == kExitResourceLimit);
    CHECK(run({"oracle", "pow2", "12", "--mode", "bnb", "--no-reductions"}).out.rfind("5\n", 0) == 0);
    CHECK(run({"oracle", "pow2", "12", "--mode", "fast"}).code == kExitUsage);
    CHECK(run({"oracle", "powm", "11", "4"}).code == 0);
}

TEST_CASE("table") {
    auto r = run({"table", "c4xc", "4..6", "--oracle"});
    CHECK(r.code == 0);
    CHECK(r.out.find("MISMATCH") == std::string::npos);
    std::istringstream lines(r.out);
    std::string header, line;
    std::getline(lines, header);
    std::vector<std::pair<int, int>> rows;
    while (std::getline(lines, line)) {
        std::istringstream cols(line);
        int n, formula, bv, best, oracle;
        cols >> n >> formula >> bv >> best >> oracle;
        CHECK(formula == oracle);
        rows.emplace_back(n, oracle);
    }
    CHECK(rows == std::vector<std::pair<int, int>>{{4, 6}, {5, 8}, {6, 9}});

    auto concurrent = run({"table", "pow2", "4..16", "--oracle", "-j", "4"});
    CHECK(concurrent.code == 0);
    CHECK(concurrent.out.find("MISMATCH") == std::string::npos);

    auto plain = run({"table", "pow3", "5..14"});
    CHECK(plain.code == 0);
    std::istringstream p(plain.out);
    std::getline(p, header);
    while (std::getline(p, line)) {
        std::istringstream cols(line);
        int n, formula, bv, best;
        cols >> n >> formula >> bv >> best;
        if (n % 4 == 0)
            CHECK(best == formula - 1);
        else
            CHECK(best == formula);
    }
    CHECK(run({"table", "pow3", "9..5"}).code == kExitUsage);
    CHECK(run({"table", "pow3", "4..9"}).code == kExitOutOfRange);
}

TEST_CASE("export") {
    auto cert = scratch("c4.json");
    REQUIRE(run({"construct", "c4xc", "4", "-o", cert.string()}).code == 0);
    auto r = run({"export", "c4xc", "4", "--cert", cert.string()});
    CHECK(r.code == 0);
    std::size_t filled = 0, bold = 0, pos = 0;
    for (std::size_t at = 0; (at = r.out.find("style=filled", at)) != std::string::npos; ++at)
        ++filled;
    for (std::size_t at = 0; (at = r.out.find("penwidth=3", at)) != std::string::npos; ++at)
        ++bold;
    for (std::size_t at = 0; (at = r.out.find("pos=", at)) != std::string::npos; ++at)
        ++pos;
    CHECK(filled == 6);
    // 10 surviving vertices forming a forest: bold edges = 10 - components.
    CHECK(bold > 0);
    CHECK(bold < 10);
    CHECK(pos == 16);

    auto plain = run({"export", "pow2", "7"});
    CHECK(plain.out.find("style=filled") == std::string::npos);
    CHECK(plain.out.find("pos=") == std::string::npos);
    CHECK(plain.out.rfind("graph G {", 0) == 0);

    auto dot = scratch("out.dot");
    CHECK(run({"export", "pow2", "7", "-o", dot.string()}).code == 0);
    CHECK(slurp(dot) == plain.out);

    CHECK(run({"export", "c4xc", "5", "--cert", cert.string()}).code == kExitUsage);
}

TEST_CASE("adjacency and gadget") {
    auto r = run({"adjacency", "c3xc", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("0: 1 2 3 6\n", 0) == 0);

    auto g = run({"gadget"});
    CHECK(g.code == 0);
    CHECK(g.out.find("matches stored construction") != std::string::npos);
}
