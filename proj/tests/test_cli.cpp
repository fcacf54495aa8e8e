#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "cat/cli.hpp"
#include "cat/error.hpp"
#include "cat/io.hpp"
#include "cat/simgen.hpp"

#ifndef CATTREE_BINARY
#error "CATTREE_BINARY must point at the command line tool"
#endif

using namespace cat;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch() {
    const fs::path dir = fs::temp_directory_path() / ("cattree_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

std::string data_file(const fs::path& dir) {
    const std::string path = (dir / "data.csv").string();
    if (!fs::exists(path)) {
        const Run r = run({"simulate", "--p", "4", "--n", "400", "--seed", "3", "--out", path});
        REQUIRE(r.code == 0);
    }
    return path;
}

int shell(const std::string& args) {
    const int status = std::system((std::string(CATTREE_BINARY) + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("edge parsing") {
    const std::vector<std::string> names = {"a", "b", "c"};
    CHECK(parse_edge("1->2", names) == Edge{0, 1});
    CHECK(parse_edge("c->a", names) == Edge{2, 0});
    CHECK_THROWS_AS(parse_edge("1-2", names), InvalidArgument);
    CHECK_THROWS_AS(parse_edge("0->2", names), InvalidArgument);
    CHECK_THROWS_AS(parse_edge("1->d", names), InvalidArgument);
}

TEST_CASE("simulate writes data and truth reproducibly") {
    const fs::path dir = scratch();
    const std::string a = (dir / "a.csv").string(), b = (dir / "b.csv").string();
    CHECK(run({"simulate", "--p", "5", "--n", "50", "--seed", "9", "--out", a}).code == 0);
    CHECK(run({"simulate", "--p", "5", "--n", "50", "--seed", "9", "--out", b, "--truth-out", (dir / "t.json").string()}).code == 0);
    CHECK(read_text_file(a) == read_text_file(b));
    CHECK(read_text_file((dir / "a.truth.json").string()) == read_text_file((dir / "t.json").string()));
    CHECK(read_csv_file(a).p() == 5);
    CHECK(run({"simulate", "--p", "5", "--n", "50", "--out", a}).code == 2);
}

TEST_CASE("learn") {
    const fs::path dir = scratch();
    const std::string data = data_file(dir);
    const Run r = run({"learn", "--input", data});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["p"] == 4);
    CHECK(doc["edges"].size() == 3);
    CHECK(doc["edge_weights"].size() == 3);

    const std::string out = (dir / "tree.json").string(), weights = (dir / "w.csv").string();
    const Run e = run({"learn", "--input", data, "--score", "entropy", "--k", "7", "--out", out, "--weights-out", weights});
    CHECK(e.code == 0);
    CHECK(e.out.rfind("score ", 0) == 0);
    CHECK(read_tree_json(read_text_file(out)).size() == 4);
    CHECK_FALSE(read_text_file(weights).empty());

    const Run s1 = run({"learn", "--input", data, "--split", "--seed", "5"});
    const Run s2 = run({"learn", "--input", data, "--split", "--seed", "5"});
    CHECK(s1.code == 0);
    CHECK(s1.out == s2.out);

    CHECK(run({"learn", "--input", data, "--score", "bogus"}).code == 2);
    CHECK(run({"learn", "--input", (dir / "missing.csv").string()}).code == 2);
    CHECK(run({"learn"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("threads do not change results") {
    const fs::path dir = scratch();
    const std::string data = data_file(dir);
    const Run one = run({"learn", "--input", data, "--score", "entropy", "--threads", "1"});
    const Run two = run({"learn", "--input", data, "--score", "entropy", "--threads", "2"});
    CHECK(one.code == 0);
    CHECK(one.out == two.out);
}

TEST_CASE("test subcommand") {
    const fs::path dir = scratch();
    const std::string data = data_file(dir);
    const DirectedTree truth = read_tree_json(read_text_file((dir / "data.truth.json").string()));
    const Edge e = truth.edges().front();
    const std::string edge = std::to_string(e.from + 1) + "->" + std::to_string(e.to + 1);
    const std::string report = (dir / "test.json").string();
    const Run r = run({"test", "--input", data, "--require", edge, "--out", report});
    CHECK(r.code == 0);
    CHECK(r.out.find("psi 0") != std::string::npos);
    CHECK(nlohmann::json::parse(read_text_file(report))["psi"] == 0);

    CHECK(run({"test", "--input", data, "--require", edge, "--forbid", edge}).code == 2);
    CHECK(run({"test", "--input", data, "--require", "1-2"}).code == 2);
    CHECK(run({"test", "--input", data, "--alpha", "2"}).code == 2);
}

TEST_CASE("gap and metrics") {
    const fs::path dir = scratch();
    const std::string data = data_file(dir);
    const Run g = run({"gap", "--input", data, "--with-piw"});
    REQUIRE(g.code == 0);
    const auto doc = nlohmann::json::parse(g.out);
    CHECK(doc["gap"].get<double>() >= 0.0);
    CHECK(doc.contains("min_edge_reversal"));

    const std::string truth = (dir / "data.truth.json").string();
    const Run m = run({"metrics", "--truth", truth, "--estimate", truth});
    REQUIRE(m.code == 0);
    const auto md = nlohmann::json::parse(m.out);
    CHECK(md["shd"] == 0);
    CHECK(md["sid"] == 0);

    const std::string small = (dir / "small.json").string();
    write_text_file(small, "{\"p\": 2, \"edges\": [[1, 2]]}");
    CHECK(run({"metrics", "--truth", truth, "--estimate", small}).code == 2);
}

TEST_CASE("degenerate data") {
    const fs::path dir = scratch();
    const std::string path = (dir / "constant.csv").string();
    write_text_file(path, "a,b,c\n1,2,3\n1,5,4\n1,3,8\n1,7,1\n1,2,2\n");
    CHECK(run({"learn", "--input", path}).code == 3);
}

TEST_CASE("reproduce") {
    const Run r = run({"reproduce", "closed-form-bounds", "--quiet"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS closed-form-bounds") != std::string::npos);
    CHECK(run({"reproduce", "no-such-experiment"}).code == 2);
}

TEST_CASE("binary exit codes") {
    const fs::path dir = scratch();
    const std::string data = data_file(dir);
    CHECK(shell("--help") == 0);
    CHECK(shell("learn --input " + data) == 0);
    CHECK(shell("learn") == 2);
    CHECK(shell("reproduce no-such-experiment") == 2);
    CHECK(shell("test --input " + data + " --require 1->2 --forbid 1->2") == 2);
    fs::remove_all(dir);
}
