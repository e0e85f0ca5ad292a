#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "posetkit/cli.hpp"
#include "posetkit/decomposition.hpp"
#include "posetkit/io.hpp"
#include "posetkit/oracle.hpp"
#include "posetkit/recognition.hpp"

using namespace posetkit;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// A document written under the temp directory, removed on scope exit.
class TempFile {
 public:
  explicit TempFile(const std::string& text) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("posetkit_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json");
    std::ofstream(path_) << text;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

const char* kPn = R"({"elements":["a","b","c","d"],"relations":[["a","c"],["b","c"],["b","d"]]})";

// Edge lines of a DOT body, e.g. "a" -> "c".
std::set<std::string> dot_edges(const std::string& dot, const std::string& arrow) {
  std::set<std::string> out;
  std::istringstream in(dot);
  for (std::string line; std::getline(in, line);) {
    if (line.find(arrow) != std::string::npos) out.insert(line.substr(line.find_first_not_of(' ')));
  }
  return out;
}

}  // namespace

TEST_CASE("witness on P_N") {
  TempFile f(kPn);
  const auto r = run({"witness", f.path(), "--method", "direct"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["chain"] == json({"a", "c"}));
  CHECK(j["partition"] == json::parse(R"([["a","b"],["c","d"]])"));
  CHECK(json::parse(run({"witness", f.path(), "--method", "decomposed"}).out) == j);
}

TEST_CASE("analyze rejects a cyclic document with exit 2") {
  TempFile f(R"({"elements":["a","b"],"relations":[["a","b"],["b","a"]]})");
  const auto r = run({"analyze", f.path()});
  CHECK(r.code == 2);
  CHECK(r.err.find("CycleError") != std::string::npos);

  const auto j = run({"analyze", f.path(), "--json"});
  CHECK(j.code == 2);
  const json e = json::parse(j.err);
  CHECK(e["error"] == "CycleError");
  CHECK(e.contains("message"));
}

TEST_CASE("input errors exit 2") {
  TempFile bad("{not json");
  CHECK(run({"witness", bad.path()}).code == 2);
  CHECK(run({"witness", "/nonexistent/posetkit.json"}).code == 2);
  TempFile unknown(R"({"elements":["a"],"relations":[["a","z"]]})");
  CHECK(run({"witness", unknown.path()}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"omega", "--family", "tree"}).code == 2);
}

TEST_CASE("verify --n 3 --k 1") {
  const auto r = run({"verify", "--n", "3", "--k", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "19 posets checked, 0 failures\n");
  const auto j = json::parse(run({"verify", "--n", "3", "--k", "1", "--json"}).out);
  CHECK(j["checked"] == 19);
  CHECK(j["failures"].empty());
}

TEST_CASE("kwitness beyond the budget exits 3") {
  TempFile f(R"({"elements":["a","b","c","d","e","f","g"],"relations":[]})");
  const auto r = run({"kwitness", f.path(), "--k", "1"});
  CHECK(r.code == 3);
  const auto j = run({"kwitness", f.path(), "--k", "1", "--json"});
  CHECK(j.code == 3);
  CHECK(json::parse(j.err)["error"] == "BudgetExceeded");
}

TEST_CASE("generate") {
  const auto g = run({"generate", "--model", "grid", "--rows", "2", "--cols", "2"});
  REQUIRE(g.code == 0);
  const Poset grid = to_poset(parse_document(g.out));
  // r0c0 < r0c1, r1c0 < r1c1 with the middle pair incomparable: P_2x2 relabeled.
  CHECK(grid.relation_size() == fixtures::p_2x2().relation_size());
  CHECK(fixtures::inc_pairs(grid) == std::set<std::pair<ElementId, ElementId>>{{"r0c1", "r1c0"}});
  CHECK(height(grid) == 2);

  const auto s = run({"generate", "--model", "unit-semiorder", "--n", "4", "--seed", "7"});
  REQUIRE(s.code == 0);
  CHECK(is_semiorder(to_poset(parse_document(s.out))));

  const auto a = run({"generate", "--model", "random-order", "--n", "40", "--seed", "1"});
  const auto b = run({"generate", "--model", "random-order", "--n", "40", "--seed", "1"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(to_poset(parse_document(a.out)).size() == 40);

  CHECK(run({"generate", "--model", "lattice"}).code == 2);
}

TEST_CASE("JSON round trip for every poset with at most 5 elements") {
  for (std::size_t n = 0; n <= 5; ++n) {
    oracle::for_each_poset(n, [&](const Poset& p) {
      CHECK(to_poset(parse_document(emit_document(to_document(p)))) == p);
    });
  }
}

TEST_CASE("export-dot on P_N") {
  TempFile f(kPn);
  const auto h = run({"export-dot", f.path(), "--view", "hasse"});
  CHECK(h.code == 0);
  CHECK(h.out.rfind("digraph hasse", 0) == 0);
  CHECK(dot_edges(h.out, "->") ==
        std::set<std::string>{R"("a" -> "c";)", R"("b" -> "c";)", R"("b" -> "d";)"});

  const auto i = run({"export-dot", f.path(), "--view", "inc"});
  CHECK(i.out.rfind("graph inc", 0) == 0);
  CHECK(dot_edges(i.out, "--") ==
        std::set<std::string>{R"("a" -- "b";)", R"("a" -- "d";)", R"("c" -- "d";)"});
}

TEST_CASE("analysis commands emit JSON") {
  TempFile f(kPn);
  for (const char* cmd : {"analyze", "dilworth", "mirsky", "components", "recognize"}) {
    const auto r = run({cmd, f.path()});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).is_object());
  }
  CHECK(json::parse(run({"dilworth", f.path()}).out)["antichain"].size() == 2);
  CHECK(json::parse(run({"mirsky", f.path()}).out)["levels"] == json::parse(R"([["a","b"],["c","d"]])"));

  const auto o = json::parse(run({"omega", "--family", "ladder-top", "--prefix", "10"}).out);
  CHECK(o["crossing_inc_edges"] == 0);
  CHECK(o["domination_violations"] == 0);
  CHECK(o["upper"] == json({"top"}));

  const auto l = json::parse(run({"layers", "--family", "ladder", "--prefix", "5", "--from", "x0"}).out);
  CHECK(l["layers"] == json({{"x0"}, {"x1"}, {"x2"}, {"x3"}, {"x4"}}));
}
