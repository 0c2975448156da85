#include "doctest.h"
#include "json.hpp"

#include "proofforge/cli.hpp"
#include "proofforge/generators.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace proofforge;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
  std::string last_line() const {
    auto s = out;
    while (!s.empty() && s.back() == '\n') s.pop_back();
    auto p = s.rfind('\n');
    return p == std::string::npos ? s : s.substr(p + 1);
  }
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string sample_thy = std::string(PF_FIXTURES) + "/sample.thy";

std::string scratch(const std::string& name) {
  const char* env = std::getenv("PF_SCRATCH");
  fs::path dir = env ? env : (fs::temp_directory_path() / "pf_cli_test");
  fs::create_directories(dir);
  return (dir / name).string();
}

// rebuild a proof from the emitted JSON
Proof from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  Hypergraph h;
  for (const auto& v : j["vertices"]) h.add_vertex(parse_gci(v["label"].get<std::string>()));
  for (const auto& e : j["edges"]) h.add_edge(e["sources"].get<std::vector<VertexId>>(), e["target"].get<VertexId>());
  return make_proof(std::move(h), j["sink"].get<VertexId>());
}

std::string without_last_line(const std::string& s) {
  auto t = s;
  t.pop_back();
  return t.substr(0, t.rfind('\n') + 1);
}

}  // namespace

TEST_CASE("prove on the sample files") {
  auto depth = invoke({"prove", sample_thy, "--measure", "depth"});
  CHECK(depth.code == 0);
  CHECK(depth.last_line() == "weight: 2");
  CHECK(invoke({"prove", sample_thy, "--measure", "treesize"}).last_line() == "weight: 5");
  CHECK(invoke({"prove", sample_thy, "--measure", "size"}).last_line() == "weight: 4");
  CHECK(invoke({"prove", sample_thy, "--measure", "logdepth"}).last_line() == "weight: 1.000000");
}

TEST_CASE("the weight line matches the emitted proof") {
  for (const char* m : {"depth", "treesize"}) {
    auto r = invoke({"prove", sample_thy, "--measure", m, "--debug-invariants"});
    REQUIRE(r.code == 0);
    Proof p = from_json(without_last_line(r.out));
    CHECK(r.last_line() == "weight: " + evaluate(measure_by_name(m), p).str());
  }
}

TEST_CASE("decide exit codes") {
  CHECK(invoke({"decide", sample_thy, "--measure", "treesize", "--bound", "4"}).code == 1);
  CHECK(invoke({"decide", sample_thy, "--measure", "treesize", "--bound", "5"}).code == 0);
  CHECK(invoke({"decide", sample_thy, "--measure", "depth", "--bound", "1"}).code == 1);
  // sidecar threshold 2 with depth
  CHECK(invoke({"decide", sample_thy}).code == 0);
  auto w = invoke({"decide", sample_thy, "--measure", "depth", "--bound", "2", "--witness"});
  CHECK(w.out.rfind("yes\n", 0) == 0);
  CHECK(w.out.find("\"sink\"") != std::string::npos);
  auto bad = invoke({"decide", sample_thy, "--bound", "-1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.rfind("error: ", 0) == 0);
}

TEST_CASE("errors are one machine-readable line") {
  auto path = scratch("broken.thy");
  std::ofstream(path) << "A <= B\nA <= (B and\n";
  auto r = invoke({"parse", path});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("error: syntax: line 2", 0) == 0);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);

  CHECK(invoke({"prove", sample_thy, "--frobnicate"}).code == 2);
  CHECK(invoke({"prove", "/nonexistent.thy", "--goal", "A <= B"}).err.rfind("error: io:", 0) == 0);
  auto budget = invoke({"saturate", sample_thy, "--max-vertices", "2"});
  CHECK(budget.code == 2);
  CHECK(budget.err.rfind("error: budget:", 0) == 0);
}

TEST_CASE("output is deterministic and sorted") {
  auto a = invoke({"saturate", sample_thy}), b = invoke({"saturate", sample_thy});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto e = a.out.find("\"edges\""), s = a.out.find("\"sink\""), v = a.out.find("\"vertices\"");
  CHECK(e < s);
  CHECK(s < v);
  auto dot = invoke({"saturate", sample_thy, "--format", "dot"});
  CHECK(dot.out.rfind("digraph", 0) == 0);
  CHECK(dot.out.find("penwidth=2") != std::string::npos);
}

TEST_CASE("generated instances round trip") {
  struct Case {
    std::vector<std::string> args;
    int want;
  };
  const std::string fx = PF_FIXTURES;
  std::vector<Case> cases{
      {{"qbf", "E x A y : x | !y"}, 0},
      {{"qbf", "E x A y : (x | y) & (!x | !y)"}, 1},
      {{"tm", fx + "/parity.tm", "aa"}, 0},
      {{"tm", fx + "/parity.tm", "a"}, 1},
      {{"chain", sample_thy, "A <= B"}, 0},
      {{"deep", "2"}, 1},
  };
  int i = 0;
  for (const auto& c : cases) {
    auto prefix = scratch("gen" + std::to_string(i++));
    std::vector<std::string> args{"gen"};
    args.insert(args.end(), c.args.begin(), c.args.end());
    args.insert(args.end(), {"-o", prefix});
    auto g = invoke(args);
    REQUIRE_MESSAGE(g.code == 0, g.err);
    CHECK(invoke({"parse", prefix + ".thy"}).code == 0);
    CHECK(invoke({"saturate", prefix + ".thy"}).code == 0);
    auto d = invoke({"decide", prefix + ".thy", "--debug-invariants"});
    CHECK_MESSAGE(d.code == c.want, c.args.front(), " ", c.args.back(), " ", d.err);
  }
}

TEST_CASE("several instances in parallel") {
  auto a = scratch("par_a"), b = scratch("par_b");
  REQUIRE(invoke({"gen", "qbf", "E x : x", "-o", a}).code == 0);
  REQUIRE(invoke({"gen", "qbf", "A x : x", "-o", b}).code == 0);
  auto r = invoke({"decide", a + ".thy", b + ".thy", "--jobs", "2"});
  CHECK(r.code == 1);
  CHECK(r.out == a + ".thy: yes\n" + b + ".thy: no\n");
}

TEST_CASE("selftest") {
  auto r = invoke({"selftest", "--seed", "4", "--count", "30"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
