#include "doctest.h"

#include "sample.hpp"
#include "proofforge/derivers.hpp"
#include "proofforge/error.hpp"
#include "proofforge/generators.hpp"

#include <cstdlib>
#include <random>

using namespace proofforge;

namespace {

std::set<std::string> rules_into(const DerivationStructure& d, const Gci& g) {
  std::set<std::string> out;
  auto v = d.find(g);
  if (!v) return out;
  for (auto e : d.graph.incoming(*v)) out.insert(d.graph.edge(e).rule);
  return out;
}

bool edge_between(const DerivationStructure& d, const std::vector<std::string>& prem, const std::string& concl) {
  std::vector<VertexId> s;
  for (const auto& p : prem) {
    auto v = d.find(parse_gci(p));
    if (!v) return false;
    s.push_back(*v);
  }
  auto t = d.find(parse_gci(concl));
  return t && d.graph.find_edge(s, *t).has_value();
}

}  // namespace

TEST_CASE("ELK structure of the sample instance") {
  auto d = elk_materialize(sample::theory(), sample::goal());
  CHECK(d.find(sample::goal()).has_value());
  auto h = find_homomorphism(sample::dag().graph, d.graph);
  CHECK(h.has_value());
  CHECK(edge_between(d, {"A <= B", "B <= ex r. A"}, "A <= ex r. A"));
  CHECK(edge_between(d, {"A <= B", "A <= ex r. A"}, "A <= (B and ex r. A)"));
  CHECK(validate_derivation_structure(d.graph, d.theory, el_entailment_oracle()).empty());
  for (VertexId v = 0; v < d.graph.vertex_count(); ++v) CHECK(d.is_axiom(v) == d.theory.contains(d.graph.label(v)));
}

TEST_CASE("ELK tautologies") {
  auto d = elk_materialize(Theory(Dialect::EL), parse_gci("A <= A"));
  auto v = d.find(parse_gci("A <= A"));
  REQUIRE(v.has_value());
  CHECK(d.graph.find_edge({}, *v).has_value());
  CHECK(rules_into(d, parse_gci("A <= A")).count("R0"));
}

TEST_CASE("ELK chain through an existential") {
  Theory t = parse_theory("A <= ex r. B\nB <= C\nex r. C <= D\n");
  auto d = elk_materialize(t, parse_gci("A <= D"));
  CHECK(d.find(parse_gci("A <= D")).has_value());
  CHECK(edge_between(d, {"A <= ex r. B", "B <= C"}, "A <= ex r. C"));
  CHECK(edge_between(d, {"A <= ex r. C", "ex r. C <= D"}, "A <= D"));
  CHECK(validate_derivation_structure(d.graph, t, el_entailment_oracle()).empty());
}

TEST_CASE("ELI rules") {
  Theory t = parse_theory("# dialect: ELI\n(A and B) <= C\n");
  auto d = eli_materialize(t, parse_gci("(A and B) <= C"));
  auto v = d.find(parse_gci("(A and B) <= A"));
  REQUIRE(v.has_value());
  CHECK(d.graph.find_edge({}, *v).has_value());
  CHECK(d.find(parse_gci("(A and B) <= C")).has_value());

  Theory u = parse_theory("# dialect: ELI\nA <= ex r. B\nB <= all inv(r). C\n");
  auto e = eli_materialize(u, parse_gci("A <= C"));
  CHECK(edge_between(e, {"A <= ex r. B", "B <= all inv(r). C"}, "A <= C"));
  CHECK(rules_into(e, parse_gci("A <= C")).count("CR3"));
  CHECK(validate_derivation_structure(e.graph, u, eli_entailment_oracle()).empty());

  Theory w = parse_theory("# dialect: ELI\nA <= ex r. B\nA <= all r. C\n");
  auto f = eli_materialize(w, parse_gci("A <= A"));
  CHECK(edge_between(f, {"A <= ex r. B", "A <= all r. C"}, "A <= ex r. (B and C)"));
  CHECK(validate_derivation_structure(f.graph, w, eli_entailment_oracle()).empty());
}

TEST_CASE("ELI structure needs normal form") {
  CHECK_THROWS_AS(eli_materialize(parse_theory("A <= ex r. ex s. B\n"), parse_gci("A <= B")), Error);
}

TEST_CASE("QBF instance reaches its goal") {
  auto inst = qbf_to_eli(parse_qbf("E x : x"));
  auto d = eli_materialize(normalize_eli(inst.theory).theory, inst.goal);
  CHECK(d.find(inst.goal).has_value());
}

TEST_CASE("oracle access") {
  auto view = lazy_view(DeriverKind::Elk, sample::theory(), sample::goal());
  auto ab = view->id_of(parse_gci("A <= B"));
  auto bra = view->id_of(parse_gci("B <= ex r. A"));
  auto ara = view->id_of(parse_gci("A <= ex r. A"));
  auto g = view->id_of(sample::goal());
  REQUIRE((ab && bra && ara && g));
  CHECK(view->edge_query({*ab, *bra}, *ara));
  CHECK_FALSE(view->edge_query({*bra}, *ara));
  CHECK(view->label_query(*ab, parse_gci("A <= B")));
  CHECK_FALSE(view->label_query(*ab, parse_gci("B <= A")));
  auto inf = view->expand(*g);
  REQUIRE(inf.size() == 1);
  std::set<std::string> prem;
  for (auto p : inf.front().premises) prem.insert(view->sentence(p).str());
  CHECK(prem == std::set<std::string>{"A <= B", "A <= ex r. A"});
  CHECK(view->is_axiom(*ab));
  CHECK_FALSE(view->is_axiom(*g));
}

TEST_CASE("lazy ELK view agrees with the materialized structure") {
  std::mt19937 rng(3);
  const char* names[] = {"A", "B", "C", "D"};
  for (int round = 0; round < 60; ++round) {
    Theory t(Dialect::EL);
    for (int i = 0; i < 5; ++i) {
      Concept l = Concept::name(names[rng() % 4]), r = Concept::name(names[rng() % 4]);
      if (rng() % 3 == 0) r = Concept::exists(Role{"r"}, r);
      if (rng() % 3 == 0) l = Concept::conj(l, Concept::name(names[rng() % 4]));
      t.add(Gci{l, r});
    }
    Gci goal{Concept::name("A"), Concept::name(names[rng() % 4])};
    auto d = elk_materialize(t, goal);
    auto view = lazy_view(DeriverKind::Elk, t, goal);
    auto lazy = view->id_of(goal);
    CHECK(lazy.has_value() == d.find(goal).has_value());
    if (!lazy) continue;
    std::set<std::set<std::string>> a, b;
    for (const auto& inf : view->expand(*lazy)) {
      std::set<std::string> s;
      for (auto p : inf.premises) s.insert(view->sentence(p).str());
      a.insert(s);
    }
    for (auto e : d.graph.incoming(*d.find(goal))) {
      std::set<std::string> s;
      for (auto p : d.graph.edge(e).sources) s.insert(d.graph.label(p).str());
      b.insert(s);
    }
    CHECK(a == b);
  }
}

TEST_CASE("budget") {
  Budget tiny;
  tiny.max_vertices = 3;
  try {
    elk_materialize(sample::theory(), sample::goal(), tiny);
    FAIL("no budget error");
  } catch (const Error& e) {
    CHECK(e.code() == "budget");
  }
  setenv("PROOFFORGE_MAX_VERTICES", "12", 1);
  CHECK(default_budget().max_vertices == 12);
  setenv("PROOFFORGE_MAX_VERTICES", "many", 1);
  CHECK_THROWS_AS(default_budget(), Error);
  unsetenv("PROOFFORGE_MAX_VERTICES");
  CHECK(default_budget().max_vertices == Budget{}.max_vertices);
}
