#include "doctest.h"

#include "sample.hpp"
#include "oracles.hpp"
#include "proofforge/error.hpp"
#include "proofforge/measures.hpp"
#include "proofforge/sampling.hpp"

using namespace proofforge;

namespace {

bool has_kind(const Report& r, const std::string& k) {
  for (const auto& v : r)
    if (v.kind == k) return true;
  return false;
}

}  // namespace

TEST_CASE("acyclicity") {
  CHECK(is_acyclic(sample::dag().graph));
  Hypergraph loop;
  auto v = loop.add_vertex(parse_gci("A <= A"));
  loop.add_edge({v}, v);
  CHECK_FALSE(is_acyclic(loop));
  Hypergraph two;
  auto a = two.add_vertex(parse_gci("A <= B"));
  auto b = two.add_vertex(parse_gci("B <= A"));
  two.add_edge({a}, b);
  two.add_edge({b}, a);
  CHECK_FALSE(is_acyclic(two));
}

TEST_CASE("duplicate edges are ignored") {
  Hypergraph h;
  auto a = h.add_vertex(parse_gci("A <= B"));
  auto b = h.add_vertex(parse_gci("B <= C"));
  auto c = h.add_vertex(parse_gci("A <= C"));
  CHECK(h.add_edge({b, a}, c).has_value());
  CHECK_FALSE(h.add_edge({a, b}, c).has_value());
  CHECK(h.edge_count() == 1);
  CHECK(h.find_edge({b, a}, c).has_value());
}

TEST_CASE("derivation structure validation") {
  auto el = el_entailment_oracle();
  CHECK(validate_derivation_structure(sample::dag().graph, sample::theory(), el).empty());

  Hypergraph leaf;
  leaf.add_vertex(parse_gci("A <= B"));
  CHECK(validate_derivation_structure(leaf, parse_theory("A <= B\n"), el).empty());

  Hypergraph bad;
  auto ab = bad.add_vertex(parse_gci("A <= B"));
  auto ba = bad.add_vertex(parse_gci("B <= A"));
  bad.add_edge({ab}, ba);
  auto r = validate_derivation_structure(bad, parse_theory("A <= B\n"), el);
  REQUIRE(r.size() == 1);
  CHECK(r.front().kind == "sound");
}

TEST_CASE("proof validation") {
  auto el = el_entailment_oracle();
  CHECK(validate_proof(sample::tree().graph, sample::theory(), sample::goal(), el).empty());
  CHECK(validate_proof(sample::dag().graph, sample::theory(), sample::goal(), el).empty());

  // drop the final edge: two sinks
  Hypergraph cut;
  auto p = sample::dag();
  for (VertexId v = 0; v < p.graph.vertex_count(); ++v) cut.add_vertex(p.graph.label(v));
  cut.add_edge(p.graph.edge(0).sources, p.graph.edge(0).target);
  CHECK(has_kind(validate_proof(cut, sample::theory(), sample::goal(), el), "sink"));

  Hypergraph twice = sample::dag().graph;
  twice.add_edge({0}, 3);
  CHECK(has_kind(proof_shape_violations(twice, 3), "incoming"));
  CHECK_THROWS_AS(make_proof(twice, 3), Error);
}

TEST_CASE("subproofs") {
  auto p = sample::dag();
  auto sub = subproof_at(p, 2);  // A <= ex r.A
  CHECK(sub.graph.vertex_count() == 3);
  CHECK(sub.graph.label(sub.sink).str() == "A <= ex r. A");
  CHECK(subproof_at(p, 0).graph.vertex_count() == 1);
  CHECK(isomorphic(subproof_at(p, p.sink).graph, p.graph));
}

TEST_CASE("removing a subproof") {
  auto p = sample::dag();
  auto h = remove_subproof(p, 2);
  CHECK(h.vertex_count() == 3);
  CHECK(h.edge_count() == 1);
  std::set<std::string> labels;
  for (VertexId v = 0; v < h.vertex_count(); ++v) labels.insert(h.label(v).str());
  CHECK(labels == std::set<std::string>{"A <= B", "A <= ex r. A", "A <= (B and ex r. A)"});

  CHECK(isomorphic(remove_subproof(p, 1), p.graph));
  auto only = remove_subproof(p, p.sink);
  CHECK(only.vertex_count() == 1);
  CHECK(only.edge_count() == 0);
}

TEST_CASE("paths") {
  auto p = sample::dag();
  auto path = find_path(p.graph, 1, 3);
  REQUIRE(path.has_value());
  CHECK(path->length() == 2);
  CHECK(check_path(p.graph, *path));
  CHECK_FALSE(find_path(p.graph, 3, 1).has_value());
  auto anc = ancestors(p.graph, 2);
  CHECK(anc == std::vector<bool>{true, true, true, false});
}

TEST_CASE("homomorphisms between the two samples") {
  auto t = sample::tree(), d = sample::dag();
  auto h = find_homomorphism(t.graph, d.graph);
  REQUIRE(h.has_value());
  CHECK(is_homomorphism(t.graph, d.graph, *h));
  CHECK(h->map[0] == h->map[3]);  // both A <= B land on one vertex
  CHECK_FALSE(find_homomorphism(d.graph, t.graph).has_value());
  auto id = find_homomorphism(d.graph, d.graph);
  REQUIRE(id.has_value());
  for (VertexId v = 0; v < 4; ++v) CHECK(id->map[v] == v);
}

TEST_CASE("unraveling") {
  auto u = unravel(sample::dag());
  CHECK(is_tree(u));
  CHECK(isomorphic(u.graph, sample::tree().graph));
  CHECK(isomorphic(unravel(sample::tree()).graph, sample::tree().graph));
  Hypergraph one;
  one.add_vertex(parse_gci("A <= B"));
  CHECK(unravel(make_proof(one, 0)).graph.vertex_count() == 1);
}

TEST_CASE("unraveling size is the number of paths to the sink") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    auto p = random_proof(rng);
    auto u = unravel_with_map(p);
    CHECK(static_cast<long>(u.tree.graph.vertex_count()) == oracle::path_count(p));
    CHECK(is_homomorphism(u.tree.graph, p.graph, u.to_source));
  }
}

TEST_CASE("folding a proof into its image") {
  auto t = sample::tree();
  auto d = sample::dag();
  auto h = find_homomorphism(t.graph, d.graph);
  REQUIRE(h.has_value());
  auto ax = sample::axioms(d.graph);
  auto q = collapse_image(t, *h, d.graph, ax, tree_size_measure());
  CHECK(isomorphic(q.graph, d.graph));
  CHECK(evaluate(tree_size_measure(), q) == Weight(5));

  // already injective: unchanged
  auto id = find_homomorphism(d.graph, d.graph);
  CHECK(isomorphic(collapse_image(d, *id, d.graph, ax, depth_measure()).graph, d.graph));
  // duplicated lemma shrinks
  CHECK(q.graph.vertex_count() < t.graph.vertex_count());
}

TEST_CASE("folding never gets heavier, on random samples") {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    auto s = random_image_sample(rng);
    REQUIRE(is_homomorphism(s.proof.graph, s.structure, s.map));
    for (auto agg : {oracle::Agg::Max, oracle::Agg::Sum}) {
      const Measure m = agg == oracle::Agg::Max ? depth_measure() : tree_size_measure();
      auto q = collapse_image(s.proof, s.map, s.structure, s.axiom, m);
      CHECK(oracle::weigh(q, agg) <= oracle::weigh(s.proof, agg));
      CHECK(q.graph.label(q.sink) == s.proof.graph.label(s.proof.sink));
    }
  }
}
