#pragma once

#include "proofforge/hypergraph.hpp"

// The running example: T = {A <= B, B <= ex r.A}, goal A <= B and ex r.A.
namespace sample {

using namespace proofforge;

inline Theory theory() { return parse_theory("A <= B\nB <= ex r. A\n"); }
inline Gci goal() { return parse_gci("A <= (B and ex r. A)"); }

// shared A <= B: 4 vertices
inline Proof dag() {
  Hypergraph h;
  auto ab = h.add_vertex(parse_gci("A <= B"));
  auto bra = h.add_vertex(parse_gci("B <= ex r. A"));
  auto ara = h.add_vertex(parse_gci("A <= ex r. A"));
  auto g = h.add_vertex(goal());
  h.add_edge({ab, bra}, ara, "R<=");
  h.add_edge({ab, ara}, g, "R+and");
  return make_proof(std::move(h), g);
}

// A <= B duplicated: 5 vertices
inline Proof tree() {
  Hypergraph h;
  auto ab = h.add_vertex(parse_gci("A <= B"));
  auto bra = h.add_vertex(parse_gci("B <= ex r. A"));
  auto ara = h.add_vertex(parse_gci("A <= ex r. A"));
  auto ab2 = h.add_vertex(parse_gci("A <= B"));
  auto g = h.add_vertex(goal());
  h.add_edge({ab, bra}, ara, "R<=");
  h.add_edge({ab2, ara}, g, "R+and");
  return make_proof(std::move(h), g);
}

inline std::vector<bool> axioms(const Hypergraph& h) {
  Theory t = theory();
  std::vector<bool> a(h.vertex_count());
  for (VertexId v = 0; v < h.vertex_count(); ++v) a[v] = t.contains(h.label(v));
  return a;
}

}  // namespace sample
