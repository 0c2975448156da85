#pragma once

#include "proofforge/hypergraph.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace proofforge {

using Rng = std::mt19937_64;

// Random labelled hypergraph with distinct labels. Vertices without incoming
// edges are marked as axioms so every vertex has a chance to be derivable;
// `goal` is a derivable vertex.
struct RandomStructure {
  Hypergraph graph;
  std::vector<bool> axiom;
  VertexId goal = 0;
};
RandomStructure random_structure(Rng& rng, std::size_t max_vertices = 10, std::size_t max_premises = 3);

// Random tree over a small label pool, hash-consed into a DAG (identical
// subtrees share a vertex).
Proof random_proof(Rng& rng, std::size_t label_pool = 5, std::size_t max_depth = 4, std::size_t max_premises = 3);

// A proof, a structure it maps into and the map. The structure is the
// quotient of the proof by label plus some random extra vertices and edges;
// images of proof leaves are axioms.
struct ImageSample {
  Proof proof;
  Hypergraph structure;
  std::vector<bool> axiom;
  Homomorphism map;
};
ImageSample random_image_sample(Rng& rng);

// the sub-hypergraph of `d` hit by `h(p)`: image vertices and image edges only
Hypergraph image_of(const Proof& p, const Homomorphism& h, const Hypergraph& d, std::vector<VertexId>* remap = nullptr);

}  // namespace proofforge
