#pragma once

#include "proofforge/logic.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace proofforge {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  std::vector<VertexId> sources;  // sorted, duplicate free
  VertexId target = 0;
  std::string rule;               // provenance tag only, may be empty
};

class Hypergraph {
 public:
  VertexId add_vertex(Gci label);
  // duplicate (sources, target) pairs are ignored; returns the id of the new
  // edge or nullopt when it already existed
  std::optional<EdgeId> add_edge(std::vector<VertexId> sources, VertexId target, std::string rule = {});

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const Gci& label(VertexId v) const { return labels_.at(v); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<EdgeId>& incoming(VertexId v) const { return in_.at(v); }
  const std::vector<EdgeId>& outgoing(VertexId v) const { return out_.at(v); }
  // sources need not be sorted
  std::optional<EdgeId> find_edge(std::vector<VertexId> sources, VertexId target) const;
  bool has_vertex(VertexId v) const { return v < labels_.size(); }

  std::vector<VertexId> leaves() const;  // no incoming edge
  std::vector<VertexId> sinks() const;   // no outgoing edge
  std::size_t label_size() const;        // summed label sizes

 private:
  struct Key {
    std::vector<VertexId> sources;
    VertexId target;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };

  std::vector<Gci> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> in_, out_;
  std::unordered_map<Key, EdgeId, KeyHash> index_;
};

struct Proof {
  Hypergraph graph;
  VertexId sink = 0;
};

struct Violation {
  std::string kind;    // "grounded", "sound", "sink", "cycle", "incoming", ...
  std::string detail;
};
using Report = std::vector<Violation>;

struct Homomorphism {
  std::vector<VertexId> map;  // map[v] for every source vertex
};

struct Path {
  std::vector<VertexId> vertices;  // d0, d1, ..., dn
  std::vector<EdgeId> edges;       // edge j leads from vertices[j] to vertices[j+1]
  std::size_t length() const { return edges.size(); }
};

bool is_acyclic(const Hypergraph& h);

// structural proof conditions only (sink, cycle, incoming edges)
Report proof_shape_violations(const Hypergraph& h, VertexId sink);
// throws Error("proof") if the shape is wrong
Proof make_proof(Hypergraph h, VertexId sink);

Report validate_derivation_structure(const Hypergraph& h, const Theory& t, const EntailmentOracle& entails);
Report validate_proof(const Hypergraph& p, const Theory& t, const Gci& goal, const EntailmentOracle& entails);

// vertices with a path to `to` (including `to`)
std::vector<bool> ancestors(const Hypergraph& h, VertexId to);
std::optional<Path> find_path(const Hypergraph& h, VertexId from, VertexId to);
bool check_path(const Hypergraph& h, const Path& p);

// keep[v] selects vertices; edges survive when all their ends survive and
// `edge_filter` accepts them. old->new map is returned through `remap`.
Hypergraph induced_subgraph(const Hypergraph& h, const std::vector<bool>& keep,
                            std::vector<VertexId>* remap = nullptr,
                            const std::function<bool(EdgeId)>& edge_filter = nullptr);

Proof subproof_at(const Proof& p, VertexId v);
Hypergraph remove_subproof(const Proof& p, VertexId v, std::vector<VertexId>* remap = nullptr);

bool is_homomorphism(const Hypergraph& g, const Hypergraph& h, const Homomorphism& m);
std::optional<Homomorphism> find_homomorphism(const Hypergraph& g, const Hypergraph& h);

struct Unraveling {
  Proof tree;
  Homomorphism to_source;  // tree vertex -> original vertex
};
Unraveling unravel_with_map(const Proof& p);
Proof unravel(const Proof& p);
bool is_tree(const Proof& p);

struct Measure;
// Fold P into the structure along h, then keep a
// measure-minimal subproof of the image with the same sink. `is_axiom` marks
// structure vertices that may serve as leaves.
Proof collapse_image(const Proof& p, const Homomorphism& h, const Hypergraph& d,
                     const std::vector<bool>& is_axiom, const Measure& m);

// isomorphism check that respects labels and edges, used by tests
bool isomorphic(const Hypergraph& a, const Hypergraph& b);

}  // namespace proofforge
