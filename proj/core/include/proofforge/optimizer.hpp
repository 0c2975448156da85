#pragma once

#include "proofforge/derivers.hpp"
#include "proofforge/measures.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace proofforge {

struct SearchStats {
  std::size_t edges_relaxed = 0;
  std::size_t vertices_popped = 0;
  std::size_t peak_queue = 0;
  // debug checks; all zero on a correct run with a monotone measure
  std::size_t pop_order_violations = 0;
  std::size_t double_pops = 0;
  std::size_t acyclicity_mismatches = 0;
  std::size_t invalid_intermediate = 0;
};

struct SearchResult {
  Weight weight;
  Proof proof;
  std::vector<VertexId> origin;  // proof vertex -> structure vertex
  SearchStats stats;
};

struct DijkstraOptions {
  // full acyclicity recheck, pop order and re-pop accounting, validation of
  // every intermediate proof (shape only)
  bool debug = false;
  // popped weights in order, filled when non-null
  std::vector<Weight>* pop_log = nullptr;
};

// Dijkstra-style search for an optimal proof. `axiom[v]` says label(v) is in the theory.
SearchResult dijkstra_optimal(const Hypergraph& h, const std::vector<bool>& axiom, const Measure& m, VertexId goal,
                              const DijkstraOptions& opts = {});
SearchResult dijkstra_optimal(const DerivationStructure& d, const Measure& m, const Gci& goal,
                              const DijkstraOptions& opts = {});

// ---- exhaustive oracle ------------------------------------------------------

using ProofWeight = std::function<Weight(const Proof&)>;
ProofWeight as_proof_weight(const Measure& m);
inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

struct Enumeration {
  std::vector<Proof> proofs;
  std::vector<std::vector<VertexId>> origins;  // per proof: proof vertex -> structure vertex
  bool truncated = false;
};

// every subproof with sink `goal`, deterministic order
Enumeration enumerate_proofs(const Hypergraph& h, const std::vector<bool>& axiom, VertexId goal,
                             std::size_t cap = kDefaultEnumerationCap);
Enumeration enumerate_proofs(const DerivationStructure& d, const Gci& goal, std::size_t cap = kDefaultEnumerationCap);

// minimum over enumerate_proofs; ties go to the lexicographically smallest
// sorted structure-vertex sequence. Throws "budget" when the cap is hit.
SearchResult brute_force_optimal(const Hypergraph& h, const std::vector<bool>& axiom, const ProofWeight& w,
                                 VertexId goal, std::size_t cap = kDefaultEnumerationCap);
SearchResult brute_force_optimal(const DerivationStructure& d, const ProofWeight& w, const Gci& goal,
                                 std::size_t cap = kDefaultEnumerationCap);

// ---- budget deciders --------------------------------------------------------

struct BudgetTuple {
  SentenceId sentence = 0;
  Weight budget;
  friend bool operator==(const BudgetTuple&, const BudgetTuple&) = default;
  friend bool operator<(const BudgetTuple& a, const BudgetTuple& b) {
    if (a.budget == b.budget) return a.sentence < b.sentence;
    return a.budget < b.budget;
  }
};

// Tree over the tuples of S (node 0 is the root labeled epsilon).
struct TupleTree {
  struct Node {
    BudgetTuple tuple;
    int parent = -1;
    std::vector<int> children;
    bool alive = true;
  };
  std::vector<Node> nodes{Node{}};

  int add(const BudgetTuple& t, int parent);
  void remove_leaf(int n);
  std::vector<int> alive_tuples() const;
  std::vector<int> leaves() const;  // alive non-root nodes without children
};

// tree conditions (tuples of S once each, no single children, at most p
// children, one inner child below half, children summing below the parent)
// against the tuple set S; empty iff all hold
std::vector<std::string> tuple_tree_violations(const TupleTree& t, const std::vector<BudgetTuple>& s, std::size_t p);

// can budgets be arranged into some tree meeting those conditions? nullopt when the
// set is too large for the exhaustive search
std::optional<bool> organizable(std::vector<Weight> budgets, std::size_t p);

struct DecideStats {
  std::size_t solve_calls = 0;
  std::size_t memo_hits = 0;
  std::size_t inferences_tried = 0;
  // tree-size S-loop
  std::size_t steps = 0;
  std::size_t max_s = 0;
  std::size_t bound_violations = 0;      // |S| > p log2 q
  std::size_t tree_violations = 0;       // no valid tree exists
  std::size_t organization_searches = 0; // incremental tree broke, searched instead
  std::size_t unchecked = 0;             // S too large for the search
};

struct Decision {
  bool yes = false;
  std::optional<Proof> witness;
  std::optional<Weight> optimum;  // the exact minimum when it is <= the bound
  DecideStats stats;
};

struct DecideOptions {
  bool debug = false;
  bool witness = true;
};

// depth-first search over expand(); bound q on depth (floor taken)
Decision decide_depth_leq(const DeriverOracle& view, const Gci& goal, const Weight& q, const DecideOptions& o = {});
// log-depth bound q, i.e. depth <= 2^q
Decision decide_logdepth_leq(const DeriverOracle& view, const Gci& goal, const Weight& q,
                             const DecideOptions& o = {});
// tuple-set procedure; q < 1 is always false
Decision decide_treesize_leq(const DeriverOracle& view, const Gci& goal, const Weight& q,
                             const DecideOptions& o = {});

}  // namespace proofforge
