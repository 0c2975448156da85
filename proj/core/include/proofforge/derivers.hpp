#pragma once

#include "proofforge/hypergraph.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace proofforge {

struct Budget {
  std::size_t max_vertices = 1'000'000;
  std::size_t max_expand = 10'000;  // premise sets returned by one expand()
};

// defaults, with PROOFFORGE_MAX_VERTICES applied when set
Budget default_budget();

enum class DeriverKind { Elk, Eli };
std::string deriver_name(DeriverKind k);

struct DerivationStructure {
  DeriverKind kind = DeriverKind::Elk;
  Hypergraph graph;
  Theory theory;
  Gci goal;
  std::vector<Concept> universe;  // ELK only: subconcepts of theory and goal
  std::vector<bool> axiom;        // axiom[v] iff label(v) is in the theory
  std::size_t max_premises = 0;   // the p bound exposed to the deciders

  std::optional<VertexId> find(const Gci& g) const;
  bool is_axiom(VertexId v) const { return axiom.at(v); }
  void index_labels();

 private:
  std::unordered_map<std::string, VertexId> index_;
};

// ELK completion rules confined to the subconcept universe; axioms used by R_<= are
// explicit premise vertices
DerivationStructure elk_materialize(const Theory& t, const Gci& goal, const Budget& b = default_budget());
// ELI consequence rules over a normalized theory; exponential, guarded by the budget
DerivationStructure eli_materialize(const Theory& t, const Gci& goal, const Budget& b = default_budget());

using SentenceId = std::uint32_t;

struct Inference {
  std::vector<SentenceId> premises;  // sorted
  std::string rule;
};

// Oracle access to a (possibly implicit) derivation structure. Ids are only
// meaningful for the view that issued them.
class DeriverOracle {
 public:
  virtual ~DeriverOracle() = default;

  // id of the vertex labeled g, if the structure has one
  virtual std::optional<SentenceId> id_of(const Gci& g) const = 0;
  virtual Gci sentence(SentenceId id) const = 0;
  // every premise set from which one rule application yields id
  virtual std::vector<Inference> expand(SentenceId id) const = 0;
  virtual bool is_axiom(SentenceId id) const = 0;
  virtual std::size_t max_premises() const = 0;

  // membership queries for edges and labels
  virtual bool label_query(SentenceId id, const Gci& g) const;
  virtual bool edge_query(std::vector<SentenceId> premises, SentenceId conclusion) const;
};

std::unique_ptr<DeriverOracle> lazy_view(DeriverKind kind, const Theory& t, const Gci& goal,
                                         const Budget& b = default_budget());
// view over an existing structure (ids = vertex ids); the structure must outlive it
std::unique_ptr<DeriverOracle> structure_view(const DerivationStructure& d);

}  // namespace proofforge
