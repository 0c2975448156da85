#pragma once

#include "proofforge/hypergraph.hpp"
#include "proofforge/weight.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace proofforge {

struct EdgeLabel {
  std::vector<Gci> premises;
  Gci conclusion;
};

enum class Threshold { Numeric, Log2 };

struct Measure {
  std::string name;
  std::function<Weight(const Gci&)> leaf_fn;
  // nullopt = undefined for this step
  std::function<std::optional<Weight>(const EdgeLabel&, const std::vector<Weight>&)> edge_fn;
  bool monotone = true;
  // how a stored weight is compared against a user bound
  Threshold threshold = Threshold::Numeric;

  bool within(const Weight& w, const Weight& bound) const;
  std::string display(const Weight& w) const;
};

Measure depth_measure();
Measure tree_size_measure();
Measure log_depth_measure();
// lookup by CLI name: depth | treesize | logdepth
Measure measure_by_name(const std::string& name);

// bottom-up over the unique incoming edge of every vertex
Weight evaluate(const Measure& m, const Proof& p);
Weight size(const Proof& p);

struct MonotoneReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// for each multiset Q, each element q and each lower value q' from `lower`,
// edge_fn(Q[q := q']) <= edge_fn(Q)
MonotoneReport check_monotone(const Measure& m, const std::vector<EdgeLabel>& labels,
                              const std::vector<std::vector<Weight>>& multisets,
                              const std::vector<Weight>& lower);

}  // namespace proofforge
