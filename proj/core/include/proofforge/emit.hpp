#pragma once

#include "proofforge/generators.hpp"
#include "proofforge/hypergraph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace proofforge {

// {"edges":[{"rule","sources","target"}],"sink":id,"vertices":[{"id","is_axiom","label"}]}
// keys sorted, two-space indent. `axiom` may be empty (all false).
std::string graph_json(const Hypergraph& h, const std::vector<bool>& axiom, std::optional<VertexId> sink);
std::string proof_json(const Proof& p, const Theory& t);
std::string structure_json(const DerivationStructure& d);

// boxes for sentences (axioms drawn with penwidth=2), one point node per edge
std::string graph_dot(const Hypergraph& h, const std::vector<bool>& axiom, std::optional<VertexId> sink);
std::string proof_dot(const Proof& p, const Theory& t);

// sidecar {"deriver","goal","measure","meta","threshold"}; threshold as a string
std::string instance_json(const ReductionInstance& r);

struct InstanceSidecar {
  Gci goal;
  Weight threshold;
  std::string measure;
  std::string deriver;
};
InstanceSidecar parse_instance_json(const std::string& text);

}  // namespace proofforge
