#include "engines.hpp"

#include <algorithm>
#include <mutex>

namespace proofforge {

bool DeriverOracle::label_query(SentenceId id, const Gci& g) const {
  auto own = id_of(g);
  return own && *own == id;
}

bool DeriverOracle::edge_query(std::vector<SentenceId> premises, SentenceId conclusion) const {
  std::sort(premises.begin(), premises.end());
  premises.erase(std::unique(premises.begin(), premises.end()), premises.end());
  for (const auto& inf : expand(conclusion))
    if (inf.premises == premises) return true;
  return false;
}

namespace {

std::vector<Inference> incoming(const Hypergraph& h, VertexId v, std::size_t cap) {
  std::vector<Inference> out;
  for (auto e : h.incoming(v)) {
    if (out.size() >= cap)
      throw Error("budget", "more than " + std::to_string(cap) + " premise sets for " + h.label(v).str());
    out.push_back(Inference{h.edge(e).sources, h.edge(e).rule});
  }
  return out;
}

class StructureView final : public DeriverOracle {
 public:
  StructureView(const DerivationStructure& d, std::size_t cap) : d_(d), cap_(cap) {}

  std::optional<SentenceId> id_of(const Gci& g) const override { return d_.find(g); }
  Gci sentence(SentenceId id) const override { return d_.graph.label(id); }
  std::vector<Inference> expand(SentenceId id) const override { return incoming(d_.graph, id, cap_); }
  bool is_axiom(SentenceId id) const override { return d_.is_axiom(id); }
  std::size_t max_premises() const override { return d_.max_premises; }

 private:
  const DerivationStructure& d_;
  std::size_t cap_;
};

// contexts are saturated the first time something about their lhs is asked
class ElkView final : public DeriverOracle {
 public:
  ElkView(const Theory& t, const Gci& goal, const Budget& b) : e_(t, goal, b), cap_(b.max_expand) {}

  std::optional<SentenceId> id_of(const Gci& g) const override {
    std::lock_guard lock(mu_);
    if (auto v = e_.g.find(g)) return *v;
    ensure(g.lhs);
    return e_.g.find(g);
  }
  Gci sentence(SentenceId id) const override {
    std::lock_guard lock(mu_);
    return e_.g.graph.label(id);
  }
  std::vector<Inference> expand(SentenceId id) const override {
    std::lock_guard lock(mu_);
    ensure(e_.g.graph.label(id).lhs);
    return incoming(e_.g.graph, id, cap_);
  }
  bool is_axiom(SentenceId id) const override {
    std::lock_guard lock(mu_);
    return e_.g.axiom.at(id);
  }
  std::size_t max_premises() const override { return e_.max_premises; }

 private:
  void ensure(Concept c) const {
    if (e_.is_active(c) || !e_.in_universe(c)) return;
    e_.activate(c);
    e_.run();
  }

  mutable std::mutex mu_;
  mutable detail::ElkEngine e_;
  std::size_t cap_;
};

// "appears in T'" is a global side condition, so the first query
// materializes everything and later ones read the result
class EliView final : public DeriverOracle {
 public:
  EliView(const Theory& t, const Gci& goal, const Budget& b) : t_(t), goal_(goal), b_(b) {}

  std::optional<SentenceId> id_of(const Gci& g) const override { return get().find(g); }
  Gci sentence(SentenceId id) const override { return get().graph.label(id); }
  std::vector<Inference> expand(SentenceId id) const override { return incoming(get().graph, id, b_.max_expand); }
  bool is_axiom(SentenceId id) const override { return get().is_axiom(id); }
  std::size_t max_premises() const override { return get().max_premises; }

 private:
  const DerivationStructure& get() const {
    std::lock_guard lock(mu_);
    if (!d_) d_ = eli_materialize(t_, goal_, b_);
    return *d_;
  }

  Theory t_;
  Gci goal_;
  Budget b_;
  mutable std::mutex mu_;
  mutable std::optional<DerivationStructure> d_;
};

}  // namespace

std::unique_ptr<DeriverOracle> lazy_view(DeriverKind kind, const Theory& t, const Gci& goal, const Budget& b) {
  if (kind == DeriverKind::Elk) return std::make_unique<ElkView>(t, goal, b);
  return std::make_unique<EliView>(t, goal, b);
}

std::unique_ptr<DeriverOracle> structure_view(const DerivationStructure& d) {
  return std::make_unique<StructureView>(d, default_budget().max_expand);
}

}  // namespace proofforge
