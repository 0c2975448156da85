#include "engines.hpp"

#include <algorithm>
#include <cstdlib>

namespace proofforge {

Budget default_budget() {
  Budget b;
  if (const char* env = std::getenv("PROOFFORGE_MAX_VERTICES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw Error("usage", std::string("PROOFFORGE_MAX_VERTICES is not a positive integer: ") + env);
    b.max_vertices = static_cast<std::size_t>(v);
  }
  return b;
}

std::string deriver_name(DeriverKind k) { return k == DeriverKind::Elk ? "elk" : "eli"; }

std::optional<VertexId> DerivationStructure::find(const Gci& g) const {
  auto it = index_.find(g.str());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void DerivationStructure::index_labels() {
  index_.clear();
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    auto [_, fresh] = index_.emplace(graph.label(v).str(), v);
    if (!fresh) throw Error("internal", "two vertices labeled " + graph.label(v).str());
  }
}

namespace detail {

VertexId Graphing::vertex(const Gci& l, bool is_axiom) {
  auto key = l.str();
  auto it = index.find(key);
  if (it != index.end()) return it->second;
  if (graph.vertex_count() >= max_vertices)
    throw Error("budget", "derivation structure exceeds " + std::to_string(max_vertices) + " vertices");
  VertexId v = graph.add_vertex(l);
  axiom.push_back(is_axiom);
  index.emplace(std::move(key), v);
  return v;
}

std::optional<VertexId> Graphing::find(const Gci& l) const {
  auto it = index.find(l.str());
  if (it == index.end()) return std::nullopt;
  return it->second;
}

ElkEngine::ElkEngine(const Theory& t, const Gci& goal, const Budget& b) {
  if (t.dialect() != Dialect::EL || goal.lhs.mentions_inverse_or_forall() || goal.rhs.mentions_inverse_or_forall())
    throw Error("dialect", "the ELK deriver needs an EL theory and goal");
  g.max_vertices = b.max_vertices;
  for (const auto& c : subconcepts(t, goal)) {
    universe.push_back(c);
    uni_.insert(c.str());
    if (c.kind() == ConceptKind::And) {
      max_premises = std::max(max_premises, c.operands().size());
      for (const auto& o : c.operands()) conj_[o.str()].push_back(c);
    }
  }
  for (const auto& a : t.axioms()) told_[a.lhs.str()].push_back(g.vertex(a, true));
}

// by value: callers may pass labels that move when the graph grows
void ElkEngine::activate(Concept c) {
  if (!in_universe(c) || is_active(c)) return;
  ctx_.emplace(c.str(), Ctx{});
  derive(c, c, {}, "R0");
  derive(c, Concept::top(), {}, "Rtop");
}

void ElkEngine::activate_all() {
  for (const auto& c : universe) activate(c);
}

void ElkEngine::derive(Concept c, Concept d, std::vector<VertexId> prem, const char* rule) {
  VertexId v = g.vertex(Gci{c, d}, false);
  // a rule whose conclusion is among its premises adds nothing
  if (std::find(prem.begin(), prem.end(), v) == prem.end()) g.graph.add_edge(std::move(prem), v, rule);
  auto& cx = ctx_.at(c.str());
  if (cx.derived.insert(d.str()).second) {
    cx.order.push_back(d);
    work_.emplace_back(c, d);
  }
}

void ElkEngine::run() {
  while (!work_.empty()) {
    auto [c, d] = work_.front();
    work_.pop_front();
    process(c, d);
  }
}

void ElkEngine::process(const Concept& c, const Concept& d) {
  const VertexId self = vid(c, d);
  if (auto it = told_.find(d.str()); it != told_.end())
    for (VertexId ax : it->second) derive(c, g.graph.label(ax).rhs, {self, ax}, "R<=");

  if (d.kind() == ConceptKind::And)
    for (const auto& o : d.operands()) derive(c, o, {self}, "R-and");

  if (auto it = conj_.find(d.str()); it != conj_.end()) {
    const auto& have = ctx_.at(c.str()).derived;
    for (const auto& x : it->second) {
      bool all = std::all_of(x.operands().begin(), x.operands().end(),
                             [&](const Concept& o) { return have.count(o.str()) > 0; });
      if (!all) continue;
      std::vector<VertexId> prem;
      for (const auto& o : x.operands()) prem.push_back(vid(c, o));
      derive(c, x, std::move(prem), "R+and");
    }
  }

  if (d.kind() == ConceptKind::Exists) {
    const Concept& f = d.filler();
    activate(f);
    auto& fc = ctx_.at(f.str());
    fc.preds.push_back(Back{c, d.role(), self});
    // copy: derive() may grow fc.order
    auto known = fc.order;
    for (const auto& e : known) {
      Concept ex = Concept::exists(d.role(), e);
      if (in_universe(ex)) derive(c, ex, {self, vid(f, e)}, "Rex");
    }
  }

  // c <= d as the second premise of R_ex
  auto preds = ctx_.at(c.str()).preds;
  for (const auto& p : preds) {
    Concept ex = Concept::exists(p.role, d);
    if (in_universe(ex)) derive(p.lhs, ex, {p.via, self}, "Rex");
  }
}

}  // namespace detail

DerivationStructure elk_materialize(const Theory& t, const Gci& goal, const Budget& b) {
  detail::ElkEngine e(t, goal, b);
  e.activate_all();
  e.run();
  DerivationStructure d;
  d.kind = DeriverKind::Elk;
  d.graph = std::move(e.g.graph);
  d.axiom = std::move(e.g.axiom);
  d.theory = t;
  d.goal = goal;
  d.universe = std::move(e.universe);
  d.max_premises = e.max_premises;
  d.index_labels();
  return d;
}

}  // namespace proofforge
