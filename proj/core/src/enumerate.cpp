#include "proofforge/optimizer.hpp"

#include <algorithm>

namespace proofforge {

ProofWeight as_proof_weight(const Measure& m) {
  return [m](const Proof& p) { return evaluate(m, p); };
}

namespace {

constexpr EdgeId kLeaf = static_cast<EdgeId>(-1);
constexpr EdgeId kOpen = static_cast<EdgeId>(-2);

// choice[v]: kOpen = not needed yet, kLeaf = axiom leaf, else incoming edge
class Enumerator {
 public:
  Enumerator(const Hypergraph& h, const std::vector<bool>& axiom, std::size_t cap)
      : h_(h), axiom_(axiom), cap_(cap), choice_(h.vertex_count(), kOpen), needed_(h.vertex_count(), 0) {}

  Enumeration run(VertexId goal) {
    needed_[goal] = 1;
    pending_.push_back(goal);
    step();
    return std::move(out_);
  }

 private:
  // does `from` reach `to` going down through chosen premises?
  bool reaches(VertexId from, VertexId to) const {
    std::vector<char> seen(h_.vertex_count(), 0);
    std::vector<VertexId> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      if (x == to) return true;
      if (choice_[x] == kOpen || choice_[x] == kLeaf) continue;
      for (auto s : h_.edge(choice_[x]).sources)
        if (!seen[s]) {
          seen[s] = 1;
          stack.push_back(s);
        }
    }
    return false;
  }

  void emit() {
    std::vector<VertexId> verts;
    for (VertexId v = 0; v < h_.vertex_count(); ++v)
      if (needed_[v]) verts.push_back(v);
    std::vector<VertexId> pos(h_.vertex_count(), 0);
    Hypergraph g;
    for (auto v : verts) pos[v] = g.add_vertex(h_.label(v));
    for (auto v : verts) {
      if (choice_[v] == kLeaf) continue;
      const auto& e = h_.edge(choice_[v]);
      std::vector<VertexId> src;
      for (auto s : e.sources) src.push_back(pos[s]);
      g.add_edge(std::move(src), pos[v], e.rule);
    }
    out_.proofs.push_back(Proof{std::move(g), pos[root_]});
    out_.origins.push_back(std::move(verts));
  }

  void step() {
    if (out_.truncated) return;
    if (pending_.empty()) {
      if (out_.proofs.size() >= cap_) {
        out_.truncated = true;
        return;
      }
      emit();
      return;
    }
    // smallest pending vertex first, for a deterministic order
    auto it = std::min_element(pending_.begin(), pending_.end());
    const VertexId v = *it;
    pending_.erase(it);

    if (axiom_[v]) {
      choice_[v] = kLeaf;
      step();
      choice_[v] = kOpen;
    }
    for (auto e : h_.incoming(v)) {
      if (out_.truncated) break;
      const auto& ed = h_.edge(e);
      bool cyclic = false;
      for (auto s : ed.sources)
        if (s == v || (needed_[s] && reaches(s, v))) cyclic = true;
      if (cyclic) continue;
      choice_[v] = e;
      std::vector<VertexId> added;
      for (auto s : ed.sources)
        if (!needed_[s]) {
          needed_[s] = 1;
          pending_.push_back(s);
          added.push_back(s);
        }
      step();
      for (auto s : added) {
        needed_[s] = 0;
        pending_.erase(std::find(pending_.begin(), pending_.end(), s));
      }
      choice_[v] = kOpen;
    }
    pending_.push_back(v);
  }

 public:
  VertexId root_ = 0;

 private:
  const Hypergraph& h_;
  const std::vector<bool>& axiom_;
  std::size_t cap_;
  std::vector<EdgeId> choice_;
  std::vector<char> needed_;
  std::vector<VertexId> pending_;
  Enumeration out_;
};

}  // namespace

Enumeration enumerate_proofs(const Hypergraph& h, const std::vector<bool>& axiom, VertexId goal, std::size_t cap) {
  if (!h.has_vertex(goal)) return {};
  Enumerator e(h, axiom, cap);
  e.root_ = goal;
  return e.run(goal);
}

Enumeration enumerate_proofs(const DerivationStructure& d, const Gci& goal, std::size_t cap) {
  auto v = d.find(goal);
  if (!v) return {};
  return enumerate_proofs(d.graph, d.axiom, *v, cap);
}

SearchResult brute_force_optimal(const Hypergraph& h, const std::vector<bool>& axiom, const ProofWeight& w,
                                 VertexId goal, std::size_t cap) {
  if (!h.has_vertex(goal)) throw Error("goal-absent", "goal vertex is not in the structure");
  auto all = enumerate_proofs(h, axiom, goal, cap);
  if (all.truncated) throw Error("budget", "more than " + std::to_string(cap) + " proofs to enumerate");
  if (all.proofs.empty()) throw Error("unreachable", "no proof of " + h.label(goal).str() + " in the structure");
  std::size_t pick = 0;
  Weight best = w(all.proofs[0]);
  for (std::size_t i = 1; i < all.proofs.size(); ++i) {
    Weight x = w(all.proofs[i]);
    if (x < best || (x == best && all.origins[i] < all.origins[pick])) {
      best = x;
      pick = i;
    }
  }
  SearchResult r;
  r.weight = best;
  r.proof = std::move(all.proofs[pick]);
  r.origin = std::move(all.origins[pick]);
  return r;
}

SearchResult brute_force_optimal(const DerivationStructure& d, const ProofWeight& w, const Gci& goal,
                                 std::size_t cap) {
  auto v = d.find(goal);
  if (!v) throw Error("goal-absent", "no vertex labeled " + goal.str());
  return brute_force_optimal(d.graph, d.axiom, w, *v, cap);
}

}  // namespace proofforge
