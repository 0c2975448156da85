#include "proofforge/hypergraph.hpp"

#include <algorithm>
#include <unordered_map>

namespace proofforge {

bool is_homomorphism(const Hypergraph& g, const Hypergraph& h, const Homomorphism& m) {
  if (m.map.size() != g.vertex_count()) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!h.has_vertex(m.map[v])) return false;
    if (!(g.label(v) == h.label(m.map[v]))) return false;
  }
  for (const auto& e : g.edges()) {
    std::vector<VertexId> src;
    for (auto s : e.sources) src.push_back(m.map[s]);
    if (!h.find_edge(std::move(src), m.map[e.target])) return false;
  }
  return true;
}

namespace {

class Matcher {
 public:
  Matcher(const Hypergraph& g, const Hypergraph& h, bool injective) : g_(g), h_(h), injective_(injective) {
    std::unordered_map<std::string, std::vector<VertexId>> by_label;
    for (VertexId w = 0; w < h.vertex_count(); ++w) by_label[h.label(w).str()].push_back(w);
    auto degree = [](const Hypergraph& x, VertexId v) { return x.incoming(v).size() + x.outgoing(v).size(); };
    for (auto& [_, ws] : by_label)
      std::stable_sort(ws.begin(), ws.end(), [&](VertexId a, VertexId b) { return degree(h, a) > degree(h, b); });

    order_.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(), [&](VertexId a, VertexId b) {
      const auto& la = g.label(a).str();
      const auto& lb = g.label(b).str();
      if (la != lb) return la < lb;
      return degree(g, a) > degree(g, b);
    });
    candidates_.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      auto it = by_label.find(g.label(v).str());
      if (it != by_label.end()) candidates_[v] = it->second;
    }
    // edges become checkable once their last vertex (in order) is assigned
    std::vector<std::size_t> pos(g.vertex_count());
    for (std::size_t i = 0; i < order_.size(); ++i) pos[order_[i]] = i;
    due_.resize(g.vertex_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      std::size_t last = pos[g.edge(e).target];
      for (auto s : g.edge(e).sources) last = std::max(last, pos[s]);
      due_[order_[last]].push_back(e);
    }
  }

  std::optional<Homomorphism> run() {
    if (injective_ && g_.vertex_count() != h_.vertex_count()) return std::nullopt;
    map_.assign(g_.vertex_count(), kUnset);
    used_.assign(h_.vertex_count(), false);
    if (!search(0)) return std::nullopt;
    return Homomorphism{map_};
  }

 private:
  static constexpr VertexId kUnset = static_cast<VertexId>(-1);

  bool search(std::size_t i) {
    if (i == order_.size()) return true;
    VertexId v = order_[i];
    for (VertexId w : candidates_[v]) {
      if (injective_ && used_[w]) continue;
      map_[v] = w;
      used_[w] = true;
      if (edges_ok(v) && search(i + 1)) return true;
      used_[w] = false;
    }
    map_[v] = kUnset;
    return false;
  }

  bool edges_ok(VertexId v) const {
    for (auto e : due_[v]) {
      const auto& ed = g_.edge(e);
      std::vector<VertexId> src;
      for (auto s : ed.sources) src.push_back(map_[s]);
      if (!h_.find_edge(std::move(src), map_[ed.target])) return false;
    }
    return true;
  }

  const Hypergraph& g_;
  const Hypergraph& h_;
  bool injective_;
  std::vector<VertexId> order_;
  std::vector<std::vector<VertexId>> candidates_;
  std::vector<std::vector<EdgeId>> due_;
  std::vector<VertexId> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<Homomorphism> find_homomorphism(const Hypergraph& g, const Hypergraph& h) {
  return Matcher(g, h, false).run();
}

bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return Matcher(a, b, true).run().has_value();
}

}  // namespace proofforge
