#include "proofforge/hypergraph.hpp"
#include "proofforge/measures.hpp"

#include <algorithm>
#include <map>

namespace proofforge {

namespace {

// vertices still reaching the sink when x is not expanded
std::vector<bool> reach_without(const Hypergraph& h, VertexId sink, VertexId x) {
  std::vector<bool> keep(h.vertex_count(), false);
  std::vector<VertexId> stack{sink};
  keep[sink] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    if (v == x) continue;
    for (auto e : h.incoming(v))
      for (auto s : h.edge(e).sources)
        if (!keep[s]) {
          keep[s] = true;
          stack.push_back(s);
        }
  }
  return keep;
}

}  // namespace

Proof collapse_image(const Proof& p, const Homomorphism& hom, const Hypergraph& d,
                     const std::vector<bool>& is_axiom, const Measure& m) {
  if (!is_homomorphism(p.graph, d, hom)) throw Error("homomorphism", "mapping is not a homomorphism into the structure");
  for (auto v : p.graph.leaves())
    if (!is_axiom.at(hom.map[v])) throw Error("homomorphism", "leaf maps onto a non-axiom vertex");

  Proof cur = p;
  std::vector<VertexId> img = hom.map;
  while (true) {
    // first pair of vertices sharing an image
    std::map<VertexId, VertexId> seen;
    std::optional<std::pair<VertexId, VertexId>> pair;
    for (VertexId v = 0; v < cur.graph.vertex_count() && !pair; ++v) {
      auto [it, fresh] = seen.emplace(img[v], v);
      if (!fresh) pair = std::make_pair(it->second, v);
    }
    if (!pair) break;
    auto [a, b] = *pair;
    auto anc_a = ancestors(cur.graph, a);
    auto anc_b = ancestors(cur.graph, b);
    VertexId keep = a, drop = b;
    if (anc_a[b]) {
      keep = b, drop = a;  // b sits inside P_a
    } else if (!anc_b[a]) {
      if (evaluate(m, subproof_at(cur, b)) < evaluate(m, subproof_at(cur, a))) keep = b, drop = a;
    }
    // P^-drop  united with  P_keep, drop glued onto keep
    auto kept = reach_without(cur.graph, cur.sink, drop);
    const auto& inner = keep == a ? anc_a : anc_b;
    for (VertexId v = 0; v < kept.size(); ++v) kept[v] = kept[v] || inner[v];
    kept[drop] = false;

    constexpr VertexId none = static_cast<VertexId>(-1);
    std::vector<VertexId> map(cur.graph.vertex_count(), none);
    Hypergraph next;
    std::vector<VertexId> next_img;
    for (VertexId v = 0; v < cur.graph.vertex_count(); ++v)
      if (kept[v]) {
        map[v] = next.add_vertex(cur.graph.label(v));
        next_img.push_back(img[v]);
      }
    map[drop] = map[keep];
    for (const auto& e : cur.graph.edges()) {
      if (e.target == drop || !kept[e.target]) continue;
      std::vector<VertexId> src;
      for (auto s : e.sources) src.push_back(map[s]);
      next.add_edge(std::move(src), map[e.target], e.rule);
    }
    VertexId sink = map[cur.sink];
    cur = Proof{std::move(next), sink};
    img = std::move(next_img);
  }

  // injective now: rename into structure ids (ascending)
  std::vector<VertexId> order(cur.graph.vertex_count());
  for (VertexId v = 0; v < order.size(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](VertexId x, VertexId y) { return img[x] < img[y]; });
  std::vector<VertexId> pos(order.size());
  Hypergraph out;
  for (auto v : order) pos[v] = out.add_vertex(d.label(img[v]));
  for (const auto& e : cur.graph.edges()) {
    std::vector<VertexId> src;
    for (auto s : e.sources) src.push_back(pos[s]);
    out.add_edge(std::move(src), pos[e.target], e.rule);
  }
  return make_proof(std::move(out), pos[cur.sink]);
}

}  // namespace proofforge
