#include "proofforge/optimizer.hpp"

#include <algorithm>
#include <set>

namespace proofforge {

namespace {

constexpr EdgeId kLeaf = static_cast<EdgeId>(-1);
constexpr EdgeId kNone = static_cast<EdgeId>(-2);

// vertices of P(v): follow the chosen incoming edges
std::vector<VertexId> collect(const Hypergraph& h, const std::vector<EdgeId>& best, VertexId root) {
  std::vector<char> seen(h.vertex_count(), 0);
  std::vector<VertexId> out, stack{root};
  seen[root] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    out.push_back(v);
    if (best[v] == kLeaf || best[v] == kNone) continue;
    for (auto s : h.edge(best[v]).sources)
      if (!seen[s]) {
        seen[s] = 1;
        stack.push_back(s);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Proof build(const Hypergraph& h, const std::vector<EdgeId>& best, VertexId root, std::vector<VertexId>* origin,
            EdgeId extra = kNone, VertexId extra_target = 0) {
  std::vector<VertexId> verts;
  if (extra == kNone) {
    verts = collect(h, best, root);
  } else {
    // candidate P: the edge plus the proofs of its sources (may be cyclic)
    std::vector<char> seen(h.vertex_count(), 0);
    seen[extra_target] = 1;
    verts.push_back(extra_target);
    for (auto s : h.edge(extra).sources)
      for (auto v : collect(h, best, s))
        if (!seen[v]) {
          seen[v] = 1;
          verts.push_back(v);
        }
    std::sort(verts.begin(), verts.end());
  }
  std::vector<VertexId> pos(h.vertex_count(), 0);
  Hypergraph g;
  for (auto v : verts) pos[v] = g.add_vertex(h.label(v));
  auto add = [&](EdgeId e) {
    std::vector<VertexId> src;
    for (auto s : h.edge(e).sources) src.push_back(pos[s]);
    g.add_edge(std::move(src), pos[h.edge(e).target], h.edge(e).rule);
  };
  for (auto v : verts) {
    if (extra != kNone && v == extra_target) continue;
    if (best[v] != kLeaf && best[v] != kNone) add(best[v]);
  }
  if (extra != kNone) add(extra);
  if (origin) *origin = verts;
  return Proof{std::move(g), pos[extra == kNone ? root : extra_target]};
}

}  // namespace

SearchResult dijkstra_optimal(const Hypergraph& h, const std::vector<bool>& axiom, const Measure& m, VertexId goal,
                              const DijkstraOptions& opts) {
  if (!h.has_vertex(goal)) throw Error("goal-absent", "goal vertex is not in the structure");
  const std::size_t n = h.vertex_count();
  SearchStats st;
  std::vector<EdgeId> best(n, kNone);
  std::vector<std::optional<Weight>> w(n);
  std::vector<std::size_t> k(h.edge_count(), 0);
  std::vector<char> popped(n, 0);
  std::set<std::pair<Weight, VertexId>> q;

  auto edge_weight = [&](EdgeId e) {
    const auto& ed = h.edge(e);
    EdgeLabel lab{{}, h.label(ed.target)};
    std::vector<Weight> ws;
    for (auto s : ed.sources) {
      lab.premises.push_back(h.label(s));
      ws.push_back(*w[s]);
    }
    auto r = m.edge_fn(lab, ws);
    if (!r) throw Error("measure", m.name + " undefined on the step deriving " + lab.conclusion.str());
    return *r;
  };

  for (VertexId v = 0; v < n; ++v) {
    if (axiom[v]) {
      best[v] = kLeaf;
      w[v] = m.leaf_fn(h.label(v));
    } else if (auto e = h.find_edge({}, v)) {
      best[v] = *e;
      w[v] = edge_weight(*e);
    } else {
      continue;
    }
    q.emplace(*w[v], v);
  }
  st.peak_queue = q.size();

  std::optional<Weight> last;
  while (!q.empty()) {
    auto [wv, v] = *q.begin();
    q.erase(q.begin());
    ++st.vertices_popped;
    if (popped[v]) ++st.double_pops;
    popped[v] = 1;
    if (opts.pop_log) opts.pop_log->push_back(wv);
    if (opts.debug && last && wv < *last) ++st.pop_order_violations;
    last = wv;

    for (auto e : h.outgoing(v)) {
      const auto& ed = h.edge(e);
      if (++k[e] != ed.sources.size()) continue;
      ++st.edges_relaxed;
      const VertexId d = ed.target;
      // P is cyclic iff d already occurs in some P(s)
      bool cyclic = false;
      {
        std::vector<char> seen(n, 0);
        std::vector<VertexId> stack(ed.sources.begin(), ed.sources.end());
        for (auto s : stack) seen[s] = 1;
        while (!stack.empty() && !cyclic) {
          VertexId x = stack.back();
          stack.pop_back();
          if (x == d) cyclic = true;
          if (best[x] == kLeaf || best[x] == kNone) continue;
          for (auto s : h.edge(best[x]).sources)
            if (!seen[s]) {
              seen[s] = 1;
              stack.push_back(s);
            }
        }
      }
      if (opts.debug) {
        Proof cand = build(h, best, d, nullptr, e, d);
        if (is_acyclic(cand.graph) == cyclic) ++st.acyclicity_mismatches;
      }
      if (cyclic) continue;
      Weight cand = edge_weight(e);
      if (w[d] && !(cand < *w[d])) continue;
      if (w[d]) q.erase({*w[d], d});
      best[d] = e;
      w[d] = cand;
      q.emplace(cand, d);
      st.peak_queue = std::max(st.peak_queue, q.size());
      if (opts.debug) {
        Proof p = build(h, best, d, nullptr);
        if (!proof_shape_violations(p.graph, p.sink).empty()) ++st.invalid_intermediate;
      }
    }
  }

  if (best[goal] == kNone) throw Error("unreachable", "no proof of " + h.label(goal).str() + " in the structure");
  SearchResult r;
  r.weight = *w[goal];
  r.proof = build(h, best, goal, &r.origin);
  r.stats = st;
  return r;
}

SearchResult dijkstra_optimal(const DerivationStructure& d, const Measure& m, const Gci& goal,
                              const DijkstraOptions& opts) {
  auto v = d.find(goal);
  if (!v) throw Error("goal-absent", "no vertex labeled " + goal.str());
  return dijkstra_optimal(d.graph, d.axiom, m, *v, opts);
}

}  // namespace proofforge
