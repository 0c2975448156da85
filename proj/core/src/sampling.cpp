#include "proofforge/sampling.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace proofforge {

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// EL-ish label, made unique by the index in the rhs name
Gci sample_label(Rng& rng, std::size_t i) {
  static const char* names[] = {"A", "B", "C", "D"};
  Concept lhs = Concept::name(names[pick(rng, 0, 3)]);
  switch (pick(rng, 0, 2)) {
    case 0: break;
    case 1: lhs = Concept::conj(lhs, Concept::name(names[pick(rng, 0, 3)])); break;
    default: lhs = Concept::exists(Role{"r", false}, lhs); break;
  }
  return Gci{lhs, Concept::name("V" + std::to_string(i))};
}

std::vector<VertexId> sample_sources(Rng& rng, std::size_t n, std::size_t k, VertexId avoid) {
  std::set<VertexId> s;
  for (std::size_t tries = 0; s.size() < k && tries < 4 * k + 4; ++tries) {
    auto v = static_cast<VertexId>(pick(rng, 0, n - 1));
    if (v != avoid) s.insert(v);
  }
  return {s.begin(), s.end()};
}

std::vector<bool> derivable(const Hypergraph& h, const std::vector<bool>& axiom) {
  std::vector<bool> ok = axiom;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& e : h.edges()) {
      if (ok[e.target]) continue;
      if (std::all_of(e.sources.begin(), e.sources.end(), [&](VertexId s) { return ok[s]; })) {
        ok[e.target] = true;
        changed = true;
      }
    }
  }
  return ok;
}

}  // namespace

RandomStructure random_structure(Rng& rng, std::size_t max_vertices, std::size_t max_premises) {
  RandomStructure r;
  std::size_t n = pick(rng, 1, std::max<std::size_t>(1, max_vertices));
  for (std::size_t i = 0; i < n; ++i) r.graph.add_vertex(sample_label(rng, i));
  for (VertexId v = 0; v < n; ++v) {
    std::size_t in = pick(rng, 0, 3);
    for (std::size_t j = 0; j < in; ++j) {
      std::size_t k = n == 1 ? 0 : pick(rng, 0, std::min(max_premises, n - 1));
      // zero premise edges stay rare
      if (k == 0 && pick(rng, 0, 3) != 0) k = n > 1 ? 1 : 0;
      r.graph.add_edge(sample_sources(rng, n, k, v), v, "rnd");
    }
  }
  r.axiom.assign(n, false);
  for (VertexId v = 0; v < n; ++v)
    if (r.graph.incoming(v).empty() || pick(rng, 0, 5) == 0) r.axiom[v] = true;
  auto ok = derivable(r.graph, r.axiom);
  // every vertex may sit on a cycle; then promote some to axioms
  while (std::find(ok.begin(), ok.end(), true) == ok.end()) {
    r.axiom[pick(rng, 0, n - 1)] = true;
    ok = derivable(r.graph, r.axiom);
  }
  std::vector<VertexId> cand, inner;
  for (VertexId v = 0; v < n; ++v)
    if (ok[v]) {
      cand.push_back(v);
      if (!r.graph.incoming(v).empty()) inner.push_back(v);
    }
  // prefer goals with something to choose
  const auto& from = inner.empty() ? cand : inner;
  r.goal = from[pick(rng, 0, from.size() - 1)];
  return r;
}

Proof random_proof(Rng& rng, std::size_t label_pool, std::size_t max_depth, std::size_t max_premises) {
  std::vector<Gci> pool;
  for (std::size_t i = 0; i < label_pool; ++i) pool.push_back(sample_label(rng, i));
  Hypergraph g;
  std::map<std::pair<std::size_t, std::vector<VertexId>>, VertexId> seen;
  auto build = [&](auto&& self, std::size_t depth) -> VertexId {
    std::size_t label = pick(rng, 0, label_pool - 1);
    std::size_t k = depth == 0 ? 0 : pick(rng, 0, max_premises);
    std::vector<VertexId> kids;
    for (std::size_t i = 0; i < k; ++i) kids.push_back(self(self, depth - 1));
    std::sort(kids.begin(), kids.end());
    kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
    bool leaf = k == 0;
    auto key = std::make_pair(label, leaf ? std::vector<VertexId>{} : kids);
    if (!leaf) key.second.push_back(static_cast<VertexId>(-1));
    if (auto it = seen.find(key); it != seen.end()) return it->second;
    VertexId v = g.add_vertex(pool[label]);
    if (!leaf) g.add_edge(kids, v, "rnd");
    seen.emplace(key, v);
    return v;
  };
  VertexId root = build(build, max_depth);
  return make_proof(std::move(g), root);
}

ImageSample random_image_sample(Rng& rng) {
  ImageSample s;
  s.proof = random_proof(rng, pick(rng, 2, 6), pick(rng, 1, 4), 3);
  const auto& p = s.proof.graph;
  std::map<std::string, VertexId> by_label;
  s.map.map.resize(p.vertex_count());
  for (VertexId v = 0; v < p.vertex_count(); ++v) {
    auto [it, fresh] = by_label.emplace(p.label(v).str(), 0);
    if (fresh) it->second = s.structure.add_vertex(p.label(v));
    s.map.map[v] = it->second;
  }
  for (const auto& e : p.edges()) {
    std::vector<VertexId> src;
    for (auto x : e.sources) src.push_back(s.map.map[x]);
    std::sort(src.begin(), src.end());
    src.erase(std::unique(src.begin(), src.end()), src.end());
    s.structure.add_edge(src, s.map.map[e.target], e.rule);
  }
  std::size_t n0 = s.structure.vertex_count();
  std::size_t extra_v = pick(rng, 0, 3);
  for (std::size_t i = 0; i < extra_v; ++i) s.structure.add_vertex(Gci{Concept::name("X"), Concept::name("W" + std::to_string(i))});
  std::size_t n = s.structure.vertex_count();
  std::size_t extra_e = pick(rng, 0, 4);
  for (std::size_t i = 0; i < extra_e; ++i) {
    auto t = static_cast<VertexId>(pick(rng, 0, n - 1));
    s.structure.add_edge(sample_sources(rng, n, pick(rng, 0, std::min<std::size_t>(3, n - 1)), t), t, "extra");
  }
  s.axiom.assign(n, false);
  for (auto l : p.leaves()) s.axiom[s.map.map[l]] = true;
  for (VertexId v = static_cast<VertexId>(n0); v < n; ++v)
    if (s.structure.incoming(v).empty()) s.axiom[v] = true;
  return s;
}

Hypergraph image_of(const Proof& p, const Homomorphism& h, const Hypergraph& d, std::vector<VertexId>* remap) {
  std::vector<bool> keep(d.vertex_count(), false);
  for (auto x : h.map) keep[x] = true;
  std::set<EdgeId> used;
  for (const auto& e : p.graph.edges()) {
    std::vector<VertexId> src;
    for (auto x : e.sources) src.push_back(h.map[x]);
    if (auto id = d.find_edge(src, h.map[e.target])) used.insert(*id);
  }
  return induced_subgraph(d, keep, remap, [&](EdgeId e) { return used.count(e) > 0; });
}

}  // namespace proofforge
