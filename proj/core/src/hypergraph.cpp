#include "proofforge/hypergraph.hpp"

#include <algorithm>
#include <deque>

namespace proofforge {

std::size_t Hypergraph::KeyHash::operator()(const Key& k) const {
  std::size_t h = k.target * 0x9e3779b97f4a7c15ull;
  for (auto s : k.sources) h = (h ^ s) * 0x100000001b3ull;
  return h;
}

VertexId Hypergraph::add_vertex(Gci label) {
  labels_.push_back(std::move(label));
  in_.emplace_back();
  out_.emplace_back();
  return static_cast<VertexId>(labels_.size() - 1);
}

std::optional<EdgeId> Hypergraph::add_edge(std::vector<VertexId> sources, VertexId target, std::string rule) {
  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
  if (target >= labels_.size()) throw Error("unknown-vertex", "edge target " + std::to_string(target));
  for (auto s : sources)
    if (s >= labels_.size()) throw Error("unknown-vertex", "edge source " + std::to_string(s));
  Key key{sources, target};
  if (index_.count(key)) return std::nullopt;
  const auto id = static_cast<EdgeId>(edges_.size());
  index_.emplace(std::move(key), id);
  for (auto s : sources) out_[s].push_back(id);
  in_[target].push_back(id);
  edges_.push_back(Edge{std::move(sources), target, std::move(rule)});
  return id;
}

std::optional<EdgeId> Hypergraph::find_edge(std::vector<VertexId> sources, VertexId target) const {
  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
  auto it = index_.find(Key{std::move(sources), target});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<VertexId> Hypergraph::leaves() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < labels_.size(); ++v)
    if (in_[v].empty()) out.push_back(v);
  return out;
}

std::vector<VertexId> Hypergraph::sinks() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < labels_.size(); ++v)
    if (out_[v].empty()) out.push_back(v);
  return out;
}

std::size_t Hypergraph::label_size() const {
  std::size_t n = 0;
  for (const auto& l : labels_) n += l.size();
  return n;
}

bool is_acyclic(const Hypergraph& h) {
  // Kahn over the binary relation s -> d
  const std::size_t n = h.vertex_count();
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& e : h.edges()) indeg[e.target] += e.sources.size();
  std::vector<VertexId> stack;
  for (VertexId v = 0; v < n; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  std::size_t seen = 0;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    ++seen;
    for (auto e : h.outgoing(v)) {
      if (--indeg[h.edge(e).target] == 0) stack.push_back(h.edge(e).target);
    }
  }
  return seen == n;
}

Report proof_shape_violations(const Hypergraph& h, VertexId sink) {
  Report r;
  if (!h.has_vertex(sink)) {
    r.push_back({"sink", "sink vertex " + std::to_string(sink) + " does not exist"});
    return r;
  }
  auto sinks = h.sinks();
  if (sinks.size() != 1) {
    r.push_back({"sink", "sink count " + std::to_string(sinks.size()) + " != 1"});
  } else if (sinks.front() != sink) {
    r.push_back({"sink", "declared sink " + std::to_string(sink) + " has outgoing edges"});
  }
  if (!is_acyclic(h)) r.push_back({"cycle", "graph contains a cycle"});
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    if (h.incoming(v).size() > 1)
      r.push_back({"incoming", "multiple incoming edges at vertex " + std::to_string(v) + " (" +
                                   h.label(v).str() + ")"});
  }
  return r;
}

Proof make_proof(Hypergraph h, VertexId sink) {
  auto r = proof_shape_violations(h, sink);
  if (!r.empty()) throw Error("proof", r.front().detail);
  return Proof{std::move(h), sink};
}

Report validate_derivation_structure(const Hypergraph& h, const Theory& t, const EntailmentOracle& entails) {
  Report r;
  for (auto v : h.leaves()) {
    if (!t.contains(h.label(v)))
      r.push_back({"grounded", "leaf " + std::to_string(v) + " (" + h.label(v).str() + ") is not an axiom"});
  }
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const auto& ed = h.edge(e);
    std::vector<Gci> prem;
    for (auto s : ed.sources) prem.push_back(h.label(s));
    if (!entails(prem, h.label(ed.target)))
      r.push_back({"sound", "edge " + std::to_string(e) + " does not entail " + h.label(ed.target).str()});
  }
  return r;
}

Report validate_proof(const Hypergraph& p, const Theory& t, const Gci& goal, const EntailmentOracle& entails) {
  Report r;
  auto sinks = p.sinks();
  if (sinks.size() != 1) {
    r.push_back({"sink", "sink count " + std::to_string(sinks.size()) + " != 1"});
  } else if (!(p.label(sinks.front()) == goal)) {
    r.push_back({"sink", "sink is labeled " + p.label(sinks.front()).str() + ", expected " + goal.str()});
  }
  if (!is_acyclic(p)) r.push_back({"cycle", "graph contains a cycle"});
  for (VertexId v = 0; v < p.vertex_count(); ++v) {
    if (p.incoming(v).size() > 1)
      r.push_back({"incoming", "multiple incoming edges at vertex " + std::to_string(v)});
  }
  auto more = validate_derivation_structure(p, t, entails);
  r.insert(r.end(), more.begin(), more.end());
  return r;
}

std::vector<bool> ancestors(const Hypergraph& h, VertexId to) {
  std::vector<bool> seen(h.vertex_count(), false);
  if (!h.has_vertex(to)) throw Error("unknown-vertex", "vertex " + std::to_string(to));
  std::vector<VertexId> stack{to};
  seen[to] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (auto e : h.incoming(v))
      for (auto s : h.edge(e).sources)
        if (!seen[s]) {
          seen[s] = true;
          stack.push_back(s);
        }
  }
  return seen;
}

std::optional<Path> find_path(const Hypergraph& h, VertexId from, VertexId to) {
  if (!h.has_vertex(from) || !h.has_vertex(to)) throw Error("unknown-vertex", "path endpoint");
  const std::size_t n = h.vertex_count();
  std::vector<std::optional<std::pair<VertexId, EdgeId>>> prev(n);
  std::vector<bool> seen(n, false);
  std::deque<VertexId> q{from};
  seen[from] = true;
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop_front();
    if (v == to) break;
    for (auto e : h.outgoing(v)) {
      VertexId d = h.edge(e).target;
      if (!seen[d]) {
        seen[d] = true;
        prev[d] = std::make_pair(v, e);
        q.push_back(d);
      }
    }
  }
  if (!seen[to]) return std::nullopt;
  Path p;
  VertexId v = to;
  p.vertices.push_back(v);
  while (v != from) {
    auto [u, e] = *prev[v];
    p.edges.push_back(e);
    p.vertices.push_back(u);
    v = u;
  }
  std::reverse(p.vertices.begin(), p.vertices.end());
  std::reverse(p.edges.begin(), p.edges.end());
  return p;
}

bool check_path(const Hypergraph& h, const Path& p) {
  if (p.vertices.size() != p.edges.size() + 1) return false;
  for (std::size_t j = 0; j < p.edges.size(); ++j) {
    const auto& e = h.edge(p.edges[j]);
    if (!std::binary_search(e.sources.begin(), e.sources.end(), p.vertices[j])) return false;
    if (e.target != p.vertices[j + 1]) return false;
  }
  return true;
}

Hypergraph induced_subgraph(const Hypergraph& h, const std::vector<bool>& keep, std::vector<VertexId>* remap,
                            const std::function<bool(EdgeId)>& edge_filter) {
  constexpr VertexId none = static_cast<VertexId>(-1);
  std::vector<VertexId> map(h.vertex_count(), none);
  Hypergraph out;
  for (VertexId v = 0; v < h.vertex_count(); ++v)
    if (keep[v]) map[v] = out.add_vertex(h.label(v));
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const auto& ed = h.edge(e);
    if (map[ed.target] == none) continue;
    if (edge_filter && !edge_filter(e)) continue;
    std::vector<VertexId> src;
    bool ok = true;
    for (auto s : ed.sources) {
      if (map[s] == none) {
        ok = false;
        break;
      }
      src.push_back(map[s]);
    }
    if (ok) out.add_edge(std::move(src), map[ed.target], ed.rule);
  }
  if (remap) *remap = std::move(map);
  return out;
}

Proof subproof_at(const Proof& p, VertexId v) {
  if (!p.graph.has_vertex(v)) throw Error("unknown-vertex", "vertex " + std::to_string(v) + " not in proof");
  std::vector<VertexId> map;
  Hypergraph g = induced_subgraph(p.graph, ancestors(p.graph, v), &map);
  return Proof{std::move(g), map[v]};
}

Hypergraph remove_subproof(const Proof& p, VertexId v, std::vector<VertexId>* remap) {
  const Hypergraph& h = p.graph;
  if (!h.has_vertex(v)) throw Error("unknown-vertex", "vertex " + std::to_string(v) + " not in proof");
  // what still reaches the sink once v stops being derived
  std::vector<bool> keep(h.vertex_count(), false);
  std::vector<VertexId> stack{p.sink};
  keep[p.sink] = true;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    if (x == v) continue;
    for (auto e : h.incoming(x))
      for (auto s : h.edge(e).sources)
        if (!keep[s]) {
          keep[s] = true;
          stack.push_back(s);
        }
  }
  return induced_subgraph(h, keep, remap, [&](EdgeId e) { return h.edge(e).target != v; });
}

Unraveling unravel_with_map(const Proof& p) {
  Unraveling u;
  Hypergraph& t = u.tree.graph;
  auto& back = u.to_source.map;
  // explicit stack; children are attached after they are built
  struct Frame {
    VertexId orig;
    VertexId copy;
  };
  VertexId root = t.add_vertex(p.graph.label(p.sink));
  back.push_back(p.sink);
  std::vector<Frame> work{{p.sink, root}};
  while (!work.empty()) {
    Frame f = work.back();
    work.pop_back();
    const auto& in = p.graph.incoming(f.orig);
    if (in.empty()) continue;
    const auto& e = p.graph.edge(in.front());
    std::vector<VertexId> kids;
    for (auto s : e.sources) {
      VertexId c = t.add_vertex(p.graph.label(s));
      back.push_back(s);
      kids.push_back(c);
      work.push_back({s, c});
    }
    t.add_edge(kids, f.copy, e.rule);
  }
  u.tree.sink = root;
  return u;
}

Proof unravel(const Proof& p) { return unravel_with_map(p).tree; }

bool is_tree(const Proof& p) {
  const auto& h = p.graph;
  if (!proof_shape_violations(h, p.sink).empty()) return false;
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    if (v == p.sink) continue;
    if (h.outgoing(v).size() != 1) return false;
  }
  return true;
}

}  // namespace proofforge
