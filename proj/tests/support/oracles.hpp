#pragma once

// Reference computations for the tests. Deliberately naive and written
// without the library's search code: value iteration instead of the
// priority queue, plain recursion instead of topological passes.

#include "proofforge/hypergraph.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using proofforge::Hypergraph;
using proofforge::Proof;
using proofforge::VertexId;

enum class Agg { Max, Sum };  // depth / tree size

// least fixpoint of  w(v) = min(leaf if axiom, 1 + agg(w(sources)) per edge)
// starting from infinity; the minimal tree derivation weight, which for
// these two measures equals the optimal proof weight
inline std::optional<long> optimum(const Hypergraph& h, const std::vector<bool>& axiom, VertexId goal, Agg agg) {
  const long inf = LONG_MAX / 4;
  std::vector<long> w(h.vertex_count(), inf);
  for (VertexId v = 0; v < h.vertex_count(); ++v)
    if (axiom[v]) w[v] = agg == Agg::Max ? 0 : 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& e : h.edges()) {
      long acc = 0;
      bool ok = true;
      for (auto s : e.sources) {
        if (w[s] >= inf) ok = false;
        else acc = agg == Agg::Max ? std::max(acc, w[s]) : acc + w[s];
      }
      if (ok && 1 + acc < w[e.target]) {
        w[e.target] = 1 + acc;
        changed = true;
      }
    }
  }
  if (w[goal] >= inf) return std::nullopt;
  return w[goal];
}

// plain recursion over the unique incoming edge
inline long weigh(const Proof& p, Agg agg) {
  std::function<long(VertexId)> rec = [&](VertexId v) -> long {
    const auto& in = p.graph.incoming(v);
    if (in.empty()) return agg == Agg::Max ? 0 : 1;
    long acc = 0;
    for (auto s : p.graph.edge(in.front()).sources) acc = agg == Agg::Max ? std::max(acc, rec(s)) : acc + rec(s);
    return 1 + acc;
  };
  return rec(p.sink);
}

// paths from any vertex to the sink, summed: vertex count of the unraveling
inline long path_count(const Proof& p) { return weigh(p, Agg::Sum); }

// is `p` (through `origin`) a proof inside structure `d` whose leaves are
// axioms? checks every condition by hand
inline std::string subproof_problem(const Proof& p, const std::vector<VertexId>& origin, const Hypergraph& d,
                                    const std::vector<bool>& axiom) {
  const auto& g = p.graph;
  if (origin.size() != g.vertex_count()) return "origin size";
  std::set<VertexId> seen;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!seen.insert(origin[v]).second) return "two proof vertices share a structure vertex";
    if (!(g.label(v) == d.label(origin[v]))) return "label mismatch";
    if (g.incoming(v).size() > 1) return "more than one incoming edge";
    if (g.incoming(v).empty() && !axiom[origin[v]]) return "leaf is not an axiom";
    if (g.outgoing(v).empty() && v != p.sink) return "extra sink";
  }
  if (!g.outgoing(p.sink).empty()) return "sink has outgoing edges";
  for (const auto& e : g.edges()) {
    std::vector<VertexId> src;
    for (auto s : e.sources) src.push_back(origin[s]);
    if (!d.find_edge(src, origin[e.target])) return "edge not in structure";
  }
  // cycle check by colouring
  std::vector<int> colour(g.vertex_count(), 0);
  std::function<bool(VertexId)> cyclic = [&](VertexId v) {
    colour[v] = 1;
    for (auto e : g.outgoing(v)) {
      VertexId t = g.edge(e).target;
      if (colour[t] == 1 || (colour[t] == 0 && cyclic(t))) return true;
    }
    colour[v] = 2;
    return false;
  };
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!colour[v] && cyclic(v)) return "cycle";
  return {};
}

// ---- EL completion over normal-form name theories ------------------------
// Axiom shapes: A <= B, A1 and ... and An <= B, A <= ex r.B, ex r.A <= B.

struct NormalEl {
  struct Conj { std::vector<std::string> lhs; std::string rhs; };
  struct Ex { std::string lhs, role, filler; };      // A <= ex r.B
  struct ExLhs { std::string role, filler, rhs; };   // ex r.A <= B
  std::vector<Conj> conj;
  std::vector<Ex> ex;
  std::vector<ExLhs> exl;
  std::set<std::string> names;

  // S(X) sets for every name
  std::map<std::string, std::set<std::string>> complete() const {
    std::map<std::string, std::set<std::string>> s;
    std::set<std::tuple<std::string, std::string, std::string>> r;  // (role, x, y)
    for (const auto& n : names) s[n] = {n};
    for (bool changed = true; changed;) {
      changed = false;
      auto add = [&](const std::string& x, const std::string& b) {
        if (s[x].insert(b).second) changed = true;
      };
      for (const auto& n : names) {
        for (const auto& c : conj)
          if (std::all_of(c.lhs.begin(), c.lhs.end(), [&](const std::string& a) { return s[n].count(a) > 0; }))
            add(n, c.rhs);
        for (const auto& e : ex)
          if (s[n].count(e.lhs) && r.emplace(e.role, n, e.filler).second) changed = true;
      }
      for (const auto& [role, x, y] : r)
        for (const auto& e : exl)
          if (e.role == role && s[y].count(e.filler)) add(x, e.rhs);
    }
    return s;
  }

  bool entails(const std::string& a, const std::string& b) const {
    if (a == b) return true;
    auto s = complete();
    return s[a].count(b) > 0;
  }
};

}  // namespace oracle
