#include "proofforge/measures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace proofforge {

bool Measure::within(const Weight& w, const Weight& bound) const {
  if (threshold == Threshold::Numeric) return w <= bound;
  // log2 over a stored depth; log2(0) counts as satisfied
  if (w == Weight(0)) return true;
  return w.value() <= Weight::Rational(pow2_floor(bound));
}

std::string Measure::display(const Weight& w) const {
  if (threshold == Threshold::Numeric) return w.str();
  const double d = w.approx();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", d <= 0 ? 0.0 : std::log2(d));
  return buf;
}

Measure depth_measure() {
  Measure m;
  m.name = "depth";
  m.leaf_fn = [](const Gci&) { return Weight(0); };
  m.edge_fn = [](const EdgeLabel&, const std::vector<Weight>& q) -> std::optional<Weight> {
    Weight best(0);
    for (const auto& w : q) best = std::max(best, w);
    return best + Weight(1);
  };
  return m;
}

Measure tree_size_measure() {
  Measure m;
  m.name = "treesize";
  m.leaf_fn = [](const Gci&) { return Weight(1); };
  m.edge_fn = [](const EdgeLabel&, const std::vector<Weight>& q) -> std::optional<Weight> {
    Weight sum(1);
    for (const auto& w : q) sum += w;
    return sum;
  };
  return m;
}

Measure log_depth_measure() {
  Measure m = depth_measure();
  m.name = "logdepth";
  m.threshold = Threshold::Log2;
  return m;
}

Measure measure_by_name(const std::string& name) {
  if (name == "depth") return depth_measure();
  if (name == "treesize" || name == "tree-size" || name == "tree_size") return tree_size_measure();
  if (name == "logdepth" || name == "log-depth") return log_depth_measure();
  throw Error("usage", "unknown recursive measure '" + name + "'");
}

Weight evaluate(const Measure& m, const Proof& p) {
  const auto& h = p.graph;
  auto bad = proof_shape_violations(h, p.sink);
  if (!bad.empty()) throw Error("proof", "cannot evaluate: " + bad.front().detail);
  // topological order: vertices whose premises are all done
  const std::size_t n = h.vertex_count();
  std::vector<std::optional<Weight>> w(n);
  std::vector<std::size_t> missing(n, 0);
  std::vector<VertexId> ready;
  for (VertexId v = 0; v < n; ++v) {
    if (h.incoming(v).empty()) {
      ready.push_back(v);
    } else {
      missing[v] = h.edge(h.incoming(v).front()).sources.size();
      if (missing[v] == 0) ready.push_back(v);
    }
  }
  while (!ready.empty()) {
    VertexId v = ready.back();
    ready.pop_back();
    if (h.incoming(v).empty()) {
      w[v] = m.leaf_fn(h.label(v));
    } else {
      const auto& e = h.edge(h.incoming(v).front());
      EdgeLabel lab{{}, h.label(v)};
      std::vector<Weight> q;
      for (auto s : e.sources) {
        lab.premises.push_back(h.label(s));
        q.push_back(*w[s]);
      }
      auto r = m.edge_fn(lab, q);
      if (!r) throw Error("measure", m.name + " undefined on the step deriving " + h.label(v).str());
      w[v] = *r;
    }
    for (auto e : h.outgoing(v)) {
      VertexId d = h.edge(e).target;
      if (--missing[d] == 0) ready.push_back(d);
    }
  }
  return *w[p.sink];
}

Weight size(const Proof& p) { return Weight(static_cast<std::int64_t>(p.graph.vertex_count())); }

MonotoneReport check_monotone(const Measure& m, const std::vector<EdgeLabel>& labels,
                              const std::vector<std::vector<Weight>>& multisets, const std::vector<Weight>& lower) {
  MonotoneReport r;
  for (const auto& lab : labels) {
    for (const auto& q : multisets) {
      auto base = m.edge_fn(lab, q);
      if (!base) continue;
      for (std::size_t i = 0; i < q.size(); ++i) {
        for (const auto& lo : lower) {
          if (!(lo <= q[i])) continue;
          auto q2 = q;
          q2[i] = lo;
          auto v = m.edge_fn(lab, q2);
          if (!v) continue;
          ++r.checks;
          if (*base < *v) {
            std::string s = m.name + ": lowering " + q[i].str() + " to " + lo.str() + " in {";
            for (std::size_t j = 0; j < q.size(); ++j) s += (j ? "," : "") + q[j].str();
            s += "} raised " + base->str() + " to " + v->str();
            r.failures.push_back(std::move(s));
          }
        }
      }
    }
  }
  return r;
}

}  // namespace proofforge
