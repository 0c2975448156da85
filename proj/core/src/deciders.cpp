#include "proofforge/optimizer.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>

namespace proofforge {

namespace {

enum class Kind { Depth, TreeSize };

// Capped exact minimum per sentence. solve(s, cap) returns min(s) when it is
// <= cap. Caps shrink strictly on the way down, so cycles in the structure
// end by themselves and every memo entry is a true fact about the minimum.
class Solver {
 public:
  Solver(const DeriverOracle& v, Kind k, DecideStats& st) : view_(v), kind_(k), st_(st) {}

  std::optional<std::int64_t> solve(SentenceId s, std::int64_t cap) {
    ++st_.solve_calls;
    auto& m = memo_[s];
    if (m.exact) {
      ++st_.memo_hits;
      if (*m.exact <= cap) return m.exact;
      return std::nullopt;
    }
    if (cap <= m.above) {
      ++st_.memo_hits;
      return std::nullopt;
    }
    if (view_.is_axiom(s)) {
      m.exact = leaf();
      m.leaf = true;
      return *m.exact <= cap ? m.exact : std::nullopt;
    }
    if (cap < 1) {
      m.above = std::max(m.above, cap);
      return std::nullopt;
    }
    const auto& infs = inferences(s);
    std::optional<std::int64_t> best;
    int best_ix = -1;
    std::int64_t c = cap;
    for (std::size_t i = 0; i < infs.size() && c >= 1; ++i) {
      const auto& prem = infs[i].premises;
      if (std::find(prem.begin(), prem.end(), s) != prem.end()) continue;
      ++st_.inferences_tried;
      std::optional<std::int64_t> val;
      if (kind_ == Kind::Depth) {
        std::int64_t hi = 0;
        bool ok = true;
        for (auto p : prem) {
          auto r = solve(p, c - 1);
          if (!r) {
            ok = false;
            break;
          }
          hi = std::max(hi, *r);
        }
        if (ok) val = hi + 1;
      } else {
        std::int64_t lows = 0;
        for (auto p : prem) lows += lower(p);
        if (1 + lows > c) continue;
        std::int64_t used = 0;
        bool ok = true;
        for (auto p : prem) {
          lows -= lower(p);
          auto r = solve(p, c - 1 - used - lows);
          if (!r) {
            ok = false;
            break;
          }
          used += *r;
        }
        if (ok) val = used + 1;
      }
      if (val && *val <= c) {
        best = val;
        best_ix = static_cast<int>(i);
        c = *val - 1;  // only strictly better ones from here on
      }
    }
    auto& mm = memo_[s];  // memo_ may have rehashed
    if (best) {
      mm.exact = best;
      mm.inference = best_ix;
      return best;
    }
    mm.above = std::max(mm.above, cap);
    return std::nullopt;
  }

  // proof assembled from the recorded best inferences
  Proof witness(SentenceId goal, std::map<SentenceId, VertexId>* ids = nullptr) {
    Hypergraph g;
    std::map<SentenceId, VertexId> pos;
    std::vector<SentenceId> order{goal};
    pos[goal] = g.add_vertex(view_.sentence(goal));
    for (std::size_t i = 0; i < order.size(); ++i) {
      SentenceId s = order[i];
      const auto& m = memo_.at(s);
      if (m.leaf) continue;
      const auto& inf = inferences(s)[m.inference];
      std::vector<VertexId> src;
      for (auto p : inf.premises) {
        auto [it, fresh] = pos.emplace(p, 0);
        if (fresh) {
          it->second = g.add_vertex(view_.sentence(p));
          order.push_back(p);
        }
        src.push_back(it->second);
      }
      g.add_edge(std::move(src), pos[s], inf.rule);
    }
    if (ids) *ids = pos;
    return make_proof(std::move(g), pos[goal]);
  }

  const Inference& best_inference(SentenceId s) { return inferences(s)[memo_.at(s).inference]; }
  bool leaf_at(SentenceId s) const { return memo_.at(s).leaf; }
  std::int64_t exact(SentenceId s) const { return *memo_.at(s).exact; }

 private:
  struct Memo {
    std::optional<std::int64_t> exact;
    std::int64_t above = -1;  // min > above
    int inference = -1;
    bool leaf = false;
  };

  std::int64_t leaf() const { return kind_ == Kind::Depth ? 0 : 1; }

  std::int64_t lower(SentenceId p) {
    auto it = memo_.find(p);
    if (it == memo_.end()) return leaf();
    if (it->second.exact) return *it->second.exact;
    return std::max(it->second.above + 1, leaf());
  }

  const std::vector<Inference>& inferences(SentenceId s) {
    auto it = cache_.find(s);
    if (it == cache_.end()) it = cache_.emplace(s, view_.expand(s)).first;
    return it->second;
  }

  const DeriverOracle& view_;
  Kind kind_;
  DecideStats& st_;
  std::unordered_map<SentenceId, Memo> memo_;
  std::unordered_map<SentenceId, std::vector<Inference>> cache_;
};

std::int64_t clamp(const Weight::Int& v) {
  constexpr std::int64_t top = std::numeric_limits<std::int64_t>::max() / 4;
  if (v > top) return top;
  return static_cast<std::int64_t>(v);
}

Decision decide_depth_bound(const DeriverOracle& view, const Gci& goal, std::int64_t bound, const DecideOptions& o) {
  Decision d;
  auto g = view.id_of(goal);
  if (!g || bound < 0) return d;
  Solver s(view, Kind::Depth, d.stats);
  auto r = s.solve(*g, bound);
  if (!r) return d;
  d.yes = true;
  d.optimum = Weight(*r);
  if (o.witness) d.witness = s.witness(*g);
  return d;
}

// 2^|S| <= q^p, i.e. |S| <= p log2 q, without floating point
bool within_log_bound(std::size_t s, const Weight& q, std::size_t p) {
  Weight::Rational lhs = 1, rhs = 1;
  for (std::size_t i = 0; i < s; ++i) lhs *= 2;
  for (std::size_t i = 0; i < p; ++i) rhs *= q.value();
  return lhs <= rhs;
}

}  // namespace

Decision decide_depth_leq(const DeriverOracle& view, const Gci& goal, const Weight& q, const DecideOptions& o) {
  return decide_depth_bound(view, goal, clamp(q.floor()), o);
}

Decision decide_logdepth_leq(const DeriverOracle& view, const Gci& goal, const Weight& q, const DecideOptions& o) {
  return decide_depth_bound(view, goal, clamp(pow2_floor(q)), o);
}

Decision decide_treesize_leq(const DeriverOracle& view, const Gci& goal, const Weight& q, const DecideOptions& o) {
  Decision d;
  auto g = view.id_of(goal);
  if (!g || q < Weight(1)) return d;
  Solver solver(view, Kind::TreeSize, d.stats);
  auto r = solver.solve(*g, clamp(q.floor()));
  if (!r) return d;
  d.yes = true;
  d.optimum = Weight(*r);

  // Replay the tuple-set procedure along the solver's choices: pick the
  // smallest budget, replace it by the premises of its best inference, each
  // with its exact minimum as budget. Axioms are closed as leaves.
  const std::size_t p = std::max<std::size_t>(view.max_premises(), 2);
  std::set<BudgetTuple> s{BudgetTuple{*g, q}};
  TupleTree tree;
  std::map<BudgetTuple, int> node_of;
  node_of[*s.begin()] = tree.add(*s.begin(), 0);
  bool incremental = true;
  auto& st = d.stats;
  st.max_s = 1;
  while (!s.empty()) {
    BudgetTuple t = *s.begin();
    s.erase(s.begin());
    ++st.steps;
    std::vector<BudgetTuple> fresh;
    if (!solver.leaf_at(t.sentence)) {
      Weight sum(1);
      for (auto prem : solver.best_inference(t.sentence).premises) {
        BudgetTuple c{prem, Weight(solver.exact(prem))};
        sum += c.budget;
        if (s.insert(c).second) fresh.push_back(c);
      }
      if (t.budget < sum) throw Error("internal", "budget split exceeds the tuple budget");
    }
    st.max_s = std::max(st.max_s, s.size());
    if (!o.debug) continue;

    if (!s.empty() && !within_log_bound(s.size(), q, p)) ++st.bound_violations;
    std::vector<BudgetTuple> now(s.begin(), s.end());
    if (incremental) {
      int n = node_of.at(t);
      node_of.erase(t);
      if (!tree.nodes[n].children.empty()) {
        incremental = false;
      } else if (fresh.size() == 1) {
        tree.nodes[n].tuple = fresh.front();
        node_of[fresh.front()] = n;
      } else {
        tree.remove_leaf(n);
        if (!fresh.empty()) {
          int host = 0;
          for (int leaf : tree.leaves())
            if (host == 0 || tree.nodes[leaf].tuple < tree.nodes[host].tuple) host = leaf;
          for (const auto& c : fresh) node_of[c] = tree.add(c, host);
        }
      }
      if (incremental && !tuple_tree_violations(tree, now, p).empty()) incremental = false;
      if (!incremental) ++st.organization_searches;
    }
    if (!incremental) {
      std::vector<Weight> budgets;
      for (const auto& x : now) budgets.push_back(x.budget);
      auto ok = organizable(std::move(budgets), p);
      if (!ok) {
        ++st.unchecked;
      } else if (!*ok) {
        ++st.tree_violations;
      }
    }
  }
  if (o.witness) d.witness = solver.witness(*g);
  return d;
}

}  // namespace proofforge
