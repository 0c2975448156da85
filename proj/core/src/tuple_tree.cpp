#include "proofforge/optimizer.hpp"

#include <algorithm>
#include <set>

namespace proofforge {

int TupleTree::add(const BudgetTuple& t, int parent) {
  Node n;
  n.tuple = t;
  n.parent = parent;
  nodes.push_back(n);
  int id = static_cast<int>(nodes.size() - 1);
  nodes[parent].children.push_back(id);
  return id;
}

void TupleTree::remove_leaf(int n) {
  auto& kids = nodes[nodes[n].parent].children;
  kids.erase(std::find(kids.begin(), kids.end(), n));
  nodes[n].alive = false;
}

std::vector<int> TupleTree::alive_tuples() const {
  std::vector<int> out;
  for (int i = 1; i < static_cast<int>(nodes.size()); ++i)
    if (nodes[i].alive) out.push_back(i);
  return out;
}

std::vector<int> TupleTree::leaves() const {
  std::vector<int> out;
  for (int i : alive_tuples())
    if (nodes[i].children.empty()) out.push_back(i);
  return out;
}

std::vector<std::string> tuple_tree_violations(const TupleTree& t, const std::vector<BudgetTuple>& s, std::size_t p) {
  std::vector<std::string> out;
  auto name = [&](int n) {
    return "<" + std::to_string(t.nodes[n].tuple.sentence) + "," + t.nodes[n].tuple.budget.str() + ">";
  };
  // every tuple of S exactly once
  std::vector<BudgetTuple> labels;
  for (int n : t.alive_tuples()) labels.push_back(t.nodes[n].tuple);
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) out.push_back("labels: repeated tuple");
  auto want = s;
  std::sort(want.begin(), want.end());
  if (labels != want) out.push_back("labels: nodes do not match S");
  for (int n = 0; n < static_cast<int>(t.nodes.size()); ++n) {
    const auto& node = t.nodes[n];
    if (!node.alive) continue;
    if (node.children.size() > p) out.push_back("fan-out: " + (n ? name(n) : std::string("root")) + " has too many children");
    if (n == 0) continue;
    if (node.children.size() == 1) out.push_back("shape: " + name(n) + " has a single child");
    int inner = 0;
    Weight sum(0);
    for (int c : node.children) {
      sum += t.nodes[c].tuple.budget;
      if (t.nodes[c].children.empty()) continue;
      ++inner;
      if (!(t.nodes[c].tuple.budget + t.nodes[c].tuple.budget < node.tuple.budget))
        out.push_back("inner: inner child " + name(c) + " of " + name(n) + " is not below half");
    }
    if (inner > 1) out.push_back("inner: " + name(n) + " has several inner children");
    if (!node.children.empty() && !(sum < node.tuple.budget))
      out.push_back("budget: children of " + name(n) + " sum to " + sum.str());
  }
  return out;
}

namespace {

// every non-root node has at most one inner child, so each root child heads
// a spine: a chain of inner nodes with leaves hanging off
class Organizer {
 public:
  Organizer(std::vector<Weight> b, std::size_t p) : b_(std::move(b)), p_(p), n_(b_.size()) {
    spine_.assign((std::size_t(1) << n_) * n_, -1);
    sum_.resize(std::size_t(1) << n_);
    for (std::uint32_t m = 1; m < (1u << n_); ++m) {
      int low = __builtin_ctz(m);
      sum_[m] = sum_[m & (m - 1)] + b_[low];
    }
  }

  bool run() {
    const std::uint32_t full = (1u << n_) - 1;
    std::vector<int> cover(std::size_t(1) << n_, 1 << 20);
    cover[0] = 0;
    for (std::uint32_t m = 1; m <= full; ++m) {
      std::uint32_t low = m & (~m + 1);
      for (std::uint32_t sub = m; sub; sub = (sub - 1) & m) {
        if (!(sub & low) || cover[m ^ sub] + 1 >= cover[m]) continue;
        for (std::size_t top = 0; top < n_; ++top)
          if ((sub >> top & 1u) && spine(sub, top)) {
            cover[m] = cover[m ^ sub] + 1;
            break;
          }
      }
    }
    return static_cast<std::size_t>(cover[full]) <= p_;
  }

 private:
  bool spine(std::uint32_t mask, std::size_t top) {
    signed char& memo = spine_[std::size_t(mask) * n_ + top];
    if (memo >= 0) return memo;
    const std::uint32_t rest = mask & ~(1u << top);
    bool ok = false;
    if (rest == 0) {
      ok = true;
    } else {
      const Weight& cap = b_[top];
      const auto cnt = static_cast<std::size_t>(__builtin_popcount(rest));
      // only leaves below top
      if (cnt >= 2 && cnt <= p_ && sum_[rest] < cap) ok = true;
      for (std::size_t c = 0; c < n_ && !ok; ++c) {
        if (!(rest >> c & 1u) || !(b_[c] + b_[c] < cap)) continue;
        const std::uint32_t others = rest & ~(1u << c);
        for (std::uint32_t leaves = others; leaves && !ok; leaves = (leaves - 1) & others) {
          const auto k = static_cast<std::size_t>(__builtin_popcount(leaves)) + 1;
          if (k > p_) continue;
          if (!(sum_[leaves] + b_[c] < cap)) continue;
          const std::uint32_t below = rest & ~leaves;
          if (below == (1u << c)) continue;  // c would be a leaf
          ok = spine(below, c);
        }
      }
    }
    memo = ok ? 1 : 0;
    return ok;
  }

  std::vector<Weight> b_;
  std::size_t p_;
  std::size_t n_;
  std::vector<signed char> spine_;
  std::vector<Weight> sum_;
};

}  // namespace

std::optional<bool> organizable(std::vector<Weight> budgets, std::size_t p) {
  if (budgets.size() <= 1) return true;
  if (budgets.size() > 12) return std::nullopt;
  return Organizer(std::move(budgets), p).run();
}

}  // namespace proofforge
