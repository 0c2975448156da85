#include "doctest.h"

#include "sample.hpp"
#include "oracles.hpp"
#include "proofforge/error.hpp"
#include "proofforge/measures.hpp"
#include "proofforge/sampling.hpp"

using namespace proofforge;

namespace {

Proof single_leaf() {
  Hypergraph h;
  h.add_vertex(parse_gci("A <= B"));
  return make_proof(std::move(h), 0);
}

}  // namespace

TEST_CASE("depth") {
  CHECK(evaluate(depth_measure(), sample::dag()) == Weight(2));
  CHECK(evaluate(depth_measure(), unravel(sample::dag())) == Weight(2));
  CHECK(evaluate(depth_measure(), single_leaf()) == Weight(0));
}

TEST_CASE("tree size") {
  CHECK(evaluate(tree_size_measure(), sample::tree()) == Weight(5));
  // the shared A <= B counts in both branches
  CHECK(evaluate(tree_size_measure(), sample::dag()) == Weight(5));
  CHECK(evaluate(tree_size_measure(), single_leaf()) == Weight(1));
}

TEST_CASE("size counts vertices") {
  CHECK(size(sample::dag()) == Weight(4));
  CHECK(size(sample::tree()) == Weight(5));
  CHECK(size(single_leaf()) == Weight(1));
}

TEST_CASE("log-depth thresholds") {
  Measure m = log_depth_measure();
  CHECK(m.within(Weight(8), Weight(3)));
  CHECK_FALSE(m.within(Weight(9), Weight(3)));
  CHECK(m.within(Weight(0), Weight(0)));
  CHECK(m.within(Weight(1), Weight(0)));
  CHECK_FALSE(m.within(Weight(2), Weight(0)));
  // 2^(3/2) = 2.83.., so depth 2 fits and 3 does not
  CHECK(m.within(Weight(2), Weight::parse("3/2")));
  CHECK_FALSE(m.within(Weight(3), Weight::parse("3/2")));
  CHECK(m.display(Weight(8)) == "3.000000");
  // log is monotone, so the stored depth orders proofs the same way
  CHECK(evaluate(m, sample::dag()) == evaluate(depth_measure(), sample::dag()));
}

TEST_CASE("monotonicity checks") {
  EdgeLabel l{{}, parse_gci("A <= B")};
  auto d = check_monotone(depth_measure(), {l}, {{Weight(2), Weight(3)}}, {Weight(1)});
  CHECK(d.ok());
  CHECK(d.checks > 0);
  auto t = check_monotone(tree_size_measure(), {l}, {{Weight(1), Weight(1)}}, {Weight(0)});
  CHECK(t.ok());

  Measure odd = depth_measure();
  odd.name = "spread";
  odd.edge_fn = [](const EdgeLabel&, const std::vector<Weight>& q) -> std::optional<Weight> {
    auto [lo, hi] = std::minmax_element(q.begin(), q.end());
    return Weight(hi->value() - lo->value() + 1);
  };
  // {2,2} -> 1, lowering one to 0 gives {0,2} -> 3
  auto bad = check_monotone(odd, {l}, {{Weight(2), Weight(2)}}, {Weight(0)});
  CHECK_FALSE(bad.ok());
}

TEST_CASE("unraveling keeps both measures") {
  Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    auto p = random_proof(rng);
    auto u = unravel(p);
    CHECK(evaluate(depth_measure(), p) == evaluate(depth_measure(), u));
    CHECK(evaluate(tree_size_measure(), p) == evaluate(tree_size_measure(), u));
    CHECK(evaluate(depth_measure(), p) == Weight(oracle::weigh(p, oracle::Agg::Max)));
    CHECK(evaluate(tree_size_measure(), p) == Weight(oracle::weigh(p, oracle::Agg::Sum)));
  }
}

TEST_CASE("weights") {
  CHECK(Weight::parse("3/2").str() == "3/2");
  CHECK(Weight::parse("0.25").str() == "1/4");
  CHECK(Weight::parse("6/4") == Weight::parse("3/2"));
  CHECK_THROWS_AS(Weight::parse("-1"), Error);
  CHECK_THROWS_AS(Weight::parse("1/0"), Error);
  CHECK_THROWS_AS(Weight::parse("x"), Error);
  CHECK(pow2_floor(Weight(3)) == 8);
  CHECK(pow2_floor(Weight::parse("1/2")) == 1);
  CHECK(measure_by_name("treesize").name == "treesize");
  CHECK_THROWS_AS(measure_by_name("size"), Error);
}
