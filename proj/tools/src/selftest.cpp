#include "proofforge/cli.hpp"

#include "proofforge/optimizer.hpp"
#include "proofforge/sampling.hpp"

#include <functional>

namespace proofforge::cli {

namespace {

struct Tally {
  std::size_t pass = 0, total = 0;
  void check(bool ok) {
    ++total;
    pass += ok;
  }
};

bool search_clean(const SearchStats& s) {
  return !s.pop_order_violations && !s.double_pops && !s.acyclicity_mismatches && !s.invalid_intermediate;
}

}  // namespace

std::size_t selftest(const SelftestOptions& o, std::ostream& out) {
  Rng rng(o.seed);
  const Measure measures[] = {depth_measure(), tree_size_measure()};
  Tally oracle, internals, unravel_eq, image, deciders, logdepth;

  for (std::size_t i = 0; i < o.count; ++i) {
    auto s = random_structure(rng);
    DerivationStructure d;
    d.graph = s.graph;
    d.axiom = s.axiom;
    d.max_premises = 3;
    d.index_labels();
    auto view = structure_view(d);
    const Gci goal = s.graph.label(s.goal);
    for (const auto& m : measures) {
      auto fast = dijkstra_optimal(s.graph, s.axiom, m, s.goal, DijkstraOptions{true, nullptr});
      auto slow = brute_force_optimal(s.graph, s.axiom, as_proof_weight(m), s.goal);
      oracle.check(fast.weight == slow.weight && evaluate(m, fast.proof) == fast.weight);
      internals.check(search_clean(fast.stats));
      for (int delta = -1; delta <= 1; ++delta) {
        if (delta < 0 && fast.weight == Weight(0)) continue;
        Weight q(fast.weight.value() + delta);
        auto dec = m.name == "depth" ? decide_depth_leq(*view, goal, q, {o.debug, true})
                                     : decide_treesize_leq(*view, goal, q, {o.debug, true});
        bool ok = dec.yes == (fast.weight <= q);
        if (dec.witness) ok = ok && evaluate(m, *dec.witness) <= q;
        ok = ok && dec.stats.bound_violations == 0 && dec.stats.tree_violations == 0;
        deciders.check(ok);
      }
    }
    auto by_depth = dijkstra_optimal(s.graph, s.axiom, depth_measure(), s.goal);
    auto by_log = dijkstra_optimal(s.graph, s.axiom, log_depth_measure(), s.goal);
    logdepth.check(evaluate(depth_measure(), by_log.proof) == by_depth.weight);

    auto p = random_proof(rng);
    for (const auto& m : measures) unravel_eq.check(evaluate(m, p) == evaluate(m, unravel(p)));

    auto smp = random_image_sample(rng);
    for (const auto& m : measures) {
      auto q = collapse_image(smp.proof, smp.map, smp.structure, smp.axiom, m);
      image.check(q.graph.label(q.sink) == smp.proof.graph.label(smp.proof.sink) &&
                  evaluate(m, q) <= evaluate(m, smp.proof));
    }
  }

  std::size_t failures = 0;
  auto line = [&](const char* name, const Tally& t) {
    failures += t.total - t.pass;
    out << "suite " << name << ": " << t.pass << "/" << t.total << (t.pass == t.total ? " ok" : " FAIL") << "\n";
  };
  line("dijkstra-vs-bruteforce", oracle);
  line("search-internals", internals);
  line("budget-deciders", deciders);
  line("logdepth-argmin", logdepth);
  line("unravel-invariance", unravel_eq);
  line("image-collapse", image);
  out << "seed " << o.seed << ", " << failures << " failures\n";
  return failures;
}

}  // namespace proofforge::cli
