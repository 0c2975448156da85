#include "proofforge/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace proofforge {

namespace {

Concept nm(const std::string& s) { return Concept::name(s); }
Concept both(const std::string& a, const std::string& b) { return Concept::names({a, b}); }

void add(Theory& t, Concept l, Concept r) { t.add(Gci{std::move(l), std::move(r)}); }

// A <= ex pad.Pad1, Pad_i <= ex pad.Pad_{i+1}, Pad_L <= B, B <= all inv(pad).B.
// The only proof of A <= B through it has depth 2L.
void pad_role_chain(Theory& t, const std::string& a, const std::string& b, std::size_t len) {
  const Role pad{"pad", false};
  auto p = [](std::size_t i) { return "Pad" + std::to_string(i); };
  add(t, nm(a), Concept::exists(pad, nm(p(1))));
  for (std::size_t i = 1; i < len; ++i) add(t, nm(p(i)), Concept::exists(pad, nm(p(i + 1))));
  add(t, nm(p(len)), nm(b));
  add(t, nm(b), Concept::forall(pad.inverted(), nm(b)));
}

void check_fresh(const Theory& t, const std::vector<std::string>& prefixes) {
  for (const auto& n : t.concept_names())
    for (const auto& p : prefixes)
      if (n.rfind(p, 0) == 0 && n.size() > p.size() &&
          std::all_of(n.begin() + p.size(), n.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw Error("name-clash", "theory already uses the generated name " + n);
}

}  // namespace

ReductionInstance pad_depth_chain(const Theory& t, const std::string& a, const std::string& b) {
  if (t.dialect() != Dialect::EL) throw Error("dialect", "chain padding needs an EL theory");
  check_fresh(t, {"Chain"});
  const Gci goal{nm(a), nm(b)};
  // acyclic paths visit each vertex once, so depth never exceeds this
  const std::size_t q = elk_materialize(t, goal).graph.vertex_count();
  ReductionInstance r;
  r.theory = t;
  auto c = [](std::size_t i) { return "Chain" + std::to_string(i); };
  add(r.theory, nm(a), nm(c(1)));
  for (std::size_t i = 1; i < q + 2; ++i) add(r.theory, nm(c(i)), nm(c(i + 1)));
  add(r.theory, nm(c(q + 2)), nm(b));
  r.goal = goal;
  r.threshold = Weight(static_cast<std::int64_t>(q));
  r.measure = "depth";
  r.deriver = DeriverKind::Elk;
  r.meta["chain_length"] = std::to_string(q + 2);
  return r;
}

DeepTheory deep_eli_theory(std::size_t n) {
  if (n == 0) throw Error("usage", "deep theory needs n >= 1");
  Theory t(Dialect::ELI);
  const Role r{"r", false};
  auto ix = [](const char* s, std::size_t i) { return std::string(s) + std::to_string(i); };
  add(t, nm("A"), nm("Node"));
  for (std::size_t i = 0; i < n; ++i) add(t, nm("A"), nm(ix("Zero", i)));
  add(t, nm("Node"), Concept::exists(r, nm("Node")));
  add(t, nm("Node"), nm("Carry0"));
  for (std::size_t i = 0; i < n; ++i) {
    const auto one = ix("One", i), zero = ix("Zero", i);
    if (i + 1 < n) {
      add(t, both(ix("Carry", i), one), nm(ix("Carry", i + 1)));
      add(t, nm(zero), nm(ix("NoCarry", i + 1)));
      if (i >= 1) add(t, nm(ix("NoCarry", i)), nm(ix("NoCarry", i + 1)));
    }
    // the bit in the successor
    add(t, both(ix("Carry", i), one), Concept::forall(r, nm(zero)));
    add(t, both(ix("Carry", i), zero), Concept::forall(r, nm(one)));
    if (i >= 1) {
      add(t, both(ix("NoCarry", i), one), Concept::forall(r, nm(one)));
      add(t, both(ix("NoCarry", i), zero), Concept::forall(r, nm(zero)));
    }
  }
  // all bits set and a carry arriving: the counter has run through 2^n values
  add(t, both(ix("Carry", n - 1), ix("One", n - 1)), nm("B"));
  add(t, nm("B"), Concept::forall(r.inverted(), nm("B")));
  return DeepTheory{std::move(t), Gci{nm("A"), nm("B")}};
}

ReductionInstance qbf_to_eli(const Qbf& f) {
  const std::size_t m = f.prefix.size();
  Theory t(Dialect::ELI);
  const Role r1{"r1", false}, r2{"r2", false};
  auto lvl = [](std::size_t i) { return "Lvl" + std::to_string(i); };
  auto lit = [](const std::string& v, bool neg) { return (neg ? "Neg_" : "Pos_") + v; };

  add(t, nm("A"), nm(lvl(0)));
  for (std::size_t i = 1; i <= m; ++i) {
    const auto& x = f.prefix[i - 1].var;
    add(t, nm(lvl(i - 1)), Concept::exists(r1, both(lvl(i), lit(x, false))));
    add(t, nm(lvl(i - 1)), Concept::exists(r2, both(lvl(i), lit(x, true))));
  }
  for (const auto& q : f.prefix)
    for (bool neg : {false, true})
      for (const auto& r : {r1, r2}) add(t, nm(lit(q.var, neg)), Concept::forall(r, nm(lit(q.var, neg))));

  // one name per distinct subformula
  std::map<std::string, std::string> names;
  std::function<std::string(const QbfNode&)> encode = [&](const QbfNode& n) -> std::string {
    if (n.op == QbfNode::Op::Lit) return lit(n.var, n.negated);
    auto a = encode(n.kids[0]);
    auto b = encode(n.kids[1]);
    auto [it, fresh] = names.emplace(n.str(), "Sub" + std::to_string(names.size()));
    if (fresh) {
      if (n.op == QbfNode::Op::And) {
        add(t, both(a, b), nm(it->second));
      } else {
        add(t, nm(a), nm(it->second));
        add(t, nm(b), nm(it->second));
      }
    }
    return it->second;
  };
  add(t, nm(encode(f.matrix)), nm("B"));

  for (std::size_t i = 1; i <= m; ++i) {
    const Concept at = both(lvl(i), "B");
    if (f.prefix[i - 1].universal) {
      add(t, at, Concept::forall(r1.inverted(), nm("B1")));
      add(t, at, Concept::forall(r2.inverted(), nm("B2")));
    } else {
      add(t, at, Concept::forall(r1.inverted(), nm("B")));
      add(t, at, Concept::forall(r2.inverted(), nm("B")));
    }
  }
  if (std::any_of(f.prefix.begin(), f.prefix.end(), [](const auto& q) { return q.universal; }))
    add(t, both("B1", "B2"), nm("B"));

  // A valid formula has a proof that walks down m levels (one CR2 and up to
  // 2m CR4 growth steps in total), evaluates the matrix bottom-up, and climbs
  // back with a CR2/CR3 pair per level.
  const std::size_t h = f.matrix.height();
  const std::size_t q = std::max(m + 2, h + 2) + 3 * m;
  ReductionInstance out;
  out.theory = std::move(t);
  pad_role_chain(out.theory, "A", "B", q / 2 + 1);
  out.goal = Gci{nm("A"), nm("B")};
  out.threshold = Weight(static_cast<std::int64_t>(q));
  out.measure = "depth";
  out.deriver = DeriverKind::Eli;
  out.meta["formula"] = f.str();
  out.meta["variables"] = std::to_string(m);
  out.meta["matrix_height"] = std::to_string(h);
  return out;
}

Weight tm_threshold(std::size_t states, std::size_t letters, std::size_t k) {
  Weight::Int configs = states;
  for (std::size_t i = 0; i < k; ++i) configs *= letters;
  return Weight((configs + 1) * (11 * Weight::Int(k) + 22), 1);
}

ReductionInstance tm_to_eli(const TuringMachine& m, const std::vector<std::string>& word) {
  for (const auto& a : word)
    if (std::find(m.input.begin(), m.input.end(), a) == m.input.end())
      throw Error("bad-word", "'" + a + "' is not an input letter");
  const std::size_t k = m.space_bound(word.size());
  if (word.size() > k + 1) throw Error("bad-word", "the word does not fit into the space bound");
  Theory t(Dialect::ELI);
  const Role r{"r", false};
  auto st = [](const std::string& q) { return "St_" + q; };
  auto cell = [](std::size_t i, const std::string& a) { return "Cell" + std::to_string(i) + "_" + a; };
  auto head = [](std::size_t i) { return "Head" + std::to_string(i); };
  auto away = [](std::size_t i) { return "Away" + std::to_string(i); };

  std::vector<Concept> init{nm(st(m.start)), nm(head(0))};
  for (std::size_t i = 0; i <= k; ++i) {
    init.push_back(nm(cell(i, i < word.size() ? word[i] : m.blank)));
    if (i > 0) init.push_back(nm(away(i)));
  }
  add(t, nm("Start"), Concept::conj(init));

  for (std::size_t i = 0; i <= k; ++i) {
    for (const auto& [key, mv] : m.delta) {
      const auto to = static_cast<std::int64_t>(i) + mv.dir;
      if (to < 0 || to > static_cast<std::int64_t>(k)) continue;  // would leave the tape
      std::vector<Concept> rhs{Concept::exists(r, nm(st(mv.state))), Concept::forall(r, nm(cell(i, mv.write))),
                               Concept::forall(r, nm(head(static_cast<std::size_t>(to))))};
      for (std::size_t j = 0; j <= k; ++j)
        if (static_cast<std::int64_t>(j) != to) rhs.push_back(Concept::forall(r, nm(away(j))));
      add(t, Concept::names({st(key.first), cell(i, key.second), head(i)}), Concept::conj(rhs));
    }
    for (const auto& a : m.alphabet) add(t, both(cell(i, a), away(i)), Concept::forall(r, nm(cell(i, a))));
  }
  for (const auto& f : m.accept) add(t, nm(st(f)), nm("Accept"));
  add(t, nm("Accept"), Concept::forall(r.inverted(), nm("Accept")));

  ReductionInstance out;
  out.threshold = tm_threshold(m.states.size(), m.alphabet.size(), k);
  // tree size >= depth = 2L, so L = q/2 + 1 keeps the padding proof above q
  pad_role_chain(t, "Start", "Accept", static_cast<std::size_t>(out.threshold.floor_i64() / 2 + 1));
  out.theory = std::move(t);
  out.goal = Gci{nm("Start"), nm("Accept")};
  out.measure = "treesize";
  out.deriver = DeriverKind::Eli;
  out.meta["k"] = std::to_string(k);
  std::string w;
  for (const auto& a : word) w += a;
  out.meta["word"] = w;
  return out;
}

bool decide_instance(const ReductionInstance& inst, const Budget& b, bool debug, DecideStats* stats) {
  std::unique_ptr<DeriverOracle> view;
  if (inst.deriver == DeriverKind::Elk) {
    view = lazy_view(DeriverKind::Elk, inst.theory, inst.goal, b);
  } else {
    view = lazy_view(DeriverKind::Eli, normalize_eli(inst.theory).theory, inst.goal, b);
  }
  DecideOptions o;
  o.debug = debug;
  o.witness = false;
  Decision d;
  if (inst.measure == "depth") {
    d = decide_depth_leq(*view, inst.goal, inst.threshold, o);
  } else if (inst.measure == "treesize") {
    d = decide_treesize_leq(*view, inst.goal, inst.threshold, o);
  } else if (inst.measure == "logdepth") {
    d = decide_logdepth_leq(*view, inst.goal, inst.threshold, o);
  } else {
    throw Error("usage", "no decider for measure " + inst.measure);
  }
  if (stats) *stats = d.stats;
  return d.yes;
}

}  // namespace proofforge
