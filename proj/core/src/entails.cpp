#include "proofforge/derivers.hpp"
#include "proofforge/logic.hpp"

namespace proofforge {

namespace {

bool entails_eli(const Theory& t, Gci goal) {
  switch (goal.rhs.kind()) {
    case ConceptKind::Top: return true;
    case ConceptKind::And:
      for (const auto& o : goal.rhs.operands())
        if (!entails_eli(t, Gci{goal.lhs, o})) return false;
      return true;
    case ConceptKind::Forall:
      // C <= all r.D  iff  ex inv(r).C <= D
      return entails_eli(t, Gci{Concept::exists(goal.rhs.role().inverted(), goal.lhs), goal.rhs.filler()});
    default: break;
  }
  Theory ext(Dialect::ELI);
  for (const auto& a : t.axioms()) ext.add(a);
  Concept lhs = goal.lhs, rhs = goal.rhs;
  if (!lhs.name_set()) {
    lhs = Concept::name(std::string(kFreshPrefix) + "goal_lhs");
    ext.add(Gci{lhs, goal.lhs});
  }
  if (!rhs.is_name()) {
    rhs = Concept::name(std::string(kFreshPrefix) + "goal_rhs");
    ext.add(Gci{goal.rhs, rhs});
  }
  NormalizedTheory n;
  try {
    n = normalize_eli(ext);
  } catch (const Error& e) {
    throw Error("unsupported-goal", "cannot decide " + goal.str() + ": " + e.what());
  }
  Gci g{lhs, rhs};
  auto d = eli_materialize(n.theory, g);
  return d.find(g).has_value();
}

}  // namespace

bool entails(const Theory& t, const Gci& goal) {
  const bool el_goal = !goal.lhs.mentions_inverse_or_forall() && !goal.rhs.mentions_inverse_or_forall();
  if (t.dialect() == Dialect::EL && el_goal) {
    auto view = lazy_view(DeriverKind::Elk, t, goal);
    return view->id_of(goal).has_value();
  }
  return entails_eli(t, goal);
}

bool entails_normal(const Theory& t, const Gci& goal) {
  if (!is_eli_normal(goal)) throw Error("unsupported-goal", "not in normal form: " + goal.str());
  return entails_eli(t, goal);
}

EntailmentOracle el_entailment_oracle() {
  return [](const std::vector<Gci>& premises, const Gci& conclusion) {
    Theory t(Dialect::EL);
    for (const auto& p : premises) t.add(p);
    return entails(t, conclusion);
  };
}

EntailmentOracle eli_entailment_oracle() {
  return [](const std::vector<Gci>& premises, const Gci& conclusion) {
    Theory t(Dialect::ELI);
    for (const auto& p : premises) t.add(p);
    return entails_eli(t, conclusion);
  };
}

}  // namespace proofforge
