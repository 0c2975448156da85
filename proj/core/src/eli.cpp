#include "engines.hpp"

#include <algorithm>

namespace proofforge {

namespace detail {

EliEngine::NameId EliEngine::name_id(const std::string& n) {
  auto [it, fresh] = name_ix_.emplace(n, static_cast<NameId>(names_.size()));
  if (fresh) {
    names_.push_back(n);
    holders_.emplace_back();
    by_name_.emplace_back();
  }
  return it->second;
}

EliEngine::SetId EliEngine::set_id(std::vector<NameId> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  auto [it, fresh] = set_ix_.emplace(s, static_cast<SetId>(sets_.size()));
  if (fresh) {
    sets_.push_back(std::move(s));
    appears_.push_back(false);
    subs_.emplace_back();
  }
  return it->second;
}

std::uint32_t EliEngine::role_id(const Role& r) {
  for (std::uint32_t i = 0; i < roles_.size(); ++i)
    if (roles_[i].name == r.name) return 2 * i + (r.inverse ? 1 : 0);
  roles_.push_back(Role{r.name, false});
  return 2 * static_cast<std::uint32_t>(roles_.size() - 1) + (r.inverse ? 1 : 0);
}

Gci EliEngine::label(const Sentence& s) const {
  auto conj = [&](SetId id) {
    std::vector<std::string> ns;
    for (auto n : sets_[id]) ns.push_back(names_[n]);
    return Concept::names(ns);
  };
  Role r{roles_.empty() ? std::string() : roles_[s.role / 2].name, (s.role & 1u) != 0};
  switch (s.kind) {
    case Kind::Sub: return Gci{conj(s.lhs), Concept::name(names_[s.arg])};
    case Kind::Ex: return Gci{conj(s.lhs), Concept::exists(r, conj(s.arg))};
    case Kind::All: return Gci{conj(s.lhs), Concept::forall(r, Concept::name(names_[s.arg]))};
  }
  return {};
}

EliEngine::EliEngine(const Theory& t, const Gci& goal, const Budget& b) {
  g.max_vertices = b.max_vertices;
  auto names_of = [&](const Concept& c) {
    auto ns = c.name_set();
    if (!ns) throw Error("normal-form", "not a conjunction of names: " + c.str());
    std::vector<NameId> ids;
    for (const auto& n : *ns) ids.push_back(name_id(n));
    return set_id(std::move(ids));
  };
  auto to_sentence = [&](const Gci& a) {
    if (!is_eli_normal(a)) throw Error("normal-form", "the ELI deriver needs normalized axioms: " + a.str());
    Sentence s{names_of(a.lhs), Kind::Sub, 0, 0};
    switch (a.rhs.kind()) {
      case ConceptKind::Name: s.arg = name_id(a.rhs.name()); break;
      case ConceptKind::Exists:
        s.kind = Kind::Ex, s.role = role_id(a.rhs.role()), s.arg = names_of(a.rhs.filler());
        break;
      default:
        s.kind = Kind::All, s.role = role_id(a.rhs.role()), s.arg = name_id(a.rhs.filler().name());
        break;
    }
    return s;
  };
  for (const auto& a : t.axioms()) derive(to_sentence(a), {}, "", true);
  // the goal's left side appears from the start
  appear(names_of(goal.lhs));
}

VertexId EliEngine::derive(const Sentence& s, std::vector<VertexId> prem, const char* rule, bool is_axiom) {
  Gci l = label(s);
  const bool known = g.find(l).has_value();
  VertexId v = g.vertex(l, is_axiom);
  if (!known) {
    sent_.push_back(s);
    done_.push_back(false);
    work_.push_back(v);
  }
  if (!is_axiom && std::find(prem.begin(), prem.end(), v) == prem.end()) {
    max_premises = std::max(max_premises, prem.size());
    g.graph.add_edge(std::move(prem), v, rule);
  }
  return v;
}

bool EliEngine::holds_all(SetId m, SetId k) const {
  const auto& have = subs_[m];
  for (auto a : sets_[k])
    if (a >= have.size() || !have[a]) return false;
  return true;
}

void EliEngine::appear(SetId m) {
  if (appears_[m]) return;
  appears_[m] = true;
  appearing_.push_back(m);
  for (auto a : sets_[m]) derive(Sentence{m, Kind::Sub, 0, a}, {}, "CR1");
  for (auto v : top_lhs_) {
    Sentence s = sent_[v];
    s.lhs = m;
    derive(s, {v}, "CR2");
  }
}

void EliEngine::run() {
  while (!work_.empty()) {
    VertexId v = work_.front();
    work_.pop_front();
    if (done_[v]) continue;
    done_[v] = true;
    const Sentence s = sent_[v];  // sent_ grows while processing
    process(v, s);
  }
}

void EliEngine::process(VertexId v, const Sentence& s) {
  appear(s.lhs);
  if (s.kind == Kind::Ex) appear(s.arg);

  // CR2 premises  m <= a  for a in K, plus  K <= C  itself
  auto cr2 = [&](SetId m, VertexId kc) {
    const Sentence& k = sent_[kc];
    if (m == k.lhs) return;
    std::vector<VertexId> prem{kc};
    for (auto a : sets_[k.lhs]) prem.push_back(*g.find(label(Sentence{m, Kind::Sub, 0, a})));
    Sentence out = k;
    out.lhs = m;
    derive(out, std::move(prem), "CR2");
  };

  // as the  K <= C  premise of CR2
  if (sets_[s.lhs].empty()) {
    top_lhs_.push_back(v);
    auto ms = appearing_;
    for (auto m : ms) cr2(m, v);
  } else {
    auto first = sets_[s.lhs].front();
    for (auto a : sets_[s.lhs]) by_name_[a].push_back(v);
    auto ms = holders_[first];
    for (auto m : ms)
      if (holds_all(m, s.lhs)) cr2(m, v);
  }

  switch (s.kind) {
    case Kind::Sub: {
      // as one of the  m <= a  premises of CR2
      auto& have = subs_[s.lhs];
      if (have.size() <= s.arg) have.resize(names_.size(), 0);
      have[s.arg] = 1;
      holders_[s.arg].push_back(s.lhs);
      auto ks = by_name_[s.arg];
      for (auto kc : ks)
        if (holds_all(s.lhs, sent_[kc].lhs)) cr2(s.lhs, kc);
      break;
    }
    case Kind::Ex: {
      ex_by_filler_[key(s.arg, s.role)].push_back(v);
      ex_by_lhs_[key(s.lhs, s.role)].push_back(v);
      // CR3: M <= ex r.L, L <= all inv(r).A
      auto alls = all_by_lhs_[key(s.arg, flip(s.role))];
      for (auto w : alls) derive(Sentence{s.lhs, Kind::Sub, 0, sent_[w].arg}, {v, w}, "CR3");
      // CR4: L <= ex r.M, L <= all r.A
      auto alls2 = all_by_lhs_[key(s.lhs, s.role)];
      for (auto w : alls2) {
        auto m = sets_[s.arg];
        m.push_back(sent_[w].arg);
        SetId grown = set_id(std::move(m));
        if (grown != s.arg) derive(Sentence{s.lhs, Kind::Ex, s.role, grown}, {v, w}, "CR4");
      }
      break;
    }
    case Kind::All: {
      all_by_lhs_[key(s.lhs, s.role)].push_back(v);
      auto exs = ex_by_filler_[key(s.lhs, flip(s.role))];
      for (auto w : exs) derive(Sentence{sent_[w].lhs, Kind::Sub, 0, s.arg}, {w, v}, "CR3");
      auto exs2 = ex_by_lhs_[key(s.lhs, s.role)];
      for (auto w : exs2) {
        auto m = sets_[sent_[w].arg];
        m.push_back(s.arg);
        SetId grown = set_id(std::move(m));
        if (grown != sent_[w].arg) derive(Sentence{s.lhs, Kind::Ex, s.role, grown}, {w, v}, "CR4");
      }
      break;
    }
  }
}

}  // namespace detail

DerivationStructure eli_materialize(const Theory& t, const Gci& goal, const Budget& b) {
  if (t.dialect() != Dialect::ELI && t.dialect() != Dialect::EL) throw Error("dialect", "unknown dialect");
  detail::EliEngine e(t, goal, b);
  e.run();
  DerivationStructure d;
  d.kind = DeriverKind::Eli;
  d.graph = std::move(e.g.graph);
  d.axiom = std::move(e.g.axiom);
  d.theory = t;
  d.goal = goal;
  d.max_premises = e.max_premises;
  d.index_labels();
  return d;
}

}  // namespace proofforge
