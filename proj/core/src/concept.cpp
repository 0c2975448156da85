#include "proofforge/logic.hpp"

#include <algorithm>

namespace proofforge {

struct Concept::Node {
  ConceptKind kind = ConceptKind::Top;
  std::string name;
  Role role;
  std::vector<Concept> operands;  // And operands, or the single filler
  std::string text;
  std::size_t size = 1;
  std::size_t hash = 0;
  bool inverse_or_forall = false;
};

namespace {

std::shared_ptr<Concept::Node> finish(std::shared_ptr<Concept::Node> n) {
  n->hash = std::hash<std::string>{}(n->text);
  return n;
}

}  // namespace

Concept::Concept() : Concept(top()) {}

Concept Concept::top() {
  static const std::shared_ptr<const Node> t = [] {
    auto n = std::make_shared<Node>();
    n->text = "top";
    return finish(n);
  }();
  return Concept(t);
}

Concept Concept::name(std::string nm) {
  auto n = std::make_shared<Node>();
  n->kind = ConceptKind::Name;
  n->text = nm;
  n->name = std::move(nm);
  return Concept(finish(n));
}

Concept Concept::conj(std::vector<Concept> parts) {
  std::vector<Concept> flat;
  flat.reserve(parts.size());
  for (auto& p : parts) {
    if (p.kind() == ConceptKind::And) {
      for (const auto& q : p.operands()) flat.push_back(q);
    } else if (!p.is_top()) {
      flat.push_back(std::move(p));
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return top();
  if (flat.size() == 1) return flat.front();

  auto n = std::make_shared<Node>();
  n->kind = ConceptKind::And;
  n->text = "(";
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (i) n->text += " and ";
    n->text += flat[i].str();
    n->size += flat[i].size();
    n->inverse_or_forall |= flat[i].mentions_inverse_or_forall();
  }
  n->text += ")";
  n->operands = std::move(flat);
  return Concept(finish(n));
}

Concept Concept::names(const std::vector<std::string>& ns) {
  std::vector<Concept> parts;
  parts.reserve(ns.size());
  for (const auto& s : ns) parts.push_back(name(s));
  return conj(std::move(parts));
}

namespace {

std::shared_ptr<Concept::Node> quantified(ConceptKind k, Role r, Concept filler) {
  auto n = std::make_shared<Concept::Node>();
  n->kind = k;
  n->text = std::string(k == ConceptKind::Exists ? "ex " : "all ") + r.str() + ". " + filler.str();
  n->size = 1 + filler.size();
  n->inverse_or_forall = k == ConceptKind::Forall || r.inverse || filler.mentions_inverse_or_forall();
  n->role = std::move(r);
  n->operands.push_back(std::move(filler));
  return finish(n);
}

}  // namespace

Concept Concept::exists(Role r, Concept filler) {
  return Concept(quantified(ConceptKind::Exists, std::move(r), std::move(filler)));
}

Concept Concept::forall(Role r, Concept filler) {
  return Concept(quantified(ConceptKind::Forall, std::move(r), std::move(filler)));
}

ConceptKind Concept::kind() const { return node_->kind; }
const std::string& Concept::name() const { return node_->name; }
const Role& Concept::role() const { return node_->role; }
const Concept& Concept::filler() const { return node_->operands.front(); }
const std::vector<Concept>& Concept::operands() const { return node_->operands; }
const std::string& Concept::str() const { return node_->text; }
std::size_t Concept::size() const { return node_->size; }
std::size_t Concept::hash() const { return node_->hash; }
bool Concept::mentions_inverse_or_forall() const { return node_->inverse_or_forall; }

std::optional<std::vector<std::string>> Concept::name_set() const {
  switch (kind()) {
    case ConceptKind::Top: return std::vector<std::string>{};
    case ConceptKind::Name: return std::vector<std::string>{name()};
    case ConceptKind::And: {
      std::vector<std::string> out;
      for (const auto& o : operands()) {
        if (!o.is_name()) return std::nullopt;
        out.push_back(o.name());
      }
      return out;
    }
    default: return std::nullopt;
  }
}

// ---- Theory ----------------------------------------------------------------

std::string dialect_name(Dialect d) { return d == Dialect::EL ? "EL" : "ELI"; }

Theory::Theory(Dialect d, std::vector<Gci> axioms) : dialect_(d) {
  for (auto& a : axioms) add(a);
}

void Theory::set_dialect(Dialect d) {
  if (d == Dialect::EL) {
    for (const auto& a : axioms_)
      if (a.lhs.mentions_inverse_or_forall() || a.rhs.mentions_inverse_or_forall())
        throw Error("dialect", "axiom '" + a.str() + "' is not EL");
  }
  dialect_ = d;
}

bool Theory::add(const Gci& g, int line) {
  if (dialect_ == Dialect::EL &&
      (g.lhs.mentions_inverse_or_forall() || g.rhs.mentions_inverse_or_forall()))
    throw Error("dialect", "axiom '" + g.str() + "' uses inverse roles or 'all' in an EL theory");
  if (!index_.insert(g.str()).second) return false;
  axioms_.push_back(g);
  lines_.push_back(line);
  return true;
}

std::size_t Theory::symbol_size() const {
  std::size_t n = 0;
  for (const auto& a : axioms_) n += a.size();
  return n;
}

namespace {

void names_in(const Concept& c, std::set<std::string>& cn, std::set<std::string>& rn) {
  switch (c.kind()) {
    case ConceptKind::Top: break;
    case ConceptKind::Name: cn.insert(c.name()); break;
    case ConceptKind::And:
      for (const auto& o : c.operands()) names_in(o, cn, rn);
      break;
    case ConceptKind::Exists:
    case ConceptKind::Forall:
      rn.insert(c.role().name);
      names_in(c.filler(), cn, rn);
      break;
  }
}

}  // namespace

std::set<std::string> Theory::concept_names() const {
  std::set<std::string> cn, rn;
  for (const auto& a : axioms_) {
    names_in(a.lhs, cn, rn);
    names_in(a.rhs, cn, rn);
  }
  return cn;
}

std::set<std::string> Theory::role_names() const {
  std::set<std::string> cn, rn;
  for (const auto& a : axioms_) {
    names_in(a.lhs, cn, rn);
    names_in(a.rhs, cn, rn);
  }
  return rn;
}

void collect_subconcepts(const Concept& c, std::set<Concept>& out) {
  if (!out.insert(c).second) return;
  if (c.kind() == ConceptKind::And) {
    for (const auto& o : c.operands()) collect_subconcepts(o, out);
  } else if (c.kind() == ConceptKind::Exists || c.kind() == ConceptKind::Forall) {
    collect_subconcepts(c.filler(), out);
  }
}

std::set<Concept> subconcepts(const Theory& t, const Gci& goal) {
  std::set<Concept> out;
  out.insert(Concept::top());
  for (const auto& a : t.axioms()) {
    collect_subconcepts(a.lhs, out);
    collect_subconcepts(a.rhs, out);
  }
  collect_subconcepts(goal.lhs, out);
  collect_subconcepts(goal.rhs, out);
  return out;
}

std::string print_theory(const Theory& t) {
  std::string out = "# dialect: " + dialect_name(t.dialect()) + "\n";
  for (const auto& a : t.axioms()) out += a.str() + "\n";
  return out;
}

}  // namespace proofforge
