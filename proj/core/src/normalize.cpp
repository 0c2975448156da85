#include "proofforge/logic.hpp"

#include <algorithm>
#include <unordered_map>

namespace proofforge {

namespace {

using Names = std::vector<std::string>;

Names sorted_unique(Names n) {
  std::sort(n.begin(), n.end());
  n.erase(std::unique(n.begin(), n.end()), n.end());
  return n;
}

Names merge(Names a, const Names& b) {
  a.insert(a.end(), b.begin(), b.end());
  return sorted_unique(std::move(a));
}

class Normalizer {
 public:
  explicit Normalizer(const Theory& src) : src_(src), out_(Dialect::ELI) {
    for (const auto& n : src.concept_names()) used_.insert(n);
  }

  NormalizedTheory run() {
    for (std::size_t i = 0; i < src_.size(); ++i) {
      cur_ = i;
      const Gci& a = src_.axioms()[i];
      Names k = lhs_names(a.lhs);
      rhs(k, a.rhs);
    }
    return NormalizedTheory{std::move(out_), std::move(origin_)};
  }

 private:
  std::string fresh() {
    while (true) {
      std::string n = std::string(kFreshPrefix) + std::to_string(next_++);
      if (!used_.count(n)) {
        used_.insert(n);
        return n;
      }
    }
  }

  void emit(const Names& k, Concept rhs) {
    Gci g{Concept::names(k), std::move(rhs)};
    if (out_.add(g)) origin_.push_back(cur_);
  }

  // K with  C <= conj(K)  added as definitions, so  K <= D  may replace  C <= D
  Names lhs_names(const Concept& c) {
    switch (c.kind()) {
      case ConceptKind::Top: return {};
      case ConceptKind::Name: return {c.name()};
      case ConceptKind::And: {
        Names k;
        for (const auto& o : c.operands()) k = merge(std::move(k), lhs_names(o));
        return k;
      }
      case ConceptKind::Exists: {
        auto it = neg_.find(c.str());
        if (it != neg_.end()) return {it->second};
        std::string x = fresh();
        neg_.emplace(c.str(), x);
        // ex r.E <= X   ~>   E' <= all inv(r).X
        Names e = lhs_names(c.filler());
        if (e.size() > 1) {
          std::string z = fresh();
          emit(e, Concept::name(z));
          e = {z};
        }
        emit(e, Concept::forall(c.role().inverted(), Concept::name(x)));
        return {x};
      }
      case ConceptKind::Forall:
        throw Error("normalize", "'all' on the left of '<=' is not Horn: " + c.str());
    }
    return {};
  }

  // M with  conj(M) <= C  added as definitions
  Names rhs_names(const Concept& c) {
    switch (c.kind()) {
      case ConceptKind::Top: return {};
      case ConceptKind::Name: return {c.name()};
      case ConceptKind::And: {
        Names m;
        for (const auto& o : c.operands()) m = merge(std::move(m), rhs_names(o));
        return m;
      }
      default: {
        auto it = pos_.find(c.str());
        if (it != pos_.end()) return {it->second};
        std::string x = fresh();
        pos_.emplace(c.str(), x);
        rhs({x}, c);
        return {x};
      }
    }
  }

  void rhs(const Names& k, const Concept& d) {
    switch (d.kind()) {
      case ConceptKind::Top: return;
      case ConceptKind::Name: emit(k, d); return;
      case ConceptKind::And:
        for (const auto& o : d.operands()) rhs(k, o);
        return;
      case ConceptKind::Exists:
        emit(k, Concept::exists(d.role(), Concept::names(rhs_names(d.filler()))));
        return;
      case ConceptKind::Forall: {
        const Concept& f = d.filler();
        if (f.is_top()) return;
        if (f.is_name()) {
          emit(k, d);
          return;
        }
        // all r.E  ~>  all r.Y with Y <= E, one Y per conjunct name
        for (const auto& y : rhs_names(f)) emit(k, Concept::forall(d.role(), Concept::name(y)));
        return;
      }
    }
  }

  const Theory& src_;
  Theory out_;
  std::vector<std::size_t> origin_;
  std::size_t cur_ = 0;
  std::size_t next_ = 0;
  std::unordered_set<std::string> used_;
  std::unordered_map<std::string, std::string> neg_, pos_;
};

}  // namespace

bool is_eli_normal(const Gci& g) {
  if (!g.lhs.name_set()) return false;
  switch (g.rhs.kind()) {
    case ConceptKind::Name: return true;
    case ConceptKind::Exists: return g.rhs.filler().name_set().has_value();
    case ConceptKind::Forall: return g.rhs.filler().is_name();
    default: return false;
  }
}

NormalizedTheory normalize_eli(const Theory& t) { return Normalizer(t).run(); }

}  // namespace proofforge
