#pragma once

#include "proofforge/error.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace proofforge {

struct Role {
  std::string name;
  bool inverse = false;

  Role inverted() const { return Role{name, !inverse}; }
  std::string str() const { return inverse ? "inv(" + name + ")" : name; }

  friend bool operator==(const Role&, const Role&) = default;
  friend auto operator<=>(const Role&, const Role&) = default;
};

enum class ConceptKind { Top, Name, And, Exists, Forall };

// Immutable, shared concept tree. Conjunctions are kept flattened, sorted and
// duplicate free, so the printed text is canonical and doubles as identity.
class Concept {
 public:
  Concept();  // top

  static Concept top();
  static Concept name(std::string n);
  static Concept conj(std::vector<Concept> parts);
  static Concept conj(const Concept& a, const Concept& b) { return conj({a, b}); }
  static Concept names(const std::vector<std::string>& ns);  // conjunction of names
  static Concept exists(Role r, Concept filler);
  static Concept forall(Role r, Concept filler);

  ConceptKind kind() const;
  bool is_top() const { return kind() == ConceptKind::Top; }
  bool is_name() const { return kind() == ConceptKind::Name; }
  const std::string& name() const;
  const Role& role() const;
  const Concept& filler() const;
  const std::vector<Concept>& operands() const;  // And only
  // names of a conjunction of names (top -> empty); nullopt if not of that shape
  std::optional<std::vector<std::string>> name_set() const;

  const std::string& str() const;
  std::size_t size() const;  // node count
  std::size_t hash() const;
  bool mentions_inverse_or_forall() const;

  friend bool operator==(const Concept& a, const Concept& b) {
    return a.node_ == b.node_ || a.str() == b.str();
  }
  friend bool operator<(const Concept& a, const Concept& b) { return a.str() < b.str(); }

  struct Node;  // defined in concept.cpp

 private:
  explicit Concept(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Gci {
  Concept lhs;
  Concept rhs;

  std::string str() const { return lhs.str() + " <= " + rhs.str(); }
  std::size_t size() const { return lhs.size() + rhs.size(); }

  friend bool operator==(const Gci& a, const Gci& b) { return a.lhs == b.lhs && a.rhs == b.rhs; }
  friend bool operator<(const Gci& a, const Gci& b) {
    if (a.lhs == b.lhs) return a.rhs < b.rhs;
    return a.lhs < b.lhs;
  }
};

struct GciHash {
  std::size_t operator()(const Gci& g) const { return g.lhs.hash() * 1000003u ^ g.rhs.hash(); }
};

enum class Dialect { EL, ELI };

std::string dialect_name(Dialect d);

class Theory {
 public:
  Theory() = default;
  explicit Theory(Dialect d) : dialect_(d) {}
  Theory(Dialect d, std::vector<Gci> axioms);

  Dialect dialect() const { return dialect_; }
  void set_dialect(Dialect d);
  // appends unless already present; returns false on duplicates
  bool add(const Gci& g, int line = 0);

  const std::vector<Gci>& axioms() const { return axioms_; }
  std::size_t size() const { return axioms_.size(); }
  bool contains(const Gci& g) const { return index_.count(g.str()) > 0; }
  int line_of(std::size_t i) const { return i < lines_.size() ? lines_[i] : 0; }
  // sum of axiom sizes
  std::size_t symbol_size() const;
  std::set<std::string> concept_names() const;
  std::set<std::string> role_names() const;

 private:
  Dialect dialect_ = Dialect::EL;
  std::vector<Gci> axioms_;
  std::vector<int> lines_;
  std::unordered_set<std::string> index_;
};

// ---- text format -------------------------------------------------------

struct ParseOptions {
  // dialect used when the file carries no "# dialect: ..." header
  Dialect default_dialect = Dialect::EL;
  // header ignored, always use default_dialect
  bool force_dialect = false;
  // accept the reserved fresh-name prefix (internal round trips only)
  bool allow_reserved = false;
};

Theory parse_theory(std::string_view text, const ParseOptions& opts = {});
Concept parse_concept(std::string_view text, Dialect d = Dialect::ELI);
Gci parse_gci(std::string_view text, Dialect d = Dialect::ELI);
std::string print_theory(const Theory& t);

// ---- structure -----------------------------------------------------------

std::set<Concept> subconcepts(const Theory& t, const Gci& goal);
void collect_subconcepts(const Concept& c, std::set<Concept>& out);

// ---- ELI normal form -------------------------------------------------------

inline constexpr std::string_view kFreshPrefix = "_N";

struct NormalizedTheory {
  Theory theory;                    // ELI, every axiom in normal form
  std::vector<std::size_t> origin;  // origin[i] = index of source axiom
};

NormalizedTheory normalize_eli(const Theory& t);
bool is_eli_normal(const Gci& g);

// ---- entailment ------------------------------------------------------------

// EL theories with EL goals go through the ELK deriver; everything else is
// normalized and handed to the ELI deriver (goal must be K <= A, K names).
bool entails(const Theory& t, const Gci& goal);

// ELI-normal sentences of all three shapes (K<=A, K<=ex r.M, K<=all r.A),
// reduced to name goals with one fresh name.
bool entails_normal(const Theory& t, const Gci& goal);

using EntailmentOracle = std::function<bool(const std::vector<Gci>&, const Gci&)>;
EntailmentOracle el_entailment_oracle();
EntailmentOracle eli_entailment_oracle();

}  // namespace proofforge

template <>
struct std::hash<proofforge::Concept> {
  std::size_t operator()(const proofforge::Concept& c) const { return c.hash(); }
};
