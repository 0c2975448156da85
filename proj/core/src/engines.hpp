#pragma once

// saturation engines shared by the materializers and the lazy views

#include "proofforge/derivers.hpp"

#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace proofforge::detail {

struct Graphing {
  Hypergraph graph;
  std::vector<bool> axiom;
  std::unordered_map<std::string, VertexId> index;
  std::size_t max_vertices = 0;

  VertexId vertex(const Gci& g, bool is_axiom);
  std::optional<VertexId> find(const Gci& g) const;
};

class ElkEngine {
 public:
  ElkEngine(const Theory& t, const Gci& goal, const Budget& b);

  void activate(Concept c);
  void activate_all();
  void run();
  bool in_universe(const Concept& c) const { return uni_.count(c.str()) > 0; }
  bool is_active(const Concept& c) const { return ctx_.count(c.str()) > 0; }

  Graphing g;
  std::vector<Concept> universe;
  std::size_t max_premises = 2;

 private:
  struct Back {
    Concept lhs;
    Role role;
    VertexId via;  // lhs <= ex role.F
  };
  struct Ctx {
    std::unordered_set<std::string> derived;
    std::vector<Concept> order;  // derived rhs in derivation order
    std::vector<Back> preds;
  };

  void derive(Concept c, Concept d, std::vector<VertexId> prem, const char* rule);
  void process(const Concept& c, const Concept& d);
  VertexId vid(const Concept& c, const Concept& d) { return *g.find(Gci{c, d}); }

  std::unordered_set<std::string> uni_;
  std::unordered_map<std::string, std::vector<VertexId>> told_;   // axioms by lhs
  std::unordered_map<std::string, std::vector<Concept>> conj_;    // conjunctions by operand
  std::unordered_map<std::string, Ctx> ctx_;
  std::deque<std::pair<Concept, Concept>> work_;
};

class EliEngine {
 public:
  EliEngine(const Theory& normal, const Gci& goal, const Budget& b);
  void run();

  Graphing g;
  std::size_t max_premises = 2;

 private:
  using SetId = std::uint32_t;
  using NameId = std::uint32_t;
  enum class Kind : std::uint8_t { Sub, Ex, All };
  struct Sentence {
    SetId lhs;
    Kind kind;
    std::uint32_t role;  // 2*index + inverse
    std::uint32_t arg;   // NameId for Sub/All, SetId for Ex
  };

  NameId name_id(const std::string& n);
  SetId set_id(std::vector<NameId> s);
  std::uint32_t role_id(const Role& r);
  static std::uint32_t flip(std::uint32_t r) { return r ^ 1u; }
  Gci label(const Sentence& s) const;
  VertexId derive(const Sentence& s, std::vector<VertexId> prem, const char* rule, bool is_axiom = false);
  void appear(SetId m);
  void process(VertexId v, const Sentence& s);
  bool holds_all(SetId m, SetId k) const;
  static std::uint64_t key(SetId s, std::uint32_t r) { return (std::uint64_t(s) << 32) | r; }

  std::vector<std::string> names_;
  std::unordered_map<std::string, NameId> name_ix_;
  std::vector<std::vector<NameId>> sets_;
  std::map<std::vector<NameId>, SetId> set_ix_;
  std::vector<Role> roles_;
  std::vector<Sentence> sent_;                // by vertex id
  std::vector<bool> appears_;
  std::vector<std::vector<char>> subs_;        // subs_[m][a]: m <= a processed
  std::vector<std::vector<SetId>> holders_;   // holders_[a]: sets m with m <= a processed
  std::vector<std::vector<VertexId>> by_name_; // processed K <= C with a in K, keyed by a
  std::vector<VertexId> top_lhs_;              // processed {} <= C
  std::vector<SetId> appearing_;
  std::unordered_map<std::uint64_t, std::vector<VertexId>> ex_by_filler_, ex_by_lhs_, all_by_lhs_;
  std::deque<VertexId> work_;
  std::vector<bool> done_;
};

}  // namespace proofforge::detail
