#pragma once

#include "proofforge/optimizer.hpp"
#include "proofforge/weight.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace proofforge {

// ---- quantified Boolean formulas ---------------------------------------

struct QbfNode {
  enum class Op { Lit, And, Or };
  Op op = Op::Lit;
  std::string var;       // Lit
  bool negated = false;  // Lit
  std::vector<QbfNode> kids;

  std::string str() const;
  std::size_t size() const;   // node count
  std::size_t height() const; // literal = 0
};

struct Qbf {
  struct Quantifier {
    bool universal = false;
    std::string var;
  };
  std::vector<Quantifier> prefix;
  QbfNode matrix;

  std::string str() const;  // same syntax parse_qbf reads
};

// "E x1 A x2 : (x1 | !x2) & x2"; '!' binds tighter than '&', '&' than '|'
Qbf parse_qbf(std::string_view text);
bool qbf_eval(const Qbf& f);

// ---- Turing machines ---------------------------------------------------

struct TuringMachine {
  struct Move {
    std::string state;
    std::string write;
    int dir = 0;  // -1, 0, +1
  };
  std::vector<std::string> states;
  std::vector<std::string> alphabet;  // tape alphabet, blank included
  std::string blank;
  std::vector<std::string> input;     // input alphabet
  std::string start;
  std::vector<std::string> accept;
  std::vector<std::int64_t> space;    // p(n) = space[0] + space[1] n + ...
  std::map<std::pair<std::string, std::string>, Move> delta;

  std::size_t space_bound(std::size_t n) const;
};

// line format:
//   states q0 q1 | alphabet a b _ | blank _ | input a b | start q0
//   accept q1 | space 2 1 | delta q0 a -> q1 b +1
TuringMachine parse_tm(std::string_view text);
// letters separated by spaces, or one letter per character when no spaces
std::vector<std::string> parse_word(const TuringMachine& m, std::string_view text);

enum class TmOutcome { Accept, Reject, SpaceExceeded };
std::string outcome_name(TmOutcome o);
// cells 0..k with k = p(|w|); at most |Q| |Gamma|^k (k+1) steps
TmOutcome tm_run(const TuringMachine& m, const std::vector<std::string>& word);

// ---- reduction instances ---------------------------------------------------

struct ReductionInstance {
  Theory theory;
  Gci goal;
  Weight threshold;
  std::string measure;  // depth | treesize
  DeriverKind deriver = DeriverKind::Elk;
  std::map<std::string, std::string> meta;
};

ReductionInstance pad_depth_chain(const Theory& t, const std::string& a, const std::string& b);
struct DeepTheory {
  Theory theory;
  Gci goal;
};
DeepTheory deep_eli_theory(std::size_t n);
ReductionInstance qbf_to_eli(const Qbf& f);
ReductionInstance tm_to_eli(const TuringMachine& m, const std::vector<std::string>& word);
// (|Q| |Gamma|^k + 1)(11k + 22)
Weight tm_threshold(std::size_t states, std::size_t letters, std::size_t k);

// the deciding run each instance is built for (normalizes ELI theories)
bool decide_instance(const ReductionInstance& inst, const Budget& b = default_budget(), bool debug = false,
                     DecideStats* stats = nullptr);

}  // namespace proofforge
