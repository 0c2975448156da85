#include "doctest.h"

#include "oracles.hpp"
#include "proofforge/error.hpp"
#include "proofforge/logic.hpp"

#include <random>

using namespace proofforge;

namespace {

std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "none";
}

}  // namespace

TEST_CASE("sample theory parses into two EL axioms") {
  Theory t = parse_theory("A <= B\nB <= ex r. A\n");
  CHECK(t.dialect() == Dialect::EL);
  REQUIRE(t.size() == 2);
  CHECK(t.axioms()[0].str() == "A <= B");
  CHECK(t.axioms()[1].str() == "B <= ex r. A");
}

TEST_CASE("top on the right") {
  Gci g = parse_gci("A <= top");
  CHECK(g.lhs.is_name());
  CHECK(g.rhs.is_top());
}

TEST_CASE("dialect header gates inverse roles and value restrictions") {
  CHECK(code_of([] { parse_theory("A <= ex inv(r). B\n"); }) == "dialect");
  CHECK(code_of([] { parse_theory("# dialect: EL\nA <= all r. B\n"); }) == "dialect");
  Theory t = parse_theory("# dialect: ELI\nA <= ex inv(r). B\nB <= all r. C\n");
  CHECK(t.dialect() == Dialect::ELI);
  CHECK(t.size() == 2);
}

TEST_CASE("syntax errors carry the line number") {
  try {
    parse_theory("A <= B\n\nA <= (B and\n");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == "syntax");
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK(code_of([] { parse_theory("A => B\n"); }) == "syntax");
  // reserved prefix for fresh names
  CHECK(code_of([] { parse_theory("_N1 <= B\n"); }) == "syntax");
}

TEST_CASE("conjunctions are canonical") {
  Concept a = parse_concept("(B and (A and B))");
  Concept b = parse_concept("(A and B)");
  CHECK(a == b);
  CHECK(a.str() == "(A and B)");
  CHECK(parse_concept("(A and top)") == Concept::name("A"));
}

TEST_CASE("canonical printing round trips") {
  const char* src = "# dialect: ELI\n(B and A) <= ex inv(r). (C and ex s. top)\nC <= all r. D\n";
  Theory t = parse_theory(src);
  Theory u = parse_theory(print_theory(t));
  CHECK(print_theory(t) == print_theory(u));
  CHECK(u.dialect() == Dialect::ELI);
}

TEST_CASE("subconcepts of the sample instance") {
  Theory t = parse_theory("A <= B\nB <= ex r. A\n");
  auto s = subconcepts(t, parse_gci("A <= (B and ex r. A)"));
  std::set<std::string> got;
  for (const auto& c : s) got.insert(c.str());
  CHECK(got == std::set<std::string>{"top", "A", "B", "ex r. A", "(B and ex r. A)"});

  auto e = subconcepts(Theory(Dialect::EL), parse_gci("A <= A"));
  CHECK(e.size() == 2);

  auto n = subconcepts(parse_theory("A <= ex r. (A and B)\n"), parse_gci("A <= A"));
  std::set<std::string> names;
  for (const auto& c : n) names.insert(c.str());
  CHECK(names.count("(A and B)"));
  CHECK(names.count("B"));
}

TEST_CASE("normal form") {
  Theory t = parse_theory("A <= ex r. (B and ex s. C)\n");
  auto n = normalize_eli(t);
  for (const auto& a : n.theory.axioms()) CHECK(is_eli_normal(a));
  CHECK(n.theory.size() > 1);
  // the original subsumptions survive
  CHECK(entails(n.theory, parse_gci("A <= ex r. B")));
  CHECK(entails(n.theory, parse_gci("A <= ex r. ex s. C")));

  Theory already = parse_theory("# dialect: ELI\nA <= B\n(A and B) <= C\nA <= ex r. B\nB <= all inv(r). C\n");
  CHECK(normalize_eli(already).theory.size() == already.size());

  Theory lhs = parse_theory("ex r. A <= B\n");
  auto nl = normalize_eli(lhs);
  for (const auto& a : nl.theory.axioms()) CHECK(is_eli_normal(a));
  Theory probe = nl.theory;
  probe.set_dialect(Dialect::ELI);
  probe.add(parse_gci("C <= ex r. A"));
  CHECK(entails(probe, parse_gci("C <= B")));
}

TEST_CASE("entailment, EL") {
  CHECK(entails(parse_theory("A <= ex r. B\nB <= C\nex r. C <= D\n"), parse_gci("A <= D")));
  CHECK(entails(Theory(Dialect::EL), parse_gci("A <= A")));
  CHECK_FALSE(entails(parse_theory("A <= B\n"), parse_gci("B <= A")));
  CHECK(entails(parse_theory("A <= B\nB <= ex r. A\n"), parse_gci("A <= (B and ex r. A)")));
}

TEST_CASE("entailment, ELI") {
  Theory t = parse_theory("# dialect: ELI\nA <= ex r. B\nB <= all inv(r). C\n");
  CHECK(entails(t, parse_gci("A <= C")));
  CHECK_FALSE(entails(t, parse_gci("B <= C")));
  Theory u = parse_theory("# dialect: ELI\nA <= ex r. B\nA <= all r. C\n");
  CHECK(entails(u, parse_gci("A <= ex r. (B and C)")));
  // C <= all r.D  iff  ex inv(r).C <= D
  Theory v = parse_theory("# dialect: ELI\nex inv(r). A <= B\n");
  CHECK(entails(v, parse_gci("A <= all r. B")));
}

TEST_CASE("entailment agrees with a plain completion procedure") {
  std::mt19937 rng(7);
  const std::vector<std::string> names{"A", "B", "C", "D", "E"};
  auto pick = [&] { return names[rng() % names.size()]; };
  int positives = 0;
  for (int round = 0; round < 150; ++round) {
    oracle::NormalEl ref;
    for (const auto& n : names) ref.names.insert(n);
    Theory t(Dialect::EL);
    const int k = 2 + static_cast<int>(rng() % 6);
    for (int i = 0; i < k; ++i) {
      switch (rng() % 4) {
        case 0: {
          auto a = pick(), b = pick();
          ref.conj.push_back({{a}, b});
          t.add(Gci{Concept::name(a), Concept::name(b)});
          break;
        }
        case 1: {
          auto a = pick(), c = pick(), b = pick();
          ref.conj.push_back({{a, c}, b});
          t.add(Gci{Concept::conj(Concept::name(a), Concept::name(c)), Concept::name(b)});
          break;
        }
        case 2: {
          auto a = pick(), b = pick();
          ref.ex.push_back({a, "r", b});
          t.add(Gci{Concept::name(a), Concept::exists(Role{"r"}, Concept::name(b))});
          break;
        }
        default: {
          auto a = pick(), b = pick();
          ref.exl.push_back({"r", a, b});
          t.add(Gci{Concept::exists(Role{"r"}, Concept::name(a)), Concept::name(b)});
          break;
        }
      }
    }
    auto s = ref.complete();
    for (const auto& a : names)
      for (const auto& b : names) {
        const bool want = s[a].count(b) > 0;
        positives += want && a != b;
        CHECK_MESSAGE(entails(t, Gci{Concept::name(a), Concept::name(b)}) == want, print_theory(t), a, " <= ", b);
      }
  }
  CHECK(positives > 50);
}
