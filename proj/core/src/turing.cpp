#include "proofforge/generators.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace proofforge {

std::size_t TuringMachine::space_bound(std::size_t n) const {
  std::int64_t v = 0, pw = 1;
  for (auto c : space) {
    v += c * pw;
    pw *= static_cast<std::int64_t>(n);
  }
  if (v < 0) throw Error("bad-machine", "space polynomial is negative at n=" + std::to_string(n));
  return static_cast<std::size_t>(v);
}

namespace {

bool is_name(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

bool has(const std::vector<std::string>& v, const std::string& x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

TuringMachine parse_tm(std::string_view text) {
  TuringMachine m;
  std::istringstream in{std::string(text)};
  std::string line;
  int no = 0;
  auto bad = [&](const std::string& msg) { return Error("syntax", "machine line " + std::to_string(no) + ": " + msg); };
  while (std::getline(in, line)) {
    ++no;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<std::string> w;
    for (std::string t; ls >> t;) w.push_back(t);
    if (w.empty()) continue;
    const std::string key = w[0];
    std::vector<std::string> rest(w.begin() + 1, w.end());
    for (const auto& x : rest)
      if (key != "delta" && key != "space" && !is_name(x)) throw bad("'" + x + "' is not a plain name");
    if (key == "states") {
      m.states = rest;
    } else if (key == "alphabet") {
      m.alphabet = rest;
    } else if (key == "blank" && rest.size() == 1) {
      m.blank = rest[0];
    } else if (key == "input") {
      m.input = rest;
    } else if (key == "start" && rest.size() == 1) {
      m.start = rest[0];
    } else if (key == "accept") {
      m.accept = rest;
    } else if (key == "space") {
      m.space.clear();
      for (const auto& x : rest) {
        try {
          m.space.push_back(std::stoll(x));
        } catch (const std::exception&) {
          throw bad("space coefficient '" + x + "'");
        }
      }
    } else if (key == "delta") {
      // delta q a -> q' b d
      if (w.size() != 7 || w[3] != "->") throw bad("expected 'delta q a -> q2 b dir'");
      int dir = 0;
      if (w[6] == "+1" || w[6] == "R") dir = 1;
      else if (w[6] == "-1" || w[6] == "L") dir = -1;
      else if (w[6] == "0" || w[6] == "N") dir = 0;
      else throw bad("direction must be -1, 0 or +1");
      auto [_, fresh] = m.delta.emplace(std::make_pair(w[1], w[2]), TuringMachine::Move{w[4], w[5], dir});
      if (!fresh) throw bad("second transition for (" + w[1] + ", " + w[2] + ")");
    } else {
      throw bad("unknown key '" + key + "'");
    }
  }
  auto need = [&](bool ok, const std::string& msg) {
    if (!ok) throw Error("bad-machine", msg);
  };
  need(!m.states.empty(), "no states");
  need(has(m.states, m.start), "start state is not a state");
  need(has(m.alphabet, m.blank), "blank is not in the alphabet");
  need(!has(m.input, m.blank), "blank is an input letter");
  for (const auto& a : m.input) need(has(m.alphabet, a), "input letter " + a + " is not in the alphabet");
  for (const auto& f : m.accept) need(has(m.states, f), "accepting state " + f + " is not a state");
  need(!m.space.empty(), "no space polynomial");
  for (const auto& [k, mv] : m.delta) {
    need(has(m.states, k.first) && has(m.states, mv.state), "transition uses an unknown state");
    need(has(m.alphabet, k.second) && has(m.alphabet, mv.write), "transition uses an unknown letter");
  }
  return m;
}

std::vector<std::string> parse_word(const TuringMachine& m, std::string_view text) {
  std::vector<std::string> out;
  std::string s(text);
  if (s.find(' ') != std::string::npos) {
    std::istringstream ls(s);
    for (std::string t; ls >> t;) out.push_back(t);
  } else {
    for (char c : s) out.emplace_back(1, c);
  }
  for (const auto& a : out)
    if (!has(m.input, a)) throw Error("bad-word", "'" + a + "' is not an input letter");
  return out;
}

std::string outcome_name(TmOutcome o) {
  switch (o) {
    case TmOutcome::Accept: return "accept";
    case TmOutcome::Reject: return "reject";
    case TmOutcome::SpaceExceeded: return "space-exceeded";
  }
  return {};
}

TmOutcome tm_run(const TuringMachine& m, const std::vector<std::string>& word) {
  const std::size_t k = m.space_bound(word.size());
  for (const auto& a : word)
    if (!has(m.input, a)) throw Error("bad-word", "'" + a + "' is not an input letter");
  if (word.size() > k + 1) return TmOutcome::SpaceExceeded;
  std::vector<std::string> tape(k + 1, m.blank);
  std::copy(word.begin(), word.end(), tape.begin());
  // |Q| |Gamma|^k (k+1), saturating
  Weight::Int limit = m.states.size();
  for (std::size_t i = 0; i < k; ++i) limit *= m.alphabet.size();
  limit *= (k + 1);
  std::string q = m.start;
  std::int64_t head = 0;
  for (Weight::Int step = 0;; ++step) {
    if (has(m.accept, q)) return TmOutcome::Accept;
    if (step >= limit) return TmOutcome::Reject;
    auto it = m.delta.find({q, tape[head]});
    if (it == m.delta.end()) return TmOutcome::Reject;
    tape[head] = it->second.write;
    q = it->second.state;
    head += it->second.dir;
    if (head < 0) throw Error("bad-machine", "head moves left of cell 0");
    if (head > static_cast<std::int64_t>(k)) return TmOutcome::SpaceExceeded;
  }
}

}  // namespace proofforge
