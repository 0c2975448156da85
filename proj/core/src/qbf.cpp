#include "proofforge/generators.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace proofforge {

std::string QbfNode::str() const {
  switch (op) {
    case Op::Lit: return (negated ? "!" : "") + var;
    case Op::And: return "(" + kids[0].str() + " & " + kids[1].str() + ")";
    case Op::Or: return "(" + kids[0].str() + " | " + kids[1].str() + ")";
  }
  return {};
}

std::size_t QbfNode::size() const {
  std::size_t n = 1;
  for (const auto& k : kids) n += k.size();
  return n;
}

std::size_t QbfNode::height() const {
  std::size_t h = 0;
  for (const auto& k : kids) h = std::max(h, k.height() + 1);
  return h;
}

std::string Qbf::str() const {
  std::string s;
  for (const auto& q : prefix) s += std::string(q.universal ? "A " : "E ") + q.var + " ";
  return s + ": " + matrix.str();
}

namespace {

class QbfParser {
 public:
  explicit QbfParser(std::string_view s) : s_(s) {}

  Qbf run() {
    Qbf f;
    std::set<std::string> bound;
    while (true) {
      skip();
      if (peek() == ':') {
        ++i_;
        break;
      }
      std::string q = ident();
      if (q != "E" && q != "A") fail("expected 'E', 'A' or ':'");
      std::string v = ident();
      if (v.empty()) fail("expected a variable after the quantifier");
      if (!bound.insert(v).second) fail("variable " + v + " quantified twice");
      f.prefix.push_back({q == "A", v});
    }
    f.matrix = disj();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    std::function<void(const QbfNode&)> check = [&](const QbfNode& n) {
      if (n.op == QbfNode::Op::Lit && !bound.count(n.var)) throw Error("open-formula", "free variable " + n.var);
      for (const auto& k : n.kids) check(k);
    };
    check(f.matrix);
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("syntax", "qbf column " + std::to_string(i_ + 1) + ": " + msg);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  std::string ident() {
    skip();
    std::size_t b = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    return std::string(s_.substr(b, i_ - b));
  }

  QbfNode disj() {
    QbfNode l = conj();
    while (peek() == '|') {
      ++i_;
      QbfNode n;
      n.op = QbfNode::Op::Or;
      n.kids = {std::move(l), conj()};
      l = std::move(n);
    }
    return l;
  }
  QbfNode conj() {
    QbfNode l = atom();
    while (peek() == '&') {
      ++i_;
      QbfNode n;
      n.op = QbfNode::Op::And;
      n.kids = {std::move(l), atom()};
      l = std::move(n);
    }
    return l;
  }
  QbfNode atom() {
    char c = peek();
    if (c == '(') {
      ++i_;
      QbfNode n = disj();
      if (peek() != ')') fail("expected ')'");
      ++i_;
      return n;
    }
    QbfNode n;
    if (c == '!') {
      ++i_;
      n.negated = true;
      if (peek() == '(' || peek() == '!') throw Error("nnf", "negation only in front of a variable");
    }
    n.var = ident();
    if (n.var.empty()) fail("expected a variable");
    return n;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

bool eval(const QbfNode& n, const std::map<std::string, bool>& val) {
  switch (n.op) {
    case QbfNode::Op::Lit: return val.at(n.var) != n.negated;
    case QbfNode::Op::And: return eval(n.kids[0], val) && eval(n.kids[1], val);
    case QbfNode::Op::Or: return eval(n.kids[0], val) || eval(n.kids[1], val);
  }
  return false;
}

bool eval_prefix(const Qbf& f, std::size_t i, std::map<std::string, bool>& val) {
  if (i == f.prefix.size()) return eval(f.matrix, val);
  const auto& q = f.prefix[i];
  bool any = false, all = true;
  for (bool b : {false, true}) {
    val[q.var] = b;
    bool r = eval_prefix(f, i + 1, val);
    any = any || r;
    all = all && r;
  }
  return q.universal ? all : any;
}

}  // namespace

Qbf parse_qbf(std::string_view text) { return QbfParser(text).run(); }

bool qbf_eval(const Qbf& f) {
  if (f.prefix.size() > 20) throw Error("too-large", "more than 20 variables");
  std::map<std::string, bool> val;
  return eval_prefix(f, 0, val);
}

}  // namespace proofforge
