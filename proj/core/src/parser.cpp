#include "proofforge/logic.hpp"

#include <cctype>

namespace proofforge {

namespace {

enum class Tok { Name, Top, And, Ex, All, Inv, LParen, RParen, Dot, Sub, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  Lexer(std::string_view src, int line, bool allow_reserved)
      : src_(src), line_(line), allow_reserved_(allow_reserved) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      const int col = static_cast<int>(pos_) + 1;
      if (pos_ >= src_.size() || src_[pos_] == '#') {
        out.push_back({Tok::End, "", line_, col});
        return out;
      }
      const char c = src_[pos_];
      if (c == '(') { out.push_back({Tok::LParen, "(", line_, col}); ++pos_; continue; }
      if (c == ')') { out.push_back({Tok::RParen, ")", line_, col}); ++pos_; continue; }
      if (c == '.') { out.push_back({Tok::Dot, ".", line_, col}); ++pos_; continue; }
      if (c == '<' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '=') {
        out.push_back({Tok::Sub, "<=", line_, col});
        pos_ += 2;
        continue;
      }
      const bool reserved = allow_reserved_ && c == '_';
      if (std::isalpha(static_cast<unsigned char>(c)) || reserved) {
        std::size_t end = pos_ + 1;
        while (end < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_'))
          ++end;
        std::string word(src_.substr(pos_, end - pos_));
        pos_ = end;
        Tok k = Tok::Name;
        if (word == "top") k = Tok::Top;
        else if (word == "and") k = Tok::And;
        else if (word == "ex") k = Tok::Ex;
        else if (word == "all") k = Tok::All;
        else if (word == "inv") k = Tok::Inv;
        out.push_back({k, std::move(word), line_, col});
        continue;
      }
      std::string msg = "unexpected character '" + std::string(1, c) + "'";
      if (c == '_') msg += " (names starting with '_' are reserved)";
      throw Error("syntax", "line " + std::to_string(line_) + ", column " + std::to_string(col) +
                                ": " + msg);
    }
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
  int line_;
  bool allow_reserved_;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, Dialect d) : toks_(std::move(toks)), dialect_(d) {}

  Gci axiom() {
    Concept l = parse_expr();
    expect(Tok::Sub, "'<='");
    Concept r = parse_expr();
    expect(Tok::End, "end of line");
    return Gci{l, r};
  }

  Concept whole_concept() {
    Concept c = parse_expr();
    expect(Tok::End, "end of input");
    return c;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& take() { return toks_[i_++]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg, const char* code = "syntax") const {
    throw Error(code, "line " + std::to_string(t.line) + ", column " + std::to_string(t.col) + ": " + msg);
  }

  void expect(Tok k, const char* what) {
    if (peek().kind != k) {
      const auto& t = peek();
      fail(t, std::string("expected ") + what + (t.kind == Tok::End ? " but line ended" : ", got '" + t.text + "'"));
    }
    ++i_;
  }

  Concept parse_expr() {
    Concept c = atom();
    // left-assoc; canonicalization flattens anyway
    while (peek().kind == Tok::And) {
      take();
      c = Concept::conj(c, atom());
    }
    return c;
  }

  Role role() {
    const Token& t = take();
    if (t.kind == Tok::Name) return Role{t.text, false};
    if (t.kind == Tok::Inv) {
      if (dialect_ == Dialect::EL) fail(t, "inverse role in an EL theory", "dialect");
      expect(Tok::LParen, "'('");
      const Token& n = take();
      if (n.kind != Tok::Name) fail(n, "expected role name");
      expect(Tok::RParen, "')'");
      return Role{n.text, true};
    }
    fail(t, "expected role, got '" + t.text + "'");
  }

  Concept atom() {
    const Token& t = take();
    switch (t.kind) {
      case Tok::Top: return Concept::top();
      case Tok::Name: return Concept::name(t.text);
      case Tok::LParen: {
        Concept c = parse_expr();
        expect(Tok::RParen, "')'");
        return c;
      }
      case Tok::Ex:
      case Tok::All: {
        if (t.kind == Tok::All && dialect_ == Dialect::EL) fail(t, "'all' in an EL theory", "dialect");
        Role r = role();
        expect(Tok::Dot, "'.'");
        Concept f = atom();
        return t.kind == Tok::Ex ? Concept::exists(r, f) : Concept::forall(r, f);
      }
      case Tok::End: fail(t, "expected concept but line ended");
      default: fail(t, "expected concept, got '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  Dialect dialect_;
};

std::optional<Dialect> header_dialect(std::string_view line) {
  // "# dialect: ELI"
  std::size_t p = 0;
  while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
  if (p >= line.size() || line[p] != '#') return std::nullopt;
  ++p;
  while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
  constexpr std::string_view key = "dialect:";
  if (line.substr(p, key.size()) != key) return std::nullopt;
  p += key.size();
  std::string word;
  for (; p < line.size(); ++p)
    if (!std::isspace(static_cast<unsigned char>(line[p]))) word += static_cast<char>(std::toupper(line[p]));
  if (word == "EL") return Dialect::EL;
  if (word == "ELI") return Dialect::ELI;
  return std::nullopt;
}

}  // namespace

Theory parse_theory(std::string_view text, const ParseOptions& opts) {
  std::vector<std::pair<int, std::string_view>> lines;
  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.emplace_back(++lineno, text.substr(start, end - start));
    start = end + 1;
  }

  Dialect d = opts.default_dialect;
  if (!opts.force_dialect) {
    for (const auto& [n, l] : lines) {
      if (auto h = header_dialect(l)) {
        d = *h;
        break;
      }
    }
  }

  Theory t(d);
  for (const auto& [n, l] : lines) {
    auto toks = Lexer(l, n, opts.allow_reserved).run();
    if (toks.size() == 1) continue;  // blank or comment
    Parser p(std::move(toks), d);
    t.add(p.axiom(), n);
  }
  return t;
}

Concept parse_concept(std::string_view text, Dialect d) {
  return Parser(Lexer(text, 1, true).run(), d).whole_concept();
}

Gci parse_gci(std::string_view text, Dialect d) {
  return Parser(Lexer(text, 1, true).run(), d).axiom();
}

}  // namespace proofforge
