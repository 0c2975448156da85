#include "proofforge/weight.hpp"

#include "proofforge/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>
#include <limits>

namespace proofforge {

namespace {

Weight::Int parse_digits(std::string_view s, std::string_view whole) {
  if (s.empty()) throw Error("weight", "malformed number '" + std::string(whole) + "'");
  Weight::Int v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error("weight", "malformed number '" + std::string(whole) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

Weight::Weight(std::int64_t n) : v_(n) {
  if (n < 0) throw Error("weight", "weights are non-negative");
}

Weight::Weight(const Int& num, const Int& den) {
  if (den <= 0) throw Error("weight", "denominator must be positive");
  if (num < 0) throw Error("weight", "weights are non-negative");
  v_ = Rational(num, den);
}

Weight::Weight(Rational r) : v_(std::move(r)) {
  if (v_ < 0) throw Error("weight", "weights are non-negative");
}

Weight Weight::parse(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  if (auto slash = t.find('/'); slash != std::string_view::npos) {
    Int num = parse_digits(t.substr(0, slash), text);
    Int den = parse_digits(t.substr(slash + 1), text);
    if (den == 0) throw Error("weight", "zero denominator in '" + std::string(text) + "'");
    return Weight(num, den);
  }
  if (auto dot = t.find('.'); dot != std::string_view::npos) {
    auto ip = t.substr(0, dot);
    auto fp = t.substr(dot + 1);
    Int whole = ip.empty() ? Int(0) : parse_digits(ip, text);
    Int frac = parse_digits(fp, text);
    Int scale = boost::multiprecision::pow(Int(10), static_cast<unsigned>(fp.size()));
    return Weight(whole * scale + frac, scale);
  }
  return Weight(parse_digits(t, text), Int(1));
}

Weight::Int Weight::numerator() const { return boost::multiprecision::numerator(v_); }
Weight::Int Weight::denominator() const { return boost::multiprecision::denominator(v_); }

bool Weight::is_integer() const { return denominator() == 1; }

Weight::Int Weight::floor() const { return numerator() / denominator(); }

std::int64_t Weight::floor_i64() const {
  Int f = floor();
  if (f > std::numeric_limits<std::int64_t>::max()) return std::numeric_limits<std::int64_t>::max();
  return f.convert_to<std::int64_t>();
}

std::string Weight::str() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

double Weight::approx() const { return v_.convert_to<double>(); }

Weight& Weight::operator+=(const Weight& o) {
  v_ += o.v_;
  return *this;
}

Weight::Int pow2_floor(const Weight& q) {
  // d <= 2^(n/m)  <=>  d^m <= 2^n
  const Weight::Int n = q.numerator();
  const Weight::Int m = q.denominator();
  if (n > 4096) throw Error("weight", "log threshold too large");
  const unsigned nn = n.convert_to<unsigned>();
  if (m == 1) return Weight::Int(1) << nn;
  const unsigned mm = m.convert_to<unsigned>();
  const Weight::Int limit = Weight::Int(1) << nn;
  // binary search on d in [1, 2^(ceil(n/m))]
  Weight::Int lo = 1, hi = (Weight::Int(1) << (nn / mm + 1));
  while (lo < hi) {
    Weight::Int mid = (lo + hi + 1) / 2;
    if (boost::multiprecision::pow(mid, mm) <= limit) lo = mid;
    else hi = mid - 1;
  }
  return lo;
}

}  // namespace proofforge
