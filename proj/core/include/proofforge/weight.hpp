#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace proofforge {

// Exact non-negative rational. Always kept reduced (cpp_rational does that).
class Weight {
 public:
  using Int = boost::multiprecision::cpp_int;
  using Rational = boost::multiprecision::cpp_rational;

  Weight() = default;
  Weight(std::int64_t n);  // NOLINT: integers convert implicitly
  Weight(const Int& num, const Int& den);
  explicit Weight(Rational r);

  // "7", "3/2", "0.25"
  static Weight parse(std::string_view text);

  const Rational& value() const { return v_; }
  Int numerator() const;
  Int denominator() const;
  bool is_integer() const;
  Int floor() const;
  // clamps to int64 range; search budgets never get near the limit
  std::int64_t floor_i64() const;

  std::string str() const;
  double approx() const;

  Weight& operator+=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }

  friend bool operator==(const Weight& a, const Weight& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (b.v_ < a.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational v_{0};
};

// largest integer d with d <= 2^q, for the log-depth threshold semantics
Weight::Int pow2_floor(const Weight& q);

}  // namespace proofforge
