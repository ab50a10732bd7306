#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace coverspec {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number in lowest terms with a positive denominator.
class RatQ {
public:
  RatQ() = default;
  RatQ(std::int64_t n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  RatQ(const BigInt& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  RatQ(const BigInt& num, const BigInt& den);

  /// Accepts "n", "-n", "n/d" (d may be negative; the result is normalized).
  static RatQ parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_ == 0; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  BigInt floor() const;
  BigInt ceil() const;

  RatQ abs() const { return value_.sign() < 0 ? -*this : *this; }
  RatQ inverse() const;

  std::string to_string() const;

  RatQ operator-() const { return RatQ(Raw{}, -value_); }
  RatQ& operator+=(const RatQ& o) { value_ += o.value_; return *this; }
  RatQ& operator-=(const RatQ& o) { value_ -= o.value_; return *this; }
  RatQ& operator*=(const RatQ& o) { value_ *= o.value_; return *this; }
  RatQ& operator/=(const RatQ& o);

  friend RatQ operator+(RatQ a, const RatQ& b) { return a += b; }
  friend RatQ operator-(RatQ a, const RatQ& b) { return a -= b; }
  friend RatQ operator*(RatQ a, const RatQ& b) { return a *= b; }
  friend RatQ operator/(RatQ a, const RatQ& b) { return a /= b; }

  friend bool operator==(const RatQ& a, const RatQ& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const RatQ& a, const RatQ& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const;

private:
  using Raw_t = boost::multiprecision::cpp_rational;
  struct Raw {};
  RatQ(Raw, Raw_t v) : value_(std::move(v)) {}

  Raw_t value_;
};

std::ostream& operator<<(std::ostream& os, const RatQ& q);

RatQ pow(const RatQ& base, unsigned exponent);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace coverspec

template <>
struct std::hash<coverspec::RatQ> {
  std::size_t operator()(const coverspec::RatQ& q) const { return q.hash(); }
};
