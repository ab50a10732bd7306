#include "coverspec/rational.hpp"

#include "coverspec/error.hpp"

#include <boost/functional/hash.hpp>

#include <cctype>
#include <ostream>

namespace coverspec {

namespace {

BigInt parse_integer(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw Error(ErrorCode::ParseError, "empty integer literal");
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw Error(ErrorCode::ParseError, "bad integer literal '" + std::string(text) + "'");
    value = value * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

RatQ::RatQ(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::ZeroDenominator, "rational with zero denominator");
  value_ = den < 0 ? Raw_t(-num, -den) : Raw_t(num, den);
}

RatQ RatQ::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return RatQ(parse_integer(text));
  return RatQ(parse_integer(trim(text.substr(0, slash))), parse_integer(trim(text.substr(slash + 1))));
}

BigInt RatQ::floor() const {
  const BigInt n = numerator();
  const BigInt d = denominator();
  BigInt q = n / d;
  if (n % d != 0 && n < 0) q -= 1;
  return q;
}

BigInt RatQ::ceil() const {
  const BigInt n = numerator();
  const BigInt d = denominator();
  BigInt q = n / d;
  if (n % d != 0 && n > 0) q += 1;
  return q;
}

RatQ RatQ::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroDenominator, "inverse of zero");
  return RatQ(Raw{}, 1 / value_);
}

RatQ& RatQ::operator/=(const RatQ& o) {
  if (o.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::string RatQ::to_string() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

std::size_t RatQ::hash() const {
  std::size_t seed = 0;
  boost::hash_combine(seed, boost::multiprecision::hash_value(numerator()));
  boost::hash_combine(seed, boost::multiprecision::hash_value(denominator()));
  return seed;
}

std::ostream& operator<<(std::ostream& os, const RatQ& q) { return os << q.to_string(); }

RatQ pow(const RatQ& base, unsigned exponent) {
  RatQ result(1);
  RatQ b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    b *= b;
    exponent >>= 1u;
  }
  return result;
}

BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / gcd(a, b) * b);
}

}  // namespace coverspec
