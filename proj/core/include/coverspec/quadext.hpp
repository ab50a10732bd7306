#pragma once

#include "coverspec/ratfunc.hpp"
#include "coverspec/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coverspec {

/// x + y*sqrt(d) with d square-free and d != 0, 1.
class QuadExt {
public:
  QuadExt(std::int64_t d, const RatQ& x, const RatQ& y = RatQ(0));
  QuadExt(const BigInt& d, const RatQ& x, const RatQ& y = RatQ(0));

  const BigInt& d() const { return d_; }
  const RatQ& x() const { return x_; }
  const RatQ& y() const { return y_; }
  bool is_rational() const { return y_.is_zero(); }
  bool is_zero() const { return x_.is_zero() && y_.is_zero(); }

  QuadExt conjugate() const { return QuadExt(d_, x_, -y_, Trusted{}); }
  RatQ norm() const { return x_ * x_ - RatQ(d_) * y_ * y_; }
  QuadExt inverse() const;

  std::string to_string() const;

  QuadExt operator-() const { return QuadExt(d_, -x_, -y_, Trusted{}); }
  friend QuadExt operator+(const QuadExt& a, const QuadExt& b);
  friend QuadExt operator-(const QuadExt& a, const QuadExt& b);
  friend QuadExt operator*(const QuadExt& a, const QuadExt& b);
  friend QuadExt operator/(const QuadExt& a, const QuadExt& b);

  /// Equality of field elements (d only matters when y != 0).
  friend bool operator==(const QuadExt& a, const QuadExt& b);
  /// Lexicographic on (x, y); used only for canonical set ordering.
  friend bool operator<(const QuadExt& a, const QuadExt& b);

private:
  struct Trusted {};
  QuadExt(BigInt d, RatQ x, RatQ y, Trusted) : d_(std::move(d)), x_(std::move(x)), y_(std::move(y)) {}
  BigInt d_;
  RatQ x_;
  RatQ y_;
};

/// A point of P^1 over Q(sqrt d): nullopt is infinity.
using QuadPoint = std::optional<QuadExt>;

/// Roots of a square-free polynomial of degree <= 2 as elements of one quadratic field.
/// Rational roots are returned with y = 0 and the field parameter `fallback_d`.
std::vector<QuadExt> roots_degree_le2(const PolyQ& p, std::int64_t fallback_d = -1);

/// The set {λ, 1/λ, 1-λ, 1/(1-λ), λ/(λ-1), (λ-1)/λ} for λ = cr(p1, p2, p3, p4), where
/// cr(z1, z2, z3, z4) = ((z3 - z1)(z4 - z2)) / ((z3 - z2)(z4 - z1)), so cr(0, 1, -1, λ) = (λ-1)/(2λ).
/// Sorted, duplicates removed. Throws DegeneratePoints when two points coincide.
std::vector<QuadExt> cross_ratio_orbit(const QuadPoint& p1, const QuadPoint& p2, const QuadPoint& p3,
                                       const QuadPoint& p4);

QuadExt cross_ratio(const QuadPoint& p1, const QuadPoint& p2, const QuadPoint& p3, const QuadPoint& p4);

QuadPoint to_quad_point(const P1Q& p, std::int64_t d = -1);

}  // namespace coverspec
