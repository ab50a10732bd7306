#include "coverspec/quadext.hpp"

#include "coverspec/error.hpp"
#include "coverspec/intmath.hpp"

#include <algorithm>
#include <array>

namespace coverspec {

namespace {

void check_field_parameter(const BigInt& d) {
  if (d == 0 || d == 1) throw Error(ErrorCode::DomainError, "quadratic field parameter must differ from 0 and 1");
  if (split_square(d).first != 1) throw Error(ErrorCode::DomainError, "quadratic field parameter " + d.str() + " is not square-free");
}

const BigInt& common_d(const QuadExt& a, const QuadExt& b) {
  if (a.is_rational()) return b.d();
  if (b.is_rational() || a.d() == b.d()) return a.d();
  throw Error(ErrorCode::DomainError, "mixing Q(sqrt " + a.d().str() + ") and Q(sqrt " + b.d().str() + ")");
}

}  // namespace

QuadExt::QuadExt(std::int64_t d, const RatQ& x, const RatQ& y) : QuadExt(BigInt(d), x, y) {}

QuadExt::QuadExt(const BigInt& d, const RatQ& x, const RatQ& y) : d_(d), x_(x), y_(y) { check_field_parameter(d_); }

QuadExt QuadExt::inverse() const {
  const RatQ n = norm();
  if (n.is_zero()) throw Error(ErrorCode::ZeroDenominator, "inverse of zero in Q(sqrt d)");
  return QuadExt(d_, x_ / n, -y_ / n, Trusted{});
}

std::string QuadExt::to_string() const {
  if (is_rational()) return x_.to_string();
  // (p + q sqrt d)/m with integers p, q and a positive common denominator m.
  const BigInt m = lcm(x_.denominator(), y_.denominator());
  const BigInt p = x_.numerator() * (m / x_.denominator());
  const BigInt q = y_.numerator() * (m / y_.denominator());
  std::string body;
  if (p != 0) body = p.str();
  const BigInt aq = boost::multiprecision::abs(q);
  const std::string root = (aq == 1 ? std::string() : aq.str()) + "sqrt(" + d_.str() + ")";
  if (p == 0) body = (q < 0 ? "-" : "") + root;
  else body += (q < 0 ? "-" : "+") + root;
  if (m == 1) return body;
  return "(" + body + ")/" + m.str();
}

QuadExt operator+(const QuadExt& a, const QuadExt& b) {
  return QuadExt(common_d(a, b), a.x_ + b.x_, a.y_ + b.y_, QuadExt::Trusted{});
}

QuadExt operator-(const QuadExt& a, const QuadExt& b) {
  return QuadExt(common_d(a, b), a.x_ - b.x_, a.y_ - b.y_, QuadExt::Trusted{});
}

QuadExt operator*(const QuadExt& a, const QuadExt& b) {
  const BigInt& d = common_d(a, b);
  return QuadExt(d, a.x_ * b.x_ + RatQ(d) * a.y_ * b.y_, a.x_ * b.y_ + a.y_ * b.x_, QuadExt::Trusted{});
}

QuadExt operator/(const QuadExt& a, const QuadExt& b) {
  const BigInt& d = common_d(a, b);
  const QuadExt bb(d, b.x_, b.y_, QuadExt::Trusted{});
  return a * bb.inverse();
}

bool operator==(const QuadExt& a, const QuadExt& b) {
  if (a.x_ != b.x_ || a.y_ != b.y_) return false;
  return a.y_.is_zero() || a.d_ == b.d_;
}

bool operator<(const QuadExt& a, const QuadExt& b) {
  if (a.x_ != b.x_) return a.x_ < b.x_;
  return a.y_ < b.y_;
}

std::vector<QuadExt> roots_degree_le2(const PolyQ& p, std::int64_t fallback_d) {
  if (p.degree() < 1 || p.degree() > 2) throw Error(ErrorCode::DomainError, "roots_degree_le2 needs degree 1 or 2");
  if (p.degree() == 1) return {QuadExt(fallback_d, -p.coeff(0) / p.coeff(1))};
  const RatQ a = p.coeff(2);
  const RatQ b = p.coeff(1);
  const RatQ c = p.coeff(0);
  const RatQ disc = b * b - RatQ(4) * a * c;
  if (disc.is_zero()) throw Error(ErrorCode::DomainError, "repeated root in a square-free factor");
  // sqrt(n/m) = sqrt(n*m)/m = s*sqrt(f)/m.
  const auto [s, f] = split_square(disc.numerator() * disc.denominator());
  const RatQ scale = RatQ(s, disc.denominator()) / (RatQ(2) * a);
  const RatQ centre = -b / (RatQ(2) * a);
  std::vector<QuadExt> roots;
  if (f == 1) {
    roots = {QuadExt(fallback_d, centre - scale), QuadExt(fallback_d, centre + scale)};
  } else {
    roots = {QuadExt(f, centre, scale), QuadExt(f, centre, -scale)};
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

QuadPoint to_quad_point(const P1Q& p, std::int64_t d) {
  if (p.is_infinity()) return std::nullopt;
  return QuadExt(d, p.value());
}

QuadExt cross_ratio(const QuadPoint& p1, const QuadPoint& p2, const QuadPoint& p3, const QuadPoint& p4) {
  const std::array<const QuadPoint*, 4> pts{&p1, &p2, &p3, &p4};
  BigInt d = -1;
  for (const auto* p : pts)
    if (p->has_value() && !(*p)->is_rational()) d = (*p)->d();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      const bool both_inf = !pts[i]->has_value() && !pts[j]->has_value();
      const bool equal = pts[i]->has_value() && pts[j]->has_value() && **pts[i] == **pts[j];
      if (both_inf || equal) throw Error(ErrorCode::DegeneratePoints, "cross-ratio of coinciding points");
    }
  const QuadExt one(d, RatQ(1));
  // A difference involving infinity cancels against its partner in the other half.
  auto diff = [&one](const QuadPoint& u, const QuadPoint& v) {
    if (!u.has_value() || !v.has_value()) return one;
    return *u - *v;
  };
  const QuadExt num = diff(p3, p1) * diff(p4, p2);
  const QuadExt den = diff(p3, p2) * diff(p4, p1);
  return num / den;
}

std::vector<QuadExt> cross_ratio_orbit(const QuadPoint& p1, const QuadPoint& p2, const QuadPoint& p3,
                                       const QuadPoint& p4) {
  const QuadExt lambda = cross_ratio(p1, p2, p3, p4);
  const QuadExt one(lambda.is_rational() ? BigInt(-1) : lambda.d(), RatQ(1));
  std::vector<QuadExt> orbit{lambda,
                             lambda.inverse(),
                             one - lambda,
                             (one - lambda).inverse(),
                             lambda / (lambda - one),
                             (lambda - one) / lambda};
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

}  // namespace coverspec
