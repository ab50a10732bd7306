#pragma once

#include "coverspec/rational.hpp"

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace coverspec {

/// Univariate polynomial over Q, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
class PolyQ {
public:
  PolyQ() = default;
  explicit PolyQ(std::vector<RatQ> coeffs);
  PolyQ(std::initializer_list<RatQ> coeffs) : PolyQ(std::vector<RatQ>(coeffs)) {}

  static PolyQ constant(const RatQ& c) { return PolyQ({c}); }
  static PolyQ monomial(const RatQ& c, unsigned degree);
  static PolyQ x() { return PolyQ({RatQ(0), RatQ(1)}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<RatQ>& coeffs() const { return coeffs_; }
  RatQ coeff(int i) const;
  RatQ leading() const;

  RatQ operator()(const RatQ& x) const;

  PolyQ derivative() const;
  PolyQ monic() const;
  PolyQ scaled(const RatQ& c) const;
  /// Substitutes x -> x + c.
  PolyQ shifted(const RatQ& c) const;

  std::string to_string(char var = 'U') const;

  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  PolyQ& operator*=(const PolyQ& o);

  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(PolyQ a, const PolyQ& b) { return a *= b; }
  friend PolyQ operator-(const PolyQ& a) { return a.scaled(RatQ(-1)); }
  friend bool operator==(const PolyQ&, const PolyQ&) = default;

private:
  void trim();
  std::vector<RatQ> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const PolyQ& p);

/// Euclidean division; throws ZeroDenominator when dividing by zero.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);
PolyQ pow(const PolyQ& p, unsigned e);
/// Monic gcd (zero when both inputs are zero).
PolyQ gcd(const PolyQ& a, const PolyQ& b);

struct SquarefreeFactor {
  PolyQ factor;  // monic, square-free, degree >= 1
  unsigned multiplicity;
};

/// Yun decomposition p = lc * prod factor_i^i; factors of distinct multiplicities are coprime.
std::vector<SquarefreeFactor> squarefree_decomposition(const PolyQ& p);

/// Distinct rational roots, ascending.
std::vector<RatQ> rational_roots(const PolyQ& p);

/// Scales to a primitive integer polynomial with positive leading coefficient.
std::vector<BigInt> primitive_integer_coeffs(const PolyQ& p);

/// Resultant of two univariate polynomials (Sylvester determinant).
RatQ resultant(const PolyQ& f, const PolyQ& g);

/// Lagrange interpolation through distinct abscissae.
PolyQ interpolate(const std::vector<RatQ>& xs, const std::vector<RatQ>& ys);

}  // namespace coverspec
