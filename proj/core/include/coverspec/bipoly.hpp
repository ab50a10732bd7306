#pragma once

#include "coverspec/poly.hpp"

#include <string>
#include <vector>

namespace coverspec {

/// Polynomial in T and Y over Q, stored as coefficients in Y (lowest first), each a PolyQ in T.
class BiPolyQ {
public:
  BiPolyQ() = default;
  explicit BiPolyQ(std::vector<PolyQ> y_coeffs);

  int degree_y() const { return static_cast<int>(y_coeffs_.size()) - 1; }
  int degree_t() const;
  const std::vector<PolyQ>& y_coeffs() const { return y_coeffs_; }
  bool is_monic_in_y() const;

  /// P(t, Y) as a polynomial in Y.
  PolyQ at_t(const RatQ& t) const;
  BiPolyQ derivative_y() const;
  /// Substitutes T -> T + c.
  BiPolyQ shifted_t(const RatQ& c) const;

private:
  std::vector<PolyQ> y_coeffs_;
};

/// Res_Y(P, dP/dY) as a polynomial in T, without sign or leading-coefficient normalization.
/// Throws NotMonic unless P is monic in Y of Y-degree >= 1.
PolyQ discriminant_y(const BiPolyQ& p);

}  // namespace coverspec
