#include "coverspec/bipoly.hpp"

#include "coverspec/error.hpp"

#include <algorithm>

namespace coverspec {

BiPolyQ::BiPolyQ(std::vector<PolyQ> y_coeffs) : y_coeffs_(std::move(y_coeffs)) {
  while (!y_coeffs_.empty() && y_coeffs_.back().is_zero()) y_coeffs_.pop_back();
}

int BiPolyQ::degree_t() const {
  int d = -1;
  for (const auto& c : y_coeffs_) d = std::max(d, c.degree());
  return d;
}

bool BiPolyQ::is_monic_in_y() const {
  return !y_coeffs_.empty() && y_coeffs_.back() == PolyQ::constant(1);
}

PolyQ BiPolyQ::at_t(const RatQ& t) const {
  std::vector<RatQ> coeffs;
  coeffs.reserve(y_coeffs_.size());
  for (const auto& c : y_coeffs_) coeffs.push_back(c(t));
  return PolyQ(std::move(coeffs));
}

BiPolyQ BiPolyQ::derivative_y() const {
  std::vector<PolyQ> out;
  for (std::size_t i = 1; i < y_coeffs_.size(); ++i)
    out.push_back(y_coeffs_[i].scaled(RatQ(static_cast<std::int64_t>(i))));
  return BiPolyQ(std::move(out));
}

BiPolyQ BiPolyQ::shifted_t(const RatQ& c) const {
  std::vector<PolyQ> out;
  out.reserve(y_coeffs_.size());
  for (const auto& coeff : y_coeffs_) out.push_back(coeff.shifted(c));
  return BiPolyQ(std::move(out));
}

PolyQ discriminant_y(const BiPolyQ& p) {
  if (p.degree_y() < 1 || !p.is_monic_in_y())
    throw Error(ErrorCode::NotMonic, "discriminant needs a polynomial monic in Y of degree >= 1");
  const int n = p.degree_y();
  const int bound = std::max(0, (2 * n - 1) * std::max(p.degree_t(), 0));
  const BiPolyQ dp = p.derivative_y();
  // Monic in Y, so specializing T commutes with the resultant; interpolate through bound+1 values.
  std::vector<RatQ> xs;
  std::vector<RatQ> ys;
  for (int k = 0; k <= bound; ++k) {
    const RatQ t(k);
    xs.push_back(t);
    ys.push_back(resultant(p.at_t(t), dp.at_t(t)));
  }
  return interpolate(xs, ys);
}

}  // namespace coverspec
