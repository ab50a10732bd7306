#include "coverspec/poly.hpp"

#include "coverspec/error.hpp"
#include "coverspec/intmath.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace coverspec {

PolyQ::PolyQ(std::vector<RatQ> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyQ PolyQ::monomial(const RatQ& c, unsigned degree) {
  std::vector<RatQ> coeffs(degree + 1, RatQ(0));
  coeffs[degree] = c;
  return PolyQ(std::move(coeffs));
}

void PolyQ::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RatQ PolyQ::coeff(int i) const {
  if (i < 0 || i > degree()) return RatQ(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

RatQ PolyQ::leading() const { return coeffs_.empty() ? RatQ(0) : coeffs_.back(); }

RatQ PolyQ::operator()(const RatQ& x) const {
  RatQ acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyQ PolyQ::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<RatQ> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * RatQ(static_cast<std::int64_t>(i));
  return PolyQ(std::move(out));
}

PolyQ PolyQ::monic() const {
  if (is_zero()) return {};
  return scaled(leading().inverse());
}

PolyQ PolyQ::scaled(const RatQ& c) const {
  std::vector<RatQ> out = coeffs_;
  for (auto& x : out) x *= c;
  return PolyQ(std::move(out));
}

PolyQ PolyQ::shifted(const RatQ& c) const {
  // Horner in the ring: p(x + c) = (...((a_n)(x+c) + a_{n-1})(x+c) + ...).
  const PolyQ step({c, RatQ(1)});
  PolyQ acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * step + PolyQ::constant(*it);
  return acc;
}

std::string PolyQ::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const RatQ& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const RatQ mag = c.abs();
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == RatQ(1);
    if (i == 0 || !unit) {
      if (!mag.is_integer() && i > 0) os << '(' << mag << ')';
      else os << mag;
    }
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), RatQ(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), RatQ(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const PolyQ& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<RatQ> out(coeffs_.size() + o.coeffs_.size() - 1, RatQ(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

std::ostream& operator<<(std::ostream& os, const PolyQ& p) { return os << p.to_string(); }

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroDenominator, "polynomial division by zero");
  if (a.degree() < b.degree()) return {PolyQ{}, a};
  std::vector<RatQ> rem = a.coeffs();
  std::vector<RatQ> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), RatQ(0));
  const RatQ lead_inv = b.leading().inverse();
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = quot.size(); k-- > 0;) {
    const RatQ c = rem[k + db] * lead_inv;
    quot[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * b.coeffs()[j];
  }
  rem.resize(db);
  return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

PolyQ pow(const PolyQ& p, unsigned e) {
  PolyQ result = PolyQ::constant(1);
  PolyQ base = p;
  while (e) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

PolyQ gcd(const PolyQ& a, const PolyQ& b) {
  PolyQ x = a;
  PolyQ y = b;
  while (!y.is_zero()) {
    PolyQ r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const PolyQ& p) {
  std::vector<SquarefreeFactor> out;
  if (p.degree() <= 0) return out;
  const PolyQ f = p.monic();
  const PolyQ fd = f.derivative();
  const PolyQ a0 = gcd(f, fd);
  PolyQ b = divmod(f, a0).first;
  PolyQ c = divmod(fd, a0).first;
  PolyQ d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    const PolyQ a = gcd(b, d);
    if (a.degree() > 0) out.push_back({a, i});
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
  }
  return out;
}

std::vector<BigInt> primitive_integer_coeffs(const PolyQ& p) {
  if (p.is_zero()) return {};
  BigInt den_lcm = 1;
  for (const auto& c : p.coeffs()) den_lcm = lcm(den_lcm, c.denominator());
  std::vector<BigInt> ints;
  ints.reserve(p.coeffs().size());
  BigInt content = 0;
  for (const auto& c : p.coeffs()) {
    BigInt v = c.numerator() * (den_lcm / c.denominator());
    content = gcd(content, v);
    ints.push_back(std::move(v));
  }
  if (ints.back() < 0) content = -content;
  for (auto& v : ints) v /= content;
  return ints;
}

std::vector<RatQ> rational_roots(const PolyQ& p) {
  std::vector<RatQ> roots;
  if (p.degree() <= 0) return roots;
  PolyQ f = divmod(p, gcd(p, p.derivative())).first;
  if (f.coeff(0).is_zero()) {
    roots.emplace_back(0);
    f = divmod(f, PolyQ::x()).first;
  }
  if (f.degree() >= 1) {
    const std::vector<BigInt> ints = primitive_integer_coeffs(f);
    const std::vector<BigInt> nums = divisors(ints.front());
    const std::vector<BigInt> dens = divisors(ints.back());
    // Homogeneous Horner on integers: sum a_i n^i d^(deg-i) == 0.
    auto is_root = [&ints](const BigInt& n, const BigInt& d) {
      BigInt acc = 0;
      BigInt dpow = 1;
      for (auto it = ints.rbegin(); it != ints.rend(); ++it) {
        acc = acc * n + *it * dpow;
        dpow *= d;
      }
      return acc == 0;
    };
    for (const BigInt& d : dens) {
      for (const BigInt& n : nums) {
        if (gcd(n, d) != 1) continue;
        for (const int s : {1, -1}) {
          if (is_root(BigInt(s) * n, d)) roots.emplace_back(BigInt(s) * n, d);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

RatQ resultant(const PolyQ& f, const PolyQ& g) {
  if (f.is_zero() || g.is_zero()) return RatQ(0);
  const int m = f.degree();
  const int n = g.degree();
  if (m == 0 && n == 0) return RatQ(1);
  const auto size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<RatQ>> mat(size, std::vector<RatQ>(size, RatQ(0)));
  // Rows 0..n-1 carry f, rows n..n+m-1 carry g; highest coefficient first.
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = f.coeff(m - j);
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j)
      mat[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + j)] = g.coeff(n - j);
  RatQ det(1);
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && mat[pivot][col].is_zero()) ++pivot;
    if (pivot == size) return RatQ(0);
    if (pivot != col) {
      std::swap(mat[pivot], mat[col]);
      det = -det;
    }
    det *= mat[col][col];
    const RatQ inv = mat[col][col].inverse();
    for (std::size_t r = col + 1; r < size; ++r) {
      if (mat[r][col].is_zero()) continue;
      const RatQ factor = mat[r][col] * inv;
      for (std::size_t c = col; c < size; ++c) mat[r][c] -= factor * mat[col][c];
    }
  }
  return det;
}

PolyQ interpolate(const std::vector<RatQ>& xs, const std::vector<RatQ>& ys) {
  if (xs.size() != ys.size()) throw Error(ErrorCode::DomainError, "interpolate: size mismatch");
  PolyQ result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    PolyQ basis = PolyQ::constant(1);
    RatQ denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis *= PolyQ({-xs[j], RatQ(1)});
      denom *= xs[i] - xs[j];
    }
    result += basis.scaled(ys[i] / denom);
  }
  return result;
}

}  // namespace coverspec
