#include "coverspec/perm.hpp"

#include "coverspec/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace coverspec {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw Error(ErrorCode::InvalidPermutation, "images do not form a bijection");
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Perm(std::move(images), Unchecked{});
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> touched(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point from = cycle[i];
      const Point to = cycle[(i + 1) % cycle.size()];
      if (from >= degree || to >= degree)
        throw Error(ErrorCode::InvalidPermutation, "cycle point out of range for degree " + std::to_string(degree));
      if (touched[from]) throw Error(ErrorCode::InvalidPermutation, "cycles are not disjoint");
      touched[from] = true;
      images[from] = to;
    }
  }
  return Perm(std::move(images));
}

Perm Perm::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) inv[images_[x]] = static_cast<Point>(x);
  return Perm(std::move(inv), Unchecked{});
}

Perm Perm::pow(long long k) const {
  Perm base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Perm result = identity(degree());
  while (e) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

unsigned Perm::order() const {
  unsigned result = 1;
  for (auto len : cycle_type()) result = std::lcm(result, len);
  return result;
}

std::vector<std::vector<Perm::Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<unsigned> Perm::cycle_type() const {
  std::vector<unsigned> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    unsigned len = 0;
    for (Point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::string Perm::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw Error(ErrorCode::InvalidPermutation, "degree mismatch in product");
  std::vector<Perm::Point> images(a.degree());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = a.images_[b.images_[x]];
  return Perm(std::move(images), Perm::Unchecked{});
}

}  // namespace coverspec
