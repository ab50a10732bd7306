#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace coverspec {

/// Permutation of {0, ..., degree-1}. Products compose right to left:
/// (a * b)(x) = a(b(x)), so a tuple with g1 * g2 * ... * gr == 1 applies gr first.
class Perm {
public:
  using Point = std::uint32_t;

  Perm() = default;
  /// Validates that images is a bijection.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);
  /// Cycles are lists of points; points not mentioned are fixed.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  Perm inverse() const;
  Perm pow(long long k) const;
  bool is_identity() const;
  unsigned order() const;
  /// Nontrivial cycles, each starting at its least point, ordered by that point.
  std::vector<std::vector<Point>> cycles() const;
  /// All cycle lengths (fixed points included), descending.
  std::vector<unsigned> cycle_type() const;
  std::string to_string() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }

private:
  struct Unchecked {};
  Perm(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}
  std::vector<Point> images_;
};

}  // namespace coverspec

template <>
struct std::hash<coverspec::Perm> {
  std::size_t operator()(const coverspec::Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p.images()) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};
