#pragma once

#include "coverspec/poly.hpp"
#include "coverspec/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coverspec {

/// A point of the rational projective line: a finite rational or infinity.
class P1Q {
public:
  P1Q() = default;  // infinity
  P1Q(const RatQ& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  P1Q(std::int64_t v) : value_(RatQ(v)) {}  // NOLINT(google-explicit-constructor)

  static P1Q infinity() { return P1Q(); }
  /// "inf", "∞" or a rational literal.
  static P1Q parse(std::string_view text);

  bool is_infinity() const { return !value_.has_value(); }
  const RatQ& value() const;
  std::string to_string() const;

  friend bool operator==(const P1Q&, const P1Q&) = default;
  /// Finite points first in numeric order, infinity last.
  friend bool operator<(const P1Q& a, const P1Q& b);

private:
  std::optional<RatQ> value_;
};

/// Reduced rational function a/b: gcd(a, b) = 1 and b monic.
class RatFunc {
public:
  /// Normal form of a/b. Throws ZeroDenominator if b == 0; constant results are
  /// allowed here and reported by is_constant().
  RatFunc(const PolyQ& a, const PolyQ& b);
  explicit RatFunc(const PolyQ& a) : RatFunc(a, PolyQ::constant(1)) {}

  /// Degree-1 map (alpha U + beta)/(gamma U + delta); throws DomainError when singular.
  static RatFunc mobius(const RatQ& alpha, const RatQ& beta, const RatQ& gamma, const RatQ& delta);

  const PolyQ& numerator() const { return a_; }
  const PolyQ& denominator() const { return b_; }
  unsigned degree() const { return degree_; }
  bool is_constant() const { return degree_ == 0; }

  P1Q operator()(const P1Q& u) const;

  /// (this ∘ inner)(V) = this(inner(V)); degrees multiply.
  RatFunc compose(const RatFunc& inner) const;

  std::string to_string(char var = 'U') const;

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

private:
  PolyQ a_;
  PolyQ b_;
  unsigned degree_ = 0;
};

/// Same as constructing a RatFunc; throws ConstantFunction when the result has degree 0.
RatFunc reduce_ratfunc(const PolyQ& a, const PolyQ& b);

/// One group of points in a fiber: either the roots of a square-free monic factor
/// (all with the same multiplicity) or the point at infinity.
struct FiberPart {
  unsigned multiplicity = 0;
  bool at_infinity = false;
  PolyQ factor;          // empty when at_infinity
  unsigned point_count = 0;  // number of distinct points over the algebraic closure

  friend bool operator==(const FiberPart&, const FiberPart&) = default;
};

/// Multiplicity decomposition of T0^{-1}(t) over the algebraic closure.
struct FiberProfile {
  std::vector<FiberPart> parts;  // finite parts by increasing multiplicity, then infinity

  /// Sum of multiplicity * point_count; equals the degree of T0.
  unsigned total_multiplicity() const;
  /// Sorted (multiplicity, point count) pairs with equal multiplicities merged.
  std::vector<std::pair<unsigned, unsigned>> multiplicity_counts() const;
};

FiberProfile fiber_profile(const RatFunc& t0, const P1Q& t);

/// Sum over all points u of P^1 of (e_u - 1) for the map T0: P^1 -> P^1.
unsigned global_ramification_weight(const RatFunc& t0);

/// Local multiplicity of the point at infinity in the fiber of T0 over T0(∞).
unsigned infinity_multiplicity(const RatFunc& t0);

}  // namespace coverspec
