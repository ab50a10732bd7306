#pragma once

#include "coverspec/covers.hpp"
#include "coverspec/quadext.hpp"
#include "coverspec/ratfunc.hpp"

#include <optional>
#include <vector>

namespace coverspec {

struct Bounds {
  BigInt upper_rN;
  RatQ lower_b1;         // ((r - eps - 2) N + 2) / (1 - 1/e_inf)
  RatQ lower_b1_strict;  // (r - eps - 2) N + 2, to be exceeded strictly
  BigInt lower_b2;       // (r - 4) N + 4, meaningful for r >= 4
  // Genus bounds, present when the source genus is known.
  std::optional<BigInt> genus_upper;      // N (g + d - 1)
  std::optional<RatQ> genus_lower_exact;  // g + (d/4)(N - 1)(r - 4), assuming no group drop
  std::optional<BigInt> genus_lower;      // ceiling of genus_lower_exact
};

/// Throws EmptyRamification when r = 0.
Bounds compute_bounds(unsigned r, const RatQ& epsilon, unsigned e_inf, unsigned n, const BigInt& d,
                      const std::optional<BigInt>& g);

/// Class of g^alpha for g in class c, and its order e / gcd(e, alpha).
std::pair<std::size_t, unsigned> inertia_power_class(std::size_t c, unsigned alpha, const ClassTable& table);

struct Survivor {
  FiberPart points;  // an irreducible-factor group of points, or infinity
  unsigned alpha = 1;
  unsigned inertia_order = 1;
  std::size_t inertia_class = 0;
};

struct BranchSpecialization {
  P1Q branch_point;
  std::size_t class_id = 0;
  unsigned e = 0;
  FiberProfile profile;
  unsigned p = 0;  // simple points
  unsigned q = 0;  // multiple points with multiplicity not divisible by e
  unsigned s = 0;  // points with multiplicity divisible by e
  std::vector<Survivor> survivors;
};

struct SpecializationReport {
  unsigned n = 0;
  std::vector<BranchSpecialization> per_branch;
  unsigned r_t0 = 0;
  std::optional<BigInt> source_genus;  // absent when the data violates Riemann-Hurwitz
  std::optional<Bounds> bounds;        // absent when r = 0
  bool identity_1_ok = false;    // multiplicities over each branch point sum to N
  bool inequality_2_ok = false;  // total excess multiplicity over branch points <= 2N - 2

  /// Classes of the survivors, one entry per distinct point.
  ClassTuple survivor_tuple(const TablePtr& table) const;
  /// (inertia order, class) for every distinct surviving point, sorted.
  std::vector<std::pair<unsigned, std::size_t>> survivor_multiset() const;
};

/// Fiber calculus of T0 over each rational branch point. Throws ConstantFunction,
/// DuplicateBranchPoints, DomainError when branch points are missing.
SpecializationReport specialize_cover(const RamificationData& data, const RatFunc& t0);

/// Same report computed after moving infinity off the branch locus on both lines by Möbius maps
/// (so that neither infinity nor T0(infinity) is a branch point). For differential testing.
SpecializationReport specialize_cover_normalized(const RamificationData& data, const RatFunc& t0);

/// Genus of the specialized cover by Riemann-Hurwitz over the survivors.
/// Requires assume_no_group_drop, else GroupDropNotSupported.
BigInt specialized_genus(const SpecializationReport& report, const RamificationData& data, bool assume_no_group_drop);

/// Survivor points as elements of one quadratic field (factors of degree <= 2 only).
/// Throws DomainError when a factor has degree > 2 or two factors need different fields.
std::vector<QuadPoint> survivor_points(const SpecializationReport& report, std::int64_t fallback_d = -1);

}  // namespace coverspec
