#pragma once

#include "coverspec/classtable.hpp"
#include "coverspec/ratfunc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coverspec {

/// Branch data (G, r, C) of a Galois cover of P^1, optionally with rational branch points.
struct RamificationData {
  ClassTuple classes;
  std::optional<std::vector<P1Q>> branch_points;

  /// Validates e_i >= 2, e_i | d and pairwise distinct branch points (DuplicateBranchPoints),
  /// InvalidRamificationData otherwise.
  static RamificationData make(ClassTuple classes, std::optional<std::vector<P1Q>> branch_points = std::nullopt);

  std::size_t r() const { return classes.size(); }
  const BigInt& d() const { return classes.table->group_order(); }
  std::vector<unsigned> e() const { return classes.orders(); }
  const ClassTable& table() const { return *classes.table; }
};

struct RhInvariants {
  RatQ epsilon;
  unsigned e_inf = 0;
  BigInt genus;
};

/// 2g - 2 = d (r - 2 - epsilon). Throws NonIntegralGenus, NegativeGenus.
RhInvariants rh_invariants(const BigInt& d, const std::vector<unsigned>& e);
RhInvariants rh_invariants(const RamificationData& data);

enum class ExceptionalCase { Trivial, Cyclic, Klein, A4, S4, A5, Dihedral };

struct ExceptionalMatch {
  ExceptionalCase kind;
  unsigned n = 0;  // cyclic order or dihedral parameter (group of order 2n)
  std::string name() const;
  friend bool operator==(const ExceptionalMatch&, const ExceptionalMatch&) = default;
};

/// The genus-0 case the data falls in, or nullopt when the genus is not 0 (or not defined).
std::optional<ExceptionalMatch> classify_genus_zero(const BigInt& d, const std::vector<unsigned>& e);
std::optional<ExceptionalMatch> classify_genus_zero(const RamificationData& data);

/// Necessary condition for A's extension to specialize to B's: r_A <= r_B and C_A ≺ C_B.
/// When g_A = 0 the caller must assert equal groups, else GenusSideConditionViolated.
Tri invariants_prec(const RamificationData& a, const RamificationData& b, bool assert_same_group = false);

/// Sufficient conditions for r_T0 > r (N >= 2): r >= 5; proper cover with eps <= (r-2)/2;
/// N >= 4, r = 4, eps <= 3/2; N >= 4, r = 3, eps <= 3/4.
bool strict_growth(unsigned r, const RatQ& epsilon, unsigned n, bool proper_cover);

}  // namespace coverspec
