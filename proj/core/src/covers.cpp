#include "coverspec/covers.hpp"

#include "coverspec/error.hpp"

#include <algorithm>
#include <set>

namespace coverspec {

RamificationData RamificationData::make(ClassTuple classes, std::optional<std::vector<P1Q>> branch_points) {
  if (!classes.table) throw Error(ErrorCode::InvalidRamificationData, "no class table");
  const BigInt& d = classes.table->group_order();
  for (auto e : classes.orders()) {
    if (e < 2) throw Error(ErrorCode::InvalidRamificationData, "ramification index below 2");
    if (d % e != 0)
      throw Error(ErrorCode::InvalidRamificationData, "index " + std::to_string(e) + " does not divide " + d.str());
  }
  if (branch_points) {
    if (branch_points->size() != classes.size())
      throw Error(ErrorCode::InvalidRamificationData, std::to_string(branch_points->size()) + " branch points for " +
                                                          std::to_string(classes.size()) + " classes");
    std::set<std::string> seen;
    for (const auto& p : *branch_points)
      if (!seen.insert(p.to_string()).second)
        throw Error(ErrorCode::DuplicateBranchPoints, "branch point " + p.to_string() + " repeated");
  }
  return RamificationData{std::move(classes), std::move(branch_points)};
}

RhInvariants rh_invariants(const BigInt& d, const std::vector<unsigned>& e) {
  if (d < 1) throw Error(ErrorCode::InvalidRamificationData, "group order must be positive");
  RhInvariants out;
  out.epsilon = RatQ(0);
  for (auto ei : e) {
    if (ei == 0) throw Error(ErrorCode::InvalidRamificationData, "ramification index 0");
    out.epsilon += RatQ(1, ei);
    out.e_inf = std::max(out.e_inf, ei);
  }
  const RatQ two_g_minus_2 = RatQ(d) * (RatQ(static_cast<std::int64_t>(e.size())) - RatQ(2) - out.epsilon);
  if (!two_g_minus_2.is_integer() || two_g_minus_2.numerator() % 2 != 0)
    throw Error(ErrorCode::NonIntegralGenus, "2g - 2 = " + two_g_minus_2.to_string() + " is not an even integer");
  out.genus = two_g_minus_2.numerator() / 2 + 1;
  if (out.genus < 0) throw Error(ErrorCode::NegativeGenus, "genus " + out.genus.str());
  return out;
}

RhInvariants rh_invariants(const RamificationData& data) { return rh_invariants(data.d(), data.e()); }

std::string ExceptionalMatch::name() const {
  switch (kind) {
    case ExceptionalCase::Trivial: return "trivial";
    case ExceptionalCase::Cyclic: return "cyclic Z/" + std::to_string(n);
    case ExceptionalCase::Klein: return "Klein (Z/2)^2";
    case ExceptionalCase::A4: return "A4";
    case ExceptionalCase::S4: return "S4";
    case ExceptionalCase::A5: return "A5";
    case ExceptionalCase::Dihedral: return "D" + std::to_string(2 * n);
  }
  return "?";
}

std::optional<ExceptionalMatch> classify_genus_zero(const BigInt& d, const std::vector<unsigned>& e) {
  try {
    if (rh_invariants(d, e).genus != 0) return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
  std::vector<unsigned> s = e;
  std::sort(s.begin(), s.end());
  if (s.empty()) return ExceptionalMatch{ExceptionalCase::Trivial, 1};
  if (s.size() == 2 && s[0] == s[1]) return ExceptionalMatch{ExceptionalCase::Cyclic, s[0]};
  if (s.size() != 3) return std::nullopt;
  if (s == std::vector<unsigned>{2, 2, 2}) return ExceptionalMatch{ExceptionalCase::Klein, 2};
  if (s == std::vector<unsigned>{2, 3, 3}) return ExceptionalMatch{ExceptionalCase::A4, 0};
  if (s == std::vector<unsigned>{2, 3, 4}) return ExceptionalMatch{ExceptionalCase::S4, 0};
  if (s == std::vector<unsigned>{2, 3, 5}) return ExceptionalMatch{ExceptionalCase::A5, 0};
  if (s[0] == 2 && s[1] == 2) return ExceptionalMatch{ExceptionalCase::Dihedral, s[2]};
  return std::nullopt;
}

std::optional<ExceptionalMatch> classify_genus_zero(const RamificationData& data) {
  return classify_genus_zero(data.d(), data.e());
}

Tri invariants_prec(const RamificationData& a, const RamificationData& b, bool assert_same_group) {
  if (!assert_same_group && rh_invariants(a).genus == 0)
    throw Error(ErrorCode::GenusSideConditionViolated, "source cover has genus 0; assert equal groups to compare");
  const PrecResult prec = tuple_prec(a.classes, b.classes);
  if (a.r() > b.r()) return Tri::False;
  return prec.holds;
}

bool strict_growth(unsigned r, const RatQ& epsilon, unsigned n, bool proper_cover) {
  if (n < 2) throw Error(ErrorCode::DomainError, "strict growth needs N >= 2");
  if (r >= 5) return true;
  if (proper_cover && epsilon * RatQ(2) <= RatQ(static_cast<std::int64_t>(r) - 2)) return true;
  if (n >= 4 && r == 4 && epsilon <= RatQ(3, 2)) return true;
  if (n >= 4 && r == 3 && epsilon <= RatQ(3, 4)) return true;
  return false;
}

}  // namespace coverspec
