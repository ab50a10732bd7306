#include "coverspec/specialize.hpp"

#include "coverspec/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace coverspec {

Bounds compute_bounds(unsigned r, const RatQ& epsilon, unsigned e_inf, unsigned n, const BigInt& d,
                      const std::optional<BigInt>& g) {
  if (r == 0) throw Error(ErrorCode::EmptyRamification, "bounds need at least one branch point");
  if (e_inf < 2) throw Error(ErrorCode::InvalidRamificationData, "e_inf must be at least 2");
  const RatQ rq(static_cast<std::int64_t>(r));
  const RatQ nq(static_cast<std::int64_t>(n));
  Bounds b;
  b.upper_rN = BigInt(r) * n;
  b.lower_b1_strict = (rq - epsilon - RatQ(2)) * nq + RatQ(2);
  b.lower_b1 = b.lower_b1_strict / (RatQ(1) - RatQ(1, e_inf));
  b.lower_b2 = (BigInt(r) - 4) * n + 4;
  if (g) {
    b.genus_upper = BigInt(n) * (*g + d - 1);
    b.genus_lower_exact = RatQ(*g) + RatQ(d, 4) * (nq - RatQ(1)) * (rq - RatQ(4));
    b.genus_lower = b.genus_lower_exact->ceil();
  }
  return b;
}

std::pair<std::size_t, unsigned> inertia_power_class(std::size_t c, unsigned alpha, const ClassTable& table) {
  if (alpha == 0) throw Error(ErrorCode::DomainError, "alpha must be positive");
  const unsigned e = table.at(c).order;
  const auto target = table.power(c, alpha);
  if (!target)
    throw Error(ErrorCode::InsufficientDeclaration,
                "power " + std::to_string(alpha) + " of " + table.at(c).name + " is not declared");
  return {*target, e / std::gcd(e, alpha)};
}

ClassTuple SpecializationReport::survivor_tuple(const TablePtr& table) const {
  std::vector<std::size_t> ids;
  for (const auto& br : per_branch)
    for (const auto& s : br.survivors) ids.insert(ids.end(), s.points.point_count, s.inertia_class);
  return ClassTuple(table, std::move(ids));
}

std::vector<std::pair<unsigned, std::size_t>> SpecializationReport::survivor_multiset() const {
  std::vector<std::pair<unsigned, std::size_t>> out;
  for (const auto& br : per_branch)
    for (const auto& s : br.survivors) out.insert(out.end(), s.points.point_count, {s.inertia_order, s.inertia_class});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

const std::vector<P1Q>& require_points(const RamificationData& data) {
  if (!data.branch_points) throw Error(ErrorCode::DomainError, "specialization needs rational branch points");
  std::set<std::string> seen;
  for (const auto& p : *data.branch_points)
    if (!seen.insert(p.to_string()).second) throw Error(ErrorCode::DuplicateBranchPoints, p.to_string());
  return *data.branch_points;
}

BranchSpecialization classify_fiber(const P1Q& t, std::size_t class_id, const ClassTable& table, FiberProfile profile) {
  BranchSpecialization br;
  br.branch_point = t;
  br.class_id = class_id;
  br.e = table.at(class_id).order;
  for (const auto& part : profile.parts) {
    const unsigned m = part.multiplicity;
    if (m % br.e == 0) {
      br.s += part.point_count;
      continue;
    }
    if (m == 1) br.p += part.point_count;
    else br.q += part.point_count;
    const auto [cls, order] = inertia_power_class(class_id, m, table);
    br.survivors.push_back(Survivor{part, m, order, cls});
  }
  br.profile = std::move(profile);
  return br;
}

void finish_report(SpecializationReport& report, const RamificationData& data) {
  const unsigned n = report.n;
  report.identity_1_ok = true;
  unsigned excess = 0;
  for (const auto& br : report.per_branch) {
    report.r_t0 += br.p + br.q;
    if (br.profile.total_multiplicity() != n) report.identity_1_ok = false;
    for (const auto& part : br.profile.parts) excess += (part.multiplicity - 1) * part.point_count;
  }
  report.inequality_2_ok = excess + 2 <= 2 * n;
  RatQ epsilon(0);
  unsigned e_inf = 0;
  for (auto e : data.e()) {
    epsilon += RatQ(1, e);
    e_inf = std::max(e_inf, e);
  }
  try {
    report.source_genus = rh_invariants(data).genus;
  } catch (const Error&) {
    report.source_genus.reset();
  }
  if (data.r() > 0) report.bounds = compute_bounds(static_cast<unsigned>(data.r()), epsilon, e_inf, n, data.d(), report.source_genus);
}

}  // namespace

SpecializationReport specialize_cover(const RamificationData& data, const RatFunc& t0) {
  if (t0.is_constant()) throw Error(ErrorCode::ConstantFunction, "T0 is constant");
  const auto& points = require_points(data);
  SpecializationReport report;
  report.n = t0.degree();
  for (std::size_t i = 0; i < points.size(); ++i)
    report.per_branch.push_back(classify_fiber(points[i], data.classes.ids[i], data.table(), fiber_profile(t0, points[i])));
  finish_report(report, data);
  return report;
}

SpecializationReport specialize_cover_normalized(const RamificationData& data, const RatFunc& t0) {
  if (t0.is_constant()) throw Error(ErrorCode::ConstantFunction, "T0 is constant");
  const auto& points = require_points(data);
  auto is_branch = [&points](const P1Q& x) { return std::find(points.begin(), points.end(), x) != points.end(); };
  auto candidates = [](std::size_t k) {
    const auto half = static_cast<std::int64_t>((k + 1) / 2);
    return RatQ(k % 2 == 1 ? half : -half);
  };
  std::size_t k = 0;
  while (is_branch(P1Q(candidates(k)))) ++k;
  const RatQ theta = candidates(k);
  // m(T) = 1 / (T - theta) sends theta to infinity.
  const RatFunc m = RatFunc::mobius(RatQ(0), RatQ(1), RatQ(1), -theta);
  k = 0;
  while (is_branch(t0(P1Q(candidates(k))))) ++k;
  const RatQ c = candidates(k);
  // m'(U) = (cU + 1) / U sends infinity to c.
  const RatFunc m_prime = RatFunc::mobius(c, RatQ(1), RatQ(1), RatQ(0));
  const RatFunc moved = m.compose(t0).compose(m_prime);
  const unsigned n = moved.degree();

  SpecializationReport report;
  report.n = n;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const RatQ t = m(points[i]).value();
    const PolyQ fiber_poly = moved.numerator() - moved.denominator().scaled(t);
    if (fiber_poly.degree() != static_cast<int>(n))
      throw Error(ErrorCode::DomainError, "normalization left infinity in a branch fiber");
    FiberProfile profile;
    for (auto& sf : squarefree_decomposition(fiber_poly)) {
      FiberPart part;
      part.multiplicity = sf.multiplicity;
      part.point_count = static_cast<unsigned>(sf.factor.degree());
      part.factor = std::move(sf.factor);
      profile.parts.push_back(std::move(part));
    }
    report.per_branch.push_back(classify_fiber(points[i], data.classes.ids[i], data.table(), std::move(profile)));
  }
  finish_report(report, data);
  return report;
}

BigInt specialized_genus(const SpecializationReport& report, const RamificationData& data, bool assume_no_group_drop) {
  if (!assume_no_group_drop)
    throw Error(ErrorCode::GroupDropNotSupported, "specialized genus requires assuming the group does not drop");
  const BigInt& d = data.d();
  // 2 g_T0 - 2 = -2d + sum over survivors of (d - d / o).
  BigInt total = -2 * d;
  for (const auto& br : report.per_branch)
    for (const auto& s : br.survivors) total += BigInt(s.points.point_count) * (d - d / s.inertia_order);
  if (total % 2 != 0) throw Error(ErrorCode::NonIntegralGenus, "2g - 2 = " + total.str());
  const BigInt g = total / 2 + 1;
  if (g < 0) throw Error(ErrorCode::NegativeGenus, "specialized genus " + g.str());
  return g;
}

std::vector<QuadPoint> survivor_points(const SpecializationReport& report, std::int64_t fallback_d) {
  std::vector<QuadPoint> out;
  std::optional<BigInt> field;
  for (const auto& br : report.per_branch) {
    for (const auto& s : br.survivors) {
      if (s.points.at_infinity) {
        out.emplace_back(std::nullopt);
        continue;
      }
      for (const auto& root : roots_degree_le2(s.points.factor, fallback_d)) {
        if (!root.is_rational()) {
          if (field && *field != root.d())
            throw Error(ErrorCode::DomainError, "survivor points lie in different quadratic fields");
          field = root.d();
        }
        out.emplace_back(root);
      }
    }
  }
  return out;
}

}  // namespace coverspec
