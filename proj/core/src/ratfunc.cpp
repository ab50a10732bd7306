#include "coverspec/ratfunc.hpp"

#include "coverspec/error.hpp"

#include <algorithm>
#include <map>

namespace coverspec {

P1Q P1Q::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "oo" || text == "\xE2\x88\x9E") return infinity();
  return P1Q(RatQ::parse(text));
}

const RatQ& P1Q::value() const {
  if (!value_) throw Error(ErrorCode::DomainError, "value() of the point at infinity");
  return *value_;
}

std::string P1Q::to_string() const { return value_ ? value_->to_string() : "inf"; }

bool operator<(const P1Q& a, const P1Q& b) {
  if (a.is_infinity()) return false;
  if (b.is_infinity()) return true;
  return a.value() < b.value();
}

RatFunc::RatFunc(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroDenominator, "rational function with zero denominator");
  if (a.is_zero()) {
    a_ = PolyQ{};
    b_ = PolyQ::constant(1);
    degree_ = 0;
    return;
  }
  const PolyQ g = gcd(a, b);
  PolyQ na = divmod(a, g).first;
  PolyQ nb = divmod(b, g).first;
  const RatQ lc_inv = nb.leading().inverse();
  a_ = na.scaled(lc_inv);
  b_ = nb.scaled(lc_inv);
  degree_ = static_cast<unsigned>(std::max(a_.degree(), b_.degree()));
}

RatFunc RatFunc::mobius(const RatQ& alpha, const RatQ& beta, const RatQ& gamma, const RatQ& delta) {
  if ((alpha * delta - beta * gamma).is_zero())
    throw Error(ErrorCode::DomainError, "singular Möbius transformation");
  return RatFunc(PolyQ({beta, alpha}), PolyQ({delta, gamma}));
}

P1Q RatFunc::operator()(const P1Q& u) const {
  if (u.is_infinity()) {
    if (a_.degree() > b_.degree()) return P1Q::infinity();
    if (a_.degree() < b_.degree()) return P1Q(RatQ(0));
    return P1Q(a_.leading() / b_.leading());
  }
  const RatQ den = b_(u.value());
  if (den.is_zero()) return P1Q::infinity();
  return P1Q(a_(u.value()) / den);
}

RatFunc RatFunc::compose(const RatFunc& inner) const {
  const PolyQ& c = inner.numerator();
  const PolyQ& d = inner.denominator();
  // a(c/d) * d^N and b(c/d) * d^N with N = deg(this).
  auto homogenize = [&](const PolyQ& p) {
    PolyQ acc;
    for (int i = 0; i <= p.degree(); ++i) {
      if (p.coeff(i).is_zero()) continue;
      acc += (pow(c, static_cast<unsigned>(i)) * pow(d, degree_ - static_cast<unsigned>(i))).scaled(p.coeff(i));
    }
    return acc;
  };
  return RatFunc(homogenize(a_), homogenize(b_));
}

std::string RatFunc::to_string(char var) const {
  if (b_ == PolyQ::constant(1)) return a_.to_string(var);
  return "(" + a_.to_string(var) + ")/(" + b_.to_string(var) + ")";
}

RatFunc reduce_ratfunc(const PolyQ& a, const PolyQ& b) {
  RatFunc f(a, b);
  if (f.is_constant()) throw Error(ErrorCode::ConstantFunction, "rational function is constant");
  return f;
}

unsigned FiberProfile::total_multiplicity() const {
  unsigned total = 0;
  for (const auto& part : parts) total += part.multiplicity * part.point_count;
  return total;
}

std::vector<std::pair<unsigned, unsigned>> FiberProfile::multiplicity_counts() const {
  std::map<unsigned, unsigned> merged;
  for (const auto& part : parts) merged[part.multiplicity] += part.point_count;
  return {merged.begin(), merged.end()};
}

FiberProfile fiber_profile(const RatFunc& t0, const P1Q& t) {
  if (t0.is_constant()) throw Error(ErrorCode::ConstantFunction, "fiber of a constant function");
  const PolyQ poly = t.is_infinity() ? t0.denominator()
                                     : t0.numerator() - t0.denominator().scaled(t.value());
  FiberProfile profile;
  for (auto& sf : squarefree_decomposition(poly)) {
    FiberPart part;
    part.multiplicity = sf.multiplicity;
    part.point_count = static_cast<unsigned>(sf.factor.degree());
    part.factor = std::move(sf.factor);
    profile.parts.push_back(std::move(part));
  }
  const int deficit = static_cast<int>(t0.degree()) - std::max(poly.degree(), 0);
  if (deficit > 0) {
    FiberPart inf;
    inf.multiplicity = static_cast<unsigned>(deficit);
    inf.at_infinity = true;
    inf.point_count = 1;
    profile.parts.push_back(std::move(inf));
  }
  return profile;
}

unsigned infinity_multiplicity(const RatFunc& t0) {
  const FiberProfile profile = fiber_profile(t0, t0(P1Q::infinity()));
  for (const auto& part : profile.parts)
    if (part.at_infinity) return part.multiplicity;
  throw Error(ErrorCode::DomainError, "infinity missing from its own fiber");
}

unsigned global_ramification_weight(const RatFunc& t0) {
  if (t0.is_constant()) throw Error(ErrorCode::ConstantFunction, "ramification of a constant function");
  const PolyQ& a = t0.numerator();
  const PolyQ& b = t0.denominator();
  // At a finite point u the order of vanishing of a'b - ab' is e_u - 1, poles included.
  const PolyQ wronskian = a.derivative() * b - a * b.derivative();
  return static_cast<unsigned>(wronskian.degree()) + infinity_multiplicity(t0) - 1;
}

}  // namespace coverspec
