#include "coverspec/twistcore.hpp"

#include "coverspec/error.hpp"

namespace coverspec {

TwistedAction twisted_action(const HomSpec& u, const HomSpec& v) {
  if (!u.target || !v.target) throw Error(ErrorCode::TargetMismatch, "homomorphism without a target group");
  if (u.target != v.target && u.target->elements() != v.target->elements())
    throw Error(ErrorCode::TargetMismatch, "homomorphisms into different groups");
  if (u.rank() != v.rank())
    throw Error(ErrorCode::RankMismatch, "source ranks " + std::to_string(u.rank()) + " and " + std::to_string(v.rank()));
  const FiniteGroup& g = *u.target;
  for (auto x : u.images)
    if (x >= g.order()) throw Error(ErrorCode::DomainError, "image index out of range");
  for (auto x : v.images)
    if (x >= g.order()) throw Error(ErrorCode::DomainError, "image index out of range");
  TwistedAction action;
  action.rank = u.rank();
  for (std::size_t k = 0; k < u.rank(); ++k) {
    const std::size_t left = u.images[k];
    const std::size_t right = g.inverse(v.images[k]);
    std::vector<std::size_t> map(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) map[x] = g.multiply(g.multiply(left, x), right);
    action.generator_maps.push_back(std::move(map));
  }
  return action;
}

std::optional<std::size_t> conjugacy_via_fixed_point(const HomSpec& u, const HomSpec& v) {
  const TwistedAction action = twisted_action(u, v);
  const std::size_t n = u.target->order();
  for (std::size_t x = 0; x < n; ++x) {
    bool fixed = true;
    for (const auto& map : action.generator_maps)
      if (map[x] != x) {
        fixed = false;
        break;
      }
    if (fixed) return x;
  }
  return std::nullopt;
}

std::vector<std::size_t> twisted_orbit_sizes(const TwistedAction& action) {
  if (action.generator_maps.empty()) return {};
  const std::size_t n = action.generator_maps.front().size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> orbit_id(n, kUnset);
  std::vector<std::size_t> sizes;
  for (std::size_t start = 0; start < n; ++start) {
    if (orbit_id[start] != kUnset) continue;
    std::vector<std::size_t> orbit{start};
    orbit_id[start] = sizes.size();
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (const auto& map : action.generator_maps) {
        const std::size_t y = map[orbit[head]];
        if (orbit_id[y] == kUnset) {
          orbit_id[y] = sizes.size();
          orbit.push_back(y);
        }
      }
    sizes.push_back(orbit.size());
  }
  std::vector<std::size_t> out(n);
  for (std::size_t x = 0; x < n; ++x) out[x] = sizes[orbit_id[x]];
  return out;
}

}  // namespace coverspec
