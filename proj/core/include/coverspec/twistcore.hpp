#pragma once

#include "coverspec/group.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace coverspec {

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Homomorphism from the free group on s generators to a finite group, by generator images.
struct HomSpec {
  GroupPtr target;
  std::vector<std::size_t> images;  // element indices in target

  std::size_t rank() const { return images.size(); }
};

/// Per source generator, the permutation x -> u(g) x v(g)^-1 of the elements of G.
struct TwistedAction {
  std::size_t rank = 0;
  std::vector<std::vector<std::size_t>> generator_maps;
};

/// Throws RankMismatch, TargetMismatch.
TwistedAction twisted_action(const HomSpec& u, const HomSpec& v);

/// Some x0 with u(g) = x0 v(g) x0^-1 for every generator g, found as a common fixed point.
std::optional<std::size_t> conjugacy_via_fixed_point(const HomSpec& u, const HomSpec& v);

/// Orbit sizes of the group generated by the twisted maps, one entry per element (orbit of x).
std::vector<std::size_t> twisted_orbit_sizes(const TwistedAction& action);

}  // namespace coverspec
