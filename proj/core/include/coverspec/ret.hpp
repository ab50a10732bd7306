#pragma once

#include "coverspec/group.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace coverspec {

inline constexpr std::uint64_t kDefaultSearchCap = 100'000'000;

struct TupleSearchResult {
  /// A generating tuple g_i in C_i with g_1 * ... * g_r = 1.
  std::optional<std::vector<Perm>> found;
  std::optional<std::size_t> nielsen_count;
  std::uint64_t nodes = 0;
};

/// Existence search with g_1 fixed to the representative of C_1. Throws SearchCapExceeded.
TupleSearchResult find_tuple(const FiniteGroup& g, const std::vector<std::size_t>& classes,
                             std::uint64_t cap = kDefaultSearchCap);

/// Number of generating product-one tuples in the classes, up to simultaneous conjugation.
/// Enumerates every tuple and unions conjugation orbits. Throws SearchCapExceeded.
TupleSearchResult nielsen_count(const FiniteGroup& g, const std::vector<std::size_t>& classes,
                                std::uint64_t cap = kDefaultSearchCap);

/// Independent check of the three defining conditions.
bool is_generating_product_one(const FiniteGroup& g, const std::vector<std::size_t>& classes,
                               const std::vector<Perm>& tuple);

}  // namespace coverspec
