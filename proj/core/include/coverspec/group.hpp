#pragma once

#include "coverspec/perm.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace coverspec {

enum class GroupFamily { Generic, Symmetric, Alternating, CyclicProduct, Dihedral, Quaternion, PSL2 };

/// Which constructor produced a group; drives class naming.
struct GroupKind {
  GroupFamily family = GroupFamily::Generic;
  std::vector<unsigned> params;

  std::string label() const;
  friend bool operator==(const GroupKind&, const GroupKind&) = default;
};

struct GroupClass {
  std::size_t id = 0;
  Perm representative;  // lexicographically least member
  std::size_t size = 0;
  unsigned element_order = 1;
  std::string name;
};

/// A permutation group stored fully enumerated. Immutable once generated.
class FiniteGroup {
public:
  static constexpr std::size_t kDefaultOrderCap = 1'000'000;

  /// Breadth-first closure of the generators; throws OrderCapExceeded past order_cap.
  static FiniteGroup generate(std::size_t degree, std::vector<Perm> generators,
                              std::size_t order_cap = kDefaultOrderCap, GroupKind kind = {});

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const GroupKind& kind() const { return kind_; }
  std::string label() const { return kind_.label(); }
  const std::vector<Perm>& generators() const { return generators_; }

  /// Index 0 is the identity.
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> find(const Perm& p) const;
  std::size_t index_of(const Perm& p) const;

  std::size_t multiply(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const { return inverse_[i]; }
  std::size_t power(std::size_t i, long long k) const;
  unsigned element_order(std::size_t i) const { return element_order_[i]; }

  /// Classes sorted by (element order, size, least member); the identity class is first.
  const std::vector<GroupClass>& classes() const { return classes_; }
  std::size_t class_of(std::size_t element) const { return class_of_[element]; }
  const std::vector<std::size_t>& class_members(std::size_t class_id) const { return members_[class_id]; }
  /// Throws NoSuchClass.
  std::size_t class_by_name(std::string_view name) const;

  bool is_abelian() const;

  /// Element indices of the subgroup generated by gens (sorted). When the closure grows past
  /// stop_above the search stops early and returns what it has.
  std::vector<std::size_t> subgroup(std::span<const std::size_t> gens,
                                    std::size_t stop_above = std::numeric_limits<std::size_t>::max()) const;
  bool generates(std::span<const std::size_t> gens) const;

  /// Row-major order x order table of products (i * j); intended for groups of order <= 4096.
  std::vector<std::uint32_t> multiplication_table() const;

private:
  FiniteGroup() = default;
  void build_classes();

  std::size_t degree_ = 0;
  GroupKind kind_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, std::size_t> index_;
  std::vector<std::size_t> inverse_;
  std::vector<unsigned> element_order_;
  std::vector<GroupClass> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<std::size_t>> members_;
};

const std::vector<GroupClass>& conjugacy_classes(const FiniteGroup& g);

struct MaximalCyclicClasses {
  std::size_t nu = 0;
  /// One generator class per conjugacy class of maximal cyclic subgroups.
  std::vector<GroupClass> representatives;
  /// For each element, the order of the largest cyclic subgroup containing it.
  std::vector<unsigned> largest_cyclic_overgroup;
};

MaximalCyclicClasses maximal_cyclic_classes(const FiniteGroup& g);

struct RankResult {
  unsigned rank = 0;
  std::vector<std::size_t> generators;  // a generating set of that size
};

inline constexpr std::size_t kDefaultRankCap = 10'000;

/// Throws RankSearchCapExceeded when the order exceeds cap.
RankResult rank(const FiniteGroup& g, std::size_t cap = kDefaultRankCap);

FiniteGroup sym(unsigned n);
FiniteGroup alt(unsigned n);
FiniteGroup cyclic_product(const std::vector<unsigned>& orders);
/// Dihedral group of order 2n (n >= 3 acts on the n-gon; n = 2 gives the Klein group on 4 points).
FiniteGroup dihedral(unsigned n);
/// Quaternion group of order 8 in its regular action.
FiniteGroup quaternion8();
/// PSL_2(F_p) acting on the p + 1 points of the projective line (infinity is point p).
FiniteGroup psl2(unsigned p);

/// Parses "[2^1,1^3]" (or "[2,1,1,1]") into parts, descending.
std::vector<unsigned> parse_partition(std::string_view text);
std::string partition_name(const std::vector<unsigned>& parts);

/// Class of S_n / A_n with the given cycle type. For split A_n types a tag 'A' or 'B' is required.
const GroupClass& cycle_type_class(const FiniteGroup& g, const std::vector<unsigned>& parts,
                                   std::optional<char> tag = std::nullopt);

/// G / [G, G] acting on the cosets of the derived subgroup.
FiniteGroup abelianization(const FiniteGroup& g);

}  // namespace coverspec
