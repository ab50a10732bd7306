#pragma once

#include "coverspec/group.hpp"
#include "coverspec/rational.hpp"
#include "coverspec/tri.hpp"

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coverspec {

enum class TableSource { Computed, Declared };

struct ClassEntry {
  std::string name;
  unsigned order = 1;
  std::optional<BigInt> size;
  /// Sorted class ids of C^Z (identity and the class itself included).
  std::vector<std::size_t> z_closure;
  /// False when a declared closure may be missing members.
  bool complete = true;
  /// Exponent (reduced mod order) to class id; full for computed tables.
  std::map<unsigned, std::size_t> power_map;
};

/// Conjugacy-class data of one group, computed from a FiniteGroup or declared from a data file.
class ClassTable {
public:
  static ClassTable from_group(const FiniteGroup& g);
  /// Throws InconsistentDeclaration naming the violated rule, ParseError on malformed input.
  static ClassTable from_declaration(const nlohmann::json& data);

  const std::string& group_name() const { return group_name_; }
  const BigInt& group_order() const { return group_order_; }
  TableSource source() const { return source_; }
  const std::string& citation() const { return citation_; }
  /// Orders m for which the table lists every class of order divisible by m.
  const std::vector<unsigned>& multiples_complete() const { return multiples_complete_; }

  std::size_t size() const { return classes_.size(); }
  const std::vector<ClassEntry>& classes() const { return classes_; }
  const ClassEntry& at(std::size_t id) const { return classes_.at(id); }
  std::size_t identity() const { return identity_; }
  /// Throws NoSuchClass. Sym/alt tables also accept partition names without trailing 1s.
  std::size_t id(std::string_view name) const;

  /// Whether member lies in C^Z for C = at(c); Unknown only for incomplete declared closures.
  Tri in_closure(std::size_t c, std::size_t member) const;
  /// Class of g^k for g in at(c), when known.
  std::optional<std::size_t> power(std::size_t c, long long k) const;
  /// True when every closure is complete.
  bool is_complete() const;

  nlohmann::json to_json() const;

private:
  ClassTable() = default;
  void validate() const;

  std::string group_name_;
  BigInt group_order_ = 1;
  TableSource source_ = TableSource::Computed;
  std::string citation_;
  std::vector<unsigned> multiples_complete_;
  std::vector<ClassEntry> classes_;
  std::size_t identity_ = 0;
  std::size_t degree_ = 0;
  bool cycle_names_ = false;
};

using TablePtr = std::shared_ptr<const ClassTable>;

/// Ordered tuple of nontrivial classes of one table.
struct ClassTuple {
  TablePtr table;
  std::vector<std::size_t> ids;

  /// Throws NoSuchClass, or DomainError for identity entries.
  static ClassTuple from_names(TablePtr table, const std::vector<std::string>& names);
  ClassTuple() = default;
  ClassTuple(TablePtr t, std::vector<std::size_t> class_ids);

  std::size_t size() const { return ids.size(); }
  std::vector<std::string> names() const;
  std::vector<unsigned> orders() const;
};

/// C # C': no class C0 has both in C0^Z.
Tri very_different(const ClassTable& table, std::size_t a, std::size_t b);

struct PrecResult {
  Tri holds = Tri::False;
  /// For each entry j of the right tuple, the index i of a left entry whose closure contains it.
  std::vector<std::optional<std::size_t>> witness;
};

/// Cf ≺ Cl: every entry of Cl lies in the Z-closure of some entry of Cf. Throws TableMismatch.
PrecResult tuple_prec(const ClassTuple& cf, const ClassTuple& cl);

/// Positional variant: a bijection j -> i with Cl_j in Cf_i^Z (tuples of equal length).
PrecResult matched_prec(const ClassTuple& cf, const ClassTuple& cl);

}  // namespace coverspec
