#pragma once

#include "coverspec/classtable.hpp"
#include "coverspec/group.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace coverspec {

/// A realization taken from the literature: its inertia tuple and citation.
struct CatalogEntry {
  ClassTuple classes;
  std::string source;

  std::size_t r() const { return classes.size(); }
};

enum class Method { Criterion, NuRk, Psl2Refined, MonsterRefined };

std::string_view to_string(Method m) noexcept;

struct Verdict {
  Tri obstructed = Tri::Unknown;
  Method method = Method::Criterion;
  /// Human-readable steps of the argument.
  std::vector<std::string> trace;
  /// Structured, re-checkable data (clique, bounds, scanned candidates).
  nlohmann::json witness = nlohmann::json::object();
  /// Class pairs the argument needed to be very different but are not.
  std::vector<std::pair<std::string, std::string>> flagged_pairs;
};

/// Minimum r over the catalog. Throws EmptyCatalog.
std::size_t rho(const std::vector<CatalogEntry>& catalog);

struct CliqueResult {
  std::size_t nu = 0;
  std::vector<std::size_t> clique;    // class ids, ascending
  std::vector<std::size_t> vertices;  // all classes met in the catalog, ascending
};

/// Maximum set of pairwise very different classes among those in the catalog tuples.
/// Throws EmptyCatalog, TableMismatch, UndecidablePair.
CliqueResult nu_max_clique(const std::vector<CatalogEntry>& catalog);

/// Obstructed iff nu_R > rho_R.
Verdict criterion_check(const std::vector<CatalogEntry>& catalog);

/// Obstructed iff nu(G) >= rk(G) + 2.
Verdict nu_rk_test(const FiniteGroup& g, std::size_t rank_cap = kDefaultRankCap);

/// Catalog {(2A, pA, pB), (3A, pA, pB)} and the positional triple scan. Throws ResidueConditionFails.
Verdict psl2_refined(unsigned p);
std::vector<CatalogEntry> psl2_catalog(const TablePtr& table, unsigned p);

/// Elimination of every inertia triple dominating both catalog tuples of a declared table,
/// by closure data for N = 1 and by the b-1 bound for N >= 2. Defaults to the Monster triples
/// (2A, 3B, 29A) and (2A, 3C, 38A). Throws InsufficientDeclaration.
Verdict monster_refined(const TablePtr& table, const std::vector<std::string>& l1 = {"2A", "3B", "29A"},
                        const std::vector<std::string>& l2 = {"2A", "3C", "38A"});

/// Two-entry S_n catalog for 5 <= n <= 8: ([n], [n-1,1], [2,1^(n-2)]) with
/// ([n], [n-2,2], [2,1^(n-2)]) for odd n, or ([n], [n-m,m], [2,1^(n-2)]) with the least
/// m in [2, n-2] prime to n for even n. Throws DomainError when no such m exists (n = 6).
std::vector<CatalogEntry> sn_catalog(const TablePtr& sym_table, unsigned n);

/// Criterion on sn_catalog; a non-obstructed result is reported as Unknown with the failing pairs.
Verdict sn_catalog_verdict(unsigned n);

}  // namespace coverspec
