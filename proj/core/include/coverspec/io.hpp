#pragma once

#include "coverspec/classtable.hpp"
#include "coverspec/covers.hpp"
#include "coverspec/obstruction.hpp"
#include "coverspec/ret.hpp"
#include "coverspec/specialize.hpp"
#include "coverspec/twistcore.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace coverspec::io {

using json = nlohmann::json;

/// Throws ParseError with the file name on unreadable or malformed input.
json read_json_file(const std::filesystem::path& path);

RatQ rational_from_json(const json& j);
json to_json(const RatQ& q);
P1Q point_from_json(const json& j);
json to_json(const P1Q& p);
PolyQ poly_from_json(const json& j);
json to_json(const PolyQ& p);
/// {"a": [...], "b": [...]}; "b" defaults to [1]. Throws ConstantFunction for constant input.
RatFunc ratfunc_from_json(const json& j);
json to_json(const RatFunc& f);

/// A permutation as image array [1,0,2] or as cycle list [[0,1],[2,3]]; [] is the identity.
Perm perm_from_json(const json& j, std::size_t degree);
json to_json(const Perm& p);

/// {"kind":"sym","n":6} | alt | psl2 {"p"} | cyclic {"orders":[...]} | dihedral {"n"} |
/// quaternion | perm {"degree", "generators":[[cycle,...],...]}.
FiniteGroup group_from_json(const json& j);

/// A class table: computed from a group spec, or declared when the object lists class records.
struct LoadedTable {
  GroupPtr group;  // null for declared tables
  TablePtr table;
};
LoadedTable table_from_json(const json& j);

/// {"group": {...}, "classes": [...], "branch_points": [...]}.
struct LoadedCover {
  LoadedTable source;
  RamificationData data;
};
LoadedCover cover_from_json(const json& j);

/// [{"group": {...}, "classes": [...], "source": "..."}, ...]; identical group specs share a table.
std::vector<CatalogEntry> catalog_from_json(const json& j);

json to_json(const FiberProfile& profile);
json to_json(const Bounds& b);
json to_json(const SpecializationReport& report, const ClassTable& table);
json to_json(const Verdict& v);
json to_json(const RhInvariants& rh);
json group_info_json(const FiniteGroup& g, std::size_t rank_cap = kDefaultRankCap);

}  // namespace coverspec::io
