#include "coverspec/io.hpp"

#include "coverspec/error.hpp"

#include <cctype>
#include <fstream>
#include <map>

namespace coverspec::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

unsigned get_uint(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<long long>() < 0)
    bad(std::string("expected a non-negative integer \"") + key + "\"");
  return j.at(key).get<unsigned>();
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    bad(path.string() + ": " + e.what());
  }
}

RatQ rational_from_json(const json& j) {
  if (j.is_number_integer()) return RatQ(j.get<std::int64_t>());
  if (j.is_string()) return RatQ::parse(j.get<std::string>());
  bad("rational must be an integer or a \"num/den\" string, got " + j.dump());
}

json to_json(const RatQ& q) { return q.to_string(); }

P1Q point_from_json(const json& j) {
  if (j.is_string()) return P1Q::parse(j.get<std::string>());
  return P1Q(rational_from_json(j));
}

json to_json(const P1Q& p) { return p.to_string(); }

PolyQ poly_from_json(const json& j) {
  if (!j.is_array()) bad("polynomial must be an array of coefficients, lowest degree first");
  std::vector<RatQ> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return PolyQ(std::move(coeffs));
}

json to_json(const PolyQ& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.to_string());
  return out;
}

RatFunc ratfunc_from_json(const json& j) {
  if (!j.is_object() || !j.contains("a")) bad("rational function needs {\"a\": [...], \"b\": [...]}");
  const PolyQ a = poly_from_json(j.at("a"));
  const PolyQ b = j.contains("b") ? poly_from_json(j.at("b")) : PolyQ::constant(1);
  return reduce_ratfunc(a, b);
}

json to_json(const RatFunc& f) {
  return json{{"a", to_json(f.numerator())}, {"b", to_json(f.denominator())}, {"degree", f.degree()},
              {"text", f.to_string()}};
}

Perm perm_from_json(const json& j, std::size_t degree) {
  if (j.is_string()) {
    // "(0 1)(2 3)" cycle notation.
    std::vector<std::vector<Perm::Point>> cycles;
    std::vector<Perm::Point>* current = nullptr;
    std::string number;
    auto flush = [&]() {
      if (number.empty()) return;
      if (!current) bad("point outside parentheses in '" + j.get<std::string>() + "'");
      current->push_back(static_cast<Perm::Point>(std::stoul(number)));
      number.clear();
    };
    for (char ch : j.get<std::string>()) {
      if (ch == '(') {
        cycles.emplace_back();
        current = &cycles.back();
      } else if (ch == ')') {
        flush();
        current = nullptr;
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        number += ch;
      } else if (ch == ' ' || ch == ',') {
        flush();
      } else {
        bad(std::string("unexpected character '") + ch + "' in permutation");
      }
    }
    flush();
    return Perm::from_cycles(degree, cycles);
  }
  if (!j.is_array()) bad("permutation must be an image array, a cycle list or a cycle string");
  if (j.empty()) return Perm::identity(degree);
  if (j.front().is_array()) {
    std::vector<std::vector<Perm::Point>> cycles;
    for (const auto& c : j) cycles.push_back(c.get<std::vector<Perm::Point>>());
    return Perm::from_cycles(degree, cycles);
  }
  auto images = j.get<std::vector<Perm::Point>>();
  if (images.size() != degree) bad("image array of length " + std::to_string(images.size()) + " for degree " + std::to_string(degree));
  return Perm(std::move(images));
}

json to_json(const Perm& p) { return p.to_string(); }

FiniteGroup group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) bad("group spec needs a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "sym") return sym(get_uint(j, "n"));
  if (kind == "alt") return alt(get_uint(j, "n"));
  if (kind == "psl2") return psl2(get_uint(j, "p"));
  if (kind == "dihedral") return dihedral(get_uint(j, "n"));
  if (kind == "quaternion") return quaternion8();
  if (kind == "cyclic") {
    if (j.contains("orders")) return cyclic_product(j.at("orders").get<std::vector<unsigned>>());
    return cyclic_product({get_uint(j, "n")});
  }
  if (kind == "perm") {
    const unsigned degree = get_uint(j, "degree");
    std::vector<Perm> gens;
    if (j.contains("generators"))
      for (const auto& g : j.at("generators")) gens.push_back(perm_from_json(g, degree));
    return FiniteGroup::generate(degree, std::move(gens));
  }
  bad("unknown group kind '" + kind + "'");
}

LoadedTable table_from_json(const json& j) {
  if (j.is_object() && j.contains("classes") && j.at("classes").is_array() && !j.at("classes").empty() &&
      j.at("classes").front().is_object())
    return {nullptr, std::make_shared<const ClassTable>(ClassTable::from_declaration(j))};
  auto g = std::make_shared<const FiniteGroup>(group_from_json(j));
  auto t = std::make_shared<const ClassTable>(ClassTable::from_group(*g));
  return {std::move(g), std::move(t)};
}

namespace {

std::vector<std::string> class_names(const json& j) {
  if (!j.is_array()) bad("\"classes\" must be an array of class names");
  return j.get<std::vector<std::string>>();
}

}  // namespace

LoadedCover cover_from_json(const json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("classes")) bad("cover needs \"group\" and \"classes\"");
  LoadedTable source = table_from_json(j.at("group"));
  ClassTuple tuple = ClassTuple::from_names(source.table, class_names(j.at("classes")));
  std::optional<std::vector<P1Q>> points;
  if (j.contains("branch_points")) {
    std::vector<P1Q> pts;
    for (const auto& p : j.at("branch_points")) pts.push_back(point_from_json(p));
    points = std::move(pts);
  }
  RamificationData data = RamificationData::make(std::move(tuple), std::move(points));
  return {std::move(source), std::move(data)};
}

std::vector<CatalogEntry> catalog_from_json(const json& j) {
  if (!j.is_array()) bad("catalog must be an array of entries");
  std::map<std::string, LoadedTable> tables;
  std::vector<CatalogEntry> out;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("group") || !e.contains("classes")) bad("catalog entry needs \"group\" and \"classes\"");
    const std::string key = e.at("group").dump();
    auto it = tables.find(key);
    if (it == tables.end()) it = tables.emplace(key, table_from_json(e.at("group"))).first;
    out.push_back(CatalogEntry{ClassTuple::from_names(it->second.table, class_names(e.at("classes"))),
                               e.value("source", std::string())});
  }
  if (out.empty()) throw Error(ErrorCode::EmptyCatalog, "catalog has no entries");
  return out;
}

json to_json(const FiberProfile& profile) {
  json parts = json::array();
  for (const auto& p : profile.parts) {
    json part{{"multiplicity", p.multiplicity}, {"points", p.point_count}};
    if (p.at_infinity) part["at_infinity"] = true;
    else part["factor"] = to_json(p.factor);
    parts.push_back(std::move(part));
  }
  return parts;
}

json to_json(const Bounds& b) {
  json out{{"upper_rN", b.upper_rN.str()},
           {"lower_b1", b.lower_b1.to_string()},
           {"lower_b1_strict", b.lower_b1_strict.to_string()},
           {"lower_b2", b.lower_b2.str()}};
  if (b.genus_upper) out["genus_upper"] = b.genus_upper->str();
  if (b.genus_lower_exact) out["genus_lower_exact"] = b.genus_lower_exact->to_string();
  if (b.genus_lower) out["genus_lower"] = b.genus_lower->str();
  return out;
}

json to_json(const SpecializationReport& report, const ClassTable& table) {
  json branches = json::array();
  for (const auto& br : report.per_branch) {
    json survivors = json::array();
    for (const auto& s : br.survivors) {
      json sv{{"alpha", s.alpha},
              {"inertia_order", s.inertia_order},
              {"inertia_class", table.at(s.inertia_class).name},
              {"points", s.points.point_count}};
      if (s.points.at_infinity) sv["at_infinity"] = true;
      else sv["factor"] = to_json(s.points.factor);
      survivors.push_back(std::move(sv));
    }
    branches.push_back(json{{"branch_point", to_json(br.branch_point)},
                            {"class", table.at(br.class_id).name},
                            {"e", br.e},
                            {"profile", to_json(br.profile)},
                            {"p", br.p},
                            {"q", br.q},
                            {"s", br.s},
                            {"survivors", survivors}});
  }
  json out{{"N", report.n},
           {"per_branch", branches},
           {"r_T0", report.r_t0},
           {"identity_1_ok", report.identity_1_ok},
           {"inequality_2_ok", report.inequality_2_ok}};
  if (report.source_genus) out["source_genus"] = report.source_genus->str();
  if (report.bounds) out["bounds"] = to_json(*report.bounds);
  return out;
}

json to_json(const Verdict& v) {
  json pairs = json::array();
  for (const auto& [a, b] : v.flagged_pairs) pairs.push_back(json::array({a, b}));
  return json{{"obstructed", std::string(to_string(v.obstructed))},
              {"method", std::string(to_string(v.method))},
              {"trace", v.trace},
              {"witness", v.witness},
              {"flagged_pairs", pairs}};
}

json to_json(const RhInvariants& rh) {
  return json{{"epsilon", rh.epsilon.to_string()}, {"e_inf", rh.e_inf}, {"genus", rh.genus.str()}};
}

json group_info_json(const FiniteGroup& g, std::size_t rank_cap) {
  json classes = json::array();
  for (const auto& c : g.classes())
    classes.push_back(json{{"name", c.name}, {"size", c.size}, {"order", c.element_order},
                           {"representative", c.representative.to_string()}});
  const MaximalCyclicClasses mc = maximal_cyclic_classes(g);
  json reps = json::array();
  for (const auto& c : mc.representatives) reps.push_back(c.name);
  json out{{"group", g.label()}, {"degree", g.degree()}, {"order", g.order()}, {"classes", classes}, {"nu", mc.nu},
           {"maximal_cyclic_representatives", reps}};
  const RankResult rk = rank(g, rank_cap);
  json gens = json::array();
  for (auto x : rk.generators) gens.push_back(g.element(x).to_string());
  out["rk"] = rk.rank;
  out["rank_generators"] = gens;
  return out;
}

}  // namespace coverspec::io
