#include "commands.hpp"
#include "embedded_data.hpp"

#include "coverspec/error.hpp"
#include "coverspec/io.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace coverspec::cli {

namespace {

std::string tri_text(Tri t) { return std::string(to_string(t)); }

Outcome repro_klein_t2() {
  const json cover =
      json::parse(R"({"group":{"kind":"cyclic","orders":[2,2]},"classes":["2A","2B","2C"],"branch_points":["0","1","inf"]})");
  const json t0_json = json::parse(R"({"a":["0","0","1"]})");
  const io::LoadedCover c = io::cover_from_json(cover);
  Outcome o = specialize(cover, t0_json, false);
  const SpecializationReport report = specialize_cover(c.data, io::ratfunc_from_json(t0_json));
  std::vector<std::string> points;
  for (const auto& p : survivor_points(report)) points.push_back(p ? p->to_string() : "inf");
  std::sort(points.begin(), points.end());
  o.result["surviving_points"] = points;
  o.text += "surviving branch points: ";
  for (std::size_t i = 0; i < points.size(); ++i) o.text += (i ? ", " : "") + points[i];
  o.text += "\n";
  return o;
}

Outcome repro_d2n_crossratio() {
  const json cover =
      json::parse(R"({"group":{"kind":"dihedral","n":5},"classes":["2A","2A","2A","2A"],"branch_points":["0","1","-1","1/5"]})");
  const json t0_json = json::parse(R"({"a":["0","0","1"],"b":["1","-2","2"]})");
  const io::LoadedCover c = io::cover_from_json(cover);
  const RatFunc t0 = io::ratfunc_from_json(t0_json);
  Outcome o = specialize(cover, t0_json, false);
  const SpecializationReport report = specialize_cover(c.data, t0);

  std::vector<unsigned> s_counts;
  for (const auto& br : report.per_branch) s_counts.push_back(br.s);
  const std::vector<QuadPoint> survivors = survivor_points(report, -2);
  const std::vector<QuadPoint> source = {to_quad_point(P1Q(0), -2), to_quad_point(P1Q(1), -2), to_quad_point(P1Q(-1), -2),
                                         to_quad_point(P1Q(RatQ(1, 5)), -2)};
  if (survivors.size() != 4) throw Error(ErrorCode::DomainError, "expected four surviving branch points");
  const auto orbit_t0 = cross_ratio_orbit(survivors[0], survivors[1], survivors[2], survivors[3]);
  const auto orbit_src = cross_ratio_orbit(source[0], source[1], source[2], source[3]);
  const bool disjoint = std::none_of(orbit_t0.begin(), orbit_t0.end(), [&](const QuadExt& x) {
    return std::find(orbit_src.begin(), orbit_src.end(), x) != orbit_src.end();
  });
  const BigInt g = specialized_genus(report, c.data, true);

  auto texts = [](const std::vector<QuadExt>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.to_string());
    return out;
  };
  std::vector<std::string> points;
  for (const auto& p : survivors) points.push_back(p ? p->to_string() : "inf");
  o.result["s_counts"] = s_counts;
  o.result["surviving_points"] = points;
  o.result["orbit_specialized"] = texts(orbit_t0);
  o.result["orbit_source"] = texts(orbit_src);
  o.result["verdict"] = disjoint ? "non-isomorphic" : "undecided";
  o.result["specialized_genus"] = g.str();

  std::ostringstream os;
  os << "surviving points:";
  for (const auto& p : points) os << " " << p;
  os << "\ncross-ratio orbit of the specialized branch points:\n";
  for (const auto& x : orbit_t0) os << "  " << x.to_string() << "\n";
  os << "cross-ratio orbit of (0, 1, -1, 1/5):\n";
  for (const auto& x : orbit_src) os << "  " << x.to_string() << "\n";
  os << "verdict: " << (disjoint ? "non-isomorphic" : "undecided") << "\n";
  os << "genus of the specialized cover: " << g << "\n";
  o.text += os.str();
  return o;
}

Outcome repro_psl2_19() {
  const auto g = std::make_shared<const FiniteGroup>(psl2(19));
  const ClassTable table = ClassTable::from_group(*g);
  const Tri vd_2a_3a = very_different(table, table.id("2A"), table.id("3A"));
  const Tri vd_19 = very_different(table, table.id("19A"), table.id("19B"));
  const Verdict v = psl2_refined(19);
  Outcome o;
  o.result = io::to_json(v);
  o.result["very_different_2A_3A"] = tri_text(vd_2a_3a);
  o.result["very_different_19A_19B"] = tri_text(vd_19);
  std::ostringstream os;
  os << "PSL2(19): order " << g->order() << ", " << table.size() << " classes\n";
  os << "2A # 3A: " << tri_text(vd_2a_3a) << ", 19A # 19B: " << tri_text(vd_19) << "\n";
  for (const auto& line : v.trace) os << "  " << line << "\n";
  os << "obstructed: " << tri_text(v.obstructed) << "\n";
  o.text = os.str();
  o.exit_code = v.obstructed == Tri::Unknown ? 2 : 0;
  return o;
}

Outcome repro_rigid_s4() {
  const json group = json::parse(R"({"kind":"sym","n":4})");
  return ret(group, {"[2^1,1^2]", "[3^1,1^1]", "[4^1]"}, true, kDefaultSearchCap);
}

struct ExceptionalCaseSpec {
  std::string label;
  FiniteGroup group;
  std::vector<Perm> tuple;  // empty when the tuple is searched for
  std::vector<std::size_t> classes;
};

Perm cycles(std::size_t degree, const std::vector<std::vector<Perm::Point>>& c) { return Perm::from_cycles(degree, c); }

std::vector<std::size_t> classes_of(const FiniteGroup& g, const std::vector<Perm>& tuple) {
  std::vector<std::size_t> out;
  for (const auto& p : tuple) out.push_back(g.class_of(g.index_of(p)));
  return out;
}

Outcome repro_exceptional_list() {
  std::vector<ExceptionalCaseSpec> cases;
  {
    FiniteGroup k = cyclic_product({2, 2});
    std::vector<std::size_t> ids = {k.class_by_name("2A"), k.class_by_name("2B"), k.class_by_name("2C")};
    cases.push_back({"(Z/2)^2", std::move(k), {}, ids});
  }
  {
    FiniteGroup g = alt(4);
    std::vector<Perm> t = {cycles(4, {{0, 1}, {2, 3}}), cycles(4, {{0, 1, 2}}), cycles(4, {{1, 2, 3}})};
    auto ids = classes_of(g, t);
    cases.push_back({"A4", std::move(g), t, ids});
  }
  {
    FiniteGroup g = sym(4);
    std::vector<Perm> t = {cycles(4, {{0, 1}}), cycles(4, {{1, 2, 3}}), cycles(4, {{3, 2, 1, 0}})};
    auto ids = classes_of(g, t);
    cases.push_back({"S4", std::move(g), t, ids});
  }
  {
    FiniteGroup g = alt(5);
    std::vector<Perm> t = {cycles(5, {{0, 4}, {2, 3}}), cycles(5, {{0, 1, 3}}), cycles(5, {{4, 3, 2, 1, 0}})};
    auto ids = classes_of(g, t);
    cases.push_back({"A5", std::move(g), t, ids});
  }
  for (unsigned n : {3u, 4u, 5u}) {
    FiniteGroup g = dihedral(n);
    std::vector<Perm::Point> rot(n), refl(n);
    for (unsigned x = 0; x < n; ++x) {
      rot[x] = (x + 1) % n;
      refl[x] = (n - x) % n;
    }
    const Perm r(rot), s(refl);
    std::vector<Perm> t = {s, s * r, r.inverse()};
    auto ids = classes_of(g, t);
    cases.push_back({"D" + std::to_string(2 * n), std::move(g), t, ids});
  }

  Outcome o;
  o.result = json::array();
  std::ostringstream os;
  bool all_ok = true;
  for (const auto& c : cases) {
    std::vector<unsigned> e;
    for (auto id : c.classes) e.push_back(c.group.classes()[id].element_order);
    const RhInvariants rh = rh_invariants(BigInt(c.group.order()), e);
    const auto match = classify_genus_zero(BigInt(c.group.order()), e);
    const TupleSearchResult found = find_tuple(c.group, c.classes);
    const TupleSearchResult count = nielsen_count(c.group, c.classes);
    const bool stated_ok = c.tuple.empty() || is_generating_product_one(c.group, c.classes, c.tuple);
    const bool ok = rh.genus == 0 && match && found.found && count.nielsen_count == 1u && stated_ok;
    all_ok = all_ok && ok;
    std::vector<std::string> names;
    for (auto id : c.classes) names.push_back(c.group.classes()[id].name);
    o.result.push_back({{"group", c.label},
                        {"e", e},
                        {"classes", names},
                        {"genus", rh.genus.str()},
                        {"case", match ? json(match->name()) : json(nullptr)},
                        {"tuple_found", found.found.has_value()},
                        {"stated_tuple_valid", stated_ok},
                        {"nielsen_count", count.nielsen_count ? json(*count.nielsen_count) : json(nullptr)}});
    os << c.label << "  e = (";
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << ")  genus " << rh.genus << "  case " << (match ? match->name() : "-") << "  tuple "
       << (found.found ? "found" : "missing") << "  Nielsen count "
       << (count.nielsen_count ? std::to_string(*count.nielsen_count) : "-") << (ok ? "  rigid" : "  FAILED") << "\n";
  }
  o.text = os.str();
  o.exit_code = all_ok ? 0 : 1;
  return o;
}

Outcome repro_sn_catalog() {
  Outcome o;
  std::ostringstream os;
  bool unknown = false;
  for (unsigned n = 5; n <= 8; ++n) {
    const std::string key = "S" + std::to_string(n);
    try {
      const Verdict v = sn_catalog_verdict(n);
      o.result[key] = io::to_json(v);
      os << key << ": obstructed " << tri_text(v.obstructed) << "\n";
      for (const auto& line : v.trace) os << "  " << line << "\n";
      unknown = unknown || v.obstructed == Tri::Unknown;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DomainError) throw;
      const Verdict v = nu_rk_test(sym(n));
      o.result[key] = io::to_json(v);
      o.result[key]["note"] = "no two-entry catalog of this shape; nu/rk test used";
      os << key << ": no catalog of this shape; nu/rk test gives obstructed " << tri_text(v.obstructed) << "\n";
      for (const auto& line : v.trace) os << "  " << line << "\n";
      unknown = unknown || v.obstructed == Tri::Unknown;
    }
  }
  o.text = os.str();
  o.exit_code = unknown ? 2 : 0;
  return o;
}

const std::map<std::string, std::function<Outcome()>>& registry() {
  static const std::map<std::string, std::function<Outcome()>> r = {
      {"klein-t2", repro_klein_t2},
      {"d2n-crossratio", repro_d2n_crossratio},
      {"psl2-19", repro_psl2_19},
      {"monster", [] { return monster(json::parse(kMonsterTable)); }},
      {"rigid-s4", repro_rigid_s4},
      {"exceptional-list", repro_exceptional_list},
      {"sn-catalog", repro_sn_catalog},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& repro_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, _] : registry()) out.push_back(k);
    return out;
  }();
  return names;
}

Outcome repro(const std::string& name) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw Error(ErrorCode::DomainError, "unknown example: " + name);
  return it->second();
}

}  // namespace coverspec::cli
