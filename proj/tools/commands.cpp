#include "commands.hpp"

#include "coverspec/error.hpp"
#include "coverspec/io.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

namespace coverspec::cli {

namespace {

std::string join(const std::vector<std::string>& items, const std::string& sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? sep : "") + items[i];
  return s;
}

int exit_for(Tri t) { return t == Tri::Unknown ? 2 : 0; }

std::string verdict_text(const Verdict& v) {
  std::ostringstream os;
  os << "method: " << to_string(v.method) << "\n";
  for (const auto& line : v.trace) os << "  " << line << "\n";
  os << "obstructed: " << to_string(v.obstructed) << "\n";
  return os.str();
}

}  // namespace

json load_json_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    try {
      return json::parse(arg);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::ParseError, std::string("inline JSON: ") + e.what());
    }
  }
  return io::read_json_file(arg);
}

Outcome group_info(const json& group, std::size_t rank_cap) {
  const FiniteGroup g = io::group_from_json(group);
  Outcome o;
  o.result = io::group_info_json(g, rank_cap);
  std::ostringstream os;
  os << g.label() << ": order " << g.order() << ", degree " << g.degree() << "\n";
  os << "classes:\n";
  for (const auto& c : g.classes())
    os << "  " << c.name << "  size " << c.size << "  order " << c.element_order << "  rep " << c.representative.to_string()
       << "\n";
  os << "nu = " << o.result["nu"] << ", rk = " << o.result["rk"] << "\n";
  o.text = os.str();
  return o;
}

Outcome criterion(const json& catalog) {
  const Verdict v = criterion_check(io::catalog_from_json(catalog));
  Outcome o;
  o.result = io::to_json(v);
  o.text = verdict_text(v);
  o.exit_code = exit_for(v.obstructed);
  return o;
}

Outcome nurk(const json& group, std::size_t rank_cap) {
  const Verdict v = nu_rk_test(io::group_from_json(group), rank_cap);
  Outcome o;
  o.result = io::to_json(v);
  o.text = verdict_text(v);
  o.exit_code = exit_for(v.obstructed);
  return o;
}

Outcome specialize(const json& cover, const json& t0, bool normalized) {
  const io::LoadedCover c = io::cover_from_json(cover);
  const RatFunc f = io::ratfunc_from_json(t0);
  const SpecializationReport report = normalized ? specialize_cover_normalized(c.data, f) : specialize_cover(c.data, f);
  Outcome o;
  o.result = io::to_json(report, c.data.table());
  o.result["T0"] = io::to_json(f);
  o.result["normalized"] = normalized;
  std::ostringstream os;
  os << "T0 = " << f.to_string() << ", N = " << report.n << "\n";
  for (const auto& br : report.per_branch) {
    os << "  t = " << br.branch_point.to_string() << "  class " << c.data.table().at(br.class_id).name << "  e = " << br.e
       << "  p = " << br.p << "  q = " << br.q << "  s = " << br.s << "\n";
    for (const auto& s : br.survivors) {
      os << "    survivor " << (s.points.at_infinity ? std::string("inf") : s.points.factor.to_string()) << " (" << s.points.point_count
         << " point" << (s.points.point_count == 1 ? "" : "s") << "), alpha " << s.alpha << ", inertia "
         << c.data.table().at(s.inertia_class).name << " of order " << s.inertia_order << "\n";
    }
  }
  os << "r_T0 = " << report.r_t0 << "\n";
  if (report.bounds) {
    const auto& b = *report.bounds;
    os << "bounds: b-1 " << b.lower_b1 << ", strict b-1 " << b.lower_b1_strict << ", b-2 " << b.lower_b2 << ", upper rN "
       << b.upper_rN << "\n";
  }
  os << "identity (1): " << (report.identity_1_ok ? "ok" : "FAILED") << ", inequality (2): "
     << (report.inequality_2_ok ? "ok" : "FAILED") << "\n";
  o.text = os.str();
  return o;
}

Outcome ret(const json& group, const std::vector<std::string>& classes, bool count, std::uint64_t cap) {
  const FiniteGroup g = io::group_from_json(group);
  const ClassTable table = ClassTable::from_group(g);
  std::vector<std::size_t> ids;
  for (const auto& n : classes) ids.push_back(table.id(n));
  const TupleSearchResult r = count ? nielsen_count(g, ids, cap) : find_tuple(g, ids, cap);
  Outcome o;
  std::vector<std::string> names;
  for (auto id : ids) names.push_back(table.at(id).name);
  o.result["group"] = g.label();
  o.result["classes"] = names;
  o.result["nodes"] = r.nodes;
  std::ostringstream os;
  os << g.label() << " (" << join(names) << ")\n";
  if (r.found) {
    std::vector<std::string> perms;
    for (const auto& p : *r.found) perms.push_back(p.to_string());
    o.result["found"] = perms;
    os << "tuple: " << join(perms, ", ") << "\n";
  } else {
    o.result["found"] = nullptr;
    os << "no generating product-one tuple\n";
  }
  if (r.nielsen_count) {
    o.result["nielsen_count"] = *r.nielsen_count;
    o.result["rigid"] = *r.nielsen_count == 1;
    os << "Nielsen count: " << *r.nielsen_count << (*r.nielsen_count == 1 ? " (rigid)" : "") << "\n";
  }
  o.text = os.str();
  return o;
}

Outcome genus(const json& cover) {
  const io::LoadedCover c = io::cover_from_json(cover);
  const RhInvariants rh = rh_invariants(c.data);
  const auto match = classify_genus_zero(c.data);
  Outcome o;
  o.result = io::to_json(rh);
  o.result["r"] = c.data.r();
  o.result["d"] = c.data.d().str();
  o.result["exceptional"] = match ? json(match->name()) : json(nullptr);
  std::ostringstream os;
  os << "d = " << c.data.d() << ", r = " << c.data.r() << ", eps = " << rh.epsilon << ", e_inf = " << rh.e_inf
     << ", genus = " << rh.genus << "\n";
  if (match) os << "genus-0 case: " << match->name() << "\n";
  o.text = os.str();
  return o;
}

Outcome compare(const json& a, const json& b, bool same_group) {
  const io::LoadedCover ca = io::cover_from_json(a);
  const io::LoadedCover cb = io::cover_from_json(b);
  const Tri prec = invariants_prec(ca.data, cb.data, same_group);
  const PrecResult w = tuple_prec(ca.data.classes, cb.data.classes);
  Outcome o;
  o.result["r_a"] = ca.data.r();
  o.result["r_b"] = cb.data.r();
  o.result["prec"] = std::string(to_string(prec));
  json witness = json::array();
  for (const auto& x : w.witness) witness.push_back(x ? json(*x) : json(nullptr));
  o.result["witness"] = witness;
  o.text = "A < B: " + std::string(to_string(prec)) + (prec == Tri::False ? " (A cannot specialize to B)\n" : "\n");
  o.exit_code = exit_for(prec);
  return o;
}

Outcome twist(const json& group, const json& u, const json& v) {
  auto g = std::make_shared<const FiniteGroup>(io::group_from_json(group));
  auto hom = [&g](const json& images) {
    if (!images.is_array()) throw Error(ErrorCode::ParseError, "homomorphism must be an array of permutations");
    HomSpec h{g, {}};
    for (const auto& p : images) h.images.push_back(g->index_of(io::perm_from_json(p, g->degree())));
    return h;
  };
  const HomSpec hu = hom(u);
  const HomSpec hv = hom(v);
  const TwistedAction action = twisted_action(hu, hv);
  const auto x0 = conjugacy_via_fixed_point(hu, hv);
  Outcome o;
  json maps = json::array();
  for (const auto& m : action.generator_maps) maps.push_back(m);
  o.result["group"] = g->label();
  o.result["generator_maps"] = maps;
  o.result["orbit_sizes"] = twisted_orbit_sizes(action);
  o.result["conjugate"] = x0.has_value();
  o.result["witness"] = x0 ? json(g->element(*x0).to_string()) : json(nullptr);
  o.text = x0 ? "u and v are conjugate: x0 = " + g->element(*x0).to_string() + "\n"
              : "no common fixed point: u and v are not conjugate\n";
  return o;
}

Outcome monster(const json& table) {
  const auto t = std::make_shared<const ClassTable>(ClassTable::from_declaration(table));
  const Verdict v = monster_refined(t);
  Outcome o;
  o.result = io::to_json(v);
  o.text = verdict_text(v);
  o.exit_code = exit_for(v.obstructed);
  return o;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"cover-spec: branched covers, specialization and non-parametricity checks"};
  app.require_subcommand(1);
  bool as_json = false;
  std::uint64_t seed = kDefaultSeed;
  std::size_t rank_cap = kDefaultRankCap;
  app.add_flag("--json", as_json, "print machine-readable JSON");
  app.add_option("--seed", seed, "seed for randomized runs")->capture_default_str();
  app.add_option("--rank-cap", rank_cap, "largest group order for the rank search")->capture_default_str();

  std::string group_arg, catalog_arg, cover_arg, t0_arg, classes_arg, a_arg, b_arg, u_arg, v_arg, table_arg, repro_name;
  bool normalized = false, count = false, same_group = false;
  std::uint64_t cap = kDefaultSearchCap;

  auto* c_info = app.add_subcommand("group-info", "classes, nu and rank of a group");
  c_info->add_option("--group", group_arg, "group spec (file or inline JSON)")->required();
  auto* c_crit = app.add_subcommand("criterion", "non-parametricity criterion on a catalog");
  c_crit->add_option("--catalog", catalog_arg, "catalog (file or inline JSON)")->required();
  auto* c_nurk = app.add_subcommand("nurk", "test nu(G) >= rk(G) + 2");
  c_nurk->add_option("--group", group_arg, "group spec")->required();
  auto* c_spec = app.add_subcommand("specialize", "specialize a cover along T0");
  c_spec->add_option("--cover", cover_arg, "cover with rational branch points")->required();
  c_spec->add_option("--t0", t0_arg, "rational function {\"a\": [...], \"b\": [...]}")->required();
  c_spec->add_flag("--normalized", normalized, "move infinity off the branch locus first");
  auto* c_ret = app.add_subcommand("ret", "generating product-one tuples in given classes");
  c_ret->add_option("--group", group_arg, "group spec")->required();
  c_ret->add_option("--classes", classes_arg, "JSON array of class names")->required();
  c_ret->add_flag("--count", count, "count tuples up to simultaneous conjugation");
  c_ret->add_option("--cap", cap, "search cap")->capture_default_str();
  auto* c_genus = app.add_subcommand("genus", "Riemann-Hurwitz genus and genus-0 case");
  c_genus->add_option("--cover", cover_arg, "cover")->required();
  auto* c_cmp = app.add_subcommand("compare", "necessary condition for A to specialize to B");
  c_cmp->add_option("--a", a_arg, "cover A")->required();
  c_cmp->add_option("--b", b_arg, "cover B")->required();
  c_cmp->add_flag("--same-group", same_group, "assert equal groups (needed when A has genus 0)");
  auto* c_twist = app.add_subcommand("twist", "twisted action and conjugacy witness");
  c_twist->add_option("--group", group_arg, "group spec")->required();
  c_twist->add_option("--u", u_arg, "JSON array of generator images")->required();
  c_twist->add_option("--v", v_arg, "JSON array of generator images")->required();
  auto* c_monster = app.add_subcommand("monster", "refined argument on a declared class table");
  c_monster->add_option("--table", table_arg, "declared table")->required();
  auto* c_repro = app.add_subcommand("repro", "replay a worked example");
  c_repro->add_option("name", repro_name, "example name")->required()->check(CLI::IsMember(repro_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Outcome o;
  try {
    if (command == "group-info") o = group_info(load_json_arg(group_arg), rank_cap);
    else if (command == "criterion") o = criterion(load_json_arg(catalog_arg));
    else if (command == "nurk") o = nurk(load_json_arg(group_arg), rank_cap);
    else if (command == "specialize") o = specialize(load_json_arg(cover_arg), load_json_arg(t0_arg), normalized);
    else if (command == "ret") o = ret(load_json_arg(group_arg), load_json_arg(classes_arg).get<std::vector<std::string>>(), count, cap);
    else if (command == "genus") o = genus(load_json_arg(cover_arg));
    else if (command == "compare") o = compare(load_json_arg(a_arg), load_json_arg(b_arg), same_group);
    else if (command == "twist") o = twist(load_json_arg(group_arg), load_json_arg(u_arg), load_json_arg(v_arg));
    else if (command == "monster") o = monster(load_json_arg(table_arg));
    else o = repro(repro_name);
  } catch (const Error& e) {
    if (as_json) out << json{{"command", command}, {"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return 1;
  }
  if (as_json) out << json{{"command", command}, {"seed", seed}, {"result", o.result}}.dump(2) << "\n";
  else out << o.text;
  return o.exit_code;
}

}  // namespace coverspec::cli
