#include "commands.hpp"
#include "embedded_data.hpp"
#include "oracles.hpp"
#include "property.hpp"

#include "coverspec/error.hpp"
#include "coverspec/io.hpp"
#include "coverspec/obstruction.hpp"
#include "coverspec/ret.hpp"
#include "coverspec/specialize.hpp"
#include "coverspec/twistcore.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace coverspec;

namespace {

struct Check {
  std::vector<std::string> problems;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

TablePtr table_of(const FiniteGroup& g) { return std::make_shared<const ClassTable>(ClassTable::from_group(g)); }

PolyQ P(std::initializer_list<std::int64_t> c) {
  std::vector<RatQ> v;
  for (auto x : c) v.emplace_back(x);
  return PolyQ(v);
}

RamificationData d10_data() {
  return RamificationData::make(ClassTuple::from_names(table_of(dihedral(5)), {"2A", "2A", "2A", "2A"}),
                                std::vector<P1Q>{P1Q(0), P1Q(1), P1Q(-1), P1Q(RatQ(1, 5))});
}

bool contains(const std::vector<QuadExt>& v, const QuadExt& x) { return std::find(v.begin(), v.end(), x) != v.end(); }

void crossratio_example(Check& c) {
  const auto data = d10_data();
  const RatFunc t0(P({0, 0, 1}), P({1, -2, 2}));
  const auto rep = specialize_cover(data, t0);
  c.expect(rep.r_t0 == 4, "r_T0 = " + std::to_string(rep.r_t0));
  std::vector<unsigned> s;
  for (const auto& br : rep.per_branch) {
    s.push_back(br.s);
    for (const auto& sv : br.survivors) c.expect(sv.inertia_order == 2, "survivor inertia order");
  }
  c.expect(s == std::vector<unsigned>{1, 1, 0, 0}, "s-counts");
  const auto pts = survivor_points(rep, -2);
  c.expect(pts.size() == 4, "four survivor points");
  if (pts.size() != 4) return;
  const auto orbit = cross_ratio_orbit(pts[0], pts[1], pts[2], pts[3]);
  const auto src = cross_ratio_orbit(to_quad_point(P1Q(0), -2), to_quad_point(P1Q(1), -2), to_quad_point(P1Q(-1), -2),
                                     to_quad_point(P1Q(RatQ(1, 5)), -2));
  c.expect(contains(orbit, QuadExt(-2, RatQ(16, 9), RatQ(4, 9))), "(16+4sqrt(-2))/9 in specialized orbit");
  c.expect(contains(src, QuadExt(-2, RatQ(-2))), "-2 in source orbit");
  const bool disjoint = std::none_of(orbit.begin(), orbit.end(), [&](const QuadExt& x) { return contains(src, x); });
  c.expect(disjoint, "orbits disjoint");
  const auto out = cli::repro("d2n-crossratio");
  c.expect(out.text.find("non-isomorphic") != std::string::npos, "CLI verdict non-isomorphic");
}

void klein_example(Check& c) {
  const auto data = RamificationData::make(ClassTuple::from_names(table_of(cyclic_product({2, 2})), {"2A", "2B", "2C"}),
                                           std::vector<P1Q>{P1Q(0), P1Q(1), P1Q::infinity()});
  const auto rep = specialize_cover(data, RatFunc(P({0, 0, 1})));
  c.expect(rep.r_t0 == 2, "r_T0 = " + std::to_string(rep.r_t0));
  std::set<std::string> pts;
  for (const auto& p : survivor_points(rep)) pts.insert(p ? p->to_string() : "inf");
  c.expect(pts == std::set<std::string>{"1", "-1"}, "surviving points {1, -1}");
}

void exceptional_list(Check& c) {
  const auto out = cli::repro("exceptional-list");
  c.expect(out.exit_code == 0, "repro exceptional-list exit code");
  const std::vector<std::string> expected_cases = {"Klein (Z/2)^2", "A4", "S4", "A5", "D6", "D8", "D10"};
  c.expect(out.result.size() == expected_cases.size(), "seven cases");
  for (std::size_t i = 0; i < out.result.size() && i < expected_cases.size(); ++i) {
    const auto& row = out.result[i];
    const std::string label = row.at("group").get<std::string>();
    c.expect(row.at("genus") == "0", label + " genus 0");
    c.expect(row.at("case") == expected_cases[i], label + " case " + row.at("case").dump());
    c.expect(row.at("tuple_found") == true && row.at("stated_tuple_valid") == true, label + " tuple");
    c.expect(row.at("nielsen_count") == 1, label + " rigid");
  }
  // Independent rigidity count for the searched Klein case.
  const FiniteGroup k = cyclic_product({2, 2});
  std::vector<std::set<oracle::Images>> sets;
  for (const char* n : {"2A", "2B", "2C"}) {
    std::set<oracle::Images> s;
    for (auto i : k.class_members(k.class_by_name(n))) s.insert(k.element(i).images());
    sets.push_back(s);
  }
  c.expect(oracle::nielsen_orbits(oracle::elements_of(k), sets) == 1, "Klein oracle rigidity");
}

void nu_rk_table(Check& c) {
  struct Row {
    std::string label;
    FiniteGroup g;
    std::size_t nu;
    unsigned rk;
    bool obstructed;
  };
  std::vector<Row> rows;
  rows.push_back({"A4", alt(4), 2, 2, false});
  rows.push_back({"S4", sym(4), 3, 2, false});
  rows.push_back({"A5", alt(5), 3, 2, false});
  rows.push_back({"(Z/2)^2", cyclic_product({2, 2}), 3, 2, false});
  rows.push_back({"H8", quaternion8(), 3, 2, false});
  rows.push_back({"Z/3 x Z/3", cyclic_product({3, 3}), 4, 2, true});
  rows.push_back({"S6", sym(6), 5, 2, true});
  for (const auto& row : rows) {
    const auto elements = oracle::elements_of(row.g);
    const std::size_t nu = oracle::nu(elements);
    const unsigned rk = oracle::rank(elements);
    c.expect(nu == row.nu && rk == row.rk, row.label + " oracle (nu, rk) = (" + std::to_string(nu) + ", " +
                                               std::to_string(rk) + ")");
    const Verdict v = nu_rk_test(row.g);
    c.expect(v.witness.at("nu") == nu && v.witness.at("rk") == rk, row.label + " library (nu, rk)");
    c.expect((v.obstructed == Tri::True) == row.obstructed, row.label + " verdict");
  }
  std::vector<std::pair<std::string, FiniteGroup>> parametric;
  for (unsigned n = 2; n <= 8; ++n) parametric.emplace_back("Z/" + std::to_string(n), cyclic_product({n}));
  parametric.emplace_back("(Z/2)^2", cyclic_product({2, 2}));
  parametric.emplace_back("A4", alt(4));
  parametric.emplace_back("S4", sym(4));
  parametric.emplace_back("A5", alt(5));
  for (unsigned n = 3; n <= 8; ++n) parametric.emplace_back("D" + std::to_string(2 * n), dihedral(n));
  for (const auto& [label, g] : parametric)
    c.expect(nu_rk_test(g).obstructed == Tri::False, label + " must not be obstructed");
  const FiniteGroup s5 = sym(5);
  const std::size_t nu5 = oracle::nu(oracle::elements_of(s5));
  const Verdict v5 = nu_rk_test(s5);
  c.expect(v5.witness.at("nu") == nu5, "S5 nu agrees with oracle");
  c.notes.push_back("S5: nu = " + std::to_string(nu5) + ", rk = 2, nu/rk test " + std::string(to_string(v5.obstructed)) +
                    "; flagged: the claimed coverage of S_n for n >= 5 is not reached by nu >= rk + 2 at n = 5");
}

void psl2_19(Check& c) {
  const auto t = ClassTable::from_group(psl2(19));
  c.expect(t.group_order() == 3420, "order 3420");
  c.expect(very_different(t, t.id("2A"), t.id("3A")) == Tri::True, "2A # 3A");
  c.expect(very_different(t, t.id("19A"), t.id("19B")) == Tri::False, "19A, 19B not very different");
  for (unsigned p : {19u, 29u}) {
    const Verdict v = psl2_refined(p);
    c.expect(v.obstructed == Tri::True, "psl2_refined(" + std::to_string(p) + ") obstructed");
    c.expect(v.witness.at("dominating_tuples").empty() && v.witness.at("tuples_scanned").get<long>() > 0,
             "exhaustive witness for p = " + std::to_string(p));
  }
  try {
    psl2_refined(7);
    c.expect(false, "psl2_refined(7) must be rejected");
  } catch (const Error& e) {
    c.expect(e.code() == ErrorCode::ResidueConditionFails, "psl2_refined(7) error code");
  }
}

void monster_argument(Check& c) {
  const auto table = std::make_shared<const ClassTable>(ClassTable::from_declaration(nlohmann::json::parse(cli::kMonsterTable)));
  const Verdict v = monster_refined(table);
  c.expect(v.obstructed == Tri::True, "monster_refined obstructed");
  for (const auto& cand : v.witness.at("candidates")) c.expect(cand.at("eliminated") == true, "candidate eliminated");
  const RatQ eps = RatQ(1, 38) + RatQ(1, 29) + RatQ(1, 3);
  const RatQ expected = ((RatQ(1) - eps) * RatQ(2) + RatQ(2)) * RatQ(38, 37);
  const Bounds b = compute_bounds(3, eps, 38, 2, table->group_order(), std::nullopt);
  c.expect(b.lower_b1 == expected, "b-1 value " + b.lower_b1.to_string());
  c.expect(b.lower_b1 > RatQ(3), "b-1 > 3");
  bool reported = false;
  for (const auto& cand : v.witness.at("candidates")) {
    const auto& a = cand.at("anchored");
    if (a.size() == 2 && a[0] == "29A" && a[1] == "38A")
      reported = RatQ::parse(cand.at("b1_with_free_order_3").get<std::string>()) == expected;
  }
  c.expect(reported, "witness reports the (38A, 29A, order-3) bound");
  c.notes.push_back("b-1 for (38A, 29A, order 3) at N = 2: " + expected.to_string());
}

void property_suite(Check& c) {
  const auto r = oracle::specialization_properties(oracle::kPropertySeed, 200);
  c.expect(r.instances == 200, "200 instances");
  for (const auto& f : r.failures) c.expect(false, f);
}

std::size_t twist_brute_force(Check& c, const std::string& label, const FiniteGroup& grp) {
  const auto g = std::make_shared<const FiniteGroup>(grp);
  const std::size_t n = g->order();
  const auto elements = oracle::elements_of(*g);
  std::vector<oracle::Images> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = g->element(i).images();
  std::size_t pairs = 0;
  std::size_t mismatches = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      ++pairs;
      const bool conj1 = oracle::simultaneously_conjugate(elements, {img[a]}, {img[b]});
      if (conjugacy_via_fixed_point(HomSpec{g, {a}}, HomSpec{g, {b}}).has_value() != conj1) ++mismatches;
      for (std::size_t a2 = 0; a2 < n; ++a2) {
        for (std::size_t b2 = 0; b2 < n; ++b2) {
          ++pairs;
          const bool fixed = conjugacy_via_fixed_point(HomSpec{g, {a, a2}}, HomSpec{g, {b, b2}}).has_value();
          // First coordinates not conjugate: no simultaneous conjugator can exist.
          const bool conj = conj1 && oracle::simultaneously_conjugate(elements, {img[a], img[a2]}, {img[b], img[b2]});
          if (fixed != conj) ++mismatches;
        }
      }
    }
  }
  c.expect(mismatches == 0, label + ": " + std::to_string(mismatches) + " mismatches");
  return pairs;
}

void twisting_lemma(Check& c) {
  std::size_t pairs = 0;
  pairs += twist_brute_force(c, "S3", sym(3));
  pairs += twist_brute_force(c, "S4", sym(4));
  pairs += twist_brute_force(c, "D4", dihedral(4));
  pairs += twist_brute_force(c, "Q8", quaternion8());
  c.notes.push_back(std::to_string(pairs) + " HomSpec pairs checked");
}

void genus_bounds(Check& c) {
  const auto data = d10_data();
  const auto rep = specialize_cover(data, RatFunc(P({0, 0, 1}), P({1, -2, 2})));
  const BigInt g = specialized_genus(rep, data, true);
  c.expect(g == 1, "specialized genus " + g.str());
  c.expect(rep.source_genus && *rep.source_genus == 1, "source genus 1");
  c.expect(RatQ(g - *rep.source_genus) >= *rep.bounds->genus_lower_exact - RatQ(*rep.source_genus), "lower bound");
  c.expect(*rep.bounds->genus_lower_exact - RatQ(*rep.source_genus) == RatQ(0), "lower bound g_T0 - g >= 0");
  c.expect(rep.bounds->genus_upper && *rep.bounds->genus_upper == 20, "upper bound 20");
  const auto r = oracle::genus_bound_properties(oracle::kPropertySeed + 1, 100);
  for (const auto& f : r.failures) c.expect(false, f);
  c.notes.push_back(std::to_string(r.instances) + " random unramified instances");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "D10 cross-ratio example", 1, crossratio_example},
      {2, "Klein cover along U^2", 1, klein_example},
      {3, "exceptional genus-0 list", 60, exceptional_list},
      {4, "nu/rk table", 60, nu_rk_table},
      {5, "PSL2(F_19) refined argument", 120, psl2_19},
      {6, "Monster declared-table argument", 1, monster_argument},
      {7, "specialization property suite", 120, property_suite},
      {8, "twisting lemma brute force", 300, twisting_lemma},
      {9, "genus bounds", 60, genus_bounds},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.problems.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > cr.limit_seconds) c.problems.push_back("took " + std::to_string(secs) + " s");
    const bool ok = c.problems.empty();
    failed += ok ? 0 : 1;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (ok ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.title << " (" << secs << " s)";
    std::cout << line.str() << "\n";
    for (const auto& n : c.notes) std::cout << "    note: " << n << "\n";
    for (const auto& p : c.problems) std::cout << "    problem: " << p << "\n";
  }
  return failed == 0 ? 0 : 1;
}
