#include "coverspec/obstruction.hpp"

#include "coverspec/error.hpp"
#include "coverspec/intmath.hpp"
#include "coverspec/specialize.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace coverspec {

using json = nlohmann::json;

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::Criterion: return "criterion";
    case Method::NuRk: return "nu_rk";
    case Method::Psl2Refined: return "psl2_refined";
    case Method::MonsterRefined: return "monster_refined";
  }
  return "criterion";
}

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string s = "(";
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
  return s + ")";
}

std::vector<std::string> names_of(const ClassTable& t, const std::vector<std::size_t>& ids) {
  std::vector<std::string> out;
  for (auto id : ids) out.push_back(t.at(id).name);
  return out;
}

const TablePtr& common_table(const std::vector<CatalogEntry>& catalog) {
  if (catalog.empty()) throw Error(ErrorCode::EmptyCatalog, "catalog has no entries");
  const TablePtr& t = catalog.front().classes.table;
  for (const auto& e : catalog) {
    if (e.classes.table == t) continue;
    // tuple_prec performs the structural comparison and throws on mismatch.
    tuple_prec(catalog.front().classes, e.classes);
  }
  return t;
}

void grow_clique(const std::vector<std::vector<char>>& adj, std::vector<std::size_t>& current,
                 const std::vector<std::size_t>& candidates, std::vector<std::size_t>& best) {
  if (current.size() > best.size()) best = current;
  if (current.size() + candidates.size() <= best.size()) return;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (current.size() + (candidates.size() - k) <= best.size()) return;
    const std::size_t v = candidates[k];
    std::vector<std::size_t> next;
    for (std::size_t j = k + 1; j < candidates.size(); ++j)
      if (adj[v][candidates[j]]) next.push_back(candidates[j]);
    current.push_back(v);
    grow_clique(adj, current, next, best);
    current.pop_back();
  }
}

}  // namespace

std::size_t rho(const std::vector<CatalogEntry>& catalog) {
  if (catalog.empty()) throw Error(ErrorCode::EmptyCatalog, "catalog has no entries");
  std::size_t best = catalog.front().r();
  for (const auto& e : catalog) best = std::min(best, e.r());
  return best;
}

CliqueResult nu_max_clique(const std::vector<CatalogEntry>& catalog) {
  const ClassTable& t = *common_table(catalog);
  std::set<std::size_t> seen;
  for (const auto& e : catalog) seen.insert(e.classes.ids.begin(), e.classes.ids.end());
  CliqueResult result;
  result.vertices.assign(seen.begin(), seen.end());
  const std::size_t n = result.vertices.size();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<std::string> undecided;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Tri vd = very_different(t, result.vertices[i], result.vertices[j]);
      if (vd == Tri::Unknown) undecided.push_back(t.at(result.vertices[i]).name + "/" + t.at(result.vertices[j]).name);
      adj[i][j] = adj[j][i] = vd == Tri::True;
    }
  if (!undecided.empty()) {
    std::string list;
    for (const auto& u : undecided) list += (list.empty() ? "" : ", ") + u;
    throw Error(ErrorCode::UndecidablePair, "very_different is undecided for " + list);
  }
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::size_t> current;
  std::vector<std::size_t> best;
  grow_clique(adj, current, all, best);
  for (auto i : best) result.clique.push_back(result.vertices[i]);
  result.nu = result.clique.size();
  return result;
}

Verdict criterion_check(const std::vector<CatalogEntry>& catalog) {
  Verdict v;
  v.method = Method::Criterion;
  const std::size_t r = rho(catalog);
  const CliqueResult clique = nu_max_clique(catalog);
  const ClassTable& t = *catalog.front().classes.table;
  std::size_t rho_entry = 0;
  for (std::size_t i = 0; i < catalog.size(); ++i)
    if (catalog[i].r() == r) {
      rho_entry = i;
      break;
    }
  for (std::size_t i = 0; i < clique.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < clique.vertices.size(); ++j)
      if (very_different(t, clique.vertices[i], clique.vertices[j]) != Tri::True)
        v.flagged_pairs.emplace_back(t.at(clique.vertices[i]).name, t.at(clique.vertices[j]).name);
  v.obstructed = to_tri(clique.nu > r);
  v.trace.push_back("rho_R = " + std::to_string(r) + " from entry " + join(catalog[rho_entry].classes.names()));
  v.trace.push_back("classes met: " + join(names_of(t, clique.vertices)));
  v.trace.push_back("largest pairwise very different set: " + join(names_of(t, clique.clique)) + ", nu_R = " +
                    std::to_string(clique.nu));
  for (const auto& [a, b] : v.flagged_pairs) v.trace.push_back("not very different: " + a + " and " + b);
  v.trace.push_back(clique.nu > r ? "nu_R > rho_R: obstructed" : "nu_R <= rho_R: criterion does not apply");
  v.witness = json{{"rho", r}, {"rho_entry", rho_entry}, {"nu", clique.nu}, {"clique", names_of(t, clique.clique)}};
  return v;
}

Verdict nu_rk_test(const FiniteGroup& g, std::size_t rank_cap) {
  Verdict v;
  v.method = Method::NuRk;
  const MaximalCyclicClasses mc = maximal_cyclic_classes(g);
  const RankResult rk = rank(g, rank_cap);
  std::vector<std::string> reps;
  for (const auto& c : mc.representatives) reps.push_back(c.name);
  std::vector<std::string> gens;
  for (auto x : rk.generators) gens.push_back(g.element(x).to_string());
  v.obstructed = to_tri(mc.nu >= rk.rank + 2);
  v.trace.push_back(g.label() + ": nu = " + std::to_string(mc.nu) + ", rk = " + std::to_string(rk.rank));
  v.trace.push_back("maximal cyclic subgroup generator classes: " + join(reps));
  v.trace.push_back(mc.nu >= rk.rank + 2 ? "nu >= rk + 2: obstructed" : "nu < rk + 2: not obstructed");
  v.witness = json{{"nu", mc.nu}, {"rk", rk.rank}, {"representatives", reps}, {"rank_generators", gens}};
  return v;
}

std::vector<CatalogEntry> psl2_catalog(const TablePtr& table, unsigned p) {
  const std::string pa = std::to_string(p) + "A";
  const std::string pb = std::to_string(p) + "B";
  const std::string source = "Serre, Topics in Galois Theory, 8.3.3";
  return {CatalogEntry{ClassTuple::from_names(table, {"2A", pa, pb}), source},
          CatalogEntry{ClassTuple::from_names(table, {"3A", pa, pb}), source}};
}

Verdict psl2_refined(unsigned p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  const int l2 = p == 2 ? 0 : legendre(2, p);
  const int l3 = p == 3 ? 0 : legendre(3, p);
  if (p < 5 || l2 != -1 || l3 != -1)
    throw Error(ErrorCode::ResidueConditionFails, "p = " + std::to_string(p) + ": (2/p) = " + std::to_string(l2) +
                                                      ", (3/p) = " + std::to_string(l3));
  Verdict v;
  v.method = Method::Psl2Refined;
  const FiniteGroup g = psl2(p);
  const auto table = std::make_shared<const ClassTable>(ClassTable::from_group(g));
  const auto catalog = psl2_catalog(table, p);
  const std::size_t c2 = table->id("2A");
  const std::size_t c3 = table->id("3A");
  const Tri vd23 = very_different(*table, c2, c3);
  const Tri vd_pp = very_different(*table, table->id(std::to_string(p) + "A"), table->id(std::to_string(p) + "B"));
  const std::size_t rho_r = rho(catalog);
  const CliqueResult clique = nu_max_clique(catalog);
  v.trace.push_back("(2/" + std::to_string(p) + ") = -1 and (3/" + std::to_string(p) + ") = -1");
  v.trace.push_back(std::string("2A # 3A: ") + std::string(to_string(vd23)) + "; " + std::to_string(p) + "A # " +
                    std::to_string(p) + "B: " + std::string(to_string(vd_pp)));
  v.trace.push_back("nu_R = " + std::to_string(clique.nu) + ", rho_R = " + std::to_string(rho_r) +
                    ", so r_F lies in [nu_R, rho_R]");
  std::size_t scanned = 0;
  std::size_t loose = 0;
  std::vector<std::string> loose_example;
  json survivors = json::array();
  std::vector<std::size_t> nontrivial;
  for (std::size_t c = 0; c < table->size(); ++c)
    if (c != table->identity()) nontrivial.push_back(c);
  for (std::size_t r = clique.nu; r <= rho_r; ++r) {
    // Nondecreasing r-tuples of nontrivial classes.
    std::vector<std::size_t> pos(r, 0);
    while (true) {
      std::vector<std::size_t> ids;
      for (auto k : pos) ids.push_back(nontrivial[k]);
      const ClassTuple cf(table, ids);
      ++scanned;
      const bool m1 = matched_prec(cf, catalog[0].classes).holds == Tri::True;
      const bool m2 = matched_prec(cf, catalog[1].classes).holds == Tri::True;
      if (m1 && m2) survivors.push_back(cf.names());
      if (tuple_prec(cf, catalog[0].classes).holds == Tri::True && tuple_prec(cf, catalog[1].classes).holds == Tri::True) {
        if (loose == 0) loose_example = cf.names();
        ++loose;
      }
      std::size_t k = r;
      while (k > 0 && pos[k - 1] == nontrivial.size() - 1) --k;
      if (k == 0) break;
      ++pos[k - 1];
      for (std::size_t j = k; j < r; ++j) pos[j] = pos[k - 1];
    }
  }
  v.trace.push_back("scanned " + std::to_string(scanned) + " class tuples C_F; positional powers matching both " +
                    join(catalog[0].classes.names()) + " and " + join(catalog[1].classes.names()) + ": " +
                    std::to_string(survivors.size()));
  if (loose > 0)
    v.trace.push_back("unordered closure dominance alone admits " + std::to_string(loose) + " tuples, e.g. " +
                      join(loose_example));
  v.obstructed = to_tri(survivors.empty() && vd23 == Tri::True);
  v.trace.push_back(survivors.empty() ? "no inertia tuple dominates both: obstructed" : "a dominating tuple exists");
  v.witness = json{{"p", p},
                   {"legendre_2", l2},
                   {"legendre_3", l3},
                   {"very_different_2A_3A", std::string(to_string(vd23))},
                   {"nu_R", clique.nu},
                   {"rho_R", rho_r},
                   {"tuples_scanned", scanned},
                   {"dominating_tuples", survivors},
                   {"unordered_dominating_count", loose}};
  return v;
}

namespace {

struct Candidate {
  std::vector<std::size_t> anchored;  // distinct classes chosen to cover the anchors
  bool used_unknown = false;
};

}  // namespace

Verdict monster_refined(const TablePtr& table, const std::vector<std::string>& l1, const std::vector<std::string>& l2) {
  const ClassTable& t = *table;
  auto resolve = [&t, &table](const std::vector<std::string>& names) {
    try {
      return ClassTuple::from_names(table, names);
    } catch (const Error& e) {
      throw Error(ErrorCode::InsufficientDeclaration, std::string("catalog class missing from ") + t.group_name() + ": " + e.what());
    }
  };
  const ClassTuple cl1 = resolve(l1);
  const ClassTuple cl2 = resolve(l2);
  Verdict v;
  v.method = Method::MonsterRefined;
  const std::size_t r_l = std::min(cl1.size(), cl2.size());
  v.trace.push_back("catalog " + join(cl1.names()) + " and " + join(cl2.names()) + ", so r_F <= rho_R = " +
                    std::to_string(r_l));

  // N = 1: the cover would be one catalog entry, which must then dominate the other.
  const Tri p12 = tuple_prec(cl1, cl2).holds;
  const Tri p21 = tuple_prec(cl2, cl1).holds;
  if (p12 == Tri::Unknown || p21 == Tri::Unknown)
    throw Error(ErrorCode::InsufficientDeclaration, "closures too partial to compare the two catalog tuples");
  v.trace.push_back("N = 1: " + join(cl1.names()) + " < " + join(cl2.names()) + " is " + std::string(to_string(p12)) +
                    ", reverse is " + std::string(to_string(p21)));
  const bool n1_eliminated = p12 == Tri::False && p21 == Tri::False;

  // N >= 2: classes of C_F covering the targets.
  std::vector<std::size_t> targets = cl1.ids;
  targets.insert(targets.end(), cl2.ids.begin(), cl2.ids.end());
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  const auto& mc = t.multiples_complete();
  std::vector<std::size_t> anchors;
  for (auto c : targets)
    if (std::any_of(mc.begin(), mc.end(), [&](unsigned m) { return t.at(c).order % m == 0; })) anchors.push_back(c);
  if (anchors.empty())
    throw Error(ErrorCode::InsufficientDeclaration, "no catalog class has an order covered by multiples_complete");
  std::vector<std::vector<std::size_t>> coverers;
  for (auto a : anchors) {
    std::vector<std::size_t> cs;
    for (std::size_t c = 0; c < t.size(); ++c)
      if (t.at(c).order % t.at(a).order == 0 && t.in_closure(c, a) != Tri::False) cs.push_back(c);
    std::vector<std::string> cn = names_of(t, cs);
    v.trace.push_back("classes whose closure may contain " + t.at(a).name + ": " + join(cn));
    coverers.push_back(std::move(cs));
  }

  json candidates = json::array();
  bool all_eliminated = true;
  bool undecided = false;
  std::vector<std::size_t> choice(anchors.size(), 0);
  while (true) {
    std::set<std::size_t> chosen;
    bool unknown_anchor = false;
    for (std::size_t k = 0; k < anchors.size(); ++k) {
      const std::size_t c = coverers[k][choice[k]];
      chosen.insert(c);
      if (t.in_closure(c, anchors[k]) != Tri::True) unknown_anchor = true;
    }
    std::vector<std::size_t> uncovered;
    bool unknown_cover = unknown_anchor;
    for (auto target : targets) {
      Tri covered = Tri::False;
      for (auto c : chosen) {
        const Tri in = t.in_closure(c, target);
        if (in == Tri::True) covered = Tri::True;
        else if (in == Tri::Unknown && covered == Tri::False) covered = Tri::Unknown;
      }
      if (covered == Tri::False) uncovered.push_back(target);
      if (covered == Tri::Unknown) unknown_cover = true;
    }
    std::vector<std::size_t> chosen_ids(chosen.begin(), chosen.end());
    json cand{{"anchored", names_of(t, chosen_ids)}, {"uncovered", names_of(t, uncovered)}};
    std::string label = join(names_of(t, chosen_ids));
    if (!uncovered.empty()) label.insert(label.size() - 1, ", C");
    const std::size_t free_needed = uncovered.empty() ? 0 : 1;
    const std::size_t r_f = chosen.size() + free_needed;
    bool eliminated = false;
    if (r_f > r_l) {
      eliminated = true;
      cand["reason"] = "needs " + std::to_string(r_f) + " classes > rho_R";
      v.trace.push_back("C_F = " + label + ": needs more than " + std::to_string(r_l) + " classes, eliminated");
    } else {
      // Worst case: fewest entries and the smallest admissible orders, each extra
      // free entry of order >= 2 only raising (r - eps - 2).
      unsigned free_order = 0;
      if (free_needed) {
        free_order = t.at(uncovered.front()).order;
        for (auto u : uncovered) free_order = std::min(free_order, t.at(u).order);
      }
      RatQ eps(0);
      unsigned e_inf = 0;
      for (auto c : chosen) {
        eps += RatQ(1, t.at(c).order);
        e_inf = std::max(e_inf, t.at(c).order);
      }
      if (free_needed) eps += RatQ(1, free_order);
      const RatQ slope = RatQ(static_cast<std::int64_t>(r_f)) - eps - RatQ(2);
      const RatQ certified = slope * RatQ(2) + RatQ(2);
      cand["r_F"] = r_f;
      cand["epsilon_max"] = eps.to_string();
      cand["certified_lower_bound_N2"] = certified.to_string();
      if (free_needed) {
        const Bounds b = compute_bounds(static_cast<unsigned>(r_f), eps, std::max(e_inf, free_order), 2, t.group_order(),
                                        std::nullopt);
        cand["b1_with_free_order_" + std::to_string(free_order)] = b.lower_b1.to_string();
        cand["free_order_multiple_of"] = free_order;
      } else {
        const Bounds b = compute_bounds(static_cast<unsigned>(r_f), eps, e_inf, 2, t.group_order(), std::nullopt);
        cand["b1"] = b.lower_b1.to_string();
      }
      eliminated = slope.sign() > 0 && certified > RatQ(static_cast<std::int64_t>(r_l));
      std::ostringstream line;
      line << "C_F = " << label;
      if (free_needed) line << " with order(C) divisible by " << free_order;
      line << ": eps <= " << eps << ", (r - eps - 2)N + 2 >= " << certified << " at N = 2";
      line << (eliminated ? " > " : " <= ") << r_l << (eliminated ? ", eliminated" : ", not eliminated");
      v.trace.push_back(line.str());
    }
    cand["eliminated"] = eliminated;
    cand["uses_partial_closures"] = unknown_cover;
    candidates.push_back(std::move(cand));
    if (!eliminated) {
      all_eliminated = false;
      if (unknown_cover) undecided = true;
    }
    std::size_t k = anchors.size();
    while (k > 0 && choice[k - 1] + 1 == coverers[k - 1].size()) --k;
    if (k == 0) break;
    ++choice[k - 1];
    for (std::size_t j = k; j < anchors.size(); ++j) choice[j] = 0;
  }
  if (undecided)
    throw Error(ErrorCode::InsufficientDeclaration,
                "a candidate inertia tuple survives only through closures not declared complete");
  v.obstructed = to_tri(all_eliminated && n1_eliminated);
  v.trace.push_back(v.obstructed == Tri::True ? "every candidate eliminated: obstructed" : "some candidate survives");
  v.witness = json{{"rho_R", r_l},
                   {"n1_prec_12", std::string(to_string(p12))},
                   {"n1_prec_21", std::string(to_string(p21))},
                   {"candidates", candidates}};
  return v;
}

std::vector<CatalogEntry> sn_catalog(const TablePtr& sym_table, unsigned n) {
  if (n < 5 || n > 8) throw Error(ErrorCode::DomainError, "S_n catalog covers 5 <= n <= 8");
  auto part = [n](std::vector<unsigned> parts) {
    const unsigned total = std::accumulate(parts.begin(), parts.end(), 0u);
    parts.insert(parts.end(), n - total, 1u);
    return partition_name(parts);
  };
  const std::string source = "Schinzel 2000; Legrand thesis B-3";
  const std::string full = part({n});
  const std::string transposition = part({2});
  std::vector<CatalogEntry> out;
  out.push_back({ClassTuple::from_names(sym_table, {full, part({n - 1}), transposition}), source});
  if (n % 2 == 1) {
    out.push_back({ClassTuple::from_names(sym_table, {full, part({n - 2, 2}), transposition}), source});
    return out;
  }
  for (unsigned m = 2; m + 2 <= n; ++m)
    if (std::gcd(m, n) == 1) {
      out.push_back({ClassTuple::from_names(sym_table, {full, part({n - m, m}), transposition}), source});
      return out;
    }
  throw Error(ErrorCode::DomainError, "no m in [2, n-2] prime to n = " + std::to_string(n));
}

Verdict sn_catalog_verdict(unsigned n) {
  const auto table = std::make_shared<const ClassTable>(ClassTable::from_group(sym(n)));
  Verdict v = criterion_check(sn_catalog(table, n));
  if (v.obstructed == Tri::False) {
    v.obstructed = Tri::Unknown;
    v.trace.push_back("S_" + std::to_string(n) + " catalog: criterion inconclusive, reported as unknown");
  }
  return v;
}

}  // namespace coverspec
