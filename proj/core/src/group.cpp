#include "coverspec/group.hpp"

#include "coverspec/error.hpp"
#include "coverspec/intmath.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace coverspec {

namespace {

std::string letters(std::size_t k) {
  std::string s;
  ++k;
  while (k > 0) {
    --k;
    s.insert(s.begin(), static_cast<char>('A' + k % 26));
    k /= 26;
  }
  return s;
}

}  // namespace

std::string GroupKind::label() const {
  auto join = [this](const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < params.size(); ++i) s += (i ? sep : "") + std::to_string(params[i]);
    return s;
  };
  switch (family) {
    case GroupFamily::Symmetric: return "S" + join(",");
    case GroupFamily::Alternating: return "A" + join(",");
    case GroupFamily::CyclicProduct: {
      std::string s;
      for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "x" : "") + std::string("Z/") + std::to_string(params[i]);
      return s.empty() ? "1" : s;
    }
    case GroupFamily::Dihedral: return "D" + std::to_string(params.empty() ? 0 : 2 * params[0]);
    case GroupFamily::Quaternion: return "Q8";
    case GroupFamily::PSL2: return "PSL2(" + join(",") + ")";
    case GroupFamily::Generic: return "G";
  }
  return "G";
}

FiniteGroup FiniteGroup::generate(std::size_t degree, std::vector<Perm> generators, std::size_t order_cap,
                                  GroupKind kind) {
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw Error(ErrorCode::InvalidPermutation, "generator degree " + std::to_string(g.degree()) +
                                                     " differs from group degree " + std::to_string(degree));
  FiniteGroup grp;
  grp.degree_ = degree;
  grp.kind_ = std::move(kind);
  grp.generators_ = std::move(generators);
  grp.elements_.push_back(Perm::identity(degree));
  grp.index_.emplace(grp.elements_.front(), 0);
  for (std::size_t head = 0; head < grp.elements_.size(); ++head) {
    for (const auto& gen : grp.generators_) {
      Perm next = grp.elements_[head] * gen;
      if (grp.index_.contains(next)) continue;
      if (grp.elements_.size() >= order_cap)
        throw Error(ErrorCode::OrderCapExceeded, "group order exceeds cap " + std::to_string(order_cap));
      grp.index_.emplace(next, grp.elements_.size());
      grp.elements_.push_back(std::move(next));
    }
  }
  const std::size_t n = grp.elements_.size();
  grp.inverse_.resize(n);
  grp.element_order_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    grp.inverse_[i] = grp.index_.at(grp.elements_[i].inverse());
    grp.element_order_[i] = grp.elements_[i].order();
  }
  grp.build_classes();
  return grp;
}

std::optional<std::size_t> FiniteGroup::find(const Perm& p) const {
  const auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGroup::index_of(const Perm& p) const {
  const auto it = index_.find(p);
  if (it == index_.end()) throw Error(ErrorCode::InvalidPermutation, "permutation " + p.to_string() + " is not in the group");
  return it->second;
}

std::size_t FiniteGroup::multiply(std::size_t i, std::size_t j) const {
  return index_.at(elements_[i] * elements_[j]);
}

std::size_t FiniteGroup::power(std::size_t i, long long k) const {
  const unsigned ord = element_order_[i];
  long long e = k % static_cast<long long>(ord);
  if (e < 0) e += ord;
  std::size_t result = 0;
  std::size_t base = i;
  auto ue = static_cast<unsigned long long>(e);
  while (ue) {
    if (ue & 1u) result = multiply(result, base);
    base = multiply(base, base);
    ue >>= 1u;
  }
  return result;
}

void FiniteGroup::build_classes() {
  const std::size_t n = elements_.size();
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> raw_class(n, kUnset);
  std::vector<std::vector<std::size_t>> raw_members;
  std::vector<Perm> gen_inv;
  for (const auto& g : generators_) gen_inv.push_back(g.inverse());
  for (std::size_t start = 0; start < n; ++start) {
    if (raw_class[start] != kUnset) continue;
    const std::size_t id = raw_members.size();
    std::vector<std::size_t> orbit{start};
    raw_class[start] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (std::size_t k = 0; k < generators_.size(); ++k) {
        const std::size_t y = index_.at(generators_[k] * elements_[orbit[head]] * gen_inv[k]);
        if (raw_class[y] == kUnset) {
          raw_class[y] = id;
          orbit.push_back(y);
        }
      }
    }
    raw_members.push_back(std::move(orbit));
  }
  // Sort members by permutation order so the representative is the least member.
  for (auto& m : raw_members)
    std::sort(m.begin(), m.end(), [this](std::size_t a, std::size_t b) { return elements_[a] < elements_[b]; });
  std::vector<std::size_t> order(raw_members.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ma = raw_members[a];
    const auto& mb = raw_members[b];
    const unsigned oa = element_order_[ma.front()];
    const unsigned ob = element_order_[mb.front()];
    if (oa != ob) return oa < ob;
    if (ma.size() != mb.size()) return ma.size() < mb.size();
    return elements_[ma.front()] < elements_[mb.front()];
  });
  classes_.clear();
  members_.clear();
  class_of_.assign(n, 0);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    auto& m = raw_members[order[pos]];
    GroupClass c;
    c.id = pos;
    c.representative = elements_[m.front()];
    c.size = m.size();
    c.element_order = element_order_[m.front()];
    for (auto x : m) class_of_[x] = pos;
    members_.push_back(std::move(m));
    classes_.push_back(std::move(c));
  }
  // Naming: cycle types for S_n / A_n, otherwise order followed by a letter.
  const bool cycle_names = kind_.family == GroupFamily::Symmetric || kind_.family == GroupFamily::Alternating;
  if (cycle_names) {
    std::map<std::vector<unsigned>, std::vector<std::size_t>> by_type;
    for (auto& c : classes_) by_type[c.representative.cycle_type()].push_back(c.id);
    for (auto& [type, ids] : by_type) {
      const std::string base = partition_name(type);
      if (ids.size() == 1) {
        classes_[ids[0]].name = base;
      } else {
        for (std::size_t k = 0; k < ids.size(); ++k) classes_[ids[k]].name = base + letters(k);
      }
    }
  } else {
    std::map<unsigned, std::size_t> seen;
    for (auto& c : classes_) c.name = std::to_string(c.element_order) + letters(seen[c.element_order]++);
  }
}

std::size_t FiniteGroup::class_by_name(std::string_view name) const {
  for (const auto& c : classes_)
    if (c.name == name) return c.id;
  // Sym/alt names are also accepted without the ",1^k" padding.
  if (kind_.family == GroupFamily::Symmetric || kind_.family == GroupFamily::Alternating) {
    std::string_view core = name;
    std::string tag;
    if (!core.empty() && std::isalpha(static_cast<unsigned char>(core.back())) && core.back() != ']') {
      tag = std::string(1, core.back());
      core.remove_suffix(1);
    }
    try {
      auto parts = parse_partition(core);
      const unsigned total = std::accumulate(parts.begin(), parts.end(), 0u);
      if (total < degree_) parts.insert(parts.end(), degree_ - total, 1u);
      const std::string canonical = partition_name(parts) + tag;
      for (const auto& c : classes_) {
        if (c.name == canonical) return c.id;
        if (tag.empty() && c.name == canonical + "A")
          throw Error(ErrorCode::SplitClassAmbiguous, canonical + " splits in " + label() + "; give tag A or B");
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SplitClassAmbiguous) throw;
    }
  }
  throw Error(ErrorCode::NoSuchClass, "no class named '" + std::string(name) + "' in " + label());
}

bool FiniteGroup::is_abelian() const {
  for (const auto& a : generators_)
    for (const auto& b : generators_)
      if (a * b != b * a) return false;
  return true;
}

std::vector<std::size_t> FiniteGroup::subgroup(std::span<const std::size_t> gens, std::size_t stop_above) const {
  std::vector<char> in(elements_.size(), 0);
  std::vector<std::size_t> members{0};
  in[0] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (auto g : gens) {
      const std::size_t y = multiply(members[head], g);
      if (in[y]) continue;
      in[y] = 1;
      members.push_back(y);
      if (members.size() > stop_above) {
        std::sort(members.begin(), members.end());
        return members;
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool FiniteGroup::generates(std::span<const std::size_t> gens) const {
  // A subgroup with more than half the elements is the whole group.
  return subgroup(gens, order() / 2).size() > order() / 2;
}

std::vector<std::uint32_t> FiniteGroup::multiplication_table() const {
  const std::size_t n = order();
  std::vector<std::uint32_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<std::uint32_t>(multiply(i, j));
  return table;
}

const std::vector<GroupClass>& conjugacy_classes(const FiniteGroup& g) { return g.classes(); }

MaximalCyclicClasses maximal_cyclic_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  MaximalCyclicClasses result;
  result.largest_cyclic_overgroup.assign(n, 1);
  for (std::size_t h = 0; h < n; ++h) {
    const unsigned ord = g.element_order(h);
    std::size_t x = h;
    for (unsigned k = 1; k <= ord; ++k) {
      result.largest_cyclic_overgroup[x] = std::max(result.largest_cyclic_overgroup[x], ord);
      x = g.multiply(x, h);
    }
  }
  if (n == 1) {
    result.nu = 1;
    result.representatives.push_back(g.classes().front());
    return result;
  }
  // Two maximal cyclic subgroups are conjugate iff their generator class sets coincide.
  std::set<std::vector<std::size_t>> keys;
  for (std::size_t h = 1; h < n; ++h) {
    const unsigned ord = g.element_order(h);
    if (result.largest_cyclic_overgroup[h] != ord) continue;
    std::vector<std::size_t> key;
    for (unsigned k = 1; k <= ord; ++k)
      if (std::gcd(k, ord) == 1) key.push_back(g.class_of(g.power(h, k)));
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    keys.insert(std::move(key));
  }
  result.nu = keys.size();
  std::vector<std::size_t> reps;
  for (const auto& key : keys) reps.push_back(key.front());
  std::sort(reps.begin(), reps.end());
  for (auto id : reps) result.representatives.push_back(g.classes()[id]);
  return result;
}

namespace {

bool rank_search(const FiniteGroup& g, std::vector<std::size_t>& chosen, std::size_t next_start, unsigned k) {
  if (chosen.size() == k) return g.generates(chosen);
  const std::vector<std::size_t> current = g.subgroup(chosen);
  std::vector<char> in(g.order(), 0);
  for (auto x : current) in[x] = 1;
  if (chosen.empty()) {
    for (const auto& c : g.classes()) {
      if (c.element_order == 1) continue;
      chosen.push_back(g.index_of(c.representative));
      if (rank_search(g, chosen, 1, k)) return true;
      chosen.pop_back();
    }
    return false;
  }
  for (std::size_t x = next_start; x < g.order(); ++x) {
    if (in[x]) continue;
    chosen.push_back(x);
    if (rank_search(g, chosen, x + 1, k)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

RankResult rank(const FiniteGroup& g, std::size_t cap) {
  if (g.order() > cap)
    throw Error(ErrorCode::RankSearchCapExceeded, "order " + std::to_string(g.order()) + " exceeds rank cap " + std::to_string(cap));
  if (g.order() == 1) return {0, {}};
  for (std::size_t x = 0; x < g.order(); ++x)
    if (g.element_order(x) == g.order()) return {1, {x}};
  for (unsigned k = 2;; ++k) {
    std::vector<std::size_t> chosen;
    if (rank_search(g, chosen, 1, k)) return {k, chosen};
  }
}

FiniteGroup sym(unsigned n) {
  if (n == 0) throw Error(ErrorCode::DomainError, "sym(0)");
  std::vector<Perm> gens;
  if (n >= 2) {
    gens.push_back(Perm::from_cycles(n, {{0, 1}}));
    std::vector<Perm::Point> cycle(n);
    std::iota(cycle.begin(), cycle.end(), Perm::Point{0});
    if (n >= 3) gens.push_back(Perm::from_cycles(n, {cycle}));
  }
  return FiniteGroup::generate(n, std::move(gens), FiniteGroup::kDefaultOrderCap, {GroupFamily::Symmetric, {n}});
}

FiniteGroup alt(unsigned n) {
  if (n == 0) throw Error(ErrorCode::DomainError, "alt(0)");
  std::vector<Perm> gens;
  for (unsigned i = 2; i < n; ++i) gens.push_back(Perm::from_cycles(n, {{0, 1, i}}));
  return FiniteGroup::generate(n, std::move(gens), FiniteGroup::kDefaultOrderCap, {GroupFamily::Alternating, {n}});
}

FiniteGroup cyclic_product(const std::vector<unsigned>& orders) {
  unsigned degree = 0;
  for (auto d : orders) {
    if (d == 0) throw Error(ErrorCode::DomainError, "cyclic factor of order 0");
    degree += d;
  }
  degree = std::max(degree, 1u);
  std::vector<Perm> gens;
  unsigned offset = 0;
  for (auto d : orders) {
    if (d >= 2) {
      std::vector<Perm::Point> cycle(d);
      std::iota(cycle.begin(), cycle.end(), offset);
      gens.push_back(Perm::from_cycles(degree, {cycle}));
    }
    offset += d;
  }
  return FiniteGroup::generate(degree, std::move(gens), FiniteGroup::kDefaultOrderCap,
                               {GroupFamily::CyclicProduct, orders});
}

FiniteGroup dihedral(unsigned n) {
  if (n == 0) throw Error(ErrorCode::DomainError, "dihedral(0)");
  GroupKind kind{GroupFamily::Dihedral, {n}};
  if (n == 1) return FiniteGroup::generate(2, {Perm::from_cycles(2, {{0, 1}})}, FiniteGroup::kDefaultOrderCap, kind);
  if (n == 2)
    return FiniteGroup::generate(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})},
                                 FiniteGroup::kDefaultOrderCap, kind);
  std::vector<Perm::Point> rot(n);
  std::vector<Perm::Point> refl(n);
  for (unsigned i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return FiniteGroup::generate(n, {Perm(rot), Perm(refl)}, FiniteGroup::kDefaultOrderCap, kind);
}

FiniteGroup quaternion8() {
  // Element 2*u + s stands for (-1)^s * unit_u with units 1, i, j, k.
  constexpr int kUnitProduct[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  constexpr int kUnitSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  auto mul = [&](unsigned a, unsigned b) {
    const unsigned ua = a / 2;
    const unsigned ub = b / 2;
    const unsigned s = (a % 2 + b % 2 + static_cast<unsigned>(kUnitSign[ua][ub])) % 2;
    return static_cast<Perm::Point>(2 * static_cast<unsigned>(kUnitProduct[ua][ub]) + s);
  };
  auto left = [&](unsigned a) {
    std::vector<Perm::Point> images(8);
    for (unsigned x = 0; x < 8; ++x) images[x] = mul(a, x);
    return Perm(images);
  };
  return FiniteGroup::generate(8, {left(2), left(4)}, FiniteGroup::kDefaultOrderCap, {GroupFamily::Quaternion, {}});
}

FiniteGroup psl2(unsigned p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  const std::uint64_t order = p == 2 ? 6 : static_cast<std::uint64_t>(p) * (p - 1) * (p + 1) / 2;
  if (order > FiniteGroup::kDefaultOrderCap)
    throw Error(ErrorCode::OrderCapExceeded, "PSL2(" + std::to_string(p) + ") exceeds the order cap");
  const Perm::Point inf = p;
  std::vector<Perm::Point> translate(p + 1);
  std::vector<Perm::Point> invert(p + 1);
  auto inv_mod = [p](unsigned x) {
    for (unsigned y = 1; y < p; ++y)
      if ((x * y) % p == 1) return y;
    return 0u;
  };
  for (unsigned x = 0; x < p; ++x) {
    translate[x] = (x + 1) % p;
    invert[x] = x == 0 ? inf : (p - inv_mod(x)) % p;
  }
  translate[inf] = inf;
  invert[inf] = 0;
  return FiniteGroup::generate(p + 1, {Perm(translate), Perm(invert)}, FiniteGroup::kDefaultOrderCap,
                               {GroupFamily::PSL2, {p}});
}

std::vector<unsigned> parse_partition(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw Error(ErrorCode::ParseError, "partition must look like [3^1,1^2]: '" + std::string(text) + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<unsigned> parts;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t comma = s.find(',', pos);
    const std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? s.size() : comma + 1;
    const std::size_t caret = item.find('^');
    try {
      const unsigned len = static_cast<unsigned>(std::stoul(item.substr(0, caret)));
      const unsigned mult = caret == std::string::npos ? 1u : static_cast<unsigned>(std::stoul(item.substr(caret + 1)));
      if (len == 0) throw Error(ErrorCode::ParseError, "zero part in partition");
      parts.insert(parts.end(), mult, len);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "bad partition item '" + item + "'");
    }
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

std::string partition_name(const std::vector<unsigned>& parts) {
  std::vector<unsigned> sorted = parts;
  std::sort(sorted.rbegin(), sorted.rend());
  std::string s = "[";
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    if (i) s += ',';
    s += std::to_string(sorted[i]) + "^" + std::to_string(j - i);
    i = j;
  }
  return s + "]";
}

const GroupClass& cycle_type_class(const FiniteGroup& g, const std::vector<unsigned>& parts, std::optional<char> tag) {
  if (g.kind().family != GroupFamily::Symmetric && g.kind().family != GroupFamily::Alternating)
    throw Error(ErrorCode::DomainError, "cycle types apply to S_n and A_n only");
  std::vector<unsigned> full = parts;
  const unsigned total = std::accumulate(full.begin(), full.end(), 0u);
  if (total > g.degree()) throw Error(ErrorCode::NoSuchClass, "partition of " + std::to_string(total) + " exceeds degree");
  full.insert(full.end(), g.degree() - total, 1u);
  std::sort(full.rbegin(), full.rend());
  std::vector<const GroupClass*> matches;
  for (const auto& c : g.classes())
    if (c.representative.cycle_type() == full) matches.push_back(&c);
  if (matches.empty()) throw Error(ErrorCode::NoSuchClass, "no class of type " + partition_name(full) + " in " + g.label());
  if (matches.size() == 1) return *matches.front();
  if (!tag) throw Error(ErrorCode::SplitClassAmbiguous, partition_name(full) + " splits in " + g.label() + "; give tag A or B");
  const std::size_t k = static_cast<std::size_t>(std::toupper(static_cast<unsigned char>(*tag)) - 'A');
  if (k >= matches.size()) throw Error(ErrorCode::NoSuchClass, "bad split-class tag");
  return *matches[k];
}

FiniteGroup abelianization(const FiniteGroup& g) {
  std::vector<std::size_t> commutators;
  std::set<std::size_t> seen;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) {
      const std::size_t c = g.multiply(g.multiply(a, b), g.multiply(g.inverse(a), g.inverse(b)));
      if (c != 0 && seen.insert(c).second) commutators.push_back(c);
    }
  const std::vector<std::size_t> derived = g.subgroup(commutators);
  // Cosets x*D, labelled by discovery order.
  std::vector<std::size_t> coset_of(g.order(), std::numeric_limits<std::size_t>::max());
  std::vector<std::size_t> coset_rep;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (coset_of[x] != std::numeric_limits<std::size_t>::max()) continue;
    const std::size_t id = coset_rep.size();
    coset_rep.push_back(x);
    for (auto d : derived) coset_of[g.multiply(x, d)] = id;
  }
  const std::size_t m = coset_rep.size();
  std::vector<Perm> gens;
  for (const auto& gen : g.generators()) {
    const std::size_t gi = g.index_of(gen);
    std::vector<Perm::Point> images(m);
    for (std::size_t c = 0; c < m; ++c) images[c] = static_cast<Perm::Point>(coset_of[g.multiply(gi, coset_rep[c])]);
    gens.emplace_back(std::move(images));
  }
  return FiniteGroup::generate(m, std::move(gens));
}

}  // namespace coverspec
