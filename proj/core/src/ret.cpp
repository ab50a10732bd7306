#include "coverspec/ret.hpp"

#include "coverspec/error.hpp"

#include <map>
#include <numeric>

namespace coverspec {

namespace {

void check_classes(const FiniteGroup& g, const std::vector<std::size_t>& classes) {
  if (classes.size() < 2) throw Error(ErrorCode::DomainError, "tuple search needs at least two classes");
  for (auto c : classes) {
    if (c >= g.classes().size()) throw Error(ErrorCode::NoSuchClass, "class id " + std::to_string(c));
    if (g.classes()[c].element_order == 1) throw Error(ErrorCode::DomainError, "identity class in tuple search");
  }
}

void check_cap(const FiniteGroup& g, const std::vector<std::size_t>& classes, std::size_t first_free, std::uint64_t cap) {
  long double work = 1;
  for (std::size_t i = first_free; i + 1 < classes.size(); ++i) work *= static_cast<long double>(g.class_members(classes[i]).size());
  if (work > static_cast<long double>(cap))
    throw Error(ErrorCode::SearchCapExceeded, "tuple search space exceeds cap " + std::to_string(cap));
}

/// Depth-first enumeration of g_{k+1}, ..., g_{r-1} with g_r forced; visit returns false to stop.
template <class Visit>
bool enumerate(const FiniteGroup& g, const std::vector<std::size_t>& classes, std::vector<std::size_t>& tuple,
               std::size_t prefix, std::uint64_t& nodes, Visit&& visit) {
  const std::size_t k = tuple.size();
  const std::size_t r = classes.size();
  ++nodes;
  if (k == r - 1) {
    const std::size_t last = g.inverse(prefix);
    if (g.class_of(last) != classes[r - 1]) return true;
    tuple.push_back(last);
    const bool go_on = !g.generates(tuple) || visit(tuple);
    tuple.pop_back();
    return go_on;
  }
  for (auto x : g.class_members(classes[k])) {
    tuple.push_back(x);
    const bool go_on = enumerate(g, classes, tuple, g.multiply(prefix, x), nodes, visit);
    tuple.pop_back();
    if (!go_on) return false;
  }
  return true;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

TupleSearchResult find_tuple(const FiniteGroup& g, const std::vector<std::size_t>& classes, std::uint64_t cap) {
  check_classes(g, classes);
  check_cap(g, classes, 1, cap);
  TupleSearchResult result;
  const std::size_t g1 = g.index_of(g.classes()[classes[0]].representative);
  std::vector<std::size_t> tuple{g1};
  enumerate(g, classes, tuple, g1, result.nodes, [&](const std::vector<std::size_t>& t) {
    std::vector<Perm> found;
    for (auto x : t) found.push_back(g.element(x));
    result.found = std::move(found);
    return false;
  });
  return result;
}

TupleSearchResult nielsen_count(const FiniteGroup& g, const std::vector<std::size_t>& classes, std::uint64_t cap) {
  check_classes(g, classes);
  check_cap(g, classes, 0, cap);
  TupleSearchResult result;
  std::vector<std::vector<std::size_t>> tuples;
  std::map<std::vector<std::size_t>, std::size_t> index;
  std::vector<std::size_t> tuple;
  enumerate(g, classes, tuple, 0, result.nodes, [&](const std::vector<std::size_t>& t) {
    if (!result.found) {
      std::vector<Perm> found;
      for (auto x : t) found.push_back(g.element(x));
      result.found = std::move(found);
    }
    index.emplace(t, tuples.size());
    tuples.push_back(t);
    return true;
  });
  std::vector<std::size_t> parent(tuples.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& gen : g.generators()) {
    const std::size_t s = g.index_of(gen);
    const std::size_t s_inv = g.inverse(s);
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      std::vector<std::size_t> conj;
      for (auto x : tuples[i]) conj.push_back(g.multiply(g.multiply(s, x), s_inv));
      const std::size_t j = index.at(conj);
      parent[find_root(parent, i)] = find_root(parent, j);
    }
  }
  std::size_t orbits = 0;
  for (std::size_t i = 0; i < tuples.size(); ++i)
    if (find_root(parent, i) == i) ++orbits;
  result.nielsen_count = orbits;
  return result;
}

bool is_generating_product_one(const FiniteGroup& g, const std::vector<std::size_t>& classes,
                               const std::vector<Perm>& tuple) {
  if (tuple.size() != classes.size()) return false;
  Perm product = Perm::identity(g.degree());
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    const auto x = g.find(tuple[i]);
    if (!x || g.class_of(*x) != classes[i]) return false;
    idx.push_back(*x);
    product = product * tuple[i];
  }
  return product.is_identity() && g.generates(idx);
}

}  // namespace coverspec
