#include "coverspec/classtable.hpp"

#include "coverspec/error.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace coverspec {

namespace {

using json = nlohmann::json;

[[noreturn]] void inconsistent(const std::string& rule) { throw Error(ErrorCode::InconsistentDeclaration, rule); }

bool contains(const std::vector<std::size_t>& sorted, std::size_t x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

unsigned json_uint(const json& j, const std::string& what) {
  if (j.is_number_unsigned()) return j.get<unsigned>();
  if (j.is_number_integer() && j.get<long long>() >= 0) return static_cast<unsigned>(j.get<long long>());
  if (j.is_string()) {
    try {
      return static_cast<unsigned>(std::stoul(j.get<std::string>()));
    } catch (const std::logic_error&) {
    }
  }
  throw Error(ErrorCode::ParseError, what + " must be a non-negative integer");
}

BigInt json_bigint(const json& j, const std::string& what) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::runtime_error&) {
    }
  }
  throw Error(ErrorCode::ParseError, what + " must be an integer or a decimal string");
}

}  // namespace

ClassTable ClassTable::from_group(const FiniteGroup& g) {
  ClassTable t;
  t.group_name_ = g.label();
  t.group_order_ = BigInt(g.order());
  t.source_ = TableSource::Computed;
  t.citation_ = "computed from " + g.label();
  t.degree_ = g.degree();
  t.cycle_names_ = g.kind().family == GroupFamily::Symmetric || g.kind().family == GroupFamily::Alternating;
  t.identity_ = 0;
  for (const auto& c : g.classes()) {
    ClassEntry e;
    e.name = c.name;
    e.order = c.element_order;
    e.size = BigInt(c.size);
    const std::size_t x = g.index_of(c.representative);
    std::set<std::size_t> closure;
    for (unsigned k = 0; k < c.element_order; ++k) {
      const std::size_t target = g.class_of(g.power(x, k));
      e.power_map.emplace(k, target);
      closure.insert(target);
    }
    e.z_closure.assign(closure.begin(), closure.end());
    t.classes_.push_back(std::move(e));
  }
  return t;
}

ClassTable ClassTable::from_declaration(const json& data) {
  if (!data.is_object() || !data.contains("classes") || !data.at("classes").is_array())
    throw Error(ErrorCode::ParseError, "declared table needs a \"classes\" array");
  ClassTable t;
  t.source_ = TableSource::Declared;
  t.group_name_ = data.value("group", std::string("G"));
  t.citation_ = data.value("source", std::string());
  if (data.contains("order")) t.group_order_ = json_bigint(data.at("order"), "order");
  if (data.contains("multiples_complete"))
    for (const auto& m : data.at("multiples_complete")) t.multiples_complete_.push_back(json_uint(m, "multiples_complete entry"));

  std::map<std::string, std::size_t> by_name;
  const auto& items = data.at("classes");
  for (const auto& item : items) {
    if (!item.contains("name") || !item.contains("order"))
      throw Error(ErrorCode::ParseError, "each class needs \"name\" and \"order\"");
    const std::string name = item.at("name").get<std::string>();
    if (!by_name.emplace(name, t.classes_.size()).second) inconsistent("duplicate class name " + name);
    ClassEntry e;
    e.name = name;
    e.order = json_uint(item.at("order"), "order of " + name);
    if (e.order == 0) inconsistent("class " + name + " has order 0");
    if (item.contains("size")) e.size = json_bigint(item.at("size"), "size of " + name);
    e.complete = item.value("complete", false);
    t.classes_.push_back(std::move(e));
  }
  auto lookup = [&by_name](const std::string& name, const std::string& context) {
    const auto it = by_name.find(name);
    if (it == by_name.end()) inconsistent(context + " refers to undeclared class " + name);
    return it->second;
  };
  std::optional<std::size_t> identity;
  for (std::size_t i = 0; i < t.classes_.size(); ++i)
    if (t.classes_[i].order == 1) {
      if (identity) inconsistent("more than one class of order 1");
      identity = i;
    }
  if (!identity) inconsistent("identity class (order 1) missing");
  t.identity_ = *identity;

  for (std::size_t i = 0; i < t.classes_.size(); ++i) {
    const auto& item = items[i];
    auto& e = t.classes_[i];
    std::set<std::size_t> closure;
    if (item.contains("z_closure"))
      for (const auto& m : item.at("z_closure")) closure.insert(lookup(m.get<std::string>(), "z_closure of " + e.name));
    if (i == t.identity_) {
      closure.insert(i);
      e.complete = true;
    }
    e.z_closure.assign(closure.begin(), closure.end());
    if (item.contains("power_map")) {
      for (const auto& [key, value] : item.at("power_map").items()) {
        unsigned k = 0;
        try {
          k = static_cast<unsigned>(std::stoul(key));
        } catch (const std::logic_error&) {
          throw Error(ErrorCode::ParseError, "power_map key '" + key + "' of " + e.name + " is not an exponent");
        }
        e.power_map[k % e.order] = lookup(value.get<std::string>(), "power_map of " + e.name);
      }
    }
  }
  t.validate();
  return t;
}

void ClassTable::validate() const {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    const auto& e = classes_[i];
    if (!contains(e.z_closure, identity_)) inconsistent("z_closure of " + e.name + " lacks the identity class");
    if (!contains(e.z_closure, i)) inconsistent("z_closure of " + e.name + " lacks the class itself");
    for (auto m : e.z_closure)
      if (e.order % classes_[m].order != 0)
        inconsistent("z_closure of " + e.name + " contains " + classes_[m].name + " whose order " +
                     std::to_string(classes_[m].order) + " does not divide " + std::to_string(e.order));
    for (const auto& [k, target] : e.power_map) {
      if (!contains(e.z_closure, target))
        inconsistent("power_map of " + e.name + " sends exponent " + std::to_string(k) + " outside its z_closure");
      const unsigned expected = e.order / std::gcd(e.order, k == 0 ? e.order : k);
      if (classes_[target].order != expected)
        inconsistent("power_map of " + e.name + " at exponent " + std::to_string(k) + " has order " +
                     std::to_string(classes_[target].order) + ", expected " + std::to_string(expected));
    }
    if (e.complete)
      for (auto m : e.z_closure)
        for (auto mm : classes_[m].z_closure)
          if (!contains(e.z_closure, mm))
            inconsistent("complete z_closure of " + e.name + " is not power-closed: " + classes_[m].name + " reaches " +
                         classes_[mm].name);
  }
}

std::size_t ClassTable::id(std::string_view name) const {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].name == name) return i;
  if (cycle_names_) {
    std::string_view core = name;
    std::string tag;
    if (!core.empty() && core.back() != ']' && std::isalpha(static_cast<unsigned char>(core.back()))) {
      tag = std::string(1, static_cast<char>(std::toupper(static_cast<unsigned char>(core.back()))));
      core.remove_suffix(1);
    }
    try {
      auto parts = parse_partition(core);
      const unsigned total = std::accumulate(parts.begin(), parts.end(), 0u);
      if (total <= degree_) {
        parts.insert(parts.end(), degree_ - total, 1u);
        const std::string canonical = partition_name(parts) + tag;
        for (std::size_t i = 0; i < classes_.size(); ++i) {
          if (classes_[i].name == canonical) return i;
          if (tag.empty() && classes_[i].name == canonical + "A")
            throw Error(ErrorCode::SplitClassAmbiguous, canonical + " splits in " + group_name_ + "; give tag A or B");
        }
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SplitClassAmbiguous) throw;
    }
  }
  throw Error(ErrorCode::NoSuchClass, "no class named '" + std::string(name) + "' in " + group_name_);
}

Tri ClassTable::in_closure(std::size_t c, std::size_t member) const {
  const auto& e = classes_.at(c);
  if (contains(e.z_closure, member)) return Tri::True;
  if (e.order % classes_.at(member).order != 0) return Tri::False;
  return e.complete ? Tri::False : Tri::Unknown;
}

std::optional<std::size_t> ClassTable::power(std::size_t c, long long k) const {
  const auto& e = classes_.at(c);
  long long r = k % static_cast<long long>(e.order);
  if (r < 0) r += e.order;
  if (r == 0) return identity_;
  if (r == 1) return c;
  const auto it = e.power_map.find(static_cast<unsigned>(r));
  if (it == e.power_map.end()) return std::nullopt;
  return it->second;
}

bool ClassTable::is_complete() const {
  return std::all_of(classes_.begin(), classes_.end(), [](const ClassEntry& e) { return e.complete; });
}

json ClassTable::to_json() const {
  json classes = json::array();
  for (const auto& e : classes_) {
    json item;
    item["name"] = e.name;
    item["order"] = e.order;
    if (e.size) item["size"] = e.size->str();
    json closure = json::array();
    for (auto m : e.z_closure) closure.push_back(classes_[m].name);
    item["z_closure"] = closure;
    item["complete"] = e.complete;
    if (!e.power_map.empty()) {
      json pm = json::object();
      for (const auto& [k, target] : e.power_map) pm[std::to_string(k)] = classes_[target].name;
      item["power_map"] = pm;
    }
    classes.push_back(std::move(item));
  }
  json out;
  out["group"] = group_name_;
  out["order"] = group_order_.str();
  out["source"] = citation_;
  out["multiples_complete"] = multiples_complete_;
  out["classes"] = classes;
  return out;
}

ClassTuple::ClassTuple(TablePtr t, std::vector<std::size_t> class_ids) : table(std::move(t)), ids(std::move(class_ids)) {
  if (!table) throw Error(ErrorCode::DomainError, "class tuple without a table");
  for (auto id : ids) {
    if (id >= table->size()) throw Error(ErrorCode::NoSuchClass, "class id " + std::to_string(id) + " out of range");
    if (id == table->identity()) throw Error(ErrorCode::DomainError, "class tuples cannot contain the identity class");
  }
}

ClassTuple ClassTuple::from_names(TablePtr table, const std::vector<std::string>& names) {
  std::vector<std::size_t> ids;
  for (const auto& n : names) ids.push_back(table->id(n));
  return ClassTuple(std::move(table), std::move(ids));
}

std::vector<std::string> ClassTuple::names() const {
  std::vector<std::string> out;
  for (auto id : ids) out.push_back(table->at(id).name);
  return out;
}

std::vector<unsigned> ClassTuple::orders() const {
  std::vector<unsigned> out;
  for (auto id : ids) out.push_back(table->at(id).order);
  return out;
}

Tri very_different(const ClassTable& table, std::size_t a, std::size_t b) {
  if (a == table.identity() || b == table.identity())
    throw Error(ErrorCode::DomainError, "very_different is defined on nontrivial classes");
  const unsigned oa = table.at(a).order;
  const unsigned ob = table.at(b).order;
  const unsigned l = std::lcm(oa, ob);
  bool all_false = true;
  for (std::size_t c = 0; c < table.size(); ++c) {
    if (table.at(c).order % l != 0) continue;
    const Tri ia = table.in_closure(c, a);
    const Tri ib = table.in_closure(c, b);
    if (ia == Tri::True && ib == Tri::True) return Tri::False;
    if (ia != Tri::False && ib != Tri::False) all_false = false;
  }
  if (table.source() == TableSource::Computed) return Tri::True;
  const auto& mc = table.multiples_complete();
  const bool listed = std::any_of(mc.begin(), mc.end(), [l](unsigned m) { return l % m == 0; });
  return listed && all_false ? Tri::True : Tri::Unknown;
}

namespace {

void check_tables(const ClassTuple& a, const ClassTuple& b) {
  if (!a.table || !b.table) throw Error(ErrorCode::TableMismatch, "tuple without a table");
  if (a.table == b.table) return;
  const auto& ta = *a.table;
  const auto& tb = *b.table;
  bool same = ta.group_name() == tb.group_name() && ta.size() == tb.size();
  for (std::size_t i = 0; same && i < ta.size(); ++i) same = ta.at(i).name == tb.at(i).name;
  if (!same) throw Error(ErrorCode::TableMismatch, "tuples over " + ta.group_name() + " and " + tb.group_name());
}

Tri tri_or(Tri a, Tri b) {
  if (a == Tri::True || b == Tri::True) return Tri::True;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  return Tri::False;
}

Tri tri_and(Tri a, Tri b) {
  if (a == Tri::False || b == Tri::False) return Tri::False;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  return Tri::True;
}

}  // namespace

PrecResult tuple_prec(const ClassTuple& cf, const ClassTuple& cl) {
  check_tables(cf, cl);
  const ClassTable& t = *cf.table;
  PrecResult result;
  result.holds = Tri::True;
  for (auto target : cl.ids) {
    Tri found = Tri::False;
    std::optional<std::size_t> witness;
    for (std::size_t i = 0; i < cf.ids.size(); ++i) {
      const Tri in = t.in_closure(cf.ids[i], target);
      if (in == Tri::True && !witness) witness = i;
      found = tri_or(found, in);
    }
    result.witness.push_back(witness);
    result.holds = tri_and(result.holds, found);
  }
  return result;
}

PrecResult matched_prec(const ClassTuple& cf, const ClassTuple& cl) {
  check_tables(cf, cl);
  PrecResult result;
  result.witness.assign(cl.size(), std::nullopt);
  if (cf.size() != cl.size()) return result;
  const ClassTable& t = *cf.table;
  std::vector<std::size_t> perm(cf.size());
  std::iota(perm.begin(), perm.end(), 0);
  Tri best = Tri::False;
  do {
    Tri all = Tri::True;
    for (std::size_t j = 0; j < cl.size() && all != Tri::False; ++j) all = tri_and(all, t.in_closure(cf.ids[perm[j]], cl.ids[j]));
    if (all == Tri::True) {
      result.holds = Tri::True;
      for (std::size_t j = 0; j < cl.size(); ++j) result.witness[j] = perm[j];
      return result;
    }
    best = tri_or(best, all);
  } while (std::next_permutation(perm.begin(), perm.end()));
  result.holds = best;
  return result;
}

}  // namespace coverspec
