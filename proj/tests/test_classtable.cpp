#include "oracles.hpp"

#include "coverspec/classtable.hpp"
#include "coverspec/error.hpp"
#include "coverspec/io.hpp"

#include <gtest/gtest.h>

using namespace coverspec;
using nlohmann::json;

namespace {

TablePtr table_of(const FiniteGroup& g) { return std::make_shared<const ClassTable>(ClassTable::from_group(g)); }

json monster_json() { return io::read_json_file(std::string(COVERSPEC_DATA_DIR) + "/monster.json"); }

json small_declaration() {
  return json::parse(R"({
    "group": "X", "order": 120, "source": "test",
    "classes": [
      {"name": "1A", "order": 1, "z_closure": ["1A"], "complete": true},
      {"name": "2A", "order": 2, "z_closure": ["2A", "1A"], "complete": true},
      {"name": "3A", "order": 3, "z_closure": ["3A", "1A"], "complete": true},
      {"name": "6A", "order": 6, "z_closure": ["6A", "3A", "2A", "1A"], "complete": true,
       "power_map": {"2": "3A", "3": "2A"}},
      {"name": "5A", "order": 5, "z_closure": ["5A", "1A"], "complete": false}
    ]})");
}

std::set<oracle::Images> members(const FiniteGroup& g, std::size_t class_id) {
  std::set<oracle::Images> out;
  for (auto i : g.class_members(class_id)) out.insert(g.element(i).images());
  return out;
}

}  // namespace

TEST(ClassTable, ClosuresFromPowers) {
  const FiniteGroup s5 = sym(5);
  const auto t = table_of(s5);
  const auto& c = t->at(t->id("[3^1,2^1]"));
  for (const char* name : {"[3^1,2^1]", "[3^1,1^2]", "[2^1,1^3]", "[1^5]"})
    EXPECT_EQ(t->in_closure(t->id("[3^1,2^1]"), t->id(name)), Tri::True) << name;
  EXPECT_EQ(c.z_closure.size(), 4u);
  const auto s6 = table_of(sym(6));
  std::set<std::string> names;
  for (auto id : s6->at(s6->id("[6^1]")).z_closure) names.insert(s6->at(id).name);
  EXPECT_EQ(names, (std::set<std::string>{"[6^1]", "[3^2]", "[2^3]", "[1^6]"}));
  EXPECT_EQ(s6->power(s6->id("[6^1]"), 3), s6->id("[2^3]"));
}

TEST(ClassTable, VeryDifferentMatchesOracle) {
  for (const auto& g : {sym(5), sym(6), alt(5), psl2(7), quaternion8()}) {
    const auto t = ClassTable::from_group(g);
    const auto elements = oracle::elements_of(g);
    for (std::size_t a = 1; a < t.size(); ++a) {
      for (std::size_t b = a + 1; b < t.size(); ++b) {
        const bool shared = oracle::shares_cyclic_overgroup(elements, members(g, a), members(g, b));
        EXPECT_EQ(very_different(t, a, b), to_tri(!shared)) << g.label() << " " << t.at(a).name << " " << t.at(b).name;
      }
    }
  }
}

TEST(ClassTable, NamedVeryDifferentPairs) {
  const auto s5 = ClassTable::from_group(sym(5));
  EXPECT_EQ(very_different(s5, s5.id("[3^1,2^1]"), s5.id("[2^1,1^3]")), Tri::False);
  const auto s6 = ClassTable::from_group(sym(6));
  const std::vector<std::string> four = {"[6^1]", "[5^1,1^1]", "[4^1,2^1]", "[2^1,1^4]"};
  for (std::size_t i = 0; i < four.size(); ++i)
    for (std::size_t j = i + 1; j < four.size(); ++j)
      EXPECT_EQ(very_different(s6, s6.id(four[i]), s6.id(four[j])), Tri::True) << four[i] << " " << four[j];
  const auto p19 = ClassTable::from_group(psl2(19));
  EXPECT_EQ(very_different(p19, p19.id("19A"), p19.id("19B")), Tri::False);
  EXPECT_EQ(very_different(p19, p19.id("2A"), p19.id("3A")), Tri::True);
}

TEST(ClassTable, TuplePrecedence) {
  const auto s6 = table_of(sym(6));
  EXPECT_EQ(tuple_prec(ClassTuple::from_names(s6, {"[6^1]"}), ClassTuple::from_names(s6, {"[3^2]", "[2^3]"})).holds,
            Tri::True);
  EXPECT_EQ(tuple_prec(ClassTuple::from_names(s6, {"[3^2]"}), ClassTuple::from_names(s6, {"[6^1]"})).holds, Tri::False);
  const auto s4 = table_of(sym(4));
  const auto r = tuple_prec(ClassTuple::from_names(s4, {"[4^1]", "[3^1,1^1]", "[2^1,1^2]"}),
                            ClassTuple::from_names(s4, {"[2^2]", "[3^1,1^1]", "[2^1,1^2]", "[4^1]"}));
  EXPECT_EQ(r.holds, Tri::True);
  EXPECT_EQ(r.witness[0], std::optional<std::size_t>(0));
  EXPECT_THROW(tuple_prec(ClassTuple::from_names(s4, {"[4^1]"}), ClassTuple::from_names(s6, {"[6^1]"})), Error);
}

TEST(ClassTable, MatchedPrecedenceIsPositional) {
  const auto s6 = table_of(sym(6));
  const auto cf = ClassTuple::from_names(s6, {"[6^1]", "[5^1,1^1]"});
  EXPECT_EQ(matched_prec(cf, ClassTuple::from_names(s6, {"[5^1,1^1]", "[2^3]"})).holds, Tri::True);
  EXPECT_EQ(matched_prec(cf, ClassTuple::from_names(s6, {"[2^3]", "[3^2]"})).holds, Tri::False);
  EXPECT_EQ(tuple_prec(cf, ClassTuple::from_names(s6, {"[2^3]", "[3^2]"})).holds, Tri::True);
}

TEST(ClassTable, IdentityRejectedInTuples) {
  const auto s4 = table_of(sym(4));
  EXPECT_THROW(ClassTuple::from_names(s4, {"[1^4]"}), Error);
  EXPECT_THROW(ClassTuple::from_names(s4, {"[5^1]"}), Error);
}

TEST(Declared, MonsterSnippet) {
  const auto t = std::make_shared<const ClassTable>(ClassTable::from_declaration(monster_json()));
  EXPECT_EQ(t->source(), TableSource::Declared);
  EXPECT_EQ(t->size(), 10u);
  EXPECT_EQ(t->group_order().str(), "808017424794512875886459904961710757005754368000000000");
  const auto l1 = ClassTuple::from_names(t, {"2A", "3B", "29A"});
  const auto l2 = ClassTuple::from_names(t, {"2A", "3C", "38A"});
  EXPECT_EQ(tuple_prec(l1, l2).holds, Tri::False);
  EXPECT_EQ(tuple_prec(l2, l1).holds, Tri::False);
  EXPECT_EQ(t->power(t->id("87A"), 3), t->id("29A"));
  EXPECT_EQ(very_different(*t, t->id("29A"), t->id("38A")), Tri::True);
  EXPECT_EQ(t->in_closure(t->id("38A"), t->id("19A")), Tri::True);
  EXPECT_EQ(t->in_closure(t->id("3B"), t->id("2A")), Tri::False);
}

TEST(Declared, PartialClosuresAreUnknown) {
  const auto t = ClassTable::from_declaration(small_declaration());
  EXPECT_FALSE(t.is_complete());
  EXPECT_EQ(t.in_closure(t.id("5A"), t.id("5A")), Tri::True);
  EXPECT_EQ(t.in_closure(t.id("5A"), t.id("2A")), Tri::False);
  EXPECT_EQ(t.in_closure(t.id("6A"), t.id("5A")), Tri::False);
  EXPECT_EQ(very_different(t, t.id("2A"), t.id("3A")), Tri::False);
  EXPECT_EQ(very_different(t, t.id("2A"), t.id("5A")), Tri::Unknown);
  const auto round = ClassTable::from_declaration(t.to_json());
  EXPECT_EQ(round.to_json(), t.to_json());
}

TEST(Declared, ValidationRules) {
  auto expect_inconsistent = [](const json& j) {
    try {
      ClassTable::from_declaration(j);
      FAIL() << j.dump();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InconsistentDeclaration) << e.what();
    }
  };
  json j = small_declaration();
  j["classes"][3]["z_closure"] = {"6A", "3A", "2A"};
  expect_inconsistent(j);
  j = small_declaration();
  j["classes"][3]["z_closure"] = {"6A", "5A", "1A"};
  expect_inconsistent(j);
  j = small_declaration();
  j["classes"][3]["power_map"]["2"] = "2A";
  expect_inconsistent(j);
  j = small_declaration();
  j["classes"][0]["order"] = 2;
  expect_inconsistent(j);
  j = small_declaration();
  j["classes"][3]["z_closure"] = {"6A", "3A", "1A"};
  expect_inconsistent(j);
  j = monster_json();
  j["classes"][8]["z_closure"] = {"87A", "87B", "3A", "1A"};
  j["classes"][8]["complete"] = false;
  EXPECT_THROW(ClassTable::from_declaration(j), Error);
  j["classes"][8].erase("power_map");
  EXPECT_NO_THROW(ClassTable::from_declaration(j));
}
