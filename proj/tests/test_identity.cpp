#include <doctest.h>

#include <set>
#include <string>

#include "bmlab/catalog.hpp"
#include "bmlab/identity.hpp"
#include "bmlab/table1.hpp"

using namespace bmlab;

namespace {

std::string perm_of(std::string_view side) { return execution_perm(parse_term(side)).to_string(); }

}  // namespace

TEST_SUITE("identity-lang") {

TEST_CASE("parse_identity recognises catalog entries") {
  auto const f1 = parse_identity("xy.zx = (xy.z)x");
  CHECK(f1.label == "F1");
  CHECK(f1 == catalog_entry("F1").identity);
  CHECK(parse_identity("xy.zx = x(y.zx)").label == "F3");
  CHECK(parse_identity("  xy . zx=(xy.z)x ").label == "F1");
  // Renamed and with sides exchanged.
  CHECK(parse_identity("(yx.z)y = yx.zy").label == "F1");
}

TEST_CASE("grammar") {
  auto const xyz = parse_term("xyz");
  CHECK(xyz == parse_term("(xy)z"));
  CHECK(parse_term("x.y.z") == parse_term("(x.y).z"));
  CHECK(parse_term("xy.zx") == parse_term("(xy)(zx)"));
  CHECK(parse_term("x.yz") == parse_term("x(yz)"));
  CHECK(parse_term("x(y.zx)") == parse_term("x(y(zx))"));
  CHECK(parse_term("(xy.z)x") == parse_term("((xy)z)x"));
  CHECK(xyz.leaf_count() == 3);
  CHECK(xyz.product_count() == 2);
  CHECK(parse_term("xy.zx").word() == "xyzx");
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_identity("xy.zx = (xy.z");
    FAIL("expected SyntaxError");
  } catch (SyntaxError const& e) {
    CHECK(e.position() == 13);
  }
  CHECK_THROWS_AS(parse_identity("xy.zw = (xy.z)x"), SyntaxError);
  CHECK_THROWS_AS(parse_identity("xy.zx"), SyntaxError);
  CHECK_THROWS_AS(parse_identity("xy.zx = (xy.z)x = x"), SyntaxError);
  CHECK_THROWS_AS(parse_identity("= x"), SyntaxError);
  CHECK_THROWS_AS(parse_term("x."), SyntaxError);
  CHECK_THROWS_AS(parse_term(""), SyntaxError);
  CHECK_THROWS_AS(parse_term("x)"), SyntaxError);
}

TEST_CASE("shape violations") {
  auto reason = [](std::string_view text) {
    try {
      parse_identity(text);
    } catch (NotBolMoufang const& e) {
      return e.reason();
    }
    FAIL("expected NotBolMoufang");
    return NotBolMoufang::Reason::WrongLeafCount;
  };
  CHECK(reason("xy.zx = xy.zy") == NotBolMoufang::Reason::LettersDiffer);
  CHECK(reason("xy.z = x.yz") == NotBolMoufang::Reason::WrongLeafCount);
  CHECK(reason("xy.zy = xy.zx") == NotBolMoufang::Reason::LettersDiffer);
  CHECK(reason("xx.xy = x(x.xy)") == NotBolMoufang::Reason::DuplicateCountWrong);
  CHECK(reason("xy.zx = (yx.z)x") == NotBolMoufang::Reason::OrderDiffers);
  CHECK(reason("xy.yx = (xy.y)x") == NotBolMoufang::Reason::DuplicateCountWrong);
}

TEST_CASE("catalog") {
  CHECK(catalog().size() == 60);
  auto const& f17 = catalog_entry("F17");
  CHECK(f17.text == "(xy.x)z = x(y.xz)");
  CHECK(f17.abbrev == "left Moufang");
  auto const& f37 = catalog_entry("f37");
  CHECK(f37.text == "(yx.x)z = y(x.xz)");
  CHECK(f37.abbrev == "C identity");
  CHECK_THROWS_AS(catalog_entry("F61"), UnknownLabel);
  CHECK_THROWS_AS(catalog_entry("G1"), UnknownLabel);

  std::set<std::string> labels;
  for (auto const& e : catalog()) {
    labels.insert(e.label);
    CHECK(e.identity.label == e.label);
    CHECK_NOTHROW(check_bol_moufang(e.identity));
  }
  CHECK(labels.size() == 60);
  for (int i = 1; i <= 60; ++i) CHECK(labels.count("F" + std::to_string(i)) == 1);
}

TEST_CASE("catalog entries are pairwise inequivalent") {
  auto const cat = catalog();
  for (std::size_t i = 0; i < cat.size(); ++i) {
    for (std::size_t j = i + 1; j < cat.size(); ++j) {
      CHECK_FALSE(equivalent(cat[i].identity, cat[j].identity));
    }
  }
}

TEST_CASE("print and parse round-trip") {
  for (auto const& e : catalog()) {
    CHECK(to_string(e.identity) == e.text);
    CHECK(parse_identity(to_string(e.identity)) == e.identity);
  }
}

TEST_CASE("execution permutations") {
  CHECK(perm_of("(xy.z)x") == "ε");
  CHECK(perm_of("xy.zx") == "(23)");
  CHECK(perm_of("x(yz.x)") == "(132)");
  CHECK(perm_of("x(y.zx)") == "(13)");
  CHECK(perm_of("(x.yz)x") == "(12)");
  CHECK_THROWS_AS(execution_perm(parse_term("xy.z")), MalformedSide);

  std::set<std::string> seen;
  for (auto const& e : catalog()) {
    seen.insert(execution_perm(e.identity.lhs).to_string());
    seen.insert(execution_perm(e.identity.rhs).to_string());
  }
  CHECK(seen == std::set<std::string>{"ε", "(12)", "(23)", "(13)", "(132)"});
  CHECK(seen.count("(123)") == 0);
}

TEST_CASE("permutation notation") {
  for (auto const* s : {"ε", "(12)", "(23)", "(13)", "(132)", "(123)"}) {
    CHECK(Permutation::parse(s).to_string() == s);
  }
  CHECK(Permutation::parse("e") == Permutation::identity());
  CHECK(Permutation::parse("(132)").image == std::array<std::uint8_t, 3>{3, 1, 2});
  CHECK_THROWS(Permutation::parse("(14)"));
  CHECK_THROWS(Permutation::parse("(1"));
}

TEST_CASE("identity types") {
  auto type = [](char const* label) { return identity_type(catalog_entry(label).identity); };
  CHECK(type("F1").to_string() == "(23) = ε, {1,4}");
  CHECK(type("F11").to_string() == "(23) = ε, {1,3}");
  CHECK(type("F42").to_string() == "(23) = ε, {1,2}");
  CHECK(type("F4").to_string() == "(23) = (132), {1,4}");
  CHECK(type("F3").to_string() == "(23) = (13), {1,4}");
}

TEST_CASE("canonicalize") {
  auto const id = parse_identity("yx.zy = (yx.z)y");
  CHECK(canonicalize(id) == catalog_entry("F1").identity);
  for (auto const& e : catalog()) {
    auto const c = canonicalize(e.identity);
    CHECK(canonicalize(c) == c);
    CHECK(equivalent(c, e.identity));
    CHECK(c.lhs.word().front() == 'x');
  }
}

TEST_CASE("parastrophe of identities") {
  auto star = [](char const* label) { return parastrophe_identity(catalog_entry(label).identity).label; };
  CHECK(star("F1") == "F3");
  CHECK(star("F6") == "F6");
  CHECK(star("F41") == "F53");
  CHECK(star("F4") == "F2");

  for (auto const& e : catalog()) {
    auto const once = parastrophe_identity(e.identity);
    REQUIRE(once.label);
    CHECK(equivalent(parastrophe_identity(once), e.identity));
    CHECK(parastrophe_identity(once).label == e.label);
  }
}

TEST_CASE("the 32 printed parastrophe equalities") {
  CHECK(parastrophe_lemma().size() == 32);
  std::set<std::string> covered;
  for (auto const& [a, b] : parastrophe_lemma()) {
    CHECK(parastrophe_identity(catalog_entry(a).identity).label == std::string(b));
    covered.insert(a);
    covered.insert(b);
  }
  CHECK(covered.size() == 60);
}

TEST_CASE("catalog json") {
  auto const j = catalog_json();
  REQUIRE(j.size() == 60);
  CHECK(j[0]["label"] == "F1");
  CHECK(j[0]["lhs_perm"] == "(23)");
  CHECK(j[0]["rhs_perm"] == "ε");
  CHECK(j[0]["double_slots"] == nlohmann::json::array({1, 4}));
}

TEST_CASE("resolve_identity") {
  CHECK(resolve_identity("F7") == catalog_entry("F7").identity);
  CHECK(resolve_identity("f7").label == "F7");
  CHECK(resolve_identity("xy.zx = (xy.z)x").label == "F1");
  CHECK_THROWS_AS(resolve_identity("F99"), UnknownLabel);
}

}  // TEST_SUITE
