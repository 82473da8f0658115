#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "bmlab/catalog.hpp"
#include "bmlab/fixtures.hpp"
#include "bmlab/table1.hpp"
#include "support.hpp"

using namespace bmlab;

namespace {

bool monotone(CellRow const& c) {
  auto const plus = [&](int i) { return c[i] == Cell::plus; };
  return (!plus(3) || plus(2)) && (!plus(2) || (plus(0) && plus(1)));
}

}  // namespace

TEST_SUITE("catalog-report") {

TEST_CASE("fixtures load and validate") {
  auto const fx = load_fixtures();
  REQUIRE(fx.count("F35"));
  CHECK(fx.at("F35").front().order() == 6);
  CHECK(fx.at("F38").front().order() == 5);
  CHECK(classify(fx.at("F38").front()).left_unit == Element{0});
  CHECK(fx.at("F48").front().order() == 5);
  CHECK(fixture_claims().size() == 17);
  for (auto const& c : fixture_claims()) CHECK(fx.count(c.label) == 1);

  // Shared grids are stored once and appear under each owning label.
  for (char const* l : {"F16", "F36", "F42", "F44", "F49"}) CHECK(fx.at(l) == fx.at("F7"));
  for (char const* l : {"F15", "F37", "F46"}) CHECK(fx.at(l) == fx.at("F9"));
  CHECK(fx.at("F43") == fx.at("F45"));
  CHECK(fx.at("F7").front() == bmtest::table(bmtest::kF7));
  CHECK(fx.at("F9").front() == bmtest::table(bmtest::kF9));
  CHECK(fx.at("F19").front() == bmtest::table(bmtest::kF19));
}

TEST_CASE("fixture certificates") {
  auto const fx = load_fixtures();
  auto const f9 = verify_fixture("F9", fx);
  CHECK(f9.sat.holds);
  CHECK_FALSE(f9.profile.left_unit);
  CHECK_FALSE(f9.profile.right_unit);

  auto const f19 = verify_fixture("F19", fx);
  CHECK(f19.profile.right_unit);
  CHECK_FALSE(f19.profile.left_unit);

  auto const f38 = verify_fixture("F38", fx);
  CHECK(f38.profile.is_loop);
  CHECK_FALSE(f38.profile.is_group);

  for (auto const& c : fixture_claims()) {
    if (c.label == "F41") continue;
    CHECK_NOTHROW(verify_fixture(c.label, fx));
  }
  CHECK_THROWS_AS(verify_fixture("F1", fx), FixtureContradictsPaper);
}

TEST_CASE("the F41 grid as transcribed satisfies F53, not F41") {
  auto const fx = load_fixtures();
  auto const& q = fx.at("F41").front();
  CHECK_FALSE(satisfies(q, catalog_entry("F41").identity).holds);
  CHECK(satisfies(q, catalog_entry("F53").identity).holds);
  CHECK(satisfies(parastrophe12(q), catalog_entry("F41").identity).holds);
  try {
    verify_fixture("F41", fx);
    FAIL("expected FixtureContradictsPaper");
  } catch (FixtureContradictsPaper const& e) {
    CHECK(std::string(e.what()).find("transposed grid satisfies it") != std::string::npos);
  }
}

TEST_CASE("invalid fixture files are rejected") {
  auto const dir = std::filesystem::temp_directory_path() / "bmlab_bad_fixtures";
  std::filesystem::remove_all(dir);
  std::filesystem::copy(default_fixture_dir(), dir);
  std::ofstream(dir / "f19.qg") << "order 3\n0 0 1\n1 2 0\n2 1 0\n";
  CHECK_THROWS_AS(load_fixtures(dir.string()), FixtureInvalid);
  std::filesystem::remove(dir / "f19.qg");
  CHECK_THROWS_AS(load_fixtures(dir.string()), FixtureInvalid);
  std::filesystem::remove_all(dir);
}

TEST_CASE("expected table") {
  auto const rows = expected_table1();
  CHECK(rows.size() == 60);
  std::set<std::string> labels;
  for (auto const& r : rows) {
    labels.insert(r.label);
    CHECK(monotone(r.cells));
  }
  CHECK(labels.size() == 60);
  CHECK(rows.front().label == "F1");
  CHECK(expected_row("F2").type.double_slots == std::array<int, 2>{3, 4});
  CHECK(expected_row("F41").cells == CellRow{Cell::plus, Cell::plus, Cell::plus, Cell::minus});
  CHECK_THROWS_AS(expected_row("F0"), UnknownLabel);
}

TEST_CASE("lemma partners") {
  CHECK(lemma_partner("F1") == "F3");
  CHECK(lemma_partner("F3") == "F1");
  CHECK(lemma_partner("F6") == "F6");
  CHECK(lemma_partner("F55") == "F50");
  CHECK(lemma_partner("F99").empty());
}

TEST_CASE("reproduce a few rows") {
  Table1Options o;
  o.max_exhaustive_order = 3;
  o.labels = {"F1", "F7", "F9", "F19", "F35", "F40", "F41"};
  auto const report = reproduce_table1(o);
  REQUIRE(report.rows.size() == o.labels.size());
  for (auto const& r : report.rows) {
    INFO(r.label);
    CHECK(r.computed == r.expected);
    CHECK(monotone(r.computed));
    CHECK(r.type_match);
    CHECK(r.parastrophe_match);
    CHECK(r.exhaustive_orders == std::vector<std::size_t>{1, 2, 3});
    for (auto const& w : r.witnesses) {
      CHECK(satisfies(w.table, catalog_entry(r.label).identity).holds);
      for (auto c : w.covers) CHECK_FALSE(column_holds(c, classify(w.table)));
    }
  }
  CHECK(report.cell_matches == report.cell_total);
  CHECK(report.lemma_matches == 32);
  CHECK(report.slot_matches == o.labels.size() - 1);  // F40

  std::set<std::string> kinds;
  for (auto const& d : report.discrepancies) kinds.insert(d.label + "/" + d.kind);
  CHECK(kinds == std::set<std::string>{"F40/slots", "F41/fixture"});
  CHECK(report.hard_discrepancies() == 1);

  auto const j = to_json(report);
  CHECK(j["rows"].size() == o.labels.size());
  auto const& row = *std::find_if(j["rows"].begin(), j["rows"].end(),
                                  [](nlohmann::json const& r) { return r["label"] == "F7"; });
  CHECK(row["label"] == "F7");
  CHECK(row["expected"]["e"] == "-");
  CHECK(row["witness"]["order"] == 3);
  CHECK(row["parastrophe"]["expected"] == "F8");
  CHECK(j["discrepancies"].size() == 2);

  auto const text = render_text(report);
  CHECK(text.find("F35") != std::string::npos);
  CHECK(text.find("(printed {1,2})") != std::string::npos);
}

TEST_CASE("rows without a small witness fall back to constructions") {
  Table1Options o;
  o.max_exhaustive_order = 2;
  o.witness_order_cap = 2;
  o.labels = {"F17"};
  auto with = reproduce_table1(o);
  REQUIRE(with.rows.size() == 1);
  CHECK(with.rows[0].computed[3] == Cell::minus);
  CHECK(with.rows[0].witnesses.front().table.order() == 12);

  o.use_constructions = false;
  auto const without = reproduce_table1(o);
  CHECK(without.rows[0].computed[3] == Cell::unknown);
  CHECK(without.cell_matches == 3);
}

}  // TEST_SUITE
