// Recomputes the unit classification of all sixty identities and diffs it
// against the published table.

#ifndef BMLAB_TABLE1_HPP
#define BMLAB_TABLE1_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bmlab/cayley_table.hpp"
#include "bmlab/fixtures.hpp"
#include "bmlab/identity.hpp"
#include "bmlab/model_finder.hpp"

namespace bmlab {

enum class Cell { plus, minus, unknown };

char to_char(Cell c);  // '+', '-', '?'

// Columns f, e, Lo., Gr. in that order; indices match UnitColumn.
using CellRow = std::array<Cell, 4>;

struct ExpectedRow {
  std::string label;
  CellRow cells;
  IdentityType type;  // as printed, including any misprints
};

// Transcription of the table, in its row order.
std::span<ExpectedRow const> expected_table1();
ExpectedRow const& expected_row(std::string const& label);

// The 32 printed equalities (F)* = G, left to right as printed.
std::span<std::pair<char const*, char const*> const> parastrophe_lemma();
// Partner of `label` under the printed lemma (symmetric closure).
std::string lemma_partner(std::string const& label);

Requirement column_requirement(UnitColumn c);

struct RowWitness {
  CayleyTable table;
  std::string source;  // fixture, fixture-parastrophe, census, search, construction
  std::vector<UnitColumn> covers;
};

struct Discrepancy {
  std::string label;
  std::string kind;  // cell, type, slots, parastrophe, fixture
  std::string detail;
  bool suspected_typo = false;
};

struct RowReport {
  std::string label;
  std::string identity;
  std::string abbrev;
  CellRow expected{};
  CellRow computed{};
  std::vector<RowWitness> witnesses;
  std::vector<std::size_t> exhaustive_orders;
  std::vector<std::uint64_t> satisfying_counts;  // index 0 is order 1
  IdentityType printed_type;
  IdentityType computed_type;
  bool type_match = false;
  bool slot_match = false;
  std::string parastrophe_expected;
  std::string parastrophe_computed;
  bool parastrophe_match = false;
};

struct Table1Options {
  std::size_t max_exhaustive_order = 4;
  std::size_t witness_order_cap = 6;
  std::string fixture_dir = default_fixture_dir();
  std::uint64_t budget = kDefaultBudget;  // per census and per search
  unsigned threads = 1;
  // Rows whose plus cells are verified up to a higher order, e.g. {"F1", 5}.
  std::map<std::string, std::size_t> spot_orders;
  // Fall back to closed-form loops (Chein doubles) when nothing smaller is found.
  bool use_constructions = true;
  // Restrict to these labels; empty means all sixty.
  std::vector<std::string> labels;
};

struct Table1Report {
  std::vector<RowReport> rows;
  std::vector<Discrepancy> discrepancies;
  std::vector<FixtureCertificate> fixtures;
  std::size_t cell_matches = 0;
  std::size_t cell_total = 0;
  std::size_t type_matches = 0;
  std::size_t slot_matches = 0;
  std::size_t lemma_matches = 0;  // of the 32 printed equalities
  std::size_t max_exhaustive_order = 0;

  // Discrepancies not explained as suspected misprints.
  std::size_t hard_discrepancies() const;
};

// Never throws on disagreement; mismatches become report content.
Table1Report reproduce_table1(Table1Options const& options);

nlohmann::json to_json(Table1Report const& report);
std::string render_text(Table1Report const& report);

}  // namespace bmlab

#endif  // BMLAB_TABLE1_HPP
