#include "bmlab/table1.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "bmlab/catalog.hpp"
#include "bmlab/constructions.hpp"

namespace bmlab {

namespace {

struct RawRow {
  char const* label;
  char const* cells;  // f e Lo. Gr.
  char const* lhs_perm;
  char const* rhs_perm;
  std::array<int, 2> slots;
};

// Transcribed as printed, misprints included.
constexpr RawRow kExpected[] = {
    {"F1", "++++", "(23)", "ε", {1, 4}},
    {"F3", "++++", "(23)", "(13)", {1, 4}},
    {"F5", "++++", "ε", "(12)", {1, 4}},
    {"F10", "++++", "(13)", "(132)", {1, 4}},
    {"F11", "++++", "(23)", "ε", {1, 3}},
    {"F12", "++++", "(23)", "(12)", {1, 3}},
    {"F14", "++++", "(23)", "(13)", {1, 3}},
    {"F18", "++++", "(12)", "(132)", {1, 3}},
    {"F20", "++++", "(132)", "(13)", {1, 3}},
    {"F21", "++++", "(23)", "ε", {2, 4}},
    {"F23", "++++", "(23)", "(132)", {2, 4}},
    {"F24", "++++", "(23)", "(13)", {2, 4}},
    {"F25", "++++", "ε", "(12)", {2, 4}},
    {"F28", "++++", "(12)", "(132)", {2, 4}},
    {"F31", "++++", "(23)", "ε", {2, 3}},
    {"F32", "++++", "(23)", "(12)", {2, 3}},
    {"F33", "++++", "(23)", "(132)", {2, 3}},
    {"F34", "++++", "(23)", "(13)", {2, 3}},
    {"F47", "++++", "(12)", "(132)", {1, 2}},
    {"F50", "++++", "(13)", "(132)", {1, 2}},
    {"F55", "++++", "ε", "(12)", {3, 4}},
    {"F58", "++++", "(12)", "(132)", {3, 4}},
    {"F4", "+++-", "(23)", "(132)", {3, 4}},
    {"F2", "+++-", "(23)", "(12)", {3, 4}},
    {"F6", "+++-", "ε", "(13)", {1, 4}},
    {"F13", "+++-", "(23)", "(132)", {1, 3}},
    {"F17", "+++-", "ε", "(13)", {1, 3}},
    {"F22", "+++-", "(23)", "(12)", {2, 4}},
    {"F27", "+++-", "ε", "(13)", {2, 4}},
    {"F38", "+++-", "(12)", "(132)", {2, 3}},
    {"F41", "+++-", "(23)", "(12)", {1, 2}},
    {"F53", "+++-", "(23)", "(132)", {3, 4}},
    {"F7", "+---", "ε", "(132)", {1, 4}},
    {"F16", "+---", "ε", "(132)", {1, 3}},
    {"F26", "+---", "ε", "(132)", {2, 4}},
    {"F36", "+---", "ε", "(132)", {2, 3}},
    {"F40", "+---", "(132)", "(13)", {1, 2}},
    {"F42", "+---", "(23)", "ε", {1, 2}},
    {"F43", "+---", "(23)", "(13)", {1, 2}},
    {"F44", "+---", "(23)", "(132)", {1, 2}},
    {"F45", "+---", "(12)", "ε", {1, 2}},
    {"F48", "+---", "ε", "(13)", {1, 2}},
    {"F49", "+---", "ε", "(132)", {1, 2}},
    {"F8", "-+--", "(12)", "(13)", {1, 4}},
    {"F19", "-+--", "(12)", "(13)", {1, 3}},
    {"F29", "-+--", "(12)", "(13)", {2, 4}},
    {"F35", "-+--", "ε", "(12)", {2, 3}},
    {"F39", "-+--", "(12)", "(13)", {2, 3}},
    {"F51", "-+--", "(23)", "ε", {3, 4}},
    {"F52", "-+--", "(23)", "(12)", {3, 4}},
    {"F54", "-+--", "(23)", "(13)", {3, 4}},
    {"F57", "-+--", "ε", "(13)", {3, 4}},
    {"F59", "-+--", "(12)", "(13)", {3, 4}},
    {"F60", "-+--", "(132)", "(13)", {3, 4}},
    {"F9", "----", "(12)", "(132)", {1, 4}},
    {"F15", "----", "ε", "(12)", {1, 3}},
    {"F30", "----", "(132)", "(13)", {2, 4}},
    {"F37", "----", "ε", "(13)", {2, 3}},
    {"F46", "----", "(12)", "(13)", {1, 2}},
    {"F56", "----", "ε", "(132)", {3, 4}},
};

constexpr std::pair<char const*, char const*> kLemma[] = {
    {"F1", "F3"},   {"F2", "F4"},   {"F5", "F10"},  {"F6", "F6"},   {"F7", "F8"},
    {"F9", "F9"},   {"F11", "F24"}, {"F12", "F23"}, {"F13", "F22"}, {"F14", "F21"},
    {"F15", "F30"}, {"F16", "F29"}, {"F17", "F27"}, {"F18", "F28"}, {"F19", "F26"},
    {"F20", "F25"}, {"F31", "F34"}, {"F32", "F33"}, {"F35", "F40"}, {"F36", "F39"},
    {"F37", "F37"}, {"F38", "F38"}, {"F41", "F53"}, {"F42", "F54"}, {"F43", "F51"},
    {"F44", "F52"}, {"F45", "F60"}, {"F46", "F56"}, {"F47", "F58"}, {"F48", "F57"},
    {"F49", "F59"}, {"F50", "F55"},
};

std::vector<ExpectedRow> build_expected() {
  std::vector<ExpectedRow> rows;
  for (auto const& raw : kExpected) {
    ExpectedRow row{raw.label, {}, {}};
    for (int c = 0; c < 4; ++c) row.cells[c] = raw.cells[c] == '+' ? Cell::plus : Cell::minus;
    row.type = {Permutation::parse(raw.lhs_perm), Permutation::parse(raw.rhs_perm), raw.slots};
    rows.push_back(std::move(row));
  }
  return rows;
}

constexpr UnitColumn kColumns[] = {UnitColumn::left_unit, UnitColumn::right_unit,
                                   UnitColumn::loop, UnitColumn::group};
constexpr char const* kColumnNames[] = {"f", "e", "loop", "group"};

// Left-justifies to `width` display columns; counts UTF-8 code points so
// that ε takes one column.
std::string pad(std::string s, std::size_t width) {
  auto const cols = static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char ch) { return (static_cast<unsigned char>(ch) & 0xC0) != 0x80; }));
  if (cols < width) s.append(width - cols, ' ');
  return s;
}

std::string slots_string(std::array<int, 2> const& s) {
  return "{" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "}";
}

// Closed-form candidates for cells where no small witness exists.
std::vector<std::pair<std::string, CayleyTable>> const& constructions() {
  static std::vector<std::pair<std::string, CayleyTable>> const list = {
      {"construction M(S3,2)", chein_double(dihedral_group(3))},
      {"construction M(Q8,2)", chein_double(quaternion_group())},
  };
  return list;
}

}  // namespace

char to_char(Cell c) {
  switch (c) {
    case Cell::plus: return '+';
    case Cell::minus: return '-';
    case Cell::unknown: return '?';
  }
  return '?';
}

std::span<ExpectedRow const> expected_table1() {
  static std::vector<ExpectedRow> const rows = build_expected();
  return rows;
}

ExpectedRow const& expected_row(std::string const& label) {
  for (auto const& r : expected_table1()) {
    if (r.label == label) return r;
  }
  throw UnknownLabel(label);
}

std::span<std::pair<char const*, char const*> const> parastrophe_lemma() { return kLemma; }

std::string lemma_partner(std::string const& label) {
  for (auto const& [a, b] : kLemma) {
    if (label == a) return b;
    if (label == b) return a;
  }
  return {};
}

Requirement column_requirement(UnitColumn c) {
  switch (c) {
    case UnitColumn::left_unit: return Requirement::no_left_unit;
    case UnitColumn::right_unit: return Requirement::no_right_unit;
    case UnitColumn::loop: return Requirement::not_loop;
    case UnitColumn::group: return Requirement::not_associative;
  }
  return Requirement::always;
}

std::size_t Table1Report::hard_discrepancies() const {
  return static_cast<std::size_t>(std::count_if(
      discrepancies.begin(), discrepancies.end(), [](Discrepancy const& d) { return !d.suspected_typo; }));
}

namespace {

bool usable(CayleyTable const& table, Identity const& id, UnitColumn column) {
  return satisfies(table, id).holds &&
         requirement_met(column_requirement(column), classify(table));
}

std::optional<RowWitness> find_witness(CatalogEntry const& entry, UnitColumn column,
                                       FixtureMap const& fixtures, Census const& census,
                                       Table1Options const& options) {
  auto const& id = entry.identity;
  if (auto it = fixtures.find(entry.label); it != fixtures.end()) {
    for (auto const& t : it->second) {
      if (usable(t, id, column)) return RowWitness{t, "fixture", {}};
    }
  }
  if (auto it = fixtures.find(lemma_partner(entry.label)); it != fixtures.end()) {
    for (auto const& t : it->second) {
      auto const transposed = parastrophe12(t);
      if (usable(transposed, id, column)) {
        return RowWitness{transposed, "fixture-parastrophe " + it->first, {}};
      }
    }
  }
  if (auto const& c = census.counterexample[static_cast<int>(column)]) {
    return RowWitness{*c, "census", {}};
  }
  if (options.witness_order_cap > options.max_exhaustive_order) {
    SearchQuery q;
    q.identity = id;
    q.requirement = column_requirement(column);
    q.orders = {options.max_exhaustive_order + 1, options.witness_order_cap};
    q.budget = options.budget;
    q.incremental = true;
    q.threads = options.threads;
    auto const r = find(q);
    if (r.witness) return RowWitness{r.witness->table, "search", {}};
  }
  if (options.use_constructions) {
    for (auto const& [name, table] : constructions()) {
      if (usable(table, id, column)) return RowWitness{table, name, {}};
    }
  }
  return std::nullopt;
}

RowReport reproduce_row(CatalogEntry const& entry, ExpectedRow const& expected,
                        FixtureMap const& fixtures, Table1Options const& options,
                        std::vector<Discrepancy>& discrepancies) {
  RowReport row;
  row.label = entry.label;
  row.identity = entry.text;
  row.abbrev = entry.abbrev;
  row.expected = expected.cells;

  std::size_t max_order = options.max_exhaustive_order;
  if (auto it = options.spot_orders.find(entry.label); it != options.spot_orders.end()) {
    max_order = std::max(max_order, it->second);
  }
  auto const census = bmlab::census(entry.identity, max_order, options.budget, options.threads);
  for (auto const& o : census.orders) {
    row.satisfying_counts.push_back(o.satisfying);
    if (o.exhaustive) row.exhaustive_orders.push_back(o.order);
  }

  for (int c = 0; c < 4; ++c) {
    auto const column = kColumns[c];
    bool covered = false;
    for (auto& w : row.witnesses) {
      if (usable(w.table, entry.identity, column)) {
        w.covers.push_back(column);
        covered = true;
        break;
      }
    }
    if (covered) {
      row.computed[c] = Cell::minus;
      continue;
    }
    if (expected.cells[c] == Cell::minus) {
      if (auto w = find_witness(entry, column, fixtures, census, options)) {
        w->covers.push_back(column);
        row.witnesses.push_back(std::move(*w));
        row.computed[c] = Cell::minus;
      } else {
        row.computed[c] = Cell::unknown;
      }
    } else if (auto const& ce = census.counterexample[c]) {
      row.witnesses.push_back({*ce, "census", {column}});
      row.computed[c] = Cell::minus;
    } else {
      row.computed[c] = census.budget_exhausted ? Cell::unknown : Cell::plus;
    }
  }
  for (int c = 0; c < 4; ++c) {
    if (row.computed[c] != row.expected[c]) {
      std::string detail = std::string("column ") + kColumnNames[c] + ": printed " +
                           to_char(row.expected[c]) + ", computed " + to_char(row.computed[c]);
      if (row.computed[c] == Cell::unknown) detail += " (no witness within limits)";
      discrepancies.push_back({entry.label, "cell", detail, false});
    }
  }

  row.printed_type = expected.type;
  row.computed_type = identity_type(entry.identity);
  row.type_match = row.printed_type.lhs_perm == row.computed_type.lhs_perm &&
                   row.printed_type.rhs_perm == row.computed_type.rhs_perm;
  row.slot_match = row.printed_type.double_slots == row.computed_type.double_slots;
  if (!row.type_match) {
    discrepancies.push_back({entry.label, "type",
                             "printed " + row.printed_type.to_string() + ", computed " +
                                 row.computed_type.to_string(),
                             false});
  }
  if (!row.slot_match) {
    discrepancies.push_back(
        {entry.label, "slots",
         "printed " + slots_string(row.printed_type.double_slots) + " but '" + entry.text +
             "' has its doubled letter at " + slots_string(row.computed_type.double_slots) +
             "; suspected misprint",
         true});
  }

  row.parastrophe_expected = lemma_partner(entry.label);
  row.parastrophe_computed = parastrophe_identity(entry.identity).label.value_or("");
  row.parastrophe_match = row.parastrophe_expected == row.parastrophe_computed;
  if (!row.parastrophe_match) {
    discrepancies.push_back({entry.label, "parastrophe",
                             "lemma gives " + row.parastrophe_expected + ", computed " +
                                 (row.parastrophe_computed.empty() ? "no catalog entry"
                                                                   : row.parastrophe_computed),
                             false});
  }
  return row;
}

}  // namespace

Table1Report reproduce_table1(Table1Options const& options) {
  Table1Report report;
  report.max_exhaustive_order = options.max_exhaustive_order;

  FixtureMap fixtures;
  try {
    fixtures = load_fixtures(options.fixture_dir);
  } catch (FixtureInvalid const& e) {
    report.discrepancies.push_back({"", "fixture", e.what(), false});
  }
  for (auto const& [label, tables] : fixtures) {
    try {
      report.fixtures.push_back(verify_fixture(label, fixtures));
    } catch (FixtureContradictsPaper const& e) {
      report.discrepancies.push_back({label, "fixture", e.what(), false});
    }
  }

  for (auto const& expected : expected_table1()) {
    if (!options.labels.empty() &&
        std::find(options.labels.begin(), options.labels.end(), expected.label) ==
            options.labels.end()) {
      continue;
    }
    auto const& entry = catalog_entry(expected.label);
    auto row = reproduce_row(entry, expected, fixtures, options, report.discrepancies);
    for (int c = 0; c < 4; ++c) {
      ++report.cell_total;
      report.cell_matches += row.computed[c] == row.expected[c];
    }
    report.type_matches += row.type_match;
    report.slot_matches += row.slot_match;
    report.rows.push_back(std::move(row));
  }

  for (auto const& [a, b] : kLemma) {
    if (parastrophe_identity(catalog_entry(a).identity).label == std::optional<std::string>(b)) {
      ++report.lemma_matches;
    }
  }
  return report;
}

namespace {

nlohmann::json cells_json(CellRow const& cells) {
  nlohmann::json j;
  for (int c = 0; c < 4; ++c) j[kColumnNames[c]] = std::string(1, to_char(cells[c]));
  return j;
}

nlohmann::json witness_json(RowWitness const& w) {
  auto covers = nlohmann::json::array();
  for (auto c : w.covers) covers.push_back(kColumnNames[static_cast<int>(c)]);
  return {{"order", w.table.order()},
          {"table", w.table.to_grid()},
          {"source", w.source},
          {"covers", covers}};
}

}  // namespace

nlohmann::json to_json(Table1Report const& report) {
  auto rows = nlohmann::json::array();
  for (auto const& r : report.rows) {
    auto witnesses = nlohmann::json::array();
    for (auto const& w : r.witnesses) witnesses.push_back(witness_json(w));
    rows.push_back({
        {"label", r.label},
        {"identity", r.identity},
        {"abbrev", r.abbrev},
        {"expected", cells_json(r.expected)},
        {"computed", cells_json(r.computed)},
        {"witness", r.witnesses.empty() ? nlohmann::json(nullptr) : witness_json(r.witnesses.front())},
        {"witnesses", witnesses},
        {"exhaustive_orders", r.exhaustive_orders},
        {"satisfying_counts", r.satisfying_counts},
        {"type", {{"printed", r.printed_type.to_string()}, {"computed", r.computed_type.to_string()}}},
        {"type_match", r.type_match},
        {"slot_match", r.slot_match},
        {"parastrophe",
         {{"expected", r.parastrophe_expected},
          {"computed", r.parastrophe_computed},
          {"match", r.parastrophe_match}}},
    });
  }
  auto discrepancies = nlohmann::json::array();
  for (auto const& d : report.discrepancies) {
    discrepancies.push_back({{"label", d.label},
                             {"kind", d.kind},
                             {"detail", d.detail},
                             {"suspected_typo", d.suspected_typo}});
  }
  auto fixtures = nlohmann::json::array();
  for (auto const& f : report.fixtures) fixtures.push_back(to_json(f));
  return {{"rows", rows},
          {"discrepancies", discrepancies},
          {"fixtures", fixtures},
          {"summary",
           {{"max_exhaustive_order", report.max_exhaustive_order},
            {"cell_matches", report.cell_matches},
            {"cell_total", report.cell_total},
            {"type_matches", report.type_matches},
            {"slot_matches", report.slot_matches},
            {"lemma_matches", report.lemma_matches},
            {"rows", report.rows.size()}}}};
}

std::string render_text(Table1Report const& report) {
  std::ostringstream out;
  out << std::left << std::setw(5) << "Name" << std::setw(16) << "Abbrev." << std::setw(20)
      << "Identity"
      << " f  e  Lo. Gr.  " << pad("Type", 35) << "Witness\n";
  for (auto const& r : report.rows) {
    out << std::setw(5) << r.label << std::setw(16) << r.abbrev << std::setw(20) << r.identity;
    for (int c = 0; c < 4; ++c) {
      out << ' ' << to_char(r.computed[c]) << (r.computed[c] == r.expected[c] ? ' ' : '!');
      if (c >= 2) out << ' ';
    }
    std::string type = r.computed_type.to_string();
    if (!r.slot_match) type += " (printed " + slots_string(r.printed_type.double_slots) + ")";
    out << ' ' << pad(type, 34) << ' ';
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
      if (i) out << "; ";
      out << "order " << r.witnesses[i].table.order() << " " << r.witnesses[i].source;
    }
    out << '\n';
  }
  out << "\ncells " << report.cell_matches << "/" << report.cell_total << " match, plus cells verified to order "
      << report.max_exhaustive_order << '\n';
  out << "types " << report.type_matches << "/" << report.rows.size() << " permutation pairs, "
      << report.slot_matches << "/" << report.rows.size() << " slot sets\n";
  out << "parastrophe lemma " << report.lemma_matches << "/" << parastrophe_lemma().size() << '\n';
  out << "fixtures " << report.fixtures.size() << " certified\n";
  if (!report.discrepancies.empty()) {
    out << "\ndiscrepancies:\n";
    for (auto const& d : report.discrepancies) {
      out << "  " << (d.label.empty() ? "-" : d.label) << " [" << d.kind << "] " << d.detail << '\n';
    }
  }
  return out.str();
}

}  // namespace bmlab
