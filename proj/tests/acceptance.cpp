// Acceptance run: one PASS/FAIL line per criterion.
//
//   bmlab_acceptance          all criteria
//   bmlab_acceptance 3 7      selected criteria
//
// Exit status is 0 only if every selected criterion passes.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bmlab/catalog.hpp"
#include "bmlab/constructions.hpp"
#include "bmlab/evaluator.hpp"
#include "bmlab/fixtures.hpp"
#include "bmlab/model_finder.hpp"
#include "bmlab/table1.hpp"
#include "support.hpp"

using namespace bmlab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string join(std::vector<std::string> const& v, char const* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string fixed(double v, int digits = 2) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << v;
  return s.str();
}

Outcome catalog_integrity() {
  auto const t0 = Clock::now();
  std::vector<std::string> bad;
  for (auto const& e : catalog()) {
    try {
      auto const id = parse_identity(e.text);
      if (id.label != e.label) bad.push_back(e.label + " parses as another entry");
      if (to_string(id) != e.text) bad.push_back(e.label + " prints as '" + to_string(id) + "'");
      if (!(parse_identity(to_string(id)) == id)) bad.push_back(e.label + " does not round-trip");
    } catch (std::exception const& ex) {
      bad.push_back(e.label + ": " + ex.what());
    }
  }
  double const t = seconds_since(t0);
  bool const pass = catalog().size() == 60 && bad.empty() && t < 1.0;
  return {pass, std::to_string(catalog().size()) + " entries parse and round-trip exactly" +
                    (bad.empty() ? "" : "; problems: " + join(bad)) + " (" + fixed(t, 3) + " s)"};
}

Outcome type_calculus() {
  std::size_t perms = 0, slots = 0;
  std::vector<std::string> flagged;
  for (auto const& row : expected_table1()) {
    auto const computed = identity_type(catalog_entry(row.label).identity);
    if (computed.lhs_perm == row.type.lhs_perm && computed.rhs_perm == row.type.rhs_perm) ++perms;
    if (computed.double_slots == row.type.double_slots) {
      ++slots;
    } else {
      auto const& p = row.type.double_slots;
      auto const& c = computed.double_slots;
      flagged.push_back(row.label + " printed {" + std::to_string(p[0]) + "," + std::to_string(p[1]) +
                        "} computed {" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "}");
    }
  }
  std::set<std::string> flagged_labels;
  for (auto const& f : flagged) flagged_labels.insert(f.substr(0, f.find(' ')));
  bool const pass = perms == 60 && slots == 58 && flagged_labels == std::set<std::string>{"F2", "F4"};
  return {pass, "permutation pairs " + std::to_string(perms) + "/60, slot sets " + std::to_string(slots) +
                    "/60 (required 58/60 with only F2, F4 flagged); flagged: " + join(flagged, "; ")};
}

Outcome parastrophe_lemma_check() {
  auto const t0 = Clock::now();
  std::size_t syntactic = 0;
  for (auto const& [a, b] : parastrophe_lemma()) {
    if (parastrophe_identity(catalog_entry(a).identity).label == std::optional<std::string>(b)) ++syntactic;
  }
  auto const squares = bmtest::all_squares_up_to(4);
  std::uint64_t checks = 0, mismatches = 0;
  for (auto const& [a, b] : parastrophe_lemma()) {
    for (auto [f, g] : {std::pair{a, b}, std::pair{b, a}}) {
      auto const& fi = catalog_entry(f).identity;
      auto const& gi = catalog_entry(g).identity;
      for (auto const& q : squares) {
        ++checks;
        if (satisfies(q, fi).holds != satisfies(parastrophe12(q), gi).holds) ++mismatches;
      }
    }
  }
  double const t = seconds_since(t0);
  bool const pass = syntactic == 32 && mismatches == 0 && squares.size() == 591 && t < 120.0;
  return {pass, "syntactic " + std::to_string(syntactic) + "/32; semantic " + std::to_string(checks - mismatches) +
                    "/" + std::to_string(checks) + " equivalences on " + std::to_string(squares.size()) +
                    " squares of order <= 4, i.e. the 590 of orders 2..4 plus the trivial one (" + fixed(t) + " s)"};
}

Outcome fixture_certificates() {
  auto const t0 = Clock::now();
  FixtureMap fx;
  try {
    fx = load_fixtures();
  } catch (std::exception const& e) {
    return {false, e.what()};
  }
  std::vector<std::string> failed;
  std::size_t ok = 0;
  for (auto const& c : fixture_claims()) {
    try {
      verify_fixture(c.label, fx);
      ++ok;
    } catch (std::exception const& e) {
      failed.push_back(e.what());
    }
  }
  double const t = seconds_since(t0);
  bool const pass = failed.empty() && t < 1.0;
  return {pass, std::to_string(ok) + "/" + std::to_string(fixture_claims().size()) + " certificates hold" +
                    (failed.empty() ? "" : "; " + join(failed, "; ")) + " (" + fixed(t, 3) + " s)"};
}

constexpr char const* kColumnName[] = {"f", "e", "Lo.", "Gr."};

Outcome minus_cells() {
  std::size_t cells = 0, good = 0;
  std::vector<std::string> problems;
  double slowest = 0;
  std::string slowest_label;
  for (auto const& row : expected_table1()) {
    bool any_minus = false;
    for (auto c : row.cells) any_minus |= c == Cell::minus;
    if (!any_minus) continue;

    Table1Options o;
    o.labels = {row.label};
    auto const t0 = Clock::now();
    auto const report = reproduce_table1(o);
    double const t = seconds_since(t0);
    if (t > slowest) {
      slowest = t;
      slowest_label = row.label;
    }
    auto const& r = report.rows.front();
    auto const& id = catalog_entry(row.label).identity;
    for (int c = 0; c < 4; ++c) {
      if (row.cells[c] != Cell::minus) continue;
      ++cells;
      RowWitness const* w = nullptr;
      for (auto const& cand : r.witnesses) {
        for (auto col : cand.covers) {
          if (static_cast<int>(col) == c) w = &cand;
        }
      }
      std::string const cell = row.label + "/" + kColumnName[c];
      if (!w) {
        problems.push_back(cell + " no witness");
        continue;
      }
      bool const verified = satisfies(w->table, id).holds &&
                            !column_holds(static_cast<UnitColumn>(c), classify(w->table));
      if (!verified) {
        problems.push_back(cell + " witness fails re-verification");
      } else if (w->table.order() > 6) {
        problems.push_back(cell + " order " + std::to_string(w->table.order()) + " (" + w->source + ")");
      } else if (t > 10.0) {
        problems.push_back(cell + " took " + fixed(t) + " s");
      } else {
        ++good;
      }
    }
  }
  return {good == cells, std::to_string(good) + "/" + std::to_string(cells) +
                             " minus cells have a verified witness of order <= 6; slowest identity " +
                             slowest_label + " " + fixed(slowest) + " s" +
                             (problems.empty() ? "" : "; failing: " + join(problems))};
}

Outcome plus_cells() {
  auto const t0 = Clock::now();
  std::size_t cells = 0, verified = 0;
  std::vector<std::string> problems;
  for (auto const& row : expected_table1()) {
    auto const c = census(catalog_entry(row.label).identity, 4);
    for (int k = 0; k < 4; ++k) {
      if (row.cells[k] != Cell::plus) continue;
      ++cells;
      if (c.budget_exhausted) {
        problems.push_back(row.label + " budget");
      } else if (c.counterexample[k]) {
        problems.push_back(row.label + "/" + kColumnName[k] + " counterexample");
      } else {
        ++verified;
      }
    }
    for (auto const& o : c.orders) {
      if (!o.exhaustive) problems.push_back(row.label + " order " + std::to_string(o.order) + " not exhaustive");
    }
  }
  double const matrix = seconds_since(t0);
  if (matrix >= 600.0) problems.push_back("matrix took " + fixed(matrix) + " s");

  std::vector<std::string> spots;
  for (char const* label : {"F1", "F19", "F26", "F38", "F41", "F42"}) {
    auto const s0 = Clock::now();
    auto const c = census(catalog_entry(label).identity, 5);
    double const t = seconds_since(s0);
    auto const& row = expected_row(label);
    bool ok = !c.budget_exhausted && c.orders.size() == 5 && c.orders[4].exhaustive && t < 900.0;
    for (int k = 0; k < 4; ++k) {
      if (row.cells[k] == Cell::plus && c.counterexample[k]) ok = false;
    }
    if (!ok) problems.push_back(std::string(label) + " order 5");
    spots.push_back(std::string(label) + " " + std::to_string(c.orders.back().satisfying) + " at order 5");
  }
  return {problems.empty(), std::to_string(verified) + "/" + std::to_string(cells) +
                                " plus cells verified exhaustively at orders <= 4 (" + fixed(matrix) +
                                " s); spot rows: " + join(spots) +
                                (problems.empty() ? "" : "; failing: " + join(problems))};
}

Outcome latin_counts() {
  std::vector<std::string> parts;
  bool pass = true;
  std::uint64_t const frozen[] = {1, 2, 12, 576};
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const oracle = bmtest::naive_latin_squares(n).size();
    auto const count = count_latin_squares(n);
    pass &= count == oracle && count == frozen[n - 1];
    parts.push_back(std::to_string(count));
  }
  auto const five = count_latin_squares(5);
  pass &= five == 161280;
  parts.push_back(std::to_string(five));
  return {pass, "counts for n = 1..5: " + join(parts) + " (n <= 4 checked against the naive oracle)"};
}

Outcome group_closure() {
  std::size_t ok = 0, total = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    auto const z = cyclic_group(n);
    for (auto const& e : catalog()) {
      ++total;
      ok += satisfies(z, e.identity).holds;
    }
  }
  return {ok == 360 && total == 360, std::to_string(ok) + "/" + std::to_string(total) + " checks hold for Z1..Z6"};
}

Outcome division_identities() {
  bmtest::RandomTables gen(12345);
  std::uint64_t checks = 0, failures = 0;
  for (int k = 0; k < 1000; ++k) {
    auto const q = gen.next(2 + k % 5);
    auto const n = static_cast<Element>(q.order());
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        bool const laws[] = {
            q(x, q.left_divide(x, y)) == y,          q(q.right_divide(y, x), x) == y,
            q.left_divide(x, q(x, y)) == y,          q.right_divide(q(y, x), x) == y,
            q.right_divide(x, q.left_divide(y, x)) == y, q.left_divide(q.right_divide(x, y), x) == y,
        };
        for (bool b : laws) {
          ++checks;
          failures += !b;
        }
      }
    }
  }
  return {failures == 0, std::to_string(checks - failures) + "/" + std::to_string(checks) +
                             " instances of (1)-(6) hold on 1000 random tables of orders 2..6"};
}

Outcome group_unit() {
  Identity const assoc{parse_term("x.yz"), parse_term("xy.z"), std::nullopt};
  std::size_t associative = 0, with_unit = 0;
  for (auto const& q : bmtest::all_squares_up_to(4)) {
    if (!satisfies(q, assoc).holds) continue;
    ++associative;
    auto const p = classify(q);
    with_unit += p.left_unit && p.right_unit && p.left_unit == p.right_unit;
  }
  return {associative == with_unit && associative == 1 + 2 + 3 + 16,
          std::to_string(with_unit) + "/" + std::to_string(associative) +
              " associative squares of order <= 4 have a two-sided unit"};
}

struct Criterion {
  char const* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::map<int, Criterion> const criteria{
      {1, {"catalog integrity", catalog_integrity}},
      {2, {"type calculus", type_calculus}},
      {3, {"parastrophe lemma", parastrophe_lemma_check}},
      {4, {"fixture certificates", fixture_certificates}},
      {5, {"minus cells", minus_cells}},
      {6, {"plus cells", plus_cells}},
      {7, {"Latin square counts", latin_counts}},
      {8, {"group closure", group_closure}},
      {9, {"division identities", division_identities}},
      {10, {"group unit lemma", group_unit}},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    int const n = std::atoi(argv[i]);
    if (!criteria.count(n)) {
      std::cerr << "unknown criterion " << argv[i] << '\n';
      return 2;
    }
    selected.push_back(n);
  }
  if (selected.empty()) {
    for (auto const& [n, c] : criteria) selected.push_back(n);
  }

  bool all = true;
  for (int n : selected) {
    auto const& c = criteria.at(n);
    Outcome o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all &= o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << n << ". " << c.name << ": " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
