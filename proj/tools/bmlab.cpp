// bmlab: check, classify and search finite quasigroups against the
// Bol-Moufang identities.
//
// Exit codes: 0 success or identity holds, 1 definite negative answer,
// 2 usage or input error, 3 budget exhausted before a decision.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bmlab/catalog.hpp"
#include "bmlab/cayley_table.hpp"
#include "bmlab/evaluator.hpp"
#include "bmlab/identity.hpp"
#include "bmlab/model_finder.hpp"
#include "bmlab/table1.hpp"

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kNegative = 1, kInputError = 2, kBudget = 3 };

struct Globals {
  bool json = false;
  unsigned threads = 1;
};

unsigned threads_from_env() {
  if (char const* env = std::getenv("BM_LAB_THREADS")) {
    try {
      auto const n = std::stoul(env);
      if (n >= 1 && n <= 256) return static_cast<unsigned>(n);
    } catch (std::exception const&) {
    }
    std::cerr << "warning: ignoring BM_LAB_THREADS=" << env << '\n';
  }
  return 1;
}

std::string opt_element(std::optional<bmlab::Element> const& e) {
  return e ? std::to_string(*e) : "none";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string label_or(bmlab::Identity const& id, std::string const& fallback) {
  return id.label ? *id.label : fallback;
}

// check ---------------------------------------------------------------------

int cmd_check(Globals const& g, std::string const& path, std::string const& spec) {
  auto const table = bmlab::load_table(path);
  auto const id = bmlab::resolve_identity(spec);
  auto const report = bmlab::satisfies(table, id);
  if (g.json) {
    json out = bmlab::to_json(report);
    out["identity"] = bmlab::to_string(id);
    out["label"] = id.label ? json(*id.label) : json(nullptr);
    out["order"] = table.order();
    std::cout << out.dump(2) << '\n';
  } else if (report.holds) {
    std::cout << label_or(id, bmlab::to_string(id)) << " holds (" << report.assignments_checked
              << " assignments)\n";
  } else {
    auto const& f = *report.failing_assignment;
    auto const a = bmlab::Assignment::of(f[0], f[1], f[2]);
    std::cout << label_or(id, bmlab::to_string(id)) << " fails at x=" << f[0] << ", y=" << f[1]
              << ", z=" << f[2] << ": " << bmlab::to_string(id.lhs) << " = "
              << bmlab::eval_term(id.lhs, table, a) << ", " << bmlab::to_string(id.rhs) << " = "
              << bmlab::eval_term(id.rhs, table, a) << '\n';
  }
  return report.holds ? kOk : kNegative;
}

// units ---------------------------------------------------------------------

int cmd_units(Globals const& g, std::string const& path) {
  auto const table = bmlab::load_table(path);
  auto const p = bmlab::classify(table);
  if (g.json) {
    json out = bmlab::to_json(p);
    out["order"] = table.order();
    std::cout << out.dump(2) << '\n';
    return kOk;
  }
  std::cout << "left: " << opt_element(p.left_unit) << ", right: " << opt_element(p.right_unit)
            << ", loop: " << yes_no(p.is_loop) << ", group: " << yes_no(p.is_group) << '\n';
  std::cout << "middle: " << opt_element(p.middle_unit) << ", idempotents: {";
  for (std::size_t i = 0; i < p.idempotents.size(); ++i) std::cout << (i ? "," : "") << p.idempotents[i];
  std::cout << "}\n";
  if (auto const& w = p.associativity_witness) {
    std::cout << "not associative at (" << (*w)[0] << "," << (*w)[1] << "," << (*w)[2] << ")\n";
  }
  return kOk;
}

// search --------------------------------------------------------------------

struct SearchArgs {
  std::string identity;
  std::string require = "always";
  std::string orders = "1..4";
  std::uint64_t budget = bmlab::kDefaultBudget;
  std::string mode = "first";
  bool incremental = false;
};

int cmd_search(Globals const& g, SearchArgs const& a) {
  bmlab::SearchQuery q;
  if (!a.identity.empty()) q.identity = bmlab::resolve_identity(a.identity);
  auto const req = bmlab::parse_requirement(a.require);
  if (!req) throw bmlab::SearchError("unknown requirement '" + a.require + "'");
  q.requirement = *req;
  q.orders = bmlab::parse_order_range(a.orders);
  q.budget = a.budget;
  q.mode = a.mode == "count" ? bmlab::SearchMode::count_all : bmlab::SearchMode::first_witness;
  q.incremental = a.incremental;
  q.threads = g.threads;

  auto const r = bmlab::find(q);
  json exhaustive = json::array();
  for (auto const& o : r.orders) {
    if (o.exhaustive) exhaustive.push_back(o.order);
  }

  if (q.mode == bmlab::SearchMode::count_all) {
    if (g.json) {
      json per = json::array();
      for (auto const& o : r.orders) {
        per.push_back({{"order", o.order}, {"matches", o.matches}, {"nodes", o.nodes}, {"exhaustive", o.exhaustive}});
      }
      std::cout << json{{"predicate", std::string(bmlab::to_string(q.requirement))},
                        {"orders", per},
                        {"matches", r.matches},
                        {"nodes", r.nodes},
                        {"budget_exhausted", r.budget_exhausted}}
                       .dump(2)
                << '\n';
    } else {
      for (auto const& o : r.orders) {
        std::cout << "order " << o.order << ": " << o.matches << (o.exhaustive ? "" : " (partial)") << '\n';
      }
      std::cout << "total " << r.matches << ", " << r.nodes << " nodes\n";
    }
    return r.budget_exhausted ? kBudget : kOk;
  }

  if (r.witness) {
    if (!bmlab::reverify(*r.witness)) {
      std::cerr << "internal error: witness failed re-verification\n";
      return kInputError;
    }
    if (g.json) {
      std::cout << bmlab::to_json(*r.witness, r).dump(2) << '\n';
    } else {
      auto const& p = r.witness->profile;
      std::cout << "witness of order " << r.witness->table.order() << " after " << r.witness->nodes_expanded
                << " nodes (left: " << opt_element(p.left_unit) << ", right: " << opt_element(p.right_unit)
                << ", group: " << yes_no(p.is_group) << ")\n"
                << bmlab::format_table(r.witness->table);
    }
    return kOk;
  }
  std::string const verdict = r.budget_exhausted ? "none (budget)" : "none (exhaustive)";
  if (g.json) {
    std::cout << json{{"identity", q.identity ? bmlab::to_string(*q.identity) : std::string()},
                      {"label", q.identity && q.identity->label ? json(*q.identity->label) : json(nullptr)},
                      {"predicate", std::string(bmlab::to_string(q.requirement))},
                      {"witness", nullptr},
                      {"result", verdict},
                      {"nodes_expanded", r.nodes},
                      {"exhaustive_orders", exhaustive}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << verdict << '\n';
  }
  return r.budget_exhausted ? kBudget : kNegative;
}

// table1 --------------------------------------------------------------------

struct Table1Args {
  std::size_t max_order = 4;
  std::size_t witness_cap = 6;
  std::string out;
  std::string fixtures = bmlab::default_fixture_dir();
  std::uint64_t budget = bmlab::kDefaultBudget;
  std::vector<std::string> spot;
  std::vector<std::string> labels;
  bool no_constructions = false;
};

int cmd_table1(Globals const& g, Table1Args const& a) {
  bmlab::Table1Options o;
  o.max_exhaustive_order = a.max_order;
  o.witness_order_cap = a.witness_cap;
  o.fixture_dir = a.fixtures;
  o.budget = a.budget;
  o.threads = g.threads;
  o.use_constructions = !a.no_constructions;
  for (auto const& l : a.labels) o.labels.push_back(bmlab::catalog_entry(l).label);
  for (auto const& s : a.spot) {
    auto const eq = s.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--spot expects LABEL=ORDER, got '" + s + "'");
    auto const order = std::stoul(s.substr(eq + 1));
    if (order < 1 || order > 5) throw std::invalid_argument("--spot order must be in 1..5");
    o.spot_orders[bmlab::catalog_entry(s.substr(0, eq)).label] = order;
  }

  auto const report = bmlab::reproduce_table1(o);
  auto const j = bmlab::to_json(report);
  if (!a.out.empty()) {
    std::ofstream f(a.out);
    if (!f) throw std::invalid_argument("cannot write " + a.out);
    f << j.dump(2) << '\n';
  }
  if (g.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << bmlab::render_text(report);
  }
  bool unknown = false;
  for (auto const& r : report.rows) {
    for (auto c : r.computed) unknown |= c == bmlab::Cell::unknown;
  }
  if (unknown) return kBudget;
  return report.hard_discrepancies() == 0 ? kOk : kNegative;
}

// identity ------------------------------------------------------------------

struct IdentityArgs {
  std::string parse;
  std::string label;
  bool type = false;
  bool parastrophe = false;
  bool catalog = false;
};

std::string type_text(bmlab::IdentityType const& t) {
  return t.lhs_perm.to_string() + " = " + t.rhs_perm.to_string() + ", slots {" +
         std::to_string(t.double_slots[0]) + "," + std::to_string(t.double_slots[1]) + "}";
}

int cmd_identity(Globals const& g, IdentityArgs const& a) {
  if (a.catalog) {
    if (g.json) {
      std::cout << bmlab::catalog_json().dump(2) << '\n';
    } else {
      for (auto const& e : bmlab::catalog()) {
        std::cout << e.label << "\t" << e.text << "\t" << type_text(bmlab::identity_type(e.identity));
        if (!e.abbrev.empty()) std::cout << "\t" << e.abbrev;
        std::cout << '\n';
      }
    }
    return kOk;
  }
  if (a.parse.empty() == a.label.empty()) {
    throw std::invalid_argument("give exactly one of --parse or --label");
  }
  auto const id = a.label.empty() ? bmlab::parse_identity(a.parse) : bmlab::catalog_entry(a.label).identity;
  auto const type = bmlab::identity_type(id);
  auto const dual = bmlab::parastrophe_identity(id);
  bool const self_dual = id.label && dual.label == id.label;
  bool const show_all = !a.type && !a.parastrophe;

  if (g.json) {
    json out{{"identity", bmlab::to_string(id)}, {"label", id.label ? json(*id.label) : json(nullptr)}};
    if (a.type || show_all) {
      out["type"] = {{"lhs_perm", type.lhs_perm.to_string()},
                     {"rhs_perm", type.rhs_perm.to_string()},
                     {"double_slots", type.double_slots}};
    }
    if (a.parastrophe || show_all) {
      out["parastrophe"] = {{"identity", bmlab::to_string(dual)},
                            {"label", dual.label ? json(*dual.label) : json(nullptr)},
                            {"self_dual", self_dual}};
    }
    std::cout << out.dump(2) << '\n';
    return kOk;
  }
  if (show_all) std::cout << label_or(id, "-") << ": " << bmlab::to_string(id) << '\n';
  if (a.type || show_all) std::cout << type_text(type) << '\n';
  if (a.parastrophe || show_all) {
    if (self_dual) {
      std::cout << *id.label << " (self-dual)\n";
    } else {
      std::cout << label_or(dual, "-") << ": " << bmlab::to_string(dual) << '\n';
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite quasigroups and the sixty Bol-Moufang identities"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Globals g;
  g.threads = threads_from_env();
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--threads", g.threads, "Search threads (default: BM_LAB_THREADS or 1)")
      ->check(CLI::Range(1u, 256u));

  std::string table_path, identity_spec;
  auto* check = app.add_subcommand("check", "Test an identity on a Cayley table");
  check->add_option("table", table_path, "Cayley table file")->required();
  check->add_option("identity", identity_spec, "Catalog label or identity text")->required();

  auto* units = app.add_subcommand("units", "Units, loop and group flags of a Cayley table");
  units->add_option("table", table_path, "Cayley table file")->required();

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Find a quasigroup satisfying an identity and a requirement");
  search->add_option("--identity", sa.identity, "Catalog label or identity text");
  search->add_option("--require", sa.require, "always, no-left-unit, no-right-unit, no-unit-either-side, "
                                              "not-loop, not-associative, has-left-unit, has-right-unit");
  search->add_option("--orders", sa.orders, "Order range a..b")->capture_default_str();
  search->add_option("--budget", sa.budget, "Node expansion limit")->capture_default_str()->check(CLI::PositiveNumber);
  search->add_option("--mode", sa.mode, "first or count")->check(CLI::IsMember({"first", "count"}));
  search->add_flag("--incremental", sa.incremental, "Prune on decided ground instances");

  Table1Args ta;
  auto* table1 = app.add_subcommand("table1", "Recompute the unit classification of all sixty identities");
  table1->add_option("--max-order", ta.max_order, "Exhaustive verification order for plus cells")
      ->capture_default_str()
      ->check(CLI::Range(1, 5));
  table1->add_option("--witness-cap", ta.witness_cap, "Largest order searched for minus-cell witnesses")
      ->capture_default_str()
      ->check(CLI::Range(1, 7));
  table1->add_option("--out", ta.out, "Write the JSON report here");
  table1->add_option("--fixtures", ta.fixtures, "Fixture directory")->capture_default_str();
  table1->add_option("--budget", ta.budget, "Node limit per census and per search")->check(CLI::PositiveNumber);
  table1->add_option("--spot", ta.spot, "Verify a row to a higher order, e.g. F1=5");
  table1->add_option("--label", ta.labels, "Restrict to these rows");
  table1->add_flag("--no-constructions", ta.no_constructions, "Do not fall back to doubled-group loops");

  IdentityArgs ia;
  auto* identity = app.add_subcommand("identity", "Type and parastrophe of an identity");
  auto* parse_opt = identity->add_option("--parse", ia.parse, "Identity text");
  identity->add_option("--label", ia.label, "Catalog label")->excludes(parse_opt);
  identity->add_flag("--type", ia.type, "Execution permutations and doubled slots");
  identity->add_flag("--parastrophe", ia.parastrophe, "(12)-parastrophic identity");
  identity->add_flag("--catalog", ia.catalog, "List all sixty identities");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*check) return cmd_check(g, table_path, identity_spec);
    if (*units) return cmd_units(g, table_path);
    if (*search) return cmd_search(g, sa);
    if (*table1) return cmd_table1(g, ta);
    if (*identity) return cmd_identity(g, ia);
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
