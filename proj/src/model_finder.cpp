#include "bmlab/model_finder.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <limits>
#include <thread>

namespace bmlab {

namespace {

enum class Stop { exhausted, visitor, budget, cancelled };

using CellVisitor = std::function<bool(std::span<std::int8_t const>)>;

// Depth-first filler for one branch of the tree: cell (0,0) is pinned to
// `first_value` and the remaining cells are filled row-major.
//
// Incremental mode keeps every ground instance (x,y,z) of the identity on the
// watch list of the first open cell its evaluation needs. Assigning a cell
// re-probes only that cell's list: blocked instances move to a later cell,
// decided ones stay put so they are re-probed whenever the cell is assigned
// again. Instances that moved on are not moved back on backtracking; they are
// probed at the latest when their watched cell is assigned, which happens
// before any square is completed, so completed squares are always exact.
class Backtracker {
 public:
  Backtracker(std::size_t n, CompiledIdentity const* identity, bool incremental,
              std::uint64_t budget, std::atomic<std::size_t> const* cancel_above,
              std::size_t branch)
      : n_(n),
        identity_(identity),
        incremental_(incremental && identity != nullptr),
        budget_(budget),
        cancel_above_(cancel_above),
        branch_(branch),
        cells_(n * n, -1),
        row_used_(n, 0),
        col_used_(n, 0),
        forced_(n * n, -1),
        forced_row_(n, 0),
        forced_col_(n, 0) {
    if (incremental_) {
      watch_.resize(n * n);
      int const m = static_cast<int>(n);
      for (int x = 0; x < m; ++x) {
        for (int y = 0; y < m; ++y) {
          for (int z = 0; z < m; ++z) {
            if ((x && !identity_->uses(0)) || (y && !identity_->uses(1)) || (z && !identity_->uses(2))) continue;
            auto const p = identity_->probe(cells_, n_, {x, y, z});
            watch_[p.cell].push_back(static_cast<std::uint32_t>((x * m + y) * m + z));
          }
        }
      }
    }
  }

  Stop run(int first_value, CellVisitor const& visit) {
    visit_ = &visit;
    first_value_ = first_value;
    fill(0);
    return stop_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  // Re-probes the instances watching `pos`; false on a violated instance or
  // a contradictory forced value.
  bool propagate(std::size_t pos) {
    auto& list = watch_[pos];
    int const m = static_cast<int>(n_);
    std::size_t keep = 0;
    bool ok = true;
    for (std::size_t i = 0; i < list.size(); ++i) {
      std::uint32_t const inst = list[i];
      if (!ok) {
        list[keep++] = inst;
        continue;
      }
      int const id = static_cast<int>(inst);
      auto const p = identity_->probe(cells_, n_, {id / (m * m), (id / m) % m, id % m});
      if (p.status == CompiledIdentity::Probe::Status::blocked) {
        watch_[p.cell].push_back(inst);
        if (p.forced != CompiledIdentity::kUndecided && !force(p.cell, p.forced)) ok = false;
      } else {
        list[keep++] = inst;
        if (p.status == CompiledIdentity::Probe::Status::violated) ok = false;
      }
    }
    list.resize(keep);
    return ok;
  }

  // Records that open cell `cell` must take value v.
  bool force(std::size_t cell, int v) {
    if (forced_[cell] >= 0) return forced_[cell] == v;
    std::size_t const r = cell / n_, c = cell % n_;
    std::uint32_t const bit = 1u << v;
    if ((row_used_[r] | col_used_[c] | forced_row_[r] | forced_col_[c]) & bit) return false;
    forced_[cell] = static_cast<std::int8_t>(v);
    forced_row_[r] |= bit;
    forced_col_[c] |= bit;
    trail_.push_back(cell);
    return true;
  }

  void unforce_to(std::size_t mark) {
    while (trail_.size() > mark) {
      std::size_t const cell = trail_.back();
      trail_.pop_back();
      std::uint32_t const bit = 1u << forced_[cell];
      forced_row_[cell / n_] &= ~bit;
      forced_col_[cell % n_] &= ~bit;
      forced_[cell] = -1;
    }
  }

  bool fill(std::size_t pos) {
    if (pos == n_ * n_) {
      if (identity_ && !incremental_ && !identity_->holds(cells_, n_)) return true;
      if (!(*visit_)(cells_)) {
        stop_ = Stop::visitor;
        return false;
      }
      return true;
    }
    std::size_t const r = pos / n_, c = pos % n_;
    std::uint32_t const full = (1u << n_) - 1;
    std::uint32_t avail = full & ~row_used_[r] & ~col_used_[c];
    if (forced_[pos] >= 0) {
      avail &= 1u << forced_[pos];
    } else {
      avail &= ~forced_row_[r] & ~forced_col_[c];
    }
    if (pos == 0) avail &= 1u << first_value_;
    while (avail) {
      int const v = std::countr_zero(avail);
      avail &= avail - 1;
      if (++nodes_ > budget_) {
        stop_ = Stop::budget;
        return false;
      }
      if (cancel_above_ && cancel_above_->load(std::memory_order_relaxed) < branch_) {
        stop_ = Stop::cancelled;
        return false;
      }
      std::uint32_t const bit = 1u << v;
      cells_[pos] = static_cast<std::int8_t>(v);
      row_used_[r] |= bit;
      col_used_[c] |= bit;
      std::size_t const mark = trail_.size();
      bool const ok = !incremental_ || propagate(pos);
      bool const go_on = !ok || fill(pos + 1);
      unforce_to(mark);
      row_used_[r] &= ~bit;
      col_used_[c] &= ~bit;
      cells_[pos] = -1;
      if (!go_on) return false;
    }
    return true;
  }

  std::size_t n_;
  CompiledIdentity const* identity_;
  bool incremental_;
  std::uint64_t budget_;
  std::atomic<std::size_t> const* cancel_above_;
  std::size_t branch_;
  std::vector<std::int8_t> cells_;
  std::vector<std::uint32_t> row_used_;
  std::vector<std::uint32_t> col_used_;
  std::vector<std::vector<std::uint32_t>> watch_;
  // Values implied for open cells by instances waiting only on them.
  std::vector<std::int8_t> forced_;
  std::vector<std::uint32_t> forced_row_;
  std::vector<std::uint32_t> forced_col_;
  std::vector<std::size_t> trail_;
  CellVisitor const* visit_ = nullptr;
  int first_value_ = 0;
  std::uint64_t nodes_ = 0;
  Stop stop_ = Stop::exhausted;
};

CayleyTable to_table(std::span<std::int8_t const> cells, std::size_t n) {
  std::vector<int> v(cells.begin(), cells.end());
  return CayleyTable::validate(n, v);
}

// Runs `work(branch)` for branch = 0..count-1 on up to `threads` workers.
// With `serial_stop`, a single thread stops launching branches once it
// returns true for a finished branch (the later results are not needed).
template <class Work, class SerialStop>
void run_branches(std::size_t count, unsigned threads, Work&& work, SerialStop&& serial_stop) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t b = 0; b < count; ++b) {
      work(b);
      if (serial_stop(b)) break;
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  unsigned const workers = std::min<unsigned>(threads, static_cast<unsigned>(count));
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t b = next++; b < count; b = next++) work(b);
    });
  }
}

void check_order(std::size_t n) {
  if (n < 1) throw SearchError("order must be at least 1");
  if (n > kMaxSearchOrder) throw OrderTooLarge(n);
}

}  // namespace

std::uint64_t enumerate_latin_squares(std::size_t n,
                                      std::function<bool(CayleyTable const&)> const& visit) {
  check_order(n);
  std::uint64_t visited = 0;
  CellVisitor cell_visit = [&](std::span<std::int8_t const> cells) {
    ++visited;
    return visit(to_table(cells, n));
  };
  for (std::size_t v = 0; v < n; ++v) {
    Backtracker bt(n, nullptr, false, std::numeric_limits<std::uint64_t>::max(), nullptr, v);
    if (bt.run(static_cast<int>(v), cell_visit) == Stop::visitor) break;
  }
  return visited;
}

std::uint64_t count_latin_squares(std::size_t n) {
  check_order(n);
  std::uint64_t count = 0;
  CellVisitor cell_visit = [&](std::span<std::int8_t const>) {
    ++count;
    return true;
  };
  for (std::size_t v = 0; v < n; ++v) {
    Backtracker bt(n, nullptr, false, std::numeric_limits<std::uint64_t>::max(), nullptr, v);
    bt.run(static_cast<int>(v), cell_visit);
  }
  return count;
}

std::string_view to_string(Requirement r) {
  switch (r) {
    case Requirement::always: return "always";
    case Requirement::no_left_unit: return "no-left-unit";
    case Requirement::no_right_unit: return "no-right-unit";
    case Requirement::no_unit_either_side: return "no-unit-either-side";
    case Requirement::not_loop: return "not-loop";
    case Requirement::not_associative: return "not-associative";
    case Requirement::has_left_unit: return "has-left-unit";
    case Requirement::has_right_unit: return "has-right-unit";
  }
  return "always";
}

std::optional<Requirement> parse_requirement(std::string_view text) {
  std::string key(text);
  std::replace(key.begin(), key.end(), '_', '-');
  for (auto r : {Requirement::always, Requirement::no_left_unit, Requirement::no_right_unit,
                 Requirement::no_unit_either_side, Requirement::not_loop,
                 Requirement::not_associative, Requirement::has_left_unit,
                 Requirement::has_right_unit}) {
    if (key == to_string(r)) return r;
  }
  return std::nullopt;
}

bool requirement_met(Requirement r, UnitProfile const& p) {
  switch (r) {
    case Requirement::always: return true;
    case Requirement::no_left_unit: return !p.left_unit;
    case Requirement::no_right_unit: return !p.right_unit;
    case Requirement::no_unit_either_side: return !p.left_unit && !p.right_unit;
    case Requirement::not_loop: return !p.is_loop;
    case Requirement::not_associative: return !p.is_group;
    case Requirement::has_left_unit: return p.left_unit.has_value();
    case Requirement::has_right_unit: return p.right_unit.has_value();
  }
  return false;
}

OrderRange parse_order_range(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      throw SearchError("invalid order range '" + std::string(text) + "'");
    }
    return v;
  };
  OrderRange range;
  if (auto dots = text.find(".."); dots != std::string_view::npos) {
    range.min = parse_int(text.substr(0, dots));
    range.max = parse_int(text.substr(dots + 2));
  } else {
    range.min = range.max = parse_int(text);
  }
  if (range.min < 1 || range.max < range.min) {
    throw SearchError("invalid order range '" + std::string(text) + "'");
  }
  return range;
}

namespace {

struct BranchOutcome {
  Stop stop = Stop::exhausted;
  std::uint64_t nodes = 0;
  std::uint64_t matches = 0;
  std::optional<CayleyTable> first;  // first matching square
  std::vector<CayleyTable> tables;
};

}  // namespace

SearchResult find(SearchQuery const& query) {
  if (query.orders.min < 1 || query.orders.max < query.orders.min) {
    throw SearchError("invalid order range");
  }
  if (query.budget == 0) throw SearchError("budget must be positive");
  check_order(query.orders.max);

  std::optional<CompiledIdentity> compiled;
  if (query.identity) compiled.emplace(*query.identity);

  SearchResult result;
  std::uint64_t remaining = query.budget;

  for (std::size_t n = query.orders.min; n <= query.orders.max; ++n) {
    std::vector<BranchOutcome> branches(n);
    std::atomic<std::size_t> winner{n};
    bool const first_only = query.mode == SearchMode::first_witness;

    auto work = [&](std::size_t b) {
      auto& out = branches[b];
      CellVisitor visit = [&](std::span<std::int8_t const> cells) {
        auto table = to_table(cells, n);
        if (!requirement_met(query.requirement, classify(table))) return true;
        ++out.matches;
        if (!out.first) out.first = table;
        if (query.mode == SearchMode::enumerate_all) out.tables.push_back(std::move(table));
        if (first_only) {
          // Later branches cannot win any more.
          std::size_t cur = winner.load();
          while (b < cur && !winner.compare_exchange_weak(cur, b)) {
          }
          return false;
        }
        return true;
      };
      Backtracker bt(n, compiled ? &*compiled : nullptr, query.incremental, remaining,
                     first_only ? &winner : nullptr, b);
      out.stop = bt.run(static_cast<int>(b), visit);
      out.nodes = bt.nodes();
    };
    std::uint64_t serial_nodes = 0;
    auto serial_stop = [&](std::size_t b) {
      serial_nodes += branches[b].nodes;
      return serial_nodes > remaining || (first_only && branches[b].first);
    };
    run_branches(n, query.threads, work, serial_stop);

    // Merge in branch order, exactly as a serial run would have seen them.
    OrderOutcome outcome{n, true, 0, 0};
    bool stop_all = false;
    for (std::size_t b = 0; b < n; ++b) {
      auto& br = branches[b];
      outcome.nodes += br.nodes;
      if (outcome.nodes > remaining || br.stop == Stop::budget) {
        outcome.exhaustive = false;
        result.budget_exhausted = true;
        stop_all = true;
        break;
      }
      outcome.matches += br.matches;
      if (query.mode == SearchMode::enumerate_all) {
        std::move(br.tables.begin(), br.tables.end(), std::back_inserter(result.tables));
      }
      if (first_only && br.first) {
        auto const& table = *br.first;
        result.witness = Witness{table, query,
                                 query.identity ? satisfies(table, *query.identity) : SatReport{},
                                 classify(table), result.nodes + outcome.nodes};
        outcome.exhaustive = false;
        stop_all = true;
        break;
      }
    }
    outcome.nodes = std::min(outcome.nodes, remaining);
    remaining -= outcome.nodes;
    result.nodes += outcome.nodes;
    result.matches += outcome.matches;
    result.orders.push_back(outcome);
    if (stop_all) break;
  }
  return result;
}

bool reverify(Witness const& w) {
  if (w.query.identity && !satisfies(w.table, *w.query.identity).holds) return false;
  auto const profile = units(w.table);
  if (profile.is_loop != (profile.left_unit && profile.right_unit)) return false;
  if (profile.is_group && !profile.is_loop) return false;
  return requirement_met(w.query.requirement, profile) && profile == w.profile;
}

std::string_view to_string(UnitColumn c) {
  switch (c) {
    case UnitColumn::left_unit: return "f";
    case UnitColumn::right_unit: return "e";
    case UnitColumn::loop: return "loop";
    case UnitColumn::group: return "group";
  }
  return "f";
}

bool column_holds(UnitColumn c, UnitProfile const& p) {
  switch (c) {
    case UnitColumn::left_unit: return p.left_unit.has_value();
    case UnitColumn::right_unit: return p.right_unit.has_value();
    case UnitColumn::loop: return p.is_loop;
    case UnitColumn::group: return p.is_group;
  }
  return false;
}

Census census(Identity const& id, std::size_t max_order, std::uint64_t budget, unsigned threads) {
  check_order(max_order);
  CompiledIdentity const compiled(id);
  Census out;
  std::uint64_t remaining = budget;

  struct BranchCensus {
    OrderCensus counts;
    std::optional<CayleyTable> counterexample[4];
    Stop stop = Stop::exhausted;
    std::uint64_t nodes = 0;
  };

  for (std::size_t n = 1; n <= max_order; ++n) {
    std::vector<BranchCensus> branches(n);
    auto work = [&](std::size_t b) {
      auto& br = branches[b];
      CellVisitor visit = [&](std::span<std::int8_t const> cells) {
        auto table = to_table(cells, n);
        auto const p = classify(table);
        ++br.counts.satisfying;
        br.counts.with_left_unit += p.left_unit.has_value();
        br.counts.with_right_unit += p.right_unit.has_value();
        br.counts.loops += p.is_loop;
        br.counts.groups += p.is_group;
        for (int c = 0; c < 4; ++c) {
          if (!br.counterexample[c] && !column_holds(static_cast<UnitColumn>(c), p)) {
            br.counterexample[c] = table;
          }
        }
        return true;
      };
      Backtracker bt(n, &compiled, true, remaining, nullptr, b);
      br.stop = bt.run(static_cast<int>(b), visit);
      br.nodes = bt.nodes();
    };
    std::uint64_t serial_nodes = 0;
    run_branches(n, threads, work, [&](std::size_t b) {
      serial_nodes += branches[b].nodes;
      return serial_nodes > remaining;
    });

    OrderCensus total;
    total.order = n;
    total.exhaustive = true;
    for (std::size_t b = 0; b < n; ++b) {
      auto& br = branches[b];
      total.nodes += br.nodes;
      if (total.nodes > remaining || br.stop == Stop::budget) {
        total.exhaustive = false;
        out.budget_exhausted = true;
        break;
      }
      total.satisfying += br.counts.satisfying;
      total.with_left_unit += br.counts.with_left_unit;
      total.with_right_unit += br.counts.with_right_unit;
      total.loops += br.counts.loops;
      total.groups += br.counts.groups;
      for (int c = 0; c < 4; ++c) {
        if (!out.counterexample[c] && br.counterexample[c]) out.counterexample[c] = br.counterexample[c];
      }
    }
    total.nodes = std::min(total.nodes, remaining);
    remaining -= total.nodes;
    out.orders.push_back(total);
    if (out.budget_exhausted) break;
  }
  return out;
}

PlusCellReport verify_plus_cell(Identity const& id, UnitColumn column, std::size_t max_order,
                                std::uint64_t budget, unsigned threads) {
  auto const c = census(id, max_order, budget, threads);
  PlusCellReport report;
  report.column = column;
  report.max_order = max_order;
  report.budget_exhausted = c.budget_exhausted;
  report.counterexample = c.counterexample[static_cast<int>(column)];
  for (auto const& o : c.orders) {
    report.satisfying_per_order.push_back(o.satisfying);
    if (o.exhaustive) report.exhaustive_orders.push_back(o.order);
  }
  return report;
}

nlohmann::json to_json(Witness const& w, SearchResult const& r) {
  auto opt = [](std::optional<Element> const& e) -> nlohmann::json {
    return e ? nlohmann::json(*e) : nlohmann::json(nullptr);
  };
  nlohmann::json exhaustive = nlohmann::json::array();
  for (auto const& o : r.orders) {
    if (o.exhaustive) exhaustive.push_back(o.order);
  }
  return {{"identity", w.query.identity ? to_string(*w.query.identity) : std::string("")},
          {"label", w.query.identity && w.query.identity->label ? *w.query.identity->label : ""},
          {"predicate", std::string(to_string(w.query.requirement))},
          {"order", w.table.order()},
          {"table", w.table.to_grid()},
          {"left_unit", opt(w.profile.left_unit)},
          {"right_unit", opt(w.profile.right_unit)},
          {"is_group", w.profile.is_group},
          {"nodes_expanded", w.nodes_expanded},
          {"exhaustive_orders", exhaustive}};
}

}  // namespace bmlab
