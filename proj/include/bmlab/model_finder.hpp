// Backtracking search over Latin squares with row/column bitmask propagation.
//
// Cells are filled row-major with candidate values tried in ascending order,
// so squares are produced in lexicographic order and "the first witness" is
// well defined. No symmetry breaking is applied: unit existence is not an
// isotopy invariant, so raw squares are enumerated.

#ifndef BMLAB_MODEL_FINDER_HPP
#define BMLAB_MODEL_FINDER_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bmlab/cayley_table.hpp"
#include "bmlab/evaluator.hpp"
#include "bmlab/identity.hpp"

namespace bmlab {

inline constexpr std::size_t kMaxSearchOrder = 16;
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

class SearchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OrderTooLarge : public SearchError {
 public:
  explicit OrderTooLarge(std::size_t n)
      : SearchError("order " + std::to_string(n) + " exceeds the search cap of " +
                    std::to_string(kMaxSearchOrder)) {}
};

// Calls `visit` on every Latin square of order n in lexicographic order until
// it returns false. Returns the number of squares visited.
std::uint64_t enumerate_latin_squares(std::size_t n,
                                      std::function<bool(CayleyTable const&)> const& visit);
std::uint64_t count_latin_squares(std::size_t n);

enum class Requirement {
  always,
  no_left_unit,
  no_right_unit,
  no_unit_either_side,  // neither a left nor a right unit
  not_loop,
  not_associative,
  has_left_unit,
  has_right_unit,
};

std::string_view to_string(Requirement r);
// Accepts both "no-left-unit" and "no_left_unit".
std::optional<Requirement> parse_requirement(std::string_view text);
bool requirement_met(Requirement r, UnitProfile const& p);

enum class SearchMode { first_witness, count_all, enumerate_all };

struct OrderRange {
  std::size_t min = 1;
  std::size_t max = 1;
};

// Parses "a..b" or a single order "a".
OrderRange parse_order_range(std::string_view text);

struct SearchQuery {
  std::optional<Identity> identity;  // empty: every Latin square qualifies
  Requirement requirement = Requirement::always;
  OrderRange orders;
  std::uint64_t budget = kDefaultBudget;  // node expansions over the whole range
  SearchMode mode = SearchMode::first_witness;
  // Prune a partial square as soon as some fully decided ground instance of
  // the identity fails, instead of testing only completed squares.
  bool incremental = false;
  unsigned threads = 1;
};

struct Witness {
  CayleyTable table;
  SearchQuery query;
  SatReport sat;
  UnitProfile profile;
  std::uint64_t nodes_expanded = 0;
};

struct OrderOutcome {
  std::size_t order = 0;
  bool exhaustive = false;  // the whole order was searched
  std::uint64_t nodes = 0;
  std::uint64_t matches = 0;
};

struct SearchResult {
  std::optional<Witness> witness;
  std::vector<OrderOutcome> orders;
  std::vector<CayleyTable> tables;  // enumerate_all only
  std::uint64_t matches = 0;
  std::uint64_t nodes = 0;
  bool budget_exhausted = false;
};

// Identical queries give identical results, including node counts, for any
// thread count: the tree is split on the value of cell (0,0) and the branch
// results are merged in branch order.
SearchResult find(SearchQuery const& query);

// Recomputes the certificate from scratch.
bool reverify(Witness const& w);

enum class UnitColumn { left_unit, right_unit, loop, group };

std::string_view to_string(UnitColumn c);
bool column_holds(UnitColumn c, UnitProfile const& p);

struct OrderCensus {
  std::size_t order = 0;
  std::uint64_t satisfying = 0;
  std::uint64_t with_left_unit = 0;
  std::uint64_t with_right_unit = 0;
  std::uint64_t loops = 0;
  std::uint64_t groups = 0;
  std::uint64_t nodes = 0;
  bool exhaustive = false;
};

// Every Latin square of each order in 1..max_order satisfying `id`, classified.
struct Census {
  std::vector<OrderCensus> orders;
  // First satisfying square (in search order) lacking each column's property.
  std::optional<CayleyTable> counterexample[4];
  bool budget_exhausted = false;
};

Census census(Identity const& id, std::size_t max_order, std::uint64_t budget = kDefaultBudget,
              unsigned threads = 1);

struct PlusCellReport {
  UnitColumn column = UnitColumn::left_unit;
  std::size_t max_order = 0;
  std::vector<std::uint64_t> satisfying_per_order;  // index 0 is order 1
  std::vector<std::size_t> exhaustive_orders;
  std::optional<CayleyTable> counterexample;
  bool budget_exhausted = false;

  bool verified() const { return !counterexample && !budget_exhausted; }
};

// Confirms that every quasigroup of order <= max_order satisfying `id` has
// the column's property.
PlusCellReport verify_plus_cell(Identity const& id, UnitColumn column, std::size_t max_order,
                                std::uint64_t budget = kDefaultBudget, unsigned threads = 1);

nlohmann::json to_json(Witness const& w, SearchResult const& r);

}  // namespace bmlab

#endif  // BMLAB_MODEL_FINDER_HPP
