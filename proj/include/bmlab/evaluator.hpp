// Semantic satisfaction of identities on Cayley tables.

#ifndef BMLAB_EVALUATOR_HPP
#define BMLAB_EVALUATOR_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "bmlab/cayley_table.hpp"
#include "bmlab/identity.hpp"

namespace bmlab {

// Values for x, y, z; unbound entries are empty.
struct Assignment {
  std::array<std::optional<Element>, kVariableCount> values;

  static Assignment of(Element x, Element y, Element z) { return {{x, y, z}}; }
};

class UnboundVariable : public std::invalid_argument {
 public:
  explicit UnboundVariable(char name)
      : std::invalid_argument(std::string("variable '") + name + "' is not bound") {}
};

Element eval_term(Term const& t, CayleyTable const& q, Assignment const& a);

struct SatReport {
  bool holds = true;
  std::optional<std::array<Element, 3>> failing_assignment;  // (x, y, z)
  std::uint64_t assignments_checked = 0;
};

// Checks all n^3 assignments with x outermost and z innermost; the reported
// failure is the lexicographically first one.
SatReport satisfies(CayleyTable const& q, Identity const& id);

// Shared classification path for search predicates and reports.
UnitProfile classify(CayleyTable const& q);

// Satisfying tables of order n in row-major lexicographic order.
void for_each_satisfying(Identity const& id, std::size_t n,
                         std::function<bool(CayleyTable const&)> const& visit);
std::vector<CayleyTable> satisfying_quasigroups(Identity const& id, std::size_t n);

// Postfix form of both sides for the hot loops of the model finder. Cells of a
// partial table hold -1 where undecided. Common outer factors are cancelled
// first, which is sound on Latin squares only, so the results agree with
// satisfies() on complete tables but may use fewer variables.
class CompiledIdentity {
 public:
  explicit CompiledIdentity(Identity const& id);

  static constexpr int kUndecided = -1;

  // Value of one side under (x, y, z), or kUndecided if a needed cell is open.
  int eval_side(int side, std::span<std::int8_t const> cells, std::size_t n,
                std::array<int, 3> const& xyz) const;

  // Outcome of one ground instance on a partial table: both sides decided
  // and equal, decided and different, or waiting on the first open cell
  // (row-major index) that the evaluation needs. A blocked instance whose
  // open cell is the last product of its side, with the other side decided,
  // forces that cell to the other side's value.
  struct Probe {
    enum class Status { holds, violated, blocked } status;
    std::size_t cell = 0;
    int forced = kUndecided;
  };
  Probe probe(std::span<std::int8_t const> cells, std::size_t n,
              std::array<int, 3> const& xyz) const;

  // False iff some fully decided instance is violated. Scans all n^3 instances.
  bool consistent(std::span<std::int8_t const> cells, std::size_t n) const;
  // Variables still present after cancellation; instances that differ only
  // in an unused variable are duplicates.
  bool uses(std::size_t var) const { return used_[var]; }

  // For a complete table.
  bool holds(std::span<std::int8_t const> cells, std::size_t n) const { return consistent(cells, n); }

 private:
  static constexpr std::int8_t kMul = -1;
  // Side value, or -(1 + cell) for the first open cell it needs; `at_root`
  // tells whether that cell is the side's final product.
  long eval_or_block(int side, std::span<std::int8_t const> cells, std::size_t n,
                     std::array<int, 3> const& xyz, bool* at_root = nullptr) const;
  std::array<std::vector<std::int8_t>, 2> code_;
  std::array<bool, kVariableCount> used_{};
};

nlohmann::json to_json(SatReport const& r);
nlohmann::json to_json(UnitProfile const& p);

}  // namespace bmlab

#endif  // BMLAB_EVALUATOR_HPP
