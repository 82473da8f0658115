// Finite quasigroups stored as Cayley tables over {0, ..., n-1}.

#ifndef BMLAB_CAYLEY_TABLE_HPP
#define BMLAB_CAYLEY_TABLE_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bmlab {

using Element = std::uint16_t;

class TableError : public std::runtime_error {
 public:
  enum class Kind { NotSquare, EntryOutOfRange, RowNotPermutation, ColumnNotPermutation, Format };

  TableError(Kind kind, std::string message, std::size_t row = 0, std::size_t col = 0)
      : std::runtime_error(std::move(message)), kind_(kind), row_(row), col_(col) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  Kind kind_;
  std::size_t row_;
  std::size_t col_;
};

// A Latin square, i.e. the multiplication table of a finite quasigroup.
// Only obtainable through validate(), so every instance satisfies the Latin
// property: all rows and all columns are permutations of {0..n-1}.
class CayleyTable {
 public:
  // Throws TableError describing the first defect found: entries are
  // range-checked first, then rows top to bottom, then columns.
  static CayleyTable validate(std::vector<std::vector<int>> const& grid);
  static CayleyTable validate(std::size_t order, std::span<int const> row_major);

  std::size_t order() const noexcept { return order_; }

  Element mul(Element x, Element y) const noexcept { return cells_[x * order_ + y]; }
  Element operator()(Element x, Element y) const noexcept { return mul(x, y); }

  // x \ y: the unique z with x * z = y.
  Element left_divide(Element x, Element y) const noexcept;
  // y / x: the unique z with z * x = y.
  Element right_divide(Element y, Element x) const noexcept;

  std::span<Element const> row(Element x) const noexcept {
    return {cells_.data() + x * order_, order_};
  }
  std::span<Element const> cells() const noexcept { return cells_; }
  std::vector<std::vector<int>> to_grid() const;

  friend bool operator==(CayleyTable const&, CayleyTable const&) = default;
  // Row-major lexicographic order; tables of smaller order sort first.
  friend std::strong_ordering operator<=>(CayleyTable const& a, CayleyTable const& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    return a.cells_ <=> b.cells_;
  }

 private:
  CayleyTable(std::size_t order, std::vector<Element> cells)
      : order_(order), cells_(std::move(cells)) {}

  std::size_t order_;
  std::vector<Element> cells_;
};

// (12)-parastrophe: x * y = y . x, the transpose of the table.
CayleyTable parastrophe12(CayleyTable const& q);

struct UnitProfile {
  std::optional<Element> left_unit;    // f with f.x = x for all x
  std::optional<Element> right_unit;   // e with x.e = x for all x
  std::optional<Element> middle_unit;  // m with x.x = m for all x
  std::vector<Element> idempotents;
  bool is_loop = false;
  bool is_group = false;
  // First (x, y, z) in x-outer, z-inner order with x(yz) != (xy)z.
  std::optional<std::array<Element, 3>> associativity_witness;

  friend bool operator==(UnitProfile const&, UnitProfile const&) = default;
};

std::optional<Element> left_unit(CayleyTable const& q);
std::optional<Element> right_unit(CayleyTable const& q);
std::optional<std::array<Element, 3>> find_associativity_failure(CayleyTable const& q);
UnitProfile units(CayleyTable const& q);

struct LocalUnits {
  Element left;   // f_y with f_y . y = y
  Element right;  // e_y with y . e_y = y
};
LocalUnits local_units(CayleyTable const& q, Element y);

// Text format:
//   order n
//   n lines of n whitespace-separated integers
// '#' starts a comment that runs to the end of the line.
CayleyTable parse_table(std::string_view text);
CayleyTable read_table(std::istream& in);
CayleyTable load_table(std::string const& path);
std::string format_table(CayleyTable const& q);

}  // namespace bmlab

#endif  // BMLAB_CAYLEY_TABLE_HPP
