#include "bmlab/cayley_table.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace bmlab {

namespace {

std::string position(std::size_t row, std::size_t col) {
  return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

}  // namespace

CayleyTable CayleyTable::validate(std::vector<std::vector<int>> const& grid) {
  std::size_t const n = grid.size();
  std::vector<int> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (grid[r].size() != n) {
      throw TableError(TableError::Kind::NotSquare,
                       "row " + std::to_string(r) + " has " + std::to_string(grid[r].size()) +
                           " entries, expected " + std::to_string(n),
                       r);
    }
    flat.insert(flat.end(), grid[r].begin(), grid[r].end());
  }
  return validate(n, flat);
}

CayleyTable CayleyTable::validate(std::size_t order, std::span<int const> row_major) {
  if (order == 0) {
    throw TableError(TableError::Kind::NotSquare, "table order must be at least 1");
  }
  if (row_major.size() != order * order) {
    throw TableError(TableError::Kind::NotSquare,
                     "expected " + std::to_string(order * order) + " entries, got " +
                         std::to_string(row_major.size()));
  }
  std::vector<Element> cells(order * order);
  for (std::size_t r = 0; r < order; ++r) {
    for (std::size_t c = 0; c < order; ++c) {
      int const v = row_major[r * order + c];
      if (v < 0 || static_cast<std::size_t>(v) >= order) {
        throw TableError(TableError::Kind::EntryOutOfRange,
                         "entry " + std::to_string(v) + " at " + position(r, c) +
                             " is outside 0.." + std::to_string(order - 1),
                         r, c);
      }
      cells[r * order + c] = static_cast<Element>(v);
    }
  }
  std::vector<bool> seen(order);
  for (std::size_t r = 0; r < order; ++r) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t c = 0; c < order; ++c) {
      auto v = cells[r * order + c];
      if (seen[v]) {
        throw TableError(TableError::Kind::RowNotPermutation,
                         "row " + std::to_string(r) + " repeats " + std::to_string(v), r);
      }
      seen[v] = true;
    }
  }
  for (std::size_t c = 0; c < order; ++c) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t r = 0; r < order; ++r) {
      auto v = cells[r * order + c];
      if (seen[v]) {
        throw TableError(TableError::Kind::ColumnNotPermutation,
                         "column " + std::to_string(c) + " repeats " + std::to_string(v), 0, c);
      }
      seen[v] = true;
    }
  }
  return CayleyTable(order, std::move(cells));
}

Element CayleyTable::left_divide(Element x, Element y) const noexcept {
  auto r = row(x);
  for (std::size_t z = 0; z < order_; ++z) {
    if (r[z] == y) return static_cast<Element>(z);
  }
  return 0;  // unreachable for a Latin square
}

Element CayleyTable::right_divide(Element y, Element x) const noexcept {
  for (std::size_t z = 0; z < order_; ++z) {
    if (cells_[z * order_ + x] == y) return static_cast<Element>(z);
  }
  return 0;
}

std::vector<std::vector<int>> CayleyTable::to_grid() const {
  std::vector<std::vector<int>> grid(order_, std::vector<int>(order_));
  for (std::size_t r = 0; r < order_; ++r) {
    for (std::size_t c = 0; c < order_; ++c) grid[r][c] = cells_[r * order_ + c];
  }
  return grid;
}

CayleyTable parastrophe12(CayleyTable const& q) {
  auto const n = q.order();
  std::vector<int> t(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      t[c * n + r] = q.mul(static_cast<Element>(r), static_cast<Element>(c));
    }
  }
  return CayleyTable::validate(n, t);
}

std::optional<Element> left_unit(CayleyTable const& q) {
  auto const n = q.order();
  for (std::size_t f = 0; f < n; ++f) {
    auto r = q.row(static_cast<Element>(f));
    bool identity = true;
    for (std::size_t x = 0; x < n && identity; ++x) identity = r[x] == x;
    if (identity) return static_cast<Element>(f);
  }
  return std::nullopt;
}

std::optional<Element> right_unit(CayleyTable const& q) {
  auto const n = q.order();
  for (std::size_t e = 0; e < n; ++e) {
    bool identity = true;
    for (std::size_t x = 0; x < n && identity; ++x) {
      identity = q.mul(static_cast<Element>(x), static_cast<Element>(e)) == x;
    }
    if (identity) return static_cast<Element>(e);
  }
  return std::nullopt;
}

std::optional<std::array<Element, 3>> find_associativity_failure(CayleyTable const& q) {
  auto const n = static_cast<Element>(q.order());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element const xy = q(x, y);
      for (Element z = 0; z < n; ++z) {
        if (q(x, q(y, z)) != q(xy, z)) return std::array<Element, 3>{x, y, z};
      }
    }
  }
  return std::nullopt;
}

UnitProfile units(CayleyTable const& q) {
  UnitProfile p;
  auto const n = static_cast<Element>(q.order());
  p.left_unit = left_unit(q);
  p.right_unit = right_unit(q);

  Element const square0 = q(0, 0);
  bool constant_square = true;
  for (Element x = 0; x < n; ++x) {
    Element const sq = q(x, x);
    if (sq != square0) constant_square = false;
    if (sq == x) p.idempotents.push_back(x);
  }
  if (constant_square) p.middle_unit = square0;

  p.is_loop = p.left_unit.has_value() && p.right_unit.has_value();
  p.associativity_witness = find_associativity_failure(q);
  p.is_group = !p.associativity_witness.has_value();
  return p;
}

LocalUnits local_units(CayleyTable const& q, Element y) {
  return {q.right_divide(y, y), q.left_divide(y, y)};
}

CayleyTable parse_table(std::string_view text) {
  std::vector<std::string> tokens;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string w;
    while (words >> w) tokens.push_back(w);
  }
  if (tokens.size() < 2 || tokens[0] != "order") {
    throw TableError(TableError::Kind::Format, "table text must start with 'order <n>'");
  }
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    long const parsed = std::stol(tokens[1], &used);
    if (used != tokens[1].size() || parsed < 1) throw std::invalid_argument("order");
    n = static_cast<std::size_t>(parsed);
  } catch (std::logic_error const&) {
    throw TableError(TableError::Kind::Format, "invalid order '" + tokens[1] + "'");
  }
  if (tokens.size() - 2 != n * n) {
    throw TableError(TableError::Kind::NotSquare,
                     "order " + std::to_string(n) + " needs " + std::to_string(n * n) +
                         " entries, found " + std::to_string(tokens.size() - 2));
  }
  std::vector<int> cells;
  cells.reserve(n * n);
  for (std::size_t i = 2; i < tokens.size(); ++i) {
    try {
      std::size_t used = 0;
      int const v = std::stoi(tokens[i], &used);
      if (used != tokens[i].size()) throw std::invalid_argument("entry");
      cells.push_back(v);
    } catch (std::logic_error const&) {
      throw TableError(TableError::Kind::Format, "invalid entry '" + tokens[i] + "'");
    }
  }
  return CayleyTable::validate(n, cells);
}

CayleyTable read_table(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_table(buffer.str());
}

CayleyTable load_table(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw TableError(TableError::Kind::Format, "cannot open table file '" + path + "'");
  return read_table(in);
}

std::string format_table(CayleyTable const& q) {
  std::ostringstream out;
  out << "order " << q.order() << '\n';
  auto const n = q.order();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (c) out << ' ';
      out << q.mul(static_cast<Element>(r), static_cast<Element>(c));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace bmlab
