// Shared test helpers: grids from the theorems, a naive Latin-square oracle
// and a seeded random table source.

#ifndef BMLAB_TESTS_SUPPORT_HPP
#define BMLAB_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "bmlab/cayley_table.hpp"
#include "bmlab/constructions.hpp"
#include "bmlab/model_finder.hpp"

namespace bmtest {

using Grid = std::vector<std::vector<int>>;

inline Grid const kZ3{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
inline Grid const kF7{{1, 2, 0}, {0, 1, 2}, {2, 0, 1}};
inline Grid const kF9{{1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
inline Grid const kF19{{1, 0, 2}, {2, 1, 0}, {0, 2, 1}};

inline bmlab::CayleyTable table(Grid const& g) { return bmlab::CayleyTable::validate(g); }

// Every Latin square of order n: all n-tuples of row permutations whose
// columns are also permutations. Shares no code with the backtracker.
inline std::vector<Grid> naive_latin_squares(std::size_t n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::vector<Grid> out;
  Grid rows(n);
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    for (std::size_t r = 0; r < n; ++r) rows[r] = perms[pick[r]];
    bool ok = true;
    for (std::size_t c = 0; c < n && ok; ++c) {
      std::vector<bool> seen(n, false);
      for (std::size_t r = 0; r < n && ok; ++r) {
        ok = !seen[rows[r][c]];
        seen[rows[r][c]] = true;
      }
    }
    if (ok) out.push_back(rows);
    std::size_t i = n;
    while (i > 0 && ++pick[i - 1] == perms.size()) pick[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

// All Latin squares of orders 1..max_order, via the library enumerator.
inline std::vector<bmlab::CayleyTable> all_squares_up_to(std::size_t max_order) {
  std::vector<bmlab::CayleyTable> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    bmlab::enumerate_latin_squares(n, [&](bmlab::CayleyTable const& q) {
      out.push_back(q);
      return true;
    });
  }
  return out;
}

// Random isotope of a seed square: rows, columns and symbols each permuted.
// Orders up to 4 draw the seed from the full list; larger orders draw from
// a few structurally different squares.
class RandomTables {
 public:
  explicit RandomTables(unsigned seed) : rng_(seed) {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (auto const& g : naive_latin_squares(n)) seeds_[n].push_back(g);
    }
    for (std::size_t n = 5; n <= 6; ++n) seeds_[n].push_back(bmlab::cyclic_group(n).to_grid());
    seeds_[6].push_back(bmlab::dihedral_group(3).to_grid());
    seeds_[5].push_back({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}});
    seeds_[6].push_back({{0, 1, 2, 3, 4, 5}, {1, 0, 3, 5, 2, 4}, {2, 5, 0, 4, 1, 3},
                         {3, 4, 1, 0, 5, 2}, {4, 3, 5, 2, 0, 1}, {5, 2, 4, 1, 3, 0}});
  }

  bmlab::CayleyTable next(std::size_t n) {
    auto const& pool = seeds_[n];
    Grid const& seed = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng_)];
    auto const pr = perm(n), pc = perm(n), ps = perm(n);
    Grid g(n, std::vector<int>(n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) g[pr[r]][pc[c]] = ps[seed[r][c]];
    }
    return bmlab::CayleyTable::validate(g);
  }

 private:
  std::vector<int> perm(std::size_t n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng_);
    return p;
  }

  std::mt19937 rng_;
  std::vector<Grid> seeds_[7];
};

}  // namespace bmtest

#endif  // BMLAB_TESTS_SUPPORT_HPP
