#include "bmlab/constructions.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace bmlab {

CayleyTable cyclic_group(std::size_t n) {
  std::vector<int> cells(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) cells[a * n + b] = static_cast<int>((a + b) % n);
  }
  return CayleyTable::validate(n, cells);
}

CayleyTable dihedral_group(std::size_t k) {
  // r^i s^a encoded as a*k + i, with s r = r^-1 s.
  std::size_t const n = 2 * k;
  std::vector<int> cells(n * n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      std::size_t const i = p % k, a = p / k, j = q % k, b = q / k;
      // (r^i s^a)(r^j s^b) = r^(i + (-1)^a j) s^(a+b)
      std::size_t const rot = a == 0 ? (i + j) % k : (i + k - j) % k;
      cells[p * n + q] = static_cast<int>(((a + b) % 2) * k + rot);
    }
  }
  return CayleyTable::validate(n, cells);
}

CayleyTable quaternion_group() {
  // Products of the units 1,i,j,k as (sign, unit).
  constexpr std::array<std::array<std::array<int, 2>, 4>, 4> unit{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  std::vector<int> cells(64);
  for (int p = 0; p < 8; ++p) {
    for (int q = 0; q < 8; ++q) {
      auto const [sign, u] = unit[p % 4][q % 4];
      int const s = sign * (p < 4 ? 1 : -1) * (q < 4 ? 1 : -1);
      cells[p * 8 + q] = u + (s < 0 ? 4 : 0);
    }
  }
  return CayleyTable::validate(8, cells);
}

CayleyTable chein_double(CayleyTable const& group) {
  auto const profile = units(group);
  if (!profile.is_group) throw std::invalid_argument("chein_double needs a group");
  auto const n = group.order();
  Element const one = *profile.left_unit;
  auto inverse = [&](Element h) { return group.left_divide(h, one); };

  std::size_t const m = 2 * n;
  std::vector<int> cells(m * m);
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      auto const g = static_cast<Element>(p % n);
      auto const h = static_cast<Element>(q % n);
      bool const gu = p >= n, hu = q >= n;
      std::size_t r;
      if (!gu && !hu) {
        r = group(g, h);
      } else if (!gu) {
        r = n + group(h, g);
      } else if (!hu) {
        r = n + group(g, inverse(h));
      } else {
        r = group(inverse(h), g);
      }
      cells[p * m + q] = static_cast<int>(r);
    }
  }
  return CayleyTable::validate(m, cells);
}

}  // namespace bmlab
