// Standard quasigroups built from closed-form multiplication rules.

#ifndef BMLAB_CONSTRUCTIONS_HPP
#define BMLAB_CONSTRUCTIONS_HPP

#include <cstddef>

#include "bmlab/cayley_table.hpp"

namespace bmlab {

// Z_n under addition mod n.
CayleyTable cyclic_group(std::size_t n);

// Dihedral group of order 2k (k >= 1): elements r^i are 0..k-1, s r^i are k..2k-1.
CayleyTable dihedral_group(std::size_t k);

// Quaternion group Q8: 0,1,2,3 = 1,i,j,k and 4..7 their negatives.
CayleyTable quaternion_group();

// Chein double M(G, 2) of a group G: G u Gu with
//   g.h = gh,  g.(hu) = (hg)u,  (gu).h = (gh^-1)u,  (gu).(hu) = h^-1 g.
// A Moufang loop of order 2|G|, non-associative iff G is non-abelian.
// Elements of G keep their indices; gu is |G| + g.
// Throws std::invalid_argument if `group` is not a group.
CayleyTable chein_double(CayleyTable const& group);

}  // namespace bmlab

#endif  // BMLAB_CONSTRUCTIONS_HPP
