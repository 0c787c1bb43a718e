#pragma once

#include "repext/groups.hpp"

namespace repext {

// Cayley-table constructions of the small groups used by the corpus and the
// test suites. Identity is index 0 in every table.

FiniteGroup cyclic_group(int n);

// Z/a x Z/b, element (i,j) at index i*b + j.
FiniteGroup product_of_cyclic(int a, int b);

// Dihedral group of order 2n: r^k at index k, s r^k at index n + k.
FiniteGroup dihedral_group(int n);

// Quaternion units ordered {1, -1, i, -i, j, -j, k, -k}.
FiniteGroup quaternion_group();

// Generalized quaternion group of order 4n (n >= 2): <a, b | a^{2n}=e,
// b^2=a^n, b a b^{-1}=a^{-1}>, a^k at index k, b a^k at index 2n + k.
FiniteGroup generalized_quaternion_group(int n);

// Heisenberg group over Z/3 (order 27): triples (x,y,z) at index
// 9x + 3y + z with (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x*y').
FiniteGroup heisenberg_group_27();

} // namespace repext
