#pragma once

// Small groups shared by the test suites.

#include "pinext/error.hpp"
#include "pinext/group.hpp"

#include <algorithm>
#include <random>

namespace pinext::testing {

inline GroupPtr c2() { return cyclic_group(2); }
inline GroupPtr c3() { return cyclic_group(3); }
inline GroupPtr c4() { return cyclic_group(4); }
inline GroupPtr klein() { return direct_product(cyclic_group(2), cyclic_group(2)); }
inline GroupPtr q8() { return dicyclic_group(2); }
inline GroupPtr d4() { return dihedral_group(4); }

inline RationalMatrix diag(std::initializer_list<int> entries) {
  std::vector<Rational> d;
  for (int e : entries) d.emplace_back(e);
  return RationalMatrix::diagonal(d);
}

/// Diagonal sign group of rank n: generated by the coordinate reflections.
inline GeneratedGroup gamma(int n) {
  std::vector<RationalMatrix> gens;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> d(n, 1);
    d[i] = -1;
    gens.push_back(RationalMatrix::diagonal(d));
  }
  return generate_matrix_group(n, gens);
}

/// Relabels a group by a random permutation fixing the identity.
template <typename Rng>
GroupPtr relabel(const FiniteGroup& g, Rng& rng) {
  const int n = g.order();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[perm[a]][perm[b]] = perm[g.mul(a, b)];
  return make_group(mul);
}

}  // namespace pinext::testing
