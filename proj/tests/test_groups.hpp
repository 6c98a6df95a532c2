#pragma once

// Small groups used across the tests, including non-abelian ones built
// from permutation and matrix multiplication tables.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <vector>

#include "shortdiff/group.hpp"

namespace testing_groups {

using shortdiff::FiniteGroup;

/// Cayley table of a finite set closed under an operation; `elems[0]` must be the identity.
template <class T, class Op>
FiniteGroup from_elements(const std::vector<T>& elems, Op op) {
  std::map<T, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> table(elems.size(), std::vector<int>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) table[a][b] = index.at(op(elems[a], elems[b]));
  return FiniteGroup::from_cayley(table);
}

/// S_n with composition (a∘b)(i) = a[b[i]]; lexicographic order puts the identity first.
inline FiniteGroup symmetric(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return from_elements(perms, [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
  });
}

/// D_n as pairs (r, s): rotation r, reflection flag s.
inline FiniteGroup dihedral(int n) {
  std::vector<std::pair<int, int>> elems;
  for (int s = 0; s < 2; ++s)
    for (int r = 0; r < n; ++r) elems.emplace_back(r, s);
  return from_elements(elems, [n](std::pair<int, int> a, std::pair<int, int> b) {
    const int r = a.second ? (a.first - b.first + n) % n : (a.first + b.first) % n;
    return std::pair<int, int>{r, a.second ^ b.second};
  });
}

/// Q_8 as unit quaternions ±1, ±i, ±j, ±k encoded by (sign, unit index).
inline FiniteGroup quaternion() {
  // unit products: table[u][w] = (sign, unit) for u,w in {1,i,j,k}
  static const std::array<std::array<std::pair<int, int>, 4>, 4> mul{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  std::vector<std::pair<int, int>> elems;
  for (int s : {1, -1})
    for (int u = 0; u < 4; ++u) elems.emplace_back(s, u);
  return from_elements(elems, [](std::pair<int, int> a, std::pair<int, int> b) {
    const auto [s, u] = mul[a.second][b.second];
    return std::pair<int, int>{a.first * b.first * s, u};
  });
}

inline FiniteGroup alternating4() {
  std::vector<int> p{0, 1, 2, 3};
  std::vector<std::vector<int>> perms;
  do {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inv += p[i] > p[j];
    if (inv % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return from_elements(perms, [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(4);
    for (int i = 0; i < 4; ++i) c[i] = a[b[i]];
    return c;
  });
}

/// Groups of order <= 24 covering abelian, non-abelian, cyclic and non-cyclic cases.
inline std::vector<FiniteGroup> small_pool() {
  return {FiniteGroup::cyclic(2),
          FiniteGroup::cyclic(6),
          FiniteGroup::cyclic(7),
          FiniteGroup::cyclic(12),
          FiniteGroup::elementary_abelian(2, 3),
          FiniteGroup::elementary_abelian(3, 2),
          FiniteGroup::direct_product(std::vector{FiniteGroup::cyclic(2), FiniteGroup::cyclic(4)}),
          symmetric(3),
          dihedral(4),
          dihedral(5),
          quaternion(),
          alternating4(),
          symmetric(4)};
}

}  // namespace testing_groups
