// SPDX-License-Identifier: Apache-2.0
//
// Independent oracles used by the test suites. Everything here is computed
// from first principles (permutation composition, direct summation, brute
// force scans) without calling the code paths under test.

#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <numeric>
#include <vector>

namespace oracles {

// Cayley table of S_n from explicit permutation composition, permutations in
// lexicographic one-line order, (p*q)(i) = p(q(i)).
inline std::vector<std::vector<int>> symmetric_table(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const int m = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::vector<int> c(n);
      for (int k = 0; k < n; ++k) c[k] = perms[i][perms[j][k]];
      t[i][j] = index.at(c);
    }
  return t;
}

// Brute-force conjugacy class size multiset from a raw table.
inline std::vector<int> class_sizes(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  std::vector<int> inv(n);
  int e = -1;
  for (int c = 0; c < n; ++c) {
    bool ok = true;
    for (int x = 0; x < n; ++x) ok = ok && t[c][x] == x && t[x][c] == x;
    if (ok) e = c;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (t[x][y] == e) inv[x] = y;
  std::vector<char> seen(n, 0);
  std::vector<int> sizes;
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<char> cls(n, 0);
    for (int g = 0; g < n; ++g) cls[t[t[g][x]][inv[g]]] = 1;
    int sz = 0;
    for (int y = 0; y < n; ++y)
      if (cls[y]) {
        seen[y] = 1;
        ++sz;
      }
    sizes.push_back(sz);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// Brute-force center size.
inline int center_size(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  int z = 0;
  for (int x = 0; x < n; ++x) {
    bool central = true;
    for (int y = 0; y < n && central; ++y) central = t[x][y] == t[y][x];
    if (central) ++z;
  }
  return z;
}

inline bool table_commutative(const std::vector<std::vector<int>>& t) {
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t y = x + 1; y < t.size(); ++y)
      if (t[x][y] != t[y][x]) return false;
  return true;
}

// Frozen fixtures discovered by exhaustive search over 5x5 Latin squares with
// two-sided identity 0 and rows/columns starting with the row index.
// Latin + identity + two-sided inverses, but (a*b)*c != a*(b*c) somewhere:
inline std::vector<std::vector<int>> nonassociative_loop() {
  return {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
}

// Latin + identity, but element 2 has only a one-sided inverse:
inline std::vector<std::vector<int>> no_inverse_table() {
  return {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 3, 4, 0, 1}, {3, 4, 1, 2, 0}, {4, 2, 0, 1, 3}};
}

// Latin square with no two-sided identity:
inline std::vector<std::vector<int>> no_identity_table() {
  return {{1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
}

}  // namespace oracles
