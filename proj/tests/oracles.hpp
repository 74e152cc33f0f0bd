/*
 * Copyright 2026 The isospec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ISOSPEC_TESTS_ORACLES_HPP
#define ISOSPEC_TESTS_ORACLES_HPP

// Deliberately naive reference implementations used only by the tests. They
// share no code with the library beyond reading entries out of a Matrix.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "isospec/field.hpp"

namespace oracle {

using Grid = std::vector<std::vector<long long>>;

inline Grid grid(const isospec::Matrix& m) {
  Grid g(m.dim(), std::vector<long long>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) g[i][j] = m.at(i, j);
  }
  return g;
}

inline Grid mul(const Grid& a, const Grid& b, long long p) {
  const std::size_t n = a.size();
  Grid c(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      long long s = 0;
      for (std::size_t k = 0; k < n; ++k) s += a[i][k] * b[k][j];
      c[i][j] = ((s % p) + p) % p;
    }
  }
  return c;
}

inline Grid identity(std::size_t n) {
  Grid g(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = 1;
  return g;
}

inline Grid power(const Grid& a, std::uint64_t k, long long p) {
  Grid r = identity(a.size());
  for (std::uint64_t i = 0; i < k; ++i) r = mul(r, a, p);
  return r;
}

/// Least k >= 1 with a^k = 1, or 0 if none up to `bound`.
inline std::uint64_t order(const Grid& a, long long p, std::uint64_t bound = 1000) {
  const Grid id = identity(a.size());
  Grid r = a;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (r == id) return k;
    r = mul(r, a, p);
  }
  return 0;
}

inline isospec::Matrix to_matrix(const Grid& g, unsigned p) {
  isospec::Matrix m(g.size(), p);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) m.set(i, j, g[i][j]);
  }
  return m;
}

inline isospec::Matrix random_matrix(std::size_t n, unsigned p, std::mt19937_64& rng, double density = 1.0) {
  std::uniform_int_distribution<unsigned> r(0, p - 1);
  std::bernoulli_distribution keep(density);
  isospec::Matrix m(n, p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (keep(rng)) m.set(i, j, r(rng));
    }
  }
  return m;
}

/// Rank by plain Gaussian elimination on a copy.
inline std::size_t rank(Grid g, long long p) {
  const std::size_t rows = g.size();
  const std::size_t cols = rows == 0 ? 0 : g[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && g[pivot][c] % p == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(g[pivot], g[r]);
    long long inv = 1;
    while ((g[r][c] * inv) % p != 1) ++inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || g[i][c] % p == 0) continue;
      const long long f = (g[i][c] * inv) % p;
      for (std::size_t j = 0; j < cols; ++j) g[i][j] = (((g[i][j] - f * g[r][j]) % p) + p) % p;
    }
    ++r;
  }
  return r;
}

/// Element orders of the group a^k b^j (k < 5, j < 4), by naive powering.
inline std::set<std::uint64_t> word_orders(const Grid& a, const Grid& b, long long p) {
  std::set<std::uint64_t> out;
  for (int k = 0; k < 5; ++k) {
    for (int j = 0; j < 4; ++j) out.insert(order(mul(power(a, k, p), power(b, j, p), p), p));
  }
  return out;
}

}  // namespace oracle

#endif  // ISOSPEC_TESTS_ORACLES_HPP
