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

#include <random>
#include <sstream>

#include "doctest.h"
#include "isospec/field.hpp"
#include "oracles.hpp"

using namespace isospec;

TEST_CASE("residues reduce into [0, p)") {
  CHECK(reduce(-1, 3) == 2);
  CHECK(reduce(7, 3) == 1);
  CHECK(reduce(-9, 3) == 0);
  CHECK(reduce(-1, 5) == 4);
  for (unsigned p : {2u, 3u, 5u, 7u, 251u}) {
    for (unsigned x = 1; x < p; ++x) CHECK((x * inverse_residue(static_cast<Residue>(x), p)) % p == 1);
  }
  CHECK_THROWS_AS(inverse_residue(0, 3), NotInvertible);
}

TEST_CASE("vector arithmetic") {
  const Vector x({1, 2, 0, 1});
  const Vector y({2, 2, 1, 0});
  CHECK(x + y == Vector({0, 1, 1, 1}));
  CHECK(x - y == Vector({2, 0, 2, 1}));
  CHECK(-x == Vector({2, 1, 0, 2}));
  CHECK(Residue{2} * x == Vector({2, 1, 0, 2}));
  CHECK((x - x).is_zero());
  CHECK(Vector::unit(4, 2) == Vector({0, 0, 1, 0}));
  CHECK_THROWS_AS(x + Vector(3), DimensionMismatch);
}

TEST_CASE("matrix product agrees with the naive oracle") {
  std::mt19937_64 rng(7);
  for (unsigned p : {3u, 5u}) {
    for (std::size_t n : {1u, 4u, 5u, 17u}) {
      for (int t = 0; t < 10; ++t) {
        const Matrix a = oracle::random_matrix(n, p, rng, t % 2 ? 0.3 : 1.0);
        const Matrix b = oracle::random_matrix(n, p, rng);
        CHECK(a * b == oracle::to_matrix(oracle::mul(oracle::grid(a), oracle::grid(b), p), p));
      }
    }
  }
}

TEST_CASE("ring axioms on random 4x4 and 17x17 matrices") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {4u, 17u}) {
    for (int t = 0; t < 20; ++t) {
      const Matrix a = oracle::random_matrix(n, 3, rng);
      const Matrix b = oracle::random_matrix(n, 3, rng);
      const Matrix c = oracle::random_matrix(n, 3, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a * Matrix::identity(n) == a);
      CHECK(transpose(a * b) == transpose(b) * transpose(a));
    }
  }
}

TEST_CASE("vector times matrix matches the row of a product") {
  std::mt19937_64 rng(3);
  const Matrix a = oracle::random_matrix(4, 3, rng);
  const Matrix b = oracle::random_matrix(4, 3, rng);
  for (std::size_t i = 0; i < 4; ++i) CHECK(a.row(i) * b == (a * b).row(i));
}

TEST_CASE("inverse of random invertible matrices") {
  std::mt19937_64 rng(5);
  int inverted = 0;
  for (int t = 0; t < 200; ++t) {
    const Matrix a = oracle::random_matrix(5, 3, rng);
    if (oracle::rank(oracle::grid(a), 3) < 5) {
      CHECK_THROWS_AS(mat_inv(a), NotInvertible);
      continue;
    }
    const Matrix ai = mat_inv(a);
    CHECK((a * ai).is_identity());
    CHECK((ai * a).is_identity());
    ++inverted;
  }
  CHECK(inverted > 50);
}

TEST_CASE("rank and kernel dimension add up") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const Matrix a = oracle::random_matrix(6, 3, rng, 0.35);
    const auto k = kernel_basis(a);
    CHECK(rank(a) == oracle::rank(oracle::grid(a), 3));
    CHECK(rank(a) + k.size() == 6);
    for (const auto& x : k) CHECK((x * a).is_zero());
  }
}

TEST_CASE("spans and subspace membership") {
  const std::vector<Vector> basis{Vector({1, 0, 0, 0}), Vector({0, 0, 1, 1})};
  CHECK(span_dimension(basis) == 2);
  CHECK(in_span(basis, Vector({2, 0, 1, 1})));
  CHECK_FALSE(in_span(basis, Vector({0, 1, 0, 0})));
  const auto elems = span_elements(basis, 4);
  CHECK(elems.size() == 9);
  for (const auto& e : elems) CHECK(in_span(basis, e));
  const std::vector<Vector> dependent{Vector({1, 1, 0, 0}), Vector({2, 2, 0, 0})};
  CHECK(span_dimension(dependent) == 1);
  CHECK(left_kernel(dependent).size() == 1);
}

TEST_CASE("matrix powers and element orders") {
  const Matrix a{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, -1, -1, -1}};
  CHECK(element_order(a, 100) == 5);
  CHECK(oracle::order(oracle::grid(a), 3) == 5);
  CHECK(mat_pow(a, 5).is_identity());
  CHECK(mat_pow(a, 0).is_identity());
  CHECK(mat_pow(a, 7) == a * a);
  CHECK_THROWS_AS(element_order(a, 4), OrderBoundExceeded);
  CHECK_THROWS_AS(element_order(Matrix(3), 100), OrderBoundExceeded);

  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    const Matrix m = oracle::random_matrix(4, 3, rng);
    if (oracle::rank(oracle::grid(m), 3) < 4) continue;
    CHECK(element_order(m, 1000) == oracle::order(oracle::grid(m), 3));
  }
}

TEST_CASE("blocks") {
  Matrix m = Matrix::identity(17);
  const Matrix b{{1, 2, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  m.set_block(1, 5, b);
  CHECK(m.block(1, 5, 4) == b);
  CHECK(m.at(1, 6) == 2);
  CHECK(Matrix::unflatten(b.flatten()) == b);
}

TEST_CASE("text round trip and format errors") {
  std::mt19937_64 rng(19);
  const Matrix m = oracle::random_matrix(17, 3, rng);
  CHECK(matrix_from_text(to_text(m)) == m);
  const Matrix five = oracle::random_matrix(4, 5, rng);
  CHECK(matrix_from_text(to_text(five)) == five);
  std::istringstream two(to_text(m) + "\n" + to_text(five));
  CHECK(read_matrix(two) == m);
  CHECK(read_matrix(two) == five);

  CHECK(to_symmetric_text(Matrix{{2, 0}, {1, 1}}).find("-1") != std::string::npos);
  CHECK_THROWS_AS(matrix_from_text("2 3\n1 0\n0"), FormatError);
  CHECK_THROWS_AS(matrix_from_text("2 4\n1 0\n0 1\n"), FormatError);
  CHECK_THROWS_AS(matrix_from_text("2 3\n1 0\n0 x\n"), FormatError);
  CHECK_THROWS_AS(matrix_from_text(""), FormatError);
}

TEST_CASE("conjugation is a right action") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    const Matrix m = oracle::random_matrix(4, 3, rng);
    Matrix g = oracle::random_matrix(4, 3, rng);
    Matrix h = oracle::random_matrix(4, 3, rng);
    if (rank(g) < 4 || rank(h) < 4) continue;
    CHECK(conjugate(conjugate(m, g), h) == conjugate(m, g * h));
  }
}
