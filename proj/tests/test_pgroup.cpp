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

#include "doctest.h"
#include "isospec/pgroup.hpp"
#include "oracles.hpp"

using namespace isospec;

namespace {

struct Fixture {
  Construction k = standard_construction();
  std::vector<Matrix> f = enumerate_frobenius(k.fp);
  CGroup group = enumerate_c_group(k, f);
};

const Fixture& fixture() {
  static const Fixture fx;
  return fx;
}

PElement random_element(std::mt19937_64& rng) { return random_p_element(fixture().group, rng); }

Matrix naive_product(const Matrix& x, const Matrix& y) {
  return oracle::to_matrix(oracle::mul(oracle::grid(x), oracle::grid(y), 3), 3);
}

}  // namespace

TEST_CASE("<C>^F has 6561 elements") {
  CHECK(fixture().group.order() == 6561);
  CHECK(fixture().group.contains(CTuple::identity()));
  CHECK(fixture().group.contains(c_tuple_of(fixture().k)));
}

TEST_CASE("p_mul agrees with the naive 17x17 product") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 300; ++t) {
    const PElement x = random_element(rng);
    const PElement y = random_element(rng);
    CHECK(embed_matrix(p_mul(x, y)) == naive_product(embed_matrix(x), embed_matrix(y)));
  }
}

TEST_CASE("p_mul is associative with identity and inverses") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 200; ++t) {
    const PElement x = random_element(rng);
    const PElement y = random_element(rng);
    const PElement z = random_element(rng);
    CHECK(p_mul(p_mul(x, y), z) == p_mul(x, p_mul(y, z)));
    CHECK(p_mul(x, PElement::identity()) == x);
    CHECK(p_mul(x, p_inverse(x)).is_identity());
    CHECK(p_mul(p_inverse(x), x).is_identity());
  }
}

TEST_CASE("c_mul law uses f3 f2'") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, fixture().group.order() - 1);
  for (int t = 0; t < 200; ++t) {
    const CTuple& x = fixture().group.elements()[pick(rng)];
    const CTuple& y = fixture().group.elements()[pick(rng)];
    const CTuple xy = c_mul(x, y);
    CHECK(xy.h == x.h + y.h + x.f[0] * y.f[3] + x.f[2] * y.f[1]);
    CHECK(fixture().group.contains(xy));
    CHECK(c_mul(x, c_inverse(x)).is_identity());
  }
}

TEST_CASE("embed and parse are inverse") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    const PElement x = random_element(rng);
    CHECK(parse_matrix(embed_matrix(x)) == x);
  }
  CHECK_THROWS_AS(parse_matrix(Matrix::identity(16)), ShapeError);
  Matrix bad = embed_matrix(PElement::identity());
  bad.set(5, 1, 1);
  CHECK_THROWS_AS(parse_matrix(bad), ShapeError);
}

TEST_CASE("cube formula matches the padded cube") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const PElement x = random_element(rng);
    const Unitriangular5 u = pad(x);
    const CubeBlocks c = cube_blocks(x);
    Unitriangular5 expected = Unitriangular5::zero();
    expected.z1 = c.z1;
    expected.z2 = c.z2;
    expected.t1 = c.t1;
    const Matrix m = u.to_matrix();
    CHECK(naive_product(naive_product(m, m), m) == expected.to_matrix());
    CHECK(Unitriangular5::from_matrix(m).x2 == u.x2);
  }
}

TEST_CASE("p_order matches naive powering") {
  std::mt19937_64 rng(6);
  int nine = 0;
  for (int t = 0; t < 200; ++t) {
    const PElement x = random_element(rng);
    const auto o = oracle::order(oracle::grid(embed_matrix(x)), 3, 20);
    CHECK(static_cast<std::uint64_t>(p_order(x)) == o);
    nine += o == 9;
  }
  CHECK(nine > 0);
  CHECK(p_order(PElement::identity()) == 1);
}

TEST_CASE("F acts on P by conjugation") {
  std::mt19937_64 rng(7);
  const auto& f = fixture().f;
  for (int t = 0; t < 100; ++t) {
    const PElement x = random_element(rng);
    const Matrix& g = f[static_cast<std::size_t>(t) % f.size()];
    const Matrix& h = f[static_cast<std::size_t>(t * 7 + 3) % f.size()];
    CHECK(embed_matrix(f_conjugate(x, g)) == conjugate(embed_matrix(x), block_diagonal(g)));
    CHECK(f_conjugate(f_conjugate(x, g), h) == f_conjugate(x, g * h));
    CHECK(f_conjugate(x, block_diagonal(g)) == f_conjugate(x, g));
  }
}

TEST_CASE("commutators form a central subgroup of order 81") {
  const auto comm = commutator_set(fixture().group);
  CHECK(comm.size() == 81);
  CHECK(is_closed(comm));
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> pick(0, fixture().group.order() - 1);
  for (int t = 0; t < 100; ++t) {
    const CTuple& x = fixture().group.elements()[pick(rng)];
    const CTuple& y = fixture().group.elements()[pick(rng)];
    const CTuple c = c_commutator(x, y);
    CHECK(c_mul(c_mul(c_inverse(x), c_inverse(y)), c_mul(x, y)) == c);
    CHECK(c_mul(c, x) == c_mul(x, c));
  }
}

TEST_CASE("order of G") {
  const auto o = p_group_order(fixture().k, fixture().group, fixture().f);
  CHECK(o.d_space_dimension == 16);
  CHECK(o.d1_slot_dimension == 4);
  CHECK(o.c_group_order == 6561);
  CHECK(o.f_order == 20);
  CHECK(o.g_order == 5648590729620ULL);
  // 2^2 * 3^24 * 5
  std::uint64_t expected = 20;
  for (int i = 0; i < 24; ++i) expected *= 3;
  CHECK(o.g_order == expected);
}

TEST_CASE("order of G fails structurally when d = 0") {
  auto k = standard_construction();
  k.d = Vector(4);
  CHECK_THROWS_AS(p_group_order(k, fixture().group, fixture().f), StructuralFailure);
}
