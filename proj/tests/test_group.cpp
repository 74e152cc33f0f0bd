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

#include <sstream>

#include "doctest.h"
#include "isospec/construction.hpp"
#include "isospec/group.hpp"
#include "oracles.hpp"

using namespace isospec;

namespace {

// Permutation matrices of S_3 acting on rows.
GeneratorSet s3() {
  return GeneratorSet{{Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, Matrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}}, "S3"};
}

GeneratorSet frobenius_set() {
  const auto fp = build_frobenius();
  return GeneratorSet{{fp.a, fp.b}, "F"};
}

}  // namespace

TEST_CASE("closure of small groups") {
  CHECK(close(s3(), 100).order() == 6);
  CHECK(close(frobenius_set(), 100).order() == 20);
  const auto upper = close(GeneratorSet{{Matrix{{1, 1}, {0, 1}}}, "C3"}, 10);
  CHECK(upper.order() == 3);
  CHECK(upper.contains(Matrix::identity(2)));
  CHECK(upper.contains(Matrix{{1, 2}, {0, 1}}));
}

TEST_CASE("closure is closed under products") {
  const auto f = close(frobenius_set(), 100);
  for (const auto& x : f.elements()) {
    for (const auto& y : f.elements()) CHECK(f.contains(x * y));
  }
}

TEST_CASE("enumeration limit") {
  CHECK_THROWS_AS(close(frobenius_set(), 19), EnumerationLimitExceeded);
  try {
    close(frobenius_set(), 10);
    FAIL("expected EnumerationLimitExceeded");
  } catch (const EnumerationLimitExceeded& e) {
    CHECK(e.limit() == 10);
    CHECK(e.partial_count() >= 10);
  }
  CHECK_NOTHROW(close(frobenius_set(), 20));
}

TEST_CASE("generator validation") {
  CHECK_THROWS_AS(GeneratorSet{}.validate(), GroupError);
  CHECK_THROWS_AS((GeneratorSet{{Matrix::identity(2), Matrix::identity(3)}, "x"}.validate()), GroupError);
  CHECK_THROWS_AS((GeneratorSet{{Matrix{{1, 1}, {1, 1}}}, "x"}.validate()), GroupError);
}

TEST_CASE("divisor closure and maximal elements") {
  CHECK(divisor_closure({12}) == OrderSet{1, 2, 3, 4, 6, 12});
  CHECK(divisor_closure({5, 9, 12}) == OrderSet{1, 2, 3, 4, 5, 6, 9, 12});
  CHECK(mu_of({1, 2, 3, 4, 5, 6, 9, 12}) == OrderSet{5, 9, 12});
  CHECK(mu_of({1, 2, 4, 5}) == OrderSet{4, 5});
  CHECK(is_divisor_closed({1, 3, 9}));
  CHECK_FALSE(is_divisor_closed({1, 9}));
  CHECK_THROWS_AS(mu_of({1, 9}), GroupError);
  CHECK(Spectrum::from_omega({1, 2, 3, 6}).mu == OrderSet{6});
}

TEST_CASE("spectrum of F matches brute-force powering") {
  const auto fp = build_frobenius();
  const auto expected = oracle::word_orders(oracle::grid(fp.a), oracle::grid(fp.b), 3);
  const auto s = spectrum_exhaustive(close(frobenius_set(), 100));
  CHECK(s.omega == OrderSet(expected.begin(), expected.end()));
  CHECK(s.omega == OrderSet{1, 2, 4, 5});
  CHECK(s.mu == OrderSet{4, 5});
}

TEST_CASE("spectrum modulo a center") {
  // <-I> x <a>: quotient by {I, -I} has orders {1, 5}.
  const auto fp = build_frobenius();
  const Matrix minus = -Matrix::identity(4);
  const auto g = close(GeneratorSet{{fp.a, minus}, "C10"}, 100);
  CHECK(g.order() == 10);
  CHECK(spectrum_exhaustive(g).omega == OrderSet{1, 2, 5, 10});
  const std::vector<Matrix> center{Matrix::identity(4), minus};
  CHECK(spectrum_mod_center(g, center).omega == OrderSet{1, 5});
  const std::vector<Matrix> not_closed{minus};
  CHECK_THROWS_AS(spectrum_mod_center(g, not_closed), GroupError);
}

TEST_CASE("seeded sampling is deterministic and worker-independent") {
  const auto gens = frobenius_set();
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 5) == derive_seed(1, 5));
  CHECK(random_element(gens, 16, 42) == random_element(gens, 16, 42));
  const auto one = spectrum_sampled(gens, 500, 16, 99, 1);
  const auto three = spectrum_sampled(gens, 500, 16, 99, 3);
  CHECK(one.orders == three.orders);
  CHECK(one.histogram() == three.histogram());
  for (auto o : one.observed()) CHECK(OrderSet{1, 2, 4, 5}.contains(o));
  CHECK(one.observed() == OrderSet{1, 2, 4, 5});
  for (std::size_t i = 0; i < 20; ++i) {
    CHECK(one.orders[i] == element_order(random_element(gens, 16, derive_seed(99, i)), 100));
  }
}

TEST_CASE("orbit span") {
  const auto fp = build_frobenius();
  const std::vector<Matrix> action{fp.a};
  CHECK(orbit_span(Vector({1, 0, 0, 0}), action).size() == 4);
  const std::vector<Matrix> only_b{fp.b};
  CHECK(orbit_span(Vector({1, 0, 0, 0}), only_b).size() == 1);
}

TEST_CASE("group description round trip") {
  const auto gens = frobenius_set();
  std::istringstream in(to_group_description(gens));
  const auto back = read_group_description(in, "F");
  CHECK(back.generators == gens.generators);
  std::istringstream bad("4 3\n1 0 0 0\n");
  CHECK_THROWS_AS(read_group_description(bad), FormatError);
  std::istringstream mismatch("4 3\n3 3\n1 0 0\n0 1 0\n0 0 1\n");
  CHECK_THROWS_AS(read_group_description(mismatch), FormatError);
}

TEST_CASE("spectrum formatting") {
  CHECK(format_spectrum(Spectrum::from_omega({1, 2, 4, 5})) == "1 2 4 5\n4 5\n");
}
