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

#include <functional>

#include "doctest.h"
#include "isospec/verifiers.hpp"

using namespace isospec;

namespace {

VerifierOptions small_options() {
  VerifierOptions o;
  o.samples = 1000;
  o.spectrum_samples = 5000;
  return o;
}

const VerificationContext& standard() {
  static const VerificationContext ctx(standard_construction(), small_options());
  return ctx;
}

CheckResult run_on(const Construction& k, const std::string& name) {
  const VerificationContext ctx(k, small_options());
  return find_verifier(name)->run(ctx);
}

Construction perturbed(const std::function<void(Construction&)>& edit) {
  Construction k = standard_construction();
  edit(k);
  return k;
}

}  // namespace

TEST_CASE("every verifier passes on the standard construction") {
  for (const auto& entry : verifier_registry()) {
    CAPTURE(entry.name);
    const CheckResult r = entry.run(standard());
    CHECK(r.name == entry.name);
    CHECK(r.passed);
    if (!r.passed) MESSAGE(r.counterexample.value_or(""));
  }
}

TEST_CASE("registry lookup") {
  CHECK(find_verifier("psi-order18") != nullptr);
  CHECK(find_verifier("nope") == nullptr);
  CHECK(verifier_registry().size() == 17);
}

TEST_CASE("derived quantities recorded by the verifiers") {
  const auto order = verify_group_order(standard());
  CHECK(order.metrics.at("g_order") == 5648590729620ULL);
  const auto c = verify_c_group(standard());
  CHECK(c.metrics.at("c_group_order") == 6561);
  CHECK(c.metrics.at("c_group_order_matrix_route") == 6561);
  CHECK(c.metrics.at("commutator_count") == 81);
  const auto w = verify_w_isomorphic_v(standard());
  CHECK(w.metrics.at("dim_W") == 4);
  CHECK(w.metrics.at("derived_subgroup_order") == 81);
  const auto psi18 = verify_psi_and_no_order_18(standard());
  CHECK(psi18.metrics.at("psi_pairs_checked") == 81);
  CHECK(psi18.metrics.at("C_P_B2_order_9_elements") == 0);
  CHECK(psi18.metrics.at("C_P_B2_order") == psi18.metrics.at("C_P_B2_order_filtered"));
  const auto ext = verify_exterior_square_lemma(standard());
  CHECK(ext.metrics.at("dim_exterior_square") == 6);
  CHECK(ext.metrics.at("dim_U") == 2);
  CHECK(ext.metrics.at("dim_quotient") == 4);
  CHECK(ext.metrics.at("dim_quotient_fixed_by_a") == 0);
}

TEST_CASE("psi values") {
  const auto& alphas = *standard().alphas();
  const Matrix& b = standard().construction().fp.b;
  const Matrix target = (Matrix::identity(4) - b * b) * b;
  CHECK(psi(alphas, Vector({1, 0, 0, 0})) == target);
  CHECK(psi(alphas, Vector({0, 0, 1, 1})) == -target);
}

TEST_CASE("reference spectrum of S4(3)") {
  const auto ref = reference_spectrum(symplectic_generators(), 1000000);
  CHECK(ref.enumeration_size == 51840);
  CHECK(ref.center.size() == 2);
  CHECK(ref.spectrum.mu == OrderSet{5, 9, 12});
  CHECK(ref.spectrum.omega == OrderSet{1, 2, 3, 4, 5, 6, 9, 12});
  CHECK(s43_claimed_omega() == ref.spectrum.omega);
}

TEST_CASE("reference spectrum rejects bad generators") {
  auto gens = symplectic_generators();
  gens.generators[0].set(1, 1, 2);
  CHECK_THROWS_AS(reference_spectrum(gens, 1000000), ConfigError);
  CHECK_THROWS_AS(reference_spectrum(symplectic_generators(), 100), ConfigError);
  // Quotienting by the trivial center instead gives the spectrum of Sp(4,3).
  const auto sp = close(symplectic_generators(), 60000);
  const std::vector<Matrix> trivial{Matrix::identity(4)};
  CHECK(spectrum_mod_center(sp, trivial).mu != OrderSet{5, 9, 12});
}

// ---- negative controls: each verifier fails under its perturbation ----

TEST_CASE("construction fails for a corrupted b") {
  const auto k = perturbed([](Construction& k) { k.fp.b.set(0, 0, 2); });
  CHECK_FALSE(run_on(k, "construction").passed);
  CHECK_FALSE(run_on(k, "conjugation-identities").passed);
}

TEST_CASE("module-hom fails for c1 = a") {
  const auto r = run_on(perturbed([](Construction& k) { k.c[0] = k.fp.a; }), "module-hom");
  CHECK_FALSE(r.passed);
  CHECK(r.counterexample.has_value());
}

TEST_CASE("unitriangular fails in characteristic 5") {
  CHECK(verify_unitriangular_lemma(3, 300, 1).passed);
  CHECK_FALSE(verify_unitriangular_lemma(5, 300, 1).passed);
}

TEST_CASE("exterior-square fails when b is replaced by b^3") {
  CHECK_FALSE(run_on(perturbed([](Construction& k) { k.fp.b = mat_pow(k.fp.b, 3); }), "exterior-square").passed);
}

TEST_CASE("c-group and w-iso-v fail for c1 = c3 = 0") {
  const auto k = perturbed([](Construction& k) {
    k.c[0] = Matrix(4);
    k.c[2] = Matrix(4);
  });
  CHECK_FALSE(run_on(k, "c-group").passed);
  CHECK_FALSE(run_on(k, "w-iso-v").passed);
  CHECK_FALSE(run_on(k, "exponent-order9").passed);
}

TEST_CASE("group-order and vf-spectrum fail for d = 0") {
  const auto k = perturbed([](Construction& k) { k.d = Vector(4); });
  CHECK_FALSE(run_on(k, "group-order").passed);
  CHECK_FALSE(run_on(k, "vf-spectrum").passed);
}

TEST_CASE("psi-order18 and sampled-spectrum fail for c4 = +b^2") {
  const auto k = perturbed([](Construction& k) { k.c[3] = -k.c[3]; });
  const auto psi18 = run_on(k, "psi-order18");
  CHECK_FALSE(psi18.passed);
  CHECK(psi18.counterexample.has_value());
  CHECK_FALSE(run_on(k, "sampled-spectrum").passed);
}

TEST_CASE("fixed-point-free fails when a = b") {
  CHECK_FALSE(run_on(perturbed([](Construction& k) { k.fp.a = k.fp.b; }), "fixed-point-free").passed);
}

TEST_CASE("order12-witness fails when b = -1") {
  const auto k = perturbed([](Construction& k) { k.fp.b = -Matrix::identity(4); });
  const auto r = run_on(k, "order12-witness");
  CHECK_FALSE(r.passed);
  CHECK(r.counterexample == "no element of order 12 of the form B x");
}

TEST_CASE("coordinate-consistency fails for the f2 f3' product law") {
  const PProduct swapped = [](const PElement& x, const PElement& y) {
    PElement z = p_mul(x, y);
    z.c.h += x.c.f[1] * y.c.f[2] - x.c.f[2] * y.c.f[1];
    return z;
  };
  CHECK(verify_coordinate_consistency(standard()).passed);
  CHECK_FALSE(verify_coordinate_consistency(standard(), swapped).passed);
}

TEST_CASE("verifiers are deterministic") {
  for (const char* name : {"unitriangular", "exponent-order9", "coordinate-consistency", "sampled-spectrum"}) {
    CAPTURE(name);
    CHECK(find_verifier(name)->run(standard()) == find_verifier(name)->run(standard()));
  }
}

TEST_CASE("sampled spectrum does not depend on worker count") {
  auto o = small_options();
  o.workers = 3;
  const VerificationContext threaded(standard_construction(), o);
  auto a = verify_sampled_spectrum(standard());
  auto b = verify_sampled_spectrum(threaded);
  a.metrics.erase("workers");
  b.metrics.erase("workers");
  CHECK(a == b);
}
