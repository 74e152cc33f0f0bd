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

#ifndef ISOSPEC_VERIFIERS_HPP
#define ISOSPEC_VERIFIERS_HPP

// One verifier per structural claim about G. Each returns a CheckResult with
// enough witnesses and metrics to replay it independently.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "isospec/construction.hpp"
#include "isospec/group.hpp"
#include "isospec/pgroup.hpp"

namespace isospec {

/// Raised for problems with the run configuration or the environment, as
/// opposed to a claim that fails verification.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  bool exhaustive = false;
  /// Informational checks are recorded but never affect the verdict.
  bool informational = false;
  std::vector<std::string> witnesses;
  std::optional<std::string> counterexample;
  std::uint64_t samples_used = 0;
  std::optional<std::uint64_t> seed;
  std::map<std::string, std::uint64_t> metrics;
  std::vector<std::string> notes;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerifierOptions {
  unsigned prime = kDefaultPrime;
  std::uint64_t seed = 20080322;
  std::size_t samples = 10000;
  std::size_t spectrum_samples = 100000;
  std::size_t word_length = 64;
  std::size_t limit = 1000000;
  unsigned workers = 1;
  std::uint64_t order_bound = kDefaultOrderBound;

  friend bool operator==(const VerifierOptions&, const VerifierOptions&) = default;
};

/// Shared, immutable state for the verifiers: the construction, its 17x17
/// generators, the enumerated group F = <a, b>, the maps alpha_i and <C>^F.
/// Anything that cannot be built is recorded as an error string; verifiers
/// that need it then fail with that message.
class VerificationContext {
 public:
  VerificationContext(Construction k, VerifierOptions options);

  const Construction& construction() const noexcept { return k_; }
  const BigGenerators& generators() const noexcept { return big_; }
  const VerifierOptions& options() const noexcept { return options_; }

  const std::vector<Matrix>& frobenius() const noexcept { return f_elements_; }
  const std::optional<std::string>& frobenius_error() const noexcept { return f_error_; }

  const std::optional<std::array<ModuleHom, 4>>& alphas() const noexcept { return alphas_; }
  const std::optional<std::string>& alpha_error() const noexcept { return alpha_error_; }

  const CGroup* c_group() const noexcept { return c_group_.get(); }
  const std::optional<std::string>& c_group_error() const noexcept { return c_group_error_; }

 private:
  Construction k_;
  BigGenerators big_;
  VerifierOptions options_;
  std::vector<Matrix> f_elements_;
  std::optional<std::string> f_error_;
  std::optional<std::array<ModuleHom, 4>> alphas_;
  std::optional<std::string> alpha_error_;
  std::shared_ptr<const CGroup> c_group_;
  std::optional<std::string> c_group_error_;
};

// ---- exterior square ----

/// Exterior square of V with basis e_i ^ e_j (i < j) in lexicographic order.
struct ExteriorSquare {
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  Matrix act_a;
  Matrix act_b;

  Vector wedge(const Vector& x, const Vector& y) const;
};

ExteriorSquare build_exterior_square(const FrobeniusPair& fp);

/// Coefficients c with sum_i c_i basis[i] = x, if x is in the span of the
/// (independent) basis.
std::optional<Vector> coordinates_in_basis(std::span<const Vector> basis, const Vector& x);

/// Searches for an isomorphism V -> (module with action matrices ma, mb):
/// v maps to a nonzero w with w mb = w and w(1 + ma + ... + ma^4) = 0, and
/// the induced map must be bijective and intertwine both actions. Returns the
/// 4x4 matrix T of the map x -> xT on success.
std::optional<Matrix> isomorphism_from_v(const FrobeniusPair& fp, const Matrix& ma, const Matrix& mb);

/// phi(u, u') = u a1 . u' a4 - u' a1 . u a4 + u a3 . u' a2 - u' a3 . u a2.
Matrix phi(const std::array<ModuleHom, 4>& alphas, const Vector& u, const Vector& w);

/// psi(u) = u a1 . u a4 + u a3 . u a2.
Matrix psi(const std::array<ModuleHom, 4>& alphas, const Vector& u);

// ---- reference spectrum ----

/// Alternating Gram matrix antidiag(1, 1, -1, -1).
Matrix symplectic_form();
/// Two generators of Sp(4,3) preserving symplectic_form().
GeneratorSet symplectic_generators();

struct ReferenceSpectrum {
  std::string label = "S4(3)";
  Spectrum spectrum;
  std::size_t enumeration_size = 0;  // before the quotient
  std::vector<Matrix> center;
};

/// Validates the generators (form-preserving, closure of order 51840, center
/// {I, -I}) and returns the spectrum of the quotient by the center. Throws
/// ConfigError when validation fails.
ReferenceSpectrum reference_spectrum(const GeneratorSet& gens, std::size_t limit);

/// Affine group V x| F as 5x5 matrices (1, v; 0, g).
GeneratorSet affine_generators(const Construction& k);

// ---- verifiers ----

CheckResult verify_construction(const VerificationContext& ctx);
CheckResult verify_conjugation_identities(const VerificationContext& ctx);
CheckResult verify_module_hom_lemma(const VerificationContext& ctx);
CheckResult verify_module_hom_converse(const VerificationContext& ctx);
CheckResult verify_unitriangular_lemma(unsigned prime, std::size_t samples, std::uint64_t seed);
CheckResult verify_exterior_square_lemma(const VerificationContext& ctx);
CheckResult verify_c_group(const VerificationContext& ctx);
CheckResult verify_w_isomorphic_v(const VerificationContext& ctx);
CheckResult verify_group_order(const VerificationContext& ctx);
CheckResult verify_psi_and_no_order_18(const VerificationContext& ctx);
CheckResult verify_fixed_point_free_A(const VerificationContext& ctx);
CheckResult verify_exponent_and_order9_witness(const VerificationContext& ctx);
CheckResult verify_order12_witness(const VerificationContext& ctx);

using PProduct = std::function<PElement(const PElement&, const PElement&)>;
/// Random pairs: `product` against the 17x17 product, p_order against
/// element_order, embed/parse round trip, cube formula against X^3, and
/// f_conjugate against matrix conjugation.
CheckResult verify_coordinate_consistency(const VerificationContext& ctx, const PProduct& product = p_mul);

CheckResult verify_reference_spectrum(const VerificationContext& ctx);
CheckResult verify_vf_spectrum(const VerificationContext& ctx);
CheckResult verify_sampled_spectrum(const VerificationContext& ctx);

struct VerifierEntry {
  std::string name;
  std::function<CheckResult(const VerificationContext&)> run;
};

/// All verifiers in certificate order, addressable by name.
const std::vector<VerifierEntry>& verifier_registry();
const VerifierEntry* find_verifier(const std::string& name);

/// The expected spectrum of the simple group: divisor closure of {5, 9, 12}.
OrderSet s43_claimed_omega();

}  // namespace isospec

#endif  // ISOSPEC_VERIFIERS_HPP
