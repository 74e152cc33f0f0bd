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

#ifndef ISOSPEC_CONSTRUCTION_HPP
#define ISOSPEC_CONSTRUCTION_HPP

// The explicit objects of the construction: the Frobenius group F = <a, b>
// acting on V = F_3^4, the blocks c_1..c_4 and d, and the 17x17 generators
// A, B, C, D of G.
//
// Block layout of a 17x17 matrix: index 0 is the scalar block (size 1), and
// block k = 1..4 covers rows/columns 1 + 4(k-1) .. 4k.

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "isospec/field.hpp"
#include "isospec/group.hpp"

namespace isospec {

inline constexpr std::size_t kModuleDim = 4;
inline constexpr std::size_t kBigDim = 17;

class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FrobeniusPair {
  Matrix a;
  Matrix b;
};

/// Human-readable description of every violated invariant
/// (a^5 = b^4 = 1, b^-1 a b = a^2, 1 + a + ... + a^4 = 0). Empty when valid.
std::vector<std::string> frobenius_invariant_failures(const FrobeniusPair& fp);

/// The literal 4x4 matrices; invariants are checked before returning.
FrobeniusPair build_frobenius(unsigned p = kDefaultPrime);

struct IdentityCheck {
  std::string cell;  // e.g. "(b^2)^(a^3) = b^2 a"
  bool holds = false;
};

struct ConjugationReport {
  std::vector<IdentityCheck> checks;  // 24 equalities: two per table cell
  bool all_hold() const;
  std::vector<std::string> failing_cells() const;
};

/// The twelve conjugation identities (b^j)^(a^k) = b^j a^e = a^f b^j,
/// each checked as two separate equalities.
ConjugationReport check_conjugation_identities(const FrobeniusPair& fp);

/// The data that determines G: F, the four C-blocks, and the D-row.
struct Construction {
  FrobeniusPair fp;
  std::array<Matrix, 4> c;  // c[0] = c_1, ..., c[3] = c_4
  Vector d;

  unsigned prime() const { return fp.a.prime(); }
};

/// c_1 = b, c_2 = b^3, c_3 = b^2, c_4 = -b^2, d = (1,0,0,0).
Construction standard_construction(unsigned p = kDefaultPrime);

struct BigGenerators {
  Matrix A, B, C, D;

  GeneratorSet as_set() const { return GeneratorSet{{A, B, C, D}, "G"}; }
};

BigGenerators build_big_generators(const Construction& k);

/// Reads a, b, c_i, d back out of 17x17 generators; throws ShapeError when a
/// generator does not have the expected block pattern.
Construction construction_from_generators(const BigGenerators& gens);

/// Block-diagonal diag(1, g, g, g, g).
Matrix block_diagonal(const Matrix& g);

/// Elements of F enumerated from {a, b}; `limit` caps the search.
std::vector<Matrix> enumerate_frobenius(const FrobeniusPair& fp, std::size_t limit = 1000);

/// An F-module map V -> M_4(F_3) given by the images of the basis
/// (v, va, va^2, va^3). M is a right module under m o g = g^-1 m g.
class ModuleHom {
 public:
  ModuleHom(int index, std::array<Matrix, 4> basis_images);

  int index() const noexcept { return index_; }
  const std::array<Matrix, 4>& basis_images() const noexcept { return images_; }
  Matrix apply(const Vector& x) const;
  /// The 4x16 matrix of the map: row j is the flattened image of basis vector j.
  std::vector<Vector> rows() const;

  /// Violations of (xg)alpha = g^-1 (x alpha) g over basis vectors and the
  /// given action matrices; empty when the map commutes with the action.
  std::vector<std::string> equivariance_failures(const FrobeniusPair& fp) const;

 private:
  int index_;
  std::array<Matrix, 4> images_;
};

/// Whether v -> m extends to a module map: m o b = m and
/// m o (1 + a + a^2 + a^3 + a^4) = 0.
bool extends_to_module_hom(const Matrix& m, const FrobeniusPair& fp);

/// The map v -> m, va^k -> a^-k m a^k. Throws std::invalid_argument when m
/// fails the extension conditions.
ModuleHom build_hom(const Matrix& m, const FrobeniusPair& fp, int index = 0);

/// alpha_i : v -> c_i for i in 1..4.
ModuleHom build_alpha(int i, const Construction& k);
std::array<ModuleHom, 4> build_alphas(const Construction& k);

/// Basis of {x : xg = x}.
std::vector<Vector> centralizer_in_module(const Matrix& g);

/// Group elements of F written as a^k b^j with the exponents used to name them.
struct NamedElement {
  std::string name;
  Matrix value;
};

/// All 20 elements a^k b^j, 0 <= k < 5, 0 <= j < 4.
std::vector<NamedElement> frobenius_words(const FrobeniusPair& fp);

}  // namespace isospec

#endif  // ISOSPEC_CONSTRUCTION_HPP
