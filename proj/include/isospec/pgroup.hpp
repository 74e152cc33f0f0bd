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

#ifndef ISOSPEC_PGROUP_HPP
#define ISOSPEC_PGROUP_HPP

// Coordinates for the normal 3-subgroup P of G. An element is
//
//   [ 1 | d1  d2  d3  d4 ]
//   [ 0 | 1   f1  f3  h  ]
//   [ 0 | 0   1   0   f4 ]
//   [ 0 | 0   0   1   f2 ]
//   [ 0 | 0   0   0   1  ]
//
// with d_i in F_3^4 and f_i, h in M_4(F_3). The (f, h) part lives in the
// subgroup <C>^F, handled here as CTuple.

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "isospec/construction.hpp"
#include "isospec/field.hpp"

namespace isospec {

struct CTuple {
  std::array<Matrix, 4> f;  // f[0] = f_1, ..., f[3] = f_4
  Matrix h;

  static CTuple identity(unsigned p = kDefaultPrime);
  bool is_identity() const;
  friend bool operator==(const CTuple&, const CTuple&) = default;
};

struct CTupleHash {
  std::size_t operator()(const CTuple& t) const noexcept;
};

/// (f, h)(f', h') = (f + f', h + h' + f1 f4' + f3 f2').
CTuple c_mul(const CTuple& x, const CTuple& y);
CTuple c_inverse(const CTuple& x);
/// Componentwise g^-1 x g.
CTuple c_conjugate(const CTuple& x, const Matrix& g);
CTuple c_commutator(const CTuple& x, const CTuple& y);

/// The C-part of the generator C.
CTuple c_tuple_of(const Construction& k);
/// (u alpha_1, u alpha_2, u alpha_3, u alpha_4, 0).
CTuple c_tuple_from(const Vector& u, const std::array<ModuleHom, 4>& alphas);

struct PElement {
  std::array<Vector, 4> d;
  CTuple c;

  static PElement identity(unsigned p = kDefaultPrime);
  bool is_identity() const;
  friend bool operator==(const PElement&, const PElement&) = default;
};

PElement p_mul(const PElement& x, const PElement& y);
PElement p_inverse(const PElement& x);

Matrix embed_matrix(const PElement& x);
/// Throws ShapeError unless `m` has the block pattern above.
PElement parse_matrix(const Matrix& m);

/// Upper unitriangular 5x5 matrix over M_4(F_p):
///
///   [ 1 x1 y1 z1 t1 ]
///   [ . 1  x2 y2 z2 ]
///   [ . .  1  x3 y3 ]
///   [ . .  .  1  x4 ]
///   [ . .  .  .  1  ]
struct Unitriangular5 {
  Matrix x1, x2, x3, x4, y1, y2, y3, z1, z2, t1;

  static Unitriangular5 zero(unsigned p = kDefaultPrime);
  /// 20x20 matrix over F_p.
  Matrix to_matrix() const;
  static Unitriangular5 from_matrix(const Matrix& m);
};

/// Above-diagonal blocks of X^3 for unitriangular X in characteristic 3.
struct CubeBlocks {
  Matrix z1, z2, t1;
  bool all_zero() const { return z1.is_zero() && z2.is_zero() && t1.is_zero(); }
};

/// z1' = x1x2x3, z2' = x2x3x4, t1' = x1x2y3 + x1y2x4 + y1x3x4.
CubeBlocks cube_formula(const Unitriangular5& x);

/// Pads the 17x17 form to 20x20: the scalar 1 becomes I_4 and each d_i
/// becomes the first row of an otherwise zero 4x4 block.
Unitriangular5 pad(const PElement& x);

CubeBlocks cube_blocks(const PElement& x);

/// 9 if some cube block is nonzero, else 3 unless x is the identity.
int p_order(const PElement& x);

/// g^-1 x g for g in F, given either as a 4x4 matrix or as diag(1,g,g,g,g).
PElement f_conjugate(const PElement& x, const Matrix& g);

class StructuralFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kCGroupOrder = 6561;

class CGroup {
 public:
  explicit CGroup(std::vector<CTuple> elements);

  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<CTuple>& elements() const noexcept { return elements_; }
  bool contains(const CTuple& t) const { return index_.contains(t); }

 private:
  std::vector<CTuple> elements_;
  std::unordered_set<CTuple, CTupleHash> index_;
};

/// Closure of the F-conjugates of C's tuple. Throws StructuralFailure when
/// more than `limit` tuples are reached.
CGroup enumerate_c_group(const Construction& k, std::span<const Matrix> f_elements,
                         std::size_t limit = kCGroupOrder);

/// Distinct commutators [x, y]. Commutators in this law depend only on the
/// f-parts, so one representative per f-part is used.
std::vector<CTuple> commutator_set(const CGroup& group);

/// Whether a set of tuples is closed under c_mul.
bool is_closed(std::span<const CTuple> tuples);

struct PGroupOrder {
  std::size_t d_space_dimension = 0;
  std::size_t d1_slot_dimension = 0;
  std::uint64_t c_group_order = 0;
  std::uint64_t p_order = 0;
  std::uint64_t f_order = 0;
  std::uint64_t g_order = 0;
};

/// |P| = |<D>^G| * |<C>^F| after verifying that the d-coordinates of <D>^G
/// fill F_3^16, that <C>^F is F-invariant, and that the two meet trivially.
PGroupOrder p_group_order(const Construction& k, const CGroup& c_group, std::span<const Matrix> f_elements);

/// Uniform element of P = F_3^16 x <C>^F.
PElement random_p_element(const CGroup& c_group, std::mt19937_64& rng);

/// Four d-rows, then f1, f2, f3, f4, h in matrix text format.
std::string to_text(const PElement& x);

}  // namespace isospec

#endif  // ISOSPEC_PGROUP_HPP
