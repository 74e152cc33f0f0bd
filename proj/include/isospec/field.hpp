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

#ifndef ISOSPEC_FIELD_HPP
#define ISOSPEC_FIELD_HPP

// Exact dense linear algebra over a small prime field F_p.
//
// Vectors are row vectors and matrices act on the right (x -> xA), so every
// kernel in this file is a left null space.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace isospec {

using Residue = std::uint8_t;

inline constexpr unsigned kDefaultPrime = 3;
inline constexpr unsigned kMaxPrime = 251;

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public FieldError {
 public:
  using FieldError::FieldError;
};

class NotInvertible : public FieldError {
 public:
  using FieldError::FieldError;
};

class OrderBoundExceeded : public FieldError {
 public:
  OrderBoundExceeded(std::uint64_t bound);
  std::uint64_t bound() const noexcept { return bound_; }

 private:
  std::uint64_t bound_;
};

class FormatError : public FieldError {
 public:
  using FieldError::FieldError;
};

/// Canonical residue of an arbitrary integer modulo p.
inline Residue reduce(long long value, unsigned p) {
  long long r = value % static_cast<long long>(p);
  return static_cast<Residue>(r < 0 ? r + p : r);
}

/// Multiplicative inverse of a nonzero residue (p prime).
Residue inverse_residue(Residue x, unsigned p);

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n, unsigned p = kDefaultPrime);
  Vector(std::initializer_list<int> entries, unsigned p = kDefaultPrime);

  /// Standard basis vector e_i.
  static Vector unit(std::size_t n, std::size_t i, unsigned p = kDefaultPrime);

  std::size_t size() const noexcept { return entries_.size(); }
  unsigned prime() const noexcept { return p_; }
  Residue operator[](std::size_t i) const { return entries_[i]; }
  void set(std::size_t i, long long value) { entries_[i] = reduce(value, p_); }
  std::span<const Residue> entries() const noexcept { return entries_; }

  bool is_zero() const noexcept;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(Residue scalar);

  friend Vector operator+(Vector x, const Vector& y) { return x += y; }
  friend Vector operator-(Vector x, const Vector& y) { return x -= y; }
  friend Vector operator-(Vector x) { return x *= reduce(-1, x.p_); }
  friend Vector operator*(Residue s, Vector x) { return x *= s; }
  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Residue> entries_;
  unsigned p_ = kDefaultPrime;
};

class Matrix {
 public:
  Matrix() = default;
  /// Zero matrix.
  explicit Matrix(std::size_t n, unsigned p = kDefaultPrime);
  /// Rows of integers, reduced mod p. Must be square.
  Matrix(std::initializer_list<std::initializer_list<int>> rows, unsigned p = kDefaultPrime);

  static Matrix identity(std::size_t n, unsigned p = kDefaultPrime);
  static Matrix from_rows(std::span<const Vector> rows);
  /// Reshape a length n*n vector (row-major) into a matrix.
  static Matrix unflatten(const Vector& flat);

  std::size_t dim() const noexcept { return n_; }
  unsigned prime() const noexcept { return p_; }
  Residue at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, long long value) { entries_[i * n_ + j] = reduce(value, p_); }
  std::span<const Residue> entries() const noexcept { return entries_; }

  Vector row(std::size_t i) const;
  Vector flatten() const;

  /// Square sub-block of size k with top-left corner (r, c).
  Matrix block(std::size_t r, std::size_t c, std::size_t k) const;
  void set_block(std::size_t r, std::size_t c, const Matrix& sub);

  bool is_identity() const noexcept;
  bool is_zero() const noexcept;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(Residue scalar);

  friend Matrix operator+(Matrix x, const Matrix& y) { return x += y; }
  friend Matrix operator-(Matrix x, const Matrix& y) { return x -= y; }
  friend Matrix operator-(Matrix x) { return x *= reduce(-1, x.p_); }
  friend Matrix operator*(Residue s, Matrix x) { return x *= s; }
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::vector<Residue> entries_;
  std::size_t n_ = 0;
  unsigned p_ = kDefaultPrime;
};

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const noexcept;
};

struct VectorHash {
  std::size_t operator()(const Vector& v) const noexcept;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

/// Row vector times matrix.
Vector vec_mul(const Vector& x, const Matrix& a);
inline Vector operator*(const Vector& x, const Matrix& a) { return vec_mul(x, a); }

Matrix mat_pow(const Matrix& a, std::uint64_t k);

/// Gauss-Jordan inverse. Throws NotInvertible for singular input.
Matrix mat_inv(const Matrix& a);

Matrix transpose(const Matrix& a);

/// Conjugate g^-1 m g.
Matrix conjugate(const Matrix& m, const Matrix& g);

/// Least k >= 1 with a^k = I, by iterated multiplication up to `bound`.
std::uint64_t element_order(const Matrix& a, std::uint64_t bound);

/// Reduced row echelon basis of the span of `vectors`.
std::vector<Vector> echelon_basis(std::span<const Vector> vectors);

std::size_t span_dimension(std::span<const Vector> vectors);
std::size_t rank(const Matrix& a);

/// Basis of {x : sum_i x_i rows[i] = 0}; rows may be of any common length.
std::vector<Vector> left_kernel(std::span<const Vector> rows);

/// Basis of {x : xA = 0}.
std::vector<Vector> kernel_basis(const Matrix& a);

/// Whether `x` lies in the span of `basis`.
bool in_span(std::span<const Vector> basis, const Vector& x);

/// All p^k vectors of the span of the given (independent) basis.
std::vector<Vector> span_elements(std::span<const Vector> basis, std::size_t ambient_dim,
                                  unsigned p = kDefaultPrime);

// Plain-text format: a header "n p", then n rows of n residues.
std::string to_text(const Matrix& m);
Matrix matrix_from_text(std::string_view text);
Matrix read_matrix(std::istream& in);
/// Prints -1 instead of p-1 for visual comparison with signed displays.
std::string to_symmetric_text(const Matrix& m);

std::string to_text(const Vector& v);

}  // namespace isospec

#endif  // ISOSPEC_FIELD_HPP
