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

#include "isospec/field.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <utility>

#include <fmt/core.h>

namespace isospec {

namespace {

bool is_small_prime(long long p) {
  if (p < 2 || p > static_cast<long long>(kMaxPrime)) return false;
  for (long long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void check_prime(unsigned p) {
  if (!is_small_prime(p)) throw FieldError(fmt::format("modulus {} is not a prime in [2, {}]", p, kMaxPrime));
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.dim() != b.dim() || a.prime() != b.prime()) {
    throw DimensionMismatch(fmt::format("{}: {}x{} over F_{} vs {}x{} over F_{}", op, a.dim(),
                                        a.dim(), a.prime(), b.dim(), b.dim(), b.prime()));
  }
}

void require_same_shape(const Vector& a, const Vector& b, const char* op) {
  if (a.size() != b.size() || a.prime() != b.prime()) {
    throw DimensionMismatch(
        fmt::format("{}: vector length {} vs {} (F_{} vs F_{})", op, a.size(), b.size(), a.prime(), b.prime()));
  }
}

// In-place row reduction of a dense row list; pivots are sought only in the
// first `width` columns but whole rows are combined. Returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Residue>>& rows, std::size_t width, unsigned p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < width && r < rows.size(); ++col) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Residue inv = inverse_residue(rows[r][col], p);
    for (auto& e : rows[r]) e = static_cast<Residue>((e * inv) % p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const unsigned factor = p - rows[i][col];
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        rows[i][j] = static_cast<Residue>((rows[i][j] + factor * rows[r][j]) % p);
      }
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

OrderBoundExceeded::OrderBoundExceeded(std::uint64_t bound)
    : FieldError(fmt::format("element order exceeds bound {}", bound)), bound_(bound) {}

Residue inverse_residue(Residue x, unsigned p) {
  if (x % p == 0) throw NotInvertible("zero has no multiplicative inverse");
  // Fermat: x^(p-2).
  unsigned result = 1;
  unsigned base = x % p;
  for (unsigned e = p - 2; e > 0; e >>= 1) {
    if (e & 1U) result = (result * base) % p;
    base = (base * base) % p;
  }
  return static_cast<Residue>(result);
}

// ---- Vector ----

Vector::Vector(std::size_t n, unsigned p) : entries_(n, 0), p_(p) { check_prime(p); }

Vector::Vector(std::initializer_list<int> entries, unsigned p) : p_(p) {
  check_prime(p);
  entries_.reserve(entries.size());
  for (int e : entries) entries_.push_back(reduce(e, p));
}

Vector Vector::unit(std::size_t n, std::size_t i, unsigned p) {
  Vector v(n, p);
  v.entries_.at(i) = 1;
  return v;
}

bool Vector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](Residue e) { return e == 0; });
}

Vector& Vector::operator+=(const Vector& other) {
  require_same_shape(*this, other, "vector add");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] = static_cast<Residue>((entries_[i] + other.entries_[i]) % p_);
  }
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  require_same_shape(*this, other, "vector sub");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] = static_cast<Residue>((entries_[i] + p_ - other.entries_[i]) % p_);
  }
  return *this;
}

Vector& Vector::operator*=(Residue scalar) {
  for (auto& e : entries_) e = static_cast<Residue>((e * scalar) % p_);
  return *this;
}

// ---- Matrix ----

Matrix::Matrix(std::size_t n, unsigned p) : entries_(n * n, 0), n_(n), p_(p) { check_prime(p); }

Matrix::Matrix(std::initializer_list<std::initializer_list<int>> rows, unsigned p) : n_(rows.size()), p_(p) {
  check_prime(p);
  entries_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw DimensionMismatch("matrix literal is not square");
    for (int e : row) entries_.push_back(reduce(e, p));
  }
}

Matrix Matrix::identity(std::size_t n, unsigned p) {
  Matrix m(n, p);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows) {
  if (rows.empty()) return Matrix();
  const std::size_t n = rows.size();
  Matrix m(n, rows.front().prime());
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n || rows[i].prime() != m.p_) {
      throw DimensionMismatch("from_rows: rows do not form a square matrix");
    }
    std::copy(rows[i].entries().begin(), rows[i].entries().end(), m.entries_.begin() + i * n);
  }
  return m;
}

Matrix Matrix::unflatten(const Vector& flat) {
  std::size_t n = 0;
  while (n * n < flat.size()) ++n;
  if (n * n != flat.size()) throw DimensionMismatch("unflatten: length is not a perfect square");
  Matrix m(n, flat.prime());
  std::copy(flat.entries().begin(), flat.entries().end(), m.entries_.begin());
  return m;
}

Vector Matrix::row(std::size_t i) const {
  Vector v(n_, p_);
  for (std::size_t j = 0; j < n_; ++j) v.set(j, at(i, j));
  return v;
}

Vector Matrix::flatten() const {
  Vector v(n_ * n_, p_);
  for (std::size_t k = 0; k < entries_.size(); ++k) v.set(k, entries_[k]);
  return v;
}

Matrix Matrix::block(std::size_t r, std::size_t c, std::size_t k) const {
  if (r + k > n_ || c + k > n_) throw DimensionMismatch("block out of range");
  Matrix out(k, p_);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) out.entries_[i * k + j] = at(r + i, c + j);
  }
  return out;
}

void Matrix::set_block(std::size_t r, std::size_t c, const Matrix& sub) {
  const std::size_t k = sub.dim();
  if (r + k > n_ || c + k > n_ || sub.prime() != p_) throw DimensionMismatch("set_block out of range");
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) entries_[(r + i) * n_ + c + j] = sub.at(i, j);
  }
}

bool Matrix::is_identity() const noexcept {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (entries_[i * n_ + j] != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](Residue e) { return e == 0; });
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_shape(*this, other, "matrix add");
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    entries_[k] = static_cast<Residue>((entries_[k] + other.entries_[k]) % p_);
  }
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_shape(*this, other, "matrix sub");
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    entries_[k] = static_cast<Residue>((entries_[k] + p_ - other.entries_[k]) % p_);
  }
  return *this;
}

Matrix& Matrix::operator*=(Residue scalar) {
  for (auto& e : entries_) e = static_cast<Residue>((e * scalar) % p_);
  return *this;
}

std::size_t MatrixHash::operator()(const Matrix& m) const noexcept {
  // FNV-1a over the residues; dimension is implied by equality.
  std::uint64_t h = 1469598103934665603ULL ^ m.dim();
  for (Residue e : m.entries()) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::size_t VectorHash::operator()(const Vector& v) const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ v.size();
  for (Residue e : v.entries()) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

// ---- arithmetic ----

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "mat_mul");
  const std::size_t n = a.dim();
  const unsigned p = a.prime();
  Matrix out(n, p);
  // Accumulate one output row at a time; (p-1)^2 * n fits comfortably in 32 bits.
  std::vector<std::uint32_t> acc(n);
  const auto ae = a.entries();
  const auto be = b.entries();
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(acc.begin(), acc.end(), 0U);
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint32_t s = ae[i * n + k];
      if (s == 0) continue;
      const Residue* brow = be.data() + k * n;
      for (std::size_t j = 0; j < n; ++j) acc[j] += s * brow[j];
    }
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, acc[j] % p);
  }
  return out;
}

Vector vec_mul(const Vector& x, const Matrix& a) {
  if (x.size() != a.dim() || x.prime() != a.prime()) {
    throw DimensionMismatch(fmt::format("vec_mul: length {} vs dimension {}", x.size(), a.dim()));
  }
  const std::size_t n = a.dim();
  std::vector<std::uint32_t> acc(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint32_t s = x[k];
    if (s == 0) continue;
    for (std::size_t j = 0; j < n; ++j) acc[j] += s * a.at(k, j);
  }
  Vector out(n, a.prime());
  for (std::size_t j = 0; j < n; ++j) out.set(j, acc[j] % a.prime());
  return out;
}

Matrix mat_pow(const Matrix& a, std::uint64_t k) {
  Matrix result = Matrix::identity(a.dim(), a.prime());
  Matrix base = a;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Matrix mat_inv(const Matrix& a) {
  const std::size_t n = a.dim();
  const unsigned p = a.prime();
  // Augmented [A | I], reduced to [I | A^-1].
  std::vector<std::vector<Residue>> rows(n, std::vector<Residue>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = a.at(i, j);
    rows[i][n + i] = 1;
  }
  const auto pivots = row_reduce(rows, n, p);
  if (pivots.size() != n || (n > 0 && pivots.back() != n - 1)) {
    throw NotInvertible(fmt::format("{}x{} matrix over F_{} is not invertible", n, n, p));
  }
  Matrix inv(n, p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, rows[i][n + j]);
  }
  return inv;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.dim(), a.prime());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) t.set(i, j, a.at(j, i));
  }
  return t;
}

Matrix conjugate(const Matrix& m, const Matrix& g) { return mat_inv(g) * m * g; }

std::uint64_t element_order(const Matrix& a, std::uint64_t bound) {
  Matrix power = a;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (power.is_identity()) return k;
    if (k < bound) power = power * a;
  }
  throw OrderBoundExceeded(bound);
}

// ---- subspaces ----

std::vector<Vector> echelon_basis(std::span<const Vector> vectors) {
  if (vectors.empty()) return {};
  const std::size_t width = vectors.front().size();
  const unsigned p = vectors.front().prime();
  std::vector<std::vector<Residue>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != width || v.prime() != p) throw DimensionMismatch("echelon_basis: mixed vector shapes");
    rows.emplace_back(v.entries().begin(), v.entries().end());
  }
  row_reduce(rows, width, p);
  std::vector<Vector> basis;
  basis.reserve(rows.size());
  for (const auto& r : rows) {
    Vector v(width, p);
    for (std::size_t j = 0; j < width; ++j) v.set(j, r[j]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t span_dimension(std::span<const Vector> vectors) { return echelon_basis(vectors).size(); }

std::size_t rank(const Matrix& a) {
  std::vector<Vector> rows;
  rows.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.row(i));
  return span_dimension(rows);
}

std::vector<Vector> left_kernel(std::span<const Vector> rows) {
  if (rows.empty()) return {};
  const std::size_t m = rows.size();
  const std::size_t width = rows.front().size();
  const unsigned p = rows.front().prime();
  // Reduce [R | I]; rows whose R-part vanishes carry kernel vectors in the I-part.
  std::vector<std::vector<Residue>> aug(m, std::vector<Residue>(width + m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != width || rows[i].prime() != p) throw DimensionMismatch("left_kernel: mixed row shapes");
    std::copy(rows[i].entries().begin(), rows[i].entries().end(), aug[i].begin());
    aug[i][width + i] = 1;
  }
  const auto pivots = row_reduce(aug, width + m, p);
  std::vector<Vector> kernel;
  for (std::size_t r = 0; r < aug.size(); ++r) {
    if (pivots[r] < width) continue;
    Vector v(m, p);
    for (std::size_t j = 0; j < m; ++j) v.set(j, aug[r][width + j]);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

std::vector<Vector> kernel_basis(const Matrix& a) {
  std::vector<Vector> rows;
  rows.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.row(i));
  return left_kernel(rows);
}

bool in_span(std::span<const Vector> basis, const Vector& x) {
  std::vector<Vector> extended(basis.begin(), basis.end());
  const std::size_t before = span_dimension(extended);
  extended.push_back(x);
  return span_dimension(extended) == before;
}

std::vector<Vector> span_elements(std::span<const Vector> basis, std::size_t ambient_dim, unsigned p) {
  std::vector<Vector> out{Vector(ambient_dim, p)};
  for (const auto& b : basis) {
    const std::size_t prev = out.size();
    for (unsigned c = 1; c < p; ++c) {
      for (std::size_t i = 0; i < prev; ++i) out.push_back(out[i] + static_cast<Residue>(c) * b);
    }
  }
  return out;
}

// ---- text format ----

std::string to_text(const Matrix& m) {
  std::string out = fmt::format("{} {}\n", m.dim(), m.prime());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string to_symmetric_text(const Matrix& m) {
  std::string out = fmt::format("{} {}\n", m.dim(), m.prime());
  const int half = static_cast<int>(m.prime()) / 2;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      int e = m.at(i, j);
      if (e > half) e -= static_cast<int>(m.prime());
      if (j > 0) out += ' ';
      out += fmt::format("{:>2}", e);
    }
    out += '\n';
  }
  return out;
}

std::string to_text(const Vector& v) {
  std::string out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j > 0) out += ' ';
    out += std::to_string(v[j]);
  }
  return out;
}

Matrix read_matrix(std::istream& in) {
  long long n = 0;
  long long p = 0;
  if (!(in >> n >> p)) throw FormatError("matrix header: expected \"n p\"");
  if (n < 0 || n > 4096) throw FormatError(fmt::format("matrix header: bad dimension {}", n));
  if (!is_small_prime(p)) throw FormatError(fmt::format("matrix header: bad modulus {}", p));
  Matrix m(static_cast<std::size_t>(n), static_cast<unsigned>(p));
  for (long long i = 0; i < n; ++i) {
    for (long long j = 0; j < n; ++j) {
      long long e = 0;
      if (!(in >> e)) throw FormatError(fmt::format("matrix entry ({},{}) missing", i + 1, j + 1));
      if (e < 0 || e >= p) throw FormatError(fmt::format("matrix entry ({},{}) = {} is not a residue", i + 1, j + 1, e));
      m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), e);
    }
  }
  return m;
}

Matrix matrix_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  Matrix m = read_matrix(in);
  std::string rest;
  if (in >> rest) throw FormatError("trailing data after matrix");
  return m;
}

}  // namespace isospec
