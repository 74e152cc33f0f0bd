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

#include "isospec/construction.hpp"

#include <stdexcept>
#include <utility>

#include <fmt/core.h>

namespace isospec {

namespace {

std::size_t block_start(std::size_t k) { return k == 0 ? 0 : 1 + kModuleDim * (k - 1); }

std::string power_name(const char* base, int e) {
  if (e == 0) return "1";
  if (e == 1) return base;
  return fmt::format("{}^{}", base, e);
}

// (b^j)^(a^k) = b^j a^e = a^f b^j, as stated for j = 1..3, k = 1..4.
struct RelationCell {
  int j, k, e, f;
};

constexpr RelationCell kRelationTable[] = {
    {1, 1, 4, 2}, {2, 1, 2, 3}, {3, 1, 3, 1},  //
    {1, 2, 3, 4}, {2, 2, 4, 1}, {3, 2, 1, 2},  //
    {1, 3, 2, 1}, {2, 3, 1, 4}, {3, 3, 4, 3},  //
    {1, 4, 1, 3}, {2, 4, 3, 2}, {3, 4, 2, 4},
};

}  // namespace

std::vector<std::string> frobenius_invariant_failures(const FrobeniusPair& fp) {
  std::vector<std::string> failures;
  const auto& a = fp.a;
  const auto& b = fp.b;
  if (a.dim() != kModuleDim || b.dim() != kModuleDim || a.prime() != b.prime()) {
    failures.push_back("a and b must be 4x4 over a common field");
    return failures;
  }
  if (!mat_pow(a, 5).is_identity()) failures.push_back("a^5 != 1");
  if (mat_pow(a, 1).is_identity()) failures.push_back("a = 1");
  if (!mat_pow(b, 4).is_identity()) failures.push_back("b^4 != 1");
  if (mat_pow(b, 2).is_identity()) failures.push_back("b^2 = 1");
  try {
    if (!(conjugate(a, b) == a * a)) failures.push_back("a^b != a^2");
  } catch (const NotInvertible&) {
    failures.push_back("b is not invertible");
  }
  Matrix sum(kModuleDim, a.prime());
  for (int k = 0; k < 5; ++k) sum += mat_pow(a, k);
  if (!sum.is_zero()) failures.push_back("1 + a + a^2 + a^3 + a^4 != 0");
  return failures;
}

FrobeniusPair build_frobenius(unsigned p) {
  FrobeniusPair fp{
      Matrix({{0, 1, 0, 0},  //
              {0, 0, 1, 0},
              {0, 0, 0, 1},
              {-1, -1, -1, -1}},
             p),
      Matrix({{1, 0, 0, 0},  //
              {0, 0, 1, 0},
              {-1, -1, -1, -1},
              {0, 1, 0, 0}},
             p),
  };
  const auto failures = frobenius_invariant_failures(fp);
  if (!failures.empty()) throw std::logic_error("Frobenius data corrupted: " + failures.front());
  return fp;
}

bool ConjugationReport::all_hold() const {
  for (const auto& c : checks) {
    if (!c.holds) return false;
  }
  return true;
}

std::vector<std::string> ConjugationReport::failing_cells() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.holds) out.push_back(c.cell);
  }
  return out;
}

ConjugationReport check_conjugation_identities(const FrobeniusPair& fp) {
  ConjugationReport report;
  for (const auto& cell : kRelationTable) {
    const Matrix bj = mat_pow(fp.b, cell.j);
    const Matrix ak = mat_pow(fp.a, cell.k);
    const std::string lhs = fmt::format("({})^({})", power_name("b", cell.j), power_name("a", cell.k));
    const std::string mid = power_name("b", cell.j) + " " + power_name("a", cell.e);
    const std::string rhs = power_name("a", cell.f) + " " + power_name("b", cell.j);

    bool first = false;
    bool second = false;
    const Matrix middle = bj * mat_pow(fp.a, cell.e);
    try {
      first = conjugate(bj, ak) == middle;
    } catch (const NotInvertible&) {
      first = false;
    }
    second = middle == mat_pow(fp.a, cell.f) * bj;
    report.checks.push_back({lhs + " = " + mid, first});
    report.checks.push_back({mid + " = " + rhs, second});
  }
  return report;
}

Construction standard_construction(unsigned p) {
  Construction k;
  k.fp = build_frobenius(p);
  const Matrix& b = k.fp.b;
  const Matrix b2 = b * b;
  k.c = {b, b2 * b, b2, -b2};
  k.d = Vector({1, 0, 0, 0}, p);
  return k;
}

Matrix block_diagonal(const Matrix& g) {
  Matrix out = Matrix::identity(kBigDim, g.prime());
  for (std::size_t k = 1; k <= 4; ++k) out.set_block(block_start(k), block_start(k), g);
  return out;
}

BigGenerators build_big_generators(const Construction& k) {
  const unsigned p = k.prime();
  BigGenerators g{block_diagonal(k.fp.a), block_diagonal(k.fp.b), Matrix::identity(kBigDim, p),
                  Matrix::identity(kBigDim, p)};
  // 1-based block (2,3) is block (1,2) here, and so on.
  g.C.set_block(block_start(1), block_start(2), k.c[0]);
  g.C.set_block(block_start(1), block_start(3), k.c[2]);
  g.C.set_block(block_start(2), block_start(4), k.c[3]);
  g.C.set_block(block_start(3), block_start(4), k.c[1]);
  for (std::size_t j = 0; j < kModuleDim; ++j) g.D.set(0, block_start(1) + j, k.d[j]);
  return g;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ShapeError(what);
}

// Entry (i, j) outside the listed blocks must match the identity.
bool outside_blocks_is_identity(const Matrix& m, const std::vector<std::pair<std::size_t, std::size_t>>& blocks) {
  auto block_of = [](std::size_t idx) -> std::size_t { return idx == 0 ? 0 : 1 + (idx - 1) / kModuleDim; };
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const auto bi = block_of(i);
      const auto bj = block_of(j);
      bool listed = false;
      for (const auto& [r, c] : blocks) listed = listed || (r == bi && c == bj);
      if (listed) continue;
      if (m.at(i, j) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

}  // namespace

Construction construction_from_generators(const BigGenerators& gens) {
  for (const Matrix* m : {&gens.A, &gens.B, &gens.C, &gens.D}) {
    require(m->dim() == kBigDim, fmt::format("generator is {}x{}, expected 17x17", m->dim(), m->dim()));
  }
  Construction k;
  const auto diag_pattern = std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 2}, {3, 3}, {4, 4}};
  auto diagonal_block = [&](const Matrix& m, const char* name) {
    require(outside_blocks_is_identity(m, diag_pattern), fmt::format("{} is not block diagonal diag(1,g,g,g,g)", name));
    const Matrix g = m.block(block_start(1), block_start(1), kModuleDim);
    for (std::size_t i = 2; i <= 4; ++i) {
      require(m.block(block_start(i), block_start(i), kModuleDim) == g,
              fmt::format("{} has unequal diagonal blocks", name));
    }
    return g;
  };
  k.fp.a = diagonal_block(gens.A, "A");
  k.fp.b = diagonal_block(gens.B, "B");

  require(outside_blocks_is_identity(gens.C, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}), "C does not have the (c1 c3 / c4 / c2) pattern");
  k.c[0] = gens.C.block(block_start(1), block_start(2), kModuleDim);
  k.c[2] = gens.C.block(block_start(1), block_start(3), kModuleDim);
  k.c[3] = gens.C.block(block_start(2), block_start(4), kModuleDim);
  k.c[1] = gens.C.block(block_start(3), block_start(4), kModuleDim);

  // D differs from the identity only in row 0, columns 1..4.
  Matrix rest = gens.D;
  k.d = Vector(kModuleDim, gens.D.prime());
  for (std::size_t j = 0; j < kModuleDim; ++j) {
    k.d.set(j, gens.D.at(0, block_start(1) + j));
    rest.set(0, block_start(1) + j, 0);
  }
  require(rest.is_identity(), "D is not the identity outside block (0,1)");
  return k;
}

std::vector<Matrix> enumerate_frobenius(const FrobeniusPair& fp, std::size_t limit) {
  return close(GeneratorSet{{fp.a, fp.b}, "F"}, limit).elements();
}

// ---- module maps ----

ModuleHom::ModuleHom(int index, std::array<Matrix, 4> basis_images) : index_(index), images_(std::move(basis_images)) {}

Matrix ModuleHom::apply(const Vector& x) const {
  if (x.size() != kModuleDim) throw DimensionMismatch("module map expects a vector of V");
  Matrix out(kModuleDim, x.prime());
  for (std::size_t j = 0; j < kModuleDim; ++j) {
    if (x[j] != 0) out += x[j] * images_[j];
  }
  return out;
}

std::vector<Vector> ModuleHom::rows() const {
  std::vector<Vector> out;
  for (const auto& m : images_) out.push_back(m.flatten());
  return out;
}

std::vector<std::string> ModuleHom::equivariance_failures(const FrobeniusPair& fp) const {
  std::vector<std::string> failures;
  const std::pair<const char*, const Matrix*> action[] = {{"a", &fp.a}, {"b", &fp.b}};
  for (const auto& [name, g] : action) {
    for (std::size_t j = 0; j < kModuleDim; ++j) {
      const Vector e = Vector::unit(kModuleDim, j, g->prime());
      const Matrix lhs = apply(e * *g);
      const Matrix rhs = conjugate(apply(e), *g);
      if (!(lhs == rhs)) {
        failures.push_back(fmt::format("alpha_{}: (e{} {}) alpha != {}^-1 (e{} alpha) {}", index_, j, name, name, j, name));
      }
    }
  }
  return failures;
}

bool extends_to_module_hom(const Matrix& m, const FrobeniusPair& fp) {
  if (!(conjugate(m, fp.b) == m)) return false;
  Matrix sum(m.dim(), m.prime());
  Matrix ak = Matrix::identity(m.dim(), m.prime());
  for (int k = 0; k < 5; ++k) {
    sum += conjugate(m, ak);
    ak = ak * fp.a;
  }
  return sum.is_zero();
}

ModuleHom build_hom(const Matrix& m, const FrobeniusPair& fp, int index) {
  if (!extends_to_module_hom(m, fp)) {
    throw std::invalid_argument(fmt::format("v -> m does not extend to a module map (index {})", index));
  }
  std::array<Matrix, 4> images;
  Matrix ak = Matrix::identity(kModuleDim, m.prime());
  for (std::size_t k = 0; k < kModuleDim; ++k) {
    images[k] = conjugate(m, ak);
    ak = ak * fp.a;
  }
  return ModuleHom(index, std::move(images));
}

ModuleHom build_alpha(int i, const Construction& k) {
  if (i < 1 || i > 4) throw std::out_of_range(fmt::format("alpha index {} not in 1..4", i));
  return build_hom(k.c[static_cast<std::size_t>(i - 1)], k.fp, i);
}

std::array<ModuleHom, 4> build_alphas(const Construction& k) {
  return {build_alpha(1, k), build_alpha(2, k), build_alpha(3, k), build_alpha(4, k)};
}

std::vector<Vector> centralizer_in_module(const Matrix& g) {
  return kernel_basis(g - Matrix::identity(g.dim(), g.prime()));
}

std::vector<NamedElement> frobenius_words(const FrobeniusPair& fp) {
  std::vector<NamedElement> out;
  for (int k = 0; k < 5; ++k) {
    for (int j = 0; j < 4; ++j) {
      std::string name = power_name("a", k);
      if (j > 0) name = (k == 0 ? "" : name + " ") + power_name("b", j);
      out.push_back({name, mat_pow(fp.a, k) * mat_pow(fp.b, j)});
    }
  }
  return out;
}

}  // namespace isospec
