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

#include "isospec/pgroup.hpp"

#include <map>
#include <utility>

#include <fmt/core.h>

namespace isospec {

namespace {

constexpr std::size_t kBlock = kModuleDim;

std::size_t start(std::size_t k) { return k == 0 ? 0 : 1 + kBlock * (k - 1); }

// Block positions (row, col) of f1, f2, f3, f4, h in the 17x17 layout.
constexpr std::pair<std::size_t, std::size_t> kFBlocks[4] = {{1, 2}, {3, 4}, {1, 3}, {2, 4}};
constexpr std::pair<std::size_t, std::size_t> kHBlock = {1, 4};

Matrix zero4(unsigned p) { return Matrix(kBlock, p); }

// 4x4 matrix whose first row is `d` and whose other rows vanish.
Matrix row_block(const Vector& d) {
  Matrix m(kBlock, d.prime());
  for (std::size_t j = 0; j < kBlock; ++j) m.set(0, j, d[j]);
  return m;
}

}  // namespace

// ---- CTuple ----

CTuple CTuple::identity(unsigned p) { return CTuple{{zero4(p), zero4(p), zero4(p), zero4(p)}, zero4(p)}; }

bool CTuple::is_identity() const {
  for (const auto& m : f) {
    if (!m.is_zero()) return false;
  }
  return h.is_zero();
}

std::size_t CTupleHash::operator()(const CTuple& t) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](const Matrix& m) {
    for (Residue e : m.entries()) {
      h ^= e;
      h *= 1099511628211ULL;
    }
  };
  for (const auto& m : t.f) mix(m);
  mix(t.h);
  return static_cast<std::size_t>(h);
}

CTuple c_mul(const CTuple& x, const CTuple& y) {
  CTuple out;
  for (std::size_t i = 0; i < 4; ++i) out.f[i] = x.f[i] + y.f[i];
  out.h = x.h + y.h + x.f[0] * y.f[3] + x.f[2] * y.f[1];
  return out;
}

CTuple c_inverse(const CTuple& x) {
  // (f, h)(-f, h'') = 1 forces h'' = -h + f1 f4 + f3 f2.
  CTuple out;
  for (std::size_t i = 0; i < 4; ++i) out.f[i] = -x.f[i];
  out.h = -x.h + x.f[0] * x.f[3] + x.f[2] * x.f[1];
  return out;
}

CTuple c_conjugate(const CTuple& x, const Matrix& g) {
  const Matrix gi = mat_inv(g);
  CTuple out;
  for (std::size_t i = 0; i < 4; ++i) out.f[i] = gi * x.f[i] * g;
  out.h = gi * x.h * g;
  return out;
}

CTuple c_commutator(const CTuple& x, const CTuple& y) {
  return c_mul(c_mul(c_inverse(x), c_inverse(y)), c_mul(x, y));
}

CTuple c_tuple_of(const Construction& k) { return CTuple{k.c, zero4(k.prime())}; }

CTuple c_tuple_from(const Vector& u, const std::array<ModuleHom, 4>& alphas) {
  CTuple out;
  for (std::size_t i = 0; i < 4; ++i) out.f[i] = alphas[i].apply(u);
  out.h = zero4(u.prime());
  return out;
}

// ---- PElement ----

PElement PElement::identity(unsigned p) {
  return PElement{{Vector(kBlock, p), Vector(kBlock, p), Vector(kBlock, p), Vector(kBlock, p)}, CTuple::identity(p)};
}

bool PElement::is_identity() const {
  for (const auto& v : d) {
    if (!v.is_zero()) return false;
  }
  return c.is_identity();
}

PElement p_mul(const PElement& x, const PElement& y) {
  PElement out;
  const auto& f = y.c.f;
  out.d[0] = x.d[0] + y.d[0];
  out.d[1] = x.d[1] + y.d[1] + x.d[0] * f[0];
  out.d[2] = x.d[2] + y.d[2] + x.d[0] * f[2];
  out.d[3] = x.d[3] + y.d[3] + x.d[0] * y.c.h + x.d[1] * f[3] + x.d[2] * f[1];
  out.c = c_mul(x.c, y.c);
  return out;
}

PElement p_inverse(const PElement& x) { return parse_matrix(mat_inv(embed_matrix(x))); }

Matrix embed_matrix(const PElement& x) {
  const unsigned p = x.c.h.prime();
  Matrix m = Matrix::identity(kBigDim, p);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < kBlock; ++j) m.set(0, start(i + 1) + j, x.d[i][j]);
  }
  for (std::size_t i = 0; i < 4; ++i) m.set_block(start(kFBlocks[i].first), start(kFBlocks[i].second), x.c.f[i]);
  m.set_block(start(kHBlock.first), start(kHBlock.second), x.c.h);
  return m;
}

PElement parse_matrix(const Matrix& m) {
  if (m.dim() != kBigDim) throw ShapeError(fmt::format("expected a 17x17 matrix, got {}x{}", m.dim(), m.dim()));
  const unsigned p = m.prime();
  PElement x = PElement::identity(p);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < kBlock; ++j) x.d[i].set(j, m.at(0, start(i + 1) + j));
  }
  for (std::size_t i = 0; i < 4; ++i) x.c.f[i] = m.block(start(kFBlocks[i].first), start(kFBlocks[i].second), kBlock);
  x.c.h = m.block(start(kHBlock.first), start(kHBlock.second), kBlock);
  if (!(embed_matrix(x) == m)) throw ShapeError("matrix is not of the block form of P");
  return x;
}

// ---- unitriangular picture ----

Unitriangular5 Unitriangular5::zero(unsigned p) {
  const Matrix z = zero4(p);
  return Unitriangular5{z, z, z, z, z, z, z, z, z, z};
}

Matrix Unitriangular5::to_matrix() const {
  const unsigned p = x1.prime();
  Matrix m = Matrix::identity(5 * kBlock, p);
  auto put = [&](std::size_t r, std::size_t c, const Matrix& blk) { m.set_block(r * kBlock, c * kBlock, blk); };
  put(0, 1, x1);
  put(0, 2, y1);
  put(0, 3, z1);
  put(0, 4, t1);
  put(1, 2, x2);
  put(1, 3, y2);
  put(1, 4, z2);
  put(2, 3, x3);
  put(2, 4, y3);
  put(3, 4, x4);
  return m;
}

Unitriangular5 Unitriangular5::from_matrix(const Matrix& m) {
  if (m.dim() != 5 * kBlock) throw ShapeError("expected a 20x20 matrix");
  auto get = [&](std::size_t r, std::size_t c) { return m.block(r * kBlock, c * kBlock, kBlock); };
  Unitriangular5 x{get(0, 1), get(1, 2), get(2, 3), get(3, 4), get(0, 2), get(1, 3), get(2, 4), get(0, 3), get(1, 4),
                   get(0, 4)};
  if (!(x.to_matrix() == m)) throw ShapeError("matrix is not block unitriangular");
  return x;
}

CubeBlocks cube_formula(const Unitriangular5& x) {
  return CubeBlocks{x.x1 * x.x2 * x.x3, x.x2 * x.x3 * x.x4,
                    x.x1 * x.x2 * x.y3 + x.x1 * x.y2 * x.x4 + x.y1 * x.x3 * x.x4};
}

Unitriangular5 pad(const PElement& x) {
  const auto& f = x.c.f;
  return Unitriangular5{row_block(x.d[0]), f[0],           zero4(x.c.h.prime()), f[1], row_block(x.d[1]),
                        f[2],              f[3],           row_block(x.d[2]),    x.c.h, row_block(x.d[3])};
}

CubeBlocks cube_blocks(const PElement& x) { return cube_formula(pad(x)); }

int p_order(const PElement& x) {
  if (!cube_blocks(x).all_zero()) return 9;
  return x.is_identity() ? 1 : 3;
}

PElement f_conjugate(const PElement& x, const Matrix& g) {
  Matrix g4 = g;
  if (g.dim() == kBigDim) {
    g4 = g.block(start(1), start(1), kBlock);
    if (!(block_diagonal(g4) == g)) throw ShapeError("conjugating element is not of the form diag(1,g,g,g,g)");
  } else if (g.dim() != kBlock) {
    throw ShapeError("conjugating element must be 4x4 or 17x17");
  }
  PElement out;
  for (std::size_t i = 0; i < 4; ++i) out.d[i] = x.d[i] * g4;
  out.c = c_conjugate(x.c, g4);
  return out;
}

// ---- <C>^F ----

CGroup::CGroup(std::vector<CTuple> elements) : elements_(std::move(elements)) {
  index_.reserve(elements_.size());
  index_.insert(elements_.begin(), elements_.end());
}

CGroup enumerate_c_group(const Construction& k, std::span<const Matrix> f_elements, std::size_t limit) {
  const CTuple c = c_tuple_of(k);
  std::vector<CTuple> gens;
  for (const auto& g : f_elements) gens.push_back(c_conjugate(c, g));

  std::unordered_set<CTuple, CTupleHash> seen;
  std::vector<CTuple> elements{CTuple::identity(k.prime())};
  seen.insert(elements.front());
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      CTuple next = c_mul(elements[head], g);
      if (seen.contains(next)) continue;
      if (elements.size() == limit) {
        throw StructuralFailure(fmt::format("<C>^F has more than {} elements", limit));
      }
      seen.insert(next);
      elements.push_back(std::move(next));
    }
  }
  return CGroup(std::move(elements));
}

std::vector<CTuple> commutator_set(const CGroup& group) {
  std::map<std::vector<Residue>, const CTuple*> reps;
  for (const auto& t : group.elements()) {
    std::vector<Residue> key;
    for (const auto& m : t.f) key.insert(key.end(), m.entries().begin(), m.entries().end());
    reps.emplace(std::move(key), &t);
  }
  std::unordered_set<CTuple, CTupleHash> out;
  for (const auto& [k1, x] : reps) {
    for (const auto& [k2, y] : reps) out.insert(c_commutator(*x, *y));
  }
  return {out.begin(), out.end()};
}

bool is_closed(std::span<const CTuple> tuples) {
  const std::unordered_set<CTuple, CTupleHash> set(tuples.begin(), tuples.end());
  for (const auto& x : tuples) {
    for (const auto& y : tuples) {
      if (!set.contains(c_mul(x, y))) return false;
    }
  }
  return true;
}

PGroupOrder p_group_order(const Construction& k, const CGroup& c_group, std::span<const Matrix> f_elements) {
  const unsigned p = k.prime();
  PGroupOrder out;
  out.f_order = f_elements.size();

  // Conjugation by diag(1, X) sends (1, d; 0, I) to (1, dX; 0, I), so the
  // d-coordinates of <D>^G form the smallest subspace of F_p^16 containing
  // (d, 0, 0, 0) and invariant under the lower-right blocks of A, B, C.
  const BigGenerators big = build_big_generators(k);
  std::vector<Matrix> action;
  for (const Matrix* g : {&big.A, &big.B, &big.C}) action.push_back(g->block(1, 1, kBigDim - 1));
  Vector seed(kBigDim - 1, p);
  for (std::size_t j = 0; j < kBlock; ++j) seed.set(j, k.d[j]);
  out.d_space_dimension = orbit_span(seed, action).size();
  out.d1_slot_dimension = orbit_span(k.d, std::vector<Matrix>{k.fp.a, k.fp.b}).size();
  if (out.d_space_dimension != 4 * kBlock) {
    throw StructuralFailure(fmt::format("d-coordinates of <D>^G span dimension {}, expected 16", out.d_space_dimension));
  }
  if (out.d1_slot_dimension != kBlock) {
    throw StructuralFailure(fmt::format("<D>^F spans dimension {} in slot d1, expected 4", out.d1_slot_dimension));
  }

  for (const auto& t : c_group.elements()) {
    for (const Matrix* g : {&k.fp.a, &k.fp.b}) {
      if (!c_group.contains(c_conjugate(t, *g))) throw StructuralFailure("<C>^F is not invariant under F");
    }
  }
  std::size_t trivial = 0;
  for (const auto& t : c_group.elements()) trivial += t.is_identity() ? 1 : 0;
  if (trivial != 1) throw StructuralFailure("<D>^G and <C>^F do not meet in the identity alone");

  out.c_group_order = c_group.order();
  std::uint64_t d_order = 1;
  for (std::size_t i = 0; i < out.d_space_dimension; ++i) d_order *= p;
  out.p_order = d_order * out.c_group_order;
  out.g_order = out.p_order * out.f_order;
  return out;
}

PElement random_p_element(const CGroup& c_group, std::mt19937_64& rng) {
  const unsigned p = c_group.elements().front().h.prime();
  std::uniform_int_distribution<unsigned> residue(0, p - 1);
  std::uniform_int_distribution<std::size_t> pick(0, c_group.order() - 1);
  PElement x = PElement::identity(p);
  for (auto& v : x.d) {
    for (std::size_t j = 0; j < kBlock; ++j) v.set(j, residue(rng));
  }
  x.c = c_group.elements()[pick(rng)];
  return x;
}

std::string to_text(const PElement& x) {
  std::string out;
  for (const auto& v : x.d) out += to_text(v) + '\n';
  for (const auto& m : x.c.f) out += '\n' + to_text(m);
  out += '\n' + to_text(x.c.h);
  return out;
}

}  // namespace isospec
