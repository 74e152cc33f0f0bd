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

#include "isospec/group.hpp"

#include <algorithm>
#include <exception>
#include <istream>
#include <mutex>
#include <random>
#include <thread>
#include <utility>

#include <fmt/core.h>

namespace isospec {

EnumerationLimitExceeded::EnumerationLimitExceeded(std::size_t limit, std::size_t partial_count)
    : GroupError(fmt::format("group has more than {} elements ({} found before stopping)", limit, partial_count)),
      limit_(limit),
      partial_count_(partial_count) {}

void GeneratorSet::validate() const {
  if (generators.empty()) throw GroupError(fmt::format("generator set '{}' is empty", label));
  const auto& first = generators.front();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (g.dim() != first.dim() || g.prime() != first.prime()) {
      throw GroupError(fmt::format("generator {} of '{}' has a different shape", i, label));
    }
    try {
      (void)mat_inv(g);
    } catch (const NotInvertible&) {
      throw GroupError(fmt::format("generator {} of '{}' is not invertible", i, label));
    }
  }
}

GroupEnumeration::GroupEnumeration(GeneratorSet gens, std::vector<Matrix> elements)
    : gens_(std::move(gens)), elements_(std::move(elements)) {
  index_.reserve(elements_.size());
  index_.insert(elements_.begin(), elements_.end());
}

GroupEnumeration close(const GeneratorSet& gens, std::size_t limit) {
  gens.validate();
  if (limit < 1) throw GroupError("enumeration limit must be at least 1");

  // Finite group: closure under products alone already contains inverses.
  std::unordered_set<Matrix, MatrixHash> seen;
  std::vector<Matrix> elements;
  elements.push_back(Matrix::identity(gens.dim(), gens.prime()));
  seen.insert(elements.front());
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens.generators) {
      Matrix next = elements[head] * g;
      if (seen.contains(next)) continue;
      if (elements.size() == limit) throw EnumerationLimitExceeded(limit, elements.size());
      seen.insert(next);
      elements.push_back(std::move(next));
    }
  }
  return GroupEnumeration(gens, std::move(elements));
}

Spectrum Spectrum::from_omega(OrderSet omega) {
  Spectrum s;
  s.mu = mu_of(omega);
  s.omega = std::move(omega);
  return s;
}

OrderSet divisor_closure(const OrderSet& s) {
  OrderSet out;
  for (std::uint64_t n : s) {
    if (n == 0) throw GroupError("divisor_closure: entries must be positive");
    for (std::uint64_t d = 1; d * d <= n; ++d) {
      if (n % d == 0) {
        out.insert(d);
        out.insert(n / d);
      }
    }
  }
  return out;
}

bool is_divisor_closed(const OrderSet& s) { return divisor_closure(s) == s; }

OrderSet mu_of(const OrderSet& omega) {
  if (!is_divisor_closed(omega)) throw GroupError("mu_of: set is not divisor-closed");
  OrderSet mu;
  for (std::uint64_t n : omega) {
    const bool maximal = std::none_of(omega.begin(), omega.end(), [n](std::uint64_t m) { return m != n && m % n == 0; });
    if (maximal) mu.insert(n);
  }
  return mu;
}

Spectrum spectrum_exhaustive(const GroupEnumeration& group, std::uint64_t bound) {
  OrderSet omega;
  for (const auto& x : group.elements()) omega.insert(element_order(x, bound));
  return Spectrum::from_omega(std::move(omega));
}

Spectrum spectrum_mod_center(const GroupEnumeration& group, std::span<const Matrix> center, std::uint64_t bound) {
  const std::unordered_set<Matrix, MatrixHash> z(center.begin(), center.end());
  if (z.empty()) throw GroupError("center must contain the identity");
  if (!z.contains(Matrix::identity(group.dim(), group.prime()))) throw GroupError("center does not contain the identity");
  for (const auto& c : z) {
    if (!group.contains(c)) throw GroupError("center element is not in the group");
    for (const auto& c2 : z) {
      if (!z.contains(c * c2)) throw GroupError("center is not closed under multiplication");
    }
    for (const auto& g : group.generators().generators) {
      if (!(c * g == g * c)) throw GroupError("center element does not commute with a generator");
    }
  }

  OrderSet omega;
  for (const auto& x : group.elements()) {
    Matrix power = x;
    std::uint64_t n = 1;
    while (!z.contains(power)) {
      if (++n > bound) throw OrderBoundExceeded(bound);
      power = power * x;
    }
    omega.insert(n);
  }
  return Spectrum::from_omega(std::move(omega));
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index) {
  // splitmix64 finalizer over (seed, index).
  std::uint64_t z = master_seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

struct WordAlphabet {
  std::vector<Matrix> letters;  // generators followed by their inverses

  explicit WordAlphabet(const GeneratorSet& gens) {
    gens.validate();
    letters = gens.generators;
    for (const auto& g : gens.generators) letters.push_back(mat_inv(g));
  }

  Matrix word(std::size_t length, std::uint64_t seed, std::size_t dim, unsigned p) const {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    // Letters are sparse, so accumulate by left multiplication.
    Matrix x = Matrix::identity(dim, p);
    for (std::size_t i = 0; i < length; ++i) x = letters[pick(rng)] * x;
    return x;
  }
};

}  // namespace

Matrix random_element(const GeneratorSet& gens, std::size_t word_length, std::uint64_t seed) {
  if (word_length < 1) throw GroupError("word length must be at least 1");
  return WordAlphabet(gens).word(word_length, seed, gens.dim(), gens.prime());
}

std::map<std::uint64_t, std::uint64_t> SampledSpectrum::histogram() const {
  std::map<std::uint64_t, std::uint64_t> h;
  for (auto o : orders) ++h[o];
  return h;
}

OrderSet SampledSpectrum::observed() const { return OrderSet(orders.begin(), orders.end()); }

SampledSpectrum spectrum_sampled(const GeneratorSet& gens, std::size_t samples, std::size_t word_length,
                                 std::uint64_t seed, unsigned workers, std::uint64_t bound) {
  if (samples < 1) throw GroupError("sample count must be at least 1");
  if (word_length < 1) throw GroupError("word length must be at least 1");
  const WordAlphabet alphabet(gens);
  const std::size_t dim = gens.dim();
  const unsigned p = gens.prime();

  SampledSpectrum out;
  out.orders.assign(samples, 0);
  workers = std::max(1U, workers);

  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&](std::size_t begin, std::size_t end) {
    try {
      for (std::size_t i = begin; i < end; ++i) {
        const Matrix x = alphabet.word(word_length, derive_seed(seed, i), dim, p);
        out.orders[i] = element_order(x, bound);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  if (workers == 1) {
    run(0, samples);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (samples + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(samples, w * chunk);
      const std::size_t end = std::min(samples, begin + chunk);
      pool.emplace_back(run, begin, end);
    }
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<Vector> orbit_span(const Vector& seed, std::span<const Matrix> action) {
  std::vector<Vector> basis;
  if (seed.is_zero()) return basis;
  // Grow the span from a work queue of vectors not yet pushed through the action.
  std::vector<Vector> queue{seed};
  basis.push_back(seed);
  while (!queue.empty()) {
    Vector x = std::move(queue.back());
    queue.pop_back();
    for (const auto& g : action) {
      Vector y = x * g;
      if (in_span(basis, y)) continue;
      basis.push_back(y);
      queue.push_back(std::move(y));
    }
  }
  return echelon_basis(basis);
}

GeneratorSet read_group_description(std::istream& in, std::string label) {
  long long dim = 0;
  long long p = 0;
  if (!(in >> dim >> p)) throw FormatError("group description: expected header \"dim p\"");
  GeneratorSet gens;
  gens.label = std::move(label);
  while (true) {
    in >> std::ws;
    if (in.eof()) break;
    Matrix m = read_matrix(in);
    if (static_cast<long long>(m.dim()) != dim || static_cast<long long>(m.prime()) != p) {
      throw FormatError(fmt::format("group description: generator {} is {}x{} over F_{}, header says {} over F_{}",
                                    gens.generators.size() + 1, m.dim(), m.dim(), m.prime(), dim, p));
    }
    gens.generators.push_back(std::move(m));
  }
  if (gens.generators.empty()) throw FormatError("group description: no generators");
  return gens;
}

std::string to_group_description(const GeneratorSet& gens) {
  std::string out = fmt::format("{} {}\n", gens.dim(), gens.prime());
  for (const auto& g : gens.generators) {
    out += '\n';
    out += to_text(g);
  }
  return out;
}

std::string format_spectrum(const Spectrum& s) {
  auto line = [](const OrderSet& set) {
    std::string out;
    for (auto n : set) {
      if (!out.empty()) out += ' ';
      out += std::to_string(n);
    }
    return out;
  };
  return line(s.omega) + '\n' + line(s.mu) + '\n';
}

}  // namespace isospec
