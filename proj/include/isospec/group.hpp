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

#ifndef ISOSPEC_GROUP_HPP
#define ISOSPEC_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "isospec/field.hpp"

namespace isospec {

using OrderSet = std::set<std::uint64_t>;

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EnumerationLimitExceeded : public GroupError {
 public:
  EnumerationLimitExceeded(std::size_t limit, std::size_t partial_count);
  std::size_t limit() const noexcept { return limit_; }
  std::size_t partial_count() const noexcept { return partial_count_; }

 private:
  std::size_t limit_;
  std::size_t partial_count_;
};

struct GeneratorSet {
  std::vector<Matrix> generators;
  std::string label;

  /// Throws GroupError unless nonempty, of common shape, and all invertible.
  void validate() const;
  std::size_t dim() const { return generators.front().dim(); }
  unsigned prime() const { return generators.front().prime(); }
};

class GroupEnumeration {
 public:
  GroupEnumeration(GeneratorSet gens, std::vector<Matrix> elements);

  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(const Matrix& m) const { return index_.contains(m); }
  const std::vector<Matrix>& elements() const noexcept { return elements_; }
  const GeneratorSet& generators() const noexcept { return gens_; }
  std::size_t dim() const { return gens_.dim(); }
  unsigned prime() const { return gens_.prime(); }

 private:
  GeneratorSet gens_;
  std::vector<Matrix> elements_;
  std::unordered_set<Matrix, MatrixHash> index_;
};

/// Breadth-first closure of <gens>. Throws EnumerationLimitExceeded when the
/// group has more than `limit` elements.
GroupEnumeration close(const GeneratorSet& gens, std::size_t limit);

struct Spectrum {
  OrderSet omega;
  OrderSet mu;

  static Spectrum from_omega(OrderSet omega);
  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

OrderSet divisor_closure(const OrderSet& s);

/// Maximal elements under divisibility. Throws GroupError if `omega` is not
/// divisor-closed.
OrderSet mu_of(const OrderSet& omega);

bool is_divisor_closed(const OrderSet& s);

inline constexpr std::uint64_t kDefaultOrderBound = 1000;

Spectrum spectrum_exhaustive(const GroupEnumeration& group, std::uint64_t bound = kDefaultOrderBound);

/// Spectrum of group/center: the order of xZ is the least n with x^n in Z.
Spectrum spectrum_mod_center(const GroupEnumeration& group, std::span<const Matrix> center,
                             std::uint64_t bound = kDefaultOrderBound);

/// Product of `word_length` generators or inverses drawn uniformly with a
/// generator seeded by `seed`.
Matrix random_element(const GeneratorSet& gens, std::size_t word_length, std::uint64_t seed);

/// Seed of sample `index` in a run driven by `master_seed`.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index);

struct SampledSpectrum {
  /// orders[i] is the order of random_element(gens, word_length, derive_seed(seed, i)).
  std::vector<std::uint64_t> orders;
  std::map<std::uint64_t, std::uint64_t> histogram() const;
  OrderSet observed() const;
};

/// Each sample depends only on (seed, index), so the result does not depend
/// on `workers`.
SampledSpectrum spectrum_sampled(const GeneratorSet& gens, std::size_t samples, std::size_t word_length,
                                 std::uint64_t seed, unsigned workers = 1,
                                 std::uint64_t bound = kDefaultOrderBound);

/// Basis of the smallest subspace containing `seed` and invariant under every
/// matrix in `action`.
std::vector<Vector> orbit_span(const Vector& seed, std::span<const Matrix> action);

// Group description file: header "dim p", then generators in matrix text
// format separated by blank lines.
GeneratorSet read_group_description(std::istream& in, std::string label = {});
std::string to_group_description(const GeneratorSet& gens);

/// Sorted omega on one line, sorted mu on the next.
std::string format_spectrum(const Spectrum& s);

}  // namespace isospec

#endif  // ISOSPEC_GROUP_HPP
