#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "favorable/error.hpp"

namespace favorable {

/// Position of an allocation inside a profile's allocation space.
struct AllocationId {
  std::size_t value = 0;

  constexpr auto operator<=>(const AllocationId&) const = default;
};

/// Upper bounds on profile dimensions. Downstream oracles are exponential in
/// both, so direct profiles are kept small by default; structured settings
/// (widget assignments) raise the allocation bound explicitly.
struct ProfileLimits {
  std::size_t max_individuals = 8;
  std::size_t max_allocations = 8;
};

using RankMatrix = std::vector<std::vector<int>>;

/// Per-individual ranks of one allocation.
struct RankVector {
  std::vector<int> values;

  bool operator==(const RankVector&) const = default;

  /// Componentwise <=.
  bool weakly_below(const RankVector& other) const;
  /// Componentwise <= with at least one strict coordinate.
  bool strictly_below(const RankVector& other) const;
};

/// N weak orders over M allocations, stored as competition ranks:
/// rank(i, x) = 1 + #{z : z is strictly preferred to x by i}.
/// Immutable once validated.
class PreferenceProfile {
 public:
  std::size_t num_individuals() const noexcept { return n_; }
  std::size_t num_allocations() const noexcept { return m_; }

  int rank(std::size_t individual, AllocationId x) const;
  std::span<const int> row(std::size_t individual) const;
  RankMatrix ranks() const;

  /// Every row is a permutation of 1..M.
  bool is_strict() const;

  const std::optional<std::vector<std::string>>& labels() const noexcept {
    return labels_;
  }
  /// Display name for x: its label if labels are present, else its index.
  std::string label(AllocationId x) const;

  PreferenceProfile with_labels(std::vector<std::string> labels) const;

  bool operator==(const PreferenceProfile& other) const {
    return n_ == other.n_ && m_ == other.m_ && data_ == other.data_;
  }

 private:
  friend PreferenceProfile validate_profile(const RankMatrix&,
                                            const ProfileLimits&);
  PreferenceProfile(std::size_t n, std::size_t m, std::vector<int> data)
      : n_(n), m_(m), data_(std::move(data)) {}

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<int> data_;  // row-major, n_ x m_
  std::optional<std::vector<std::string>> labels_;
};

/// Sorted set of undominated allocations.
struct ParetoFrontier {
  std::vector<AllocationId> members;

  bool contains(AllocationId x) const;
  std::size_t size() const noexcept { return members.size(); }
  bool operator==(const ParetoFrontier&) const = default;
};

/// True iff the row is a competition ranking: its smallest value is 1 and a
/// value v with multiplicity k is followed by exactly v + k.
bool is_competition_row(std::span<const int> row);

/// Competition ranks of a row of sort keys, lower key = better.
/// rank[x] = 1 + #{z : keys[z] < keys[x]}.
template <typename Key>
std::vector<int> competition_ranks(std::span<const Key> keys) {
  std::vector<int> ranks(keys.size(), 1);
  for (std::size_t x = 0; x < keys.size(); ++x) {
    for (std::size_t z = 0; z < keys.size(); ++z) {
      if (keys[z] < keys[x]) ++ranks[x];
    }
  }
  return ranks;
}

PreferenceProfile validate_profile(const RankMatrix& ranks,
                                   const ProfileLimits& limits = {});

RankVector rank_vector(const PreferenceProfile& p, AllocationId x);

/// Strict Pareto dominance of x over y. Requires x != y.
bool pareto_dominates(const PreferenceProfile& p, AllocationId x,
                      AllocationId y);

ParetoFrontier pareto_frontier(const PreferenceProfile& p);

/// Throws DimensionMismatch unless both profiles share N and M.
void require_same_shape(const PreferenceProfile& a,
                        const PreferenceProfile& b);

}  // namespace favorable
