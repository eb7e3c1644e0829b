#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "favorable/core.hpp"
#include "favorable/order.hpp"

namespace favorable::oracle {

inline constexpr std::size_t kMaxProfiles = 1'000'000;
inline constexpr std::size_t kMaxComparisons = 10'000'000;
inline constexpr std::size_t kMaxFrontierForSearch = 5;

/// Every weak order on m elements as a competition-rank row, generated from
/// ordered set partitions and sorted lexicographically. Fubini(m) rows.
std::vector<std::vector<int>> weak_order_rows(std::size_t m);

/// Every strict order on m elements (permutations of 1..m), lexicographic.
std::vector<std::vector<int>> strict_order_rows(std::size_t m);

/// Deterministic stream over all n-individual profiles on m allocations,
/// lexicographic in the rank rows.
class ProfileStream {
 public:
  ProfileStream(std::size_t n, std::size_t m, bool strict_only);

  std::size_t total() const noexcept { return total_; }
  std::optional<PreferenceProfile> next();

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<std::vector<int>> rows_;
  std::vector<std::size_t> odometer_;
  std::size_t emitted_ = 0;
  std::size_t total_ = 0;
};

std::vector<PreferenceProfile> enumerate_profiles(std::size_t n, std::size_t m,
                                                  bool strict_only);

/// Exhaustive search over every map PE(P') -> PE(P), lexicographic with the
/// first frontier member most significant. Returns the first onto map that
/// respects rank dominance.
std::optional<PsiWitness> oracle_decide_weak(const PreferenceProfile& p,
                                             const PreferenceProfile& p_prime);

struct Violation {
  std::string claim;
  std::size_t first = 0;   // profile index
  std::size_t second = 0;  // profile index (== first for single-profile claims)
};

struct CensusReport {
  std::size_t num_individuals = 0;
  std::size_t num_allocations = 0;
  bool strict_only = false;
  std::size_t total_profiles = 0;
  std::vector<std::size_t> maximal_ids;
  std::vector<std::size_t> upper_bound_ids;
  std::vector<std::size_t> minimal_ids;
  std::vector<Violation> violations;
};

/// Weak-dominance matrix over `profiles`: at(a, b) iff decide_weak(a, b).
class DominanceMatrix {
 public:
  explicit DominanceMatrix(const std::vector<PreferenceProfile>& profiles,
                           unsigned workers = 0);

  std::size_t size() const noexcept { return size_; }
  bool at(std::size_t a, std::size_t b) const {
    return bits_[a * size_ + b] != 0;
  }

 private:
  std::size_t size_;
  std::vector<unsigned char> bits_;
};

/// Classifies every profile of the shape by its comparisons with all others
/// and audits the extremal characterization, the matching reduction, the
/// variant implications and transitivity.
CensusReport extremal_census(std::size_t n, std::size_t m, bool strict_only);

}  // namespace favorable::oracle
