#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "favorable/core.hpp"
#include "favorable/extremal.hpp"

namespace favorable {

/// Injective widget assignment: widget_of[i] is the widget held by i.
struct Assignment {
  std::vector<std::size_t> widget_of;

  auto operator<=>(const Assignment&) const = default;
};

/// N individuals with strict private preferences over M >= N widgets.
/// private_rank(i, w) = 1 for i's favorite widget.
class AssignmentInstance {
 public:
  static AssignmentInstance from_ranks(const RankMatrix& private_ranks);

  std::size_t num_individuals() const noexcept { return ranks_.size(); }
  std::size_t num_widgets() const noexcept { return m_; }
  int private_rank(std::size_t individual, std::size_t widget) const;
  /// Widget that `individual` ranks `rank`-th (1-based).
  std::size_t widget_at_rank(std::size_t individual, int rank) const;
  const RankMatrix& private_ranks() const noexcept { return ranks_; }

  bool operator==(const AssignmentInstance&) const = default;

 private:
  AssignmentInstance(RankMatrix ranks, std::size_t m)
      : ranks_(std::move(ranks)), m_(m) {}
  RankMatrix ranks_;
  std::size_t m_ = 0;
};

inline constexpr std::size_t kDefaultSpaceCap = 5040;

/// M! / (M - N)!, saturating at SIZE_MAX.
std::size_t assignment_space_size(std::size_t n, std::size_t m);

/// All injective assignments of n individuals to m widgets, lexicographic.
std::vector<Assignment> enumerate_assignments(std::size_t n, std::size_t m,
                                              std::size_t cap = kDefaultSpaceCap);

/// Position of `a` in enumerate_assignments order.
AllocationId assignment_index(const std::vector<Assignment>& space,
                              const Assignment& a);

std::string assignment_label(const Assignment& a);

/// Profile over the assignment space in which each individual only cares
/// about her own widget (ties across allocations sharing that widget).
PreferenceProfile lift_to_profile(const AssignmentInstance& inst,
                                  std::size_t cap = kDefaultSpaceCap);

/// No sequence of individuals each envying the next closes into a cycle.
bool check_envy_cycle_free(const AssignmentInstance& inst,
                           const Assignment& a);

/// Every widget an individual prefers to her own is held by someone else.
bool check_no_better_available(const AssignmentInstance& inst,
                               const Assignment& a);

/// For every k in 1..N at least k individuals hold one of their top-k widgets.
bool diagonal_bound_check(const AssignmentInstance& inst, const Assignment& a);

/// Private rank of each individual's own widget under `a`.
std::vector<int> private_rank_vector(const AssignmentInstance& inst,
                                     const Assignment& a);

/// Maximal: favorites pairwise distinct. Minimal: everybody shares the same
/// top N-1 widgets in the same order (for M = N, the same top-N order). `witness_top` is the index of the
/// favorites assignment in the lifted space.
ExtremalClassification classify_private_extremal(
    const AssignmentInstance& inst);

/// Serial assignment in the order given by x's ranks under the common
/// preference of `minimal_inst`, each taking her favorite remaining
/// widget under `target_inst`.
Assignment greedy_psi(const AssignmentInstance& minimal_inst,
                      const AssignmentInstance& target_inst,
                      const Assignment& x);

}  // namespace favorable
