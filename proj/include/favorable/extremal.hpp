#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "favorable/core.hpp"
#include "favorable/order.hpp"

namespace favorable {

struct ExtremalClassification {
  /// Exactly one allocation is ranked first by everybody.
  bool is_max_condition = false;
  /// Every allocation is efficient and every row is strict.
  bool is_min_condition = false;
  std::optional<AllocationId> witness_top;
};

ExtremalClassification classify_extremal(const PreferenceProfile& p);

enum class DescentRule { ParetoGap, PairIndifference, LoneIndifference };

std::string_view to_string(DescentRule rule);

/// One local perturbation together with the verified comparison
/// compare(before, after).
struct DescentStep {
  DescentRule rule = DescentRule::ParetoGap;
  PreferenceProfile before;
  PreferenceProfile after;
  OrderVerdict verdict;
  /// The verified verdict is not StrictlyAbove.
  bool flagged = false;
  /// LoneIndifference only: promotion was equivalent and the demotion
  /// direction was tried instead.
  bool used_demotion = false;
  /// ParetoGap only: the dominated allocation lifted onto the frontier and
  /// the dominating frontier member it traded places with.
  std::optional<AllocationId> lifted;
  std::optional<AllocationId> displaced;
};

/// Swap a dominated allocation with its best dominating frontier member (and
/// that member's exact duplicates) in one individual's order. The free
/// choices are tried in index order and the first that moves strictly down
/// while growing the frontier is kept; failing that, the first that moves
/// strictly down; failing that, the first choice.
DescentStep perturb_pareto_gap(const PreferenceProfile& p);

/// Break an indifference shared by two individuals in opposite directions.
DescentStep perturb_pair_indifference(const PreferenceProfile& p);

/// Break an indifference held by a single individual. Promotes the frontier
/// allocation first; if that only yields an equivalent profile, demotes it.
DescentStep perturb_lone_indifference(const PreferenceProfile& p);

/// Steps that were taken before the budget ran out.
class StepBudgetExhausted : public Error {
 public:
  explicit StepBudgetExhausted(std::vector<DescentStep> partial)
      : Error(ErrorKind::StepBudgetExhausted,
              "descent did not reach a minimal profile after " +
                  std::to_string(partial.size()) + " steps"),
        partial_(std::move(partial)) {}

  const std::vector<DescentStep>& partial_chain() const noexcept {
    return partial_;
  }

 private:
  std::vector<DescentStep> partial_;
};

/// Applies ParetoGap, PairIndifference, LoneIndifference (first applicable)
/// until the profile satisfies the minimality condition.
std::vector<DescentStep> descend_to_minimal(const PreferenceProfile& p,
                                            std::size_t max_steps);

/// Individual i's order with x moved strictly above (or below) the rest of
/// its indifference class; every other relation is kept.
PreferenceProfile promote_in_class(const PreferenceProfile& p,
                                   std::size_t individual, AllocationId x);
PreferenceProfile demote_in_class(const PreferenceProfile& p,
                                  std::size_t individual, AllocationId x);

}  // namespace favorable
