#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "favorable/assignment.hpp"
#include "favorable/order.hpp"

namespace favorable {

/// Assignments of everybody except `individual`, as projections of the
/// feasible assignment space, deduplicated and in lexicographic order.
std::vector<std::vector<std::size_t>> others_space(
    std::size_t n, std::size_t m, std::size_t individual,
    std::size_t cap = kDefaultSpaceCap);

/// Private strict preferences plus, for every individual, a weak order over
/// the others' assignments (competition ranks over others_space order).
/// Own widget decides first; the social part breaks ties.
class LexProfile {
 public:
  static LexProfile make(AssignmentInstance instance, RankMatrix social,
                         std::size_t cap = kDefaultSpaceCap);
  /// Every social part totally indifferent.
  static LexProfile individualistic(AssignmentInstance instance,
                                    std::size_t cap = kDefaultSpaceCap);

  const AssignmentInstance& instance() const noexcept { return instance_; }
  const RankMatrix& social() const noexcept { return social_; }
  std::size_t cap() const noexcept { return cap_; }
  /// Every social row is a permutation.
  bool social_is_strict() const;

 private:
  LexProfile(AssignmentInstance instance, RankMatrix social, std::size_t cap)
      : instance_(std::move(instance)), social_(std::move(social)), cap_(cap) {}
  AssignmentInstance instance_;
  RankMatrix social_;
  std::size_t cap_;
};

PreferenceProfile compose_lex_profile(const LexProfile& lp);

/// The composition with every social part replaced by total indifference.
PreferenceProfile individualize(const LexProfile& lp);

/// The composed and individualized profiles share their frontier.
bool check_carryover(const LexProfile& lp);

struct IndividualismReport {
  /// compare(individualize(lp), compose_lex_profile(lp)).
  OrderVerdict verdict;
  /// Two efficient allocations share some i's widget and i strictly prefers
  /// one complement.
  bool condition_b = false;
  /// N >= 3, at least two efficient allocations and strict social parts.
  bool condition_c = false;
  /// No efficient x and individual i have a same-widget z whose complement i
  /// strictly prefers to x's.
  bool no_social_gap = false;
  /// Claims that failed on this instance; empty when everything holds.
  std::vector<std::string> violations;
};

IndividualismReport individualism_compare(const LexProfile& lp);

}  // namespace favorable
