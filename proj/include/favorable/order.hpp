#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "favorable/core.hpp"

namespace favorable {

/// Rank-dominance graph between two frontiers. Left is the frontier of the
/// profile being dominated (P'), right the frontier of the dominating
/// profile (P). An edge (x, y) means R(P, y) <= R(P', x) componentwise.
struct AdmissibleGraph {
  struct Edge {
    AllocationId left;
    AllocationId right;
    bool strict = false;  // some coordinate strictly smaller

    bool operator==(const Edge&) const = default;
  };

  ParetoFrontier left;
  ParetoFrontier right;
  std::vector<Edge> edges;  // sorted by (left, right)

  /// Positions into `right.members` adjacent to left position `l`.
  std::vector<std::size_t> neighbors_of_left(std::size_t l) const;
};

/// Explicit onto map from the dominated frontier to the dominating one.
struct PsiWitness {
  std::vector<std::pair<AllocationId, AllocationId>> mapping;  // sorted by first

  std::optional<AllocationId> image(AllocationId x) const;
  bool operator==(const PsiWitness&) const = default;
};

enum class Relation { StrictlyAbove, Equivalent, StrictlyBelow, Incomparable };

std::string_view to_string(Relation r);

struct OrderVerdict {
  Relation relation = Relation::Incomparable;
  std::optional<PsiWitness> forward;   // witnesses P above P'
  std::optional<PsiWitness> backward;  // witnesses P' above P
};

AdmissibleGraph admissible_graph(const PreferenceProfile& p,
                                 const PreferenceProfile& p_prime);

/// Witness for P weakly more Pareto-favorable than P', if one exists.
/// Decided by a right-saturating matching on the admissible graph; unmatched
/// left vertices take their lowest-index neighbor.
std::optional<PsiWitness> decide_weak(const PreferenceProfile& p,
                                      const PreferenceProfile& p_prime);

OrderVerdict compare(const PreferenceProfile& p,
                     const PreferenceProfile& p_prime);

/// Witness for the variant requiring at least one strictly improved
/// coordinate along the map.
std::optional<PsiWitness> decide_tilde(const PreferenceProfile& p,
                                       const PreferenceProfile& p_prime);

/// Two-sided existential dominance between the frontiers' rank vectors.
bool decide_hat(const PreferenceProfile& p, const PreferenceProfile& p_prime);

/// Weak set order. With `require_strict`, some witnessing pair must be a
/// strict dominance.
bool decide_wso(const PreferenceProfile& p, const PreferenceProfile& p_prime,
                bool require_strict);

/// True iff `psi` is a total onto map PE(P') -> PE(P) along admissible edges.
bool is_valid_witness(const PreferenceProfile& p,
                      const PreferenceProfile& p_prime, const PsiWitness& psi);

}  // namespace favorable
