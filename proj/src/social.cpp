#include "favorable/social.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace favorable {
namespace {

std::vector<std::size_t> complement_of(const Assignment& a,
                                       std::size_t individual) {
  std::vector<std::size_t> rest;
  rest.reserve(a.widget_of.size() - 1);
  for (std::size_t j = 0; j < a.widget_of.size(); ++j) {
    if (j != individual) rest.push_back(a.widget_of[j]);
  }
  return rest;
}

// Social rank of a's complement for `individual`.
int social_rank_of(const LexProfile& lp,
                   const std::vector<std::vector<std::size_t>>& others,
                   std::size_t individual, const Assignment& a) {
  const auto rest = complement_of(a, individual);
  auto it = std::lower_bound(others.begin(), others.end(), rest);
  return lp.social()[individual][static_cast<std::size_t>(it - others.begin())];
}

}  // namespace

std::vector<std::vector<std::size_t>> others_space(std::size_t n,
                                                   std::size_t m,
                                                   std::size_t individual,
                                                   std::size_t cap) {
  if (individual >= n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "individual " + std::to_string(individual));
  }
  std::set<std::vector<std::size_t>> seen;
  for (const auto& a : enumerate_assignments(n, m, cap)) {
    seen.insert(complement_of(a, individual));
  }
  return {seen.begin(), seen.end()};
}

LexProfile LexProfile::make(AssignmentInstance instance, RankMatrix social,
                            std::size_t cap) {
  const std::size_t n = instance.num_individuals();
  const std::size_t m = instance.num_widgets();
  if (social.size() != n) {
    throw Error(ErrorKind::DimensionMismatch,
                "expected " + std::to_string(n) + " social rows, got " +
                    std::to_string(social.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t size = others_space(n, m, i, cap).size();
    if (social[i].size() != size) {
      throw Error(ErrorKind::DimensionMismatch,
                  "social row " + std::to_string(i) + " has " +
                      std::to_string(social[i].size()) +
                      " entries, others' space has " + std::to_string(size));
    }
    if (!is_competition_row(social[i])) {
      throw Error(ErrorKind::RowNotCompetitionRank,
                  "social row " + std::to_string(i) +
                      " is not a competition ranking");
    }
  }
  return LexProfile(std::move(instance), std::move(social), cap);
}

LexProfile LexProfile::individualistic(AssignmentInstance instance,
                                       std::size_t cap) {
  const std::size_t n = instance.num_individuals();
  const std::size_t m = instance.num_widgets();
  RankMatrix social(n);
  for (std::size_t i = 0; i < n; ++i) {
    social[i].assign(others_space(n, m, i, cap).size(), 1);
  }
  return make(std::move(instance), std::move(social), cap);
}

bool LexProfile::social_is_strict() const {
  for (const auto& row : social_) {
    std::vector<int> sorted = row;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      return false;
    }
  }
  return true;
}

PreferenceProfile compose_lex_profile(const LexProfile& lp) {
  const AssignmentInstance& inst = lp.instance();
  const std::size_t n = inst.num_individuals();
  const std::size_t m = inst.num_widgets();
  const auto space = enumerate_assignments(n, m, lp.cap());
  RankMatrix ranks(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto others = others_space(n, m, i, lp.cap());
    std::vector<std::pair<int, int>> keys;
    keys.reserve(space.size());
    for (const auto& a : space) {
      keys.emplace_back(inst.private_rank(i, a.widget_of[i]),
                        social_rank_of(lp, others, i, a));
    }
    ranks[i] = competition_ranks<std::pair<int, int>>(keys);
  }
  std::vector<std::string> labels;
  labels.reserve(space.size());
  for (const auto& a : space) labels.push_back(assignment_label(a));
  return validate_profile(ranks, {n, space.size()})
      .with_labels(std::move(labels));
}

PreferenceProfile individualize(const LexProfile& lp) {
  return compose_lex_profile(
      LexProfile::individualistic(lp.instance(), lp.cap()));
}

bool check_carryover(const LexProfile& lp) {
  return pareto_frontier(compose_lex_profile(lp)) ==
         pareto_frontier(individualize(lp));
}

IndividualismReport individualism_compare(const LexProfile& lp) {
  const AssignmentInstance& inst = lp.instance();
  const std::size_t n = inst.num_individuals();
  const std::size_t m = inst.num_widgets();
  const PreferenceProfile composed = compose_lex_profile(lp);
  const PreferenceProfile ind = individualize(lp);
  const auto space = enumerate_assignments(n, m, lp.cap());
  const ParetoFrontier pe = pareto_frontier(composed);

  IndividualismReport report;
  report.verdict = compare(ind, composed);

  std::vector<std::vector<std::vector<std::size_t>>> others(n);
  for (std::size_t i = 0; i < n; ++i) others[i] = others_space(n, m, i, lp.cap());

  for (std::size_t i = 0; i < n && !report.condition_b; ++i) {
    for (AllocationId x : pe.members) {
      for (AllocationId y : pe.members) {
        const auto& ax = space[x.value];
        const auto& ay = space[y.value];
        if (x == y || ax.widget_of[i] != ay.widget_of[i]) continue;
        if (social_rank_of(lp, others[i], i, ay) <
            social_rank_of(lp, others[i], i, ax)) {
          report.condition_b = true;
        }
      }
    }
  }
  report.condition_c = n >= 3 && pe.size() >= 2 && lp.social_is_strict();

  report.no_social_gap = true;
  for (AllocationId x : pe.members) {
    const auto& ax = space[x.value];
    for (std::size_t i = 0; i < n && report.no_social_gap; ++i) {
      const int own = social_rank_of(lp, others[i], i, ax);
      for (const auto& z : space) {
        if (z.widget_of[i] == ax.widget_of[i] &&
            social_rank_of(lp, others[i], i, z) < own) {
          report.no_social_gap = false;
          break;
        }
      }
    }
  }

  const Relation r = report.verdict.relation;
  if (pe != pareto_frontier(ind)) {
    report.violations.emplace_back("carryover: frontiers differ");
  }
  if (r != Relation::StrictlyAbove && r != Relation::Equivalent) {
    report.violations.emplace_back(
        "individualism: individualized profile is " + std::string(to_string(r)));
  }
  if ((r == Relation::Equivalent) != report.no_social_gap) {
    report.violations.emplace_back(
        "equality boundary: verdict disagrees with the same-widget count");
  }
  if (report.condition_b && r != Relation::StrictlyAbove) {
    report.violations.emplace_back("condition (b) holds but not StrictlyAbove");
  }
  if (report.condition_c && r != Relation::StrictlyAbove) {
    report.violations.emplace_back("condition (c) holds but not StrictlyAbove");
  }
  return report;
}

}  // namespace favorable
