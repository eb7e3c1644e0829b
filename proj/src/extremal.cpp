#include "favorable/extremal.hpp"

#include <algorithm>

namespace favorable {

std::string_view to_string(DescentRule rule) {
  switch (rule) {
    case DescentRule::ParetoGap: return "ParetoGap";
    case DescentRule::PairIndifference: return "PairIndifference";
    case DescentRule::LoneIndifference: return "LoneIndifference";
  }
  return "Unknown";
}

ExtremalClassification classify_extremal(const PreferenceProfile& p) {
  ExtremalClassification c;
  std::size_t top_count = 0;
  for (std::size_t x = 0; x < p.num_allocations(); ++x) {
    const auto v = rank_vector(p, {x}).values;
    if (std::all_of(v.begin(), v.end(), [](int r) { return r == 1; })) {
      if (top_count++ == 0) c.witness_top = AllocationId{x};
    }
  }
  c.is_max_condition = top_count == 1;
  if (!c.is_max_condition) c.witness_top.reset();
  c.is_min_condition =
      p.is_strict() && pareto_frontier(p).size() == p.num_allocations();
  return c;
}

namespace {

PreferenceProfile rebuild(const PreferenceProfile& like,
                          const RankMatrix& ranks) {
  PreferenceProfile out = validate_profile(
      ranks, {like.num_individuals(), like.num_allocations()});
  if (like.labels()) out = out.with_labels(*like.labels());
  return out;
}

// Re-rank individual i after moving x half a level up (-1) or down (+1)
// within its indifference class. Doubling keeps the other classes apart.
PreferenceProfile shift_in_class(const PreferenceProfile& p,
                                 std::size_t individual, AllocationId x,
                                 int direction) {
  RankMatrix ranks = p.ranks();
  std::vector<int> keys(p.num_allocations());
  for (std::size_t z = 0; z < keys.size(); ++z) {
    keys[z] = 2 * ranks[individual][z];
  }
  keys[x.value] += direction;
  ranks[individual] = competition_ranks<int>(keys);
  return rebuild(p, ranks);
}

bool indifferent(const PreferenceProfile& p, std::size_t i, AllocationId x,
                 AllocationId y) {
  return p.rank(i, x) == p.rank(i, y);
}

DescentStep make_step(DescentRule rule, const PreferenceProfile& before,
                      PreferenceProfile after) {
  OrderVerdict verdict = compare(before, after);
  const bool flagged = verdict.relation != Relation::StrictlyAbove;
  return DescentStep{rule, before, std::move(after), std::move(verdict),
                     flagged, false, std::nullopt, std::nullopt};
}

struct PairSite {
  AllocationId x;
  std::size_t promoted;  // individual i
  std::size_t demoted;   // individual j
};

std::optional<PairSite> find_pair_site(const PreferenceProfile& p) {
  const std::size_t n = p.num_individuals();
  for (AllocationId x : pareto_frontier(p).members) {
    for (std::size_t y = 0; y < p.num_allocations(); ++y) {
      if (y == x.value) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (!indifferent(p, i, x, {y})) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
          if (indifferent(p, j, x, {y})) return PairSite{x, i, j};
        }
      }
    }
  }
  return std::nullopt;
}

struct LoneSite {
  AllocationId x;
  std::size_t individual;
};

std::optional<LoneSite> find_lone_site(const PreferenceProfile& p) {
  const std::size_t n = p.num_individuals();
  for (AllocationId x : pareto_frontier(p).members) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t y = 0; y < p.num_allocations(); ++y) {
        if (y == x.value || !indifferent(p, i, x, {y})) continue;
        bool shared = false;
        for (std::size_t j = 0; j < n && !shared; ++j) {
          shared = j != i && indifferent(p, j, x, {y});
        }
        if (!shared) return LoneSite{x, i};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

PreferenceProfile promote_in_class(const PreferenceProfile& p,
                                   std::size_t individual, AllocationId x) {
  return shift_in_class(p, individual, x, -1);
}

PreferenceProfile demote_in_class(const PreferenceProfile& p,
                                  std::size_t individual, AllocationId x) {
  return shift_in_class(p, individual, x, +1);
}

namespace {

// Individual `chooser` trades places: `low` takes the position of `high`,
// and `high` takes the position of `low`. With `with_duplicates`, every
// allocation sharing high's full rank vector moves along with it.
PreferenceProfile trade_places(const PreferenceProfile& p, std::size_t chooser,
                               AllocationId low, AllocationId high,
                               bool with_duplicates) {
  RankMatrix ranks = p.ranks();
  const RankVector top = rank_vector(p, high);
  std::vector<int> keys = ranks[chooser];
  for (std::size_t z = 0; z < keys.size(); ++z) {
    if (z == high.value || (with_duplicates && rank_vector(p, {z}) == top)) {
      keys[z] = ranks[chooser][low.value];
    }
  }
  keys[low.value] = ranks[chooser][high.value];
  ranks[chooser] = competition_ranks<int>(keys);
  return rebuild(p, ranks);
}

bool frontier_grew(const ParetoFrontier& before, const ParetoFrontier& after,
                   AllocationId lifted, AllocationId displaced) {
  if (!after.contains(lifted)) return false;
  for (AllocationId x : before.members) {
    if (x != displaced && !after.contains(x)) return false;
  }
  return true;
}

}  // namespace

DescentStep perturb_pareto_gap(const PreferenceProfile& p) {
  const ParetoFrontier pe = pareto_frontier(p);
  if (pe.size() == p.num_allocations()) {
    throw Error(ErrorKind::PreconditionNotMet,
                "every allocation is already Pareto efficient");
  }
  std::optional<DescentStep> fallback;
  for (std::size_t low = 0; low < p.num_allocations(); ++low) {
    if (pe.contains({low})) continue;
    const RankVector low_ranks = rank_vector(p, {low});
    std::vector<AllocationId> dominators;
    for (AllocationId y : pe.members) {
      if (rank_vector(p, y).strictly_below(low_ranks)) dominators.push_back(y);
    }
    for (std::size_t chooser = 0; chooser < p.num_individuals(); ++chooser) {
      int best = p.rank(chooser, {low});
      for (AllocationId y : dominators) best = std::min(best, p.rank(chooser, y));
      if (best == p.rank(chooser, {low})) continue;  // no strict dominator
      for (AllocationId high : dominators) {
        if (p.rank(chooser, high) != best) continue;
        for (bool with_duplicates : {false, true}) {
          DescentStep step = make_step(
              DescentRule::ParetoGap, p,
              trade_places(p, chooser, {low}, high, with_duplicates));
          step.lifted = AllocationId{low};
          step.displaced = high;
          if (!step.flagged &&
              frontier_grew(pe, pareto_frontier(step.after), {low}, high)) {
            return step;
          }
          // Otherwise prefer a strict descent, then the first choice.
          if (!fallback || (fallback->flagged && !step.flagged)) {
            fallback = std::move(step);
          }
        }
      }
    }
  }
  return *fallback;
}

DescentStep perturb_pair_indifference(const PreferenceProfile& p) {
  const auto site = find_pair_site(p);
  if (!site) {
    throw Error(ErrorKind::PreconditionNotMet,
                "no efficient allocation has an indifference shared by two "
                "individuals");
  }
  PreferenceProfile after = promote_in_class(p, site->promoted, site->x);
  after = demote_in_class(after, site->demoted, site->x);
  return make_step(DescentRule::PairIndifference, p, std::move(after));
}

DescentStep perturb_lone_indifference(const PreferenceProfile& p) {
  const auto site = find_lone_site(p);
  if (!site) {
    throw Error(ErrorKind::PreconditionNotMet,
                "no efficient allocation has an indifference held by a single "
                "individual");
  }
  DescentStep promoted =
      make_step(DescentRule::LoneIndifference, p,
                promote_in_class(p, site->individual, site->x));
  if (!promoted.flagged) return promoted;

  DescentStep demoted =
      make_step(DescentRule::LoneIndifference, p,
                demote_in_class(p, site->individual, site->x));
  demoted.used_demotion = true;
  return demoted.flagged ? promoted : demoted;
}

std::vector<DescentStep> descend_to_minimal(const PreferenceProfile& p,
                                            std::size_t max_steps) {
  if (max_steps == 0) {
    throw Error(ErrorKind::InvalidArgument, "max_steps must be positive");
  }
  std::vector<DescentStep> chain;
  PreferenceProfile current = p;
  while (!classify_extremal(current).is_min_condition) {
    if (chain.size() == max_steps) throw StepBudgetExhausted(std::move(chain));
    // Rules in priority order; a rule whose construction does not move
    // strictly down is passed over in favor of the next applicable one.
    std::vector<DescentStep> candidates;
    if (pareto_frontier(current).size() != current.num_allocations()) {
      candidates.push_back(perturb_pareto_gap(current));
    }
    if (candidates.empty() || candidates.back().flagged) {
      if (find_pair_site(current)) {
        candidates.push_back(perturb_pair_indifference(current));
      }
    }
    if (candidates.empty() || candidates.back().flagged) {
      if (find_lone_site(current)) {
        candidates.push_back(perturb_lone_indifference(current));
      }
    }
    if (candidates.empty()) {
      throw Error(ErrorKind::PreconditionNotMet,
                  "no perturbation applies to a non-minimal profile");
    }
    const auto progress = std::find_if(
        candidates.begin(), candidates.end(),
        [](const DescentStep& s) { return !s.flagged; });
    chain.push_back(progress != candidates.end() ? *progress
                                                 : candidates.front());
    current = chain.back().after;
  }
  return chain;
}

}  // namespace favorable
