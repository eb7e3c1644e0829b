#include "favorable/assignment.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace favorable {

AssignmentInstance AssignmentInstance::from_ranks(
    const RankMatrix& private_ranks) {
  if (private_ranks.empty() || private_ranks.front().empty()) {
    throw Error(ErrorKind::DimensionMismatch,
                "instance needs at least one individual and one widget");
  }
  const std::size_t m = private_ranks.front().size();
  if (private_ranks.size() > m) {
    throw Error(ErrorKind::DimensionMismatch,
                "more individuals than widgets (" +
                    std::to_string(private_ranks.size()) + " > " +
                    std::to_string(m) + ")");
  }
  for (std::size_t i = 0; i < private_ranks.size(); ++i) {
    std::vector<int> sorted = private_ranks[i];
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expected(m);
    std::iota(expected.begin(), expected.end(), 1);
    if (private_ranks[i].size() != m) {
      throw Error(ErrorKind::DimensionMismatch,
                  "private row " + std::to_string(i) + " has wrong length");
    }
    if (sorted != expected) {
      throw Error(ErrorKind::RowNotCompetitionRank,
                  "private row " + std::to_string(i) +
                      " is not a strict ranking of the widgets");
    }
  }
  return AssignmentInstance(private_ranks, m);
}

int AssignmentInstance::private_rank(std::size_t individual,
                                     std::size_t widget) const {
  if (individual >= ranks_.size() || widget >= m_) {
    throw Error(ErrorKind::IndexOutOfRange,
                "private_rank(" + std::to_string(individual) + ", " +
                    std::to_string(widget) + ")");
  }
  return ranks_[individual][widget];
}

std::size_t AssignmentInstance::widget_at_rank(std::size_t individual,
                                               int rank) const {
  const auto& row = ranks_.at(individual);
  auto it = std::find(row.begin(), row.end(), rank);
  if (it == row.end()) {
    throw Error(ErrorKind::IndexOutOfRange, "rank " + std::to_string(rank));
  }
  return static_cast<std::size_t>(it - row.begin());
}

std::size_t assignment_space_size(std::size_t n, std::size_t m) {
  if (n > m) return 0;
  std::size_t size = 1;
  for (std::size_t k = m - n + 1; k <= m; ++k) {
    if (size > std::numeric_limits<std::size_t>::max() / k) {
      return std::numeric_limits<std::size_t>::max();
    }
    size *= k;
  }
  return size;
}

std::vector<Assignment> enumerate_assignments(std::size_t n, std::size_t m,
                                              std::size_t cap) {
  const std::size_t size = assignment_space_size(n, m);
  if (size > cap) {
    throw Error(ErrorKind::SpaceTooLarge,
                std::to_string(size) + " assignments exceed the cap of " +
                    std::to_string(cap));
  }
  std::vector<Assignment> out;
  out.reserve(size);
  Assignment current{std::vector<std::size_t>(n)};
  std::vector<bool> used(m, false);
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.push_back(current);
      return;
    }
    for (std::size_t w = 0; w < m; ++w) {
      if (used[w]) continue;
      used[w] = true;
      current.widget_of[i] = w;
      self(self, i + 1);
      used[w] = false;
    }
  };
  extend(extend, 0);
  return out;
}

AllocationId assignment_index(const std::vector<Assignment>& space,
                              const Assignment& a) {
  auto it = std::lower_bound(space.begin(), space.end(), a);
  if (it == space.end() || *it != a) {
    throw Error(ErrorKind::IndexOutOfRange, "assignment " +
                                                assignment_label(a) +
                                                " is not in the space");
  }
  return {static_cast<std::size_t>(it - space.begin())};
}

std::string assignment_label(const Assignment& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.widget_of.size(); ++i) {
    if (i) s += ",";
    s += "w" + std::to_string(a.widget_of[i]);
  }
  return s + ")";
}

PreferenceProfile lift_to_profile(const AssignmentInstance& inst,
                                  std::size_t cap) {
  const auto space =
      enumerate_assignments(inst.num_individuals(), inst.num_widgets(), cap);
  RankMatrix ranks(inst.num_individuals());
  for (std::size_t i = 0; i < inst.num_individuals(); ++i) {
    std::vector<int> keys;
    keys.reserve(space.size());
    for (const auto& a : space) {
      keys.push_back(inst.private_rank(i, a.widget_of[i]));
    }
    ranks[i] = competition_ranks<int>(keys);
  }
  std::vector<std::string> labels;
  labels.reserve(space.size());
  for (const auto& a : space) labels.push_back(assignment_label(a));
  return validate_profile(ranks, {inst.num_individuals(), space.size()})
      .with_labels(std::move(labels));
}

namespace {

void require_valid(const AssignmentInstance& inst, const Assignment& a) {
  if (a.widget_of.size() != inst.num_individuals()) {
    throw Error(ErrorKind::DimensionMismatch,
                "assignment covers " + std::to_string(a.widget_of.size()) +
                    " individuals, instance has " +
                    std::to_string(inst.num_individuals()));
  }
  std::vector<bool> seen(inst.num_widgets(), false);
  for (std::size_t w : a.widget_of) {
    if (w >= inst.num_widgets()) {
      throw Error(ErrorKind::IndexOutOfRange, "widget " + std::to_string(w));
    }
    if (seen[w]) {
      throw Error(ErrorKind::InvalidArgument,
                  "widget " + std::to_string(w) + " assigned twice");
    }
    seen[w] = true;
  }
}

// i envies j when i strictly prefers j's widget to her own.
bool envies(const AssignmentInstance& inst, const Assignment& a,
            std::size_t i, std::size_t j) {
  return inst.private_rank(i, a.widget_of[j]) <
         inst.private_rank(i, a.widget_of[i]);
}

}  // namespace

bool check_envy_cycle_free(const AssignmentInstance& inst,
                           const Assignment& a) {
  require_valid(inst, a);
  const std::size_t n = inst.num_individuals();
  enum class Mark { Fresh, Open, Done };
  std::vector<Mark> mark(n, Mark::Fresh);
  auto has_cycle = [&](auto&& self, std::size_t i) -> bool {
    mark[i] = Mark::Open;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || !envies(inst, a, i, j)) continue;
      if (mark[j] == Mark::Open) return true;
      if (mark[j] == Mark::Fresh && self(self, j)) return true;
    }
    mark[i] = Mark::Done;
    return false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (mark[i] == Mark::Fresh && has_cycle(has_cycle, i)) return false;
  }
  return true;
}

bool check_no_better_available(const AssignmentInstance& inst,
                               const Assignment& a) {
  require_valid(inst, a);
  std::vector<bool> held(inst.num_widgets(), false);
  for (std::size_t w : a.widget_of) held[w] = true;
  for (std::size_t i = 0; i < inst.num_individuals(); ++i) {
    const int own = inst.private_rank(i, a.widget_of[i]);
    for (int k = 1; k < own; ++k) {
      if (!held[inst.widget_at_rank(i, k)]) return false;
    }
  }
  return true;
}

std::vector<int> private_rank_vector(const AssignmentInstance& inst,
                                     const Assignment& a) {
  require_valid(inst, a);
  std::vector<int> out(inst.num_individuals());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = inst.private_rank(i, a.widget_of[i]);
  }
  return out;
}

bool diagonal_bound_check(const AssignmentInstance& inst, const Assignment& a) {
  const auto ranks = private_rank_vector(inst, a);
  const int n = static_cast<int>(ranks.size());
  for (int k = 1; k <= n; ++k) {
    const auto within = std::count_if(ranks.begin(), ranks.end(),
                                      [k](int r) { return r <= k; });
    if (within < k) return false;
  }
  return true;
}

ExtremalClassification classify_private_extremal(
    const AssignmentInstance& inst) {
  const std::size_t n = inst.num_individuals();
  ExtremalClassification c;

  Assignment favorites{std::vector<std::size_t>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    favorites.widget_of[i] = inst.widget_at_rank(i, 1);
  }
  std::vector<std::size_t> sorted = favorites.widget_of;
  std::sort(sorted.begin(), sorted.end());
  c.is_max_condition =
      std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (c.is_max_condition) {
    // Index in lexicographic order, computed without materializing the space.
    std::size_t index = 0;
    std::vector<bool> used(inst.num_widgets(), false);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t smaller_free = 0;
      for (std::size_t w = 0; w < favorites.widget_of[i]; ++w) {
        if (!used[w]) ++smaller_free;
      }
      index += smaller_free * assignment_space_size(
                                  n - i - 1, inst.num_widgets() - i - 1);
      used[favorites.widget_of[i]] = true;
    }
    c.witness_top = AllocationId{index};
  }

  // Everybody's top N-1 widgets agree in order. With M = N this is the
  // common top-N order; with M > N the N-th choice is never contested on
  // the frontier, so it may differ.
  c.is_min_condition = true;
  for (int k = 1; k < static_cast<int>(n) && c.is_min_condition; ++k) {
    const std::size_t w = inst.widget_at_rank(0, k);
    for (std::size_t i = 1; i < n; ++i) {
      if (inst.widget_at_rank(i, k) != w) {
        c.is_min_condition = false;
        break;
      }
    }
  }
  return c;
}

Assignment greedy_psi(const AssignmentInstance& minimal_inst,
                      const AssignmentInstance& target_inst,
                      const Assignment& x) {
  const std::size_t n = minimal_inst.num_individuals();
  if (target_inst.num_individuals() != n ||
      target_inst.num_widgets() != minimal_inst.num_widgets()) {
    throw Error(ErrorKind::DimensionMismatch,
                "instances differ in shape");
  }
  if (!classify_private_extremal(minimal_inst).is_min_condition) {
    throw Error(ErrorKind::PreconditionNotMet,
                "source instance does not share a common top N-1 order");
  }
  if (!check_envy_cycle_free(minimal_inst, x) ||
      !check_no_better_available(minimal_inst, x)) {
    throw Error(ErrorKind::PreconditionNotMet,
                "x = " + assignment_label(x) +
                    " is not efficient for the source instance");
  }
  // Under a common top N-1 order an efficient x hands out ranks 1..N once each.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return minimal_inst.private_rank(a, x.widget_of[a]) <
           minimal_inst.private_rank(b, x.widget_of[b]);
  });

  Assignment y{std::vector<std::size_t>(n)};
  std::vector<bool> taken(target_inst.num_widgets(), false);
  for (std::size_t i : order) {
    for (int k = 1; k <= static_cast<int>(target_inst.num_widgets()); ++k) {
      const std::size_t w = target_inst.widget_at_rank(i, k);
      if (!taken[w]) {
        y.widget_of[i] = w;
        taken[w] = true;
        break;
      }
    }
  }
  return y;
}

}  // namespace favorable
