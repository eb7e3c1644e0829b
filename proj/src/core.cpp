#include "favorable/core.hpp"

#include <algorithm>
#include <map>

namespace favorable {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RowNotCompetitionRank: return "RowNotCompetitionRank";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::PreconditionNotMet: return "PreconditionNotMet";
    case ErrorKind::StepBudgetExhausted: return "StepBudgetExhausted";
    case ErrorKind::SpaceTooLarge: return "SpaceTooLarge";
    case ErrorKind::DegenerateRange: return "DegenerateRange";
    case ErrorKind::UnsupportedUtility: return "UnsupportedUtility";
    case ErrorKind::EmptySample: return "EmptySample";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool RankVector::weakly_below(const RankVector& other) const {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > other.values[i]) return false;
  }
  return true;
}

bool RankVector::strictly_below(const RankVector& other) const {
  bool strict = false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > other.values[i]) return false;
    if (values[i] < other.values[i]) strict = true;
  }
  return strict;
}

bool is_competition_row(std::span<const int> row) {
  if (row.empty()) return false;
  std::map<int, int> multiplicity;
  for (int v : row) ++multiplicity[v];
  int expected = 1;
  for (const auto& [value, count] : multiplicity) {
    if (value != expected) return false;
    expected += count;
  }
  return true;
}

PreferenceProfile validate_profile(const RankMatrix& ranks,
                                   const ProfileLimits& limits) {
  if (ranks.empty() || ranks.front().empty()) {
    throw Error(ErrorKind::DimensionMismatch,
                "profile needs at least one individual and one allocation");
  }
  const std::size_t n = ranks.size();
  const std::size_t m = ranks.front().size();
  if (n > limits.max_individuals || m > limits.max_allocations) {
    throw Error(ErrorKind::SpaceTooLarge,
                "profile is " + std::to_string(n) + "x" + std::to_string(m) +
                    ", limit is " + std::to_string(limits.max_individuals) +
                    "x" + std::to_string(limits.max_allocations));
  }
  std::vector<int> data;
  data.reserve(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    if (ranks[i].size() != m) {
      throw Error(ErrorKind::DimensionMismatch,
                  "row " + std::to_string(i) + " has " +
                      std::to_string(ranks[i].size()) + " entries, expected " +
                      std::to_string(m));
    }
    if (!is_competition_row(ranks[i])) {
      throw Error(ErrorKind::RowNotCompetitionRank,
                  "row " + std::to_string(i) + " is not a competition ranking");
    }
    data.insert(data.end(), ranks[i].begin(), ranks[i].end());
  }
  return PreferenceProfile(n, m, std::move(data));
}

int PreferenceProfile::rank(std::size_t individual, AllocationId x) const {
  if (individual >= n_ || x.value >= m_) {
    throw Error(ErrorKind::IndexOutOfRange,
                "rank(" + std::to_string(individual) + ", " +
                    std::to_string(x.value) + ") outside " +
                    std::to_string(n_) + "x" + std::to_string(m_));
  }
  return data_[individual * m_ + x.value];
}

std::span<const int> PreferenceProfile::row(std::size_t individual) const {
  if (individual >= n_) {
    throw Error(ErrorKind::IndexOutOfRange,
                "individual " + std::to_string(individual));
  }
  return {data_.data() + individual * m_, m_};
}

RankMatrix PreferenceProfile::ranks() const {
  RankMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    auto r = row(i);
    out[i].assign(r.begin(), r.end());
  }
  return out;
}

bool PreferenceProfile::is_strict() const {
  for (std::size_t i = 0; i < n_; ++i) {
    std::vector<int> r(row(i).begin(), row(i).end());
    std::sort(r.begin(), r.end());
    if (std::adjacent_find(r.begin(), r.end()) != r.end()) return false;
  }
  return true;
}

std::string PreferenceProfile::label(AllocationId x) const {
  if (labels_ && x.value < labels_->size()) return (*labels_)[x.value];
  return std::to_string(x.value);
}

PreferenceProfile PreferenceProfile::with_labels(
    std::vector<std::string> labels) const {
  if (labels.size() != m_) {
    throw Error(ErrorKind::DimensionMismatch,
                "expected " + std::to_string(m_) + " labels, got " +
                    std::to_string(labels.size()));
  }
  PreferenceProfile out = *this;
  out.labels_ = std::move(labels);
  return out;
}

bool ParetoFrontier::contains(AllocationId x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

RankVector rank_vector(const PreferenceProfile& p, AllocationId x) {
  if (x.value >= p.num_allocations()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "allocation " + std::to_string(x.value));
  }
  RankVector v;
  v.values.reserve(p.num_individuals());
  for (std::size_t i = 0; i < p.num_individuals(); ++i) {
    v.values.push_back(p.rank(i, x));
  }
  return v;
}

bool pareto_dominates(const PreferenceProfile& p, AllocationId x,
                      AllocationId y) {
  if (x == y) {
    throw Error(ErrorKind::PreconditionNotMet,
                "dominance of an allocation over itself is undefined");
  }
  return rank_vector(p, x).strictly_below(rank_vector(p, y));
}

ParetoFrontier pareto_frontier(const PreferenceProfile& p) {
  const std::size_t m = p.num_allocations();
  std::vector<RankVector> vectors;
  vectors.reserve(m);
  for (std::size_t x = 0; x < m; ++x) vectors.push_back(rank_vector(p, {x}));

  ParetoFrontier frontier;
  for (std::size_t x = 0; x < m; ++x) {
    bool dominated = false;
    for (std::size_t z = 0; z < m && !dominated; ++z) {
      dominated = z != x && vectors[z].strictly_below(vectors[x]);
    }
    if (!dominated) frontier.members.push_back({x});
  }
  return frontier;
}

void require_same_shape(const PreferenceProfile& a,
                        const PreferenceProfile& b) {
  if (a.num_individuals() != b.num_individuals() ||
      a.num_allocations() != b.num_allocations()) {
    throw Error(ErrorKind::DimensionMismatch,
                "profiles are " + std::to_string(a.num_individuals()) + "x" +
                    std::to_string(a.num_allocations()) + " and " +
                    std::to_string(b.num_individuals()) + "x" +
                    std::to_string(b.num_allocations()));
  }
}

}  // namespace favorable
