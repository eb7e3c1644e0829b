#include "favorable/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "favorable/extremal.hpp"

namespace favorable::oracle {

std::vector<std::vector<int>> weak_order_rows(std::size_t m) {
  // An ordered set partition into k blocks is a surjection onto 0..k-1; the
  // block index is the preference level.
  std::vector<std::vector<int>> rows;
  std::vector<int> block(m, 0);
  for (std::size_t k = 1; k <= m; ++k) {
    std::fill(block.begin(), block.end(), 0);
    while (true) {
      std::vector<bool> hit(k, false);
      for (int b : block) hit[static_cast<std::size_t>(b)] = true;
      if (std::all_of(hit.begin(), hit.end(), [](bool h) { return h; })) {
        rows.push_back(competition_ranks<int>(block));
      }
      std::size_t pos = m;
      while (pos > 0 && block[pos - 1] == static_cast<int>(k) - 1) {
        block[--pos] = 0;
      }
      if (pos == 0) break;
      ++block[pos - 1];
    }
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

std::vector<std::vector<int>> strict_order_rows(std::size_t m) {
  std::vector<int> row(m);
  std::iota(row.begin(), row.end(), 1);
  std::vector<std::vector<int>> rows;
  do {
    rows.push_back(row);
  } while (std::next_permutation(row.begin(), row.end()));
  return rows;
}

ProfileStream::ProfileStream(std::size_t n, std::size_t m, bool strict_only)
    : n_(n), m_(m) {
  if (n == 0 || m == 0) {
    throw Error(ErrorKind::DimensionMismatch, "census shape must be positive");
  }
  if (m > 8) {
    throw Error(ErrorKind::SpaceTooLarge,
                std::to_string(m) + " allocations is beyond enumeration");
  }
  rows_ = strict_only ? strict_order_rows(m) : weak_order_rows(m);
  total_ = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total_ > kMaxProfiles / rows_.size()) {
      throw Error(ErrorKind::SpaceTooLarge,
                  "more than " + std::to_string(kMaxProfiles) + " profiles");
    }
    total_ *= rows_.size();
  }
  odometer_.assign(n, 0);
}

std::optional<PreferenceProfile> ProfileStream::next() {
  if (emitted_ == total_) return std::nullopt;
  RankMatrix ranks(n_);
  for (std::size_t i = 0; i < n_; ++i) ranks[i] = rows_[odometer_[i]];
  ++emitted_;
  for (std::size_t i = n_; i-- > 0;) {
    if (++odometer_[i] < rows_.size()) break;
    odometer_[i] = 0;
  }
  return validate_profile(ranks, {n_, m_});
}

std::vector<PreferenceProfile> enumerate_profiles(std::size_t n, std::size_t m,
                                                  bool strict_only) {
  ProfileStream stream(n, m, strict_only);
  std::vector<PreferenceProfile> out;
  out.reserve(stream.total());
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

namespace {

// Brute-force frontier, kept apart from the library's frontier routine.
std::vector<std::size_t> efficient(const RankMatrix& r) {
  const std::size_t n = r.size();
  const std::size_t m = r.front().size();
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < m; ++x) {
    bool dominated = false;
    for (std::size_t z = 0; z < m && !dominated; ++z) {
      if (z == x) continue;
      bool all_leq = true;
      bool some_lt = false;
      for (std::size_t i = 0; i < n; ++i) {
        all_leq = all_leq && r[i][z] <= r[i][x];
        some_lt = some_lt || r[i][z] < r[i][x];
      }
      dominated = all_leq && some_lt;
    }
    if (!dominated) out.push_back(x);
  }
  return out;
}

}  // namespace

std::optional<PsiWitness> oracle_decide_weak(const PreferenceProfile& p,
                                             const PreferenceProfile& p_prime) {
  require_same_shape(p, p_prime);
  const RankMatrix above = p.ranks();
  const RankMatrix below = p_prime.ranks();
  const auto right = efficient(above);
  const auto left = efficient(below);
  if (left.size() > kMaxFrontierForSearch ||
      right.size() > kMaxFrontierForSearch) {
    throw Error(ErrorKind::SpaceTooLarge,
                "frontier sizes " + std::to_string(left.size()) + " and " +
                    std::to_string(right.size()) + " exceed the search limit");
  }
  const std::size_t n = p.num_individuals();
  auto admissible = [&](std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < n; ++i) {
      if (above[i][y] > below[i][x]) return false;
    }
    return true;
  };

  std::vector<std::size_t> choice(left.size(), 0);
  while (true) {
    bool ok = true;
    std::vector<bool> hit(right.size(), false);
    for (std::size_t l = 0; l < left.size() && ok; ++l) {
      ok = admissible(left[l], right[choice[l]]);
      hit[choice[l]] = true;
    }
    if (ok && std::all_of(hit.begin(), hit.end(), [](bool h) { return h; })) {
      PsiWitness psi;
      for (std::size_t l = 0; l < left.size(); ++l) {
        psi.mapping.emplace_back(AllocationId{left[l]},
                                 AllocationId{right[choice[l]]});
      }
      return psi;
    }
    std::size_t pos = left.size();
    while (pos > 0 && choice[pos - 1] + 1 == right.size()) choice[--pos] = 0;
    if (pos == 0) return std::nullopt;
    ++choice[pos - 1];
  }
}

DominanceMatrix::DominanceMatrix(const std::vector<PreferenceProfile>& profiles,
                                 unsigned workers)
    : size_(profiles.size()), bits_(size_ * size_, 0) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(size_, 1)));
  // Each worker owns a contiguous block of rows.
  std::vector<std::thread> pool;
  const std::size_t chunk = (size_ + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(size_, begin + chunk);
    pool.emplace_back([this, &profiles, begin, end] {
      for (std::size_t a = begin; a < end; ++a) {
        for (std::size_t b = 0; b < size_; ++b) {
          bits_[a * size_ + b] =
              decide_weak(profiles[a], profiles[b]).has_value() ? 1 : 0;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
}

CensusReport extremal_census(std::size_t n, std::size_t m, bool strict_only) {
  const auto profiles = enumerate_profiles(n, m, strict_only);
  const std::size_t count = profiles.size();
  if (count > kMaxComparisons / count) {
    throw Error(ErrorKind::SpaceTooLarge,
                std::to_string(count) + " profiles need too many comparisons");
  }
  CensusReport report;
  report.num_individuals = n;
  report.num_allocations = m;
  report.strict_only = strict_only;
  report.total_profiles = count;

  const DominanceMatrix geq(profiles);
  auto flag = [&](std::string claim, std::size_t a, std::size_t b) {
    report.violations.push_back({std::move(claim), a, b});
  };

  for (std::size_t a = 0; a < count; ++a) {
    bool maximal = true;
    bool upper = true;
    bool minimal = true;
    for (std::size_t b = 0; b < count; ++b) {
      if (geq.at(b, a) && !geq.at(a, b)) maximal = false;
      if (!geq.at(a, b)) upper = false;
      if (geq.at(a, b) && !geq.at(b, a)) minimal = false;
    }
    if (maximal) report.maximal_ids.push_back(a);
    if (upper) report.upper_bound_ids.push_back(a);
    if (minimal) report.minimal_ids.push_back(a);

    const ExtremalClassification cls = classify_extremal(profiles[a]);
    if (cls.is_max_condition != (maximal && upper)) {
      flag("maximal-condition", a, a);
    }
    if (cls.is_min_condition != minimal) flag("minimal-condition", a, a);
  }

  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      const bool forward = geq.at(a, b);
      const auto pe_a = efficient(profiles[a].ranks()).size();
      const auto pe_b = efficient(profiles[b].ranks()).size();
      if (pe_a <= kMaxFrontierForSearch && pe_b <= kMaxFrontierForSearch &&
          oracle_decide_weak(profiles[a], profiles[b]).has_value() != forward) {
        flag("matching-vs-enumeration", a, b);
      }
      if (decide_tilde(profiles[a], profiles[b]) &&
          !(forward && !geq.at(b, a))) {
        flag("tilde-implies-strict", a, b);
      }
      if (forward && !decide_hat(profiles[a], profiles[b])) {
        flag("weak-implies-hat", a, b);
      }
      if (forward && pe_b < pe_a) flag("onto-necessity", a, b);
    }
  }

  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      if (!geq.at(a, b)) continue;
      for (std::size_t c = 0; c < count; ++c) {
        if (geq.at(b, c) && !geq.at(a, c)) flag("transitivity", a, c);
      }
    }
  }
  return report;
}

}  // namespace favorable::oracle
