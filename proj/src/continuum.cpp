#include "favorable/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "favorable/error.hpp"

namespace favorable::continuum {
namespace {

constexpr double kTolerance = 1e-12;

bool valid(const Utility& u) {
  return std::isfinite(u.weight_good1) && std::isfinite(u.weight_good2) &&
         u.weight_good1 >= 0.0 && u.weight_good2 >= 0.0 &&
         (u.weight_good1 > 0.0 || u.weight_good2 > 0.0);
}

void require_supported(const ExchangeExample& ex) {
  for (const Utility& u : ex.utilities) {
    if (!valid(u)) {
      throw Error(ErrorKind::UnsupportedUtility,
                  "weights must be finite, non-negative and not both zero");
    }
  }
}

double utility(const Utility& u, const std::array<double, 2>& bundle) {
  return u.weight_good1 * bundle[0] + u.weight_good2 * bundle[1];
}

// Individual 0 holds `first`; individual 1 holds the rest of the endowment.
Allocation split(double good1, double good2) {
  Allocation a;
  a.bundle[0] = {good1, good2};
  a.bundle[1] = {1.0 - good1, 1.0 - good2};
  return a;
}

std::vector<double> grid(std::size_t resolution) {
  std::vector<double> out;
  if (resolution <= 1) return {0.0};
  for (std::size_t k = 0; k < resolution; ++k) {
    out.push_back(static_cast<double>(k) /
                  static_cast<double>(resolution - 1));
  }
  return out;
}

bool near(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  return std::abs(a[0] - b[0]) <= kTolerance &&
         std::abs(a[1] - b[1]) <= kTolerance;
}

}  // namespace

Utility Utility::own_good(std::size_t individual) {
  if (individual > 1) {
    throw Error(ErrorKind::IndexOutOfRange,
                "individual " + std::to_string(individual));
  }
  return individual == 0 ? Utility{1.0, 0.0} : Utility{0.0, 1.0};
}

Utility Utility::sum() { return {1.0, 1.0}; }

Utility Utility::linear(double weight_good1, double weight_good2) {
  Utility u{weight_good1, weight_good2};
  if (!valid(u)) {
    throw Error(ErrorKind::UnsupportedUtility,
                "weights must be finite, non-negative and not both zero");
  }
  return u;
}

ExchangeExample ExchangeExample::orthogonal() {
  return {{Utility::own_good(0), Utility::own_good(1)}};
}

ExchangeExample ExchangeExample::aligned() {
  return {{Utility::sum(), Utility::sum()}};
}

double normalized_rank_eval(const ExchangeExample& ex, std::size_t individual,
                            const Allocation& allocation) {
  if (individual > 1) {
    throw Error(ErrorKind::IndexOutOfRange,
                "individual " + std::to_string(individual));
  }
  for (std::size_t g = 0; g < 2; ++g) {
    const double a = allocation.bundle[0][g];
    const double b = allocation.bundle[1][g];
    if (a < 0.0 || b < 0.0 || a + b > 1.0 + kTolerance) {
      throw Error(ErrorKind::InvalidArgument, "allocation is not feasible");
    }
  }
  const Utility& u = ex.utilities[individual];
  // Over the feasible set the minimum is an empty bundle and the maximum the
  // whole endowment.
  const double lowest = 0.0;
  const double highest = u.weight_good1 + u.weight_good2;
  if (!(highest > lowest)) {
    throw Error(ErrorKind::DegenerateRange, "utility is constant");
  }
  return (utility(u, allocation.bundle[individual]) - lowest) /
         (highest - lowest);
}

FrontierSample frontier_sample(const ExchangeExample& ex,
                               std::size_t resolution) {
  require_supported(ex);
  if (resolution == 0) {
    throw Error(ErrorKind::InvalidArgument, "resolution must be positive");
  }
  const Utility& u0 = ex.utilities[0];
  const Utility& u1 = ex.utilities[1];
  const double cross =
      u0.weight_good1 * u1.weight_good2 - u0.weight_good2 * u1.weight_good1;

  std::vector<Allocation> candidates;
  if (cross == 0.0) {
    // Proportional utilities: every full split is efficient. Walk individual
    // 0's normalized utility along good 1 first, then good 2.
    const double total = u0.weight_good1 + u0.weight_good2;
    for (double tau : grid(resolution)) {
      const double target = tau * total;
      if (u0.weight_good1 == 0.0) {
        candidates.push_back(split(0.0, target / u0.weight_good2));
      } else if (target <= u0.weight_good1) {
        candidates.push_back(split(target / u0.weight_good1, 0.0));
      } else {
        candidates.push_back(
            split(1.0, (target - u0.weight_good1) / u0.weight_good2));
      }
    }
  } else {
    // Individual 0 receives first the good in which she has the comparative
    // advantage, then the other one.
    const bool good1_first = cross > 0.0;
    const auto legs = grid(std::max<std::size_t>(resolution, 2));
    for (double f : legs) {
      candidates.push_back(good1_first ? split(f, 0.0) : split(0.0, f));
    }
    for (double f : legs) {
      if (f == 0.0) continue;  // shared corner
      candidates.push_back(good1_first ? split(1.0, f) : split(f, 1.0));
    }
  }

  std::vector<std::array<double, 2>> utils;
  utils.reserve(candidates.size());
  for (const Allocation& a : candidates) {
    utils.push_back({utility(u0, a.bundle[0]), utility(u1, a.bundle[1])});
  }
  FrontierSample sample;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    bool dominated = false;
    for (std::size_t z = 0; z < candidates.size() && !dominated; ++z) {
      dominated = utils[z][0] >= utils[k][0] && utils[z][1] >= utils[k][1] &&
                  (utils[z][0] > utils[k][0] || utils[z][1] > utils[k][1]);
    }
    if (dominated) continue;
    sample.points.push_back(candidates[k]);
    const std::array<double, 2> eval = {
        normalized_rank_eval(ex, 0, candidates[k]),
        normalized_rank_eval(ex, 1, candidates[k])};
    const bool seen =
        std::any_of(sample.rpe.begin(), sample.rpe.end(),
                    [&](const auto& e) { return near(e, eval); });
    if (!seen) sample.rpe.push_back(eval);
  }
  return sample;
}

bool rpe_dominance_check(const FrontierSample& top,
                         const FrontierSample& bottom) {
  if (top.rpe.empty() || bottom.rpe.empty()) {
    throw Error(ErrorKind::EmptySample, "frontier sample has no points");
  }
  return std::all_of(bottom.rpe.begin(), bottom.rpe.end(), [&](const auto& b) {
    return std::any_of(top.rpe.begin(), top.rpe.end(), [&](const auto& t) {
      return b[0] <= t[0] + kTolerance && b[1] <= t[1] + kTolerance;
    });
  });
}

}  // namespace favorable::continuum
