#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace favorable::continuum {

/// Linear utility weight_good1 * x_{i,1} + weight_good2 * x_{i,2}. The two
/// named kinds are the "own good" and "sum of goods" profiles.
struct Utility {
  double weight_good1 = 1.0;
  double weight_good2 = 1.0;

  /// Individual `individual` (0 or 1) values only the good of the same index.
  static Utility own_good(std::size_t individual);
  static Utility sum();
  static Utility linear(double weight_good1, double weight_good2);

  bool operator==(const Utility&) const = default;
};

/// Two individuals, two perfectly divisible goods, one unit of each.
struct ExchangeExample {
  std::array<Utility, 2> utilities;

  static ExchangeExample orthogonal();  // both own-good
  static ExchangeExample aligned();     // both sum
};

/// Bundles of both individuals: bundle[i] = (x_{i,1}, x_{i,2}).
struct Allocation {
  std::array<std::array<double, 2>, 2> bundle{};
};

struct FrontierSample {
  std::vector<Allocation> points;
  /// Normalized evaluation pairs, deduplicated to 1e-12.
  std::vector<std::array<double, 2>> rpe;
};

/// Utility of `individual` at `allocation`, normalized to [0, 1] over the
/// feasible set: 0 for the least and 1 for the most preferred feasible
/// allocation.
double normalized_rank_eval(const ExchangeExample& ex, std::size_t individual,
                            const Allocation& allocation);

/// Frontier points on a uniform grid. When both individuals rank the goods
/// alike the frontier is every full split, sampled at `resolution` points
/// along a path on which the first evaluation runs 0, 1/(r-1), ..., 1.
/// Otherwise each leg of the comparative-advantage path gets `resolution`
/// points and dominated samples are dropped.
FrontierSample frontier_sample(const ExchangeExample& ex,
                               std::size_t resolution);

/// Every evaluation pair of `bottom` is componentwise <= some pair of `top`.
bool rpe_dominance_check(const FrontierSample& top,
                         const FrontierSample& bottom);

}  // namespace favorable::continuum
