#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "favorable/assignment.hpp"
#include "favorable/order.hpp"
#include "reference.hpp"

using namespace favorable;

namespace {

Assignment assign(std::vector<std::size_t> widgets) { return {std::move(widgets)}; }

AssignmentInstance inst(const RankMatrix& r) {
  return AssignmentInstance::from_ranks(r);
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

std::vector<Assignment> space_of(const AssignmentInstance& a) {
  return enumerate_assignments(a.num_individuals(), a.num_widgets());
}

// Frontier assignments of an instance, computed by the test reference.
std::vector<Assignment> reference_frontier(const RankMatrix& r) {
  const auto space = reference::all_assignments(r.size(), r.front().size());
  std::vector<Assignment> out;
  for (auto x : reference::frontier(reference::lift(r))) {
    out.push_back(assign({space[x].begin(), space[x].end()}));
  }
  return out;
}

}  // namespace

TEST(AssignmentInstance, Validation) {
  EXPECT_EQ(kind_of([] { inst({{1, 2}, {1, 1}}); }),
            ErrorKind::RowNotCompetitionRank);
  EXPECT_EQ(kind_of([] { inst({{1, 2}, {1, 2, 3}}); }),
            ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([] { inst({{1}, {1}}); }), ErrorKind::DimensionMismatch);
  const auto a = inst({{2, 1, 3}});
  EXPECT_EQ(a.widget_at_rank(0, 1), 1u);
  EXPECT_EQ(a.private_rank(0, 2), 3);
}

TEST(EnumerateAssignments, CountsAndOrder) {
  EXPECT_EQ(enumerate_assignments(2, 2),
            (std::vector<Assignment>{assign({0, 1}), assign({1, 0})}));
  EXPECT_EQ(enumerate_assignments(2, 3).size(), 6u);
  EXPECT_EQ(enumerate_assignments(3, 4).size(), 24u);
  EXPECT_EQ(assignment_space_size(3, 5), 60u);
  EXPECT_EQ(kind_of([] { enumerate_assignments(8, 8); }), ErrorKind::SpaceTooLarge);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = n; m <= 4; ++m) {
      const auto space = enumerate_assignments(n, m);
      const auto ref = reference::all_assignments(n, m);
      ASSERT_EQ(space.size(), ref.size());
      for (std::size_t k = 0; k < ref.size(); ++k) {
        EXPECT_TRUE(std::equal(ref[k].begin(), ref[k].end(),
                               space[k].widget_of.begin()));
        EXPECT_EQ(assignment_index(space, space[k]).value, k);
      }
    }
  }
}

TEST(LiftToProfile, Fixtures) {
  const auto two = lift_to_profile(inst({{1, 2}, {2, 1}}));
  EXPECT_EQ(two.ranks(), (RankMatrix{{1, 2}, {1, 2}}));
  const auto one = lift_to_profile(inst({{2, 1}}));
  EXPECT_EQ(one.ranks(), (RankMatrix{{2, 1}}));
  const auto six = lift_to_profile(inst({{1, 2, 3}, {3, 1, 2}}));
  ASSERT_EQ(six.num_allocations(), 6u);
  for (std::size_t i = 0; i < 2; ++i) {
    std::vector<int> row(six.row(i).begin(), six.row(i).end());
    std::sort(row.begin(), row.end());
    EXPECT_EQ(row, (std::vector<int>{1, 1, 3, 3, 5, 5}));
  }
}

TEST(LiftToProfile, MatchesReferenceOnAllSmallInstances) {
  for (auto [n, m] : {std::pair{1u, 3u}, {2u, 2u}, {2u, 3u}, {3u, 3u}}) {
    for (const auto& r : reference::all_strict_instances(n, m)) {
      EXPECT_EQ(lift_to_profile(inst(r)).ranks(), reference::lift(r));
    }
  }
}

TEST(CheckEnvyCycleFree, Fixtures) {
  EXPECT_TRUE(check_envy_cycle_free(inst({{1, 2}, {2, 1}}), assign({0, 1})));
  EXPECT_FALSE(check_envy_cycle_free(inst({{2, 1}, {1, 2}}), assign({0, 1})));
}

TEST(CheckNoBetterAvailable, Fixtures) {
  EXPECT_TRUE(check_no_better_available(inst({{1, 2, 3}, {2, 1, 3}}),
                                        assign({0, 1})));
  EXPECT_FALSE(check_no_better_available(inst({{1, 2, 3}, {2, 1, 3}}),
                                         assign({2, 1})));
}

TEST(DiagonalBound, Fixtures) {
  const auto fav = inst({{1, 2, 3}, {3, 1, 2}});
  EXPECT_TRUE(diagonal_bound_check(fav, assign({0, 1})));
  EXPECT_EQ(private_rank_vector(fav, assign({0, 1})), (std::vector<int>{1, 1}));
  const auto common = inst({{1, 2, 3}, {1, 2, 3}});
  for (const auto& a : reference_frontier(common.private_ranks())) {
    auto r = private_rank_vector(common, a);
    std::sort(r.begin(), r.end());
    EXPECT_EQ(r, (std::vector<int>{1, 2}));
  }
  // Both hold their second widget: dominated and over the bound.
  EXPECT_FALSE(diagonal_bound_check(common, assign({1, 2})));
  const auto pe = reference_frontier(common.private_ranks());
  EXPECT_EQ(std::count(pe.begin(), pe.end(), assign({1, 2})), 0);
}

TEST(ClassifyPrivateExtremal, Fixtures) {
  const auto max = classify_private_extremal(inst({{1, 2}, {2, 1}}));
  EXPECT_TRUE(max.is_max_condition);
  EXPECT_FALSE(max.is_min_condition);
  ASSERT_TRUE(max.witness_top.has_value());
  EXPECT_EQ(max.witness_top->value, 0u);
  const auto min = classify_private_extremal(inst({{1, 2}, {1, 2}}));
  EXPECT_TRUE(min.is_min_condition);
  EXPECT_FALSE(min.is_max_condition);
  EXPECT_TRUE(classify_private_extremal(inst({{1, 2, 3}, {2, 1, 3}})).is_max_condition);
  // A shared favorite is enough for two individuals: the second choices are
  // never contested on the frontier.
  const auto shared = classify_private_extremal(inst({{1, 2, 3}, {1, 3, 2}}));
  EXPECT_FALSE(shared.is_max_condition);
  EXPECT_TRUE(shared.is_min_condition);
  EXPECT_FALSE(classify_private_extremal(inst({{1, 2, 3}, {2, 1, 3}})).is_min_condition);
}

TEST(GreedyPsi, Fixtures) {
  const auto minimal = inst({{1, 2}, {1, 2}});
  const auto target = inst({{1, 2}, {2, 1}});
  const auto y = greedy_psi(minimal, target, assign({0, 1}));
  EXPECT_EQ(y, assign({0, 1}));
  EXPECT_EQ(private_rank_vector(target, y), (std::vector<int>{1, 1}));
  EXPECT_EQ(private_rank_vector(minimal, assign({0, 1})), (std::vector<int>{1, 2}));

  const auto y_self = greedy_psi(minimal, minimal, assign({1, 0}));
  auto r = private_rank_vector(minimal, y_self);
  std::sort(r.begin(), r.end());
  EXPECT_EQ(r, (std::vector<int>{1, 2}));

  const auto wide = inst({{1, 2, 3}, {1, 2, 3}});
  EXPECT_EQ(kind_of([&] { greedy_psi(wide, wide, assign({2, 1})); }),
            ErrorKind::PreconditionNotMet);
  EXPECT_EQ(kind_of([&] { greedy_psi(target, target, assign({0, 1})); }),
            ErrorKind::PreconditionNotMet);
}

// ---------------------------------------------------------------- properties

class AssignmentShape
    : public ::testing::TestWithParam<std::pair<std::size_t, std::size_t>> {};

TEST_P(AssignmentShape, FrontierChecksMatchLiftedFrontier) {
  const auto [n, m] = GetParam();
  for (const auto& r : reference::all_strict_instances(n, m)) {
    const auto a = inst(r);
    const auto pe = reference_frontier(r);
    for (const auto& x : space_of(a)) {
      const bool efficient = std::find(pe.begin(), pe.end(), x) != pe.end();
      EXPECT_EQ(check_envy_cycle_free(a, x) && check_no_better_available(a, x),
                efficient);
      if (!efficient) continue;
      EXPECT_TRUE(check_envy_cycle_free(a, x));
      EXPECT_TRUE(check_no_better_available(a, x));
      EXPECT_TRUE(diagonal_bound_check(a, x));
      auto ranks = private_rank_vector(a, x);
      std::sort(ranks.begin(), ranks.end());
      for (std::size_t k = 0; k < n; ++k) {
        EXPECT_LE(ranks[k], static_cast<int>(k) + 1);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Small, AssignmentShape,
                         ::testing::Values(std::pair{1u, 3u}, std::pair{2u, 2u},
                                           std::pair{2u, 3u}, std::pair{2u, 4u},
                                           std::pair{3u, 3u}, std::pair{3u, 4u}));

class ExtremalCensus
    : public ::testing::TestWithParam<std::pair<std::size_t, std::size_t>> {};

TEST_P(ExtremalCensus, ConditionsMatchDefinitions) {
  const auto [n, m] = GetParam();
  const auto all = reference::all_strict_instances(n, m);
  std::vector<PreferenceProfile> lifted;
  for (const auto& r : all) lifted.push_back(lift_to_profile(inst(r)));
  const std::size_t k = all.size();
  std::vector<std::vector<bool>> geq(k, std::vector<bool>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      geq[a][b] = decide_weak(lifted[a], lifted[b]).has_value();
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    bool upper = true;
    bool lower = true;
    bool nothing_below = true;
    for (std::size_t b = 0; b < k; ++b) {
      upper = upper && geq[a][b];
      lower = lower && geq[b][a];
      nothing_below = nothing_below && !(geq[a][b] && !geq[b][a]);
    }
    const auto c = classify_private_extremal(inst(all[a]));
    EXPECT_EQ(c.is_max_condition, upper) << ::testing::PrintToString(all[a]);
    EXPECT_EQ(c.is_min_condition, nothing_below) << ::testing::PrintToString(all[a]);
    if (c.is_min_condition) EXPECT_TRUE(lower);
    if (c.is_max_condition) {
      ASSERT_TRUE(c.witness_top.has_value());
      for (auto v : rank_vector(lifted[a], *c.witness_top).values) EXPECT_EQ(v, 1);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Small, ExtremalCensus,
                         ::testing::Values(std::pair{2u, 2u}, std::pair{2u, 3u},
                                           std::pair{2u, 4u}, std::pair{3u, 3u}));

TEST(AssignmentProperties, GreedyPsiIsOntoAndRankDominated) {
  std::size_t pairs = 0;
  for (auto [n, m] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 3u}}) {
    const auto all = reference::all_strict_instances(n, m);
    for (const auto& low : all) {
      const auto minimal = inst(low);
      if (!classify_private_extremal(minimal).is_min_condition) continue;
      const auto low_lifted = reference::lift(low);
      for (const auto& high : all) {
        const auto target = inst(high);
        const auto high_lifted = reference::lift(high);
        std::vector<Assignment> image;
        for (const auto& x : reference_frontier(low)) {
          const auto y = greedy_psi(minimal, target, x);
          image.push_back(y);
          const auto xi = assignment_index(space_of(minimal), x).value;
          const auto yi = assignment_index(space_of(target), y).value;
          EXPECT_TRUE(reference::leq(high_lifted, yi, low_lifted, xi));
        }
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        EXPECT_EQ(image, reference_frontier(high));
        ++pairs;
      }
    }
  }
  EXPECT_GE(pairs, 100u);
}
