#include "favorable/order.hpp"

#include <algorithm>

#include "favorable/matching.hpp"

namespace favorable {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::StrictlyAbove: return "StrictlyAbove";
    case Relation::Equivalent: return "Equivalent";
    case Relation::StrictlyBelow: return "StrictlyBelow";
    case Relation::Incomparable: return "Incomparable";
  }
  return "Unknown";
}

std::vector<std::size_t> AdmissibleGraph::neighbors_of_left(
    std::size_t l) const {
  std::vector<std::size_t> out;
  const AllocationId x = left.members[l];
  for (const Edge& e : edges) {
    if (e.left != x) continue;
    auto it = std::lower_bound(right.members.begin(), right.members.end(),
                               e.right);
    out.push_back(static_cast<std::size_t>(it - right.members.begin()));
  }
  return out;
}

std::optional<AllocationId> PsiWitness::image(AllocationId x) const {
  auto it = std::lower_bound(
      mapping.begin(), mapping.end(), x,
      [](const auto& entry, AllocationId key) { return entry.first < key; });
  if (it == mapping.end() || it->first != x) return std::nullopt;
  return it->second;
}

AdmissibleGraph admissible_graph(const PreferenceProfile& p,
                                 const PreferenceProfile& p_prime) {
  require_same_shape(p, p_prime);
  AdmissibleGraph g;
  g.left = pareto_frontier(p_prime);
  g.right = pareto_frontier(p);
  for (AllocationId x : g.left.members) {
    const RankVector below = rank_vector(p_prime, x);
    for (AllocationId y : g.right.members) {
      const RankVector above = rank_vector(p, y);
      if (above.weakly_below(below)) {
        g.edges.push_back({x, y, above.strictly_below(below)});
      }
    }
  }
  return g;
}

namespace {

// Onto map over `g`, optionally forcing left position `forced_left` onto
// right position `forced_right`. Returns nullopt when none exists.
std::optional<PsiWitness> onto_witness(
    const AdmissibleGraph& g,
    std::optional<std::pair<std::size_t, std::size_t>> forced) {
  const std::size_t nl = g.left.size();
  const std::size_t nr = g.right.size();
  std::vector<std::vector<std::size_t>> left_adj(nl);
  for (std::size_t l = 0; l < nl; ++l) {
    left_adj[l] = g.neighbors_of_left(l);
    if (left_adj[l].empty()) return std::nullopt;
  }
  if (nl < nr) return std::nullopt;

  std::vector<std::vector<std::size_t>> right_adj(nr);
  for (std::size_t l = 0; l < nl; ++l) {
    if (forced && l == forced->first) continue;
    for (std::size_t r : left_adj[l]) {
      if (forced && r == forced->second) continue;
      right_adj[r].push_back(l);
    }
  }
  const auto matched = max_matching_from_right(right_adj, nl);

  std::vector<std::optional<std::size_t>> image(nl);
  if (forced) image[forced->first] = forced->second;
  for (std::size_t r = 0; r < nr; ++r) {
    if (forced && r == forced->second) continue;
    if (!matched[r]) return std::nullopt;
    image[*matched[r]] = r;
  }
  PsiWitness psi;
  for (std::size_t l = 0; l < nl; ++l) {
    const std::size_t r = image[l].value_or(left_adj[l].front());
    psi.mapping.emplace_back(g.left.members[l], g.right.members[r]);
  }
  return psi;
}

}  // namespace

std::optional<PsiWitness> decide_weak(const PreferenceProfile& p,
                                      const PreferenceProfile& p_prime) {
  return onto_witness(admissible_graph(p, p_prime), std::nullopt);
}

OrderVerdict compare(const PreferenceProfile& p,
                     const PreferenceProfile& p_prime) {
  OrderVerdict v;
  v.forward = decide_weak(p, p_prime);
  v.backward = decide_weak(p_prime, p);
  if (v.forward && v.backward) {
    v.relation = Relation::Equivalent;
  } else if (v.forward) {
    v.relation = Relation::StrictlyAbove;
  } else if (v.backward) {
    v.relation = Relation::StrictlyBelow;
  } else {
    v.relation = Relation::Incomparable;
  }
  return v;
}

std::optional<PsiWitness> decide_tilde(const PreferenceProfile& p,
                                       const PreferenceProfile& p_prime) {
  const AdmissibleGraph g = admissible_graph(p, p_prime);
  for (const auto& e : g.edges) {
    if (!e.strict) continue;
    const auto l = static_cast<std::size_t>(
        std::lower_bound(g.left.members.begin(), g.left.members.end(), e.left) -
        g.left.members.begin());
    const auto r = static_cast<std::size_t>(
        std::lower_bound(g.right.members.begin(), g.right.members.end(),
                         e.right) -
        g.right.members.begin());
    if (auto psi = onto_witness(g, std::pair{l, r})) return psi;
  }
  return std::nullopt;
}

namespace {

// Every member of `from` has some member of `to` with the given relation.
template <typename Covers>
bool every_covered(const ParetoFrontier& from, const ParetoFrontier& to,
                   Covers covers) {
  return std::all_of(from.members.begin(), from.members.end(),
                     [&](AllocationId a) {
                       return std::any_of(to.members.begin(), to.members.end(),
                                          [&](AllocationId b) {
                                            return covers(a, b);
                                          });
                     });
}

}  // namespace

bool decide_hat(const PreferenceProfile& p, const PreferenceProfile& p_prime) {
  require_same_shape(p, p_prime);
  const ParetoFrontier pe = pareto_frontier(p);
  const ParetoFrontier pe_prime = pareto_frontier(p_prime);
  const bool cond_i = every_covered(pe_prime, pe, [&](auto x, auto y) {
    return rank_vector(p, y).weakly_below(rank_vector(p_prime, x));
  });
  const bool cond_ii = every_covered(pe, pe_prime, [&](auto y, auto x) {
    return rank_vector(p, y).weakly_below(rank_vector(p_prime, x));
  });
  return cond_i && cond_ii;
}

bool decide_wso(const PreferenceProfile& p, const PreferenceProfile& p_prime,
                bool require_strict) {
  require_same_shape(p, p_prime);
  const ParetoFrontier pe = pareto_frontier(p);
  const ParetoFrontier pe_prime = pareto_frontier(p_prime);
  auto leq = [&](AllocationId x, AllocationId y) {
    return rank_vector(p, x).weakly_below(rank_vector(p_prime, y));
  };
  const bool first = every_covered(pe, pe_prime, leq);
  const bool second = every_covered(
      pe_prime, pe, [&](AllocationId y, AllocationId x) { return leq(x, y); });
  if (!first || !second) return false;
  if (!require_strict) return true;
  // Both bullets are existential, so any strictly dominated frontier pair can
  // serve as the witness for its own bullet.
  for (AllocationId x : pe.members) {
    for (AllocationId y : pe_prime.members) {
      if (rank_vector(p, x).strictly_below(rank_vector(p_prime, y))) {
        return true;
      }
    }
  }
  return false;
}

bool is_valid_witness(const PreferenceProfile& p,
                      const PreferenceProfile& p_prime, const PsiWitness& psi) {
  require_same_shape(p, p_prime);
  const ParetoFrontier pe = pareto_frontier(p);
  const ParetoFrontier pe_prime = pareto_frontier(p_prime);
  if (psi.mapping.size() != pe_prime.size()) return false;
  std::vector<bool> hit(p.num_allocations(), false);
  for (std::size_t k = 0; k < psi.mapping.size(); ++k) {
    const auto [x, y] = psi.mapping[k];
    if (x != pe_prime.members[k] || !pe.contains(y)) return false;
    if (!rank_vector(p, y).weakly_below(rank_vector(p_prime, x))) return false;
    hit[y.value] = true;
  }
  return std::all_of(pe.members.begin(), pe.members.end(),
                     [&](AllocationId y) { return hit[y.value]; });
}

}  // namespace favorable
