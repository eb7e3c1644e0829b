#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "favorable/core.hpp"
#include "favorable/oracle.hpp"

namespace favorable {

/// Quotient of a profile census by mutual dominance, with the covering
/// relation of the induced strict order.
struct HasseDiagram {
  /// Member profile indices of each class, ascending; classes are ordered by
  /// their smallest member.
  std::vector<std::vector<std::size_t>> classes;
  /// (dominating class, dominated class) covering pairs, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

HasseDiagram hasse_diagram(const oracle::DominanceMatrix& geq);

/// Compact rank-matrix rendering, e.g. "[[1,2],[2,1]]".
std::string matrix_string(const RankMatrix& ranks);

/// DOT digraph; class c is named "C<smallest member>" and labeled with the
/// rank matrices of its members.
std::string to_dot(const HasseDiagram& diagram,
                   const std::vector<PreferenceProfile>& profiles);

}  // namespace favorable
