#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace favorable {

/// Maximum bipartite matching by repeated augmenting paths (Kuhn). Right
/// vertices are processed in index order and each tries its left neighbors in
/// index order, so the result is deterministic for a given adjacency.
///
/// `right_adjacency[r]` lists the left vertices adjacent to right vertex r.
/// Returns, for each right vertex, its matched left vertex (if any).
std::vector<std::optional<std::size_t>> max_matching_from_right(
    const std::vector<std::vector<std::size_t>>& right_adjacency,
    std::size_t num_left);

}  // namespace favorable
