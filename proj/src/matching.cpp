#include "favorable/matching.hpp"

namespace favorable {
namespace {

struct Augmenter {
  const std::vector<std::vector<std::size_t>>& adj;
  std::vector<std::optional<std::size_t>> right_of_left;
  std::vector<bool> visited;  // left vertices seen in the current search

  bool augment(std::size_t right) {
    for (std::size_t left : adj[right]) {
      if (visited[left]) continue;
      visited[left] = true;
      if (!right_of_left[left] || augment(*right_of_left[left])) {
        right_of_left[left] = right;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

std::vector<std::optional<std::size_t>> max_matching_from_right(
    const std::vector<std::vector<std::size_t>>& right_adjacency,
    std::size_t num_left) {
  Augmenter a{right_adjacency, std::vector<std::optional<std::size_t>>(num_left),
              std::vector<bool>(num_left)};
  for (std::size_t r = 0; r < right_adjacency.size(); ++r) {
    a.visited.assign(num_left, false);
    a.augment(r);
  }
  std::vector<std::optional<std::size_t>> left_of_right(right_adjacency.size());
  for (std::size_t l = 0; l < num_left; ++l) {
    if (a.right_of_left[l]) left_of_right[*a.right_of_left[l]] = l;
  }
  return left_of_right;
}

}  // namespace favorable
