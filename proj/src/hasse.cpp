#include "favorable/hasse.hpp"

#include <algorithm>
#include <sstream>

namespace favorable {

HasseDiagram hasse_diagram(const oracle::DominanceMatrix& geq) {
  const std::size_t count = geq.size();
  HasseDiagram d;
  std::vector<std::size_t> class_of(count, count);
  for (std::size_t a = 0; a < count; ++a) {
    if (class_of[a] != count) continue;
    const std::size_t c = d.classes.size();
    d.classes.emplace_back();
    for (std::size_t b = a; b < count; ++b) {
      if (class_of[b] == count && geq.at(a, b) && geq.at(b, a)) {
        class_of[b] = c;
        d.classes[c].push_back(b);
      }
    }
  }

  const std::size_t k = d.classes.size();
  auto above = [&](std::size_t c, std::size_t e) {
    const std::size_t a = d.classes[c].front();
    const std::size_t b = d.classes[e].front();
    return geq.at(a, b) && !geq.at(b, a);
  };
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t e = 0; e < k; ++e) {
      if (!above(c, e)) continue;
      bool covered = true;
      for (std::size_t mid = 0; mid < k && covered; ++mid) {
        if (above(c, mid) && above(mid, e)) covered = false;
      }
      if (covered) d.edges.emplace_back(c, e);
    }
  }
  return d;
}

std::string matrix_string(const RankMatrix& ranks) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (i > 0) os << ',';
    os << '[';
    for (std::size_t x = 0; x < ranks[i].size(); ++x) {
      if (x > 0) os << ',';
      os << ranks[i][x];
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::string to_dot(const HasseDiagram& diagram,
                   const std::vector<PreferenceProfile>& profiles) {
  auto name = [&](std::size_t c) {
    return "\"C" + std::to_string(diagram.classes[c].front()) + "\"";
  };
  std::ostringstream os;
  os << "digraph hasse {\n";
  for (std::size_t c = 0; c < diagram.classes.size(); ++c) {
    os << "  " << name(c) << " [label=\"";
    for (std::size_t k = 0; k < diagram.classes[c].size(); ++k) {
      if (k > 0) os << "\\n";
      os << matrix_string(profiles[diagram.classes[c][k]].ranks());
    }
    os << "\"];\n";
  }
  for (const auto& [from, to] : diagram.edges) {
    os << "  " << name(from) << " -> " << name(to) << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace favorable
