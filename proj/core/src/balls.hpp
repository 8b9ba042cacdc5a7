#ifndef TSIM_SRC_BALLS_HPP
#define TSIM_SRC_BALLS_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parallel.hpp"
#include "tsim/locality.hpp"
#include "tsim/simulation.hpp"

namespace tsim::detail {

// Per-ball driver shared by strong_simulation and match_plus: runs `body`
// over one ball per requested center (in parallel; the data graph stays
// immutable), then deduplicates and orders the collected results by
// canonical text.
inline std::vector<MatchResult> run_over_balls(
    const Graph& g, int radius, const std::vector<NodeId>& centers,
    const std::function<std::optional<MatchResult>(const Graph& ball_graph)>& body) {
  std::vector<std::optional<MatchResult>> slots(centers.size());
  parallel_for(centers.size(), [&](std::size_t i) {
    Ball ball = extract_ball(g, centers[i], radius);
    slots[i] = body(ball.graph);
  });

  std::map<std::string, MatchResult> unique;
  for (auto& slot : slots)
    if (slot) unique.emplace(slot->canonical_text(), std::move(*slot));
  std::vector<MatchResult> out;
  out.reserve(unique.size());
  for (auto& [text, result] : unique) {
    (void)text;
    out.push_back(std::move(result));
  }
  return out;
}

}  // namespace tsim::detail

#endif
