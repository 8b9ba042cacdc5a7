// Naive re-implementations used only to cross-check the engine. Everything
// here recomputes from scratch on each step instead of maintaining worklists
// or counters, so agreement with the production code is meaningful.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tsim/graph.hpp"
#include "tsim/locality.hpp"
#include "tsim/simulation.hpp"

namespace support {

using CandidateSets = std::vector<std::set<tsim::NodeId>>;

inline CandidateSets label_seeds(const tsim::Graph& q, const tsim::Graph& g) {
  CandidateSets sets(q.node_count());
  for (tsim::NodeId u = 0; static_cast<std::size_t>(u) < q.node_count(); ++u)
    for (tsim::NodeId v : g.nodes_with_label(q.label(u))) sets[u].insert(v);
  return sets;
}

// Full-rescan simulation fixpoint; with_parents toggles dual simulation.
inline std::optional<CandidateSets> naive_simulation(const tsim::Graph& q,
                                                     const tsim::Graph& g,
                                                     bool with_parents) {
  CandidateSets sets = label_seeds(q, g);
  bool changed = true;
  while (changed) {
    changed = false;
    for (tsim::NodeId u = 0; static_cast<std::size_t>(u) < q.node_count(); ++u) {
      for (auto it = sets[u].begin(); it != sets[u].end();) {
        tsim::NodeId v = *it;
        bool ok = true;
        for (tsim::NodeId uc : q.children(u)) {
          bool witness = false;
          for (tsim::NodeId vc : g.children(v))
            if (sets[uc].count(vc)) witness = true;
          if (!witness) ok = false;
        }
        if (with_parents)
          for (tsim::NodeId up : q.parents(u)) {
            bool witness = false;
            for (tsim::NodeId vp : g.parents(v))
              if (sets[up].count(vp)) witness = true;
            if (!witness) ok = false;
          }
        if (ok) {
          ++it;
        } else {
          it = sets[u].erase(it);
          changed = true;
        }
      }
    }
  }
  for (const auto& set : sets)
    if (set.empty()) return std::nullopt;
  return sets;
}

inline bool same_relation(const CandidateSets& naive, const tsim::SimRelation& rel) {
  if (naive.size() != rel.pattern_size()) return false;
  for (tsim::NodeId u = 0; static_cast<std::size_t>(u) < naive.size(); ++u) {
    std::set<tsim::NodeId> engine;
    for (tsim::NodeId v : rel.at(u).items()) engine.insert(v);
    if (engine != naive[u]) return false;
  }
  return true;
}

// Ball membership by definition: undirected shortest-path distance <= radius.
inline std::set<std::string> naive_ball_members(const tsim::Graph& g,
                                                tsim::NodeId center, int radius) {
  std::set<std::string> members;
  for (tsim::NodeId v = 0; static_cast<std::size_t>(v) < g.node_count(); ++v) {
    auto dist = tsim::undirected_distance(g, center, v);
    if (dist && *dist <= radius) members.insert(g.id(v));
  }
  return members;
}

// Expected counter value: how often v appears as a d-side neighbor match of
// candidates for u, recomputed from the relation.
inline int recount(const tsim::Graph& g, const tsim::SimRelation& rel,
                   tsim::NodeId u, tsim::NodeId v, tsim::Direction d) {
  int count = 0;
  for (tsim::NodeId w : rel.at(u).items())
    for (tsim::NodeId n : tsim::neighbors(g, w, d))
      if (n == v) ++count;
  return count;
}

// Strong simulation by definition: dual simulation inside every ball, result
// texts deduplicated and sorted.
inline std::vector<std::string> naive_strong_texts(const tsim::PatternGraph& q,
                                                   const tsim::Graph& g) {
  int radius = tsim::diameter(q.graph());
  std::set<std::string> texts;
  for (tsim::NodeId w = 0; static_cast<std::size_t>(w) < g.node_count(); ++w) {
    tsim::Ball ball = tsim::extract_ball(g, w, radius);
    auto naive = naive_simulation(q.graph(), ball.graph, true);
    if (!naive) continue;
    tsim::SimRelation rel(q.graph().node_count());
    for (tsim::NodeId u = 0; static_cast<std::size_t>(u) < naive->size(); ++u)
      for (tsim::NodeId v : (*naive)[u]) rel.at(u).insert(v);
    texts.insert(tsim::build_match_result(q, ball.graph, rel).canonical_text());
  }
  return {texts.begin(), texts.end()};
}

}  // namespace support
