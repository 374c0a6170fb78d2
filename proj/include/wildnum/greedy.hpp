#pragma once

#include <vector>

#include "wildnum/bounds.hpp"
#include "wildnum/graph.hpp"

namespace wildnum {

/// Dip number of every source edge of `q`, indexed by source edge id. Dropped
/// loops read 0.
std::vector<int> dip_row(const QuotientGraph& q);

/// Potential of quotient edge `e`: the dip sequence of q/e, padded with one 0
/// per loop dropped so far (e included), so its length is the source edge count.
DipSequence potential(const QuotientGraph& q, EdgeId e);

struct GreedyCandidate {
  EdgeId edge = 0;         // source edge id
  std::vector<int> row;    // dip of each source edge after contracting `edge`
  DipSequence potential;
};

struct GreedyStep {
  std::vector<int> dips;   // dip of each source edge before the pick
  int max_dip = 0;
  std::vector<GreedyCandidate> candidates;  // every edge of dip max_dip
  EdgeId selected = 0;
};

struct GreedyTrace {
  std::vector<EdgeId> chosen;  // in pick order
  std::vector<GreedyStep> steps;
};

struct GreedyResult {
  WildSet wild;
  GreedyTrace trace;
};

/// Repeatedly contracts the max-dip edge with the lexicographically greatest
/// potential; remaining ties go to the smallest edge id. The result always
/// color-connects g.
GreedyResult greedy_wild_set(const EdgeColoredGraph& g);

}  // namespace wildnum
