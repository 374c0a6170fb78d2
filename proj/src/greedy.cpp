#include "wildnum/greedy.hpp"

#include <algorithm>

namespace wildnum {

std::vector<int> dip_row(const QuotientGraph& q) {
  const std::size_t source_edges = q.origin.size() + q.dropped.size();
  std::vector<int> row(source_edges, 0);
  const auto dips = dip_numbers(q.graph);
  for (std::size_t e = 0; e < dips.size(); ++e) {
    row[static_cast<std::size_t>(q.origin[e])] = dips[e];
  }
  return row;
}

namespace {

GreedyCandidate evaluate(const QuotientGraph& q, EdgeId e) {
  const QuotientGraph next = contract(q, WildSet{e});
  GreedyCandidate c;
  c.edge = q.origin[static_cast<std::size_t>(e)];
  c.row = dip_row(next);
  c.potential = DipSequence(c.row);
  return c;
}

}  // namespace

DipSequence potential(const QuotientGraph& q, EdgeId e) {
  q.graph.edge(e);  // range check
  return evaluate(q, e).potential;
}

GreedyResult greedy_wild_set(const EdgeColoredGraph& g) {
  GreedyResult result;
  QuotientGraph q = identity_quotient(g);
  while (!is_color_connected(q.graph, {})) {
    GreedyStep step;
    step.dips = dip_row(q);
    const auto dips = dip_numbers(q.graph);
    step.max_dip = *std::max_element(dips.begin(), dips.end());

    EdgeId best_local = -1;
    for (EdgeId e = 0; e < q.graph.edge_count(); ++e) {
      if (dips[static_cast<std::size_t>(e)] != step.max_dip) continue;
      step.candidates.push_back(evaluate(q, e));
      // Quotient edges keep source order, so the first strict maximum is the
      // smallest source id among equals.
      if (best_local < 0 ||
          step.candidates.back().potential > step.candidates[static_cast<std::size_t>(
                                                  best_local)].potential) {
        best_local = static_cast<EdgeId>(step.candidates.size() - 1);
      }
    }
    const GreedyCandidate& pick = step.candidates[static_cast<std::size_t>(best_local)];
    step.selected = pick.edge;
    result.trace.chosen.push_back(pick.edge);
    result.wild.insert(pick.edge);

    const auto local = static_cast<EdgeId>(
        std::find(q.origin.begin(), q.origin.end(), pick.edge) - q.origin.begin());
    q = contract(q, WildSet{local});
    result.trace.steps.push_back(std::move(step));
  }
  return result;
}

}  // namespace wildnum
