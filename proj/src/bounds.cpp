#include "wildnum/bounds.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "wildnum/families.hpp"
#include "wildnum/greedy.hpp"

namespace wildnum {

DipSequence::DipSequence(std::vector<int> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

void DipSequence::pad_zeros(std::size_t count) { values_.insert(values_.end(), count, 0); }

std::string DipSequence::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < values_.size();) {
    std::size_t j = i;
    while (j < values_.size() && values_[j] == values_[i]) ++j;
    if (i) out << ',';
    out << values_[i] << "^(" << (j - i) << ')';
    i = j;
  }
  return out.str();
}

std::vector<int> dip_numbers(const EdgeColoredGraph& g) {
  auto forests = color_forests(g);
  std::vector<int> dips;
  dips.reserve(static_cast<std::size_t>(g.edge_count()));
  for (const Edge& e : g.edges()) {
    int d = 0;
    for (auto& f : forests) {
      if (!f.same(static_cast<std::size_t>(e.u - 1), static_cast<std::size_t>(e.v - 1))) ++d;
    }
    dips.push_back(d);
  }
  return dips;
}

int dip_number(const EdgeColoredGraph& g, EdgeId e) {
  g.edge(e);  // range check
  return dip_numbers(g)[static_cast<std::size_t>(e)];
}

int dip_number_set(const EdgeColoredGraph& g, const WildSet& w) {
  int total = 0;
  auto before = color_forests(g);
  auto after = color_forests(g, w);
  for (std::size_t i = 0; i < before.size(); ++i) {
    total += static_cast<int>(before[i].set_count()) - static_cast<int>(after[i].set_count());
  }
  return total;
}

DipSequence dip_sequence(const EdgeColoredGraph& g) { return DipSequence(dip_numbers(g)); }

int component_lower_bound(const EdgeColoredGraph& g) {
  int best = 0;
  for (int k : kappa_vector(g)) best = std::max(best, k - 1);
  return best;
}

int component_upper_bound(const EdgeColoredGraph& g) {
  int total = 0;
  for (int k : kappa_vector(g)) total += k - 1;
  return total;
}

int ceiling_lower_bound(const EdgeColoredGraph& g) {
  const int colors = g.color_count();
  if (colors <= 1) return 0;
  const int cub = component_upper_bound(g);
  return (cub + colors - 2) / (colors - 1);
}

std::optional<int> prefix_bound(const std::vector<int>& dips_desc, int needed) {
  if (needed <= 0) return 0;
  int sum = 0;
  for (std::size_t p = 0; p < dips_desc.size(); ++p) {
    sum += dips_desc[p];
    if (sum >= needed) return static_cast<int>(p + 1);
  }
  return std::nullopt;
}

std::optional<int> dip_lower_bound(const EdgeColoredGraph& g) {
  return prefix_bound(dip_sequence(g).values(), component_upper_bound(g));
}

BoundsReport bounds_report(const EdgeColoredGraph& g) {
  BoundsReport r;
  r.clb = component_lower_bound(g);
  r.cub = component_upper_bound(g);
  r.ceiling_lb = ceiling_lower_bound(g);
  // Connected graphs always reach cub; the fallback keeps the report total.
  r.dip_lb = dip_lower_bound(g).value_or(g.edge_count() + 1);
  r.deductions = deduce(g);
  r.greedy_size = static_cast<int>(greedy_wild_set(g).wild.size());

  auto raise = [&](int value, const std::string& source) {
    if (value > r.best_lb) {
      r.best_lb = value;
      r.best_lb_source = source;
    }
  };
  auto lower = [&](int value, const std::string& source) {
    if (value < r.best_ub) {
      r.best_ub = value;
      r.best_ub_source = source;
    }
  };
  r.best_lb = r.clb;
  r.best_lb_source = "component lower bound";
  raise(r.ceiling_lb, "ceiling lower bound");
  raise(r.dip_lb, "dip lower bound");
  r.best_ub = r.cub;
  r.best_ub_source = "component upper bound";
  lower(r.greedy_size, "greedy");
  lower(g.vertex_count() - 1, "spanning tree (n-1)");
  for (const Deduction& d : r.deductions) {
    raise(d.value, to_string(d.rule));
    if (d.kind == DeductionKind::ExactValue) lower(d.value, to_string(d.rule));
  }
  return r;
}

}  // namespace wildnum
