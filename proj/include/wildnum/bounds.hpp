#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "wildnum/families.hpp"
#include "wildnum/graph.hpp"

namespace wildnum {

/// Per-edge dip numbers sorted non-increasing. Compared lexicographically.
class DipSequence {
 public:
  DipSequence() = default;
  /// Sorts `values` into non-increasing order.
  explicit DipSequence(std::vector<int> values);

  const std::vector<int>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  /// Appends zeros (loops dropped by contraction).
  void pad_zeros(std::size_t count);

  /// Run-length form such as "2^(5),1^(1),0^(3)".
  std::string to_string() const;

  friend bool operator==(const DipSequence&, const DipSequence&) = default;
  friend auto operator<=>(const DipSequence&, const DipSequence&) = default;

 private:
  std::vector<int> values_;
};

int dip_number(const EdgeColoredGraph& g, EdgeId e);
int dip_number_set(const EdgeColoredGraph& g, const WildSet& w);

/// Dip number of every edge, indexed by edge id.
std::vector<int> dip_numbers(const EdgeColoredGraph& g);
DipSequence dip_sequence(const EdgeColoredGraph& g);

int component_lower_bound(const EdgeColoredGraph& g);
int component_upper_bound(const EdgeColoredGraph& g);
/// ceil(cub / (l-1)); 0 when the palette has a single color.
int ceiling_lower_bound(const EdgeColoredGraph& g);

/// Smallest p whose top-p dip sum reaches `needed`; nullopt when the whole
/// sequence falls short.
std::optional<int> prefix_bound(const std::vector<int>& dips_desc, int needed);
/// Dip lower bound; nullopt only if the dip sum is below cub.
std::optional<int> dip_lower_bound(const EdgeColoredGraph& g);

struct BoundsReport {
  int clb = 0;
  int cub = 0;
  int ceiling_lb = 0;
  int dip_lb = 0;
  int greedy_size = 0;
  std::vector<Deduction> deductions;
  int best_lb = 0;
  int best_ub = 0;
  std::string best_lb_source;
  std::string best_ub_source;
};

BoundsReport bounds_report(const EdgeColoredGraph& g);

}  // namespace wildnum
