#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

#include "wildnum/graph.hpp"

namespace wildnum {

enum class ExactMethod { Shortcut, Blocks, BranchBound, Brute };

const char* to_string(ExactMethod method);

struct ExactResult {
  int wild = 0;
  WildSet witness;  // one ideal wild set
  ExactMethod method = ExactMethod::BranchBound;
  std::uint64_t nodes_explored = 0;
};

struct ExactOptions {
  /// Closed-form answers for one color, two colors, and unused palette colors.
  bool shortcuts = true;
  /// Solve blocks separately and sum.
  bool decompose = true;
  /// Worker threads for branch-and-bound. 1 is deterministic.
  int threads = 1;
  /// Polled during search; returning true aborts with SearchAborted.
  std::function<bool()> should_stop;
};

class SearchAborted : public std::runtime_error {
 public:
  SearchAborted() : std::runtime_error("search aborted") {}
};

/// Subsets by increasing size, bridges always included when l >= 2. Throws
/// CapExceeded when nothing of size <= cap color-connects.
ExactResult wild_brute(const EdgeColoredGraph& g, std::optional<int> cap = std::nullopt);

/// Exact wild number: shortcuts, bridge forcing, block decomposition, then
/// branch-and-bound seeded with the greedy set and pruned by the dip bound.
ExactResult wild_exact(const EdgeColoredGraph& g, const ExactOptions& options = {});

/// wild(g) <= k.
bool decide_k_wild(const EdgeColoredGraph& g, int k, const ExactOptions& options = {});

}  // namespace wildnum
