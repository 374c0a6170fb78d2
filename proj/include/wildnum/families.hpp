#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wildnum/graph.hpp"

namespace wildnum {

// --- closed forms ------------------------------------------------------------

/// Wild number of an order-n tree whose coloring uses `colors` colors.
int wild_tree(int n, int colors);

/// Wild number of the n-cycle with a surjective `colors`-coloring; it does not
/// depend on which coloring.
int wild_cycle(int n, int colors);

/// Glues h onto g by identifying u (in g) with v (in h). The palette is g's
/// followed by h's labels not already present. g keeps its vertex ids; h's
/// remaining vertices follow in order.
EdgeColoredGraph amalgamate(const EdgeColoredGraph& g, const EdgeColoredGraph& h,
                            VertexId u, VertexId v);

/// Same graph over a different palette, matched by label. Throws UnknownColor
/// if an edge's label is missing from `palette`.
EdgeColoredGraph with_palette(const EdgeColoredGraph& g, std::vector<std::string> palette);

// --- color-count deductions --------------------------------------------------

enum class DeductionRule {
  NonSurjective,      // some palette color unused: n-1
  SingleColor,        // l = 1: 0
  TwoColors,          // l = 2: cub
  OneRepeatedColor,   // simple, n > 2, l = m-1 > 1: 1 if n = 3 else n-1
  Rainbow,            // simple, n > 2, l = m: n-1
  KappaSpread,        // clb > (l-s)(kmax-kmin): wild > clb
  NearUniformKappa,   // kmax attained by >= l-1 colors and kmin > 1: wild > clb
  OnceTwiceUsage,     // s colors used once, the rest twice, n-2 > l-s: n-1
  ClbEdgeScarcity,    // clb > m - m_clb: wild > clb
  SingletonColors,    // s colors used once, n-2 > m-s: n-1
};

const char* to_string(DeductionRule rule);

enum class DeductionKind { ExactValue, LowerBound };

struct Deduction {
  DeductionRule rule = DeductionRule::KappaSpread;
  DeductionKind kind = DeductionKind::LowerBound;
  /// The wild number itself, or a valid lower bound (clb + 1 for the
  /// strict "wild > clb" conclusions).
  int value = 0;

  friend bool operator==(const Deduction&, const Deduction&) = default;
};

/// Every color-count rule whose hypothesis holds for g.
std::vector<Deduction> deduce(const EdgeColoredGraph& g);

// --- generators --------------------------------------------------------------

struct FamilyDescriptor {
  std::string family;
  std::vector<int> params;
  /// Explicit per-edge palette indices (cycle and path only).
  std::vector<int> coloring;
  std::uint64_t seed = 0;
  /// Random family: forbid parallel edges.
  bool simple = true;
};

/// Named families:
///   city, spline, pyramid, prism, wheel, wheel-core, cycle-pair,
///   two-color-hexagon, three-color-hexagon,
///   path N L, cycle N L, complete N L, tree N L (seeded), random N M L (seeded).
/// Throws BadDescriptor on unknown names or out-of-range parameters.
EdgeColoredGraph generate(const FamilyDescriptor& descriptor);

/// Names accepted by generate(), for help text.
std::vector<std::string> family_names();

/// Connected random multigraph: a random spanning tree plus extra edges,
/// colors uniform and resampled until every color is used.
EdgeColoredGraph random_graph(int n, int m, int colors, std::uint64_t seed, bool simple);

}  // namespace wildnum
