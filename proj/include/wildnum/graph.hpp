#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wildnum {

using VertexId = int;  // 1-based
using EdgeId = int;    // 0-based position in the edge list
using ColorId = int;   // 0-based palette index

enum class ErrorKind {
  Disconnected,
  SelfLoop,
  BadVertexId,
  UnknownColor,
  BadColorIndex,
  BadEdgeId,
  CapExceeded,
  BadDescriptor,
  SyntaxError,
  NotThreeSat,
  DuplicateClause,
  TautologicalClause,
  UnusedVariable,
  UnsatisfyingAssignment,
  NotColorConnecting,
  WrongSize,
  MissingPairEdge,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  ColorId color = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Array-backed union-find with path halving and union by size.
class DisjointSet {
 public:
  explicit DisjointSet(std::size_t size = 0);

  std::size_t find(std::size_t x);
  /// Returns true when two distinct sets were merged.
  bool unite(std::size_t a, std::size_t b);
  bool same(std::size_t a, std::size_t b) { return find(a) == find(b); }
  std::size_t size() const { return parent_.size(); }
  std::size_t set_count() const { return sets_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
  std::size_t sets_ = 0;
};

/// A set of edge identifiers into one graph's edge sequence. Kept sorted and
/// duplicate-free.
class WildSet {
 public:
  WildSet() = default;
  WildSet(std::initializer_list<EdgeId> ids);
  explicit WildSet(std::vector<EdgeId> ids);

  bool insert(EdgeId id);
  bool erase(EdgeId id);
  bool contains(EdgeId id) const;
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::vector<EdgeId>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  friend bool operator==(const WildSet&, const WildSet&) = default;

 private:
  std::vector<EdgeId> ids_;
};

/// Connected edge-colored multigraph on vertices 1..n. Immutable once built.
class EdgeColoredGraph {
 public:
  /// Validates and builds. Throws Error on self-loops, bad ids, unknown
  /// colors, or a disconnected underlying multigraph.
  static EdgeColoredGraph build(int n, std::vector<std::string> palette,
                                std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int color_count() const { return static_cast<int>(palette_.size()); }

  const std::vector<std::string>& palette() const { return palette_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const;

  /// Palette index of a label, or -1.
  ColorId color_index(const std::string& label) const;
  /// Number of edges of each palette color.
  std::vector<int> color_usage() const;
  bool is_surjective() const;
  /// No parallel edges (self-loops are already excluded).
  bool is_simple() const;

  friend bool operator==(const EdgeColoredGraph&,
                         const EdgeColoredGraph&) = default;

 private:
  EdgeColoredGraph() = default;

  int n_ = 0;
  std::vector<std::string> palette_;
  std::vector<Edge> edges_;
};

/// Vertex partition: `label[v-1]` is the part of vertex v, parts numbered
/// 0..count-1 in order of first appearance.
struct Partition {
  std::vector<int> label;
  int count = 0;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Components of G_i^W (the color-i edges plus W, on all vertices).
Partition mono_components(const EdgeColoredGraph& g, ColorId color,
                          const WildSet& wild = {});

/// kappa(G_i) for every color i.
std::vector<int> kappa_vector(const EdgeColoredGraph& g);
int kappa_sum(const EdgeColoredGraph& g);

bool is_color_connected(const EdgeColoredGraph& g, const WildSet& wild);

/// True iff coloring edge e wild merges two components of G_i.
bool helps(const EdgeColoredGraph& g, EdgeId e, ColorId color);

/// One DisjointSet per color, seeded with that color's edges and `wild`.
std::vector<DisjointSet> color_forests(const EdgeColoredGraph& g,
                                       const WildSet& wild = {});

/// G/W with bookkeeping back to the graph it came from.
struct QuotientGraph {
  EdgeColoredGraph graph;
  /// class_of[v-1] is the quotient vertex of source vertex v.
  std::vector<VertexId> class_of;
  /// origin[e] is the source edge id of surviving quotient edge e.
  std::vector<EdgeId> origin;
  /// Source edge ids that became loops and were dropped.
  std::vector<EdgeId> dropped;
};

QuotientGraph contract(const EdgeColoredGraph& g, const WildSet& wild);

/// Contracts further; `wild` holds edge ids of q.graph. The result maps back to
/// q's source graph, and previously dropped edges stay dropped.
QuotientGraph contract(const QuotientGraph& q, const WildSet& wild);

/// Identity quotient of g.
QuotientGraph identity_quotient(const EdgeColoredGraph& g);

/// Edges whose removal disconnects the underlying multigraph.
std::vector<EdgeId> bridges(const EdgeColoredGraph& g);

struct Block {
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;  // sorted
};

/// Biconnected components of the underlying multigraph. Parallel edges share a
/// block. A single-vertex graph has no blocks.
std::vector<Block> blocks(const EdgeColoredGraph& g);

/// The subgraph spanned by `edges`, renumbered to 1..k in order of increasing
/// source vertex id, over the full palette of g. `vertex_map` receives the
/// source vertex of each new vertex.
EdgeColoredGraph induced_by_edges(const EdgeColoredGraph& g,
                                  std::span<const EdgeId> edges,
                                  std::vector<VertexId>* vertex_map = nullptr);

/// Edge ids of a spanning tree of the underlying multigraph, lowest ids first.
WildSet spanning_tree(const EdgeColoredGraph& g);

}  // namespace wildnum
