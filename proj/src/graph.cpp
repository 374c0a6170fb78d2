#include "wildnum/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace wildnum {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::BadVertexId: return "BadVertexId";
    case ErrorKind::UnknownColor: return "UnknownColor";
    case ErrorKind::BadColorIndex: return "BadColorIndex";
    case ErrorKind::BadEdgeId: return "BadEdgeId";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::BadDescriptor: return "BadDescriptor";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NotThreeSat: return "NotThreeSat";
    case ErrorKind::DuplicateClause: return "DuplicateClause";
    case ErrorKind::TautologicalClause: return "TautologicalClause";
    case ErrorKind::UnusedVariable: return "UnusedVariable";
    case ErrorKind::UnsatisfyingAssignment: return "UnsatisfyingAssignment";
    case ErrorKind::NotColorConnecting: return "NotColorConnecting";
    case ErrorKind::WrongSize: return "WrongSize";
    case ErrorKind::MissingPairEdge: return "MissingPairEdge";
  }
  return "Unknown";
}

// --- DisjointSet -------------------------------------------------------------

DisjointSet::DisjointSet(std::size_t size)
    : parent_(size), rank_(size, 0), sets_(size) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSet::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSet::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  --sets_;
  return true;
}

// --- WildSet -----------------------------------------------------------------

WildSet::WildSet(std::initializer_list<EdgeId> ids)
    : WildSet(std::vector<EdgeId>(ids)) {}

WildSet::WildSet(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool WildSet::insert(EdgeId id) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it != ids_.end() && *it == id) return false;
  ids_.insert(it, id);
  return true;
}

bool WildSet::erase(EdgeId id) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return false;
  ids_.erase(it);
  return true;
}

bool WildSet::contains(EdgeId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

// --- EdgeColoredGraph --------------------------------------------------------

EdgeColoredGraph EdgeColoredGraph::build(int n, std::vector<std::string> palette,
                                         std::vector<Edge> edges) {
  if (n < 1) throw Error(ErrorKind::BadVertexId, "graph needs at least one vertex");
  const int colors = static_cast<int>(palette.size());
  DisjointSet dsu(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
      std::ostringstream msg;
      msg << "edge " << i + 1 << " references vertex outside 1.." << n;
      throw Error(ErrorKind::BadVertexId, msg.str());
    }
    if (e.u == e.v) {
      std::ostringstream msg;
      msg << "edge " << i + 1 << " is a self-loop at vertex " << e.u;
      throw Error(ErrorKind::SelfLoop, msg.str());
    }
    if (e.color < 0 || e.color >= colors) {
      std::ostringstream msg;
      msg << "edge " << i + 1 << " has color index " << e.color
          << " outside the palette";
      throw Error(ErrorKind::UnknownColor, msg.str());
    }
    dsu.unite(static_cast<std::size_t>(e.u - 1), static_cast<std::size_t>(e.v - 1));
  }
  if (dsu.set_count() != 1) {
    std::ostringstream msg;
    msg << "underlying multigraph has " << dsu.set_count() << " components";
    throw Error(ErrorKind::Disconnected, msg.str());
  }
  EdgeColoredGraph g;
  g.n_ = n;
  g.palette_ = std::move(palette);
  g.edges_ = std::move(edges);
  return g;
}

const Edge& EdgeColoredGraph::edge(EdgeId id) const {
  if (id < 0 || id >= edge_count()) {
    throw Error(ErrorKind::BadEdgeId, "edge id " + std::to_string(id) + " out of range");
  }
  return edges_[static_cast<std::size_t>(id)];
}

ColorId EdgeColoredGraph::color_index(const std::string& label) const {
  auto it = std::find(palette_.begin(), palette_.end(), label);
  return it == palette_.end() ? -1 : static_cast<ColorId>(it - palette_.begin());
}

std::vector<int> EdgeColoredGraph::color_usage() const {
  std::vector<int> usage(palette_.size(), 0);
  for (const Edge& e : edges_) ++usage[static_cast<std::size_t>(e.color)];
  return usage;
}

bool EdgeColoredGraph::is_surjective() const {
  const auto usage = color_usage();
  return std::none_of(usage.begin(), usage.end(), [](int c) { return c == 0; });
}

bool EdgeColoredGraph::is_simple() const {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Edge& e : edges_) {
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) return false;
  }
  return true;
}

// --- connectivity ------------------------------------------------------------

namespace {

void check_color(const EdgeColoredGraph& g, ColorId color) {
  if (color < 0 || color >= g.color_count()) {
    throw Error(ErrorKind::BadColorIndex,
                "color index " + std::to_string(color) + " out of range");
  }
}

void check_wild(const EdgeColoredGraph& g, const WildSet& wild) {
  if (!wild.empty() && (wild.ids().front() < 0 || wild.ids().back() >= g.edge_count())) {
    throw Error(ErrorKind::BadEdgeId, "wild set references a missing edge");
  }
}

std::size_t idx(VertexId v) { return static_cast<std::size_t>(v - 1); }

}  // namespace

std::vector<DisjointSet> color_forests(const EdgeColoredGraph& g, const WildSet& wild) {
  check_wild(g, wild);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  DisjointSet base(n);
  for (EdgeId id : wild) {
    const Edge& e = g.edge(id);
    base.unite(idx(e.u), idx(e.v));
  }
  std::vector<DisjointSet> forests(static_cast<std::size_t>(g.color_count()), base);
  for (const Edge& e : g.edges()) {
    forests[static_cast<std::size_t>(e.color)].unite(idx(e.u), idx(e.v));
  }
  return forests;
}

Partition mono_components(const EdgeColoredGraph& g, ColorId color, const WildSet& wild) {
  check_color(g, color);
  check_wild(g, wild);
  DisjointSet dsu(static_cast<std::size_t>(g.vertex_count()));
  for (const Edge& e : g.edges()) {
    if (e.color == color) dsu.unite(idx(e.u), idx(e.v));
  }
  for (EdgeId id : wild) {
    const Edge& e = g.edge(id);
    dsu.unite(idx(e.u), idx(e.v));
  }
  Partition p;
  p.label.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> root_label(p.label.size(), -1);
  for (std::size_t v = 0; v < p.label.size(); ++v) {
    auto& r = root_label[dsu.find(v)];
    if (r < 0) r = p.count++;
    p.label[v] = r;
  }
  return p;
}

std::vector<int> kappa_vector(const EdgeColoredGraph& g) {
  std::vector<int> kappa;
  kappa.reserve(static_cast<std::size_t>(g.color_count()));
  for (auto& f : color_forests(g)) kappa.push_back(static_cast<int>(f.set_count()));
  return kappa;
}

int kappa_sum(const EdgeColoredGraph& g) {
  const auto kappa = kappa_vector(g);
  return std::accumulate(kappa.begin(), kappa.end(), 0);
}

bool is_color_connected(const EdgeColoredGraph& g, const WildSet& wild) {
  for (auto& f : color_forests(g, wild)) {
    if (f.set_count() != 1) return false;
  }
  return true;
}

bool helps(const EdgeColoredGraph& g, EdgeId e, ColorId color) {
  check_color(g, color);
  const Edge& edge = g.edge(e);
  DisjointSet dsu(static_cast<std::size_t>(g.vertex_count()));
  for (const Edge& other : g.edges()) {
    if (other.color == color) dsu.unite(idx(other.u), idx(other.v));
  }
  return !dsu.same(idx(edge.u), idx(edge.v));
}

// --- contraction -------------------------------------------------------------

namespace {

QuotientGraph contract_impl(const EdgeColoredGraph& g, const WildSet& wild,
                            std::span<const VertexId> class_of_in,
                            std::span<const EdgeId> origin_in,
                            std::vector<EdgeId> dropped) {
  check_wild(g, wild);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  DisjointSet dsu(n);
  for (EdgeId id : wild) {
    const Edge& e = g.edge(id);
    dsu.unite(idx(e.u), idx(e.v));
  }
  // Quotient vertices are numbered by their smallest member.
  std::vector<VertexId> root_to_class(n, 0);
  std::vector<VertexId> local_class(n, 0);
  VertexId next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto& c = root_to_class[dsu.find(v)];
    if (c == 0) c = ++next;
    local_class[v] = c;
  }
  std::vector<Edge> edges;
  std::vector<EdgeId> origin;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    const VertexId cu = local_class[idx(e.u)];
    const VertexId cv = local_class[idx(e.v)];
    const EdgeId source = origin_in[static_cast<std::size_t>(id)];
    if (cu == cv) {
      dropped.push_back(source);
    } else {
      edges.push_back({cu, cv, e.color});
      origin.push_back(source);
    }
  }
  std::sort(dropped.begin(), dropped.end());

  QuotientGraph q{EdgeColoredGraph::build(next, g.palette(), std::move(edges)), {}, {}, {}};
  q.class_of.reserve(class_of_in.size());
  for (VertexId c : class_of_in) q.class_of.push_back(local_class[idx(c)]);
  q.origin = std::move(origin);
  q.dropped = std::move(dropped);
  return q;
}

}  // namespace

QuotientGraph identity_quotient(const EdgeColoredGraph& g) {
  QuotientGraph q{g, {}, {}, {}};
  q.class_of.resize(static_cast<std::size_t>(g.vertex_count()));
  std::iota(q.class_of.begin(), q.class_of.end(), 1);
  q.origin.resize(static_cast<std::size_t>(g.edge_count()));
  std::iota(q.origin.begin(), q.origin.end(), 0);
  return q;
}

QuotientGraph contract(const EdgeColoredGraph& g, const WildSet& wild) {
  const QuotientGraph id = identity_quotient(g);
  return contract_impl(g, wild, id.class_of, id.origin, {});
}

QuotientGraph contract(const QuotientGraph& q, const WildSet& wild) {
  return contract_impl(q.graph, wild, q.class_of, q.origin, q.dropped);
}

// --- bridges and blocks ------------------------------------------------------

namespace {

struct DfsResult {
  std::vector<EdgeId> bridges;
  std::vector<Block> blocks;
};

DfsResult biconnected(const EdgeColoredGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<std::pair<std::size_t, EdgeId>>> adj(n);
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    adj[idx(e.u)].emplace_back(idx(e.v), id);
    adj[idx(e.v)].emplace_back(idx(e.u), id);
  }
  std::vector<int> disc(n, 0), low(n, 0);
  int timer = 0;
  DfsResult out;
  std::vector<EdgeId> edge_stack;

  struct Frame {
    std::size_t v;
    EdgeId parent_edge;
    std::size_t next;
  };
  std::vector<Frame> stack;
  disc[0] = low[0] = ++timer;
  stack.push_back({0, -1, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next < adj[f.v].size()) {
      auto [w, id] = adj[f.v][f.next++];
      if (id == f.parent_edge) continue;
      if (disc[w] == 0) {
        edge_stack.push_back(id);
        disc[w] = low[w] = ++timer;
        stack.push_back({w, id, 0});
      } else if (disc[w] < disc[f.v]) {
        edge_stack.push_back(id);
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    const Frame done = f;
    stack.pop_back();
    if (stack.empty()) break;
    const std::size_t parent = stack.back().v;
    low[parent] = std::min(low[parent], low[done.v]);
    if (low[done.v] >= disc[parent]) {
      Block b;
      std::set<VertexId> verts;
      for (;;) {
        const EdgeId top = edge_stack.back();
        edge_stack.pop_back();
        b.edges.push_back(top);
        verts.insert(g.edge(top).u);
        verts.insert(g.edge(top).v);
        if (top == done.parent_edge) break;
      }
      std::sort(b.edges.begin(), b.edges.end());
      b.vertices.assign(verts.begin(), verts.end());
      out.blocks.push_back(std::move(b));
    }
    if (low[done.v] > disc[parent]) out.bridges.push_back(done.parent_edge);
  }
  std::sort(out.bridges.begin(), out.bridges.end());
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const Block& a, const Block& b) { return a.edges.front() < b.edges.front(); });
  return out;
}

}  // namespace

std::vector<EdgeId> bridges(const EdgeColoredGraph& g) { return biconnected(g).bridges; }

std::vector<Block> blocks(const EdgeColoredGraph& g) { return biconnected(g).blocks; }

EdgeColoredGraph induced_by_edges(const EdgeColoredGraph& g, std::span<const EdgeId> edges,
                                  std::vector<VertexId>* vertex_map) {
  std::set<VertexId> verts;
  for (EdgeId id : edges) {
    verts.insert(g.edge(id).u);
    verts.insert(g.edge(id).v);
  }
  if (verts.empty()) verts.insert(1);
  std::vector<VertexId> order(verts.begin(), verts.end());
  std::vector<VertexId> local(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    local[static_cast<std::size_t>(order[i])] = static_cast<VertexId>(i + 1);
  }
  std::vector<Edge> sub;
  sub.reserve(edges.size());
  for (EdgeId id : edges) {
    const Edge& e = g.edge(id);
    sub.push_back({local[static_cast<std::size_t>(e.u)], local[static_cast<std::size_t>(e.v)],
                   e.color});
  }
  if (vertex_map) *vertex_map = order;
  return EdgeColoredGraph::build(static_cast<int>(order.size()), g.palette(), std::move(sub));
}

WildSet spanning_tree(const EdgeColoredGraph& g) {
  DisjointSet dsu(static_cast<std::size_t>(g.vertex_count()));
  std::vector<EdgeId> tree;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (dsu.unite(idx(g.edge(id).u), idx(g.edge(id).v))) tree.push_back(id);
  }
  return WildSet(std::move(tree));
}

}  // namespace wildnum
