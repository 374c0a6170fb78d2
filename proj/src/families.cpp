#include "wildnum/families.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "wildnum/bounds.hpp"

namespace wildnum {

int wild_tree(int n, int colors) {
  if (n < 1 || colors < 1) throw Error(ErrorKind::BadDescriptor, "tree needs n >= 1 and l >= 1");
  return colors == 1 ? 0 : n - 1;
}

int wild_cycle(int n, int colors) {
  if (n < 3 || colors < 1 || colors > n) {
    throw Error(ErrorKind::BadDescriptor, "cycle needs n >= 3 and 1 <= l <= n");
  }
  if (colors == 1) return 0;
  return colors == 2 ? n - 2 : n - 1;
}

EdgeColoredGraph amalgamate(const EdgeColoredGraph& g, const EdgeColoredGraph& h, VertexId u,
                            VertexId v) {
  if (u < 1 || u > g.vertex_count() || v < 1 || v > h.vertex_count()) {
    throw Error(ErrorKind::BadVertexId, "amalgamation vertex out of range");
  }
  std::vector<std::string> palette = g.palette();
  for (const auto& label : h.palette()) {
    if (std::find(palette.begin(), palette.end(), label) == palette.end()) {
      palette.push_back(label);
    }
  }
  std::vector<VertexId> h_map(static_cast<std::size_t>(h.vertex_count()) + 1, 0);
  VertexId next = g.vertex_count();
  for (VertexId w = 1; w <= h.vertex_count(); ++w) {
    h_map[static_cast<std::size_t>(w)] = (w == v) ? u : ++next;
  }
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : h.edges()) {
    const auto& label = h.palette()[static_cast<std::size_t>(e.color)];
    const auto color = static_cast<ColorId>(
        std::find(palette.begin(), palette.end(), label) - palette.begin());
    edges.push_back({h_map[static_cast<std::size_t>(e.u)], h_map[static_cast<std::size_t>(e.v)],
                     color});
  }
  return EdgeColoredGraph::build(next, std::move(palette), std::move(edges));
}

EdgeColoredGraph with_palette(const EdgeColoredGraph& g, std::vector<std::string> palette) {
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) {
    const auto& label = g.palette()[static_cast<std::size_t>(e.color)];
    auto it = std::find(palette.begin(), palette.end(), label);
    if (it == palette.end()) throw Error(ErrorKind::UnknownColor, "palette lacks " + label);
    e.color = static_cast<ColorId>(it - palette.begin());
  }
  return EdgeColoredGraph::build(g.vertex_count(), std::move(palette), std::move(edges));
}

// --- deductions --------------------------------------------------------------

const char* to_string(DeductionRule rule) {
  switch (rule) {
    case DeductionRule::NonSurjective: return "non-surjective";
    case DeductionRule::SingleColor: return "single-color";
    case DeductionRule::TwoColors: return "two-colors";
    case DeductionRule::OneRepeatedColor: return "one-repeated-color";
    case DeductionRule::Rainbow: return "rainbow";
    case DeductionRule::KappaSpread: return "kappa-spread";
    case DeductionRule::NearUniformKappa: return "near-uniform-kappa";
    case DeductionRule::OnceTwiceUsage: return "once-twice-usage";
    case DeductionRule::ClbEdgeScarcity: return "clb-edge-scarcity";
    case DeductionRule::SingletonColors: return "singleton-colors";
  }
  return "unknown";
}

std::vector<Deduction> deduce(const EdgeColoredGraph& g) {
  using enum DeductionKind;
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const int colors = g.color_count();
  std::vector<Deduction> out;

  if (!g.is_surjective()) {
    out.push_back({DeductionRule::NonSurjective, ExactValue, n - 1});
    return out;
  }
  if (colors == 1) {
    out.push_back({DeductionRule::SingleColor, ExactValue, 0});
    return out;
  }

  const auto kappa = kappa_vector(g);
  const auto usage = g.color_usage();
  const int kmax = *std::max_element(kappa.begin(), kappa.end());
  const int kmin = *std::min_element(kappa.begin(), kappa.end());
  const int clb = kmax - 1;
  const int at_max = static_cast<int>(std::count(kappa.begin(), kappa.end(), kmax));

  if (colors == 2) out.push_back({DeductionRule::TwoColors, ExactValue, component_upper_bound(g)});

  if (g.is_simple() && n > 2) {
    if (colors == m - 1 && colors > 1) {
      out.push_back({DeductionRule::OneRepeatedColor, ExactValue, n == 3 ? 1 : n - 1});
    }
    if (colors == m) out.push_back({DeductionRule::Rainbow, ExactValue, n - 1});
  }

  if (clb > (colors - at_max) * (kmax - kmin)) {
    out.push_back({DeductionRule::KappaSpread, LowerBound, clb + 1});
  }
  if (at_max >= colors - 1 && kmin > 1) {
    out.push_back({DeductionRule::NearUniformKappa, LowerBound, clb + 1});
  }

  const int once = static_cast<int>(std::count(usage.begin(), usage.end(), 1));
  const int twice = static_cast<int>(std::count(usage.begin(), usage.end(), 2));
  if (once > 0 && once + twice == colors && n - 2 > colors - once) {
    out.push_back({DeductionRule::OnceTwiceUsage, ExactValue, n - 1});
  }

  int m_clb = 0;
  for (std::size_t i = 0; i < kappa.size(); ++i) {
    if (kappa[i] == kmax) m_clb += usage[i];
  }
  if (clb > m - m_clb) out.push_back({DeductionRule::ClbEdgeScarcity, LowerBound, clb + 1});

  if (once > 0 && n - 2 > m - once) {
    out.push_back({DeductionRule::SingletonColors, ExactValue, n - 1});
  }
  return out;
}

// --- generators --------------------------------------------------------------

namespace {

using EdgeList = std::vector<Edge>;

EdgeColoredGraph fixture(int n, std::vector<std::string> palette,
                         std::initializer_list<std::tuple<int, int, int>> triples) {
  EdgeList edges;
  for (auto [u, v, c] : triples) edges.push_back({u, v, c});
  return EdgeColoredGraph::build(n, std::move(palette), std::move(edges));
}

// Eight locations, three transport modes. The purple edge v3v4 is required for
// the four purple components the drawing shows.
EdgeColoredGraph city() {
  enum { orange, purple, green };
  return fixture(8, {"orange", "purple", "green"},
                 {{1, 8, orange}, {6, 7, orange}, {3, 6, orange},
                  {2, 7, purple}, {7, 8, purple}, {3, 4, purple}, {4, 5, purple},
                  {1, 2, green}, {2, 3, green}, {5, 6, green}});
}

// Edge labels <2>, <3>, <5> over Z_30 become purple, green, orange.
EdgeColoredGraph spline() {
  enum { purple, green, orange };
  return fixture(7, {"purple", "green", "orange"},
                 {{1, 2, green}, {2, 3, purple}, {3, 4, orange}, {4, 5, purple},
                  {5, 6, green}, {6, 7, orange}, {1, 7, green}, {3, 7, orange},
                  {4, 6, green}, {4, 7, purple}});
}

EdgeColoredGraph pyramid() {
  enum { purple, green, orange };
  return fixture(6, {"purple", "green", "orange"},
                 {{1, 5, purple}, {2, 4, purple}, {4, 5, purple}, {3, 5, purple},
                  {2, 6, green}, {1, 3, green}, {1, 2, green}, {2, 5, green},
                  {3, 4, orange}, {2, 3, orange}, {3, 6, orange}, {5, 6, orange}});
}

// Edges in lexicographic order so the id tie-break gives the reference greedy order.
EdgeColoredGraph prism() {
  enum { green, purple, orange };
  return fixture(6, {"green", "purple", "orange"},
                 {{1, 2, orange}, {1, 3, green}, {1, 4, green}, {2, 3, purple},
                  {2, 5, orange}, {3, 6, green}, {4, 5, orange}, {4, 6, purple},
                  {5, 6, purple}});
}

// Hub v0 is vertex 1; rim vertex vi is vertex i+1.
EdgeColoredGraph wheel() {
  enum { orange, purple, green, red };
  // Rim from v4 round to v3, then spokes from v0v4 round to v0v3. Greedy has
  // tied candidates at its last two steps; with smallest-id tie-breaking this
  // order picks v6v7 and then v0v4.
  return fixture(8, {"orange", "purple", "green", "red"},
                 {{5, 6, purple}, {6, 7, green}, {7, 8, purple}, {8, 2, green},
                  {2, 3, green}, {3, 4, red}, {4, 5, red},
                  {1, 5, orange}, {1, 6, green}, {1, 7, purple}, {1, 8, green},
                  {1, 2, orange}, {1, 3, purple}, {1, 4, orange}});
}

// The wheel restricted to v0..v3.
EdgeColoredGraph wheel_core() {
  enum { orange, purple, green, red };
  return fixture(4, {"orange", "purple", "green", "red"},
                 {{1, 2, orange}, {1, 3, purple}, {1, 4, orange}, {2, 3, green}, {3, 4, red}});
}

EdgeColoredGraph two_color_hexagon() {
  enum { purple, orange };
  return fixture(6, {"purple", "orange"},
                 {{1, 2, purple}, {2, 3, purple}, {3, 4, orange},
                  {4, 5, purple}, {5, 6, orange}, {6, 1, orange}});
}

EdgeColoredGraph three_color_hexagon() {
  enum { purple, orange, green };
  return fixture(6, {"purple", "orange", "green"},
                 {{1, 2, purple}, {2, 3, purple}, {3, 4, orange},
                  {4, 5, green}, {5, 6, orange}, {6, 1, orange}});
}

EdgeColoredGraph cycle_pair() {
  enum { purple, orange, green };
  const auto right = fixture(6, {"purple", "orange", "green"},
                             {{1, 2, purple}, {2, 3, green}, {3, 4, orange},
                              {4, 5, purple}, {5, 6, green}, {6, 1, orange}});
  return amalgamate(three_color_hexagon(), right, 6, 3);
}

std::vector<std::string> numbered_palette(int colors) {
  std::vector<std::string> palette;
  for (int i = 1; i <= colors; ++i) palette.push_back("c" + std::to_string(i));
  return palette;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::BadDescriptor, what);
}

int param(const FamilyDescriptor& d, std::size_t i) {
  require(i < d.params.size(), d.family + " needs " + std::to_string(i + 1) + " parameters");
  return d.params[i];
}

void apply_coloring(EdgeList& edges, const FamilyDescriptor& d, int colors) {
  if (d.coloring.empty()) {
    for (std::size_t i = 0; i < edges.size(); ++i) edges[i].color = static_cast<int>(i) % colors;
    return;
  }
  require(d.coloring.size() == edges.size(), "coloring length must equal edge count");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    require(d.coloring[i] >= 0 && d.coloring[i] < colors, "coloring index out of range");
    edges[i].color = d.coloring[i];
  }
}

EdgeList random_tree_edges(int n, std::mt19937_64& rng) {
  std::vector<VertexId> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(order.begin(), order.end(), rng);
  EdgeList edges;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    edges.push_back({order[static_cast<std::size_t>(pick(rng))], order[static_cast<std::size_t>(i)], 0});
  }
  return edges;
}

void random_surjective_colors(EdgeList& edges, int colors, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, colors - 1);
  for (;;) {
    std::vector<char> used(static_cast<std::size_t>(colors), 0);
    for (Edge& e : edges) {
      e.color = pick(rng);
      used[static_cast<std::size_t>(e.color)] = 1;
    }
    if (std::all_of(used.begin(), used.end(), [](char c) { return c != 0; })) return;
  }
}

}  // namespace

EdgeColoredGraph random_graph(int n, int m, int colors, std::uint64_t seed, bool simple) {
  require(n >= 1, "random graph needs n >= 1");
  require(m >= n - 1, "random graph needs m >= n-1");
  require(colors >= 1 && (colors <= m || (m == 0 && colors == 1)), "random graph needs 1 <= l <= m");
  if (simple) require(m <= n * (n - 1) / 2, "too many edges for a simple graph");
  std::mt19937_64 rng(seed);
  EdgeList edges = random_tree_edges(n, rng);
  std::set<std::pair<int, int>> present;
  for (const Edge& e : edges) present.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
  std::uniform_int_distribution<int> vertex(1, n);
  while (static_cast<int>(edges.size()) < m) {
    int u = vertex(rng);
    int v = vertex(rng);
    if (u == v) continue;
    if (simple && !present.emplace(std::min(u, v), std::max(u, v)).second) continue;
    edges.push_back({u, v, 0});
  }
  if (m > 0) random_surjective_colors(edges, colors, rng);
  return EdgeColoredGraph::build(n, numbered_palette(colors), std::move(edges));
}

std::vector<std::string> family_names() {
  return {"city",     "spline",     "pyramid",           "prism",
          "wheel",    "wheel-core", "cycle-pair",        "two-color-hexagon",
          "three-color-hexagon",    "path",              "cycle",
          "complete", "tree",       "random"};
}

EdgeColoredGraph generate(const FamilyDescriptor& d) {
  const std::string& f = d.family;
  if (f == "city") return city();
  if (f == "spline") return spline();
  if (f == "pyramid") return pyramid();
  if (f == "prism") return prism();
  if (f == "wheel") return wheel();
  if (f == "wheel-core") return wheel_core();
  if (f == "cycle-pair") return cycle_pair();
  if (f == "two-color-hexagon") return two_color_hexagon();
  if (f == "three-color-hexagon") return three_color_hexagon();

  if (f == "path" || f == "cycle" || f == "complete") {
    const int n = param(d, 0);
    const int colors = param(d, 1);
    require(n >= 1 && colors >= 1, f + " needs n >= 1 and l >= 1");
    EdgeList edges;
    if (f == "path") {
      for (int v = 1; v < n; ++v) edges.push_back({v, v + 1, 0});
    } else if (f == "cycle") {
      require(n >= 3, "cycle needs n >= 3");
      for (int v = 1; v <= n; ++v) edges.push_back({v, v % n + 1, 0});
    } else {
      for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.push_back({u, v, 0});
    }
    apply_coloring(edges, d, colors);
    return EdgeColoredGraph::build(n, numbered_palette(colors), std::move(edges));
  }
  if (f == "tree") {
    const int n = param(d, 0);
    const int colors = param(d, 1);
    require(n >= 1 && colors >= 1 && (colors <= n - 1 || n == 1), "tree needs 1 <= l <= n-1");
    std::mt19937_64 rng(d.seed);
    EdgeList edges = random_tree_edges(n, rng);
    if (!edges.empty()) random_surjective_colors(edges, colors, rng);
    return EdgeColoredGraph::build(n, numbered_palette(colors), std::move(edges));
  }
  if (f == "random") {
    return random_graph(param(d, 0), param(d, 1), param(d, 2), d.seed, d.simple);
  }
  throw Error(ErrorKind::BadDescriptor, "unknown family '" + f + "'");
}

}  // namespace wildnum
