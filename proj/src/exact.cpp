#include "wildnum/exact.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "wildnum/bounds.hpp"
#include "wildnum/greedy.hpp"

namespace wildnum {

const char* to_string(ExactMethod method) {
  switch (method) {
    case ExactMethod::Shortcut: return "shortcut";
    case ExactMethod::Blocks: return "blocks";
    case ExactMethod::BranchBound: return "branch_bound";
    case ExactMethod::Brute: return "brute";
  }
  return "unknown";
}

namespace {

std::size_t idx(VertexId v) { return static_cast<std::size_t>(v - 1); }

}  // namespace

// --- brute force -------------------------------------------------------------

ExactResult wild_brute(const EdgeColoredGraph& g, std::optional<int> cap) {
  ExactResult result;
  result.method = ExactMethod::Brute;

  std::vector<EdgeId> forced;
  if (g.color_count() >= 2) forced = bridges(g);
  std::vector<EdgeId> rest;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (!std::binary_search(forced.begin(), forced.end(), id)) rest.push_back(id);
  }
  const auto base = color_forests(g, WildSet(forced));
  const int limit = cap.value_or(g.edge_count());
  const auto free_count = static_cast<int>(rest.size());

  for (int size = 0; size <= free_count && static_cast<int>(forced.size()) + size <= limit;
       ++size) {
    std::vector<int> pick(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
    for (;;) {
      ++result.nodes_explored;
      bool ok = true;
      for (const DisjointSet& start : base) {
        if (start.set_count() == 1) continue;
        DisjointSet f = start;
        for (int p : pick) {
          const Edge& e = g.edge(rest[static_cast<std::size_t>(p)]);
          f.unite(idx(e.u), idx(e.v));
        }
        if (f.set_count() != 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        std::vector<EdgeId> w = forced;
        for (int p : pick) w.push_back(rest[static_cast<std::size_t>(p)]);
        result.witness = WildSet(std::move(w));
        result.wild = static_cast<int>(result.witness.size());
        return result;
      }
      // Next combination in lexicographic order.
      int i = size - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == free_count - size + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) {
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
  throw Error(ErrorKind::CapExceeded,
              "no color-connecting set of size <= " + std::to_string(limit));
}

// --- branch and bound --------------------------------------------------------

namespace {

class Incumbent {
 public:
  Incumbent(std::vector<EdgeId> seed) : size_(static_cast<int>(seed.size())), set_(std::move(seed)) {}

  int size() const { return size_.load(std::memory_order_relaxed); }

  void offer(const std::vector<EdgeId>& candidate) {
    std::lock_guard lock(mu_);
    if (static_cast<int>(candidate.size()) < size_.load()) {
      set_ = candidate;
      size_.store(static_cast<int>(candidate.size()));
    }
  }

  std::vector<EdgeId> set() const {
    std::lock_guard lock(mu_);
    return set_;
  }

 private:
  mutable std::mutex mu_;
  std::atomic<int> size_;
  std::vector<EdgeId> set_;
};

class BranchAndBound {
 public:
  BranchAndBound(const EdgeColoredGraph& g, Incumbent& incumbent,
                 const std::function<bool()>& should_stop)
      : g_(g), incumbent_(incumbent), should_stop_(should_stop) {
    // A wild edge acts only through its endpoints, so one edge per endpoint
    // pair is enough; keep the smallest id.
    std::map<std::pair<VertexId, VertexId>, EdgeId> by_pair;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
      const Edge& e = g.edge(id);
      by_pair.emplace(std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v)), id);
    }
    for (const auto& [pair, id] : by_pair) candidates_.push_back(id);
    std::sort(candidates_.begin(), candidates_.end());
  }

  const std::vector<EdgeId>& candidates() const { return candidates_; }
  std::uint64_t nodes() const { return nodes_; }

  void run() {
    auto forests = color_forests(g_);
    std::vector<EdgeId> chosen;
    std::vector<char> excluded(static_cast<std::size_t>(g_.edge_count()), 0);
    search(forests, chosen, excluded);
  }

  /// Subproblem: `include` wild, `exclude` never wild.
  void run_subproblem(EdgeId include, std::span<const EdgeId> exclude) {
    auto forests = color_forests(g_, WildSet{include});
    std::vector<EdgeId> chosen{include};
    std::vector<char> excluded(static_cast<std::size_t>(g_.edge_count()), 0);
    for (EdgeId e : exclude) excluded[static_cast<std::size_t>(e)] = 1;
    search(forests, chosen, excluded);
  }

  /// Positive-dip candidates at the root, best first.
  std::vector<EdgeId> root_order() {
    auto forests = color_forests(g_);
    std::vector<std::pair<int, EdgeId>> scored;
    for (EdgeId id : candidates_) {
      const int d = dip(forests, id);
      if (d > 0) scored.emplace_back(-d, id);
    }
    std::sort(scored.begin(), scored.end());
    std::vector<EdgeId> order;
    for (auto [neg, id] : scored) order.push_back(id);
    return order;
  }

 private:
  int dip(std::vector<DisjointSet>& forests, EdgeId id) const {
    const Edge& e = g_.edge(id);
    int d = 0;
    for (auto& f : forests) d += f.same(idx(e.u), idx(e.v)) ? 0 : 1;
    return d;
  }

  void search(std::vector<DisjointSet>& forests, std::vector<EdgeId>& chosen,
              std::vector<char>& excluded) {
    if ((++nodes_ & 1023u) == 0 && should_stop_ && should_stop_()) throw SearchAborted();

    int needed = 0;
    int widest = 0;
    for (const auto& f : forests) {
      const int need = static_cast<int>(f.set_count()) - 1;
      needed += need;
      widest = std::max(widest, need);
    }
    const int current = static_cast<int>(chosen.size());
    if (needed == 0) {
      incumbent_.offer(chosen);
      return;
    }
    if (current + std::max(widest, 1) >= incumbent_.size()) return;

    // Dip numbers only fall as W grows, so the dip bound over the remaining
    // candidates is valid for every completion of this node.
    std::vector<std::pair<int, EdgeId>> live;
    for (EdgeId id : candidates_) {
      if (excluded[static_cast<std::size_t>(id)]) continue;
      const int d = dip(forests, id);
      if (d > 0) live.emplace_back(d, id);
    }
    std::vector<int> dips;
    dips.reserve(live.size());
    for (auto [d, id] : live) dips.push_back(d);
    std::sort(dips.begin(), dips.end(), std::greater<>());
    const auto bound = prefix_bound(dips, needed);
    if (!bound || current + std::max(*bound, widest) >= incumbent_.size()) return;

    // Every color must still be completable from the remaining candidates.
    for (const auto& start : forests) {
      if (start.set_count() == 1) continue;
      DisjointSet f = start;
      for (auto [d, id] : live) {
        const Edge& e = g_.edge(id);
        f.unite(idx(e.u), idx(e.v));
      }
      if (f.set_count() != 1) return;
    }

    EdgeId branch = live.front().second;
    int best_dip = live.front().first;
    for (auto [d, id] : live) {
      if (d > best_dip) {
        best_dip = d;
        branch = id;
      }
    }

    {
      auto next = forests;
      const Edge& e = g_.edge(branch);
      for (auto& f : next) f.unite(idx(e.u), idx(e.v));
      chosen.push_back(branch);
      search(next, chosen, excluded);
      chosen.pop_back();
    }
    excluded[static_cast<std::size_t>(branch)] = 1;
    search(forests, chosen, excluded);
    excluded[static_cast<std::size_t>(branch)] = 0;
  }

  const EdgeColoredGraph& g_;
  Incumbent& incumbent_;
  const std::function<bool()>& should_stop_;
  std::vector<EdgeId> candidates_;
  std::uint64_t nodes_ = 0;
};

ExactResult branch_and_bound(const EdgeColoredGraph& g, const ExactOptions& options) {
  Incumbent incumbent(greedy_wild_set(g).wild.ids());
  ExactResult result;
  result.method = ExactMethod::BranchBound;

  BranchAndBound root(g, incumbent, options.should_stop);
  if (options.threads <= 1) {
    root.run();
    result.nodes_explored = root.nodes();
  } else {
    // Split the root into disjoint subproblems: include the j-th candidate
    // and exclude every earlier one. Together they cover all nonempty sets;
    // the empty set is not color-connecting here or greedy would be empty.
    const auto order = root.root_order();
    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> nodes{0};
    std::mutex error_mu;
    std::exception_ptr error;
    {
      std::vector<std::jthread> workers;
      for (int t = 0; t < options.threads; ++t) {
        workers.emplace_back([&] {
          BranchAndBound local(g, incumbent, options.should_stop);
          try {
            for (std::size_t j = next++; j < order.size(); j = next++) {
              local.run_subproblem(order[j], std::span(order).first(j));
            }
          } catch (...) {
            std::lock_guard lock(error_mu);
            if (!error) error = std::current_exception();
            next = order.size();
          }
          nodes += local.nodes();
        });
      }
    }
    if (error) std::rethrow_exception(error);
    result.nodes_explored = nodes.load();
  }
  result.witness = WildSet(incumbent.set());
  result.wild = static_cast<int>(result.witness.size());
  return result;
}

std::optional<ExactResult> shortcut(const EdgeColoredGraph& g) {
  ExactResult r;
  r.method = ExactMethod::Shortcut;
  if (g.vertex_count() == 1 || g.color_count() <= 1) return r;
  if (!g.is_surjective()) {
    r.witness = spanning_tree(g);
    r.wild = static_cast<int>(r.witness.size());
    return r;
  }
  if (g.color_count() == 2) {
    // Each wild edge helps at most the one other color, so the union of
    // per-color connecting forests is optimal.
    std::vector<EdgeId> w;
    auto forests = color_forests(g);
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
      const Edge& e = g.edge(id);
      // Own-color edges are already inside their forest, so unite() is false.
      for (auto& f : forests) {
        if (f.unite(idx(e.u), idx(e.v))) w.push_back(id);
      }
    }
    r.witness = WildSet(std::move(w));
    r.wild = static_cast<int>(r.witness.size());
    return r;
  }
  return std::nullopt;
}

}  // namespace

ExactResult wild_exact(const EdgeColoredGraph& g, const ExactOptions& options) {
  if (options.shortcuts) {
    if (auto r = shortcut(g)) return *r;
  }
  if (g.vertex_count() == 1) return ExactResult{0, {}, ExactMethod::Shortcut, 0};

  if (options.decompose) {
    const auto parts = blocks(g);
    if (parts.size() > 1) {
      ExactResult total;
      total.method = ExactMethod::Blocks;
      std::vector<EdgeId> witness;
      ExactOptions inner = options;
      inner.decompose = false;
      for (const Block& block : parts) {
        if (block.edges.size() == 1) {
          // A bridge: every other color needs it.
          if (g.color_count() >= 2) witness.push_back(block.edges.front());
          continue;
        }
        const auto sub = induced_by_edges(g, block.edges);
        const auto r = wild_exact(sub, inner);
        total.nodes_explored += r.nodes_explored;
        for (EdgeId local : r.witness) {
          witness.push_back(block.edges[static_cast<std::size_t>(local)]);
        }
      }
      total.witness = WildSet(std::move(witness));
      total.wild = static_cast<int>(total.witness.size());
      return total;
    }
  }
  return branch_and_bound(g, options);
}

bool decide_k_wild(const EdgeColoredGraph& g, int k, const ExactOptions& options) {
  if (k < 0) return false;
  if (k >= g.vertex_count() - 1) return true;
  if (component_lower_bound(g) > k) return false;
  if (const auto dlb = dip_lower_bound(g); !dlb || *dlb > k) return false;
  if (static_cast<int>(greedy_wild_set(g).wild.size()) <= k) return true;
  return wild_exact(g, options).wild <= k;
}

}  // namespace wildnum
