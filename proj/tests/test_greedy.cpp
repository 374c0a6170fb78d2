#include <doctest.h>

#include "oracles.hpp"
#include "wildnum/bounds.hpp"
#include "wildnum/families.hpp"
#include "wildnum/greedy.hpp"

using namespace wildnum;

namespace {

EdgeColoredGraph named(const std::string& family, std::vector<int> params = {}) {
  return generate({family, std::move(params)});
}

}  // namespace

TEST_CASE("potentials on the prism") {
  const auto prism = named("prism");
  const auto q = identity_quotient(prism);
  CHECK(potential(q, oracle::edge_id(prism, 5, 6)).to_string() == "2^(5),1^(1),0^(3)");
  CHECK(potential(q, oracle::edge_id(prism, 1, 2)).to_string() == "2^(3),1^(5),0^(1)");
  CHECK(potential(q, oracle::edge_id(prism, 2, 5)).to_string() == "2^(4),1^(4),0^(1)");
  CHECK_THROWS_AS(potential(q, 42), Error);
}

TEST_CASE("potential on the wheel core") {
  const auto core = named("wheel-core");
  const auto p = potential(identity_quotient(core), oracle::edge_id(core, 2, 3));
  CHECK(p.values() == std::vector<int>{3, 2, 2, 2, 0});
}

TEST_CASE("greedy on the prism picks v5v6, v1v2, v3v6") {
  const auto prism = named("prism");
  const auto r = greedy_wild_set(prism);
  CHECK(r.wild.size() == 3);
  CHECK(r.trace.chosen ==
        std::vector<EdgeId>{oracle::edge_id(prism, 5, 6), oracle::edge_id(prism, 1, 2),
                            oracle::edge_id(prism, 3, 6)});
  REQUIRE(r.trace.steps.size() == 3);
  CHECK(r.trace.steps[0].candidates.size() == 6);
  CHECK(r.trace.steps[2].candidates.size() == 1);
  // Step 2: four edges share the best potential and the smallest id wins.
  const auto& step2 = r.trace.steps[1];
  int best = 0;
  for (const auto& c : step2.candidates) {
    if (c.potential == step2.candidates.front().potential) ++best;
  }
  CHECK(best == 4);
  CHECK(is_color_connected(prism, r.wild));
}

TEST_CASE("greedy on the wheel") {
  const auto wheel = named("wheel");
  const auto r = greedy_wild_set(wheel);
  // hub v0 = 1, rim vi = i + 1
  CHECK(r.trace.chosen == std::vector<EdgeId>{oracle::edge_id(wheel, 2, 8),
                                              oracle::edge_id(wheel, 3, 4),
                                              oracle::edge_id(wheel, 5, 6),
                                              oracle::edge_id(wheel, 6, 7),
                                              oracle::edge_id(wheel, 7, 8),
                                              oracle::edge_id(wheel, 1, 5)});
}

TEST_CASE("greedy on a single-color graph is empty") {
  const auto r = greedy_wild_set(named("cycle", {5, 1}));
  CHECK(r.wild.empty());
  CHECK(r.trace.steps.empty());
}

TEST_CASE("greedy invariants on random graphs") {
  int checked = 0;
  for (std::uint64_t seed = 1; checked < 150; ++seed) {
    const int n = 2 + static_cast<int>(seed % 7);
    const int m = std::min(n - 1 + static_cast<int>(seed % 6), 12);
    const int colors = 1 + static_cast<int>((seed / 2) % 4);
    if (colors > m) continue;
    const auto g = random_graph(n, m, colors, seed * 104729, seed % 2 == 0 && m <= n * (n - 1) / 2);
    CAPTURE(seed);
    ++checked;

    const auto r = greedy_wild_set(g);
    CHECK(is_color_connected(g, r.wild));
    CHECK(r.wild.size() == r.trace.chosen.size());
    CHECK(static_cast<int>(r.trace.chosen.size()) <= n - 1);
    for (const auto& step : r.trace.steps) CHECK(step.max_dip >= 1);
    CHECK(static_cast<int>(r.wild.size()) >= oracle::wild(g));
    if (colors == 2 && g.is_surjective()) {
      CHECK(static_cast<int>(r.wild.size()) == component_upper_bound(g));
    }

    const auto again = greedy_wild_set(g);
    CHECK(again.trace.chosen == r.trace.chosen);

    // Each pick has maximal dip and a potential no smaller than any rival's.
    for (const auto& step : r.trace.steps) {
      const GreedyCandidate* picked = nullptr;
      for (const auto& c : step.candidates) {
        if (c.edge == step.selected) picked = &c;
        CHECK(step.dips[static_cast<std::size_t>(c.edge)] == step.max_dip);
      }
      REQUIRE(picked != nullptr);
      for (const auto& c : step.candidates) {
        CHECK(picked->potential >= c.potential);
        if (c.potential == picked->potential) CHECK(picked->edge <= c.edge);
      }
    }
  }
}
