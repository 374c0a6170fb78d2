#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "wildnum/sat_reduction.hpp"

using namespace wildnum;

namespace {

const char* kExample = R"(c three clauses over four variables
p cnf 4 3
1 -2 4 0
-1 3 -4 0
-2 3 4 0
)";

ErrorKind parse_error(const std::string& text) {
  try {
    parse_dimacs(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("parsed");
  return ErrorKind::SyntaxError;
}

// Vertex name -> id for the sample formula (l = 3, k = 4).
VertexId v(const GadgetGraph& gg, const std::string& name) {
  for (VertexId x = 1; x <= gg.graph.vertex_count(); ++x) {
    if (vertex_name(gg, x) == name) return x;
  }
  throw std::invalid_argument(name);
}

std::vector<std::pair<VertexId, VertexId>> color_edges(const GadgetGraph& gg, ColorId c,
                                                       EdgeType t) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (EdgeId id = 0; id < gg.graph.edge_count(); ++id) {
    const Edge& e = gg.graph.edge(id);
    if (e.color == c && gg.edge_types[static_cast<std::size_t>(id)] == t) {
      out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<VertexId, VertexId> pair_of(VertexId a, VertexId b) {
  return {std::min(a, b), std::max(a, b)};
}

}  // namespace

TEST_CASE("parse the sample formula") {
  const auto f = parse_dimacs(kExample);
  CHECK(f.k == 4);
  REQUIRE(f.clause_count() == 3);
  CHECK(f.clauses[0] == Clause{Literal{1, true}, Literal{2, false}, Literal{4, true}});
  CHECK(f.clauses[2] == Clause{Literal{2, false}, Literal{3, true}, Literal{4, true}});
  CHECK(parse_dimacs(to_dimacs(f)) == f);
}

TEST_CASE("parse errors") {
  CHECK(parse_error("p cnf 3 1\n1 -1 2 0\n") == ErrorKind::TautologicalClause);
  CHECK(parse_error("p cnf 3 2\n1 2 3 0\n3 2 1 0\n") == ErrorKind::DuplicateClause);
  CHECK(parse_error("p cnf 4 1\n1 2 3 0\n") == ErrorKind::UnusedVariable);
  CHECK(parse_error("p cnf 4 1\n1 2 3 4 0\n") == ErrorKind::NotThreeSat);
  CHECK(parse_error("p cnf 3 1\n1 2 0\n") == ErrorKind::NotThreeSat);
  CHECK(parse_error("p cnf 3 1\n1 1 2 0\n") == ErrorKind::NotThreeSat);
  CHECK(parse_error("p cnf 3 1\n1 x 2 0\n") == ErrorKind::SyntaxError);
  CHECK(parse_error("p cnf 3 0\n") == ErrorKind::SyntaxError);
  CHECK(parse_error("p cnf 3 2\n1 2 3 0\n") == ErrorKind::SyntaxError);
  CHECK(parse_error("1 2 3 0\n") == ErrorKind::SyntaxError);
  CHECK(parse_error("p cnf 3 1\n1 2 5 0\n") == ErrorKind::SyntaxError);
  // Clauses may span lines.
  CHECK(parse_dimacs("p cnf 3 1\n1 2\n3 0\n").clause_count() == 1);
}

TEST_CASE("truth tables") {
  const auto f = parse_dimacs(kExample);
  CHECK(evaluate(f, {true, false, true, true}));
  CHECK(satisfiable(f));
  CnfFormula all8;
  all8.k = 3;
  for (int mask = 0; mask < 8; ++mask) {
    all8.clauses.push_back(
        {Literal{1, (mask & 1) != 0}, Literal{2, (mask & 2) != 0}, Literal{3, (mask & 4) != 0}});
  }
  validate(all8);
  CHECK_FALSE(satisfiable(all8));
  all8.clauses.pop_back();
  CHECK(satisfying_assignments(all8).size() == 1);
}

TEST_CASE("gadget of the sample formula") {
  const auto gg = build_gadget(parse_dimacs(kExample));
  CHECK(gg.graph.vertex_count() == 16);
  CHECK(gg.graph.color_count() == 5);
  CHECK(kappa_vector(gg.graph) == std::vector<int>{2, 2, 2, 5, 1});

  const auto usage = gg.graph.color_usage();
  CHECK(usage[3] == 17);
  CHECK(usage[4] == 25);

  // Color c1: type (a), (b), (c) edge lists.
  auto expect = [&](std::vector<std::pair<std::string, std::string>> names) {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (auto& [a, b] : names) out.push_back(pair_of(v(gg, a), v(gg, b)));
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(color_edges(gg, 0, EdgeType::A) == expect({{"C1", "x1"}, {"C1", "~x2"}, {"C1", "x4"}}));
  CHECK(color_edges(gg, 0, EdgeType::B) ==
        expect({{"y1", "~x1"}, {"y2", "x2"}, {"y3", "x3"}, {"y3", "~x3"}, {"y4", "~x4"},
                {"z", "~x1"}, {"z", "x2"}, {"z", "x3"}, {"z", "~x3"}, {"z", "~x4"}}));
  CHECK(color_edges(gg, 0, EdgeType::C) ==
        expect({{"C2", "~x1"}, {"C2", "x3"}, {"C2", "~x4"}, {"C3", "x3"}}));
  CHECK(color_edges(gg, 2, EdgeType::C) == expect({{"C1", "x1"}, {"C2", "~x1"}, {"C2", "~x4"}}));

  CHECK(verify_gadget(gg));
}

TEST_CASE("vertex layout") {
  CHECK(clause_vertex(2) == 2);
  CHECK(literal_vertex(3, {1, true}) == 4);
  CHECK(literal_vertex(3, {1, false}) == 5);
  CHECK(helper_vertex(3, 1) == 6);
  CHECK(literal_vertex(3, {4, false}) == 14);
  CHECK(root_vertex(3, 4) == 16);
}

TEST_CASE("verify_gadget notices a missing edge") {
  const auto gg = build_gadget(parse_dimacs(kExample));
  // y2-x2 in c1 is y2's only c1 edge since ~x2 is in C1.
  const VertexId y2 = v(gg, "y2");
  const VertexId x2 = v(gg, "x2");
  std::vector<Edge> edges;
  std::vector<EdgeType> types;
  bool removed = false;
  for (EdgeId id = 0; id < gg.graph.edge_count(); ++id) {
    const Edge& e = gg.graph.edge(id);
    if (!removed && e.color == 0 && pair_of(e.u, e.v) == pair_of(y2, x2)) {
      removed = true;
      continue;
    }
    edges.push_back(e);
    types.push_back(gg.edge_types[static_cast<std::size_t>(id)]);
  }
  REQUIRE(removed);
  GadgetGraph broken{gg.formula, EdgeColoredGraph::build(16, gg.graph.palette(), edges),
                     gg.vertex_roles, types};
  const auto check = verify_gadget(broken);
  CHECK_FALSE(check.ok);
  CHECK(check.failure.find("c1") != std::string::npos);
}

TEST_CASE("smallest formula") {
  CnfFormula f;
  f.k = 3;
  f.clauses.push_back({Literal{1, true}, Literal{2, true}, Literal{3, true}});
  const auto gg = build_gadget(f);
  CHECK(verify_gadget(gg));
  const auto w = assignment_to_wild_set(gg, {true, false, false});
  CHECK(w.size() == 3);
  CHECK(is_color_connected(gg.graph, w));
  const auto r = reduction_theorem_check(f);
  CHECK(r.satisfiable);
  CHECK(r.wild == 3);
  CHECK(r.holds);
}

TEST_CASE("assignments and wild sets") {
  const auto f = parse_dimacs(kExample);
  const auto gg = build_gadget(f);
  const Assignment a{true, false, true, true};
  const auto w = assignment_to_wild_set(gg, a);
  CHECK(w.size() == 4);
  CHECK(is_color_connected(gg.graph, w));
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (EdgeId id : w) {
    const Edge& e = gg.graph.edge(id);
    CHECK(e.color == 4);
    pairs.push_back(pair_of(e.u, e.v));
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<std::pair<VertexId, VertexId>> expected{pair_of(v(gg, "y1"), v(gg, "x1")),
                                                      pair_of(v(gg, "y2"), v(gg, "~x2")),
                                                      pair_of(v(gg, "y3"), v(gg, "x3")),
                                                      pair_of(v(gg, "y4"), v(gg, "x4"))};
  std::sort(expected.begin(), expected.end());
  CHECK(pairs == expected);
  CHECK(wild_set_to_assignment(gg, w) == a);

  // x1 = F, x2 = T, x4 = F falsifies C1.
  CHECK_THROWS_AS(assignment_to_wild_set(gg, {false, true, true, false}), Error);

  auto kind = [&](const WildSet& ws) {
    try {
      wild_set_to_assignment(gg, ws);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::SyntaxError;
  };
  CHECK(kind({}) == ErrorKind::NotColorConnecting);
  WildSet bigger = w;
  bigger.insert(0);
  CHECK(kind(bigger) == ErrorKind::WrongSize);

  // The same set expressed through other parallel copies maps back the same.
  WildSet moved;
  for (EdgeId id : w) {
    const Edge& e = gg.graph.edge(id);
    for (EdgeId other = 0; other < gg.graph.edge_count(); ++other) {
      const Edge& o = gg.graph.edge(other);
      if (pair_of(o.u, o.v) == pair_of(e.u, e.v)) {
        moved.insert(other);
        break;
      }
    }
  }
  CHECK_FALSE(moved == w);
  CHECK(wild_set_to_assignment(gg, moved) == a);
}

TEST_CASE("reduction on the sample formula") {
  const auto r = reduction_theorem_check(parse_dimacs(kExample));
  CHECK(r.satisfiable);
  CHECK(r.wild == 4);
  CHECK(r.holds);
}

TEST_CASE("an unsatisfiable formula needs more than k wild edges") {
  CnfFormula all8;
  all8.k = 3;
  for (int mask = 0; mask < 8; ++mask) {
    all8.clauses.push_back(
        {Literal{1, (mask & 1) != 0}, Literal{2, (mask & 2) != 0}, Literal{3, (mask & 4) != 0}});
  }
  const auto r = reduction_theorem_check(all8);
  CHECK_FALSE(r.satisfiable);
  CHECK(r.wild > 3);
  CHECK(r.holds);
}

TEST_CASE("random formulas") {
  const auto a = random_formula(4, 4, 7);
  CHECK(a == random_formula(4, 4, 7));
  validate(a);
  CHECK_THROWS_AS(random_formula(1, 2, 1), Error);
  CHECK_THROWS_AS(random_formula(9, 3, 1), Error);
  CHECK_THROWS_AS(random_formula(1, 4, 1), Error);
}

TEST_CASE("gadget invariants over random formulas") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const int k = 3 + static_cast<int>(seed % 4);
    const int l = std::max(1 + static_cast<int>((seed / 4) % 6), (k + 2) / 3);
    const auto f = random_formula(l, k, seed);
    CAPTURE(seed);
    const auto gg = build_gadget(f);
    CHECK(verify_gadget(gg));
    CHECK(gg.graph.vertex_count() == l + 3 * k + 1);

    // Each literal of C_i meets exactly one c_i edge, the one to C_i.
    for (int i = 1; i <= l; ++i) {
      for (Literal lit : f.clauses[static_cast<std::size_t>(i - 1)]) {
        const VertexId u = literal_vertex(l, lit);
        std::vector<VertexId> others;
        for (const Edge& e : gg.graph.edges()) {
          if (e.color == i - 1 && (e.u == u || e.v == u)) others.push_back(e.u == u ? e.v : e.u);
        }
        CHECK(others == std::vector<VertexId>{clause_vertex(i)});
      }
    }

    // Permuting clauses permutes colors and keeps the kappa vector.
    auto shuffled = f;
    std::mt19937_64 rng(seed);
    std::shuffle(shuffled.clauses.begin(), shuffled.clauses.end(), rng);
    CHECK(kappa_vector(build_gadget(shuffled).graph) == kappa_vector(gg.graph));

    // Round trip.
    for (const auto& a : satisfying_assignments(f)) {
      const auto w = assignment_to_wild_set(gg, a);
      CHECK(evaluate(f, wild_set_to_assignment(gg, w)));
    }
  }
}
