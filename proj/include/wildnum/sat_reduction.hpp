#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wildnum/exact.hpp"
#include "wildnum/graph.hpp"

namespace wildnum {

struct Literal {
  int var = 1;  // 1-based
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

/// A formula in S(l,k): l distinct 3-literal clauses over k variables, no
/// clause holding a variable and its negation, every variable used.
struct CnfFormula {
  int k = 0;
  std::vector<Clause> clauses;

  int clause_count() const { return static_cast<int>(clauses.size()); }
  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Truth values indexed by variable - 1.
using Assignment = std::vector<bool>;

/// Throws NotThreeSat, DuplicateClause, TautologicalClause, UnusedVariable or
/// SyntaxError (no clauses, variable out of range).
void validate(const CnfFormula& f);

/// DIMACS CNF: `c` comments, `p cnf <vars> <clauses>`, zero-terminated
/// clauses. The result is validated.
CnfFormula parse_dimacs(std::string_view text);
std::string to_dimacs(const CnfFormula& f);

bool evaluate(const CnfFormula& f, const Assignment& a);

/// Every satisfying assignment, by truth table (k <= 24).
std::vector<Assignment> satisfying_assignments(const CnfFormula& f);
bool satisfiable(const CnfFormula& f);

/// Uniform over formulas in S(l,k) built from l distinct random clauses;
/// resamples until every variable is used. Needs k >= 3 and l no larger
/// than the number of possible clauses.
CnfFormula random_formula(int clauses, int k, std::uint64_t seed);

// --- gadget ------------------------------------------------------------------

enum class VertexRole { Clause, PositiveLiteral, NegativeLiteral, Helper, Root };
enum class EdgeType { A, B, C, D, E };

char to_char(EdgeType t);

struct VertexInfo {
  VertexRole role = VertexRole::Root;
  int index = 0;  // clause or variable number, 1-based; 0 for the root
};

struct GadgetGraph {
  CnfFormula formula;
  EdgeColoredGraph graph;
  std::vector<VertexInfo> vertex_roles;  // indexed by vertex id - 1
  std::vector<EdgeType> edge_types;      // indexed by edge id
};

// Vertex layout: C_1..C_l, then x_j, not-x_j, y_j for each j, then z.
VertexId clause_vertex(int i);
VertexId literal_vertex(int clauses, Literal lit);
VertexId helper_vertex(int clauses, int j);
VertexId root_vertex(int clauses, int k);

std::string vertex_name(const GadgetGraph& gg, VertexId v);

GadgetGraph build_gadget(const CnfFormula& f);

struct GadgetCheck {
  bool ok = true;
  std::string failure;  // first violation, empty when ok

  explicit operator bool() const { return ok; }
};

/// Component structure of every color: two parts {C_i, its literals} and the
/// rest for clause colors; {y_1},...,{y_k} and the rest for color l+1; one
/// part for color l+2.
GadgetCheck verify_gadget(const GadgetGraph& gg);

/// {y_j u_j} in the last color, u_j the true literal of x_j. Throws
/// UnsatisfyingAssignment.
WildSet assignment_to_wild_set(const GadgetGraph& gg, const Assignment& a);

/// Reads u_j off the y_j edge of w after moving each edge to its parallel copy
/// in the last color. Throws NotColorConnecting, WrongSize or MissingPairEdge.
Assignment wild_set_to_assignment(const GadgetGraph& gg, const WildSet& w);

struct ReductionCheck {
  bool satisfiable = false;
  int wild = 0;
  int k = 0;
  /// satisfiable == (wild == k)
  bool holds = false;
};

ReductionCheck reduction_theorem_check(const CnfFormula& f, const ExactOptions& options = {});

}  // namespace wildnum
