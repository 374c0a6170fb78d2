#include "wildnum/sat_reduction.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace wildnum {

namespace {

std::set<Literal> literal_set(const Clause& c) { return {c.begin(), c.end()}; }

bool contains(const Clause& c, Literal lit) {
  return std::find(c.begin(), c.end(), lit) != c.end();
}

Literal negate(Literal lit) { return {lit.var, !lit.positive}; }

}  // namespace

void validate(const CnfFormula& f) {
  if (f.clauses.empty()) throw Error(ErrorKind::SyntaxError, "formula has no clauses");
  if (f.k < 1) throw Error(ErrorKind::SyntaxError, "formula has no variables");
  std::set<std::set<Literal>> seen;
  std::vector<bool> used(static_cast<std::size_t>(f.k), false);
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    const Clause& c = f.clauses[i];
    const std::string where = "clause " + std::to_string(i + 1);
    for (Literal lit : c) {
      if (lit.var < 1 || lit.var > f.k) {
        throw Error(ErrorKind::SyntaxError,
                    where + ": variable " + std::to_string(lit.var) + " out of range");
      }
      used[static_cast<std::size_t>(lit.var - 1)] = true;
    }
    const auto lits = literal_set(c);
    if (lits.size() != 3) throw Error(ErrorKind::NotThreeSat, where + ": repeated literal");
    for (Literal lit : c) {
      if (lits.count(negate(lit))) {
        throw Error(ErrorKind::TautologicalClause,
                    where + ": contains variable " + std::to_string(lit.var) +
                        " and its negation");
      }
    }
    if (!seen.insert(lits).second) {
      throw Error(ErrorKind::DuplicateClause, where + ": repeats an earlier clause");
    }
  }
  for (int j = 1; j <= f.k; ++j) {
    if (!used[static_cast<std::size_t>(j - 1)]) {
      throw Error(ErrorKind::UnusedVariable, "variable " + std::to_string(j) + " is unused");
    }
  }
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int declared_vars = 0;
  int declared_clauses = 0;
  CnfFormula f;
  std::vector<int> pending;

  auto fail = [&](const std::string& msg) {
    throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line_no) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::string first;
    if (!(words >> first)) continue;
    if (first == "c") continue;
    if (first == "%") break;  // SATLIB trailer
    if (first == "p") {
      std::string format;
      if (have_header) fail("second header");
      if (!(words >> format >> declared_vars >> declared_clauses) || format != "cnf") {
        fail("expected 'p cnf <vars> <clauses>'");
      }
      if (declared_vars < 0 || declared_clauses < 0) fail("negative count in header");
      have_header = true;
      f.k = declared_vars;
      continue;
    }
    if (!have_header) fail("clause before header");
    words.clear();
    words.str(line);
    std::string token;
    while (words >> token) {
      int value = 0;
      try {
        std::size_t used = 0;
        value = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        fail("bad literal '" + token + "'");
      }
      if (value != 0) {
        if (std::abs(value) > declared_vars) {
          fail("variable " + std::to_string(std::abs(value)) + " exceeds header");
        }
        pending.push_back(value);
        continue;
      }
      if (pending.size() != 3) {
        throw Error(ErrorKind::NotThreeSat, "line " + std::to_string(line_no) + ": clause has " +
                                                std::to_string(pending.size()) + " literals");
      }
      Clause c;
      for (std::size_t i = 0; i < 3; ++i) c[i] = Literal{std::abs(pending[i]), pending[i] > 0};
      f.clauses.push_back(c);
      pending.clear();
    }
  }
  if (!have_header) throw Error(ErrorKind::SyntaxError, "missing 'p cnf' header");
  if (!pending.empty()) throw Error(ErrorKind::SyntaxError, "last clause is not terminated by 0");
  if (f.clause_count() != declared_clauses) {
    throw Error(ErrorKind::SyntaxError, "header declares " + std::to_string(declared_clauses) +
                                            " clauses, found " +
                                            std::to_string(f.clause_count()));
  }
  validate(f);
  return f;
}

std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.k << ' ' << f.clause_count() << '\n';
  for (const Clause& c : f.clauses) {
    for (Literal lit : c) out << (lit.positive ? lit.var : -lit.var) << ' ';
    out << "0\n";
  }
  return out.str();
}

bool evaluate(const CnfFormula& f, const Assignment& a) {
  return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) {
    return std::any_of(c.begin(), c.end(), [&](Literal lit) {
      return a.at(static_cast<std::size_t>(lit.var - 1)) == lit.positive;
    });
  });
}

std::vector<Assignment> satisfying_assignments(const CnfFormula& f) {
  if (f.k > 24) throw Error(ErrorKind::BadDescriptor, "truth table limited to 24 variables");
  std::vector<Assignment> out;
  Assignment a(static_cast<std::size_t>(f.k));
  for (std::uint32_t bits = 0; bits < (1u << f.k); ++bits) {
    for (int j = 0; j < f.k; ++j) a[static_cast<std::size_t>(j)] = (bits >> j) & 1u;
    if (evaluate(f, a)) out.push_back(a);
  }
  return out;
}

bool satisfiable(const CnfFormula& f) { return !satisfying_assignments(f).empty(); }

CnfFormula random_formula(int clauses, int k, std::uint64_t seed) {
  if (k < 3) throw Error(ErrorKind::BadDescriptor, "3-literal clauses need k >= 3");
  const long possible = static_cast<long>(k) * (k - 1) * (k - 2) / 6 * 8;
  if (clauses < 1 || clauses > possible) {
    throw Error(ErrorKind::BadDescriptor, "cannot draw " + std::to_string(clauses) +
                                              " distinct clauses over " + std::to_string(k) +
                                              " variables");
  }
  // Every variable must appear, so 3 * clauses >= k.
  if (3 * clauses < k) {
    throw Error(ErrorKind::BadDescriptor, "too few clauses to use every variable");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> var(1, k);
  std::bernoulli_distribution sign(0.5);
  for (;;) {
    CnfFormula f;
    f.k = k;
    std::set<std::set<Literal>> seen;
    while (f.clause_count() < clauses) {
      std::set<int> vars;
      while (vars.size() < 3) vars.insert(var(rng));
      Clause c;
      std::size_t i = 0;
      for (int v : vars) c[i++] = Literal{v, sign(rng)};
      std::shuffle(c.begin(), c.end(), rng);
      if (seen.insert(literal_set(c)).second) f.clauses.push_back(c);
    }
    std::set<int> used;
    for (const Clause& c : f.clauses) {
      for (Literal lit : c) used.insert(lit.var);
    }
    if (static_cast<int>(used.size()) == k) return f;
  }
}

// --- gadget ------------------------------------------------------------------

char to_char(EdgeType t) { return static_cast<char>('a' + static_cast<int>(t)); }

VertexId clause_vertex(int i) { return i; }

VertexId literal_vertex(int clauses, Literal lit) {
  return clauses + 3 * (lit.var - 1) + (lit.positive ? 1 : 2);
}

VertexId helper_vertex(int clauses, int j) { return clauses + 3 * (j - 1) + 3; }

VertexId root_vertex(int clauses, int k) { return clauses + 3 * k + 1; }

std::string vertex_name(const GadgetGraph& gg, VertexId v) {
  const VertexInfo& info = gg.vertex_roles.at(static_cast<std::size_t>(v - 1));
  const std::string n = std::to_string(info.index);
  switch (info.role) {
    case VertexRole::Clause: return "C" + n;
    case VertexRole::PositiveLiteral: return "x" + n;
    case VertexRole::NegativeLiteral: return "~x" + n;
    case VertexRole::Helper: return "y" + n;
    case VertexRole::Root: return "z";
  }
  return "?";
}

GadgetGraph build_gadget(const CnfFormula& f) {
  validate(f);
  const int l = f.clause_count();
  const int k = f.k;
  const VertexId z = root_vertex(l, k);

  std::vector<VertexInfo> roles(static_cast<std::size_t>(z));
  for (int i = 1; i <= l; ++i) roles[static_cast<std::size_t>(i - 1)] = {VertexRole::Clause, i};
  for (int j = 1; j <= k; ++j) {
    roles[static_cast<std::size_t>(literal_vertex(l, {j, true}) - 1)] = {
        VertexRole::PositiveLiteral, j};
    roles[static_cast<std::size_t>(literal_vertex(l, {j, false}) - 1)] = {
        VertexRole::NegativeLiteral, j};
    roles[static_cast<std::size_t>(helper_vertex(l, j) - 1)] = {VertexRole::Helper, j};
  }
  roles[static_cast<std::size_t>(z - 1)] = {VertexRole::Root, 0};

  std::vector<std::string> palette;
  for (int c = 1; c <= l + 2; ++c) palette.push_back("c" + std::to_string(c));

  std::vector<Edge> edges;
  std::vector<EdgeType> types;
  auto add = [&](VertexId u, VertexId v, ColorId color, EdgeType t) {
    edges.push_back({u, v, color});
    types.push_back(t);
  };

  std::vector<Literal> all_literals;
  for (int j = 1; j <= k; ++j) {
    all_literals.push_back({j, true});
    all_literals.push_back({j, false});
  }

  for (int i = 1; i <= l; ++i) {
    const Clause& ci = f.clauses[static_cast<std::size_t>(i - 1)];
    const ColorId color = i - 1;
    for (Literal lit : ci) add(clause_vertex(i), literal_vertex(l, lit), color, EdgeType::A);
    for (Literal lit : all_literals) {
      if (contains(ci, lit)) continue;
      add(helper_vertex(l, lit.var), literal_vertex(l, lit), color, EdgeType::B);
      add(z, literal_vertex(l, lit), color, EdgeType::B);
    }
    for (int other = 1; other <= l; ++other) {
      if (other == i) continue;
      for (Literal lit : f.clauses[static_cast<std::size_t>(other - 1)]) {
        if (!contains(ci, lit)) add(clause_vertex(other), literal_vertex(l, lit), color, EdgeType::C);
      }
    }
  }

  for (ColorId color : {l, l + 1}) {
    const EdgeType t = color == l ? EdgeType::D : EdgeType::E;
    for (int i = 1; i <= l; ++i) {
      for (Literal lit : f.clauses[static_cast<std::size_t>(i - 1)]) {
        add(clause_vertex(i), literal_vertex(l, lit), color, t);
      }
    }
    for (Literal lit : all_literals) add(z, literal_vertex(l, lit), color, t);
    if (t == EdgeType::E) {
      for (Literal lit : all_literals) add(helper_vertex(l, lit.var), literal_vertex(l, lit), color, t);
    }
  }

  return GadgetGraph{f, EdgeColoredGraph::build(z, std::move(palette), std::move(edges)),
                     std::move(roles), std::move(types)};
}

GadgetCheck verify_gadget(const GadgetGraph& gg) {
  const CnfFormula& f = gg.formula;
  const int l = f.clause_count();
  const int k = f.k;
  const int n = root_vertex(l, k);
  const EdgeColoredGraph& g = gg.graph;

  if (g.vertex_count() != n) {
    return {false, "expected " + std::to_string(n) + " vertices, found " +
                       std::to_string(g.vertex_count())};
  }
  if (g.color_count() != l + 2) {
    return {false, "expected " + std::to_string(l + 2) + " colors, found " +
                       std::to_string(g.color_count())};
  }

  // Two-part check: `inside` must be one component and the rest another.
  auto two_parts = [&](ColorId color, const std::vector<VertexId>& inside) -> GadgetCheck {
    const Partition p = mono_components(g, color);
    const std::string name = g.palette()[static_cast<std::size_t>(color)];
    if (p.count != 2) {
      return {false, "color " + name + " has " + std::to_string(p.count) + " components, expected 2"};
    }
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    for (VertexId v : inside) in[static_cast<std::size_t>(v - 1)] = true;
    const int side = p.label[static_cast<std::size_t>(inside.front() - 1)];
    for (VertexId v = 1; v <= n; ++v) {
      if ((p.label[static_cast<std::size_t>(v - 1)] == side) != in[static_cast<std::size_t>(v - 1)]) {
        return {false, "color " + name + ": vertex " + vertex_name(gg, v) +
                           " is on the wrong side of the clause component"};
      }
    }
    return {};
  };

  for (int i = 1; i <= l; ++i) {
    std::vector<VertexId> inside{clause_vertex(i)};
    for (Literal lit : f.clauses[static_cast<std::size_t>(i - 1)]) {
      inside.push_back(literal_vertex(l, lit));
    }
    if (auto r = two_parts(i - 1, inside); !r) return r;
  }

  {
    const Partition p = mono_components(g, l);
    const std::string name = g.palette()[static_cast<std::size_t>(l)];
    if (p.count != k + 1) {
      return {false, "color " + name + " has " + std::to_string(p.count) + " components, expected " +
                         std::to_string(k + 1)};
    }
    const int rest = p.label[static_cast<std::size_t>(root_vertex(l, k) - 1)];
    for (VertexId v = 1; v <= n; ++v) {
      const bool helper = gg.vertex_roles[static_cast<std::size_t>(v - 1)].role == VertexRole::Helper;
      if (helper == (p.label[static_cast<std::size_t>(v - 1)] == rest)) {
        return {false, "color " + name + ": vertex " + vertex_name(gg, v) +
                           (helper ? " is not isolated" : " is cut off from z")};
      }
    }
  }

  if (mono_components(g, l + 1).count != 1) {
    return {false, "color " + g.palette()[static_cast<std::size_t>(l + 1)] + " is not connected"};
  }
  return {};
}

WildSet assignment_to_wild_set(const GadgetGraph& gg, const Assignment& a) {
  const CnfFormula& f = gg.formula;
  if (static_cast<int>(a.size()) != f.k) {
    throw Error(ErrorKind::UnsatisfyingAssignment,
                "assignment has " + std::to_string(a.size()) + " values, expected " +
                    std::to_string(f.k));
  }
  if (!evaluate(f, a)) throw Error(ErrorKind::UnsatisfyingAssignment, "assignment falsifies a clause");

  const int l = f.clause_count();
  const ColorId last = l + 1;
  std::map<std::pair<VertexId, VertexId>, EdgeId> last_color;
  for (EdgeId id = 0; id < gg.graph.edge_count(); ++id) {
    const Edge& e = gg.graph.edge(id);
    if (e.color == last) last_color.emplace(std::make_pair(e.u, e.v), id);
  }
  WildSet w;
  for (int j = 1; j <= f.k; ++j) {
    const Literal lit{j, static_cast<bool>(a[static_cast<std::size_t>(j - 1)])};
    const auto it = last_color.find({helper_vertex(l, j), literal_vertex(l, lit)});
    if (it == last_color.end()) {
      throw Error(ErrorKind::MissingPairEdge, "no y" + std::to_string(j) + " edge in the last color");
    }
    w.insert(it->second);
  }
  return w;
}

Assignment wild_set_to_assignment(const GadgetGraph& gg, const WildSet& w) {
  const CnfFormula& f = gg.formula;
  const int l = f.clause_count();
  for (EdgeId id : w) gg.graph.edge(id);  // range check
  if (!is_color_connected(gg.graph, w)) {
    throw Error(ErrorKind::NotColorConnecting, "wild set does not color-connect the gadget");
  }
  if (static_cast<int>(w.size()) != f.k) {
    throw Error(ErrorKind::WrongSize, "wild set has " + std::to_string(w.size()) +
                                          " edges, expected " + std::to_string(f.k));
  }
  // Every gadget edge has a parallel copy in the last color, so only the
  // endpoints matter.
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (EdgeId id : w) {
    const Edge& e = gg.graph.edge(id);
    pairs.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  Assignment a(static_cast<std::size_t>(f.k));
  for (int j = 1; j <= f.k; ++j) {
    const VertexId y = helper_vertex(l, j);
    const VertexId pos = literal_vertex(l, {j, true});
    const VertexId neg = literal_vertex(l, {j, false});
    auto has = [&](VertexId u) { return pairs.count({std::min(u, y), std::max(u, y)}) > 0; };
    if (has(pos)) {
      a[static_cast<std::size_t>(j - 1)] = true;
    } else if (has(neg)) {
      a[static_cast<std::size_t>(j - 1)] = false;
    } else {
      throw Error(ErrorKind::MissingPairEdge,
                  "wild set has no edge at y" + std::to_string(j));
    }
  }
  return a;
}

ReductionCheck reduction_theorem_check(const CnfFormula& f, const ExactOptions& options) {
  ReductionCheck r;
  r.k = f.k;
  r.satisfiable = satisfiable(f);
  r.wild = wild_exact(build_gadget(f).graph, options).wild;
  r.holds = r.satisfiable == (r.wild == r.k);
  return r;
}

}  // namespace wildnum
