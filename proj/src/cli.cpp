#include "wildnum/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "wildnum/bounds.hpp"
#include "wildnum/exact.hpp"
#include "wildnum/families.hpp"
#include "wildnum/greedy.hpp"
#include "wildnum/io.hpp"
#include "wildnum/sat_reduction.hpp"

namespace wildnum {

namespace {

std::string edge_label(const EdgeColoredGraph& g, EdgeId id) {
  const Edge& e = g.edge(id);
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

void print_edges(std::ostream& out, const EdgeColoredGraph& g, const std::vector<EdgeId>& ids) {
  for (EdgeId id : ids) out << "  e" << (id + 1) << "  " << describe_edge(g, id) << '\n';
}

std::string id_list(const std::vector<EdgeId>& ids) {
  std::string s;
  for (EdgeId id : ids) s += (s.empty() ? "" : ",") + std::to_string(id + 1);
  return s;
}

void print_trace(std::ostream& out, const EdgeColoredGraph& g, const GreedyTrace& trace) {
  std::size_t width = 4;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    width = std::max(width, edge_label(g, id).size() + 1);
  }
  const int head = 8;
  auto row = [&](const std::string& name, const std::vector<int>& values) {
    out << "  " << std::left << std::setw(head) << name << std::right;
    for (int v : values) out << std::setw(static_cast<int>(width)) << v;
  };

  for (std::size_t s = 0; s < trace.steps.size(); ++s) {
    const GreedyStep& step = trace.steps[s];
    out << "step " << (s + 1) << "  max dip " << step.max_dip << '\n';
    out << "  " << std::left << std::setw(head) << "edge" << std::right;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
      out << std::setw(static_cast<int>(width)) << edge_label(g, id);
    }
    out << '\n';
    row("dip", step.dips);
    out << '\n';
    for (const GreedyCandidate& c : step.candidates) {
      row(edge_label(g, c.edge), c.row);
      out << "  " << c.potential.to_string() << '\n';
    }
    out << "  pick " << edge_label(g, step.selected) << " (e" << (step.selected + 1) << ")\n";
  }
}

std::string join(const std::vector<int>& values) {
  std::string s;
  for (int v : values) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

void print_report(std::ostream& out, const EdgeColoredGraph& g, const BoundsReport& r) {
  const auto kappa = kappa_vector(g);
  out << "vertices " << g.vertex_count() << ", edges " << g.edge_count() << ", colors "
      << g.color_count() << '\n';
  out << "kappa " << join(kappa) << " (sum " << kappa_sum(g) << ")\n";
  out << "component lower bound  " << r.clb << '\n';
  out << "component upper bound  " << r.cub << '\n';
  out << "ceiling lower bound    " << r.ceiling_lb << '\n';
  out << "dip lower bound        " << r.dip_lb << '\n';
  out << "greedy upper bound     " << r.greedy_size << '\n';
  for (const Deduction& d : r.deductions) {
    out << "deduction " << to_string(d.rule) << ": wild "
        << (d.kind == DeductionKind::ExactValue ? "= " : ">= ") << d.value << '\n';
  }
  out << "lower bound " << r.best_lb << " (" << r.best_lb_source << ")\n";
  out << "upper bound " << r.best_ub << " (" << r.best_ub_source << ")\n";
  if (r.best_lb == r.best_ub) out << "wild = " << r.best_lb << '\n';
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("WILDNUM_SEED");
  if (!env || !*env) return fallback;
  try {
    std::size_t used = 0;
    const auto value = std::stoull(env, &used);
    if (used == std::string(env).size()) return value;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::BadDescriptor, std::string("WILDNUM_SEED is not a number: ") + env);
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_file(path, text);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wild numbers of edge-colored multigraphs", "wildnum"};
  app.require_subcommand(1);

  std::string graph_path, cnf_path, output_path, wild_text, method = "bb", family;
  bool trace = false, multigraph = false;
  double time_limit = 0;
  int threads = 1;
  std::vector<int> params, coloring;
  std::uint64_t seed = 1;

  auto* bounds_cmd = app.add_subcommand("bounds", "Every lower and upper bound, with its source");
  bounds_cmd->add_option("file", graph_path, "Graph file (.wng)")->required();

  auto* greedy_cmd = app.add_subcommand("greedy", "Greedy color-connecting set");
  greedy_cmd->add_option("file", graph_path, "Graph file (.wng)")->required();
  greedy_cmd->add_flag("--trace", trace, "Print dip numbers and potentials at every step");

  auto* exact_cmd = app.add_subcommand("exact", "Exact wild number and an ideal wild set");
  exact_cmd->add_option("file", graph_path, "Graph file (.wng)")->required();
  exact_cmd->add_option("--method", method, "bb (branch-and-bound) or brute")
      ->check(CLI::IsMember({"bb", "brute"}));
  exact_cmd->add_option("--time-limit", time_limit, "Seconds; branch-and-bound only")
      ->check(CLI::NonNegativeNumber);
  exact_cmd->add_option("--threads", threads, "Branch-and-bound worker threads")
      ->check(CLI::PositiveNumber);

  auto* check_cmd = app.add_subcommand("check", "Test whether a set of edges color-connects");
  check_cmd->add_option("file", graph_path, "Graph file (.wng)")->required();
  check_cmd->add_option("--wild", wild_text, "Edge ids (1-based) or u-v-color, comma separated")
      ->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Build the gadget graph of a 3-CNF formula");
  reduce_cmd->add_option("cnf", cnf_path, "DIMACS CNF file")->required();
  reduce_cmd->add_option("-o,--output", output_path, "Graph file to write (default stdout)");

  auto* extract_cmd =
      app.add_subcommand("extract", "Read a satisfying assignment off a gadget wild set");
  extract_cmd->add_option("cnf", cnf_path, "DIMACS CNF file")->required();
  extract_cmd->add_option("graph", graph_path, "Gadget graph file")->required();
  extract_cmd->add_option("--wild", wild_text, "Edge ids (1-based) or u-v-color, comma separated")
      ->required();

  auto* gen_cmd = app.add_subcommand("gen", "Write a named or random graph");
  gen_cmd->add_option("family", family, "Family name")->required();
  gen_cmd->add_option("params", params, "Family parameters");
  gen_cmd->add_option("--coloring", coloring, "Per-edge palette indices (path, cycle, complete)")
      ->delimiter(',');
  gen_cmd->add_option("--seed", seed, "Seed for tree and random (WILDNUM_SEED overrides)");
  gen_cmd->add_flag("--multigraph", multigraph, "Random family: allow parallel edges");
  gen_cmd->add_option("-o,--output", output_path, "Graph file to write (default stdout)");
  std::string family_help = "Families:";
  for (const auto& name : family_names()) family_help += " " + name;
  gen_cmd->footer(family_help);

  auto* dot_cmd = app.add_subcommand("dot", "Graphviz export, wild edges dashed");
  dot_cmd->add_option("file", graph_path, "Graph file (.wng)")->required();
  dot_cmd->add_option("--wild", wild_text, "Edge ids (1-based) or u-v-color, comma separated");
  dot_cmd->add_option("-o,--output", output_path, "DOT file to write (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    auto load_graph = [&] { return parse_graph(read_file(graph_path)); };
    auto load_wild = [&](const EdgeColoredGraph& g) {
      std::vector<std::string> warnings;
      WildSet w = parse_wild_set(g, wild_text, &warnings);
      for (const auto& msg : warnings) err << "warning: " << msg << '\n';
      return w;
    };

    if (bounds_cmd->parsed()) {
      const auto g = load_graph();
      print_report(out, g, bounds_report(g));
      return kExitOk;
    }

    if (greedy_cmd->parsed()) {
      const auto g = load_graph();
      const auto result = greedy_wild_set(g);
      if (trace) print_trace(out, g, result.trace);
      out << "greedy size = " << result.wild.size() << '\n';
      out << "order = " << id_list(result.trace.chosen) << '\n';
      print_edges(out, g, result.trace.chosen);
      return kExitOk;
    }

    if (exact_cmd->parsed()) {
      const auto g = load_graph();
      ExactResult r;
      if (method == "brute") {
        r = wild_brute(g);
      } else {
        ExactOptions options;
        options.threads = threads;
        if (time_limit > 0) {
          const auto deadline = std::chrono::steady_clock::now() +
                                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                    std::chrono::duration<double>(time_limit));
          options.should_stop = [deadline] { return std::chrono::steady_clock::now() > deadline; };
        }
        try {
          r = wild_exact(g, options);
        } catch (const SearchAborted&) {
          const auto report = bounds_report(g);
          out << "time limit reached\n";
          out << report.best_lb << " <= wild <= " << report.best_ub << '\n';
          return kExitTimeLimit;
        }
      }
      out << "wild = " << r.wild << '\n';
      out << "method = " << to_string(r.method) << '\n';
      out << "nodes = " << r.nodes_explored << '\n';
      out << "witness = " << id_list(r.witness.ids()) << '\n';
      print_edges(out, g, r.witness.ids());
      return kExitOk;
    }

    if (check_cmd->parsed()) {
      const auto g = load_graph();
      const WildSet w = load_wild(g);
      bool ok = true;
      for (ColorId c = 0; c < g.color_count(); ++c) {
        const int parts = mono_components(g, c, w).count;
        if (parts > 1) {
          ok = false;
          out << "color " << g.palette()[static_cast<std::size_t>(c)] << ": " << parts
              << " components\n";
        }
      }
      out << (ok ? "color-connecting" : "not color-connecting") << " (" << w.size()
          << " edges)\n";
      return ok ? kExitOk : kExitFailed;
    }

    if (reduce_cmd->parsed()) {
      const auto f = parse_dimacs(read_file(cnf_path));
      const auto gg = build_gadget(f);
      std::vector<std::string> comments{"gadget graph: " + std::to_string(f.clause_count()) +
                                        " clauses, " + std::to_string(f.k) + " variables"};
      for (VertexId v = 1; v <= gg.graph.vertex_count(); ++v) {
        comments.push_back("vertex " + std::to_string(v) + " " + vertex_name(gg, v));
      }
      emit(output_path, serialize_graph(gg.graph, comments), out);
      const auto check = verify_gadget(gg);
      if (!check) {
        err << "gadget check failed: " << check.failure << '\n';
        return kExitFailed;
      }
      return kExitOk;
    }

    if (extract_cmd->parsed()) {
      const auto f = parse_dimacs(read_file(cnf_path));
      const auto gg = build_gadget(f);
      const auto g = load_graph();
      if (!(g == gg.graph)) {
        err << "error: " << graph_path << " is not the gadget graph of " << cnf_path << '\n';
        return kExitUsage;
      }
      const WildSet w = load_wild(g);
      Assignment a;
      try {
        a = wild_set_to_assignment(gg, w);
      } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return kExitFailed;
      }
      for (int j = 1; j <= f.k; ++j) {
        out << "x" << j << " = " << (a[static_cast<std::size_t>(j - 1)] ? "true" : "false")
            << '\n';
      }
      const bool sat = evaluate(f, a);
      out << (sat ? "satisfies the formula" : "does not satisfy the formula") << '\n';
      return sat ? kExitOk : kExitFailed;
    }

    if (gen_cmd->parsed()) {
      FamilyDescriptor d;
      d.family = family;
      d.params = params;
      d.coloring = coloring;
      d.seed = seed_from_env(seed);
      d.simple = !multigraph;
      const auto g = generate(d);
      emit(output_path, serialize_graph(g, {"generated: " + family}), out);
      return kExitOk;
    }

    if (dot_cmd->parsed()) {
      const auto g = load_graph();
      std::optional<WildSet> w;
      if (!wild_text.empty()) w = load_wild(g);
      emit(output_path, export_dot(g, w), out);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace wildnum
