#include "wildnum/io.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace wildnum {

namespace {

[[noreturn]] void syntax(int line, const std::string& msg) {
  throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ": " + msg);
}

int parse_int(const std::string& token, int line, const char* what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(token, &used);
    if (used == token.size()) return value;
  } catch (const std::exception&) {
  }
  syntax(line, std::string("bad ") + what + " '" + token + "'");
}

}  // namespace

EdgeColoredGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  bool have_colors = false;
  int n = 0, m = 0, l = 0;
  std::vector<std::string> palette;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::string kind;
    if (!(words >> kind) || kind == "c") continue;
    std::vector<std::string> rest;
    for (std::string w; words >> w;) rest.push_back(w);

    if (kind == "p") {
      if (have_header) syntax(line_no, "second header");
      if (rest.size() != 4 || rest[0] != "wild") syntax(line_no, "expected 'p wild <n> <m> <l>'");
      n = parse_int(rest[1], line_no, "vertex count");
      m = parse_int(rest[2], line_no, "edge count");
      l = parse_int(rest[3], line_no, "color count");
      if (n < 1 || m < 0 || l < 1) syntax(line_no, "counts out of range");
      have_header = true;
    } else if (kind == "colors") {
      if (!have_header) syntax(line_no, "'colors' before header");
      if (have_colors) syntax(line_no, "second 'colors' line");
      if (static_cast<int>(rest.size()) != l) {
        syntax(line_no, "header declares " + std::to_string(l) + " colors, line lists " +
                            std::to_string(rest.size()));
      }
      for (std::size_t i = 0; i < rest.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
          if (rest[i] == rest[j]) syntax(line_no, "color '" + rest[i] + "' listed twice");
        }
      }
      palette = rest;
      have_colors = true;
    } else if (kind == "e") {
      if (!have_colors) syntax(line_no, "edge before 'colors' line");
      if (rest.size() != 3) syntax(line_no, "expected 'e <u> <v> <color>'");
      Edge e;
      e.u = parse_int(rest[0], line_no, "vertex");
      e.v = parse_int(rest[1], line_no, "vertex");
      e.color = -1;
      for (std::size_t i = 0; i < palette.size(); ++i) {
        if (palette[i] == rest[2]) e.color = static_cast<ColorId>(i);
      }
      if (e.color < 0) {
        throw Error(ErrorKind::UnknownColor,
                    "line " + std::to_string(line_no) + ": unknown color '" + rest[2] + "'");
      }
      if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
        throw Error(ErrorKind::BadVertexId, "line " + std::to_string(line_no) +
                                                ": vertex out of range 1.." + std::to_string(n));
      }
      if (e.u == e.v) {
        throw Error(ErrorKind::SelfLoop, "line " + std::to_string(line_no) + ": self-loop at " +
                                             std::to_string(e.u));
      }
      edges.push_back(e);
    } else {
      syntax(line_no, "unknown line type '" + kind + "'");
    }
  }
  if (!have_header) syntax(line_no, "missing 'p wild' header");
  if (!have_colors) syntax(line_no, "missing 'colors' line");
  if (static_cast<int>(edges.size()) != m) {
    syntax(line_no, "header declares " + std::to_string(m) + " edges, found " +
                        std::to_string(edges.size()));
  }
  return EdgeColoredGraph::build(n, std::move(palette), std::move(edges));
}

std::string serialize_graph(const EdgeColoredGraph& g, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const std::string& c : comments) out << "c " << c << '\n';
  out << "p wild " << g.vertex_count() << ' ' << g.edge_count() << ' ' << g.color_count() << '\n';
  out << "colors";
  for (const std::string& label : g.palette()) out << ' ' << label;
  out << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << e.u << ' ' << e.v << ' ' << g.palette()[static_cast<std::size_t>(e.color)]
        << '\n';
  }
  return out.str();
}

namespace {

// Distinct hues, then evenly spaced HSV beyond the table.
std::string dot_color(std::size_t index) {
  static constexpr std::array<const char*, 10> table = {
      "#e6550d", "#756bb1", "#31a354", "#3182bd", "#e7298a",
      "#a6761d", "#636363", "#d62728", "#17becf", "#bcbd22"};
  if (index < table.size()) return table[index];
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << std::fmod(index * 0.618034, 1.0) << " 0.8 0.8";
  return out.str();
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const EdgeColoredGraph& g, const std::optional<WildSet>& wild) {
  std::ostringstream out;
  out << "graph wildnum {\n";
  out << "  node [shape=circle];\n";
  for (VertexId v = 1; v <= g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    const auto c = static_cast<std::size_t>(e.color);
    out << "  " << e.u << " -- " << e.v << " [color=" << quoted(dot_color(c))
        << ", label=" << quoted(g.palette()[c]);
    if (wild && wild->contains(id)) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

WildSet parse_wild_set(const EdgeColoredGraph& g, std::string_view text,
                       std::vector<std::string>* warnings) {
  WildSet w;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    token = token.substr(first, token.find_last_not_of(" \t") - first + 1);

    if (token.find_first_not_of("0123456789") == std::string::npos) {
      const long id = std::stol(token);
      if (id < 1 || id > g.edge_count()) {
        throw Error(ErrorKind::BadEdgeId, "edge id " + token + " out of range 1.." +
                                              std::to_string(g.edge_count()));
      }
      w.insert(static_cast<EdgeId>(id - 1));
      continue;
    }
    const auto d1 = token.find('-');
    const auto d2 = d1 == std::string::npos ? d1 : token.find('-', d1 + 1);
    if (d2 == std::string::npos) {
      throw Error(ErrorKind::SyntaxError, "wild edge '" + token + "': expected id or u-v-color");
    }
    int u = 0, v = 0;
    try {
      u = std::stoi(token.substr(0, d1));
      v = std::stoi(token.substr(d1 + 1, d2 - d1 - 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::SyntaxError, "wild edge '" + token + "': bad vertex");
    }
    const ColorId color = g.color_index(token.substr(d2 + 1));
    if (color < 0) {
      throw Error(ErrorKind::UnknownColor, "wild edge '" + token + "': unknown color");
    }
    std::vector<EdgeId> matches;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
      const Edge& e = g.edge(id);
      if (e.color == color && ((e.u == u && e.v == v) || (e.u == v && e.v == u))) {
        matches.push_back(id);
      }
    }
    if (matches.empty()) throw Error(ErrorKind::BadEdgeId, "no edge matches '" + token + "'");
    if (matches.size() > 1 && warnings) {
      warnings->push_back("'" + token + "' matches " + std::to_string(matches.size()) +
                          " parallel edges; using edge " + std::to_string(matches.front() + 1));
    }
    w.insert(matches.front());
  }
  return w;
}

std::string describe_edge(const EdgeColoredGraph& g, EdgeId id) {
  const Edge& e = g.edge(id);
  return std::to_string(e.u) + "-" + std::to_string(e.v) + " " +
         g.palette()[static_cast<std::size_t>(e.color)];
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace wildnum
