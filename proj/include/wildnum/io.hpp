#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wildnum/graph.hpp"

namespace wildnum {

// Graph files (.wng):
//
//   c <comment>
//   p wild <n> <m> <l>
//   colors <label1> ... <labell>
//   e <u> <v> <label>        (m lines, vertices 1-based, file order = edge id)
//
// Errors carry the offending line number; build() errors pass through.

EdgeColoredGraph parse_graph(std::string_view text);
std::string serialize_graph(const EdgeColoredGraph& g,
                            const std::vector<std::string>& comments = {});

/// Graphviz text. Each palette entry gets its own color attribute; edges in
/// `wild` are dashed.
std::string export_dot(const EdgeColoredGraph& g, const std::optional<WildSet>& wild = std::nullopt);

/// Comma-separated wild edges: 1-based edge ids in file order, or `u-v-label`
/// triples resolved to the first matching edge. A triple matching several
/// parallel edges appends a message to `warnings`.
WildSet parse_wild_set(const EdgeColoredGraph& g, std::string_view text,
                       std::vector<std::string>* warnings = nullptr);

/// `u-v label`, e.g. "1-7 orange".
std::string describe_edge(const EdgeColoredGraph& g, EdgeId id);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace wildnum
