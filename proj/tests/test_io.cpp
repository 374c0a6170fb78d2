#include <doctest.h>

#include <algorithm>
#include <cstdio>

#include "oracles.hpp"
#include "wildnum/exact.hpp"
#include "wildnum/families.hpp"
#include "wildnum/io.hpp"

using namespace wildnum;

namespace {

const char* kTriangle = R"(c a triangle
p wild 3 3 2
colors red blue
e 1 2 red
e 2 3 blue
e 1 3 red
)";

std::pair<ErrorKind, std::string> parse_failure(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const Error& e) {
    return {e.kind(), e.what()};
  }
  FAIL("parsed");
  return {};
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("parse a small graph") {
  const auto g = parse_graph(kTriangle);
  CHECK(g.vertex_count() == 3);
  CHECK(g.palette() == std::vector<std::string>{"red", "blue"});
  CHECK(g.edge(1) == Edge{2, 3, 1});
  CHECK(describe_edge(g, 2) == "1-3 red");
}

TEST_CASE("serialize round trip on every named family") {
  for (const auto& name : family_names()) {
    if (name == "path" || name == "cycle" || name == "tree" || name == "complete" || name == "random") continue;
    CAPTURE(name);
    const auto g = generate({name, {}});
    const auto text = serialize_graph(g, {"fixture " + name});
    CHECK(text.rfind("c fixture " + name, 0) == 0);
    CHECK(parse_graph(text) == g);
  }
  const auto multi = random_graph(4, 9, 3, 11, false);
  CHECK(parse_graph(serialize_graph(multi)) == multi);
}

TEST_CASE("errors carry line numbers") {
  auto [k1, m1] = parse_failure("p wild 3 1 1\ncolors a\ne 1 2 b\n");
  CHECK(k1 == ErrorKind::UnknownColor);
  CHECK(m1.find("line 3") != std::string::npos);

  auto [k2, m2] = parse_failure("p wild 3 1 1\ncolors a\ne 1 4 a\n");
  CHECK(k2 == ErrorKind::BadVertexId);
  CHECK(m2.find("line 3") != std::string::npos);

  auto [k3, m3] = parse_failure("p wild 3 2 1\ncolors a\ne 1 2 a\ne 2 2 a\n");
  CHECK(k3 == ErrorKind::SelfLoop);
  CHECK(m3.find("line 4") != std::string::npos);

  auto [k4, m4] = parse_failure("c\np wild 3 1 1\ncolors a\nx 1 2 a\n");
  CHECK(k4 == ErrorKind::SyntaxError);
  CHECK(m4.find("line 4") != std::string::npos);

  CHECK(parse_failure("p wild 3 2 1\ncolors a\ne 1 2 a\n").first == ErrorKind::SyntaxError);
  CHECK(parse_failure("p wild 3 1 2\ncolors a\ne 1 2 a\n").first == ErrorKind::SyntaxError);
  CHECK(parse_failure("p wild 3 1 1\ncolors a\ne 1 two a\n").first == ErrorKind::SyntaxError);
  CHECK(parse_failure("colors a\n").first == ErrorKind::SyntaxError);
  CHECK(parse_failure("p wild 3 1 1\ncolors a\ne 1 2 a\n").first == ErrorKind::Disconnected);
}

TEST_CASE("dot export") {
  const auto city = generate({"city", {}});
  const auto dot = export_dot(city);
  CHECK(dot.rfind("graph wildnum {", 0) == 0);
  CHECK(count(dot, " -- ") == 10);
  CHECK(count(dot, "style=dashed") == 0);
  for (const auto& label : city.palette()) {
    CHECK(dot.find("label=\"" + label + "\"") != std::string::npos);
  }

  const auto c6 = generate({"cycle", {6, 2}});
  const auto w = wild_exact(c6).witness;
  CHECK(w.size() == 4);
  CHECK(count(export_dot(c6, w), "style=dashed") == 4);
}

TEST_CASE("wild set parsing") {
  const auto g = parse_graph(kTriangle);
  CHECK(parse_wild_set(g, "1,3") == WildSet(std::vector<EdgeId>{0, 2}));
  CHECK(parse_wild_set(g, " 2 , 1-3-red ") == WildSet(std::vector<EdgeId>{1, 2}));
  CHECK(parse_wild_set(g, "").empty());
  CHECK_THROWS_AS(parse_wild_set(g, "4"), Error);
  CHECK_THROWS_AS(parse_wild_set(g, "0"), Error);
  CHECK_THROWS_AS(parse_wild_set(g, "1-2-green"), Error);
  CHECK_THROWS_AS(parse_wild_set(g, "2-3-red"), Error);
  CHECK_THROWS_AS(parse_wild_set(g, "abc"), Error);

  const auto multi = EdgeColoredGraph::build(2, {"a", "b"}, {{1, 2, 0}, {1, 2, 0}, {1, 2, 1}});
  std::vector<std::string> warnings;
  CHECK(parse_wild_set(multi, "2-1-a", &warnings) == WildSet(std::vector<EdgeId>{0}));
  CHECK(warnings.size() == 1);
  parse_wild_set(multi, "1-2-b", &warnings);
  CHECK(warnings.size() == 1);
}

TEST_CASE("file helpers") {
  CHECK_THROWS_AS(read_file("/nonexistent/dir/file.wng"), std::runtime_error);
  const std::string path = "wildnum_io_test.wng";
  write_file(path, kTriangle);
  CHECK(read_file(path) == kTriangle);
  std::remove(path.c_str());
}
