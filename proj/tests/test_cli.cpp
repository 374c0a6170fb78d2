#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "wildnum/cli.hpp"
#include "wildnum/families.hpp"
#include "wildnum/io.hpp"

using namespace wildnum;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("wildnum_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    write_file(file(name), text);
    return file(name);
  }

 private:
  fs::path path_;
};

std::string fixture(const TempDir& dir, const std::string& family) {
  return dir.write(family + ".wng", serialize_graph(generate({family, {}})));
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

const char* kFormula = "p cnf 4 3\n1 -2 4 0\n-1 3 -4 0\n-2 3 4 0\n";

}  // namespace

TEST_CASE("exact and brute force") {
  TempDir dir;
  const auto pyramid = fixture(dir, "pyramid");
  auto r = run({"exact", pyramid});
  CHECK(r.status == kExitOk);
  CHECK(contains(r.out, "wild = 3\n"));
  r = run({"exact", pyramid, "--method", "brute"});
  CHECK(contains(r.out, "wild = 3\n"));
  CHECK(contains(r.out, "method = brute"));
  CHECK(run({"exact", pyramid, "--method", "magic"}).status == kExitUsage);
  CHECK(run({"exact", pyramid, "--threads", "2"}).status == kExitOk);
}

TEST_CASE("time limit") {
  TempDir dir;
  const auto big = dir.write("big.wng", serialize_graph(random_graph(40, 160, 7, 5, true)));
  const auto r = run({"exact", big, "--time-limit", "0.05"});
  // A fast machine may still finish; either way the exit code says which.
  if (r.status == kExitTimeLimit) {
    CHECK(contains(r.out, "time limit reached"));
    CHECK(contains(r.out, "<= wild <="));
  } else {
    CHECK(r.status == kExitOk);
  }
}

TEST_CASE("greedy") {
  TempDir dir;
  const auto wheel = fixture(dir, "wheel");
  auto r = run({"greedy", wheel});
  CHECK(r.status == kExitOk);
  CHECK(contains(r.out, "greedy size = 6"));
  r = run({"greedy", fixture(dir, "prism"), "--trace"});
  CHECK(contains(r.out, "step 1  max dip 2"));
  CHECK(contains(r.out, "2^(5),1^(1),0^(3)"));
  CHECK(contains(r.out, "pick 5-6"));
}

TEST_CASE("bounds") {
  TempDir dir;
  auto r = run({"bounds", fixture(dir, "city")});
  CHECK(r.status == kExitOk);
  CHECK(contains(r.out, "kappa 5 4 5 (sum 14)"));
  CHECK(contains(r.out, "wild = 6"));

  const auto sparse = with_palette(generate({"cycle", {5, 2}}), {"c1", "c2", "c3"});
  r = run({"bounds", dir.write("sparse.wng", serialize_graph(sparse))});
  CHECK(contains(r.out, "wild = 4"));
}

TEST_CASE("check") {
  TempDir dir;
  const auto city = fixture(dir, "city");
  // Everything except v1v2, v2v3, v3v4, v3v6.
  const auto g = generate({"city", {}});
  std::string keep;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    const std::pair<int, int> p = std::minmax(e.u, e.v);
    if (p == std::pair{1, 2} || p == std::pair{2, 3} || p == std::pair{3, 4} ||
        p == std::pair{3, 6}) {
      continue;
    }
    if (!keep.empty()) keep += ',';
    keep += std::to_string(id + 1);
  }
  auto r = run({"check", city, "--wild", keep});
  CHECK(r.status == kExitOk);
  CHECK(contains(r.out, "color-connecting (6 edges)"));
  r = run({"check", city, "--wild", "1"});
  CHECK(r.status == kExitFailed);
  CHECK(contains(r.out, "not color-connecting"));
  CHECK(run({"check", city, "--wild", "99"}).status == kExitUsage);
}

TEST_CASE("reduce and extract") {
  TempDir dir;
  const auto cnf = dir.write("f.cnf", kFormula);
  const auto gadget = dir.file("f.wng");
  auto r = run({"reduce", cnf, "-o", gadget});
  CHECK(r.status == kExitOk);
  const auto text = read_file(gadget);
  CHECK(contains(text, "p wild 16 "));
  CHECK(contains(text, "vertex 16 z"));

  // y_j - literal edges in the last color, x1=T x2=F x3=T x4=T.
  r = run({"extract", cnf, gadget, "--wild", "6-4-c5,9-8-c5,12-10-c5,15-13-c5"});
  CHECK(r.status == kExitOk);
  CHECK(contains(r.out, "x2 = false"));
  CHECK(contains(r.out, "satisfies the formula"));

  r = run({"extract", cnf, gadget, "--wild", "1"});
  CHECK(r.status == kExitFailed);

  const auto other = fixture(dir, "city");
  CHECK(run({"extract", cnf, other, "--wild", "1"}).status == kExitUsage);
  CHECK(run({"reduce", dir.write("bad.cnf", "p cnf 3 1\n1 2 0\n")}).status == kExitUsage);
}

TEST_CASE("gen and dot") {
  TempDir dir;
  auto r = run({"gen", "cycle", "6", "2"});
  CHECK(r.status == kExitOk);
  CHECK(parse_graph(r.out) == generate({"cycle", {6, 2}}));

  const auto a = run({"gen", "random", "6", "9", "3", "--seed", "4"}).out;
  CHECK(a == run({"gen", "random", "6", "9", "3", "--seed", "4"}).out);
  ::setenv("WILDNUM_SEED", "4", 1);
  CHECK(run({"gen", "random", "6", "9", "3", "--seed", "99"}).out == a);
  ::unsetenv("WILDNUM_SEED");

  CHECK(run({"gen", "cycle", "4", "2", "--coloring", "0,1,1,0"}).status == kExitOk);
  CHECK(run({"gen", "nosuch"}).status == kExitUsage);

  const auto out = dir.file("c.dot");
  const auto c6 = fixture(dir, "two-color-hexagon");
  CHECK(run({"dot", c6, "--wild", "1", "-o", out}).status == kExitOk);
  CHECK(contains(read_file(out), "style=dashed"));
}

TEST_CASE("usage errors") {
  CHECK(run({}).status == kExitUsage);
  CHECK(run({"frobnicate"}).status == kExitUsage);
  CHECK(run({"exact"}).status == kExitUsage);
  CHECK(run({"exact", "/nonexistent.wng"}).status == kExitUsage);
  CHECK(run({"--help"}).status == kExitOk);
}
