// Copyright 2026 The ghd Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "support.h"

namespace ghd {
namespace {

namespace fs = std::filesystem;
using testing::fixture_path;
using testing::read_text;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run ghd_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class ScratchDir {
 public:
  explicit ScratchDir(const std::string& name)
      : path_(fs::temp_directory_path() / ("ghd_cli_test_" + name)) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~ScratchDir() { fs::remove_all(path_); }

  std::string file(const std::string& name) const { return (path_ / name).string(); }
  std::string str() const { return path_.string(); }

 private:
  fs::path path_;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

TEST_CASE("decompose") {
  ScratchDir dir("decompose");
  Run r = ghd_cli({"decompose", fixture_path("tri.hg"), "--heuristic", "min-fill",
                   "--cover", "exact", "-o", dir.file("tri.ghd")});
  CHECK(r.code == 0);
  CHECK(r.out == "width=2\n");
  CHECK(read_text(dir.file("tri.ghd")) == "node 1 bag{a,b,c} cover{e1,e2}\n");

  r = ghd_cli({"decompose", fixture_path("path.hg"), "-o", dir.file("p.ghd"),
               "--dot", dir.file("p.dot")});
  CHECK(r.code == 0);
  CHECK(r.out == "width=1\n");
  CHECK(read_text(dir.file("p.dot")).find("cluster_decomposition") != std::string::npos);

  r = ghd_cli({"decompose", fixture_path("malformed.hg")});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("malformed.hg:1:8:") != std::string::npos);

  r = ghd_cli({"decompose", fixture_path("tri.hg"), "--heuristic", "annealing"});
  CHECK(r.code == 1);

  r = ghd_cli({"decompose", dir.file("missing.hg")});
  CHECK(r.code == 1);
}

TEST_CASE("decompose then validate round trips for every option") {
  ScratchDir dir("roundtrip");
  for (const char* fixture : {"tri.hg", "path.hg", "single.hg", "big.hg", "k5.hg"}) {
    for (const char* heuristic : {"min-degree", "min-fill", "mcs", "random"}) {
      for (const char* cover : {"greedy", "exact", "auto"}) {
        const std::string ghd = dir.file("out.ghd");
        Run r = ghd_cli({"decompose", fixture_path(fixture), "--heuristic", heuristic,
                         "--cover", cover, "--seed", "5", "--preprocess", "--lint",
                         "-o", ghd});
        REQUIRE(r.code == 0);
        r = ghd_cli({"validate", fixture_path(fixture), ghd});
        CHECK(r.code == 0);
      }
    }
  }
}

TEST_CASE("validate") {
  ScratchDir dir("validate");
  Run r = ghd_cli({"validate", fixture_path("tri.hg"), fixture_path("tri.ghd")});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "edge_coverage: PASS\nconnectedness: PASS\nbag_cover: PASS\n"
        "references: PASS\nwidth=2\n");

  r = ghd_cli({"validate", fixture_path("path.hg"), fixture_path("path_bad.ghd")});
  CHECK(r.code == 3);
  CHECK(r.out.find("edge_coverage: FAIL e2\n") != std::string::npos);

  r = ghd_cli({"validate", fixture_path("tri.hg"), fixture_path("empty.ghd")});
  CHECK(r.code == 3);
  CHECK(r.out.find("edge_coverage: FAIL e1\n") != std::string::npos);

  write_text(dir.file("cyclic.ghd"),
             "node 1 bag{a} cover{e1}\nnode 2 bag{a} cover{e1}\nedge 1 2\nedge 2 1\n");
  r = ghd_cli({"validate", fixture_path("tri.hg"), dir.file("cyclic.ghd")});
  CHECK(r.code == 1);
  CHECK(r.err.find(":4:") != std::string::npos);

  write_text(dir.file("wasteful.ghd"), "node 1 bag{a,b,c} cover{e1,e2,e3}\n");
  r = ghd_cli({"validate", fixture_path("tri.hg"), dir.file("wasteful.ghd"), "--lint"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  write_text(dir.file("wasteful.ghd"),
             "node 1 bag{a,b} cover{e1,e2}\nnode 2 bag{a,b,c} cover{e1,e2}\nedge 1 2\n");
  r = ghd_cli({"validate", fixture_path("path.hg"), dir.file("wasteful.ghd"), "--lint"});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning:") == std::string::npos);
}

TEST_CASE("lint warns on disjoint cover edges") {
  ScratchDir dir("lint");
  write_text(dir.file("d.ghd"),
             "node 1 bag{a,b} cover{e1,e3}\nnode 2 bag{b,c,d} cover{e2,e3}\nedge 1 2\n");
  write_text(dir.file("h.hg"), "e1(a,b),\ne2(b,c),\ne3(c,d).");
  const Run r = ghd_cli({"validate", dir.file("h.hg"), dir.file("d.ghd"), "--lint"});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning: node 1: cover edge e3") != std::string::npos);
}

TEST_CASE("exact") {
  ScratchDir dir("exact");
  Run r = ghd_cli({"exact", fixture_path("tri.hg"), "-o", dir.file("w.ghd")});
  CHECK(r.code == 0);
  CHECK(r.out == "ghw=2\n");
  CHECK(read_text(dir.file("w.ghd")) == read_text(fixture_path("tri.ghd")));

  r = ghd_cli({"exact", fixture_path("big.hg")});
  CHECK(r.code == 4);
  CHECK(r.out.empty());

  r = ghd_cli({"exact", fixture_path("big.hg"), "--limit", "12"});
  CHECK(r.code == 0);
  CHECK(r.out == "ghw=2\n");
}

TEST_CASE("stats") {
  const Run r = ghd_cli({"stats", fixture_path("path.hg")});
  CHECK(r.code == 0);
  CHECK(r.out.find("vertices=3\nedges=2\n") == 0);
  CHECK(r.out.find("alpha_acyclic=true\n") != std::string::npos);
}

TEST_CASE("convert") {
  ScratchDir dir("convert");
  Run r = ghd_cli({"convert", fixture_path("tri.hg"), "--dot", dir.file("out.dot")});
  CHECK(r.code == 0);
  CHECK(read_text(dir.file("out.dot")).find("cluster_hypergraph") != std::string::npos);

  r = ghd_cli({"convert", fixture_path("tri.ghd")});
  CHECK(r.code == 0);
  CHECK(r.out.find("cluster_decomposition") != std::string::npos);

  r = ghd_cli({"convert", fixture_path("path.hg"), fixture_path("path_bad.ghd")});
  CHECK(r.code == 3);

  r = ghd_cli({"convert", fixture_path("path.hg"), fixture_path("tri.hg")});
  CHECK(r.code == 1);
}

TEST_CASE("bench") {
  ScratchDir dir("bench");
  fs::copy_file(fixture_path("tri.hg"), dir.file("tri.hg"));
  fs::copy_file(fixture_path("path.hg"), dir.file("path.hg"));
  write_text(dir.file("notes.txt"), "ignored");

  Run r = ghd_cli({"bench", dir.str(), "--heuristics", "min-fill"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "instance,heuristic,cover,width,nodes,millis");
  CHECK(rows[1].rfind("path.hg,min-fill,auto,1,2,", 0) == 0);
  CHECK(rows[2].rfind("tri.hg,min-fill,auto,2,1,", 0) == 0);

  r = ghd_cli({"bench", dir.str(), "--heuristics", "mcs,min-degree", "--repetitions", "3"});
  CHECK(r.code == 0);
  std::istringstream many(r.out);
  rows.clear();
  while (std::getline(many, line)) rows.push_back(line);
  REQUIRE(rows.size() == 13);
  CHECK(rows[1].rfind("path.hg,mcs,", 0) == 0);
  CHECK(rows[4].rfind("path.hg,min-degree,", 0) == 0);
  CHECK(rows[7].rfind("tri.hg,mcs,auto,2,", 0) == 0);
  CHECK(rows[9].rfind("tri.hg,mcs,auto,2,", 0) == 0);

  ScratchDir empty("bench_empty");
  r = ghd_cli({"bench", empty.str()});
  CHECK(r.code == 0);
  CHECK(r.out == "instance,heuristic,cover,width,nodes,millis\n");
}

TEST_CASE("usage errors") {
  CHECK(ghd_cli({}).code == 1);
  CHECK(ghd_cli({"frobnicate"}).code == 1);
  CHECK(ghd_cli({"--help"}).code == 0);
}

}  // namespace
}  // namespace ghd
