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

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ghd/decomposition.h"
#include "ghd/error.h"
#include "ghd/exact.h"
#include "ghd/formats.h"
#include "ghd/heuristics.h"
#include "ghd/hypergraph.h"

namespace ghd::cli {
namespace {

namespace fs = std::filesystem;

// Carries an exit code out of a command.
struct Failure {
  int code;
};

std::string read_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << path << ": error: cannot open file\n";
    throw Failure{kExitParse};
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents,
                std::ostream& err) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << contents;
  out.flush();
  if (!out) {
    err << path << ": error: cannot write file\n";
    throw Failure{kExitInternal};
  }
}

template <typename Parse>
auto load(const std::string& path, Parse parse, std::ostream& err) {
  const std::string text = read_file(path, err);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    const ParseDiagnostic& d = e.diagnostic();
    err << path << ":" << d.line << ":" << d.column << ": error: " << d.message
        << "\n";
  } catch (const Error& e) {
    err << path << ": error: " << e.what() << "\n";
  }
  throw Failure{kExitParse};
}

Hypergraph load_hg(const std::string& path, std::ostream& err) {
  return load(path, [](std::string_view t) { return parse_hg(t); }, err);
}

Decomposition load_ghd(const std::string& path, std::ostream& err) {
  return load(path, [](std::string_view t) { return parse_ghd(t); }, err);
}

void print_verdict(std::ostream& out, const char* name, const Verdict& v) {
  out << name << ": " << (v.passed ? "PASS" : "FAIL");
  if (!v.passed) out << " " << v.witness;
  out << "\n";
}

void print_report(std::ostream& out, const ValidationReport& report) {
  print_verdict(out, "edge_coverage", report.edge_coverage);
  print_verdict(out, "connectedness", report.connectedness);
  print_verdict(out, "bag_cover", report.bag_cover);
  print_verdict(out, "references", report.references);
}

void print_lint(std::ostream& err, const Hypergraph& h, const Decomposition& d) {
  for (const std::string& warning : lint(h, d)) {
    err << "warning: " << warning << "\n";
  }
}

std::string lower_extension(const std::string& path) {
  std::string ext = fs::path(path).extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext;
}

const std::vector<std::string> kHeuristicNames = {"min-degree", "min-fill",
                                                  "mcs", "random"};
const std::vector<std::string> kCoverNames = {"greedy", "exact", "auto"};

struct DecomposeArgs {
  std::string input;
  std::string heuristic = "min-fill";
  std::uint64_t seed = 0;
  std::string cover = "auto";
  bool preprocess = false;
  std::string dot;
  bool lint = false;
  std::string output;
};

int cmd_decompose(const DecomposeArgs& args, std::ostream& out,
                  std::ostream& err) {
  const Hypergraph h = load_hg(args.input, err);
  DecomposeOptions options;
  options.heuristic = *parse_heuristic(args.heuristic);
  options.cover = *parse_cover_mode(args.cover);
  options.seed = args.seed;
  options.preprocess = args.preprocess;
  const Decomposition d = decompose(h, options);

  const ValidationReport report = validate(h, d);
  if (!report.valid()) {
    err << "internal error: constructed decomposition does not validate\n";
    print_report(err, report);
    return kExitInternal;
  }
  if (args.lint) print_lint(err, h, d);
  if (!args.output.empty()) write_file(args.output, serialize_ghd(d), err);
  if (!args.dot.empty()) write_file(args.dot, to_dot(h, d), err);
  out << "width=" << width(d) << "\n";
  return kExitOk;
}

struct ValidateArgs {
  std::string hypergraph;
  std::string decomposition;
  bool lint = false;
};

int cmd_validate(const ValidateArgs& args, std::ostream& out,
                 std::ostream& err) {
  const Hypergraph h = load_hg(args.hypergraph, err);
  const Decomposition d = load_ghd(args.decomposition, err);
  const ValidationReport report = validate(h, d);
  print_report(out, report);
  out << "width=" << width(d) << "\n";
  if (args.lint) print_lint(err, h, d);
  return report.valid() ? kExitOk : kExitInvalid;
}

struct ExactArgs {
  std::string input;
  std::size_t limit = kDefaultVertexLimit;
  std::string output;
};

int cmd_exact(const ExactArgs& args, std::ostream& out, std::ostream& err) {
  const Hypergraph h = load_hg(args.input, err);
  ExactResult result;
  try {
    result = ghw_exact(h, args.limit);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kTooLarge) throw;
    err << args.input << ": error: " << e.what()
        << " (raise it with --limit)\n";
    return kExitTooLarge;
  }
  if (!validate(h, result.witness).valid() ||
      width(result.witness) != result.ghw) {
    err << "internal error: exact witness does not certify ghw\n";
    return kExitInternal;
  }
  if (!args.output.empty()) {
    write_file(args.output, serialize_ghd(result.witness), err);
  }
  err << "orderings_searched=" << result.orderings_searched << "\n";
  out << "ghw=" << result.ghw << "\n";
  return kExitOk;
}

int cmd_stats(const std::string& input, std::ostream& out, std::ostream& err) {
  out << stats(load_hg(input, err));
  return kExitOk;
}

struct ConvertArgs {
  std::vector<std::string> inputs;
  std::string dot;
};

int cmd_convert(const ConvertArgs& args, std::ostream& out, std::ostream& err) {
  std::optional<Hypergraph> h;
  std::optional<Decomposition> d;
  for (const std::string& path : args.inputs) {
    const std::string ext = lower_extension(path);
    if (ext == ".hg" && !h) {
      h = load_hg(path, err);
    } else if (ext == ".ghd" && !d) {
      d = load_ghd(path, err);
    } else {
      err << path
          << ": error: expected at most one .hg and at most one .ghd input\n";
      return kExitParse;
    }
  }
  std::string dot;
  if (h && d) {
    const ValidationReport report = validate(*h, *d);
    if (!report.valid()) {
      err << "error: decomposition does not validate against the "
             "hypergraph\n";
      print_report(err, report);
      return kExitInvalid;
    }
    dot = to_dot(*h, *d);
  } else if (h) {
    dot = to_dot(*h);
  } else {
    dot = to_dot(*d);
  }
  if (args.dot.empty()) {
    out << dot;
  } else {
    write_file(args.dot, dot, err);
  }
  return kExitOk;
}

struct BenchArgs {
  std::string directory;
  std::vector<std::string> heuristics{"min-fill"};
  std::size_t repetitions = 1;
  std::string cover = "auto";
  std::uint64_t seed = 0;
};

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  if (!fs::is_directory(args.directory)) {
    err << args.directory << ": error: not a directory\n";
    return kExitParse;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(args.directory)) {
    if (entry.is_regular_file() &&
        lower_extension(entry.path().string()) == ".hg") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });
  std::vector<std::string> heuristics = args.heuristics;
  std::sort(heuristics.begin(), heuristics.end());
  heuristics.erase(std::unique(heuristics.begin(), heuristics.end()),
                   heuristics.end());

  DecomposeOptions options;
  options.cover = *parse_cover_mode(args.cover);
  options.seed = args.seed;

  std::ostringstream rows;
  bool all_valid = true;
  for (const fs::path& file : files) {
    const Hypergraph h = load_hg(file.string(), err);
    for (const std::string& name : heuristics) {
      options.heuristic = *parse_heuristic(name);
      for (std::size_t rep = 0; rep < args.repetitions; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        const Decomposition d = decompose(h, options);
        const auto stop = std::chrono::steady_clock::now();
        const double millis =
            std::chrono::duration<double, std::milli>(stop - start).count();
        if (!validate(h, d).valid()) {
          err << file.filename().string() << ": internal error: " << name
              << " produced an invalid decomposition\n";
          all_valid = false;
        }
        char timing[32];
        std::snprintf(timing, sizeof(timing), "%.3f", millis);
        rows << file.filename().string() << "," << name << "," << args.cover
             << "," << width(d) << "," << d.num_nodes() << "," << timing
             << "\n";
      }
    }
  }
  out << "instance,heuristic,cover,width,nodes,millis\n" << rows.str();
  return all_valid ? kExitOk : kExitInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Generalized hypertree decompositions of hypergraphs", "ghd"};
  app.require_subcommand(1);

  DecomposeArgs decompose_args;
  auto* decompose_cmd =
      app.add_subcommand("decompose", "Build a decomposition of a .hg file");
  decompose_cmd->add_option("input", decompose_args.input, "Hypergraph (.hg)")
      ->required();
  decompose_cmd->add_option("--heuristic", decompose_args.heuristic,
                            "Elimination ordering heuristic")
      ->check(CLI::IsMember(kHeuristicNames));
  decompose_cmd->add_option("--seed", decompose_args.seed,
                            "Seed for --heuristic random");
  decompose_cmd->add_option("--cover", decompose_args.cover, "Cover mode")
      ->check(CLI::IsMember(kCoverNames));
  decompose_cmd->add_flag("--preprocess", decompose_args.preprocess,
                          "Drop edges contained in other edges first");
  decompose_cmd->add_option("--dot", decompose_args.dot,
                            "Also write a DOT rendering of both sides");
  decompose_cmd->add_flag("--lint", decompose_args.lint,
                          "Warn about cover edges disjoint from their bag");
  decompose_cmd->add_option("-o,--output", decompose_args.output,
                            "Write the decomposition (.ghd)");

  ValidateArgs validate_args;
  auto* validate_cmd =
      app.add_subcommand("validate", "Check a decomposition of a hypergraph");
  validate_cmd->add_option("hypergraph", validate_args.hypergraph, "(.hg)")
      ->required();
  validate_cmd->add_option("decomposition", validate_args.decomposition,
                           "(.ghd)")
      ->required();
  validate_cmd->add_flag("--lint", validate_args.lint,
                         "Warn about cover edges disjoint from their bag");

  ExactArgs exact_args;
  auto* exact_cmd = app.add_subcommand(
      "exact", "Exact generalized hypertree width of a small hypergraph");
  exact_cmd->add_option("input", exact_args.input, "Hypergraph (.hg)")
      ->required();
  exact_cmd->add_option("--limit", exact_args.limit,
                        "Largest vertex count accepted");
  exact_cmd->add_option("-o,--output", exact_args.output,
                        "Write the witness decomposition (.ghd)");

  std::string stats_input;
  auto* stats_cmd = app.add_subcommand("stats", "Summarise a hypergraph");
  stats_cmd->add_option("input", stats_input, "Hypergraph (.hg)")->required();

  ConvertArgs convert_args;
  auto* convert_cmd =
      app.add_subcommand("convert", "Render .hg and/or .ghd files as DOT");
  convert_cmd->add_option("inputs", convert_args.inputs, "Input files")
      ->required();
  convert_cmd->add_option("--dot,-o", convert_args.dot,
                          "Output file (stdout when omitted)");

  BenchArgs bench_args;
  auto* bench_cmd =
      app.add_subcommand("bench", "Decompose every .hg file in a directory");
  bench_cmd->add_option("directory", bench_args.directory)->required();
  bench_cmd->add_option("--heuristics", bench_args.heuristics,
                        "Heuristics to run")
      ->delimiter(',')
      ->check(CLI::IsMember(kHeuristicNames));
  bench_cmd->add_option("--repetitions", bench_args.repetitions)
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--cover", bench_args.cover, "Cover mode")
      ->check(CLI::IsMember(kCoverNames));
  bench_cmd->add_option("--seed", bench_args.seed,
                        "Seed for the random heuristic");

  try {
    // CLI11 consumes arguments from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*decompose_cmd) return cmd_decompose(decompose_args, out, err);
    if (*validate_cmd) return cmd_validate(validate_args, out, err);
    if (*exact_cmd) return cmd_exact(exact_args, out, err);
    if (*stats_cmd) return cmd_stats(stats_input, out, err);
    if (*convert_cmd) return cmd_convert(convert_args, out, err);
    if (*bench_cmd) return cmd_bench(bench_args, out, err);
  } catch (const Failure& f) {
    return f.code;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitParse;
}

}  // namespace ghd::cli
