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

#include "ghd/formats.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ghd/error.h"

namespace ghd {
namespace {

bool is_name_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
         (c >= '0' && c <= '9') || c == '_' || c == ':';
}

bool is_blank(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

// Byte cursor with 1-based line/column tracking.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  int line() const { return line_; }
  int column() const { return column_; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  // Skips whitespace and comments.
  void skip_blank(bool stop_at_newline = false) {
    while (!at_end()) {
      const char c = peek();
      if (c == '%') {
        while (!at_end() && peek() != '\n') advance();
      } else if (is_blank(c) && !(stop_at_newline && c == '\n')) {
        advance();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& message,
                         ErrorCode code = ErrorCode::kSyntaxError) const {
    throw ParseError(code, {line_, column_, message});
  }

  std::string describe_next() const {
    if (at_end()) return "end of input";
    const char c = peek();
    if (c == '\n') return "end of line";
    return std::string("'") + c + "'";
  }

  std::string name(const char* what) {
    if (at_end() || !is_name_char(peek())) {
      fail(std::string("expected ") + what + ", found " + describe_next());
    }
    std::string out;
    while (!at_end() && is_name_char(peek())) {
      out += peek();
      advance();
    }
    return out;
  }

  void expect(char c) {
    if (at_end() || peek() != c) {
      fail(std::string("expected '") + c + "', found " + describe_next());
    }
    advance();
  }

  bool consume_word(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    for (std::size_t i = 0; i < word.size(); ++i) advance();
    return true;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += ',';
    out += names[i];
  }
  return out;
}

// "{a,b,c}" with optional blanks (not newlines) between tokens.
std::vector<std::string> parse_name_list(Cursor& in) {
  std::vector<std::string> names;
  in.expect('{');
  in.skip_blank(true);
  if (!in.at_end() && in.peek() == '}') {
    in.advance();
    return names;
  }
  while (true) {
    names.push_back(in.name("name"));
    in.skip_blank(true);
    if (!in.at_end() && in.peek() == ',') {
      in.advance();
      in.skip_blank(true);
      continue;
    }
    in.expect('}');
    return names;
  }
}

NodeId parse_node_id(Cursor& in) {
  const int line = in.line();
  const int column = in.column();
  std::string digits;
  while (!in.at_end() && in.peek() >= '0' && in.peek() <= '9') {
    digits += in.peek();
    in.advance();
  }
  if (digits.empty()) {
    in.fail("expected node id, found " + in.describe_next());
  }
  NodeId id = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), id);
  if (ec != std::errc() || id <= 0) {
    throw ParseError(ErrorCode::kSyntaxError,
                     {line, column, "node id '" + digits +
                                        "' is not a positive integer"});
  }
  return id;
}

// Blanks (not newlines) then end-of-line or end-of-input.
void expect_line_end(Cursor& in) {
  in.skip_blank(true);
  if (in.at_end()) return;
  if (in.peek() != '\n') {
    in.fail("unexpected " + in.describe_next() + " at end of statement");
  }
}

void require_blank(Cursor& in) {
  if (in.at_end() || !(in.peek() == ' ' || in.peek() == '\t')) {
    in.fail("expected whitespace, found " + in.describe_next());
  }
  in.skip_blank(true);
}

std::string quote(std::string_view id) {
  std::string out = "\"";
  for (char c : id) {
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

constexpr const char* kPalette[] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};

void append_hypergraph_cluster(const Hypergraph& h, std::string& out) {
  out += "  subgraph cluster_hypergraph {\n";
  out += "    label=\"hypergraph\";\n";
  out += "    node [shape=circle];\n";
  for (const std::string& v : h.vertices()) {
    out += "    " + quote("v:" + v) + " [label=" + quote(v) + "];\n";
  }
  constexpr std::size_t kColours = std::size(kPalette);
  for (EdgeId e = 0; e < static_cast<EdgeId>(h.num_edges()); ++e) {
    const Edge& edge = h.edges()[e];
    const std::string attrs =
        std::string("dir=none, color=\"") + kPalette[e % kColours] +
        "\", fontcolor=\"" + kPalette[e % kColours] + "\"";
    const auto& vs = edge.vertices;
    bool labelled = false;
    auto emit = [&](VertexId a, VertexId b) {
      out += "    " + quote("v:" + h.vertex_name(a)) + " -> " +
             quote("v:" + h.vertex_name(b)) + " [" + attrs;
      if (!labelled) out += ", label=" + quote(edge.name);
      out += "];\n";
      labelled = true;
    };
    if (vs.size() == 1) emit(vs[0], vs[0]);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) emit(vs[i], vs[j]);
    }
  }
  out += "  }\n";
}

void append_decomposition_cluster(const Decomposition& d, std::string& out) {
  out += "  subgraph cluster_decomposition {\n";
  out += "    label=\"decomposition\";\n";
  out += "    node [shape=box];\n";
  const auto order = d.preorder();
  for (const auto& [id, parent] : order) {
    const DecompositionNode& node = d.node(id);
    out += "    " + quote("t:" + std::to_string(id)) + " [label=" +
           quote("χ: {" + join(node.bag) + "}\nλ: {" + join(node.cover) +
                 "}") +
           "];\n";
  }
  for (const auto& [id, parent] : order) {
    if (parent == 0) continue;
    out += "    " + quote("t:" + std::to_string(parent)) + " -> " +
           quote("t:" + std::to_string(id)) + ";\n";
  }
  out += "  }\n";
}

constexpr const char* kDotHeader = "digraph ghd {\n  rankdir=TB;\n";

}  // namespace

Hypergraph parse_hg(std::string_view text) {
  Cursor in(text);
  std::vector<EdgeSpec> specs;
  std::map<std::string, std::pair<int, int>> seen;
  bool closed = false;
  while (true) {
    in.skip_blank();
    if (in.at_end()) break;
    if (closed) in.fail("edge clause after the final '.'");
    const int line = in.line();
    const int column = in.column();
    EdgeSpec spec{in.name("edge name"), {}};
    if (seen.contains(spec.name)) {
      throw ParseError(ErrorCode::kDuplicateEdgeName,
                       {line, column, "duplicate edge name '" + spec.name +
                                          "'"});
    }
    seen.emplace(spec.name, std::make_pair(line, column));
    in.skip_blank();
    in.expect('(');
    while (true) {
      in.skip_blank();
      spec.vertices.push_back(in.name("vertex name"));
      in.skip_blank();
      if (!in.at_end() && in.peek() == ',') {
        in.advance();
        continue;
      }
      in.expect(')');
      break;
    }
    const int end_line = in.line();
    const int end_column = in.column();
    in.skip_blank();
    if (in.at_end()) {
      throw ParseError(ErrorCode::kSyntaxError,
                       {end_line, end_column,
                        "missing ',' or '.' after edge clause"});
    }
    if (in.peek() == '.') {
      closed = true;
    } else if (in.peek() != ',') {
      in.fail("expected ',' or '.', found " + in.describe_next());
    }
    in.advance();
    specs.push_back(std::move(spec));
  }
  if (!specs.empty() && !closed) {
    in.fail("the final edge clause must end with '.'");
  }
  return Hypergraph::build(std::move(specs));
}

std::string serialize_hg(const Hypergraph& h) {
  std::string out;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const Edge& e = h.edges()[i];
    out += e.name;
    out += '(';
    for (std::size_t j = 0; j < e.vertices.size(); ++j) {
      if (j > 0) out += ',';
      out += h.vertex_name(e.vertices[j]);
    }
    out += ')';
    out += (i + 1 == h.num_edges()) ? "." : ",\n";
  }
  return out;
}

Decomposition parse_ghd(std::string_view text) {
  struct PendingEdge {
    NodeId u;
    NodeId v;
    int line;
  };
  Cursor in(text);
  std::map<NodeId, DecompositionNode> nodes;
  std::vector<PendingEdge> edges;
  while (true) {
    in.skip_blank();
    if (in.at_end()) break;
    const int line = in.line();
    const int column = in.column();
    if (in.consume_word("node")) {
      require_blank(in);
      const NodeId id = parse_node_id(in);
      if (nodes.contains(id)) {
        throw ParseError(ErrorCode::kSyntaxError,
                         {line, column,
                          "duplicate node id " + std::to_string(id)});
      }
      require_blank(in);
      if (!in.consume_word("bag")) {
        in.fail("expected 'bag', found " + in.describe_next());
      }
      in.skip_blank(true);
      DecompositionNode node;
      node.bag = parse_name_list(in);
      require_blank(in);
      if (!in.consume_word("cover")) {
        in.fail("expected 'cover', found " + in.describe_next());
      }
      in.skip_blank(true);
      node.cover = parse_name_list(in);
      expect_line_end(in);
      nodes.emplace(id, std::move(node));
    } else if (in.consume_word("edge")) {
      require_blank(in);
      const NodeId u = parse_node_id(in);
      require_blank(in);
      const NodeId v = parse_node_id(in);
      expect_line_end(in);
      edges.push_back({u, v, line});
    } else {
      in.fail("expected 'node' or 'edge', found " + in.describe_next());
    }
  }

  // Structural checks here, rather than in the constructor, so that the
  // offending line can be reported.
  std::map<NodeId, NodeId> parent;
  for (const auto& [id, node] : nodes) parent[id] = id;
  auto find = [&](NodeId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<Decomposition::TreeEdge> tree;
  for (const PendingEdge& e : edges) {
    for (NodeId end : {e.u, e.v}) {
      if (!nodes.contains(end)) {
        throw ParseError(ErrorCode::kDanglingTreeEdge,
                         {e.line, 1, "tree edge references unknown node " +
                                         std::to_string(end)});
      }
    }
    const NodeId ru = find(e.u);
    const NodeId rv = find(e.v);
    if (ru == rv) {
      throw ParseError(ErrorCode::kCyclicTree,
                       {e.line, 1, "tree edge " + std::to_string(e.u) + " " +
                                       std::to_string(e.v) +
                                       " closes a cycle"});
    }
    parent[ru] = rv;
    tree.emplace_back(e.u, e.v);
  }
  return Decomposition(std::move(nodes), std::move(tree));
}

std::string serialize_ghd(const Decomposition& d) {
  const auto order = d.preorder();
  std::string out;
  for (const auto& [id, parent] : order) {
    const DecompositionNode& node = d.node(id);
    out += "node " + std::to_string(id) + " bag{" + join(node.bag) +
           "} cover{" + join(node.cover) + "}\n";
  }
  for (const auto& [id, parent] : order) {
    if (parent != 0) {
      out += "edge " + std::to_string(parent) + " " + std::to_string(id) + "\n";
    }
  }
  return out;
}

std::string to_dot(const Hypergraph& h) {
  std::string out = kDotHeader;
  append_hypergraph_cluster(h, out);
  out += "}\n";
  return out;
}

std::string to_dot(const Decomposition& d) {
  std::string out = kDotHeader;
  append_decomposition_cluster(d, out);
  out += "}\n";
  return out;
}

std::string to_dot(const Hypergraph& h, const Decomposition& d) {
  const ValidationReport report = validate(h, d);
  if (!report.valid()) {
    throw Error(ErrorCode::kInvalidDecomposition,
                "decomposition does not validate against the hypergraph");
  }
  std::string out = kDotHeader;
  append_hypergraph_cluster(h, out);
  append_decomposition_cluster(d, out);
  out += "}\n";
  return out;
}

}  // namespace ghd
