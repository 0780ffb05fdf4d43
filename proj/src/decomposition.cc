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

#include "ghd/decomposition.h"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "ghd/error.h"

namespace ghd {
namespace {

void sort_unique(std::vector<std::string>& names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
}

std::vector<std::string> edge_vertex_names(const Hypergraph& h, EdgeId e) {
  std::vector<std::string> names;
  for (VertexId v : h.edges()[e].vertices) names.push_back(h.vertex_name(v));
  return names;
}

bool contains_all(const std::vector<std::string>& haystack,
                  const std::vector<std::string>& needles) {
  return std::includes(haystack.begin(), haystack.end(), needles.begin(),
                       needles.end());
}

}  // namespace

Decomposition::Decomposition(std::map<NodeId, DecompositionNode> nodes,
                             std::vector<TreeEdge> tree_edges)
    : nodes_(std::move(nodes)) {
  for (auto& [id, node] : nodes_) {
    if (id <= 0) {
      throw Error(ErrorCode::kInvalidNodeId,
                  "node id " + std::to_string(id) + " is not positive");
    }
    sort_unique(node.bag);
    sort_unique(node.cover);
  }
  for (auto& [u, v] : tree_edges) {
    for (NodeId end : {u, v}) {
      if (!nodes_.contains(end)) {
        throw Error(ErrorCode::kDanglingTreeEdge,
                    "tree edge " + std::to_string(u) + "-" + std::to_string(v) +
                        " references unknown node " + std::to_string(end));
      }
    }
    if (u == v) {
      throw Error(ErrorCode::kCyclicTree,
                  "tree edge " + std::to_string(u) + "-" + std::to_string(v) +
                      " is a self loop");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(tree_edges.begin(), tree_edges.end());

  // Union-find over node ids; a repeated edge also closes a cycle.
  std::map<NodeId, NodeId> parent;
  for (const auto& [id, node] : nodes_) parent[id] = id;
  auto find = [&](NodeId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& [u, v] : tree_edges) {
    const NodeId ru = find(u);
    const NodeId rv = find(v);
    if (ru == rv) {
      throw Error(ErrorCode::kCyclicTree,
                  "tree edge " + std::to_string(u) + "-" + std::to_string(v) +
                      " closes a cycle");
    }
    parent[ru] = rv;
  }
  tree_edges_ = std::move(tree_edges);
}

std::optional<NodeId> Decomposition::root() const {
  if (nodes_.empty()) return std::nullopt;
  return nodes_.begin()->first;
}

std::map<NodeId, std::vector<NodeId>> Decomposition::adjacency() const {
  std::map<NodeId, std::vector<NodeId>> adj;
  for (const auto& [id, node] : nodes_) adj[id];
  for (const auto& [u, v] : tree_edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& [id, n] : adj) std::sort(n.begin(), n.end());
  return adj;
}

std::vector<std::pair<NodeId, NodeId>> Decomposition::preorder() const {
  const auto adj = adjacency();
  std::set<NodeId> visited;
  std::vector<std::pair<NodeId, NodeId>> order;
  order.reserve(nodes_.size());
  for (const auto& [start, node] : nodes_) {
    if (visited.contains(start)) continue;
    // Explicit stack; children pushed in reverse so the smallest pops first.
    std::vector<std::pair<NodeId, NodeId>> stack{{start, 0}};
    while (!stack.empty()) {
      const auto [id, parent] = stack.back();
      stack.pop_back();
      visited.insert(id);
      order.emplace_back(id, parent);
      const auto& children = adj.at(id);
      for (auto it = children.rbegin(); it != children.rend(); ++it) {
        if (*it != parent) stack.emplace_back(*it, id);
      }
    }
  }
  return order;
}

ValidationReport validate(const Hypergraph& h, const Decomposition& d) {
  ValidationReport report;

  for (EdgeId e = 0; e < static_cast<EdgeId>(h.num_edges()); ++e) {
    const auto names = edge_vertex_names(h, e);
    const bool covered = std::any_of(
        d.nodes().begin(), d.nodes().end(),
        [&](const auto& entry) { return contains_all(entry.second.bag, names); });
    if (!covered) {
      report.edge_coverage = {false, h.edge_name(e)};
      break;
    }
  }

  // Occurrence lists, keyed (and therefore ordered) by vertex name.
  std::map<std::string, std::vector<NodeId>> occurrences;
  for (const auto& [id, node] : d.nodes()) {
    for (const std::string& v : node.bag) occurrences[v].push_back(id);
  }
  const auto adj = d.adjacency();
  for (const auto& [vertex, holders] : occurrences) {
    std::set<NodeId> inside(holders.begin(), holders.end());
    std::set<NodeId> reached{holders.front()};
    std::queue<NodeId> frontier;
    frontier.push(holders.front());
    while (!frontier.empty()) {
      const NodeId t = frontier.front();
      frontier.pop();
      for (NodeId u : adj.at(t)) {
        if (inside.contains(u) && reached.insert(u).second) frontier.push(u);
      }
    }
    if (reached.size() != inside.size()) {
      report.connectedness = {false, vertex};
      break;
    }
  }

  for (const auto& [id, node] : d.nodes()) {
    std::vector<std::string> covered;
    for (const std::string& name : node.cover) {
      if (auto e = h.find_edge(name)) {
        auto names = edge_vertex_names(h, *e);
        covered.insert(covered.end(), names.begin(), names.end());
      }
    }
    sort_unique(covered);
    if (!contains_all(covered, node.bag)) {
      report.bag_cover = {false, std::to_string(id)};
      break;
    }
  }

  std::optional<std::string> unknown_vertex;
  std::optional<std::string> unknown_edge;
  for (const auto& [vertex, holders] : occurrences) {
    if (!h.find_vertex(vertex)) {
      unknown_vertex = vertex;
      break;
    }
  }
  for (const auto& [id, node] : d.nodes()) {
    for (const std::string& name : node.cover) {
      if (!h.find_edge(name) && (!unknown_edge || name < *unknown_edge)) {
        unknown_edge = name;
      }
    }
  }
  if (unknown_vertex) {
    report.references = {false, "unknown-vertex " + *unknown_vertex};
  } else if (unknown_edge) {
    report.references = {false, "unknown-edge " + *unknown_edge};
  } else {
    for (const std::string& vertex : h.vertices()) {
      if (!occurrences.contains(vertex)) {
        report.references = {false, "missing-vertex " + vertex};
        break;
      }
    }
  }
  return report;
}

std::size_t width(const Decomposition& d) {
  std::size_t w = 0;
  for (const auto& [id, node] : d.nodes()) w = std::max(w, node.cover.size());
  return w;
}

std::vector<std::string> lint(const Hypergraph& h, const Decomposition& d) {
  std::vector<std::string> warnings;
  for (const auto& [id, node] : d.nodes()) {
    for (const std::string& name : node.cover) {
      const auto e = h.find_edge(name);
      if (!e) continue;
      const auto names = edge_vertex_names(h, *e);
      std::vector<std::string> shared;
      std::set_intersection(names.begin(), names.end(), node.bag.begin(),
                            node.bag.end(), std::back_inserter(shared));
      if (shared.empty()) {
        warnings.push_back("node " + std::to_string(id) + ": cover edge " +
                           name + " shares no vertex with the bag");
      }
    }
  }
  return warnings;
}

HypergraphStats compute_stats(const Hypergraph& h) {
  HypergraphStats s;
  s.num_vertices = h.num_vertices();
  s.num_edges = h.num_edges();
  if (!h.empty()) {
    s.min_edge_size = h.edges().front().vertices.size();
    std::size_t total = 0;
    for (const Edge& e : h.edges()) {
      s.min_edge_size = std::min(s.min_edge_size, e.vertices.size());
      s.max_edge_size = std::max(s.max_edge_size, e.vertices.size());
      total += e.vertices.size();
    }
    s.mean_edge_size =
        static_cast<double>(total) / static_cast<double>(h.num_edges());
  }
  s.primal_edges = primal_graph(h).num_edges();
  s.components = connected_components(h).size();
  s.alpha_acyclic = is_alpha_acyclic(h);
  return s;
}

std::string stats(const Hypergraph& h) {
  const HypergraphStats s = compute_stats(h);
  char mean[32];
  std::snprintf(mean, sizeof(mean), "%.3f", s.mean_edge_size);
  std::string out;
  out += "vertices=" + std::to_string(s.num_vertices) + "\n";
  out += "edges=" + std::to_string(s.num_edges) + "\n";
  out += "min_edge_size=" + std::to_string(s.min_edge_size) + "\n";
  out += "max_edge_size=" + std::to_string(s.max_edge_size) + "\n";
  out += "mean_edge_size=" + std::string(mean) + "\n";
  out += "primal_edges=" + std::to_string(s.primal_edges) + "\n";
  out += "components=" + std::to_string(s.components) + "\n";
  out += std::string("alpha_acyclic=") + (s.alpha_acyclic ? "true" : "false") +
         "\n";
  return out;
}

}  // namespace ghd
