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

#include "ghd/hypergraph.h"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>
#include <utility>

#include "ghd/error.h"

namespace ghd {

Hypergraph Hypergraph::build(std::vector<EdgeSpec> edges) {
  std::vector<std::string> vertex_names;
  for (EdgeSpec& spec : edges) {
    if (spec.name.empty()) {
      throw Error(ErrorCode::kSyntaxError, "edge name must not be empty");
    }
    std::sort(spec.vertices.begin(), spec.vertices.end());
    spec.vertices.erase(std::unique(spec.vertices.begin(), spec.vertices.end()),
                        spec.vertices.end());
    if (spec.vertices.empty()) {
      throw Error(ErrorCode::kEmptyEdge, "edge '" + spec.name + "' is empty");
    }
    if (spec.vertices.front().empty()) {
      throw Error(ErrorCode::kSyntaxError,
                  "edge '" + spec.name + "' names an empty vertex");
    }
    vertex_names.insert(vertex_names.end(), spec.vertices.begin(),
                        spec.vertices.end());
  }
  std::sort(edges.begin(), edges.end(),
            [](const EdgeSpec& a, const EdgeSpec& b) { return a.name < b.name; });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].name == edges[i - 1].name) {
      throw Error(ErrorCode::kDuplicateEdgeName,
                  "duplicate edge name '" + edges[i].name + "'");
    }
  }
  std::sort(vertex_names.begin(), vertex_names.end());
  vertex_names.erase(std::unique(vertex_names.begin(), vertex_names.end()),
                     vertex_names.end());

  Hypergraph h;
  h.vertices_ = std::move(vertex_names);
  h.incidence_.resize(h.vertices_.size());
  h.edges_.reserve(edges.size());
  for (EdgeSpec& spec : edges) {
    Edge edge{std::move(spec.name), {}};
    edge.vertices.reserve(spec.vertices.size());
    for (const std::string& v : spec.vertices) {
      // Sorted names map to sorted ids.
      edge.vertices.push_back(*h.find_vertex(v));
    }
    const auto id = static_cast<EdgeId>(h.edges_.size());
    for (VertexId v : edge.vertices) h.incidence_[v].push_back(id);
    h.edges_.push_back(std::move(edge));
  }
  return h;
}

std::optional<VertexId> Hypergraph::find_vertex(std::string_view name) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - vertices_.begin());
}

std::optional<EdgeId> Hypergraph::find_edge(std::string_view name) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), name,
      [](const Edge& e, std::string_view n) { return e.name < n; });
  if (it == edges_.end() || it->name != name) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

VertexId Hypergraph::vertex_id(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw Error(ErrorCode::kUnknownVertex,
              "unknown vertex '" + std::string(name) + "'");
}

std::vector<std::string> Hypergraph::incident_edges(
    std::string_view vertex) const {
  std::vector<std::string> names;
  for (EdgeId e : incidence_[vertex_id(vertex)]) names.push_back(edges_[e].name);
  return names;
}

std::vector<EdgeSpec> Hypergraph::to_specs() const {
  std::vector<EdgeSpec> specs;
  specs.reserve(edges_.size());
  for (const Edge& e : edges_) {
    EdgeSpec spec{e.name, {}};
    for (VertexId v : e.vertices) spec.vertices.push_back(vertices_[v]);
    specs.push_back(std::move(spec));
  }
  return specs;
}

std::size_t PrimalGraph::num_edges() const {
  std::size_t degree_sum = 0;
  for (const VertexSet& n : adjacency_) degree_sum += n.size();
  return degree_sum / 2;
}

bool PrimalGraph::adjacent(VertexId u, VertexId v) const {
  const VertexSet& n = adjacency_[u];
  return std::binary_search(n.begin(), n.end(), v);
}

PrimalGraph primal_graph(const Hypergraph& h) {
  std::vector<VertexSet> adjacency(h.num_vertices());
  for (const Edge& e : h.edges()) {
    for (VertexId u : e.vertices) {
      for (VertexId v : e.vertices) {
        if (u != v) adjacency[u].push_back(v);
      }
    }
  }
  for (VertexSet& n : adjacency) {
    std::sort(n.begin(), n.end());
    n.erase(std::unique(n.begin(), n.end()), n.end());
  }
  return PrimalGraph(std::move(adjacency));
}

std::vector<VertexSet> connected_components(const Hypergraph& h) {
  const PrimalGraph g = primal_graph(h);
  std::vector<bool> seen(h.num_vertices(), false);
  std::vector<VertexSet> components;
  for (VertexId start = 0; start < static_cast<VertexId>(h.num_vertices());
       ++start) {
    if (seen[start]) continue;
    VertexSet component;
    std::queue<VertexId> frontier;
    frontier.push(start);
    seen[start] = true;
    while (!frontier.empty()) {
      const VertexId v = frontier.front();
      frontier.pop();
      component.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          frontier.push(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

std::optional<EdgeId> GyoResult::parent(EdgeId e) const {
  for (const Absorption& a : absorbed) {
    if (a.child == e) return a.parent;
  }
  return std::nullopt;
}

GyoResult gyo_reduce(const Hypergraph& h) {
  const auto num_vertices = static_cast<VertexId>(h.num_vertices());
  const auto num_edges = static_cast<EdgeId>(h.num_edges());

  std::vector<VertexSet> sets(num_edges);
  for (EdgeId e = 0; e < num_edges; ++e) sets[e] = h.edges()[e].vertices;
  std::vector<bool> alive(num_edges, true);
  // Surviving edges containing each vertex.
  std::vector<std::vector<EdgeId>> occurrences(num_vertices);
  for (EdgeId e = 0; e < num_edges; ++e) {
    for (VertexId v : sets[e]) occurrences[v].push_back(e);
  }

  // Smallest live f absorbing e: e strictly inside f, or equal with f's name
  // smaller.
  auto find_absorber = [&](EdgeId e) -> std::optional<EdgeId> {
    const VertexSet& s = sets[e];
    auto absorbs = [&](EdgeId f) {
      if (f == e || !alive[f]) return false;
      const VertexSet& t = sets[f];
      if (s.size() > t.size()) return false;
      if (s.size() == t.size() && f > e) return false;
      return std::includes(t.begin(), t.end(), s.begin(), s.end());
    };
    if (s.empty()) {
      for (EdgeId f = 0; f < num_edges; ++f) {
        if (absorbs(f)) return f;
      }
      return std::nullopt;
    }
    for (EdgeId f : occurrences[s.front()]) {
      if (absorbs(f)) return f;
    }
    return std::nullopt;
  };

  GyoResult result;
  while (true) {
    std::optional<VertexId> ear;
    for (VertexId v = 0; v < num_vertices; ++v) {
      if (occurrences[v].size() == 1) {
        ear = v;
        break;
      }
    }
    if (ear) {
      const EdgeId e = occurrences[*ear].front();
      occurrences[*ear].clear();
      VertexSet& s = sets[e];
      s.erase(std::lower_bound(s.begin(), s.end(), *ear));
      ++result.steps;
      continue;
    }

    bool absorbed = false;
    for (EdgeId e = 0; e < num_edges && !absorbed; ++e) {
      if (!alive[e]) continue;
      if (auto parent = find_absorber(e)) {
        alive[e] = false;
        for (VertexId v : sets[e]) {
          auto& occ = occurrences[v];
          occ.erase(std::find(occ.begin(), occ.end(), e));
        }
        result.absorbed.push_back({e, *parent});
        ++result.steps;
        absorbed = true;
      }
    }
    if (!absorbed) break;
  }

  for (EdgeId e = 0; e < num_edges; ++e) {
    if (!alive[e]) continue;
    if (sets[e].empty()) {
      result.roots.push_back(e);
    } else {
      result.residual.push_back({e, sets[e]});
    }
  }
  return result;
}

bool is_alpha_acyclic(const Hypergraph& h) {
  return gyo_reduce(h).residual.empty();
}

}  // namespace ghd
