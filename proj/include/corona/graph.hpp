// Copyright 2026 The corona-antimagic Authors
//
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

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "corona/error.hpp"

namespace corona {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// Undirected edge stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Immutable simple undirected graph. Edge ids are positions in the
/// construction order; every endpoint pair is stored as (min, max).
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t vertex_count, std::span<const std::pair<VertexId, VertexId>> edges,
        std::vector<std::string> names = {})
      : vertex_count_(vertex_count), names_(std::move(names)), incident_(vertex_count) {
    if (!names_.empty() && names_.size() != vertex_count_) {
      throw Error(ErrorCode::BadParams, "vertex name count does not match vertex count");
    }
    std::set<Edge> seen;
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
      if (a >= vertex_count_ || b >= vertex_count_) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "edge (" + std::to_string(a) + "," + std::to_string(b) +
                        ") on " + std::to_string(vertex_count_) + " vertices");
      }
      if (a == b) {
        throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(a));
      }
      Edge e{std::min(a, b), std::max(a, b)};
      if (!seen.insert(e).second) {
        throw Error(ErrorCode::DuplicateEdge,
                    "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") repeated");
      }
      incident_[e.u].push_back(edges_.size());
      incident_[e.v].push_back(edges_.size());
      edges_.push_back(e);
    }
  }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  /// Ids of the edges incident on `v`, in ascending edge-id order.
  std::span<const EdgeId> incident(VertexId v) const { return incident_.at(v); }
  std::size_t degree(VertexId v) const { return incident_.at(v).size(); }

  VertexId other_end(EdgeId e, VertexId v) const {
    const Edge& ed = edges_.at(e);
    return ed.u == v ? ed.v : ed.u;
  }

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const {
    if (a >= vertex_count_ || b >= vertex_count_) return std::nullopt;
    const auto& small = incident_[a].size() <= incident_[b].size() ? incident_[a] : incident_[b];
    for (EdgeId e : small) {
      const Edge& ed = edges_[e];
      if ((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)) return e;
    }
    return std::nullopt;
  }

  bool has_names() const noexcept { return !names_.empty(); }
  std::span<const std::string> names() const noexcept { return names_; }
  std::string name(VertexId v) const {
    return names_.empty() ? std::to_string(v) : names_.at(v);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> names_;
  std::vector<std::vector<EdgeId>> incident_;
};

inline Graph make_graph(std::size_t vertex_count,
                        std::span<const std::pair<VertexId, VertexId>> edges,
                        std::vector<std::string> names = {}) {
  return Graph(vertex_count, edges, std::move(names));
}

inline Graph make_graph(std::size_t vertex_count,
                        std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  std::vector<std::pair<VertexId, VertexId>> list(edges);
  return Graph(vertex_count, list);
}

struct DegreeProfile {
  std::vector<std::size_t> degrees;
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
};

inline DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) p.degrees.push_back(g.degree(v));
  if (!p.degrees.empty()) {
    auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
    p.min_degree = *lo;
    p.max_degree = *hi;
  }
  return p;
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(v)) {
      VertexId w = g.other_end(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.vertex_count();
}

}  // namespace corona
