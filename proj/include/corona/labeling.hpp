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
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "corona/error.hpp"
#include "corona/graph.hpp"

namespace corona {

/// A run of vertices whose final sums the construction orders strictly, in
/// the order they appear in the distinctness chain.
struct ChainGroup {
  std::string name;
  std::vector<VertexId> vertices;
};

/// Vertices of one block after renaming by partial sum (the a^i_k or c_k
/// sequence), with the partial sums seen at ranking time.
struct RankedBlock {
  std::string name;
  std::vector<VertexId> order;
  std::vector<std::int64_t> partial_sums;
};

/// What a construction did, kept for reporting and for closed-form checks.
struct LabelTrace {
  std::vector<ChainGroup> chain;
  std::vector<RankedBlock> ranked;
  std::map<std::string, std::int64_t> offsets;
};

/// Edge labels indexed by edge id. 0 means "not labeled yet".
struct Labeling {
  std::vector<std::int64_t> labels;
  LabelTrace trace;

  Labeling() = default;
  explicit Labeling(std::size_t edge_count) : labels(edge_count, 0) {}

  std::size_t total_edges() const noexcept { return labels.size(); }
  std::int64_t operator[](EdgeId e) const { return labels.at(e); }
  bool is_labeled(EdgeId e) const { return labels.at(e) != 0; }
  bool complete() const {
    return std::none_of(labels.begin(), labels.end(), [](std::int64_t l) { return l == 0; });
  }
};

/// Gives `edges[j]` the label `start + 1 + j` and returns the last label used.
inline std::int64_t label_block(Labeling& state, std::span<const EdgeId> edges, std::int64_t start) {
  for (EdgeId e : edges) {
    if (state.labels.at(e) != 0) {
      throw Error(ErrorCode::AlreadyLabeled, "edge " + std::to_string(e) + " already carries label " +
                                                 std::to_string(state.labels[e]));
    }
  }
  for (EdgeId e : edges) state.labels[e] = ++start;
  return start;
}

inline std::int64_t label_block(Labeling& state, std::initializer_list<EdgeId> edges,
                                std::int64_t start) {
  std::vector<EdgeId> v(edges);
  return label_block(state, std::span<const EdgeId>(v), start);
}

/// Sorts `vertices` by (partial sum, vertex id). `partial_sums[k]` belongs to
/// `vertices[k]`.
inline RankedBlock rank_by_partial_sums(std::span<const VertexId> vertices,
                                        std::span<const std::int64_t> partial_sums) {
  if (vertices.size() != partial_sums.size()) {
    throw Error(ErrorCode::BadParams, "every ranked vertex needs a partial sum");
  }
  std::vector<std::size_t> idx(vertices.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (partial_sums[a] != partial_sums[b]) return partial_sums[a] < partial_sums[b];
    return vertices[a] < vertices[b];
  });
  RankedBlock out;
  for (std::size_t k : idx) {
    out.order.push_back(vertices[k]);
    out.partial_sums.push_back(partial_sums[k]);
  }
  return out;
}

inline RankedBlock rank_by_partial_sums(const std::map<VertexId, std::int64_t>& sums) {
  std::vector<VertexId> vs;
  std::vector<std::int64_t> ps;
  for (auto [v, s] : sums) {
    vs.push_back(v);
    ps.push_back(s);
  }
  return rank_by_partial_sums(vs, ps);
}

namespace detail {

inline std::int64_t labeled_sum(const Graph& g, const Labeling& f, VertexId v) {
  std::int64_t s = 0;
  for (EdgeId e : g.incident(v)) s += f.labels[e];
  return s;
}

inline RankedBlock rank_now(const Graph& g, const Labeling& f, std::span<const VertexId> vertices,
                            std::string name) {
  std::vector<std::int64_t> sums;
  sums.reserve(vertices.size());
  for (VertexId v : vertices) sums.push_back(labeled_sum(g, f, v));
  RankedBlock b = rank_by_partial_sums(vertices, sums);
  b.name = std::move(name);
  return b;
}

}  // namespace detail

}  // namespace corona
