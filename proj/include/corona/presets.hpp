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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "corona/error.hpp"
#include "corona/graph.hpp"

// Canonical small graphs. Edge order is part of the contract: the labeling
// algorithms hand out consecutive labels to an attachment's edges in exactly
// this order.
//
//   path(n)       (0,1),(1,2),...,(n-2,n-1)
//   cycle(n)      walk 1,0,n-1,n-2,...,2,1  i.e. (0,1),(0,n-1),(n-2,n-1),...,(1,2)
//                 so C3 lists its edges exactly like K3
//   complete(n)   lexicographic (i,j), i<j
//   star(n)       n vertices, hub 0, edges (0,1),...,(0,n-1)
//   K(a,b)        lexicographic, left side 0..a-1
//   diamond       (0,1),(0,2),(0,3),(1,2),(1,3); 0 and 1 have degree 3
//   pan(r)        u0..ur; u0u_r, u1u2, u_i u_{i+2} (1<=i<=r-2), u_{r-1}u_r
//   spider(p)     v0, x1..xp, y1..yp, z1..zp; leg edges from the tips inward,
//                 interleaved x,y,z, then v0x1, v0y1, v0z1
namespace corona {

enum class PresetKind { Path, Cycle, Complete, Star, CompleteBipartite, Diamond, Pan, Spider };

inline std::string_view to_string(PresetKind k) {
  switch (k) {
    case PresetKind::Path: return "path";
    case PresetKind::Cycle: return "cycle";
    case PresetKind::Complete: return "complete";
    case PresetKind::Star: return "star";
    case PresetKind::CompleteBipartite: return "complete_bipartite";
    case PresetKind::Diamond: return "diamond";
    case PresetKind::Pan: return "pan";
    case PresetKind::Spider: return "spider";
  }
  return "?";
}

inline std::optional<PresetKind> parse_preset_kind(std::string_view s) {
  for (auto k : {PresetKind::Path, PresetKind::Cycle, PresetKind::Complete, PresetKind::Star,
                 PresetKind::CompleteBipartite, PresetKind::Diamond, PresetKind::Pan,
                 PresetKind::Spider}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

namespace detail {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

inline void expect_params(PresetKind kind, std::span<const std::int64_t> params,
                          std::size_t count) {
  if (params.size() != count) {
    throw Error(ErrorCode::BadParams, std::string(to_string(kind)) + " takes " +
                                          std::to_string(count) + " parameter(s), got " +
                                          std::to_string(params.size()));
  }
}

inline std::size_t at_least(PresetKind kind, std::int64_t value, std::int64_t min) {
  if (value < min) {
    throw Error(ErrorCode::BadParams, std::string(to_string(kind)) + " needs parameter >= " +
                                          std::to_string(min) + ", got " +
                                          std::to_string(value));
  }
  return static_cast<std::size_t>(value);
}

inline std::vector<std::string> spider_names(std::size_t p) {
  std::vector<std::string> names{"v0"};
  for (char leg : {'x', 'y', 'z'}) {
    for (std::size_t k = 1; k <= p; ++k) names.push_back(std::string(1, leg) + std::to_string(k));
  }
  return names;
}

}  // namespace detail

/// Vertex id of leg vertex `leg`_`k` (leg 0,1,2 = x,y,z; 1 <= k <= p) in spider(p).
constexpr VertexId spider_vertex(std::size_t p, int leg, std::size_t k) {
  return static_cast<VertexId>(leg) * p + k;
}

inline Graph pan_graph(std::int64_t r_param) {
  const std::size_t r = detail::at_least(PresetKind::Pan, r_param, 3);
  detail::EdgeList e;
  e.emplace_back(0, r);
  e.emplace_back(1, 2);
  for (std::size_t i = 1; i + 2 <= r; ++i) e.emplace_back(i, i + 2);
  e.emplace_back(r - 1, r);
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= r; ++i) names.push_back("u" + std::to_string(i));
  return Graph(r + 1, e, std::move(names));
}

inline Graph spider_graph(std::int64_t p_param) {
  const std::size_t p = detail::at_least(PresetKind::Spider, p_param, 1);
  detail::EdgeList e;
  for (std::size_t k = p; k >= 2; --k) {
    for (int leg = 0; leg < 3; ++leg) {
      e.emplace_back(spider_vertex(p, leg, k), spider_vertex(p, leg, k - 1));
    }
  }
  for (int leg = 0; leg < 3; ++leg) e.emplace_back(0, spider_vertex(p, leg, 1));
  return Graph(3 * p + 1, e, detail::spider_names(p));
}

inline Graph preset_graph(PresetKind kind, std::span<const std::int64_t> params) {
  detail::EdgeList e;
  switch (kind) {
    case PresetKind::Path: {
      detail::expect_params(kind, params, 1);
      const std::size_t n = detail::at_least(kind, params[0], 1);
      for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      return Graph(n, e);
    }
    case PresetKind::Cycle: {
      detail::expect_params(kind, params, 1);
      const std::size_t n = detail::at_least(kind, params[0], 3);
      e.emplace_back(0, 1);
      e.emplace_back(0, n - 1);
      for (std::size_t i = n - 1; i >= 2; --i) e.emplace_back(i - 1, i);
      return Graph(n, e);
    }
    case PresetKind::Complete: {
      detail::expect_params(kind, params, 1);
      const std::size_t n = detail::at_least(kind, params[0], 1);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
      return Graph(n, e);
    }
    case PresetKind::Star: {
      detail::expect_params(kind, params, 1);
      const std::size_t n = detail::at_least(kind, params[0], 2);
      for (std::size_t i = 1; i < n; ++i) e.emplace_back(0, i);
      return Graph(n, e);
    }
    case PresetKind::CompleteBipartite: {
      detail::expect_params(kind, params, 2);
      const std::size_t a = detail::at_least(kind, params[0], 1);
      const std::size_t b = detail::at_least(kind, params[1], 1);
      for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) e.emplace_back(i, a + j);
      return Graph(a + b, e);
    }
    case PresetKind::Diamond: {
      detail::expect_params(kind, params, 0);
      e = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
      return Graph(4, e);
    }
    case PresetKind::Pan:
      detail::expect_params(kind, params, 1);
      return pan_graph(params[0]);
    case PresetKind::Spider:
      detail::expect_params(kind, params, 1);
      return spider_graph(params[0]);
  }
  throw Error(ErrorCode::BadParams, "unknown preset");
}

inline Graph preset_graph(PresetKind kind, std::initializer_list<std::int64_t> params) {
  std::vector<std::int64_t> v(params);
  return preset_graph(kind, std::span<const std::int64_t>(v));
}

inline Graph path_graph(std::int64_t n) { return preset_graph(PresetKind::Path, {n}); }
inline Graph cycle_graph(std::int64_t n) { return preset_graph(PresetKind::Cycle, {n}); }
inline Graph complete_graph(std::int64_t n) { return preset_graph(PresetKind::Complete, {n}); }
inline Graph star_graph(std::int64_t n) { return preset_graph(PresetKind::Star, {n}); }
inline Graph complete_bipartite_graph(std::int64_t a, std::int64_t b) {
  return preset_graph(PresetKind::CompleteBipartite, {a, b});
}
inline Graph diamond_graph() { return preset_graph(PresetKind::Diamond, {}); }

}  // namespace corona
