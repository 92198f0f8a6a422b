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

// Shared generators and fixtures for the test binaries.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "corona/conditions.hpp"
#include "corona/corona.hpp"
#include "corona/graph.hpp"
#include "corona/presets.hpp"

namespace corona::testing {

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Connected graph on n vertices: random spanning tree plus extra edges.
inline Graph random_connected_graph(std::mt19937_64& rng, int n, double extra_density = 0.3) {
  std::set<std::pair<VertexId, VertexId>> edges;
  for (int v = 1; v < n; ++v) {
    const auto parent = static_cast<VertexId>(uniform_int(rng, 0, v - 1));
    edges.emplace(parent, static_cast<VertexId>(v));
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (static_cast<double>(rng() % 1000) / 1000.0 < extra_density) {
        edges.emplace(static_cast<VertexId>(a), static_cast<VertexId>(b));
      }
    }
  }
  std::vector<std::pair<VertexId, VertexId>> list(edges.begin(), edges.end());
  std::shuffle(list.begin(), list.end(), rng);
  return make_graph(static_cast<std::size_t>(n), list);
}

/// Arbitrary (possibly disconnected) simple graph with at most max_edges edges.
inline Graph random_small_graph(std::mt19937_64& rng, int n, int max_edges) {
  std::vector<std::pair<VertexId, VertexId>> all;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
  std::shuffle(all.begin(), all.end(), rng);
  const int m = uniform_int(rng, 1, std::min<int>(max_edges, static_cast<int>(all.size())));
  all.resize(static_cast<std::size_t>(m));
  return make_graph(static_cast<std::size_t>(n), all);
}

inline std::vector<Graph> complete_graphs(const std::vector<int>& sizes) {
  std::vector<Graph> out;
  for (int s : sizes) out.push_back(complete_graph(s));
  return out;
}

inline CoronaInstance pan5_fixture() {
  return build_type1(5, {complete_graph(2), cycle_graph(3), cycle_graph(3), cycle_graph(4),
                         diamond_graph(), complete_graph(4)});
}

inline CoronaInstance spider2_fixture() {
  return build_type2(2, {complete_graph(2), cycle_graph(3), cycle_graph(3), complete_graph(4),
                         complete_graph(4), complete_graph(4)});
}

inline CoronaInstance spider4_fixture() {
  std::vector<Graph> h(9, complete_graph(2));
  for (int i = 0; i < 3; ++i) h.push_back(complete_graph(5));
  return build_type2(4, std::move(h));
}

/// Type I with complete attachments of non-decreasing sizes satisfying every
/// hypothesis (rejection sampled).
inline CoronaInstance random_type1_complete(std::mt19937_64& rng, int max_r = 12, int max_size = 7) {
  for (;;) {
    const int r = uniform_int(rng, 3, max_r);
    std::vector<int> sizes;
    for (int i = 0; i <= r; ++i) sizes.push_back(uniform_int(rng, 2, max_size));
    std::sort(sizes.begin(), sizes.end());
    if (sizes[0] >= sizes[1]) continue;
    if (sizes[static_cast<std::size_t>(r)] > sizes[1] + sizes[2] + 1) continue;
    auto inst = build_type1(r, complete_graphs(sizes));
    if (check_conditions(inst).overall) return inst;
  }
}

/// Type II with complete attachments, p <= max_p, satisfying every hypothesis.
inline CoronaInstance random_type2_complete(std::mt19937_64& rng, int max_p = 6, int max_size = 7) {
  for (;;) {
    const int p = uniform_int(rng, 1, max_p);
    std::vector<int> sizes;
    for (int i = 0; i < 3 * p; ++i) sizes.push_back(uniform_int(rng, 2, max_size));
    std::sort(sizes.begin(), sizes.end());
    if (p > 2) {
      // Condition (iii) pins the middle blocks to |V(H_4)|.
      const int mid = sizes[3];
      for (int i = 4; i <= 3 * p - 3; ++i) sizes[static_cast<std::size_t>(i - 1)] = mid;
      std::sort(sizes.begin(), sizes.end());
    }
    auto inst = build_type2(p, complete_graphs(sizes));
    if (check_conditions(inst).overall) return inst;
  }
}

struct ViolatingCase {
  std::string name;
  CoronaInstance instance;
  std::string family;  // the one hypothesis family that must fail
};

/// Hand-built instances, each breaking exactly one named hypothesis.
inline std::vector<ViolatingCase> violating_cases() {
  const Graph k2 = complete_graph(2), k3 = complete_graph(3), k4 = complete_graph(4),
              k5 = complete_graph(5), k6 = complete_graph(6), k8 = complete_graph(8),
              k9 = complete_graph(9);
  const Graph c3 = cycle_graph(3), c4 = cycle_graph(4), c5 = cycle_graph(5);
  const Graph p3 = path_graph(3), p4 = path_graph(4), s4 = star_graph(4);
  const Graph dia = diamond_graph();
  std::vector<ViolatingCase> v;
  auto t1 = [&](std::string name, std::vector<Graph> h, std::string family) {
    const auto r = static_cast<std::int64_t>(h.size()) - 1;
    v.push_back({std::move(name), build_type1(r, std::move(h)), std::move(family)});
  };
  auto t2 = [&](std::string name, std::vector<Graph> h, std::string family) {
    const auto p = static_cast<std::int64_t>(h.size()) / 3;
    v.push_back({std::move(name), build_type2(p, std::move(h)), std::move(family)});
  };
  t1("pan K2,P3,C3,C3", {k2, p3, c3, c3}, "T41-star-1");
  t1("pan K3,C4,C4,C4", {k3, c4, c4, c4}, "T41-star-1");
  t1("pan K2,diamond,C4,C4", {k2, dia, c4, c4}, "T41-star-2");
  t1("pan K2,C3,K4,C4", {k2, c3, k4, c4}, "T41-star-2");
  t1("pan P3,K4,K4,K4", {p3, k4, k4, k4}, "T41-star-3");
  t1("pan S4,K5,K5,K5", {s4, k5, k5, k5}, "T41-star-3");
  t1("pan K2,C3,C3,K8", {k2, c3, c3, k8}, "T41-star-4");
  t1("pan K2,C3,C3,C3,K9", {k2, c3, c3, c3, k9}, "T41-star-4");
  t1("pan K2,C4,C3,C3", {k2, c4, c3, c3}, "T41-size");
  t1("pan K2,C5,C4,C4", {k2, c5, c4, c4}, "T41-size");
  t2("spider2 K2,C3,C3,K4,C4,K4", {k2, c3, c3, k4, c4, k4}, "T42-delta");
  t2("spider2 P4,C4,K4,K4,K4,K4", {p4, c4, k4, k4, k4, k4}, "T42-deg-x2");
  t2("spider2 K2,P4,C4,K4,K4,K4", {k2, p4, c4, k4, k4, k4}, "T42-deg-y2");
  t2("spider2 K2,K2,P4,C4,C4,C4", {k2, k2, p4, c4, c4, c4}, "T42-deg-z2");
  t2("spider2 K2,C3,C3,C5,C5,C4", {k2, c3, c3, c5, c5, c4}, "T42-size");
  t2("spider3 K2x6,K5,C5,K5", {k2, k2, k2, k2, k2, k2, k5, c5, k5}, "T43-i");
  t2("spider3 P4,C4,K4x4,K9x3", {p4, c4, k4, k4, k4, k4, k9, k9, k9}, "T43-ii-x");
  t2("spider3 K2,P4,C4,K4x3,K9x3", {k2, p4, c4, k4, k4, k4, k9, k9, k9}, "T43-ii-y");
  t2("spider3 K2,K2,P4,C4x3,K9x3", {k2, k2, p4, c4, c4, c4, k9, k9, k9}, "T43-ii-z");
  t2("spider3 K2x5,P3,K6x3", {k2, k2, k2, k2, k2, p3, k6, k6, k6}, "T43-iii");
  t2("spider3 K2x6,K4x3", {k2, k2, k2, k2, k2, k2, k4, k4, k4}, "T43-iv");
  t2("spider3 K2,C3,C3,C5,C4,C4,K8x3", {k2, c3, c3, c5, c4, c4, k8, k8, k8}, "T43-size");
  return v;
}

}  // namespace corona::testing
