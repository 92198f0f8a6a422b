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
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "corona/error.hpp"
#include "corona/graph.hpp"
#include "corona/presets.hpp"

namespace corona {

/// Pan base on u0..ur with u0 pendant, r >= 3.
struct PanBase {
  std::int64_t r = 3;
};

/// Spider base with three legs of p vertices each, p >= 1.
struct SpiderBase {
  std::int64_t p = 1;
};

using BaseSpec = std::variant<PanBase, SpiderBase>;

enum class RoleKind { Base, Internal, Cross };

/// What a composite edge is. For cross edges `endpoint` is the base vertex
/// and `attachment_vertex` the 0-based vertex index inside H_block.
struct EdgeRole {
  RoleKind kind = RoleKind::Base;
  std::size_t index = 0;  // base edge index for Base, block position otherwise
  VertexId endpoint = 0;
  std::size_t attachment_vertex = 0;
};

/// One attached graph H_i and the composite ids it occupies. `first` and
/// `second` are the two endpoints of the base edge it hangs from: the lower
/// u for pan bases, the outer (tip-side) leg vertex for spider bases.
struct AttachmentBlock {
  std::size_t h_index = 0;  // i in H_i
  std::size_t base_edge = 0;
  VertexId first = 0;
  VertexId second = 0;
  VertexId first_vertex = 0;   // composite id of the attachment's vertex 0
  std::size_t vertex_count = 0;
  EdgeId first_internal = 0;   // internal edges are contiguous
  std::size_t internal_count = 0;
  std::vector<EdgeId> cross_first;   // cross_first[j]: first -- vertex j
  std::vector<EdgeId> cross_second;  // cross_second[j]: second -- vertex j

  VertexId vertex(std::size_t j) const { return first_vertex + j; }
  std::vector<VertexId> vertices() const {
    std::vector<VertexId> out(vertex_count);
    for (std::size_t j = 0; j < vertex_count; ++j) out[j] = first_vertex + j;
    return out;
  }
  std::vector<EdgeId> internal_edges() const {
    std::vector<EdgeId> out(internal_count);
    for (std::size_t j = 0; j < internal_count; ++j) out[j] = first_internal + j;
    return out;
  }
};

/// A generalized edge corona over a pan or spider base. Composite vertex ids:
/// base vertices first (same ids as the base preset), then each attachment in
/// order. Composite edge ids: base edges (same order as the base preset),
/// then per block its internal edges, cross edges to `first`, cross edges to
/// `second`.
struct CoronaInstance {
  BaseSpec base;
  Graph base_graph;
  std::vector<Graph> attachments;
  std::vector<AttachmentBlock> blocks;
  Graph composite;
  std::vector<EdgeRole> edge_roles;

  bool is_pan() const { return std::holds_alternative<PanBase>(base); }
  bool is_spider() const { return std::holds_alternative<SpiderBase>(base); }
  std::size_t r() const { return static_cast<std::size_t>(std::get<PanBase>(base).r); }
  std::size_t p() const { return static_cast<std::size_t>(std::get<SpiderBase>(base).p); }

  /// Block attached to H_i (numbered from H_0 for pan,
  /// H_1.. for spider).
  const AttachmentBlock& block(std::size_t h_index) const {
    const std::size_t offset = is_pan() ? 0 : 1;
    return blocks.at(h_index - offset);
  }
  std::size_t attachment_size(std::size_t h_index) const {
    return block(h_index).vertex_count;
  }
};

namespace detail {

inline void validate_attachments(std::span<const Graph> h, std::size_t expected) {
  if (h.size() != expected) {
    throw Error(ErrorCode::WrongAttachmentCount, "expected " + std::to_string(expected) +
                                                     " attachments, got " +
                                                     std::to_string(h.size()));
  }
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i].vertex_count() < 2) {
      throw Error(ErrorCode::AttachmentTooSmall,
                  "attachment #" + std::to_string(i) + " has fewer than two vertices");
    }
    if (!is_connected(h[i])) {
      throw Error(ErrorCode::DisconnectedAttachment,
                  "attachment #" + std::to_string(i) + " is disconnected");
    }
  }
}

/// `endpoints[k]` is the (first, second) pair for attachment k; attachment k
/// hangs from base edge k.
inline CoronaInstance assemble(BaseSpec spec, Graph base, std::vector<Graph> h,
                               std::span<const std::pair<VertexId, VertexId>> endpoints,
                               std::size_t h_offset) {
  CoronaInstance inst;
  inst.base = spec;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::string> names(base.names().begin(), base.names().end());
  for (const Edge& e : base.edges()) {
    inst.edge_roles.push_back({RoleKind::Base, inst.edge_roles.size(), 0, 0});
    edges.emplace_back(e.u, e.v);
  }
  VertexId next_vertex = base.vertex_count();
  for (std::size_t k = 0; k < h.size(); ++k) {
    const Graph& g = h[k];
    AttachmentBlock b;
    b.h_index = k + h_offset;
    b.base_edge = k;
    b.first = endpoints[k].first;
    b.second = endpoints[k].second;
    b.first_vertex = next_vertex;
    b.vertex_count = g.vertex_count();
    for (std::size_t j = 0; j < g.vertex_count(); ++j) {
      names.push_back("v" + std::to_string(b.h_index) + "_" + std::to_string(j + 1));
    }
    b.first_internal = edges.size();
    b.internal_count = g.edge_count();
    for (const Edge& e : g.edges()) {
      inst.edge_roles.push_back({RoleKind::Internal, k, 0, 0});
      edges.emplace_back(next_vertex + e.u, next_vertex + e.v);
    }
    for (VertexId end : {b.first, b.second}) {
      auto& list = end == b.first ? b.cross_first : b.cross_second;
      for (std::size_t j = 0; j < g.vertex_count(); ++j) {
        list.push_back(edges.size());
        inst.edge_roles.push_back({RoleKind::Cross, k, end, j});
        edges.emplace_back(end, next_vertex + j);
      }
    }
    next_vertex += g.vertex_count();
    inst.blocks.push_back(std::move(b));
  }
  inst.composite = Graph(next_vertex, edges, std::move(names));
  inst.base_graph = std::move(base);
  inst.attachments = std::move(h);
  return inst;
}

}  // namespace detail

/// Builds G1 <> (H_0, ..., H_r) over the pan graph of parameter r.
inline CoronaInstance build_type1(std::int64_t r_param, std::vector<Graph> h) {
  if (r_param < 3) {
    throw Error(ErrorCode::BadBaseParam, "pan base needs r >= 3, got " + std::to_string(r_param));
  }
  const auto r = static_cast<std::size_t>(r_param);
  detail::validate_attachments(h, r + 1);
  Graph base = pan_graph(r_param);
  std::vector<std::pair<VertexId, VertexId>> endpoints;
  for (const Edge& e : base.edges()) endpoints.emplace_back(e.u, e.v);
  return detail::assemble(PanBase{r_param}, std::move(base), std::move(h), endpoints, 0);
}

/// Builds G2 <> (H_1, ..., H_3p) over the spider with legs of p vertices.
inline CoronaInstance build_type2(std::int64_t p_param, std::vector<Graph> h) {
  if (p_param < 1) {
    throw Error(ErrorCode::BadBaseParam, "spider base needs p >= 1, got " + std::to_string(p_param));
  }
  const auto p = static_cast<std::size_t>(p_param);
  detail::validate_attachments(h, 3 * p);
  Graph base = spider_graph(p_param);
  std::vector<std::pair<VertexId, VertexId>> endpoints;
  for (std::size_t k = p; k >= 2; --k) {
    for (int leg = 0; leg < 3; ++leg) {
      endpoints.emplace_back(spider_vertex(p, leg, k), spider_vertex(p, leg, k - 1));
    }
  }
  for (int leg = 0; leg < 3; ++leg) endpoints.emplace_back(spider_vertex(p, leg, 1), 0);
  return detail::assemble(SpiderBase{p_param}, std::move(base), std::move(h), endpoints, 1);
}

inline CoronaInstance build_instance(const BaseSpec& spec, std::vector<Graph> h) {
  if (const auto* pan = std::get_if<PanBase>(&spec)) return build_type1(pan->r, std::move(h));
  return build_type2(std::get<SpiderBase>(spec).p, std::move(h));
}

/// Stable sort by vertex count. Never applied implicitly by the builders.
inline std::vector<Graph> normalize_attachments(std::vector<Graph> h) {
  std::stable_sort(h.begin(), h.end(), [](const Graph& a, const Graph& b) {
    return a.vertex_count() < b.vertex_count();
  });
  return h;
}

}  // namespace corona
