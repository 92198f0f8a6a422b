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
#include <set>
#include <string>
#include <vector>

#include "corona/conditions.hpp"
#include "corona/corona.hpp"
#include "corona/error.hpp"
#include "corona/labeling.hpp"
#include "corona/presets.hpp"

// Constructive antimagic labelings of generalized edge coronas.
//
// Every construction hands out labels in contiguous runs: a block's internal
// edges, then runs of cross edges. Before a run of cross edges that is meant
// to separate a block's vertices, the vertices are ranked by their current
// partial sums (ties by vertex id) and the run is assigned along the ranking,
// so final sums inside the block come out strictly increasing.
namespace corona {

struct LabelOptions {
  /// Run even when the sufficient conditions fail. The output is still a
  /// bijection; only the verifier can say whether it is antimagic.
  bool force = false;
};

namespace detail {

inline void require_conditions(const CoronaInstance& inst, const LabelOptions& opts) {
  if (opts.force) return;
  const ConditionReport report = check_conditions(inst);
  if (!report.overall) {
    std::string failed;
    for (const auto& id : report.failed_ids()) failed += (failed.empty() ? "" : ", ") + id;
    throw Error(ErrorCode::ConditionsNotMet, "failed: " + failed);
  }
}

/// Cross edges from `hub` side of block `b` listed along `ranked`.
inline std::vector<EdgeId> along(const AttachmentBlock& b, const std::vector<EdgeId>& side,
                                 const RankedBlock& ranked) {
  std::vector<EdgeId> out;
  out.reserve(ranked.order.size());
  for (VertexId v : ranked.order) out.push_back(side.at(v - b.first_vertex));
  return out;
}

inline std::vector<VertexId> with_vertices(std::vector<VertexId> head, const AttachmentBlock& b) {
  for (VertexId v : b.vertices()) head.push_back(v);
  return head;
}

}  // namespace detail

/// Labels a graph that has a vertex adjacent to all others: every edge away
/// from the hub first, then the hub's edges in rank order of the other
/// vertices' partial sums. The result is checked, not trusted.
inline Labeling universal_vertex_labeling(const Graph& g, VertexId hub) {
  if (hub >= g.vertex_count()) {
    throw Error(ErrorCode::IndexOutOfRange, "hub " + std::to_string(hub));
  }
  if (g.degree(hub) + 1 != g.vertex_count()) {
    throw Error(ErrorCode::NotUniversal, "vertex " + g.name(hub) + " has degree " +
                                             std::to_string(g.degree(hub)) + " of " +
                                             std::to_string(g.vertex_count() - 1));
  }
  Labeling f(g.edge_count());
  std::vector<EdgeId> away;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).u != hub && g.edge(e).v != hub) away.push_back(e);
  }
  std::int64_t next = label_block(f, away, 0);
  f.trace.offsets["k"] = next;

  std::vector<VertexId> others;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (v != hub) others.push_back(v);
  RankedBlock ranked = detail::rank_now(g, f, others, "c");
  std::vector<EdgeId> spokes;
  for (VertexId v : ranked.order) spokes.push_back(*g.find_edge(hub, v));
  label_block(f, spokes, next);

  f.trace.chain.push_back({"c", ranked.order});
  f.trace.chain.push_back({g.name(hub), {hub}});
  f.trace.ranked.push_back(std::move(ranked));

  std::set<std::int64_t> sums;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!sums.insert(detail::labeled_sum(g, f, v)).second) {
      throw Error(ErrorCode::ConstructionFailed,
                  "hub construction produced a repeated vertex sum at " + g.name(v));
    }
  }
  return f;
}

/// Labeling of G1 <> (H_0, ..., H_r) over a pan base.
inline Labeling label_type1(const CoronaInstance& inst, const LabelOptions& opts = {}) {
  if (!inst.is_pan()) throw Error(ErrorCode::WrongBaseType, "expected a pan base");
  detail::require_conditions(inst, opts);
  const Graph& g = inst.composite;
  const std::size_t r = inst.r();
  Labeling f(g.edge_count());

  // Step 1: E(u0) = {u0 u_r} then u0 -- H_0, followed by every E(H_i).
  const AttachmentBlock& h0 = inst.block(0);
  std::vector<EdgeId> star_u0{h0.base_edge};
  star_u0.insert(star_u0.end(), h0.cross_first.begin(), h0.cross_first.end());
  std::int64_t last = label_block(f, star_u0, 0);
  for (const AttachmentBlock& b : inst.blocks) last = label_block(f, b.internal_edges(), last);
  f.trace.offsets["c"] = last;

  for (const AttachmentBlock& b : inst.blocks) {
    f.trace.ranked.push_back(
        detail::rank_now(g, f, b.vertices(), "a" + std::to_string(b.h_index)));
  }

  // Step 2: u_r -- H_0, then both endpoint stars of H_1..H_r.
  last = label_block(f, detail::along(h0, h0.cross_second, f.trace.ranked[0]), last);
  for (std::size_t i = 1; i <= r; ++i) {
    const AttachmentBlock& b = inst.block(i);
    last = label_block(f, detail::along(b, b.cross_first, f.trace.ranked[i]), last);
    last = label_block(f, detail::along(b, b.cross_second, f.trace.ranked[i]), last);
  }
  f.trace.offsets["b"] = last;

  // Step 3: the cycle edges, u1u2 first, in base order.
  std::vector<EdgeId> cycle;
  for (std::size_t i = 1; i <= r; ++i) cycle.push_back(inst.block(i).base_edge);
  label_block(f, cycle, last);

  f.trace.chain.push_back({"u0", {0}});
  for (const RankedBlock& rb : f.trace.ranked) f.trace.chain.push_back({rb.name, rb.order});
  for (VertexId u = 1; u <= r; ++u) f.trace.chain.push_back({g.name(u), {u}});
  return f;
}

namespace detail {

/// Labels E(H_k), the tip's cross edges in index order, ranks the tip with
/// V(H_k) and gives the inner endpoint's star (leg edge included) the next
/// run along that ranking.
inline std::int64_t label_tip_block(const CoronaInstance& inst, Labeling& f, std::size_t k,
                                    std::int64_t last) {
  const Graph& g = inst.composite;
  const AttachmentBlock& b = inst.block(k);
  last = label_block(f, b.internal_edges(), last);
  last = label_block(f, b.cross_first, last);
  RankedBlock ranked = rank_now(g, f, with_vertices({b.first}, b), "a" + std::to_string(k));
  std::vector<EdgeId> star;
  for (VertexId v : ranked.order) {
    star.push_back(v == b.first ? b.base_edge : b.cross_second.at(v - b.first_vertex));
  }
  last = label_block(f, star, last);
  f.trace.chain.push_back({ranked.name, ranked.order});
  f.trace.ranked.push_back(std::move(ranked));
  return last;
}

/// The three blocks hanging from x1 v0, y1 v0, z1 v0 and the star of v0.
inline void label_center(const CoronaInstance& inst, Labeling& f, std::int64_t last) {
  const Graph& g = inst.composite;
  const std::size_t p = inst.p();
  std::vector<const AttachmentBlock*> inner;
  for (std::size_t k = 3 * p - 2; k <= 3 * p; ++k) inner.push_back(&inst.block(k));
  for (const auto* b : inner) last = label_block(f, b->internal_edges(), last);
  f.trace.offsets["X"] = last;
  for (const auto* b : inner) last = label_block(f, b->cross_first, last);

  std::vector<VertexId> members;
  for (const auto* b : inner) members.push_back(b->first);
  for (const auto* b : inner)
    for (VertexId v : b->vertices()) members.push_back(v);
  RankedBlock ranked = rank_now(g, f, members, "c");
  f.trace.offsets["M"] = static_cast<std::int64_t>(members.size());

  std::vector<EdgeId> star;
  for (VertexId v : ranked.order) {
    bool placed = false;
    for (const auto* b : inner) {
      if (v == b->first) {
        star.push_back(b->base_edge);
        placed = true;
      } else if (v >= b->first_vertex && v < b->first_vertex + b->vertex_count) {
        star.push_back(b->cross_second.at(v - b->first_vertex));
        placed = true;
      }
    }
    if (!placed) throw Error(ErrorCode::ConstructionFailed, "vertex outside the center blocks");
  }
  label_block(f, star, last);
  f.trace.chain.push_back({"c", ranked.order});
  f.trace.chain.push_back({"v0", {0}});
  f.trace.ranked.push_back(std::move(ranked));
}

}  // namespace detail

/// Labeling of G2 <> (H_1, ..., H_3p) over a spider base.
inline Labeling label_type2(const CoronaInstance& inst, const LabelOptions& opts = {}) {
  if (!inst.is_spider()) throw Error(ErrorCode::WrongBaseType, "expected a spider base");
  const std::size_t p = inst.p();
  if (p == 1) return universal_vertex_labeling(inst.composite, 0);
  detail::require_conditions(inst, opts);
  const Graph& g = inst.composite;
  Labeling f(g.edge_count());

  // Steps 1-3: the three tip blocks.
  std::int64_t last = detail::label_tip_block(inst, f, 1, 0);
  f.trace.offsets["A"] = last;
  last = detail::label_tip_block(inst, f, 2, last);
  f.trace.offsets["B"] = last;
  last = detail::label_tip_block(inst, f, 3, last);
  f.trace.offsets["z"] = last;

  if (p > 2) {
    const std::size_t first = 4, final = 3 * p - 3;
    // Step 4: internal edges of the middle blocks.
    for (std::size_t k = first; k <= final; ++k) {
      last = label_block(f, inst.block(k).internal_edges(), last);
    }
    f.trace.offsets["L"] = last;
    // Step 5: inner endpoint stars in index order, then rank the blocks.
    for (std::size_t k = first; k <= final; ++k) {
      last = label_block(f, inst.block(k).cross_second, last);
    }
    f.trace.offsets["N"] = last;
    const std::size_t ranked_before = f.trace.ranked.size();
    for (std::size_t k = first; k <= final; ++k) {
      f.trace.ranked.push_back(
          detail::rank_now(g, f, inst.block(k).vertices(), "a" + std::to_string(k)));
    }
    // Step 6: outer endpoint stars along the ranking.
    for (std::size_t k = first; k <= final; ++k) {
      const AttachmentBlock& b = inst.block(k);
      const RankedBlock& rb = f.trace.ranked[ranked_before + (k - first)];
      last = label_block(f, detail::along(b, b.cross_first, rb), last);
      f.trace.chain.push_back({rb.name, rb.order});
    }
    f.trace.offsets["S"] = last;
    // Step 7: leg edges below the tips, interleaved x, y, z.
    std::vector<EdgeId> legs;
    for (std::size_t k = first; k <= final; ++k) legs.push_back(inst.block(k).base_edge);
    last = label_block(f, legs, last);
    for (std::size_t k = p - 1; k >= 2; --k) {
      for (int leg = 0; leg < 3; ++leg) {
        const VertexId v = spider_vertex(p, leg, k);
        f.trace.chain.push_back({g.name(v), {v}});
      }
    }
  }

  // Steps 8-9 (Steps 4-5 when p = 2).
  detail::label_center(inst, f, last);
  return f;
}

/// Dispatches on the base type.
inline Labeling label_instance(const CoronaInstance& inst, const LabelOptions& opts = {}) {
  return inst.is_pan() ? label_type1(inst, opts) : label_type2(inst, opts);
}

}  // namespace corona
