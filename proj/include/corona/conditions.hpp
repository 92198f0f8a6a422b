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
#include <set>
#include <string>
#include <vector>

#include "corona/corona.hpp"
#include "corona/graph.hpp"
#include "corona/presets.hpp"

namespace corona {

/// One hypothesis of the sufficient conditions, evaluated as `lhs < rhs`
/// (strict) or `lhs <= rhs`.
struct ConditionRecord {
  std::string id;      // e.g. "T41-star-2[3]"
  std::string family;  // id without the index suffix, e.g. "T41-star-2"
  bool holds = false;
  bool strict = false;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  std::string description;
};

struct ConditionReport {
  std::vector<ConditionRecord> conditions;
  bool overall = true;

  std::set<std::string> failed_families() const {
    std::set<std::string> out;
    for (const auto& c : conditions)
      if (!c.holds) out.insert(c.family);
    return out;
  }
  std::vector<std::string> failed_ids() const {
    std::vector<std::string> out;
    for (const auto& c : conditions)
      if (!c.holds) out.push_back(c.id);
    return out;
  }
  const ConditionRecord* find(const std::string& id) const {
    for (const auto& c : conditions)
      if (c.id == id) return &c;
    return nullptr;
  }
};

/// Degree facts of one attachment block, in H_i and in the composite.
struct BlockDegrees {
  std::int64_t min_internal = 0;   // delta(H_i)
  std::int64_t max_internal = 0;   // Delta(H_i)
  std::int64_t min_composite = 0;  // delta'(H_i)
  std::int64_t max_composite = 0;  // Delta'(H_i)
};

inline BlockDegrees block_degrees(const CoronaInstance& inst, std::size_t h_index) {
  const AttachmentBlock& b = inst.block(h_index);
  const DegreeProfile own = degree_profile(inst.attachments.at(b.base_edge));
  std::size_t lo = SIZE_MAX, hi = 0;
  for (VertexId v : b.vertices()) {
    lo = std::min(lo, inst.composite.degree(v));
    hi = std::max(hi, inst.composite.degree(v));
  }
  return {static_cast<std::int64_t>(own.min_degree), static_cast<std::int64_t>(own.max_degree),
          static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)};
}

namespace detail {

class ReportBuilder {
 public:
  void add(std::string family, std::string suffix, bool strict, std::int64_t lhs,
           std::int64_t rhs, std::string description) {
    ConditionRecord c;
    c.id = family + suffix;
    c.family = std::move(family);
    c.strict = strict;
    c.lhs = lhs;
    c.rhs = rhs;
    c.holds = strict ? lhs < rhs : lhs <= rhs;
    c.description = std::move(description);
    report_.overall = report_.overall && c.holds;
    report_.conditions.push_back(std::move(c));
  }

  static std::string idx(std::size_t i) { return "[" + std::to_string(i) + "]"; }

  ConditionReport take() { return std::move(report_); }

 private:
  ConditionReport report_;
};

inline std::int64_t deg(const CoronaInstance& inst, VertexId v) {
  return static_cast<std::int64_t>(inst.composite.degree(v));
}

inline std::string h(std::size_t i) { return "H" + std::to_string(i); }

inline void add_size_order(ReportBuilder& out, const CoronaInstance& inst, std::string family,
                           std::size_t first, std::size_t last) {
  for (std::size_t i = first; i < last; ++i) {
    out.add(family, ReportBuilder::idx(i), false,
            static_cast<std::int64_t>(inst.attachment_size(i)),
            static_cast<std::int64_t>(inst.attachment_size(i + 1)),
            "|V(" + h(i) + ")| <= |V(" + h(i + 1) + ")|");
  }
}

inline void add_delta_chain(ReportBuilder& out, const CoronaInstance& inst, std::string family,
                            std::size_t first, std::size_t last) {
  for (std::size_t i = first; i < last; ++i) {
    out.add(family, ReportBuilder::idx(i), false, block_degrees(inst, i).max_internal,
            block_degrees(inst, i + 1).min_internal,
            "Delta(" + h(i) + ") <= delta(" + h(i + 1) + ")");
  }
}

inline ConditionReport check_type1(const CoronaInstance& inst) {
  ReportBuilder out;
  const std::size_t r = inst.r();
  out.add("T41-star-1", "", true, block_degrees(inst, 0).max_internal,
          block_degrees(inst, 1).min_internal, "Delta(H0) < delta(H1)");
  add_delta_chain(out, inst, "T41-star-2", 1, r);
  const std::int64_t du0 = deg(inst, 0);
  for (std::size_t i = 0; i <= r; ++i) {
    out.add("T41-star-3", ReportBuilder::idx(i), false, du0, block_degrees(inst, i).min_composite,
            "d'(u0) <= delta'(" + h(i) + ")");
  }
  out.add("T41-star-4", "", false, block_degrees(inst, r).max_composite, deg(inst, 1),
          "Delta'(H" + std::to_string(r) + ") <= d'(u1)");
  add_size_order(out, inst, "T41-size", 0, r);
  return out.take();
}

inline ConditionReport check_type2(const CoronaInstance& inst) {
  ReportBuilder out;
  const std::size_t p = inst.p();
  if (p == 1) return out.take();
  const VertexId xp = spider_vertex(p, 0, p);
  const VertexId yp = spider_vertex(p, 1, p);
  const VertexId zp = spider_vertex(p, 2, p);
  const std::string tip = std::to_string(p);
  if (p == 2) {
    add_delta_chain(out, inst, "T42-delta", 1, 6);
    out.add("T42-deg-x2", "", false, deg(inst, xp), block_degrees(inst, 2).min_composite,
            "d'(x2) <= delta'(H2)");
    out.add("T42-deg-y2", "", false, deg(inst, yp), block_degrees(inst, 3).min_composite,
            "d'(y2) <= delta'(H3)");
    out.add("T42-deg-z2", "", false, deg(inst, zp), block_degrees(inst, 4).min_composite,
            "d'(z2) <= delta'(H4)");
    add_size_order(out, inst, "T42-size", 1, 6);
    return out.take();
  }
  add_delta_chain(out, inst, "T43-i", 1, 3 * p);
  out.add("T43-ii-x", "", false, deg(inst, xp), block_degrees(inst, 2).min_composite,
          "d'(x" + tip + ") <= delta'(H2)");
  out.add("T43-ii-y", "", false, deg(inst, yp), block_degrees(inst, 3).min_composite,
          "d'(y" + tip + ") <= delta'(H3)");
  out.add("T43-ii-z", "", false, deg(inst, zp), block_degrees(inst, 4).min_composite,
          "d'(z" + tip + ") <= delta'(H4)");
  // H_{3p-3} hangs from z2 z1; H_{3p-2} hangs from x1 v0.
  out.add("T43-iii", "", false, block_degrees(inst, 3 * p - 3).max_composite,
          static_cast<std::int64_t>(inst.attachment_size(4)) + 1,
          "Delta'(" + h(3 * p - 3) + ") <= |V(H4)| + 1");
  out.add("T43-iv", "", false, deg(inst, spider_vertex(p, 2, 2)),
          block_degrees(inst, 3 * p - 2).min_composite, "d'(z2) <= delta'(" + h(3 * p - 2) + ")");
  add_size_order(out, inst, "T43-size", 1, 3 * p);
  return out.take();
}

}  // namespace detail

/// Evaluates every sufficient-condition hypothesis for the instance.
/// Spider bases with p = 1 carry no hypotheses.
inline ConditionReport check_conditions(const CoronaInstance& inst) {
  return inst.is_pan() ? detail::check_type1(inst) : detail::check_type2(inst);
}

}  // namespace corona
