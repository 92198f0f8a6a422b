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
#include <fstream>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "corona/conditions.hpp"
#include "corona/corona.hpp"
#include "corona/error.hpp"
#include "corona/graph.hpp"
#include "corona/labeling.hpp"
#include "corona/presets.hpp"
#include "corona/verify.hpp"

// Serialization. JSON output is canonical: object keys sorted (nlohmann's
// default map), two-space indent, trailing newline.
namespace corona::io {

using json = nlohmann::json;

inline std::string canonical(const json& j) { return j.dump(2) + "\n"; }

inline json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, origin + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json read_json_file(const std::string& path) { return parse_json(read_file(path), path); }

namespace detail {

[[noreturn]] inline void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

inline std::int64_t as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<std::int64_t>();
}

inline std::vector<std::int64_t> as_params(const json& j, const std::string& where) {
  std::vector<std::int64_t> out;
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      out.push_back(as_int(j[i], where + "[" + std::to_string(i) + "]"));
    }
  } else if (!j.is_boolean() && !j.is_null()) {
    out.push_back(as_int(j, where));
  }
  return out;
}

inline const std::map<std::string, PresetKind>& shorthands() {
  static const std::map<std::string, PresetKind> table{
      {"K", PresetKind::Complete},        {"C", PresetKind::Cycle},
      {"P", PresetKind::Path},            {"S", PresetKind::Star},
      {"Kab", PresetKind::CompleteBipartite}, {"diamond", PresetKind::Diamond},
  };
  return table;
}

}  // namespace detail

/// Accepts {"kind": k, "params": [...]}, {"vertices": n, "edges": [[u,v],...]},
/// a shorthand object such as {"K": 4} / {"Kab": [2,3]}, or the string
/// "diamond".
inline Graph graph_from_json(const json& j, const std::string& where = "graph") {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "diamond") return diamond_graph();
    detail::fail(where, "unknown graph name '" + s + "'");
  }
  if (!j.is_object()) detail::fail(where, "expected a graph descriptor object");
  if (j.contains("kind")) {
    const auto kind_name = j.at("kind").is_string() ? j.at("kind").get<std::string>() : "";
    auto kind = parse_preset_kind(kind_name);
    if (!kind) detail::fail(where + ".kind", "unknown preset '" + kind_name + "'");
    const auto params = j.contains("params") ? detail::as_params(j.at("params"), where + ".params")
                                             : std::vector<std::int64_t>{};
    return preset_graph(*kind, params);
  }
  if (j.contains("vertices")) {
    const std::int64_t n = detail::as_int(j.at("vertices"), where + ".vertices");
    if (n < 0) detail::fail(where + ".vertices", "negative vertex count");
    std::vector<std::pair<VertexId, VertexId>> edges;
    const json& list = j.contains("edges") ? j.at("edges") : json::array();
    if (!list.is_array()) detail::fail(where + ".edges", "expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string at = where + ".edges[" + std::to_string(i) + "]";
      if (!list[i].is_array() || list[i].size() != 2) detail::fail(at, "expected [u, v]");
      const auto u = detail::as_int(list[i][0], at), v = detail::as_int(list[i][1], at);
      if (u < 0 || v < 0) {
        throw Error(ErrorCode::IndexOutOfRange, at + ": negative vertex index");
      }
      edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return make_graph(static_cast<std::size_t>(n), edges, std::move(names));
  }
  if (j.size() == 1) {
    const auto& [key, value] = *j.items().begin();
    auto it = detail::shorthands().find(key);
    if (it != detail::shorthands().end()) {
      return preset_graph(it->second, detail::as_params(value, where + "." + key));
    }
  }
  detail::fail(where, "unrecognized graph descriptor");
}

inline json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  json out{{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
  if (g.has_names()) out["names"] = std::vector<std::string>(g.names().begin(), g.names().end());
  return out;
}

struct InstanceSpec {
  BaseSpec base;
  std::vector<Graph> attachments;
  bool force = false;
  bool normalize = false;
};

/// {"base": {"type": "pan"|"spider", "param": k}, "attachments": [...],
///  "options": {"force": bool, "normalize": bool}}
inline InstanceSpec instance_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("base")) detail::fail("spec", "missing 'base'");
  const json& base = j.at("base");
  if (!base.is_object() || !base.contains("type") || !base.contains("param")) {
    detail::fail("spec.base", "expected {\"type\": ..., \"param\": ...}");
  }
  InstanceSpec spec;
  const std::string type = base.at("type").is_string() ? base.at("type").get<std::string>() : "";
  const std::int64_t param = detail::as_int(base.at("param"), "spec.base.param");
  if (type == "pan") {
    spec.base = PanBase{param};
  } else if (type == "spider") {
    spec.base = SpiderBase{param};
  } else {
    detail::fail("spec.base.type", "expected \"pan\" or \"spider\"");
  }
  if (!j.contains("attachments") || !j.at("attachments").is_array()) {
    detail::fail("spec.attachments", "expected an array of graph descriptors");
  }
  const json& list = j.at("attachments");
  for (std::size_t i = 0; i < list.size(); ++i) {
    spec.attachments.push_back(graph_from_json(list[i], "spec.attachments[" + std::to_string(i) + "]"));
  }
  if (j.contains("options")) {
    const json& o = j.at("options");
    spec.force = o.value("force", false);
    spec.normalize = o.value("normalize", false);
  }
  return spec;
}

inline CoronaInstance build_from_spec(const InstanceSpec& spec) {
  std::vector<Graph> h = spec.attachments;
  if (spec.normalize) h = normalize_attachments(std::move(h));
  return build_instance(spec.base, std::move(h));
}

inline std::string role_name(const EdgeRole& role) {
  switch (role.kind) {
    case RoleKind::Base: return "base";
    case RoleKind::Internal: return "internal";
    case RoleKind::Cross: return "cross";
  }
  return "?";
}

inline json instance_summary(const CoronaInstance& inst) {
  const DegreeProfile d = degree_profile(inst.composite);
  std::size_t base = 0, internal = 0, cross = 0;
  for (const EdgeRole& r : inst.edge_roles) {
    (r.kind == RoleKind::Base ? base : r.kind == RoleKind::Internal ? internal : cross)++;
  }
  json sizes = json::array();
  for (const AttachmentBlock& b : inst.blocks) {
    sizes.push_back({{"block", "H" + std::to_string(b.h_index)},
                     {"vertices", b.vertex_count},
                     {"edges", b.internal_count}});
  }
  return {
      {"base", inst.is_pan() ? json{{"type", "pan"}, {"param", inst.r()}}
                             : json{{"type", "spider"}, {"param", inst.p()}}},
      {"vertices", inst.composite.vertex_count()},
      {"edges", inst.composite.edge_count()},
      {"max_degree", d.max_degree},
      {"min_degree", d.min_degree},
      {"roles", {{"base", base}, {"internal", internal}, {"cross", cross}}},
      {"attachments", std::move(sizes)},
  };
}

inline json conditions_to_json(const ConditionReport& report) {
  json list = json::array();
  for (const ConditionRecord& c : report.conditions) {
    list.push_back({{"id", c.id},
                    {"holds", c.holds},
                    {"lhs", c.lhs},
                    {"rhs", c.rhs},
                    {"relation", c.strict ? "<" : "<="},
                    {"description", c.description}});
  }
  return {{"overall", report.overall}, {"conditions", std::move(list)}};
}

inline json sum_report_to_json(const Graph& g, const SumReport& report) {
  json sums = json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) sums["w(" + g.name(v) + ")"] = report.sums[v];
  json dups = json::array();
  for (const auto& group : report.duplicates) {
    json names = json::array();
    for (VertexId v : group) names.push_back(g.name(v));
    dups.push_back({{"sum", report.sums[group.front()]}, {"vertices", std::move(names)}});
  }
  json chain = json::array();
  for (const ChainVerdict& c : report.chain) {
    chain.push_back({{"inequality", c.inequality}, {"holds", c.holds}});
  }
  return {{"antimagic", report.is_antimagic},
          {"sums", std::move(sums)},
          {"duplicates", std::move(dups)},
          {"chain", std::move(chain)},
          {"chain_holds", report.chain_holds()}};
}

/// Per-edge export. `roles` may be empty for plain graphs.
inline json labeling_to_json(const Graph& g, std::span<const std::int64_t> labels,
                             std::span<const EdgeRole> roles = {}) {
  json edges = json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    json item{{"u", g.edge(e).u}, {"v", g.edge(e).v}, {"label", labels[e]}};
    if (!roles.empty()) item["role"] = role_name(roles[e]);
    edges.push_back(std::move(item));
  }
  std::vector<std::int64_t> sums(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    sums[g.edge(e).u] += labels[e];
    sums[g.edge(e).v] += labels[e];
  }
  return {{"edges", std::move(edges)}, {"sums", std::move(sums)}};
}

inline std::string labeling_to_csv(const Graph& g, std::span<const std::int64_t> labels) {
  std::string out = "edge_u,edge_v,label\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out += std::to_string(g.edge(e).u) + "," + std::to_string(g.edge(e).v) + "," +
           std::to_string(labels[e]) + "\n";
  }
  return out;
}

inline std::string labeling_to_dot(const Graph& g, std::span<const std::int64_t> labels) {
  std::vector<std::int64_t> sums(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    sums[g.edge(e).u] += labels[e];
    sums[g.edge(e).v] += labels[e];
  }
  std::string out = "graph labeling {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out += "  " + std::to_string(v) + " [label=\"" + g.name(v) + "\\nw=" + std::to_string(sums[v]) +
           "\"];\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out += "  " + std::to_string(g.edge(e).u) + " -- " + std::to_string(g.edge(e).v) +
           " [label=\"" + std::to_string(labels[e]) + "\"];\n";
  }
  return out + "}\n";
}

namespace detail {

/// One parsed row: endpoints, label, and where it came from.
using LabelRow = std::tuple<std::int64_t, std::int64_t, std::int64_t, std::string>;

inline std::vector<std::int64_t> place_labels(const Graph& g, const std::vector<LabelRow>& rows) {
  std::vector<std::int64_t> labels(g.edge_count(), 0);
  for (const auto& [u, v, label, at] : rows) {
    if (u < 0 || v < 0) fail(at, "negative vertex index");
    auto e = g.find_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    if (!e) fail(at, "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
    if (labels[*e] != 0) {
      throw Error(ErrorCode::NotABijection, at + ": edge labeled twice");
    }
    if (label == 0) throw Error(ErrorCode::NotABijection, at + ": label 0");
    labels[*e] = label;
  }
  return labels;
}

}  // namespace detail

/// Reads {"edges": [{"u","v","label"}, ...]} and returns labels in the
/// graph's edge order. Unknown edges are parse errors; bijectivity is left
/// to the verifier.
inline std::vector<std::int64_t> labeling_from_json(const Graph& g, const json& j,
                                                    const std::string& origin = "labeling") {
  if (!j.is_object() || !j.contains("edges") || !j.at("edges").is_array()) {
    detail::fail(origin, "expected {\"edges\": [...]}");
  }
  std::vector<detail::LabelRow> rows;
  const json& list = j.at("edges");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string at = origin + ".edges[" + std::to_string(i) + "]";
    const json& item = list[i];
    if (!item.is_object()) detail::fail(at, "expected an object");
    for (const char* key : {"u", "v", "label"}) {
      if (!item.contains(key)) detail::fail(at, std::string("missing '") + key + "'");
    }
    rows.emplace_back(detail::as_int(item["u"], at + ".u"), detail::as_int(item["v"], at + ".v"),
                      detail::as_int(item["label"], at + ".label"), at);
  }
  return detail::place_labels(g, rows);
}

inline std::vector<std::int64_t> labeling_from_csv(const Graph& g, const std::string& text,
                                                   const std::string& origin = "labeling") {
  std::vector<detail::LabelRow> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.rfind("edge_u", 0) == 0) continue;
    std::istringstream row(line);
    std::int64_t u = 0, v = 0, label = 0;
    char c1 = 0, c2 = 0;
    const std::string at = origin + " line " + std::to_string(line_no);
    if (!(row >> u >> c1 >> v >> c2 >> label) || c1 != ',' || c2 != ',') {
      detail::fail(at, "expected u,v,label");
    }
    rows.emplace_back(u, v, label, at);
  }
  return detail::place_labels(g, rows);
}

/// A graph file is either a graph descriptor or an instance spec, in which
/// case the composite is used.
inline Graph load_graph(const json& j, const std::string& origin) {
  if (j.is_object() && j.contains("base")) {
    return build_from_spec(instance_spec_from_json(j)).composite;
  }
  return graph_from_json(j, origin);
}

}  // namespace corona::io
