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
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "corona/error.hpp"
#include "corona/graph.hpp"
#include "corona/labeling.hpp"

// Certification that does not share code with the constructions: sums are
// recomputed from the raw edge list, and the searches are the ground truth
// on small graphs.
namespace corona {

struct ChainVerdict {
  std::string inequality;  // "w(a) < w(b)"
  bool holds = false;
};

struct SumReport {
  std::vector<std::int64_t> sums;
  std::vector<std::vector<VertexId>> duplicates;  // each group shares one sum
  bool is_antimagic = false;
  std::vector<ChainVerdict> chain;

  bool chain_holds() const {
    return std::all_of(chain.begin(), chain.end(), [](const ChainVerdict& c) { return c.holds; });
  }
};

/// Throws NotABijection unless `labels` is a permutation of 1..|E(g)|.
inline void require_bijection(const Graph& g, std::span<const std::int64_t> labels) {
  const std::size_t m = g.edge_count();
  if (labels.size() != m) {
    throw Error(ErrorCode::NotABijection, std::to_string(labels.size()) + " labels for " +
                                              std::to_string(m) + " edges");
  }
  std::vector<char> seen(m + 1, 0);
  for (std::int64_t l : labels) {
    if (l < 1 || l > static_cast<std::int64_t>(m)) {
      throw Error(ErrorCode::NotABijection, "label " + std::to_string(l) + " outside 1.." +
                                                std::to_string(m));
    }
    if (seen[static_cast<std::size_t>(l)]++) {
      throw Error(ErrorCode::NotABijection, "label " + std::to_string(l) + " used twice");
    }
  }
}

/// Sums over labeled incident edges only; 0 entries of `partial` are unlabeled.
inline std::int64_t partial_vertex_sum(const Graph& g, std::span<const std::int64_t> partial,
                                       VertexId v) {
  std::int64_t s = 0;
  const auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].u == v || edges[e].v == v) s += partial[e];
  }
  return s;
}

inline std::int64_t partial_vertex_sum(const Graph& g, const std::map<EdgeId, std::int64_t>& partial,
                                       VertexId v) {
  std::int64_t s = 0;
  for (auto [e, label] : partial) {
    const Edge& ed = g.edge(e);
    if (ed.u == v || ed.v == v) s += label;
  }
  return s;
}

inline SumReport vertex_sums(const Graph& g, std::span<const std::int64_t> labels) {
  require_bijection(g, labels);
  SumReport report;
  report.sums.assign(g.vertex_count(), 0);
  const auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    report.sums[edges[e].u] += labels[e];
    report.sums[edges[e].v] += labels[e];
  }
  std::map<std::int64_t, std::vector<VertexId>> by_sum;
  for (VertexId v = 0; v < g.vertex_count(); ++v) by_sum[report.sums[v]].push_back(v);
  for (auto& [sum, group] : by_sum)
    if (group.size() > 1) report.duplicates.push_back(std::move(group));
  report.is_antimagic = report.duplicates.empty();
  return report;
}

inline SumReport vertex_sums(const Graph& g, const Labeling& f) { return vertex_sums(g, f.labels); }

/// Reads a chain of groups as w(g0[0]) < w(g0[1]) < ... < w(g1[0]) < ... and
/// records every adjacent inequality.
inline std::vector<ChainVerdict> chain_verdicts(const Graph& g, std::span<const std::int64_t> sums,
                                                std::span<const ChainGroup> chain) {
  std::vector<ChainVerdict> out;
  std::optional<VertexId> prev;
  for (const ChainGroup& group : chain) {
    for (VertexId v : group.vertices) {
      if (prev) {
        out.push_back({"w(" + g.name(*prev) + ") < w(" + g.name(v) + ")",
                       sums[*prev] < sums[v]});
      }
      prev = v;
    }
  }
  return out;
}

/// Full certificate for a constructed labeling: sums plus its chain.
inline SumReport certify(const Graph& g, const Labeling& f) {
  SumReport report = vertex_sums(g, f);
  report.chain = chain_verdicts(g, report.sums, f.trace.chain);
  return report;
}

enum class SearchStatus { Found, ExhaustedNone, BudgetExceeded };

inline std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::ExhaustedNone: return "ExhaustedNone";
    case SearchStatus::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

struct SearchOutcome {
  SearchStatus status = SearchStatus::ExhaustedNone;
  std::optional<std::vector<std::int64_t>> labels;
  std::uint64_t examined = 0;  // complete labelings evaluated
};

struct SearchOptions {
  std::size_t limit = 10;
  /// Stop after this many complete labelings; also lifts the size limit.
  std::optional<std::uint64_t> budget;
  /// Abandon a prefix once two finished vertices share a sum.
  bool pruning = true;
};

namespace detail {

class Backtracker {
 public:
  Backtracker(const Graph& g, const SearchOptions& opts)
      : g_(g), opts_(opts), m_(g.edge_count()), labels_(m_, 0), used_(m_ + 1, 0),
        sums_(g.vertex_count(), 0), closes_(m_) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) == 0) {
        isolated_++;
      } else {
        closes_[*std::max_element(g.incident(v).begin(), g.incident(v).end())].push_back(v);
      }
    }
    taken_.assign(m_ * (m_ + 1) / 2 + 1, 0);
  }

  SearchOutcome run() {
    SearchOutcome out;
    if (isolated_ > 1 || (isolated_ == 1 && m_ == 0 && g_.vertex_count() > 1)) {
      out.status = SearchStatus::ExhaustedNone;
      return out;
    }
    if (isolated_ == 1) taken_[0] = 1;
    const bool found = descend(0);
    out.examined = examined_;
    if (found) {
      out.status = SearchStatus::Found;
      out.labels = labels_;
    } else {
      out.status = out_of_budget_ ? SearchStatus::BudgetExceeded : SearchStatus::ExhaustedNone;
    }
    return out;
  }

 private:
  bool descend(std::size_t e) {
    if (e == m_) {
      ++examined_;
      return opts_.pruning || all_distinct();
    }
    const Edge& ed = g_.edge(e);
    for (std::size_t l = 1; l <= m_; ++l) {
      if (used_[l]) continue;
      if (opts_.budget && examined_ >= *opts_.budget) {
        out_of_budget_ = true;
        return false;
      }
      const auto label = static_cast<std::int64_t>(l);
      used_[l] = 1;
      labels_[e] = label;
      sums_[ed.u] += label;
      sums_[ed.v] += label;
      std::size_t marked = 0;
      bool ok = true;
      if (opts_.pruning) {
        for (VertexId v : closes_[e]) {
          auto& slot = taken_[static_cast<std::size_t>(sums_[v])];
          if (slot) {
            ok = false;
            break;
          }
          slot = 1;
          ++marked;
        }
      }
      if (ok && descend(e + 1)) return true;
      for (std::size_t k = 0; k < marked; ++k) {
        taken_[static_cast<std::size_t>(sums_[closes_[e][k]])] = 0;
      }
      sums_[ed.u] -= label;
      sums_[ed.v] -= label;
      labels_[e] = 0;
      used_[l] = 0;
      if (out_of_budget_) return false;
    }
    return false;
  }

  bool all_distinct() const {
    std::vector<std::int64_t> s = sums_;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
  }

  const Graph& g_;
  SearchOptions opts_;
  std::size_t m_;
  std::vector<std::int64_t> labels_;
  std::vector<char> used_;
  std::vector<std::int64_t> sums_;
  std::vector<std::vector<VertexId>> closes_;  // vertices finished by edge e
  std::vector<char> taken_;
  std::size_t isolated_ = 0;
  std::uint64_t examined_ = 0;
  bool out_of_budget_ = false;
};

inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

inline std::size_t collisions(const Graph& g, std::span<const std::int64_t> labels,
                              std::vector<std::int64_t>& scratch) {
  scratch.assign(g.vertex_count(), 0);
  const auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    scratch[edges[e].u] += labels[e];
    scratch[edges[e].v] += labels[e];
  }
  std::sort(scratch.begin(), scratch.end());
  std::size_t c = 0;
  for (std::size_t i = 1; i < scratch.size(); ++i) c += scratch[i] == scratch[i - 1];
  return c;
}

}  // namespace detail

/// Exhaustive search in lexicographic order of the label sequence (edge 0's
/// label first), so a Found result is the least antimagic labeling.
inline SearchOutcome brute_force_search(const Graph& g, const SearchOptions& opts = {}) {
  if (g.edge_count() > opts.limit && !opts.budget) {
    throw Error(ErrorCode::TooLarge, std::to_string(g.edge_count()) + " edges exceeds limit " +
                                         std::to_string(opts.limit));
  }
  return detail::Backtracker(g, opts).run();
}

/// Seeded shuffles improved by label swaps that do not increase the number of
/// colliding sums. Deterministic in (g, budget, seed).
inline SearchOutcome random_search(const Graph& g, std::uint64_t budget, std::uint64_t seed) {
  if (budget == 0) throw Error(ErrorCode::BadParams, "random search needs a positive budget");
  std::mt19937_64 rng(seed);
  const std::size_t m = g.edge_count();
  std::vector<std::int64_t> labels(m), scratch;
  SearchOutcome out;
  out.status = SearchStatus::BudgetExceeded;
  const std::uint64_t patience = 50 * (m + 1);

  auto shuffle = [&] {
    for (std::size_t i = 0; i < m; ++i) labels[i] = static_cast<std::int64_t>(i + 1);
    for (std::size_t i = m; i > 1; --i) {
      std::swap(labels[i - 1], labels[detail::uniform_below(rng, i)]);
    }
  };

  while (out.examined < budget) {
    shuffle();
    std::size_t score = detail::collisions(g, labels, scratch);
    ++out.examined;
    std::uint64_t stale = 0;
    while (score > 0 && m >= 2 && stale < patience && out.examined < budget) {
      const std::size_t i = detail::uniform_below(rng, m);
      std::size_t j = detail::uniform_below(rng, m - 1);
      if (j >= i) ++j;
      std::swap(labels[i], labels[j]);
      const std::size_t next = detail::collisions(g, labels, scratch);
      ++out.examined;
      if (next < score) {
        score = next;
        stale = 0;
      } else if (next == score) {
        ++stale;
      } else {
        std::swap(labels[i], labels[j]);
        ++stale;
      }
    }
    if (score == 0) {
      out.status = SearchStatus::Found;
      out.labels = labels;
      return out;
    }
  }
  return out;
}

}  // namespace corona
