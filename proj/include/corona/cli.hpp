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
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "corona/algorithms.hpp"
#include "corona/conditions.hpp"
#include "corona/error.hpp"
#include "corona/io.hpp"
#include "corona/verify.hpp"

namespace corona::cli {

// Process exit codes. Stable contract for scripts.
inline constexpr int kOk = 0;               // success / antimagic / found
inline constexpr int kNegative = 1;         // verified not antimagic, exhausted, budget spent
inline constexpr int kForcedDuplicates = 2; // forced labeling has repeated sums
inline constexpr int kConditionsUnmet = 3;
inline constexpr int kMalformedLabeling = 4;
inline constexpr int kUsage = 64;           // bad arguments, unreadable or invalid input

namespace detail {

inline void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write " + path);
  f << text;
}

inline std::vector<std::int64_t> read_labels(const Graph& g, const std::string& path) {
  const std::string text = io::read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return io::labeling_from_json(g, io::parse_json(text, path), path);
  }
  return io::labeling_from_csv(g, text, path);
}

inline std::string render_labeling(const Graph& g, std::span<const std::int64_t> labels,
                                   std::span<const EdgeRole> roles, const std::string& format) {
  if (format == "csv") return io::labeling_to_csv(g, labels);
  if (format == "dot") return io::labeling_to_dot(g, labels);
  return io::canonical(io::labeling_to_json(g, labels, roles));
}

}  // namespace detail

/// Runs one command line. `argv[0]` is the program name.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Antimagic labelings of generalized edge corona graphs"};
  app.require_subcommand(1);

  std::string spec_path, graph_path, labeling_path, out_path, report_path;
  std::string format = "json";
  bool force = false, exhaustive = false, random = false;
  std::uint64_t seed = 1, budget = 0;
  std::size_t limit = 10;

  auto* build = app.add_subcommand("build", "Build an instance and print its summary");
  build->add_option("spec", spec_path, "Instance spec (JSON)")->required();
  build->add_option("--out", out_path, "Write the summary JSON here");

  auto* conditions = app.add_subcommand("conditions", "Evaluate the sufficient conditions");
  conditions->add_option("spec", spec_path, "Instance spec (JSON)")->required();

  auto* label = app.add_subcommand("label", "Construct a labeling and report vertex sums");
  label->add_option("spec", spec_path, "Instance spec (JSON)")->required();
  label->add_flag("--force", force, "Label even if the conditions fail");
  label->add_option("--out", out_path, "Write the labeling here");
  label->add_option("--format", format, "Labeling format")->check(CLI::IsMember({"json", "csv", "dot"}));
  label->add_option("--report", report_path, "Also write the sum report here");

  auto* verify = app.add_subcommand("verify", "Check a labeling for antimagicness");
  verify->add_option("graph", graph_path, "Graph descriptor or instance spec")->required();
  verify->add_option("labeling", labeling_path, "Labeling (JSON or CSV)")->required();

  auto* search = app.add_subcommand("search", "Search for an antimagic labeling");
  search->add_option("graph", graph_path, "Graph descriptor or instance spec")->required();
  auto* ex_flag = search->add_flag("--exhaustive", exhaustive, "Backtracking over all labelings");
  auto* rnd_flag = search->add_flag("--random", random, "Seeded randomized hill climbing");
  ex_flag->excludes(rnd_flag);
  search->add_option("--seed", seed, "Random seed");
  search->add_option("--budget", budget, "Labelings to try (random) or cap (exhaustive)");
  search->add_option("--limit", limit, "Largest edge count for exhaustive search");
  search->add_option("--out", out_path, "Write the found labeling here");

  auto* exp = app.add_subcommand("export", "Export a graph or a composite in canonical form");
  exp->add_option("graph", graph_path, "Graph descriptor or instance spec")->required();
  exp->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "dot"}));
  exp->add_option("--out", out_path, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (build->parsed()) {
      const auto inst = io::build_from_spec(io::instance_spec_from_json(io::read_json_file(spec_path)));
      const auto summary = io::instance_summary(inst);
      out << inst.composite.vertex_count() << " vertices, " << inst.composite.edge_count()
          << " edges\n";
      if (!out_path.empty()) detail::write_text(out_path, io::canonical(summary), out);
      else out << io::canonical(summary);
      return kOk;
    }

    if (conditions->parsed()) {
      const auto inst = io::build_from_spec(io::instance_spec_from_json(io::read_json_file(spec_path)));
      const auto report = check_conditions(inst);
      out << io::canonical(io::conditions_to_json(report));
      return report.overall ? kOk : kConditionsUnmet;
    }

    if (label->parsed()) {
      const auto spec = io::instance_spec_from_json(io::read_json_file(spec_path));
      const auto inst = io::build_from_spec(spec);
      LabelOptions opts;
      opts.force = force || spec.force;
      Labeling f;
      try {
        f = label_instance(inst, opts);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::ConstructionFailed) {
          err << e.what() << "\n";
          return kForcedDuplicates;
        }
        if (e.code() != ErrorCode::ConditionsNotMet) throw;
        err << e.what() << "\n(use --force to label anyway)\n";
        return kConditionsUnmet;
      }
      const SumReport report = certify(inst.composite, f);
      const std::string report_text = io::canonical(io::sum_report_to_json(inst.composite, report));
      if (!out_path.empty()) {
        detail::write_text(out_path,
                           detail::render_labeling(inst.composite, f.labels, inst.edge_roles, format),
                           out);
      }
      if (!report_path.empty()) detail::write_text(report_path, report_text, out);
      out << report_text;
      return report.is_antimagic ? kOk : kForcedDuplicates;
    }

    if (verify->parsed()) {
      const Graph g = io::load_graph(io::read_json_file(graph_path), graph_path);
      SumReport report;
      try {
        report = vertex_sums(g, detail::read_labels(g, labeling_path));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotABijection) throw;
        err << e.what() << "\n";
        return kMalformedLabeling;
      }
      out << io::canonical(io::sum_report_to_json(g, report));
      return report.is_antimagic ? kOk : kNegative;
    }

    if (search->parsed()) {
      const Graph g = io::load_graph(io::read_json_file(graph_path), graph_path);
      SearchOutcome outcome;
      if (random) {
        outcome = random_search(g, budget == 0 ? 100000 : budget, seed);
      } else {
        SearchOptions opts;
        opts.limit = limit;
        if (budget != 0) opts.budget = budget;
        outcome = brute_force_search(g, opts);
      }
      io::json result{{"status", std::string(to_string(outcome.status))},
                      {"examined", outcome.examined},
                      {"method", random ? "random" : "exhaustive"}};
      if (outcome.labels) {
        result["labeling"] = io::labeling_to_json(g, *outcome.labels);
        result["report"] = io::sum_report_to_json(g, vertex_sums(g, *outcome.labels));
        if (!out_path.empty()) {
          detail::write_text(out_path, io::canonical(io::labeling_to_json(g, *outcome.labels)), out);
        }
      }
      out << io::canonical(result);
      return outcome.status == SearchStatus::Found ? kOk : kNegative;
    }

    if (exp->parsed()) {
      const Graph g = io::load_graph(io::read_json_file(graph_path), graph_path);
      std::string text;
      if (format == "dot") {
        text = "graph g {\n";
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
          text += "  " + std::to_string(v) + " [label=\"" + g.name(v) + "\"];\n";
        }
        for (const Edge& e : g.edges()) {
          text += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
        }
        text += "}\n";
      } else {
        text = io::canonical(io::graph_to_json(g));
      }
      detail::write_text(out_path, text, out);
      return kOk;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "ParseError: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace corona::cli
