#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "laprank/graph.hpp"
#include "laprank/ranking.hpp"

namespace laprank {

/// What a CLI run did, written alongside every successful result.
struct RunManifest {
  std::string command;
  std::string method;  // empty for commands that do not rank
  std::vector<std::string> inputs;
  SolverConfig config;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t iterations = 0;
  double residual = 0.0;
  bool converged = true;
  double wall_time_seconds = 0.0;

  bool operator==(const RunManifest&) const = default;
};

nlohmann::ordered_json to_json(const RunManifest& m);
RunManifest manifest_from_json(const nlohmann::json& j);

using RankedList = std::vector<std::pair<std::string, double>>;

/// {"manifest": ..., "scores": [...in node order...], "top_k": [...]}.
nlohmann::ordered_json rank_document(const RunManifest& manifest, std::span<const std::string> labels,
                                     const NodeFunction& scores, const RankedList& top);

/// `label<TAB>score` per node, node order, shortest round-trip decimals.
void write_scores_tsv(std::ostream& out, std::span<const std::string> labels, const NodeFunction& scores);

/// Python repr of a float (shortest round-trip digits, exponent form
/// outside [1e-4, 1e16)).
std::string python_float_repr(double x);

/// Python repr of a list of (str, float) tuples, one tuple per line.
std::string python_list_repr(const RankedList& rows);

}  // namespace laprank
