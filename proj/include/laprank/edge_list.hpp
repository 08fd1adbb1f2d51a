#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "laprank/graph.hpp"

namespace laprank {

// Edge-list text format, UTF-8, one entry per line:
//
//   label_a<TAB>label_b<TAB>weight     an edge
//   label                              a node declaration
//   # ...                              comment
//
// Node declarations fix the node order and carry isolated nodes; the
// writer emits one per node before the edges so that reading a written
// file reproduces the same Graph.

class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(const std::filesystem::path& path, const Graph& g);

/// `line_node_id<TAB>label_a<TAB>label_b`, one row per line-graph node.
void write_line_graph_map(std::ostream& out, const Graph& original, const LineGraphMap& map);
void write_line_graph_map(const std::filesystem::path& path, const Graph& original, const LineGraphMap& map);

/// Shortest decimal text that parses back to exactly `x`.
std::string format_double(double x);

}  // namespace laprank
