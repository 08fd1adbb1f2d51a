#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace laprank {

using NodeId = std::size_t;

/// Real-valued function on the vertices, indexed by NodeId.
using NodeFunction = std::vector<double>;

struct Neighbor {
  NodeId node;
  double weight;
};

/// Unordered edge {a, b}; the stored orientation is the one first seen.
struct Edge {
  NodeId a;
  NodeId b;
  double weight;

  bool operator==(const Edge&) const = default;
};

/// One line of input to build_graph: two labels and a positive weight.
struct EdgeRecord {
  std::string label_a;
  std::string label_b;
  double weight = 1.0;
};

/// Rejected graph input. `record()` is the zero-based index of the
/// offending record, when there is one.
class GraphError : public std::invalid_argument {
 public:
  explicit GraphError(const std::string& what, std::optional<std::size_t> record = std::nullopt)
      : std::invalid_argument(what), record_(record) {}

  std::optional<std::size_t> record() const noexcept { return record_; }

 private:
  std::optional<std::size_t> record_;
};

/// Undirected weighted graph without self-loops or parallel edges.
///
/// Adjacency is kept in CSR form with each row sorted by neighbor id, so
/// every ordered orientation (i, j) of an edge owns one "slot". Slots are
/// the index space of EdgeFunction. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Builds from explicit labels and index-based edges. Duplicate unordered
  /// pairs are folded by summing weights. Throws GraphError on self-loops,
  /// non-positive or non-finite weights, out-of-range endpoints and
  /// duplicate labels.
  Graph(std::vector<std::string> labels, std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// Number of ordered orientations, 2 * edge_count().
  std::size_t slot_count() const noexcept { return targets_.size(); }

  std::span<const std::string> labels() const noexcept { return labels_; }
  const std::string& label(NodeId i) const;
  std::optional<NodeId> find(std::string_view label) const;

  /// Edges in insertion (first-seen) order.
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Adjacent nodes with weights, ascending by node id.
  std::span<const Neighbor> neighbors(NodeId i) const;

  /// Weighted degree d_i = sum of w_ij over j ~ i.
  double degree(NodeId i) const;

  /// Weight of {i, j}, or nullopt if not adjacent.
  std::optional<double> weight(NodeId i, NodeId j) const;

  /// Slot range [slot_begin(i), slot_end(i)) holds the orientations (i, j).
  std::size_t slot_begin(NodeId i) const { return offsets_[i]; }
  std::size_t slot_end(NodeId i) const { return offsets_[i + 1]; }
  /// Slot of orientation (i, j), or nullopt if not adjacent.
  std::optional<std::size_t> slot(NodeId i, NodeId j) const;
  /// Slot of the reverse orientation (j, i) for slot (i, j).
  std::size_t reverse_slot(std::size_t s) const { return reverse_[s]; }

  bool operator==(const Graph& other) const;

 private:
  void check_node(NodeId i) const;

  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> targets_;
  std::vector<std::size_t> reverse_;
  std::vector<double> degrees_;
  std::unordered_map<std::string, NodeId> index_;
};

/// Interns labels in first-seen order and folds duplicate unordered pairs
/// by summing their weights.
Graph build_graph(std::span<const EdgeRecord> records);

/// Same, with `labels` interned before any record label. Lets callers keep
/// isolated nodes and fix the node order.
Graph build_graph(std::span<const std::string> labels, std::span<const EdgeRecord> records);

double degree(const Graph& g, NodeId i);
std::span<const Neighbor> neighbors(const Graph& g, NodeId i);

/// Line-graph node k stands for original edge entries[k].
struct LineGraphMap {
  std::vector<Edge> entries;
};

/// Nodes of the result are the edges of `g`; two are adjacent iff the
/// original edges share an endpoint. All line-graph weights are 1 and
/// labels read "(label_a, label_b)".
std::pair<Graph, LineGraphMap> line_graph(const Graph& g);

}  // namespace laprank
