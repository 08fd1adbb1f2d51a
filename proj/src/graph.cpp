#include "laprank/graph.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace laprank {

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<NodeId, NodeId>& p) const noexcept {
    return std::hash<std::size_t>{}(p.first * 0x9E3779B97F4A7C15ULL ^ p.second);
  }
};

std::pair<NodeId, NodeId> unordered_key(NodeId a, NodeId b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

}  // namespace

Graph::Graph(std::vector<std::string> labels, std::vector<Edge> edges) : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  index_.reserve(n);
  for (NodeId i = 0; i < n; ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw GraphError("duplicate node label '" + labels_[i] + "'");
    }
  }

  std::unordered_map<std::pair<NodeId, NodeId>, std::size_t, PairHash> seen;
  seen.reserve(edges.size());
  edges_.reserve(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Edge& e = edges[k];
    if (e.a >= n || e.b >= n) {
      throw GraphError("edge " + std::to_string(k) + " has an endpoint out of range", k);
    }
    if (e.a == e.b) {
      throw GraphError("edge " + std::to_string(k) + " is a self-loop on '" + labels_[e.a] + "'", k);
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw GraphError("edge " + std::to_string(k) + " has non-positive weight", k);
    }
    auto [it, inserted] = seen.emplace(unordered_key(e.a, e.b), edges_.size());
    if (inserted) {
      edges_.push_back(e);
    } else {
      edges_[it->second].weight += e.weight;
    }
  }

  std::vector<std::size_t> counts(n, 0);
  for (const Edge& e : edges_) {
    ++counts[e.a];
    ++counts[e.b];
  }
  offsets_.assign(n + 1, 0);
  for (NodeId i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + counts[i];

  targets_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    targets_[fill[e.a]++] = {e.b, e.weight};
    targets_[fill[e.b]++] = {e.a, e.weight};
  }

  degrees_.assign(n, 0.0);
  for (NodeId i = 0; i < n; ++i) {
    auto row_begin = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]);
    auto row_end = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]);
    std::sort(row_begin, row_end, [](const Neighbor& x, const Neighbor& y) { return x.node < y.node; });
    double d = 0.0;
    for (auto it = row_begin; it != row_end; ++it) d += it->weight;
    degrees_[i] = d;
  }

  reverse_.resize(targets_.size());
  for (NodeId i = 0; i < n; ++i) {
    for (std::size_t s = offsets_[i]; s < offsets_[i + 1]; ++s) {
      reverse_[s] = *slot(targets_[s].node, i);
    }
  }
}

void Graph::check_node(NodeId i) const {
  if (i >= labels_.size()) {
    throw std::out_of_range("node index " + std::to_string(i) + " out of range (n = " +
                            std::to_string(labels_.size()) + ")");
  }
}

const std::string& Graph::label(NodeId i) const {
  check_node(i);
  return labels_[i];
}

std::optional<NodeId> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const Neighbor> Graph::neighbors(NodeId i) const {
  check_node(i);
  return std::span<const Neighbor>(targets_).subspan(offsets_[i], offsets_[i + 1] - offsets_[i]);
}

double Graph::degree(NodeId i) const {
  check_node(i);
  return degrees_[i];
}

std::optional<std::size_t> Graph::slot(NodeId i, NodeId j) const {
  check_node(i);
  auto row_begin = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]);
  auto row_end = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]);
  auto it = std::lower_bound(row_begin, row_end, j,
                             [](const Neighbor& nb, NodeId id) { return nb.node < id; });
  if (it == row_end || it->node != j) return std::nullopt;
  return static_cast<std::size_t>(it - targets_.begin());
}

std::optional<double> Graph::weight(NodeId i, NodeId j) const {
  auto s = slot(i, j);
  if (!s) return std::nullopt;
  return targets_[*s].weight;
}

bool Graph::operator==(const Graph& other) const {
  return labels_ == other.labels_ && edges_ == other.edges_;
}

Graph build_graph(std::span<const std::string> labels, std::span<const EdgeRecord> records) {
  std::vector<std::string> interned;
  std::unordered_map<std::string, NodeId> ids;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.emplace(label, interned.size());
    if (inserted) interned.push_back(label);
    return it->second;
  };
  for (const auto& label : labels) {
    if (ids.contains(label)) throw GraphError("duplicate node label '" + label + "'");
    intern(label);
  }

  std::vector<Edge> edges;
  edges.reserve(records.size());
  for (std::size_t k = 0; k < records.size(); ++k) {
    const EdgeRecord& r = records[k];
    if (r.label_a == r.label_b) {
      throw GraphError("record " + std::to_string(k) + ": self-loop on '" + r.label_a + "'", k);
    }
    if (!(r.weight > 0.0) || !std::isfinite(r.weight)) {
      throw GraphError("record " + std::to_string(k) + ": weight must be positive", k);
    }
    const NodeId a = intern(r.label_a);
    const NodeId b = intern(r.label_b);
    edges.push_back({a, b, r.weight});
  }
  return Graph(std::move(interned), std::move(edges));
}

Graph build_graph(std::span<const EdgeRecord> records) {
  return build_graph(std::span<const std::string>{}, records);
}

double degree(const Graph& g, NodeId i) { return g.degree(i); }

std::span<const Neighbor> neighbors(const Graph& g, NodeId i) { return g.neighbors(i); }

std::pair<Graph, LineGraphMap> line_graph(const Graph& g) {
  if (g.edge_count() == 0) throw GraphError("line graph of an edgeless graph is empty");

  const auto edges = g.edges();
  std::vector<std::vector<std::size_t>> incident(g.node_count());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    incident[edges[k].a].push_back(k);
    incident[edges[k].b].push_back(k);
  }

  // Distinct edges of a simple graph share at most one endpoint, so each
  // pair below is produced exactly once.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& around : incident) {
    for (std::size_t x = 0; x < around.size(); ++x) {
      for (std::size_t y = x + 1; y < around.size(); ++y) {
        pairs.emplace_back(std::min(around[x], around[y]), std::max(around[x], around[y]));
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());

  std::vector<std::string> labels;
  labels.reserve(edges.size());
  for (const Edge& e : edges) {
    labels.push_back("(" + g.label(e.a) + ", " + g.label(e.b) + ")");
  }
  std::vector<Edge> line_edges;
  line_edges.reserve(pairs.size());
  for (auto [k, l] : pairs) line_edges.push_back({k, l, 1.0});

  LineGraphMap map{std::vector<Edge>(edges.begin(), edges.end())};
  return {Graph(std::move(labels), std::move(line_edges)), std::move(map)};
}

}  // namespace laprank
