// Random graph generators and brute-force oracles shared by the unit and
// acceptance suites. Oracles here use dense matrices or direct enumeration
// and never call the library routine they check.
#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "laprank/graph.hpp"
#include "laprank/operators.hpp"

namespace laprank::testing {

using Rng = std::mt19937_64;

inline std::vector<std::string> numbered_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  return labels;
}

/// Erdos-Renyi G(n, density) with weights in [0.5, 2.5).
inline Graph random_graph(Rng& rng, std::size_t n, double density, bool unit_weights = false) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_real_distribution<double> weight(0.5, 2.5);
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (coin(rng) < density) edges.push_back({i, j, unit_weights ? 1.0 : weight(rng)});
    }
  }
  return Graph(numbered_labels(n), std::move(edges));
}

/// Random spanning tree plus G(n, density) extras; always connected.
inline Graph random_connected_graph(Rng& rng, std::size_t n, double density) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_real_distribution<double> weight(0.5, 2.5);
  std::set<std::pair<NodeId, NodeId>> seen;
  std::vector<Edge> edges;
  for (NodeId i = 1; i < n; ++i) {
    const NodeId parent = std::uniform_int_distribution<NodeId>(0, i - 1)(rng);
    seen.emplace(parent, i);
    edges.push_back({parent, i, weight(rng)});
  }
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (!seen.contains({i, j}) && coin(rng) < density) edges.push_back({i, j, weight(rng)});
    }
  }
  return Graph(numbered_labels(n), std::move(edges));
}

inline NodeFunction random_function(Rng& rng, std::size_t n, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  NodeFunction f(n);
  for (auto& v : f) v = u(rng);
  return f;
}

inline EdgeFunction random_edge_function(Rng& rng, const Graph& g) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  EdgeFunction F(g);
  for (std::size_t s = 0; s < F.size(); ++s) F[s] = u(rng);
  return F;
}

/// Dense weight matrix W.
inline std::vector<std::vector<double>> dense_weights(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
  for (const Edge& e : g.edges()) {
    w[e.a][e.b] = e.weight;
    w[e.b][e.a] = e.weight;
  }
  return w;
}

/// (D - W) f with D and W formed densely from the edge list.
inline NodeFunction dense_laplacian(const Graph& g, const NodeFunction& f) {
  const auto w = dense_weights(g);
  const std::size_t n = g.node_count();
  NodeFunction out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double d = 0.0;
    for (std::size_t j = 0; j < n; ++j) d += w[i][j];
    double acc = d * f[i];
    for (std::size_t j = 0; j < n; ++j) acc -= w[i][j] * f[j];
    out[i] = acc;
  }
  return out;
}

/// Line-graph adjacency by checking every pair of original edges.
inline std::set<std::pair<std::size_t, std::size_t>> brute_force_line_adjacency(const Graph& g) {
  std::set<std::pair<std::size_t, std::size_t>> adj;
  const auto edges = g.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    for (std::size_t l = k + 1; l < edges.size(); ++l) {
      const auto& x = edges[k];
      const auto& y = edges[l];
      if (x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b) adj.emplace(k, l);
    }
  }
  return adj;
}

inline std::set<std::pair<std::size_t, std::size_t>> adjacency_of(const Graph& g) {
  std::set<std::pair<std::size_t, std::size_t>> adj;
  for (const Edge& e : g.edges()) adj.emplace(std::min(e.a, e.b), std::max(e.a, e.b));
  return adj;
}

/// Central finite-difference gradient of `fn` at f.
template <class Fn>
NodeFunction finite_difference_gradient(Fn&& fn, const NodeFunction& f, double h) {
  NodeFunction grad(f.size());
  NodeFunction probe = f;
  for (std::size_t j = 0; j < f.size(); ++j) {
    probe[j] = f[j] + h;
    const double up = fn(probe);
    probe[j] = f[j] - h;
    const double down = fn(probe);
    probe[j] = f[j];
    grad[j] = (up - down) / (2.0 * h);
  }
  return grad;
}

/// Smoothed S_p written out from the local-variation definition, without
/// going through the library's energy routine.
inline double direct_smoothed_energy(const Graph& g, const NodeFunction& f, double p, double eps) {
  const auto w = dense_weights(g);
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) s += w[i][j] * (f[j] - f[i]) * (f[j] - f[i]);
    sum += std::pow(std::sqrt(s) + eps, p);
  }
  return sum / p;
}

/// Dense PageRank by power iteration on the explicit transition matrix.
inline std::vector<double> dense_pagerank(const Graph& g, double damping, int iterations) {
  const auto w = dense_weights(g);
  const std::size_t n = g.node_count();
  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  for (int it = 0; it < iterations; ++it) {
    std::vector<double> next(n, (1.0 - damping) / static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
      double d = 0.0;
      for (std::size_t j = 0; j < n; ++j) d += w[i][j];
      for (std::size_t j = 0; j < n; ++j) {
        const double t = d > 0.0 ? w[i][j] / d : 1.0 / static_cast<double>(n);
        next[j] += damping * t * x[i];
      }
    }
    x = next;
  }
  return x;
}

/// Values k/n for a random permutation k, so neighbors always differ by at
/// least 1/n and no local variation is near zero.
inline NodeFunction spread_function(Rng& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  NodeFunction f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = static_cast<double>(perm[i] + 1) / static_cast<double>(n);
  return f;
}

/// Smallest |f_a - f_b| over the edges.
inline double min_edge_gap(const Graph& g, const NodeFunction& f) {
  double gap = 1e300;
  for (const Edge& e : g.edges()) gap = std::min(gap, std::abs(f[e.a] - f[e.b]));
  return gap;
}

}  // namespace laprank::testing
