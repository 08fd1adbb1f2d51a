#include "laprank/operators.hpp"

#include <cmath>
#include <string>

#include "laprank/parallel.hpp"

namespace laprank {

namespace {

void check_size(const Graph& g, const NodeFunction& f) {
  if (f.size() != g.node_count()) {
    throw std::invalid_argument("node function has " + std::to_string(f.size()) + " entries, graph has " +
                                std::to_string(g.node_count()) + " nodes");
  }
}

void check_p(double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1");
}

double raw_variation(const Graph& g, const NodeFunction& f, NodeId i) {
  double sum = 0.0;
  for (const auto& [j, w] : g.neighbors(i)) {
    const double diff = f[j] - f[i];
    sum += w * diff * diff;
  }
  return std::sqrt(sum);
}

}  // namespace

double EdgeFunction::at(const Graph& g, NodeId i, NodeId j) const {
  auto s = g.slot(i, j);
  if (!s) throw std::out_of_range("(" + std::to_string(i) + ", " + std::to_string(j) + ") is not an edge");
  return values_.at(*s);
}

double& EdgeFunction::at(const Graph& g, NodeId i, NodeId j) {
  auto s = g.slot(i, j);
  if (!s) throw std::out_of_range("(" + std::to_string(i) + ", " + std::to_string(j) + ") is not an edge");
  return values_.at(*s);
}

double inner_product(const NodeFunction& f, const NodeFunction& g) {
  if (f.size() != g.size()) throw std::invalid_argument("inner product of functions with different sizes");
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += f[i] * g[i];
  return sum;
}

double inner_product(const EdgeFunction& a, const EdgeFunction& b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner product of edge functions on different domains");
  double sum = 0.0;
  for (std::size_t s = 0; s < a.size(); ++s) sum += a[s] * b[s];
  return sum;
}

EdgeFunction gradient(const Graph& g, const NodeFunction& f) {
  check_size(g, f);
  EdgeFunction df(g);
  for_each_index(g.node_count(), [&](NodeId i) {
    for (std::size_t s = g.slot_begin(i); s < g.slot_end(i); ++s) {
      const auto& [j, w] = g.neighbors(i)[s - g.slot_begin(i)];
      df[s] = std::sqrt(w) * (f[j] - f[i]);
    }
  });
  return df;
}

NodeFunction divergence(const Graph& g, const EdgeFunction& F) {
  if (F.size() != g.slot_count()) {
    throw std::invalid_argument("edge function has " + std::to_string(F.size()) + " entries, graph has " +
                                std::to_string(g.slot_count()) + " edge orientations");
  }
  NodeFunction div(g.node_count(), 0.0);
  for_each_index(g.node_count(), [&](NodeId j) {
    double sum = 0.0;
    for (std::size_t s = g.slot_begin(j); s < g.slot_end(j); ++s) {
      // s is (j, i); F_ji - F_ij.
      const double w = g.neighbors(j)[s - g.slot_begin(j)].weight;
      sum += std::sqrt(w) * (F[s] - F[g.reverse_slot(s)]);
    }
    div[j] = sum;
  });
  return div;
}

NodeFunction laplacian_apply(const Graph& g, const NodeFunction& f) {
  check_size(g, f);
  NodeFunction out(g.node_count(), 0.0);
  for_each_index(g.node_count(), [&](NodeId j) {
    double sum = 0.0;
    for (const auto& [i, w] : g.neighbors(j)) sum += w * (f[j] - f[i]);
    out[j] = sum;
  });
  return out;
}

double raw_local_variation(const Graph& g, const NodeFunction& f, NodeId i) {
  check_size(g, f);
  if (i >= g.node_count()) throw std::out_of_range("node index " + std::to_string(i) + " out of range");
  return raw_variation(g, f, i);
}

double local_variation(const Graph& g, const NodeFunction& f, NodeId i, Epsilon eps) {
  return raw_local_variation(g, f, i) + eps.value();
}

std::vector<double> local_variations(const Graph& g, const NodeFunction& f, Epsilon eps) {
  check_size(g, f);
  std::vector<double> out(g.node_count());
  for_each_index(g.node_count(), [&](NodeId i) { out[i] = raw_variation(g, f, i) + eps.value(); });
  return out;
}

double variation_power(double variation, double p) {
  if (p == 1.0) return 1.0 / variation;
  if (p == 2.0) return 1.0;
  return std::pow(variation, p - 2.0);
}

NodeFunction p_laplacian_apply(const Graph& g, const NodeFunction& f, double p, Epsilon eps) {
  check_p(p);
  check_size(g, f);
  const auto variation = local_variations(g, f, eps);
  std::vector<double> factor(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) factor[i] = variation_power(variation[i], p);

  NodeFunction out(g.node_count(), 0.0);
  for_each_index(g.node_count(), [&](NodeId j) {
    double sum = 0.0;
    for (const auto& [i, w] : g.neighbors(j)) sum += 0.5 * w * (factor[i] + factor[j]) * (f[j] - f[i]);
    out[j] = sum;
  });
  return out;
}

NodeFunction curvature_apply(const Graph& g, const NodeFunction& f, Epsilon eps) {
  return p_laplacian_apply(g, f, 1.0, eps);
}

SmoothnessEnergy smoothness_energy(const Graph& g, const NodeFunction& f, double p) {
  check_p(p);
  check_size(g, f);
  double sum = 0.0;
  for (NodeId i = 0; i < g.node_count(); ++i) sum += std::pow(raw_variation(g, f, i), p);
  return {p, sum / p};
}

double smoothed_smoothness_energy(const Graph& g, const NodeFunction& f, double p, Epsilon eps) {
  check_p(p);
  double sum = 0.0;
  for (double v : local_variations(g, f, eps)) sum += std::pow(v, p);
  return sum / p;
}

}  // namespace laprank
