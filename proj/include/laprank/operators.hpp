#pragma once

#include <stdexcept>
#include <vector>

#include "laprank/graph.hpp"

namespace laprank {

/// Smoothing constant added to every local variation so that the
/// curvature and p-Laplacian never divide by zero.
class Epsilon {
 public:
  static constexpr double kDefault = 1e-10;

  Epsilon() = default;
  explicit Epsilon(double value) : value_(value) {
    if (!(value > 0.0)) throw std::invalid_argument("epsilon must be strictly positive");
  }
  double value() const noexcept { return value_; }

 private:
  double value_ = kDefault;
};

/// Real-valued function on ordered edge orientations. Entry for (i, j)
/// lives at g.slot(i, j); both orientations are independent values.
class EdgeFunction {
 public:
  EdgeFunction() = default;
  explicit EdgeFunction(const Graph& g, double fill = 0.0) : values_(g.slot_count(), fill) {}
  explicit EdgeFunction(std::vector<double> slot_values) : values_(std::move(slot_values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  double& operator[](std::size_t slot) { return values_[slot]; }
  double operator[](std::size_t slot) const { return values_[slot]; }

  /// Value on (i, j). Throws std::out_of_range if {i, j} is not an edge.
  double at(const Graph& g, NodeId i, NodeId j) const;
  double& at(const Graph& g, NodeId i, NodeId j);

  const std::vector<double>& values() const noexcept { return values_; }

 private:
  std::vector<double> values_;
};

struct SmoothnessEnergy {
  double p = 2.0;
  double value = 0.0;
};

/// <f, g>_V = sum_i f_i g_i.
double inner_product(const NodeFunction& f, const NodeFunction& g);
/// <F, G>_E = sum over ordered orientations (i, j) of F_ij G_ij.
double inner_product(const EdgeFunction& a, const EdgeFunction& b);

/// (df)_ij = sqrt(w_ij) (f_j - f_i).
EdgeFunction gradient(const Graph& g, const NodeFunction& f);

/// (div F)_j = sum_{i~j} sqrt(w_ij) (F_ji - F_ij); the negative adjoint of
/// gradient under the two inner products above.
NodeFunction divergence(const Graph& g, const EdgeFunction& F);

/// Un-normalized Laplacian (D - W) f, evaluated as sum_{i~j} w_ij (f_j - f_i)
/// so that constants map to exact zeros.
NodeFunction laplacian_apply(const Graph& g, const NodeFunction& f);

/// sqrt(sum_{j~i} w_ij (f_j - f_i)^2), without smoothing.
double raw_local_variation(const Graph& g, const NodeFunction& f, NodeId i);

/// Raw local variation plus eps (eps added outside the square root).
double local_variation(const Graph& g, const NodeFunction& f, NodeId i, Epsilon eps = {});

/// Smoothed local variation of every node.
std::vector<double> local_variations(const Graph& g, const NodeFunction& f, Epsilon eps = {});

/// Curvature: (kf)_j = 1/2 sum_{i~j} w_ij (1/|d_i f| + 1/|d_j f|)(f_j - f_i).
NodeFunction curvature_apply(const Graph& g, const NodeFunction& f, Epsilon eps = {});

/// p-Laplacian:
///   (D_p f)_j = 1/2 sum_{i~j} w_ij (|d_i f|^(p-2) + |d_j f|^(p-2)) (f_j - f_i)
/// with smoothed local variations. p = 1 is the curvature operator and
/// p = 2 the Laplacian (up to the eps perturbation). Requires p >= 1.
NodeFunction p_laplacian_apply(const Graph& g, const NodeFunction& f, double p, Epsilon eps = {});

/// S_p(f) = (1/p) sum_i |d_i f|^p with raw local variations, so constants
/// have zero energy.
SmoothnessEnergy smoothness_energy(const Graph& g, const NodeFunction& f, double p);

/// S_p evaluated with smoothed local variations. Used for derivative checks
/// where both sides must see the same variation.
double smoothed_smoothness_energy(const Graph& g, const NodeFunction& f, double p, Epsilon eps = {});

/// |d_i f|^(p-2) given the smoothed variation. Exact reciprocal at p = 1
/// and exactly 1 at p = 2.
double variation_power(double variation, double p);

}  // namespace laprank
