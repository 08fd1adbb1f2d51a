#include "laprank/ranking.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "laprank/parallel.hpp"

namespace laprank {

namespace {

constexpr std::size_t kDenseFallbackLimit = 500;

void check_prior(const Graph& g, const NodeFunction& y) {
  if (y.size() != g.node_count()) {
    throw std::invalid_argument("prior has " + std::to_string(y.size()) + " entries, graph has " +
                                std::to_string(g.node_count()) + " nodes");
  }
}

double inf_norm(const NodeFunction& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// |op(f) + mu (f - y)|_inf for a precomputed op(f).
double fidelity_residual(const NodeFunction& operator_value, const NodeFunction& f, const NodeFunction& y,
                         double mu) {
  double m = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    m = std::max(m, std::abs(operator_value[j] + mu * (f[j] - y[j])));
  }
  return m;
}

// (D - W + mu I) x
NodeFunction shifted_laplacian(const Graph& g, const NodeFunction& x, double mu) {
  NodeFunction out = laplacian_apply(g, x);
  for (std::size_t j = 0; j < x.size(); ++j) out[j] += mu * x[j];
  return out;
}

NodeFunction dense_solve(const Graph& g, const NodeFunction& y, double mu) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd b(n);
  for (NodeId j = 0; j < g.node_count(); ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    a(jj, jj) = g.degree(j) + mu;
    for (const auto& [i, w] : g.neighbors(j)) a(jj, static_cast<Eigen::Index>(i)) -= w;
    b(jj) = mu * y[j];
  }
  Eigen::VectorXd x = a.ldlt().solve(b);
  return NodeFunction(x.data(), x.data() + n);
}

}  // namespace

void SolverConfig::validate() const {
  if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1");
  if (!(mu > 0.0)) throw std::invalid_argument("mu must be > 0");
  if (!(eps > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  if (max_iter == 0) throw std::invalid_argument("max_iter must be >= 1");
  if (!(damping > 0.0 && damping < 1.0)) throw std::invalid_argument("damping must lie in (0, 1)");
}

NodeFunction uniform_prior(std::size_t n) {
  if (n == 0) throw std::invalid_argument("uniform prior needs at least one node");
  return NodeFunction(n, 1.0 / static_cast<double>(n));
}

RankResult solve_p2_closed_form(const Graph& g, const NodeFunction& y, double mu, double tol,
                                std::size_t max_iter) {
  check_prior(g, y);
  if (!(mu > 0.0)) throw std::invalid_argument("mu must be > 0");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  const std::size_t n = g.node_count();

  // Jacobi-preconditioned CG on the SPD system (D - W + mu I) f = mu y.
  RankResult result;
  NodeFunction x = y;
  NodeFunction r = laplacian_apply(g, x);
  for (double& v : r) v = -v;  // b - A y = -(D - W) y
  NodeFunction inv_diag(n);
  for (NodeId j = 0; j < n; ++j) inv_diag[j] = 1.0 / (g.degree(j) + mu);

  NodeFunction z(n), dir(n);
  for (std::size_t j = 0; j < n; ++j) z[j] = inv_diag[j] * r[j];
  dir = z;
  double rz = inner_product(r, z);

  std::size_t it = 0;
  double residual = inf_norm(r);
  while (residual > tol && it < max_iter) {
    ++it;
    const NodeFunction ad = shifted_laplacian(g, dir, mu);
    const double denom = inner_product(dir, ad);
    if (!(denom > 0.0)) break;
    const double alpha = rz / denom;
    for (std::size_t j = 0; j < n; ++j) {
      x[j] += alpha * dir[j];
      r[j] -= alpha * ad[j];
    }
    residual = inf_norm(r);
    if (residual <= tol) {
      // Guard against drift between the recursive and the true residual.
      const NodeFunction ax = shifted_laplacian(g, x, mu);
      for (std::size_t j = 0; j < n; ++j) r[j] = mu * y[j] - ax[j];
      residual = inf_norm(r);
      if (residual <= tol) break;
    }
    for (std::size_t j = 0; j < n; ++j) z[j] = inv_diag[j] * r[j];
    const double rz_next = inner_product(r, z);
    const double beta = rz_next / rz;
    rz = rz_next;
    for (std::size_t j = 0; j < n; ++j) dir[j] = z[j] + beta * dir[j];
  }

  if (residual > tol) {
    if (n > kDenseFallbackLimit) {
      throw SolverError("conjugate gradients did not reach tol " + std::to_string(tol) + " within " +
                            std::to_string(max_iter) + " iterations",
                        it);
    }
    x = dense_solve(g, y, mu);
  }

  result.iterations = it;
  result.residual_inf_norm = fidelity_residual(laplacian_apply(g, x), x, y, mu);
  result.converged = result.residual_inf_norm <= tol;
  result.scores = std::move(x);
  return result;
}

RankResult solve_p_iterative(const Graph& g, const NodeFunction& y, const SolverConfig& cfg) {
  cfg.validate();
  check_prior(g, y);
  const std::size_t n = g.node_count();
  const Epsilon eps(cfg.eps);

  RankResult result;
  NodeFunction f = y;
  NodeFunction next(n);
  std::vector<double> factor(n);

  for (std::size_t t = 1; t <= cfg.max_iter; ++t) {
    const auto variation = local_variations(g, f, eps);
    for (std::size_t i = 0; i < n; ++i) factor[i] = variation_power(variation[i], cfg.p);

    // f_j + (sum m_ij (f_i - f_j) + mu (y_j - f_j)) / (sum m_ij + mu) is the
    // same update; written as a correction it leaves exact fixed points
    // (e.g. constant f = y) untouched by rounding.
    for_each_index(n, [&](NodeId j) {
      double mass = cfg.mu;
      double pull = cfg.mu * (y[j] - f[j]);
      for (const auto& [i, w] : g.neighbors(j)) {
        const double m = 0.5 * w * (factor[i] + factor[j]);
        mass += m;
        pull += m * (f[i] - f[j]);
      }
      next[j] = f[j] + pull / mass;
    });

    double change = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(next[j])) {
        throw SolverError("non-finite score at node " + std::to_string(j) + " in iteration " + std::to_string(t),
                          t);
      }
      change = std::max(change, std::abs(next[j] - f[j]));
    }
    f.swap(next);
    result.iterations = t;
    if (change <= cfg.tol) {
      // A small step alone is not enough: with huge m_ij the sweep can
      // stall far from the fixed point, so the equation residual decides.
      result.residual_inf_norm = fidelity_residual(p_laplacian_apply(g, f, cfg.p, eps), f, y, cfg.mu);
      if (result.residual_inf_norm <= cfg.tol) {
        result.converged = true;
        break;
      }
    }
  }

  if (!result.converged) {
    result.residual_inf_norm = fidelity_residual(p_laplacian_apply(g, f, cfg.p, eps), f, y, cfg.mu);
  }
  result.scores = std::move(f);
  return result;
}

RankResult pagerank(const Graph& g, const SolverConfig& cfg) {
  if (!(cfg.damping > 0.0 && cfg.damping < 1.0)) throw std::invalid_argument("damping must lie in (0, 1)");
  if (!(cfg.tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  const std::size_t n = g.node_count();
  if (n == 0) throw std::invalid_argument("pagerank of an empty graph");

  const double inv_n = 1.0 / static_cast<double>(n);
  const double d = cfg.damping;
  NodeFunction x(n, inv_n);
  NodeFunction next(n);
  RankResult result;

  for (std::size_t t = 1; t <= cfg.max_iter; ++t) {
    double dangling = 0.0;
    for (NodeId i = 0; i < n; ++i) {
      if (g.degree(i) == 0.0) dangling += x[i];
    }
    const double base = (1.0 - d) * inv_n + d * dangling * inv_n;
    for_each_index(n, [&](NodeId j) {
      double inflow = 0.0;
      for (const auto& [i, w] : g.neighbors(j)) inflow += x[i] * w / g.degree(i);
      next[j] = base + d * inflow;
    });
    const double total = std::accumulate(next.begin(), next.end(), 0.0);
    double change = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      next[j] /= total;
      change += std::abs(next[j] - x[j]);
    }
    x.swap(next);
    result.iterations = t;
    result.residual_inf_norm = change;
    if (change <= cfg.tol) {
      result.converged = true;
      break;
    }
  }
  result.scores = std::move(x);
  return result;
}

std::vector<std::pair<std::string, double>> top_k(const RankResult& r, std::span<const std::string> labels,
                                                  std::size_t k) {
  if (labels.size() != r.scores.size()) throw std::invalid_argument("label count does not match score count");
  std::vector<std::size_t> order(r.scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const std::size_t take = std::min(k, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take), order.end(),
                    [&](std::size_t a, std::size_t b) {
                      if (r.scores[a] != r.scores[b]) return r.scores[a] > r.scores[b];
                      return labels[a] < labels[b];
                    });
  std::vector<std::pair<std::string, double>> out;
  out.reserve(take);
  for (std::size_t i = 0; i < take; ++i) out.emplace_back(labels[order[i]], r.scores[order[i]]);
  return out;
}

}  // namespace laprank
