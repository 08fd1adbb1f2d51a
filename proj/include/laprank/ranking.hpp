#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "laprank/graph.hpp"
#include "laprank/operators.hpp"

namespace laprank {

struct SolverConfig {
  double p = 2.0;
  double mu = 1.0;
  double eps = Epsilon::kDefault;
  double tol = 1e-9;
  std::size_t max_iter = 10'000;
  double damping = 0.85;

  /// Throws std::invalid_argument naming the first field out of bounds.
  void validate() const;

  bool operator==(const SolverConfig&) const = default;
};

struct RankResult {
  NodeFunction scores;
  std::size_t iterations = 0;
  double residual_inf_norm = 0.0;
  bool converged = false;
};

/// Numerical failure inside a solver, e.g. a non-finite iterate.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what, std::optional<std::size_t> iteration = std::nullopt)
      : std::runtime_error(what), iteration_(iteration) {}
  std::optional<std::size_t> iteration() const noexcept { return iteration_; }

 private:
  std::optional<std::size_t> iteration_;
};

/// y_i = 1/n.
NodeFunction uniform_prior(std::size_t n);

/// Solves (D - W + mu I) f = mu y with preconditioned conjugate gradients
/// started from f = y, stopping once |Df + mu (f - y)|_inf <= tol. Falls
/// back to a dense factorization for n <= 500 if CG stalls; larger systems
/// throw SolverError instead.
RankResult solve_p2_closed_form(const Graph& g, const NodeFunction& y, double mu, double tol = 1e-9,
                                std::size_t max_iter = 10'000);

/// Fixed-point iteration for D_p f + mu (f - y) = 0.
///
/// Starting from f = y, every sweep recomputes the smoothed local
/// variations of the current iterate, forms
///   m_ij = 1/2 w_ij (|d_i f|^(p-2) + |d_j f|^(p-2))
/// and replaces all coordinates at once by
///   f_j <- (sum_{i~j} m_ij f_i + mu y_j) / (sum_{i~j} m_ij + mu).
/// Converged once the sup-norm change between sweeps is <= cfg.tol and the
/// residual |D_p f + mu (f - y)|_inf at the new iterate is <= cfg.tol too.
/// Otherwise runs cfg.max_iter sweeps and returns converged = false. The
/// residual is always reported for the returned iterate.
RankResult solve_p_iterative(const Graph& g, const NodeFunction& y, const SolverConfig& cfg);

/// Damped random walk with transition w_ij / d_i; isolated nodes spread
/// their mass uniformly. Scores sum to 1. Stops when the L1 change is
/// <= cfg.tol; `residual_inf_norm` carries that last change.
RankResult pagerank(const Graph& g, const SolverConfig& cfg);

/// Highest scores first, ties by ascending label; at most k entries.
std::vector<std::pair<std::string, double>> top_k(const RankResult& r, std::span<const std::string> labels,
                                                  std::size_t k);

}  // namespace laprank
