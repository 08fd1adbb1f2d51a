#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "laprank/ranking.hpp"
#include "support.hpp"

using namespace laprank;

namespace {

Graph single_edge() { return build_graph(std::vector<EdgeRecord>{{"1", "2", 1}}); }
Graph path3() { return build_graph(std::vector<EdgeRecord>{{"A", "B", 1}, {"B", "C", 1}}); }
Graph star3() { return build_graph(std::vector<EdgeRecord>{{"c", "x", 1}, {"c", "y", 1}, {"c", "z", 1}}); }

double inf_distance(const NodeFunction& a, const NodeFunction& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Single edge, w = 1: (L + mu I)^{-1} mu (1, 0) = ((1 + mu) / (mu + 2), 1 / (mu + 2)).
NodeFunction single_edge_solution(double mu) { return {(1.0 + mu) / (mu + 2.0), 1.0 / (mu + 2.0)}; }

}  // namespace

TEST_CASE("uniform_prior") {
  CHECK(uniform_prior(4) == NodeFunction(4, 0.25));
  CHECK(uniform_prior(1) == NodeFunction{1.0});
  const NodeFunction big = uniform_prior(2584);
  CHECK(big.size() == 2584);
  CHECK(big[0] == 1.0 / 2584.0);
  CHECK(std::abs(big[0] - 0.00038699690402477026) <= 1e-12);
  CHECK_THROWS_AS(uniform_prior(0), std::invalid_argument);
}

TEST_CASE("SolverConfig validation") {
  SolverConfig ok;
  CHECK_NOTHROW(ok.validate());
  auto bad = [](auto mutate) {
    SolverConfig c;
    mutate(c);
    return c;
  };
  CHECK_THROWS_AS(bad([](SolverConfig& c) { c.p = 0.99; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](SolverConfig& c) { c.mu = 0.0; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](SolverConfig& c) { c.eps = 0.0; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](SolverConfig& c) { c.tol = -1.0; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](SolverConfig& c) { c.max_iter = 0; }).validate(), std::invalid_argument);
  CHECK_THROWS_AS(bad([](SolverConfig& c) { c.damping = 1.0; }).validate(), std::invalid_argument);
}

TEST_CASE("solve_p2_closed_form") {
  const Graph e = single_edge();
  SUBCASE("single edge, mu = 1") {
    const RankResult r = solve_p2_closed_form(e, {1, 0}, 1.0);
    CHECK(r.converged);
    CHECK(inf_distance(r.scores, {2.0 / 3.0, 1.0 / 3.0}) <= 1e-9);
    CHECK(r.residual_inf_norm <= 1e-9);
  }
  SUBCASE("large mu pins f to y") {
    const RankResult r = solve_p2_closed_form(e, {1, 0}, 1e9);
    CHECK(inf_distance(r.scores, {1, 0}) <= 1e-8);
    CHECK(inf_distance(r.scores, single_edge_solution(1e9)) <= 1e-12);
  }
  SUBCASE("uniform prior is returned exactly") {
    testing::Rng rng(1);
    const Graph g = testing::random_connected_graph(rng, 40, 0.2);
    const NodeFunction y = uniform_prior(40);
    for (double mu : {0.1, 1.0, 10.0}) {
      const RankResult r = solve_p2_closed_form(g, y, mu);
      CHECK(r.scores == y);
      CHECK(r.residual_inf_norm == 0.0);
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(solve_p2_closed_form(e, {1}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(solve_p2_closed_form(e, {1, 0}, 0.0), std::invalid_argument);
  }
}

TEST_CASE("closed form matches a dense solve") {
  testing::Rng rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 5 + rng() % 40, 0.2);
    const NodeFunction y = testing::random_function(rng, g.node_count(), 0.0, 1.0);
    const RankResult r = solve_p2_closed_form(g, y, 0.5, 1e-12);
    // Residual of the defining equation, formed densely.
    const NodeFunction lf = testing::dense_laplacian(g, r.scores);
    for (std::size_t j = 0; j < y.size(); ++j) CHECK(std::abs(lf[j] + 0.5 * (r.scores[j] - y[j])) <= 1e-11);
  }
}

TEST_CASE("solve_p_iterative") {
  SUBCASE("uniform prior is a first-sweep fixed point") {
    testing::Rng rng(9);
    const Graph g = testing::random_graph(rng, 60, 0.1);
    const NodeFunction y = uniform_prior(60);
    for (double p : {1.0, 1.1, 1.3, 1.5, 1.7, 1.9, 2.0, 3.0}) {
      for (double mu : {0.1, 1.0, 100.0}) {
        SolverConfig cfg;
        cfg.p = p;
        cfg.mu = mu;
        const RankResult r = solve_p_iterative(g, y, cfg);
        CHECK(r.converged);
        CHECK(r.iterations == 1);
        CHECK(r.scores == y);
      }
    }
  }
  SUBCASE("p = 2 single edge reaches the closed form") {
    SolverConfig cfg;
    cfg.p = 2.0;
    cfg.mu = 1.0;
    const RankResult r = solve_p_iterative(single_edge(), {1, 0}, cfg);
    CHECK(r.converged);
    CHECK(inf_distance(r.scores, solve_p2_closed_form(single_edge(), {1, 0}, 1.0).scores) <= 1e-8);
  }
  SUBCASE("p = 1 on a path stalls and says so") {
    // The sweep weights grow like 1/|f_j - f_i| and freeze the iterate near
    // a constant that is not a solution; the result must report that.
    SolverConfig cfg;
    cfg.p = 1.0;
    cfg.mu = 1.0;
    cfg.max_iter = 2000;
    const Graph p = path3();
    const NodeFunction y{1, 0, 0};
    const RankResult r = solve_p_iterative(p, y, cfg);
    const NodeFunction k = curvature_apply(p, r.scores);
    double residual = 0.0;
    for (std::size_t j = 0; j < 3; ++j) residual = std::max(residual, std::abs(k[j] + (r.scores[j] - y[j])));
    CHECK_FALSE(r.converged);
    CHECK(r.iterations == 2000);
    CHECK(r.residual_inf_norm == doctest::Approx(residual).epsilon(1e-12));
    CHECK(residual > 0.1);
  }
  SUBCASE("isolated nodes keep their prior") {
    std::vector<std::string> labels{"iso"};
    const Graph g = build_graph(labels, std::vector<EdgeRecord>{{"A", "B", 1}, {"B", "C", 2}});
    const NodeFunction y{0.7, 0.1, 0.5, 0.2};
    SolverConfig cfg;
    cfg.p = 1.5;
    const RankResult r = solve_p_iterative(g, y, cfg);
    CHECK(r.scores[0] == 0.7);
  }
  SUBCASE("non-convergence is reported, not hidden") {
    testing::Rng rng(3);
    const Graph g = testing::random_connected_graph(rng, 20, 0.2);
    SolverConfig cfg;
    cfg.p = 2.0;
    cfg.mu = 0.1;
    cfg.max_iter = 3;
    const RankResult r = solve_p_iterative(g, testing::random_function(rng, 20, 0.0, 1.0), cfg);
    CHECK_FALSE(r.converged);
    CHECK(r.iterations == 3);
    CHECK(r.residual_inf_norm > cfg.tol);
  }
  SUBCASE("non-finite values are an error with the iteration number") {
    SolverConfig cfg;
    cfg.p = 2.0;
    try {
      solve_p_iterative(single_edge(), {std::nan(""), 0.0}, cfg);
      FAIL("expected SolverError");
    } catch (const SolverError& e) {
      REQUIRE(e.iteration().has_value());
      CHECK(*e.iteration() == 1);
    }
  }
  SUBCASE("errors") {
    SolverConfig cfg;
    CHECK_THROWS_AS(solve_p_iterative(single_edge(), {1}, cfg), std::invalid_argument);
    cfg.p = 0.5;
    CHECK_THROWS_AS(solve_p_iterative(single_edge(), {1, 0}, cfg), std::invalid_argument);
  }
}

TEST_CASE("converged iterates carry a fixed-point certificate") {
  testing::Rng rng(808);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 4 + rng() % 20, 0.25);
    const NodeFunction y = testing::random_function(rng, g.node_count(), 0.0, 1.0);
    for (double p : {1.0, 1.5, 2.0, 2.5}) {
      SolverConfig cfg;
      cfg.p = p;
      cfg.mu = 10.0;
      const RankResult r = solve_p_iterative(g, y, cfg);
      if (!r.converged) continue;
      const NodeFunction op = p_laplacian_apply(g, r.scores, p, Epsilon(cfg.eps));
      double residual = 0.0;
      for (std::size_t j = 0; j < y.size(); ++j) {
        residual = std::max(residual, std::abs(op[j] + cfg.mu * (r.scores[j] - y[j])));
      }
      CHECK(residual <= 100 * cfg.tol);
      CHECK(r.residual_inf_norm <= cfg.tol);
    }
  }
}

TEST_CASE("p = 2 iteration agrees with the closed form") {
  testing::Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 2 + rng() % 29, 0.2);
    const NodeFunction y = testing::random_function(rng, g.node_count(), 0.0, 1.0);
    for (double mu : {0.1, 1.0, 10.0}) {
      SolverConfig cfg;
      cfg.p = 2.0;
      cfg.mu = mu;
      cfg.tol = 1e-11;
      cfg.max_iter = 200'000;
      const RankResult it = solve_p_iterative(g, y, cfg);
      const RankResult cf = solve_p2_closed_form(g, y, mu, 1e-12);
      CHECK(it.converged);
      CHECK(inf_distance(it.scores, cf.scores) <= 1e-7);
    }
  }
}

TEST_CASE("larger mu keeps the ranking closer to the prior") {
  testing::Rng rng(64);
  for (int trial = 0; trial < 5; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 6 + rng() % 15, 0.3);
    const NodeFunction y = testing::random_function(rng, g.node_count(), 0.0, 1.0);
    for (double p : {1.5, 2.0}) {
      double previous = 1e300;
      for (double mu : {0.1, 1.0, 10.0, 100.0, 1000.0}) {
        SolverConfig cfg;
        cfg.p = p;
        cfg.mu = mu;
        cfg.max_iter = 200'000;
        const RankResult r = solve_p_iterative(g, y, cfg);
        const double gap = inf_distance(r.scores, y);
        CHECK(gap <= previous + 1e-9);
        previous = gap;
      }
    }
  }
}

TEST_CASE("solvers are deterministic") {
  testing::Rng rng(4);
  const Graph g = testing::random_connected_graph(rng, 30, 0.2);
  const NodeFunction y = testing::random_function(rng, 30, 0.0, 1.0);
  SolverConfig cfg;
  cfg.p = 1.5;
  const RankResult a = solve_p_iterative(g, y, cfg);
  const RankResult b = solve_p_iterative(g, y, cfg);
  CHECK(a.scores == b.scores);
  CHECK(a.iterations == b.iterations);
  CHECK(a.residual_inf_norm == b.residual_inf_norm);
  CHECK(pagerank(g, cfg).scores == pagerank(g, cfg).scores);
}

TEST_CASE("pagerank") {
  SolverConfig cfg;
  cfg.tol = 1e-12;
  SUBCASE("single edge") {
    const RankResult r = pagerank(single_edge(), cfg);
    CHECK(r.converged);
    CHECK(r.scores[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.scores[1] == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("star center wins and matches the dense oracle") {
    const Graph s = star3();
    const RankResult r = pagerank(s, cfg);
    const auto oracle = testing::dense_pagerank(s, 0.85, 500);
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(r.scores[i] - oracle[i]) <= 1e-10);
    const NodeId c = *s.find("c");
    for (NodeId i = 0; i < 4; ++i) {
      if (i != c) CHECK(r.scores[c] > r.scores[i]);
    }
  }
  SUBCASE("random graphs with isolated nodes") {
    testing::Rng rng(6);
    for (int trial = 0; trial < 10; ++trial) {
      const Graph g = testing::random_graph(rng, 2 + rng() % 30, 0.1);
      const RankResult r = pagerank(g, cfg);
      const auto oracle = testing::dense_pagerank(g, 0.85, 1000);
      double total = 0.0;
      for (std::size_t i = 0; i < g.node_count(); ++i) {
        CHECK(r.scores[i] >= 0.0);
        CHECK(std::abs(r.scores[i] - oracle[i]) <= 1e-10);
        total += r.scores[i];
      }
      CHECK(std::abs(total - 1.0) <= 1e-12);
    }
  }
  SUBCASE("non-convergence is flagged") {
    testing::Rng rng(6);
    cfg.max_iter = 2;
    CHECK_FALSE(pagerank(testing::random_connected_graph(rng, 20, 0.2), cfg).converged);
  }
}

TEST_CASE("top_k") {
  const std::vector<std::string> labels{"a", "b", "c"};
  RankResult r;
  r.scores = {0.1, 0.3, 0.2};
  const auto top = top_k(r, labels, 2);
  REQUIRE(top.size() == 2);
  CHECK(top[0] == std::pair<std::string, double>{"b", 0.3});
  CHECK(top[1] == std::pair<std::string, double>{"c", 0.2});

  RankResult tie;
  tie.scores = {0.5, 0.5, 0.5};
  const std::vector<std::string> names{"zeta", "alpha", "mid"};
  const auto tied = top_k(tie, names, 3);
  CHECK(tied[0].first == "alpha");
  CHECK(tied[1].first == "mid");
  CHECK(tied[2].first == "zeta");

  CHECK(top_k(r, labels, 10).size() == 3);
}

TEST_CASE("top_k order is invariant under positive scaling") {
  testing::Rng rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng() % 50;
    RankResult r;
    r.scores = testing::random_function(rng, n, 0.0, 1.0);
    // Force some ties.
    for (std::size_t i = 0; i + 1 < n; i += 4) r.scores[i + 1] = r.scores[i];
    const auto labels = testing::numbered_labels(n);
    RankResult scaled = r;
    for (auto& v : scaled.scores) v *= 4.0;
    const auto a = top_k(r, labels, 10);
    const auto b = top_k(scaled, labels, 10);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].first == b[i].first);
  }
}
