#include <cmath>
#include <random>

#include "doctest.h"
#include "sdncc/simplex.hpp"

using namespace sdncc;

TEST_CASE("textbook maximization") {
  // max 3x + 2y s.t. x + y <= 4, x + 3y <= 6 -> x = 4, y = 0, value 12
  DenseSimplex solver({{1, 1}, {1, 3}}, {4, 6}, {3, 2});
  LpSolution s = solver.solve();
  REQUIRE(s.status == LpStatus::optimal);
  CHECK(s.objective == doctest::Approx(12.0).epsilon(1e-12));
  CHECK(s.x[0] == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(s.x[1] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("negative rhs forces a feasibility phase") {
  // max -x s.t. -x <= -2 (x >= 2)  ->  x = 2
  DenseSimplex solver({{-1}}, {-2}, {-1});
  LpSolution s = solver.solve();
  REQUIRE(s.status == LpStatus::optimal);
  CHECK(s.x[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(s.objective == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("infeasible system") {
  // x <= 1 and x >= 3
  DenseSimplex solver({{1}, {-1}}, {1, -3}, {1});
  CHECK(solver.solve().status == LpStatus::infeasible);
}

TEST_CASE("unbounded direction") {
  DenseSimplex solver({{-1}}, {0}, {1});
  CHECK(solver.solve().status == LpStatus::unbounded);
}

TEST_CASE("equality wrapper solves a transport split") {
  // min 1*a + 3*b s.t. a + b = 1, a <= 0.4
  LinearProgram lp;
  lp.n_vars = 2;
  lp.eq_rows = {{1, 1}};
  lp.eq_rhs = {1};
  lp.ub_rows = {{1, 0}};
  lp.ub_rhs = {0.4};
  lp.minimize = {1, 3};
  LpSolution s = solve_lp(lp);
  REQUIRE(s.status == LpStatus::optimal);
  CHECK(s.x[0] == doctest::Approx(0.4).epsilon(1e-9));
  CHECK(s.x[1] == doctest::Approx(0.6).epsilon(1e-9));
  CHECK(s.objective == doctest::Approx(0.4 + 1.8).epsilon(1e-9));
}

TEST_CASE("random lps match a vertex-enumeration oracle") {
  // Small random instances with x in [0,1]^n encoded as rows; compare the
  // simplex optimum against brute force over the vertices of the feasible
  // box refined by one extra constraint.
  std::mt19937_64 rng(8);
  auto uniform = [&](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  };
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3;
    std::vector<double> c(n), cap(n);
    for (int j = 0; j < n; ++j) {
      c[static_cast<size_t>(j)] = uniform(-2.0, 2.0);
      cap[static_cast<size_t>(j)] = uniform(0.2, 1.0);
    }
    // max c.x s.t. x_j <= cap_j, sum x <= s
    double s_cap = uniform(0.5, 2.0);
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (int j = 0; j < n; ++j) {
      std::vector<double> row(n, 0.0);
      row[static_cast<size_t>(j)] = 1.0;
      a.push_back(row);
      b.push_back(cap[static_cast<size_t>(j)]);
    }
    a.push_back({1, 1, 1});
    b.push_back(s_cap);

    LpSolution got = DenseSimplex(a, b, c).solve();
    REQUIRE(got.status == LpStatus::optimal);

    // Greedy oracle: fill coordinates by descending positive c under the
    // budget; optimal because constraints are a box plus one budget row.
    std::vector<int> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int i, int j) { return c[static_cast<size_t>(i)] > c[static_cast<size_t>(j)]; });
    double budget = s_cap, best = 0.0;
    for (int j : order) {
      if (c[static_cast<size_t>(j)] <= 0.0) break;
      double take = std::min(cap[static_cast<size_t>(j)], budget);
      best += c[static_cast<size_t>(j)] * take;
      budget -= take;
    }
    CHECK(got.objective == doctest::Approx(best).epsilon(1e-9));
  }
}
