#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "sdncc/errors.hpp"
#include "sdncc/hop_law.hpp"
#include "test_helpers.hpp"

using namespace sdncc;

TEST_CASE("ring measurements") {
  Topology topo = generate_topology(test::ring_spec(8));
  SUBCASE("single server averages to two hops") {
    CHECK(measure_avg_distance(topo, 1, 100, 0) == 2.0);
  }
  SUBCASE("full coverage measures zero") {
    CHECK(measure_avg_distance(topo, 8, 100, 0) == 0.0);
  }
  SUBCASE("monotone non-increasing in n under exact enumeration") {
    double previous = measure_avg_distance(topo, 1, 100, 0);
    for (int n = 2; n <= 8; ++n) {
      double d = measure_avg_distance(topo, n, 100, 0);
      CHECK(d <= previous + 1e-12);
      previous = d;
    }
  }
}

TEST_CASE("complete graph with one server") {
  const int n = 6;
  std::vector<NodeRecord> nodes(static_cast<size_t>(n));
  std::vector<LinkRecord> links;
  for (int v = 0; v < n; ++v) {
    nodes[static_cast<size_t>(v)] = {v, kRouter | kUser | kCaching, 1e9, 0.0};
    for (int w = 0; w < n; ++w)
      if (v != w) links.push_back({0, v, w, 1e9});
  }
  Topology topo(std::move(nodes), std::move(links), 0, 3);
  CHECK(measure_avg_distance(topo, 1, 100, 0) == doctest::Approx((n - 1.0) / n).epsilon(1e-12));
}

TEST_CASE("power-law fit recovers exact synthetic data") {
  const int n_nodes = 64;
  std::vector<std::pair<int, double>> samples;
  for (int n : {1, 2, 4, 8, 16, 32})
    samples.emplace_back(n, 2.0 * std::pow(64.0 / n, 0.5));
  HopLawFit fit = fit_power_law(samples, n_nodes);
  CHECK(fit.scale_hops == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(fit.exponent == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(fit.residual <= 1e-9);
}

TEST_CASE("two points fit with zero residual") {
  HopLawFit fit = fit_power_law({{1, 3.0}, {4, 1.5}}, 16);
  CHECK(fit.residual <= 1e-12);
  CHECK(fit.predict(1.0) == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(fit.predict(4.0) == doctest::Approx(1.5).epsilon(1e-9));
}

TEST_CASE("fit on measured ring samples stays within 25 percent") {
  Topology topo = generate_topology(test::ring_spec(8));
  std::vector<std::pair<int, double>> samples;
  for (int n : {1, 2, 4}) samples.emplace_back(n, measure_avg_distance(topo, n, 100, 0));
  HopLawFit fit = fit_power_law(samples, 8);
  for (const auto& [n, d] : samples) {
    CHECK(fit.predict(n) <= 1.25 * d);
    CHECK(fit.predict(n) >= 0.75 * d);
  }
}

TEST_CASE("fit rejects bad input") {
  CHECK_THROWS_AS(fit_power_law({{1, 2.0}}, 8), InsufficientSamples);
  CHECK_THROWS_AS(fit_power_law({{1, 2.0}, {2, 0.0}}, 8), InsufficientSamples);
  CHECK_THROWS_AS(fit_power_law({{1, 1.0}, {4, 2.0}}, 8), InvalidSpec);  // increasing d
  Topology topo = generate_topology(test::ring_spec(8));
  CHECK_THROWS_AS(measure_avg_distance(topo, 0, 10, 0), InvalidSpec);
  CHECK_THROWS_AS(measure_avg_distance(topo, 9, 10, 0), InvalidSpec);
}

TEST_CASE("fit is invariant to sample ordering") {
  std::vector<std::pair<int, double>> samples{{1, 4.0}, {2, 3.1}, {4, 2.4}, {8, 1.7}, {16, 1.2}};
  HopLawFit sorted_fit = fit_power_law(samples, 32);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(samples.begin(), samples.end(), rng);
    HopLawFit fit = fit_power_law(samples, 32);
    CHECK(fit.scale_hops == sorted_fit.scale_hops);
    CHECK(fit.exponent == sorted_fit.exponent);
  }
}

TEST_CASE("fitted predictions are positive and decreasing") {
  TopologyGenSpec spec;
  spec.kind = TopologyGenSpec::Kind::waxman;
  spec.n = 32;
  spec.seed = 21;
  Topology topo = generate_topology(spec);
  HopLawOptions options;
  options.seed = 13;
  HopLawFit fit = fit_hop_law(topo, options);
  CHECK(fit.scale_hops > 0.0);
  CHECK(fit.exponent > 0.0);
  double previous = fit.predict(1.0);
  for (int n = 2; n <= 32; ++n) {
    CHECK(fit.predict(n) > 0.0);
    CHECK(fit.predict(n) < previous);
    previous = fit.predict(n);
  }
}

TEST_CASE("sampled measurement is deterministic in the seed") {
  TopologyGenSpec spec;
  spec.kind = TopologyGenSpec::Kind::waxman;
  spec.n = 24;
  spec.seed = 2;
  Topology topo = generate_topology(spec);
  // C(24, 5) is far beyond the exact enumeration limit.
  double a = measure_avg_distance(topo, 5, 50, 77);
  double b = measure_avg_distance(topo, 5, 50, 77);
  CHECK(a == b);
  double c = measure_avg_distance(topo, 5, 50, 78);
  CHECK(a != c);  // different stream, almost surely different sample set
}
