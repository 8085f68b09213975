#include <cmath>
#include <random>

#include "doctest.h"
#include "sdncc/capacity_alloc.hpp"

using namespace sdncc;

namespace {

HopLawFit unit_fit(double scale, double exponent, int n_nodes) {
  HopLawFit fit;
  fit.scale_hops = scale;
  fit.exponent = exponent;
  fit.n_nodes = n_nodes;
  return fit;
}

// alpha = 1, A = 1, N = 64, lambda * (p_l + p_n + gamma*eta) / (p_ca * t) = 4
EnergyParams spot_params() {
  EnergyParams params;
  params.p_tr_link_j_per_bit = 0.0;
  params.p_tr_node_j_per_bit = 0.0;
  params.p_ca_w_per_bit = 1.0;
  params.p_static_w = 1.0;
  params.duration_s = 1.0;
  params.gamma = 1.0;
  params.eta = 1.0;
  return params;
}

}  // namespace

TEST_CASE("closed form spot value 16") {
  HopLawFit fit = unit_fit(1.0, 1.0, 64);
  ContentItem item{"content-0", 4.0, 1e6};
  CopyCount cc = optimal_content_copies(item, fit, spot_params(), 64);
  CHECK(cc.raw == 16.0);
  CHECK(cc.clamped == 16.0);
  CHECK(oracle_content_copies(item, fit, spot_params(), 64) == 16);
}

TEST_CASE("clamping") {
  HopLawFit fit = unit_fit(1.0, 1.0, 64);
  SUBCASE("lower clamp") {
    ContentItem item{"content-0", 4.0 * 0.09 * 0.09 / 64.0, 1e6};  // raw = 0.36... < 1
    CopyCount cc = optimal_content_copies(item, fit, spot_params(), 64);
    CHECK(cc.raw < 1.0);
    CHECK(cc.clamped == 1.0);
    CHECK(cc.rounded == 1);
  }
  SUBCASE("upper clamp") {
    ContentItem item{"content-0", 4e6, 1e6};
    CopyCount cc = optimal_content_copies(item, fit, spot_params(), 64);
    CHECK(cc.raw > 64.0);
    CHECK(cc.clamped == 64.0);
    CHECK(cc.rounded == 64);
  }
}

TEST_CASE("vm copy spot value 8") {
  HopLawFit fit = unit_fit(1.0, 1.0, 64);
  ComputationItem item{"compute-0", 1.0, 1.0, 1e3};  // lambda * o_B = 1
  CopyCount cc = optimal_vm_copies(item, fit, spot_params(), 64);
  CHECK(cc.raw == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("scaling laws of the stationary point") {
  std::mt19937_64 rng(31);
  auto uniform = [&](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  };
  for (int trial = 0; trial < 50; ++trial) {
    HopLawFit fit = unit_fit(uniform(0.5, 4.0), uniform(0.2, 2.0), 64);
    EnergyParams params;
    params.p_ca_w_per_bit = uniform(1e-10, 1e-7);
    params.gamma = uniform(0.0, 2.0);
    ContentItem item{"content-0", uniform(1.0, 1e4), uniform(1e5, 1e8)};

    double base = optimal_content_copies(item, fit, params, 64).raw;
    ContentItem doubled = item;
    doubled.popularity *= 2.0;
    double scaled = optimal_content_copies(doubled, fit, params, 64).raw;
    CHECK(scaled ==
          doctest::Approx(base * std::pow(2.0, 1.0 / (fit.exponent + 1.0))).epsilon(1e-9));

    // decreasing in the cache price
    EnergyParams pricier = params;
    pricier.p_ca_w_per_bit *= 3.0;
    CHECK(optimal_content_copies(item, fit, pricier, 64).raw < base);
  }
}

TEST_CASE("vm count doubles as two to the one over alpha plus one") {
  HopLawFit fit = unit_fit(1.0, 1.0, 64);
  ComputationItem item{"compute-0", 3.0, 2e6, 1e3};
  EnergyParams params = spot_params();
  double base = optimal_vm_copies(item, fit, params, 64).raw;
  ComputationItem doubled = item;
  doubled.popularity *= 2.0;
  CHECK(optimal_vm_copies(doubled, fit, params, 64).raw ==
        doctest::Approx(base * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("oracle monotone edges") {
  HopLawFit fit = unit_fit(2.0, 0.7, 32);
  SUBCASE("huge cache price pushes to one copy") {
    EnergyParams params;
    params.p_ca_w_per_bit = 1e6;
    ContentItem item{"content-0", 10.0, 1e6};
    CHECK(oracle_content_copies(item, fit, params, 32) == 1);
  }
  SUBCASE("negligible cache price pushes to full replication") {
    EnergyParams params;
    params.p_ca_w_per_bit = 1e-30;
    ContentItem item{"content-0", 10.0, 1e6};
    CHECK(oracle_content_copies(item, fit, params, 32) == 32);
  }
}

TEST_CASE("degenerate storage price reports full replication") {
  HopLawFit fit = unit_fit(1.0, 1.0, 16);
  EnergyParams params = spot_params();
  params.p_ca_w_per_bit = 0.0;
  ContentItem item{"content-0", 5.0, 1e6};
  CopyCount cc = optimal_content_copies(item, fit, params, 16);
  CHECK(cc.degenerate);
  CHECK(cc.clamped == 16.0);
}

TEST_CASE("first-order optimality and oracle agreement on random draws") {
  std::mt19937_64 rng(77);
  auto uniform = [&](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const int n_nodes = 64;
    HopLawFit fit = unit_fit(uniform(0.5, 4.0), uniform(0.2, 1.8), n_nodes);
    EnergyParams params;
    params.p_tr_link_j_per_bit = uniform(1e-10, 1e-8);
    params.p_tr_node_j_per_bit = uniform(1e-9, 1e-7);
    params.p_ca_w_per_bit = uniform(1e-10, 1e-7);
    params.p_static_w = uniform(1.0, 100.0);
    params.gamma = uniform(0.0, 1e-6);
    params.eta = uniform(0.5, 2.0);

    ContentItem content{"content-0", uniform(1.0, 1e5), uniform(1e5, 1e9)};
    CopyCount cc = optimal_content_copies(content, fit, params, n_nodes);
    auto content_cost = [&](double n) {
      return content_cost_parts(content, n, fit, params).combined(params.gamma);
    };
    if (cc.raw > 0) {
      CHECK(content_cost(cc.raw) <= content_cost(0.5 * cc.raw) * (1 + 1e-12));
      CHECK(content_cost(cc.raw) <= content_cost(2.0 * cc.raw) * (1 + 1e-12));
    }
    int oracle = oracle_content_copies(content, fit, params, n_nodes);
    CHECK(std::fabs(cc.clamped - oracle) <= 1.0 + 1e-9);

    ComputationItem compute{"compute-0", uniform(1.0, 1e5), uniform(1e5, 1e9), uniform(1.0, 1e6)};
    CopyCount mm = optimal_vm_copies(compute, fit, params, n_nodes);
    auto compute_cost = [&](double m) {
      return computation_cost_parts(compute, m, fit, params).combined(params.gamma);
    };
    if (mm.raw > 0) {
      CHECK(compute_cost(mm.raw) <= compute_cost(0.5 * mm.raw) * (1 + 1e-12));
      CHECK(compute_cost(mm.raw) <= compute_cost(2.0 * mm.raw) * (1 + 1e-12));
    }
    CHECK(std::fabs(mm.clamped - oracle_vm_copies(compute, fit, params, n_nodes)) <= 1.0 + 1e-9);
  }
}

TEST_CASE("reference-parameter vm counts agree with the oracle") {
  // p_static = 50 W and t = 3600 s; sweep the data rate across the
  // interesting range.
  HopLawFit fit = unit_fit(2.5, 0.6, 64);
  EnergyParams params;  // reference defaults
  for (double lambda : {10.0, 100.0, 1000.0, 10000.0}) {
    ComputationItem item{"compute-0", lambda, 1e9, 1e6};
    CopyCount mm = optimal_vm_copies(item, fit, params, 64);
    int oracle = oracle_vm_copies(item, fit, params, 64);
    CHECK(std::fabs(mm.clamped - oracle) <= 1.0 + 1e-9);
  }
}

TEST_CASE("allocation covers the whole catalog") {
  ServiceCatalog catalog = zipf_catalog(3, 2, 1000.0, 1.0, SizeSpec{}, 5);
  HopLawFit fit = unit_fit(2.0, 0.5, 16);
  CopyAllocation alloc = allocate_copies(catalog, fit, EnergyParams{}, 16);
  CHECK(alloc.contents.size() == 3);
  CHECK(alloc.computations.size() == 2);
  for (const CopyCount& cc : alloc.contents) {
    CHECK(cc.clamped >= 1.0);
    CHECK(cc.clamped <= 16.0);
  }
}
