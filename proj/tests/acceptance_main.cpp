// Acceptance suite. Each criterion prints one [PASS]/[FAIL] line; the
// process exits non-zero when any criterion fails. argv[1] is the CLI
// binary (used for the end-to-end determinism check), argv[2] the params
// directory with the shipped scenario files.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bruteforce.hpp"
#include "sdncc/capacity_alloc.hpp"
#include "sdncc/errors.hpp"
#include "sdncc/hop_law.hpp"
#include "sdncc/placement_search.hpp"
#include "sdncc/scenario.hpp"
#include "sdncc/server_select.hpp"

using namespace sdncc;

namespace {

std::string g_cli_path;
std::string g_params_dir;

struct CheckFailure {
  std::string message;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw CheckFailure{message};
}

double rel_gap(double a, double b) {
  double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
  return std::fabs(a - b) / scale;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

// ---- criterion 1: traffic trend against the baseline at backbone scale ----

void criterion_fig2_trend() {
  auto start = std::chrono::steady_clock::now();
  Scenario scenario = load_scenario(g_params_dir + "/fig2_us64.json");
  std::vector<ResultRow> rows = experiment_fig2(scenario);
  double elapsed_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  require(rows.size() >= 4 && rows.size() % 2 == 0, "expected paired greedy/baseline rows");
  double previous = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < rows.size(); i += 2) {
    const ResultRow& greedy = rows[i];
    const ResultRow& baseline = rows[i + 1];
    require(greedy.method == "greedy" && baseline.method == "baseline", "row order");
    require(greedy.traffic_per_s <= baseline.traffic_per_s * (1 + 1e-9),
            "greedy traffic above baseline at x=" + std::to_string(greedy.sweep_value));
    require(greedy.traffic_per_s <= previous * (1 + 1e-9),
            "greedy traffic not monotone at x=" + std::to_string(greedy.sweep_value));
    previous = greedy.traffic_per_s;
  }
  require(elapsed_s < 60.0, "fig2 took " + std::to_string(elapsed_s) + " s (limit 60)");
}

// ---- criterion 2: copy counts across the popularity sweep ----

void criterion_fig3_trend() {
  Scenario scenario = load_scenario(g_params_dir + "/fig3_popularity.json");
  require(scenario.sweep.values.size() >= 10, "need a 10-point popularity sweep");
  std::vector<PopularitySweepRow> rows = experiment_fig3(scenario);

  for (size_t i = 1; i < rows.size(); ++i)
    require(rows[i].content_star >= rows[i - 1].content_star - 1e-12,
            "content copies not monotone in popularity");
  for (const PopularitySweepRow& r : rows) {
    require(std::fabs(r.content_star - r.content_oracle) <= 1.0 + 1e-9,
            "content copies differ from the oracle by more than one");
    require(std::fabs(r.vm_star - r.vm_oracle) <= 1.0 + 1e-9,
            "vm copies differ from the oracle by more than one");
  }

  // exact scaling between lambda and 16*lambda
  HopLawFit fit = fit_instance_hop_law(build_topology(scenario, {}), scenario.seed);
  double expected_ratio = std::pow(16.0, 1.0 / (fit.exponent + 1.0));
  int hits = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < rows.size(); ++j) {
      if (rel_gap(rows[j].lambda, 16.0 * rows[i].lambda) > 1e-12) continue;
      require(rel_gap(rows[j].content_raw / rows[i].content_raw, expected_ratio) <= 1e-6,
              "16x popularity scaling violated");
      ++hits;
    }
  }
  require(hits >= 1, "sweep contains no (lambda, 16*lambda) pair");
}

// ---- criterion 3: restricted search equals the unrestricted brute force ----

Instance random_small_instance(std::mt19937_64& rng) {
  TopologyGenSpec spec;
  spec.kind = TopologyGenSpec::Kind::waxman;
  spec.n = 3 + static_cast<int>(rng() % 3);
  spec.seed = rng();
  spec.link_capacity_bits = uniform(rng, 0.5, 50.0) * 1e8;
  spec.cache_capacity_bits = uniform(rng, 0.5, 4.0) * 1e7;
  spec.compute_capacity_units = uniform(rng, 0.5, 4.0) * 1e4;
  spec.caching.count = 1 + static_cast<int>(rng() % 3);
  spec.computing.count = 1 + static_cast<int>(rng() % 2);

  ServiceCatalog catalog;
  int contents = 1 + static_cast<int>(rng() % 2);
  for (int k = 0; k < contents; ++k)
    catalog.contents.push_back(
        {"content-" + std::to_string(k), uniform(rng, 1.0, 50.0), uniform(rng, 1e6, 1e7)});
  if (rng() % 2 == 0)
    catalog.computations.push_back(
        {"compute-0", uniform(rng, 1.0, 50.0), uniform(rng, 1e6, 1e7), uniform(rng, 1e3, 9e3)});

  EnergyParams params;
  params.p_ca_w_per_bit = uniform(rng, 1e-10, 3e-7);
  params.p_static_w = uniform(rng, 1.0, 500.0);
  params.gamma = uniform(rng, 0.0, 2e-8);
  Topology topo = generate_topology(spec);
  DemandMatrix demand = spread_demand(catalog, topo.users());
  return make_instance(std::move(topo), catalog, std::move(demand), params);
}

void criterion_oracle_equivalence() {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20260809);
  int solved = 0, degenerate = 0, zero_copy_optima = 0;
  for (int trial = 0; solved < 50; ++trial) {
    require(trial < 200, "too many degenerate draws");
    Instance inst = random_small_instance(rng);
    test::BruteForceResult oracle = test::brute_force_placement(inst);
    if (oracle.found)
      for (int c : oracle.copy_counts)
        if (c == 0) {
          ++zero_copy_optima;
          break;
        }

    SearchOptions options;
    options.allow_zero_copies = true;
    if (!oracle.found) {
      bool threw = false;
      try {
        CopyAllocation ones = test::counts_from(
            std::vector<int>(static_cast<size_t>(inst.catalog.service_count()), 1), inst.catalog);
        exhaustive_search(enumerate_space(ones, inst.topo, inst.catalog, options), inst, options);
      } catch (const AllInfeasible&) {
        threw = true;
      }
      require(threw, "search found a solution the brute force says cannot exist");
      ++degenerate;
      continue;
    }

    SearchSpace space = enumerate_space(test::counts_from(oracle.copy_counts, inst.catalog),
                                        inst.topo, inst.catalog, options);
    SearchResult result = exhaustive_search(space, inst, options);
    require(rel_gap(result.cost.total, oracle.cost.total) <= 1e-9,
            "restricted search missed the brute-force optimum");
    ++solved;
  }
  double elapsed_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  require(elapsed_s < 300.0, "oracle equivalence took " + std::to_string(elapsed_s) + " s");
  std::cerr << "       (criterion 3: " << solved << " solved, " << degenerate
            << " infeasible draws, " << zero_copy_optima << " with a zero-copy optimum)\n";
}

// ---- criterion 4: lp correctness ----

void criterion_lp() {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    TopologyGenSpec spec;
    spec.kind = TopologyGenSpec::Kind::waxman;
    spec.n = 5 + static_cast<int>(rng() % 6);
    spec.seed = rng();
    Topology topo = generate_topology(spec);
    ServiceCatalog catalog;
    catalog.contents.push_back({"content-0", uniform(rng, 1.0, 20.0), uniform(rng, 1e6, 1e8)});
    if (trial % 2 == 0)
      catalog.computations.push_back(
          {"compute-0", uniform(rng, 1.0, 20.0), uniform(rng, 1e6, 1e8), 1e3});
    DemandMatrix demand = spread_demand(catalog, topo.users());
    Instance inst = make_instance(std::move(topo), catalog, std::move(demand), EnergyParams{});

    Placement placement(inst.topo, inst.catalog);
    for (int k = 0; k < inst.catalog.service_count(); ++k)
      for (int c = 0; c < 2; ++c)
        placement.add(static_cast<NodeId>(rng() % static_cast<uint64_t>(inst.topo.node_count())), k);

    SelectionProblem problem{&inst, &placement};
    SelectionSolution nearest = solve_selection(problem, {SelectMode::uncapacitated, true});
    SelectionSolution lp = solve_selection(problem, {SelectMode::lp, false});
    require(lp.status == SelectStatus::optimal, "lp infeasible on a slack instance");
    require(rel_gap(lp.objective, nearest.objective) <= 1e-9,
            "lp objective differs from the nearest-server assignment");
  }

  // constructed bottleneck: the near server sits behind a half-capacity
  // link, so the optimum splits 50/50 with the far server
  std::vector<NodeRecord> nodes(4);
  for (int v = 0; v < 4; ++v)
    nodes[static_cast<size_t>(v)] = {v, kRouter | kUser | kCaching, 1e18, 0.0};
  const double m = 1e9;
  std::vector<LinkRecord> links{
      {0, 1, 0, m / 2}, {0, 0, 1, m / 2},
      {0, 2, 0, 1e18},  {0, 0, 2, 1e18},
      {0, 3, 2, 1e18},  {0, 2, 3, 1e18},
  };
  Topology topo(std::move(nodes), std::move(links), 2, 5);
  ServiceCatalog catalog;
  catalog.contents.push_back({"content-0", 1.0, m});
  DemandMatrix demand = spread_demand(catalog, {0});
  Instance inst = make_instance(std::move(topo), catalog, std::move(demand), EnergyParams{});
  Placement placement(inst.topo, inst.catalog);
  placement.add(1, 0);
  placement.add(3, 0);
  SelectionProblem problem{&inst, &placement};
  SelectionSolution lp = solve_selection(problem, {SelectMode::lp, true});
  require(lp.status == SelectStatus::optimal, "bottleneck instance must be feasible");
  double hand_optimum = m * 0.5 * (problem.weight(1, 0) + problem.weight(3, 0));
  require(rel_gap(lp.objective, hand_optimum) <= 1e-6, "bottleneck optimum mismatch");
}

// ---- criterion 5: cost accounting and constraint verification ----

void criterion_cost_accounting() {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 25; ++trial) {
    Instance inst = random_small_instance(rng);
    for (bool greedy : {false, true}) {
      SearchResult result;
      try {
        if (greedy) {
          CopyAllocation ones = test::counts_from(
              std::vector<int>(static_cast<size_t>(inst.catalog.service_count()), 1),
              inst.catalog);
          result = greedy_placement(ones, inst);
        } else {
          result = baseline_origin(inst);
        }
      } catch (const Infeasible&) {
        continue;  // tight links can make a draw unservable; nothing to verify
      }
      const CostBreakdown& cost = result.cost;
      require(cost.total == cost.caching_j + cost.computing_j + cost.transmission_j +
                                inst.params.gamma * cost.usage,
              "cost components do not re-sum to the total");
      if (greedy) {
        SelectionProblem problem{&inst, &result.placement};
        VerifyReport report = verify_solution(problem, result.selection);
        require(report.max_coverage_violation <= 1e-9, "coverage violation " + report.summary());
        require(report.max_capacity_violation_rel <= 1e-6, "capacity violation " + report.summary());
        require(report.max_box_violation <= 1e-9, "box violation " + report.summary());
      }
    }
  }
}

// ---- criterion 6: closed-form spot value ----

void criterion_spot_value() {
  HopLawFit fit;
  fit.scale_hops = 1.0;
  fit.exponent = 1.0;
  fit.n_nodes = 64;
  EnergyParams params;
  params.p_tr_link_j_per_bit = 0.0;
  params.p_tr_node_j_per_bit = 0.0;
  params.p_ca_w_per_bit = 1.0;
  params.duration_s = 1.0;
  params.gamma = 1.0;
  params.eta = 1.0;
  ContentItem item{"content-0", 4.0, 1e6};
  CopyCount cc = optimal_content_copies(item, fit, params, 64);
  require(cc.raw == 16.0, "stationary point is not exactly 16");
  require(oracle_content_copies(item, fit, params, 64) == 16, "grid argmin is not 16");
}

// ---- criterion 7: hop-law sanity ----

void criterion_hop_law() {
  Topology ring = generate_topology([] {
    TopologyGenSpec spec;
    spec.kind = TopologyGenSpec::Kind::ring;
    spec.n = 8;
    return spec;
  }());
  require(measure_avg_distance(ring, 1, 100, 0) == 2.0, "ring d(1) must be exactly 2.0");

  std::vector<std::pair<int, double>> samples;
  for (int n : {1, 2, 4, 8, 16}) samples.emplace_back(n, 3.0 * std::pow(64.0 / n, 0.7));
  HopLawFit fit = fit_power_law(samples, 64);
  require(std::fabs(fit.scale_hops - 3.0) < 1e-9, "A recovery error above 1e-9");
  require(std::fabs(fit.exponent - 0.7) < 1e-9, "alpha recovery error above 1e-9");
}

// ---- criterion 8: byte-identical csv across two cli runs ----

void criterion_determinism() {
  require(!g_cli_path.empty(), "cli path not provided");
  std::string config = g_params_dir + "/demo_small.json";
  for (const char* out : {"accept_det_a.csv", "accept_det_b.csv"}) {
    std::string command = "\"" + g_cli_path + "\" solve --config \"" + config + "\" --out " + out;
    int rc = std::system(command.c_str());
    require(rc == 0, "cli run failed with status " + std::to_string(rc));
  }
  require(read_file("accept_det_a.csv") == read_file("accept_det_b.csv"),
          "csv outputs differ between runs");
}

struct Criterion {
  int number;
  const char* name;
  std::function<void()> run;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];
  g_params_dir = argc > 2 ? argv[2] : "../params";

  const std::vector<Criterion> criteria = {
      {1, "fig2 trend: greedy traffic below baseline, monotone, under 60 s", criterion_fig2_trend},
      {2, "fig3 trend: monotone copies, oracle within one, exact 16x scaling", criterion_fig3_trend},
      {3, "oracle equivalence on 50 random small instances", criterion_oracle_equivalence},
      {4, "lp matches nearest assignment and the hand-derived split", criterion_lp},
      {5, "cost additivity and zero constraint violations", criterion_cost_accounting},
      {6, "closed-form spot value 16 with oracle agreement", criterion_spot_value},
      {7, "hop-law ring value and exact synthetic recovery", criterion_hop_law},
      {8, "byte-identical csv across two cli runs", criterion_determinism},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    try {
      criterion.run();
      std::cout << "[PASS] criterion " << criterion.number << ": " << criterion.name << "\n";
    } catch (const CheckFailure& f) {
      ++failures;
      std::cout << "[FAIL] criterion " << criterion.number << ": " << criterion.name << " — "
                << f.message << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "[FAIL] criterion " << criterion.number << ": " << criterion.name
                << " — unexpected error: " << e.what() << "\n";
    }
  }
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
