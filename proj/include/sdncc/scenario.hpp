#ifndef SDNCC_SCENARIO_HPP
#define SDNCC_SCENARIO_HPP

#include <optional>
#include <string>
#include <vector>

#include "sdncc/catalog.hpp"
#include "sdncc/instance.hpp"
#include "sdncc/placement_search.hpp"

namespace sdncc {

struct CatalogGenSpec {
  int contents = 0;
  int computations = 0;
  double total_requests = 0.0;
  double zipf_exponent = 0.0;
  SizeSpec sizes;
};

struct DemandSpec {
  std::vector<NodeId> users;     // empty: every node with the user role
  std::vector<double> weights;   // empty: uniform
  std::optional<double> per_service_gbps;  // rescales sizes so each service
                                           // demands this rate
};

struct SolverSpec {
  std::string method = "greedy";  // exhaustive | greedy | baseline
  SelectMode mode = SelectMode::lp;
  BigInt budget = 1000000;
};

struct SweepSpec {
  std::string parameter;  // server_count | gamma | popularity; empty: none
  std::vector<double> values;
};

// Parsed scenario file. Strict schema: unknown keys are rejected.
struct Scenario {
  std::string id;
  uint64_t seed = 0;
  std::optional<TopologyGenSpec> topo_gen;
  std::string topo_file;  // used when topo_gen is absent
  std::optional<CatalogGenSpec> catalog_gen;
  std::optional<ServiceCatalog> catalog_inline;
  DemandSpec demand;
  EnergyParams energy;
  SolverSpec solver;
  SweepSpec sweep;
};

Scenario load_scenario(const std::string& path);

struct BuildOverrides {
  std::optional<int> server_count;  // caching and computing node count
  std::optional<double> gamma;
};

Topology build_topology(const Scenario& scenario, const BuildOverrides& overrides = {});
ServiceCatalog build_catalog(const Scenario& scenario);
Instance build_instance(const Scenario& scenario, const BuildOverrides& overrides = {});

// Power-law fit used by the solve pipeline: any node may hypothetically
// host, so candidates are all N nodes regardless of the role assignment.
HopLawFit fit_instance_hop_law(const Topology& topo, uint64_t seed);

struct ResultRow {
  std::string scenario_id;
  std::string sweep_parameter = "none";
  double sweep_value = 0.0;
  std::string method;
  int n_servers = 0;
  double traffic_per_s = 0.0;  // latency-weighted bits per second
  double caching_j = 0.0;
  double computing_j = 0.0;
  double transmission_j = 0.0;
  double total_cost = 0.0;
  long runtime_ms = 0;
  std::string q = "1";
  long evaluated = 0;
  long infeasible = 0;
};

// Runs the configured method over every sweep value and appends baseline
// rows for comparison. Solutions are verified before a row is emitted.
std::vector<ResultRow> run_scenario(const Scenario& scenario);

// Rows for the server-count traffic comparison: greedy placement against
// the origin-only baseline over the scenario's server_count sweep.
std::vector<ResultRow> experiment_fig2(Scenario scenario);

struct PopularitySweepRow {
  double lambda = 0.0;
  double content_raw = 0.0;
  double content_star = 0.0;
  int content_oracle = 0;
  double vm_raw = 0.0;
  double vm_star = 0.0;
  int vm_oracle = 0;
};

// Closed-form and oracle copy counts for a representative content and
// computation as popularity sweeps over the scenario's value list.
std::vector<PopularitySweepRow> experiment_fig3(const Scenario& scenario);

struct AllocRow {
  std::string service;
  std::string kind;  // content | computation
  double lambda = 0.0;
  double raw = 0.0;
  double clamped = 0.0;
  int rounded = 0;
  int oracle = 0;
  bool degenerate = false;
};

std::vector<AllocRow> allocation_table(const Scenario& scenario);

// CSV emission. Headers carry the parameter block as '#' comments. Output
// is byte-stable for a fixed scenario and seed; runtime_ms is written as 0
// unless include_timings is set.
void write_result_csv(const std::string& path, const Scenario& scenario,
                      const std::vector<ResultRow>& rows, bool include_timings = false);
void write_popularity_csv(const std::string& path, const Scenario& scenario,
                          const std::vector<PopularitySweepRow>& rows);
void write_alloc_csv(const std::string& path, const Scenario& scenario,
                     const std::vector<AllocRow>& rows);
void write_hoplaw_csv(const std::string& path, const HopLawFit& fit);

}  // namespace sdncc

#endif
