#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sdncc/errors.hpp"
#include "sdncc/hop_law.hpp"
#include "sdncc/scenario.hpp"

namespace {

struct CommonArgs {
  std::string config;
  std::string out;
  std::optional<uint64_t> seed;
  std::optional<std::string> method;
  std::optional<long> budget;
  bool verbose = false;
  bool timings = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_solver_flags) {
  cmd->add_option("--config", args.config, "scenario json file")->required();
  cmd->add_option("--out", args.out, "output csv path");
  cmd->add_option("--seed", args.seed, "override the scenario seed");
  if (with_solver_flags) {
    cmd->add_option("--method", args.method, "exhaustive | greedy | baseline");
    cmd->add_option("--budget", args.budget, "max candidate placements to enumerate");
    cmd->add_flag("--timings", args.timings, "write measured runtimes into the csv");
  }
  cmd->add_flag("--verbose", args.verbose, "progress and diagnostics on stderr");
}

sdncc::Scenario load_with_overrides(const CommonArgs& args) {
  sdncc::Scenario scenario = sdncc::load_scenario(args.config);
  if (args.seed) {
    scenario.seed = *args.seed;
    if (scenario.topo_gen) scenario.topo_gen->seed = *args.seed;
  }
  if (args.method) scenario.solver.method = *args.method;
  if (args.budget) scenario.solver.budget = *args.budget;
  return scenario;
}

std::string default_out(const CommonArgs& args, const std::string& suffix) {
  return args.out.empty() ? args.config + "." + suffix + ".csv" : args.out;
}

void log_rows(const CommonArgs& args, size_t rows, const std::string& path) {
  if (args.verbose) std::cerr << "wrote " << rows << " rows to " << path << "\n";
}

void log_solver_rows(const CommonArgs& args, const std::vector<sdncc::ResultRow>& rows) {
  if (!args.verbose) return;
  for (const sdncc::ResultRow& r : rows)
    std::cerr << r.method << " " << r.sweep_parameter << "=" << r.sweep_value
              << " servers=" << r.n_servers << " traffic/s=" << r.traffic_per_s
              << " total=" << r.total_cost << " q=" << r.q << " evaluated=" << r.evaluated
              << " infeasible=" << r.infeasible << " runtime_ms=" << r.runtime_ms << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"resource allocation for networks with in-network caching and computing"};
  app.require_subcommand(1);

  CommonArgs solve_args, alloc_args, fig2_args, fig3_args;
  CLI::App* solve_cmd = app.add_subcommand("solve", "run the scenario's configured method");
  add_common(solve_cmd, solve_args, true);
  CLI::App* alloc_cmd = app.add_subcommand("alloc", "closed-form and oracle copy counts");
  add_common(alloc_cmd, alloc_args, false);
  CLI::App* fig2_cmd = app.add_subcommand("fig2", "traffic vs server count, greedy and baseline");
  add_common(fig2_cmd, fig2_args, true);
  CLI::App* fig3_cmd = app.add_subcommand("fig3", "copy counts across a popularity sweep");
  add_common(fig3_cmd, fig3_args, false);

  std::string hoplaw_topology, hoplaw_out;
  int hoplaw_samples = 100;
  uint64_t hoplaw_seed = 0;
  CLI::App* hoplaw_cmd = app.add_subcommand("fit-hoplaw", "fit the distance power law");
  hoplaw_cmd->add_option("--topology", hoplaw_topology, "topology json file")->required();
  hoplaw_cmd->add_option("--out", hoplaw_out, "output csv path");
  hoplaw_cmd->add_option("--samples", hoplaw_samples, "subsets per point");
  hoplaw_cmd->add_option("--seed", hoplaw_seed, "sampling seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) {
      sdncc::Scenario scenario = load_with_overrides(solve_args);
      std::vector<sdncc::ResultRow> rows = sdncc::run_scenario(scenario);
      std::string path = default_out(solve_args, "results");
      sdncc::write_result_csv(path, scenario, rows, solve_args.timings);
      log_solver_rows(solve_args, rows);
      log_rows(solve_args, rows.size(), path);
    } else if (alloc_cmd->parsed()) {
      sdncc::Scenario scenario = load_with_overrides(alloc_args);
      std::vector<sdncc::AllocRow> rows = sdncc::allocation_table(scenario);
      for (const sdncc::AllocRow& r : rows)
        if (r.degenerate)
          std::cerr << "warning: zero storage price for " << r.service
                    << "; copy count pinned at N\n";
      std::string path = default_out(alloc_args, "alloc");
      sdncc::write_alloc_csv(path, scenario, rows);
      log_rows(alloc_args, rows.size(), path);
    } else if (fig2_cmd->parsed()) {
      sdncc::Scenario scenario = load_with_overrides(fig2_args);
      std::vector<sdncc::ResultRow> rows = sdncc::experiment_fig2(scenario);
      std::string path = default_out(fig2_args, "fig2");
      sdncc::write_result_csv(path, scenario, rows, fig2_args.timings);
      log_solver_rows(fig2_args, rows);
      log_rows(fig2_args, rows.size(), path);
    } else if (fig3_cmd->parsed()) {
      sdncc::Scenario scenario = load_with_overrides(fig3_args);
      std::vector<sdncc::PopularitySweepRow> rows = sdncc::experiment_fig3(scenario);
      std::string path = default_out(fig3_args, "fig3");
      sdncc::write_popularity_csv(path, scenario, rows);
      log_rows(fig3_args, rows.size(), path);
    } else if (hoplaw_cmd->parsed()) {
      sdncc::Topology topo = sdncc::load_topology(hoplaw_topology);
      sdncc::HopLawOptions options;
      options.num_samples = hoplaw_samples;
      options.seed = hoplaw_seed;
      sdncc::HopLawFit fit = sdncc::fit_hop_law(topo, options);
      std::string path = hoplaw_out.empty() ? hoplaw_topology + ".hoplaw.csv" : hoplaw_out;
      sdncc::write_hoplaw_csv(path, fit);
      std::cout << "A=" << fit.scale_hops << " alpha=" << fit.exponent
                << " residual=" << fit.residual << "\n";
    }
  } catch (const sdncc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const sdncc::Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const sdncc::AllInfeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
