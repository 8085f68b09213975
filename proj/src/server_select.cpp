#include "sdncc/server_select.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "sdncc/errors.hpp"
#include "sdncc/simplex.hpp"

namespace sdncc {

Instance make_instance(Topology topo, ServiceCatalog catalog, DemandMatrix demand,
                       const EnergyParams& params) {
  params.validate();
  catalog.validate();
  Instance inst;
  inst.topo = std::move(topo);
  inst.catalog = std::move(catalog);
  inst.demand = std::move(demand);
  inst.params = params;
  inst.dist = all_pairs_hops(inst.topo, params);
  inst.routing = build_routing(inst.topo, inst.dist);
  return inst;
}

double SelectionProblem::weight(NodeId server, NodeId user) const {
  const DistanceTable& dist = instance->dist;
  return dist.per_bit_energy[static_cast<size_t>(server)][static_cast<size_t>(user)] +
         instance->params.gamma * dist.latency[static_cast<size_t>(server)][static_cast<size_t>(user)];
}

namespace {

std::vector<NodeId> eligible_servers(const SelectionProblem& problem, int k, NodeId user) {
  std::vector<NodeId> out;
  for (NodeId i : problem.placement->hosts_of(k))
    if (problem.instance->dist.reachable(i, user)) out.push_back(i);
  return out;
}

SelectionSolution solve_uncapacitated(const SelectionProblem& problem) {
  const Instance& inst = *problem.instance;
  SelectionSolution result;
  result.selection = Selection::empty(inst.catalog.service_count(), inst.demand.users);
  result.objective = 0.0;
  for (int k = 0; k < inst.catalog.service_count(); ++k) {
    for (size_t u = 0; u < inst.demand.users.size(); ++u) {
      double m = inst.demand.m[static_cast<size_t>(k)][u];
      if (m == 0.0) continue;
      NodeId user = inst.demand.users[u];
      NodeId best = -1;
      double best_w = std::numeric_limits<double>::infinity();
      for (NodeId i : eligible_servers(problem, k, user)) {
        double w = problem.weight(i, user);
        if (w < best_w) {  // scan ascending ids; ties keep the lowest id
          best_w = w;
          best = i;
        }
      }
      if (best < 0) throw DisconnectedGraph("no reachable server for a demanded service");
      result.selection.rho[static_cast<size_t>(k)][u].emplace_back(best, 1.0);
      result.objective += best_w * m;
    }
  }
  result.link_load =
      link_loads(inst.topo, inst.routing, result.selection.flows(inst.demand)).load;
  result.status = SelectStatus::optimal;
  return result;
}

bool within_capacities(const Instance& inst, const std::vector<double>& load) {
  for (const LinkRecord& e : inst.topo.links())
    if (load[static_cast<size_t>(e.id)] > e.capacity_bits) return false;
  return true;
}

struct LpVar {
  int service;
  int user_index;
  NodeId server;
  double demand;
  double weight;
};

SelectionSolution solve_capacitated_lp(const SelectionProblem& problem) {
  const Instance& inst = *problem.instance;

  std::vector<LpVar> vars;
  std::vector<std::pair<int, size_t>> pairs;  // (service, user index) with demand
  double demand_scale = 0.0;
  for (int k = 0; k < inst.catalog.service_count(); ++k) {
    for (size_t u = 0; u < inst.demand.users.size(); ++u) {
      double m = inst.demand.m[static_cast<size_t>(k)][u];
      if (m == 0.0) continue;
      pairs.emplace_back(k, u);
      for (NodeId i : eligible_servers(problem, k, inst.demand.users[u]))
        vars.push_back({k, static_cast<int>(u), i, m, problem.weight(i, inst.demand.users[u])});
      demand_scale = std::max(demand_scale, m);
    }
  }

  LinearProgram lp;
  lp.n_vars = static_cast<int>(vars.size());
  if (lp.n_vars == 0) {
    SelectionSolution empty;
    empty.status = SelectStatus::optimal;
    empty.selection = Selection::empty(inst.catalog.service_count(), inst.demand.users);
    empty.link_load.assign(inst.topo.links().size(), 0.0);
    return empty;
  }

  // Coverage: sum of fractions per (service, user) equals one.
  for (size_t p = 0; p < pairs.size(); ++p) {
    std::vector<double> row(vars.size(), 0.0);
    for (size_t v = 0; v < vars.size(); ++v)
      if (vars[v].service == pairs[p].first &&
          vars[v].user_index == static_cast<int>(pairs[p].second))
        row[v] = 1.0;
    lp.eq_rows.push_back(std::move(row));
    lp.eq_rhs.push_back(1.0);
  }

  // Link capacities, demand-scaled for conditioning. Only links on some
  // eligible path need a row.
  std::vector<std::vector<double>> link_row(inst.topo.links().size());
  for (size_t v = 0; v < vars.size(); ++v) {
    for (int l : inst.routing.path(vars[v].server, inst.demand.users[static_cast<size_t>(vars[v].user_index)])) {
      if (link_row[static_cast<size_t>(l)].empty())
        link_row[static_cast<size_t>(l)].assign(vars.size(), 0.0);
      link_row[static_cast<size_t>(l)][v] = vars[v].demand / demand_scale;
    }
  }
  for (const LinkRecord& e : inst.topo.links()) {
    if (link_row[static_cast<size_t>(e.id)].empty()) continue;
    lp.ub_rows.push_back(std::move(link_row[static_cast<size_t>(e.id)]));
    lp.ub_rhs.push_back(e.capacity_bits / demand_scale);
  }

  lp.minimize.resize(vars.size());
  for (size_t v = 0; v < vars.size(); ++v)
    lp.minimize[v] = vars[v].weight * vars[v].demand / demand_scale;

  LpSolution lp_solution = solve_lp(lp);

  SelectionSolution result;
  result.selection = Selection::empty(inst.catalog.service_count(), inst.demand.users);
  if (lp_solution.status != LpStatus::optimal) {
    result.status = SelectStatus::infeasible;
    return result;
  }

  for (size_t v = 0; v < vars.size(); ++v) {
    double frac = lp_solution.x[v];
    if (frac <= 1e-12) continue;
    result.selection.rho[static_cast<size_t>(vars[v].service)][static_cast<size_t>(vars[v].user_index)]
        .emplace_back(vars[v].server, std::min(frac, 1.0));
  }
  // Snap each coverage row to an exact sum of one; the simplex result is
  // within rounding error of it already.
  for (const auto& [k, u] : pairs) {
    auto& row = result.selection.rho[static_cast<size_t>(k)][u];
    double sum = 0.0;
    for (const auto& [server, frac] : row) sum += frac;
    if (sum <= 0.0) {
      result.status = SelectStatus::infeasible;
      return result;
    }
    for (auto& [server, frac] : row) frac /= sum;
    std::sort(row.begin(), row.end());
  }

  result.objective = 0.0;
  for (size_t k = 0; k < result.selection.rho.size(); ++k)
    for (size_t u = 0; u < inst.demand.users.size(); ++u)
      for (const auto& [server, frac] : result.selection.rho[k][u])
        result.objective += problem.weight(server, inst.demand.users[u]) *
                            inst.demand.m[k][u] * frac;
  result.link_load =
      link_loads(inst.topo, inst.routing, result.selection.flows(inst.demand)).load;
  result.status = SelectStatus::optimal;
  return result;
}

}  // namespace

SelectionSolution solve_selection(const SelectionProblem& problem, const SolveOptions& options) {
  if (problem.instance == nullptr || problem.placement == nullptr)
    throw std::invalid_argument("selection problem is missing its instance or placement");

  if (options.mode == SelectMode::uncapacitated) return solve_uncapacitated(problem);

  if (options.nearest_shortcut) {
    SelectionSolution nearest = solve_uncapacitated(problem);
    if (within_capacities(*problem.instance, nearest.link_load)) return nearest;
  }
  return solve_capacitated_lp(problem);
}

VerifyReport verify_solution(const SelectionProblem& problem, const SelectionSolution& solution) {
  const Instance& inst = *problem.instance;
  VerifyReport report;

  for (int k = 0; k < inst.catalog.service_count(); ++k) {
    for (size_t u = 0; u < inst.demand.users.size(); ++u) {
      double m = inst.demand.m[static_cast<size_t>(k)][u];
      double sum = 0.0;
      for (const auto& [server, frac] : solution.selection.rho[static_cast<size_t>(k)][u]) {
        sum += frac;
        report.max_box_violation =
            std::max({report.max_box_violation, -frac, frac - 1.0});
        report.recomputed_objective +=
            problem.weight(server, inst.demand.users[u]) * m * frac;
      }
      if (m > 0.0)
        report.max_coverage_violation = std::max(report.max_coverage_violation, std::fabs(sum - 1.0));
    }
  }

  LinkLoadReport loads =
      link_loads(inst.topo, inst.routing, solution.selection.flows(inst.demand));
  for (const LinkRecord& e : inst.topo.links()) {
    double over = (loads.load[static_cast<size_t>(e.id)] - e.capacity_bits) / e.capacity_bits;
    report.max_capacity_violation_rel = std::max(report.max_capacity_violation_rel, over);
  }
  report.max_capacity_violation_rel = std::max(report.max_capacity_violation_rel, 0.0);
  report.objective_gap = std::fabs(report.recomputed_objective - solution.objective);
  return report;
}

std::string VerifyReport::summary() const {
  std::ostringstream out;
  out << "coverage=" << max_coverage_violation << " capacity_rel=" << max_capacity_violation_rel
      << " box=" << max_box_violation << " objective_gap=" << objective_gap;
  return out.str();
}

}  // namespace sdncc
