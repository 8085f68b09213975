#ifndef SDNCC_SERVER_SELECT_HPP
#define SDNCC_SERVER_SELECT_HPP

#include <string>
#include <vector>

#include "sdncc/cost_model.hpp"
#include "sdncc/instance.hpp"

namespace sdncc {

// Server selection for a fixed placement: minimize the placement-variable
// part of the cost, sum over flows of (per-bit transport energy +
// gamma * latency) * volume, subject to demand coverage and link capacities.
struct SelectionProblem {
  const Instance* instance = nullptr;
  const Placement* placement = nullptr;

  // a_{i,u} + gamma * D_{i,u}; +inf when u is unreachable from i.
  double weight(NodeId server, NodeId user) const;
};

enum class SelectMode { uncapacitated, lp };

struct SolveOptions {
  SelectMode mode = SelectMode::lp;
  // In lp mode the nearest-server assignment is returned directly whenever
  // it already satisfies every link capacity (it is then provably optimal).
  // Tests disable this to exercise the simplex path.
  bool nearest_shortcut = true;
};

enum class SelectStatus { optimal, infeasible };

struct SelectionSolution {
  SelectStatus status = SelectStatus::infeasible;
  Selection selection;
  double objective = 0.0;           // variable cost part only
  std::vector<double> link_load;    // bits per duration t, by link id
};

SelectionSolution solve_selection(const SelectionProblem& problem, const SolveOptions& options = {});

struct VerifyReport {
  double max_coverage_violation = 0.0;     // |sum_i rho - 1| over (k,u) pairs
  double max_capacity_violation_rel = 0.0; // (x_l - c_l)/c_l over links
  double max_box_violation = 0.0;          // rho outside [0,1]
  double recomputed_objective = 0.0;
  double objective_gap = 0.0;              // |reported - recomputed|

  bool clean(double coverage_tol = 1e-9, double capacity_tol = 1e-6) const {
    return max_coverage_violation <= coverage_tol &&
           max_capacity_violation_rel <= capacity_tol && max_box_violation <= coverage_tol;
  }
  std::string summary() const;
};

// Re-derives coverage, capacity, box residuals and the objective from the
// raw selection, without going through the solver's bookkeeping.
VerifyReport verify_solution(const SelectionProblem& problem, const SelectionSolution& solution);

}  // namespace sdncc

#endif
