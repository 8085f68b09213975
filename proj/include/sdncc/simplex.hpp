#ifndef SDNCC_SIMPLEX_HPP
#define SDNCC_SIMPLEX_HPP

#include <vector>

namespace sdncc {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  double objective = 0.0;
  std::vector<double> x;
};

// Dense two-phase simplex for  max c.x  s.t.  A x <= b, x >= 0.
// Standard tableau method with lexicographic (value, index) tie-breaking on
// entering and leaving variables, which also guards against cycling.
// Suited to the small instances this project solves; O(rows * cols) per
// pivot on a dense tableau.
class DenseSimplex {
 public:
  DenseSimplex(std::vector<std::vector<double>> a, std::vector<double> b, std::vector<double> c);

  LpSolution solve();

 private:
  void pivot(int row, int col);
  bool run_phase(int phase);

  int rows_;
  int cols_;
  std::vector<int> nonbasic_;
  std::vector<int> basic_;
  std::vector<std::vector<double>> tableau_;
};

// Convenience wrapper for  min c.x  s.t.  A_eq x = b_eq, A_ub x <= b_ub, x >= 0.
struct LinearProgram {
  int n_vars = 0;
  std::vector<std::vector<double>> eq_rows;
  std::vector<double> eq_rhs;
  std::vector<std::vector<double>> ub_rows;
  std::vector<double> ub_rhs;
  std::vector<double> minimize;
};

LpSolution solve_lp(const LinearProgram& lp);

}  // namespace sdncc

#endif
