#include "sdncc/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace sdncc {

namespace {
constexpr double kEps = 1e-9;
}

DenseSimplex::DenseSimplex(std::vector<std::vector<double>> a, std::vector<double> b,
                           std::vector<double> c)
    : rows_(static_cast<int>(b.size())),
      cols_(static_cast<int>(c.size())),
      nonbasic_(static_cast<size_t>(cols_) + 1),
      basic_(static_cast<size_t>(rows_)),
      tableau_(static_cast<size_t>(rows_) + 2,
               std::vector<double>(static_cast<size_t>(cols_) + 2, 0.0)) {
  for (int i = 0; i < rows_; ++i) {
    if (static_cast<int>(a[static_cast<size_t>(i)].size()) != cols_)
      throw std::invalid_argument("simplex: ragged constraint matrix");
    for (int j = 0; j < cols_; ++j)
      tableau_[static_cast<size_t>(i)][static_cast<size_t>(j)] = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
    basic_[static_cast<size_t>(i)] = cols_ + i;
    tableau_[static_cast<size_t>(i)][static_cast<size_t>(cols_)] = -1.0;  // artificial column
    tableau_[static_cast<size_t>(i)][static_cast<size_t>(cols_) + 1] = b[static_cast<size_t>(i)];
  }
  for (int j = 0; j < cols_; ++j) {
    nonbasic_[static_cast<size_t>(j)] = j;
    tableau_[static_cast<size_t>(rows_)][static_cast<size_t>(j)] = -c[static_cast<size_t>(j)];
  }
  nonbasic_[static_cast<size_t>(cols_)] = -1;
  tableau_[static_cast<size_t>(rows_) + 1][static_cast<size_t>(cols_)] = 1.0;
}

void DenseSimplex::pivot(int row, int col) {
  double* pr = tableau_[static_cast<size_t>(row)].data();
  const double inv = 1.0 / pr[col];
  for (int i = 0; i < rows_ + 2; ++i) {
    if (i == row || std::fabs(tableau_[static_cast<size_t>(i)][static_cast<size_t>(col)]) <= kEps)
      continue;
    double* ri = tableau_[static_cast<size_t>(i)].data();
    const double factor = ri[col] * inv;
    for (int j = 0; j < cols_ + 2; ++j) ri[j] -= pr[j] * factor;
    ri[col] = pr[col] * factor;
  }
  for (int j = 0; j < cols_ + 2; ++j)
    if (j != col) pr[j] *= inv;
  for (int i = 0; i < rows_ + 2; ++i)
    if (i != row) tableau_[static_cast<size_t>(i)][static_cast<size_t>(col)] *= -inv;
  pr[col] = inv;
  std::swap(basic_[static_cast<size_t>(row)], nonbasic_[static_cast<size_t>(col)]);
}

bool DenseSimplex::run_phase(int phase) {
  const int objective_row = rows_ + phase - 1;
  const long max_pivots = 2000L + 200L * (static_cast<long>(rows_) + cols_) *
                                      (static_cast<long>(rows_) + cols_);
  for (long iter = 0; iter < max_pivots; ++iter) {
    int col = -1;
    for (int j = 0; j < cols_ + 1; ++j) {
      // The artificial variable (id -1) may not re-enter during phase 1.
      if (nonbasic_[static_cast<size_t>(j)] == -phase) continue;
      if (col == -1 ||
          std::pair(tableau_[static_cast<size_t>(objective_row)][static_cast<size_t>(j)],
                    nonbasic_[static_cast<size_t>(j)]) <
              std::pair(tableau_[static_cast<size_t>(objective_row)][static_cast<size_t>(col)],
                        nonbasic_[static_cast<size_t>(col)]))
        col = j;
    }
    if (col == -1 ||
        tableau_[static_cast<size_t>(objective_row)][static_cast<size_t>(col)] >= -kEps)
      return true;
    int row = -1;
    for (int i = 0; i < rows_; ++i) {
      const double coef = tableau_[static_cast<size_t>(i)][static_cast<size_t>(col)];
      if (coef <= kEps) continue;
      const double ratio = tableau_[static_cast<size_t>(i)][static_cast<size_t>(cols_) + 1] / coef;
      if (row == -1 ||
          std::pair(ratio, basic_[static_cast<size_t>(i)]) <
              std::pair(tableau_[static_cast<size_t>(row)][static_cast<size_t>(cols_) + 1] /
                            tableau_[static_cast<size_t>(row)][static_cast<size_t>(col)],
                        basic_[static_cast<size_t>(row)]))
        row = i;
    }
    if (row == -1) return false;  // unbounded in this direction
    pivot(row, col);
  }
  throw std::runtime_error("simplex: pivot limit exceeded");
}

LpSolution DenseSimplex::solve() {
  LpSolution solution;

  int worst = 0;
  for (int i = 1; i < rows_; ++i)
    if (tableau_[static_cast<size_t>(i)][static_cast<size_t>(cols_) + 1] <
        tableau_[static_cast<size_t>(worst)][static_cast<size_t>(cols_) + 1])
      worst = i;
  if (rows_ > 0 &&
      tableau_[static_cast<size_t>(worst)][static_cast<size_t>(cols_) + 1] < -kEps) {
    pivot(worst, cols_);
    if (!run_phase(2) ||
        tableau_[static_cast<size_t>(rows_) + 1][static_cast<size_t>(cols_) + 1] < -kEps) {
      solution.status = LpStatus::infeasible;
      return solution;
    }
    for (int i = 0; i < rows_; ++i) {
      if (basic_[static_cast<size_t>(i)] != -1) continue;
      // Drive the artificial variable out of the basis.
      int col = 0;
      for (int j = 1; j < cols_ + 1; ++j)
        if (std::pair(tableau_[static_cast<size_t>(i)][static_cast<size_t>(j)],
                      nonbasic_[static_cast<size_t>(j)]) <
            std::pair(tableau_[static_cast<size_t>(i)][static_cast<size_t>(col)],
                      nonbasic_[static_cast<size_t>(col)]))
          col = j;
      pivot(i, col);
    }
  }

  const bool bounded = run_phase(1);
  solution.x.assign(static_cast<size_t>(cols_), 0.0);
  for (int i = 0; i < rows_; ++i)
    if (basic_[static_cast<size_t>(i)] < cols_)
      solution.x[static_cast<size_t>(basic_[static_cast<size_t>(i)])] =
          tableau_[static_cast<size_t>(i)][static_cast<size_t>(cols_) + 1];
  solution.objective = tableau_[static_cast<size_t>(rows_)][static_cast<size_t>(cols_) + 1];
  solution.status = bounded ? LpStatus::optimal : LpStatus::unbounded;
  return solution;
}

LpSolution solve_lp(const LinearProgram& lp) {
  // Equalities become paired inequalities; minimization flips the objective.
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  a.reserve(lp.ub_rows.size() + 2 * lp.eq_rows.size());
  for (size_t i = 0; i < lp.eq_rows.size(); ++i) {
    a.push_back(lp.eq_rows[i]);
    b.push_back(lp.eq_rhs[i]);
    std::vector<double> neg = lp.eq_rows[i];
    for (double& v : neg) v = -v;
    a.push_back(std::move(neg));
    b.push_back(-lp.eq_rhs[i]);
  }
  for (size_t i = 0; i < lp.ub_rows.size(); ++i) {
    a.push_back(lp.ub_rows[i]);
    b.push_back(lp.ub_rhs[i]);
  }
  std::vector<double> c = lp.minimize;
  for (double& v : c) v = -v;

  LpSolution solution = DenseSimplex(std::move(a), std::move(b), std::move(c)).solve();
  solution.objective = -solution.objective;
  return solution;
}

}  // namespace sdncc
