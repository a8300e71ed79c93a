#pragma once

#include <cstddef>
#include <vector>

namespace synclib {

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  double value = 0.0;
  std::vector<double> x;
};

// Small dense tableau simplex:
//   maximize c·x  subject to  A x <= b, x >= 0.
// Two-phase with (coefficient, index) tie-breaking on pivot selection.
// A is row-major with rows.size() == b.size() rows of c.size() columns.
class DenseSimplex {
 public:
  DenseSimplex(std::size_t num_rows, std::size_t num_cols);

  void set_entry(std::size_t row, std::size_t col, double value);
  void set_bound(std::size_t row, double value);
  void set_objective(std::size_t col, double value);

  LpResult solve();

 private:
  double& at(std::size_t row, std::size_t col) { return tab_[row * stride_ + col]; }

  void pivot(std::size_t row, std::size_t col);
  bool optimize(int phase);

  std::size_t m_, n_, stride_;
  std::vector<double> tab_;           // (m+2) x (n+2)
  std::vector<int> nonbasic_;         // size n+1; nonbasic_[n] = -1 marks the artificial
  std::vector<int> basic_;            // size m
};

}  // namespace synclib
