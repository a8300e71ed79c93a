#pragma once

#include <cstdint>
#include <vector>

#include "synclib/errors.hpp"
#include "synclib/rational.hpp"

namespace synclib {

// Leading coefficient of the piecewise-linear maximum: 15625/1597536.
inline const Rat kPhiLeadingCoefficient{15625, 1597536};

// A point (s_1, ..., s_k) with budget ρ: s >= 0 and Σ s_j <= ρ, where
// k = floor(n/2) and 0 < ρ < n/2.
struct FeasibleTuple {
  std::uint32_t n = 0;
  std::uint32_t rho = 0;
  std::uint32_t k = 0;
  std::vector<double> s;  // s[j-1] = s_j, size k

  FeasibleTuple() = default;
  FeasibleTuple(std::uint32_t n_states, std::uint32_t budget_rho);
  FeasibleTuple(std::uint32_t n_states, std::uint32_t budget_rho, std::vector<double> values);

  double budget_used() const;
  bool feasible(double tol = 1e-9) const;
  // True iff s_1 = ... = s_{ρ-1} = 0 and Σ_{j<=τ} j·s_j <= τ²/4 for all
  // τ in {ρ, ..., k}.
  bool normalized(double tol = 1e-9) const;
  // Σ_{j<=r} j·s_j
  double prefix_mass(std::uint32_t r) const;
};

// φ(s) = Σ_{r=ρ}^{k} min(r²/4, 1·s_1 + ... + r·s_r). Throws
// InfeasibleError on an infeasible tuple.
double phi(const FeasibleTuple& tuple);

// The two mass-shifting transformations that zero out coordinates below
// ρ and then repair the prefix conditions from the smallest failing
// index upward. Never decreases φ, never increases the budget.
FeasibleTuple normalize_tuple(FeasibleTuple tuple);

struct PhiOptimum {
  double value = 0.0;
  FeasibleTuple argmax;
  std::uint32_t beta = 0;   // smallest index with a nonzero coordinate
  std::uint32_t gamma = 0;  // largest index with a nonzero coordinate
};

// Exact maximization of φ over the feasible set, via the linear program
//   max Σ t_r  s.t.  t_r <= r²/4, t_r <= Σ_{j<=r} j·s_j, Σ s_j <= ρ, s >= 0
// (φ is a sum of minima of linear forms, hence concave piecewise-linear).
PhiOptimum lp_max_phi(std::uint32_t n, std::uint32_t rho);

// ψ(β,γ) = (-2β³ - 4γ³ + 3γ²n + 6γ² + 6γ + 2)/24
double psi(double beta, double gamma, double n);

// Leading cubic coefficient of ψ at (βn, γn): (-2β³ - 4γ³ + 3γ²)/24,
// evaluated exactly.
Rat psi_cubic_coefficient(const Rat& beta, const Rat& gamma);

struct PsiOptimum {
  double beta = 0.0;
  double gamma = 0.0;
  double value = 0.0;
};

// Maximizes ψ over the quadrilateral with vertices (0,0),
// (0, 0.5·ln n + 1.5), (0.2n - 0.2·ln n - 0.6, 0.5n), (0.5n, 0.5n):
// the region cut out by 0 <= β <= γ <= n/2 and β >= 0.4γ - 0.6 - 0.2·ln n.
// ψ is decreasing in β, so the maximum lies on an edge; each edge
// restriction is a cubic whose critical points solve a quadratic.
PsiOptimum maximize_psi(double n);

struct ConvergenceRow {
  std::uint32_t n = 0;
  std::uint32_t best_rho = 0;
  double lp_value = 0.0;
  double lp_ratio = 0.0;  // lp_value / n³
  double psi_value = 0.0;
  double psi_ratio = 0.0;
  double gap = 0.0;  // psi_value - lp_value
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  // 7/48 + 2 · (best LP ratio at the largest n), to compare with 0.1654.
  double coefficient = 0.0;
};

// Best-over-ρ LP optimum per n (geometric ρ grid of ~40 points, then a
// bracketed integer search between the best point's grid neighbors)
// against the analytic ψ maximum. Solves for distinct (n, ρ) run
// concurrently; results are deterministic.
ConvergenceReport convergence_report(const std::vector<std::uint32_t>& n_values,
                                     unsigned threads = 0);

}  // namespace synclib
