#include "synclib/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "synclib/simplex.hpp"

namespace synclib {

FeasibleTuple::FeasibleTuple(std::uint32_t n_states, std::uint32_t budget_rho)
    : FeasibleTuple(n_states, budget_rho, std::vector<double>(n_states / 2, 0.0)) {}

FeasibleTuple::FeasibleTuple(std::uint32_t n_states, std::uint32_t budget_rho,
                             std::vector<double> values)
    : n(n_states), rho(budget_rho), k(n_states / 2), s(std::move(values)) {
  if (rho == 0 || 2ULL * rho >= n) {
    throw InfeasibleError("feasible tuple needs 0 < rho < n/2");
  }
  if (s.size() != k) {
    throw InfeasibleError("feasible tuple needs exactly k = n/2 coordinates");
  }
}

double FeasibleTuple::budget_used() const {
  double total = 0.0;
  for (double v : s) total += v;
  return total;
}

bool FeasibleTuple::feasible(double tol) const {
  for (double v : s) {
    if (v < -tol) return false;
  }
  return budget_used() <= rho + tol * std::max(1.0, static_cast<double>(rho));
}

double FeasibleTuple::prefix_mass(std::uint32_t r) const {
  double mass = 0.0;
  for (std::uint32_t j = 1; j <= r && j <= k; ++j) {
    mass += static_cast<double>(j) * s[j - 1];
  }
  return mass;
}

bool FeasibleTuple::normalized(double tol) const {
  for (std::uint32_t j = 1; j < rho; ++j) {
    if (std::fabs(s[j - 1]) > tol) return false;
  }
  double mass = prefix_mass(rho - 1);
  for (std::uint32_t tau = rho; tau <= k; ++tau) {
    mass += static_cast<double>(tau) * s[tau - 1];
    const double cap = static_cast<double>(tau) * tau / 4.0;
    if (mass > cap + tol * std::max(1.0, cap)) return false;
  }
  return true;
}

double phi(const FeasibleTuple& tuple) {
  if (!tuple.feasible()) {
    throw InfeasibleError("phi evaluated on an infeasible tuple");
  }
  double mass = tuple.prefix_mass(tuple.rho - 1);
  double total = 0.0;
  for (std::uint32_t r = tuple.rho; r <= tuple.k; ++r) {
    mass += static_cast<double>(r) * tuple.s[r - 1];
    total += std::min(static_cast<double>(r) * r / 4.0, mass);
  }
  return total;
}

FeasibleTuple normalize_tuple(FeasibleTuple tuple) {
  if (!tuple.feasible()) {
    throw InfeasibleError("normalize_tuple needs a feasible tuple");
  }
  const std::uint32_t k = tuple.k;
  const std::uint32_t rho = tuple.rho;

  // First transformation: move all mass below ρ onto coordinate ρ,
  // preserving every prefix mass at indices >= ρ.
  double head = 0.0;
  for (std::uint32_t j = 1; j <= rho; ++j) {
    head += static_cast<double>(j) * tuple.s[j - 1];
    tuple.s[j - 1] = 0.0;
  }
  tuple.s[rho - 1] = head / rho;

  // Second transformation: find the smallest τ whose prefix mass exceeds
  // τ²/4 and shift the excess one coordinate up. The failing index
  // strictly increases, so at most k - ρ + 1 rounds are needed.
  for (std::uint32_t round = 0; round <= k - rho + 1; ++round) {
    double mass = 0.0;
    std::uint32_t bad = 0;
    double bad_mass = 0.0;
    for (std::uint32_t tau = rho; tau <= k; ++tau) {
      mass += static_cast<double>(tau) * tuple.s[tau - 1];
      const double cap = static_cast<double>(tau) * tau / 4.0;
      if (mass > cap * (1.0 + 1e-13) + 1e-13) {
        bad = tau;
        bad_mass = mass;
        break;
      }
    }
    if (bad == 0) break;
    const double shift = bad_mass / bad - static_cast<double>(bad) / 4.0;
    tuple.s[bad - 1] = std::max(0.0, tuple.s[bad - 1] - shift);
    if (bad != k) {
      tuple.s[bad] += shift;
    }
  }
  return tuple;
}

PhiOptimum lp_max_phi(std::uint32_t n, std::uint32_t rho) {
  if (rho == 0 || 2ULL * rho >= n) {
    throw InfeasibleError("lp_max_phi needs 0 < rho < n/2");
  }
  const std::uint32_t k = n / 2;
  const std::uint32_t u = k - rho + 1;  // indices ρ..k

  // Variables: x[0..u) = s_ρ..s_k, x[u..2u) = t_ρ..t_k. Coordinates
  // below ρ are omitted: their mass can always be moved onto s_ρ without
  // changing any prefix sum at or above ρ, so the optimum is unchanged.
  DenseSimplex lp(2 * u + 1, 2 * u);
  for (std::uint32_t i = 0; i < u; ++i) {
    const std::uint32_t r = rho + i;
    // t_r - Σ_{j=ρ}^{r} j s_j <= 0
    lp.set_entry(i, u + i, 1.0);
    for (std::uint32_t jj = 0; jj <= i; ++jj) {
      lp.set_entry(i, jj, -static_cast<double>(rho + jj));
    }
    lp.set_bound(i, 0.0);
    // t_r <= r²/4
    lp.set_entry(u + i, u + i, 1.0);
    lp.set_bound(u + i, static_cast<double>(r) * r / 4.0);
    lp.set_objective(u + i, 1.0);
  }
  for (std::uint32_t i = 0; i < u; ++i) {
    lp.set_entry(2 * u, i, 1.0);
  }
  lp.set_bound(2 * u, static_cast<double>(rho));

  LpResult sol = lp.solve();
  if (sol.status != LpStatus::Optimal) {
    throw InfeasibleError("lp_max_phi: solver did not reach an optimum");
  }

  PhiOptimum opt;
  opt.value = sol.value;
  std::vector<double> full(k, 0.0);
  for (std::uint32_t i = 0; i < u; ++i) {
    full[rho + i - 1] = std::max(0.0, sol.x[i]);
  }
  opt.argmax = FeasibleTuple(n, rho, std::move(full));

  const double support_eps = 1e-9 * std::max(1.0, static_cast<double>(rho));
  for (std::uint32_t j = 1; j <= k; ++j) {
    if (opt.argmax.s[j - 1] > support_eps) {
      if (opt.beta == 0) opt.beta = j;
      opt.gamma = j;
    }
  }
  return opt;
}

double psi(double beta, double gamma, double n) {
  return (-2.0 * beta * beta * beta - 4.0 * gamma * gamma * gamma +
          3.0 * gamma * gamma * n + 6.0 * gamma * gamma + 6.0 * gamma + 2.0) /
         24.0;
}

Rat psi_cubic_coefficient(const Rat& beta, const Rat& gamma) {
  return (Rat(-2) * beta * beta * beta + Rat(-4) * gamma * gamma * gamma +
          Rat(3) * gamma * gamma) /
         Rat(24);
}

namespace {

// Real roots of a·x² + b·x + c inside [lo, hi].
void quadratic_roots_within(double a, double b, double c, double lo, double hi,
                            std::vector<double>& out) {
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return;
  const double sq = std::sqrt(disc);
  const double q = -0.5 * (b + (b >= 0 ? sq : -sq));
  double roots[2];
  int count = 0;
  if (a != 0.0) roots[count++] = q / a;
  if (q != 0.0) roots[count++] = c / q;
  for (int i = 0; i < count; ++i) {
    if (roots[i] >= lo && roots[i] <= hi) out.push_back(roots[i]);
  }
}

}  // namespace

PsiOptimum maximize_psi(double n) {
  if (n < 100.0) {
    throw PreconditionError("maximize_psi needs n >= 100");
  }
  const double d = 0.2 * std::log(n) + 0.6;       // β >= 0.4γ - d (constraint 5)
  const double g0 = 0.5 * std::log(n) + 1.5;      // γ where that edge meets β = 0
  const double half = 0.5 * n;
  const double b1 = 0.4 * half - d;

  std::vector<std::pair<double, double>> candidates = {
      {0.0, 0.0}, {0.0, g0}, {b1, half}, {half, half}};

  std::vector<double> roots;

  // β = 0, γ in [0, g0]
  roots.clear();
  quadratic_roots_within(-12.0, 6.0 * n + 12.0, 6.0, 0.0, g0, roots);
  for (double g : roots) candidates.emplace_back(0.0, g);

  // β = 0.4γ - d, γ in [g0, n/2]
  roots.clear();
  quadratic_roots_within(-12.384, 6.0 * n + 12.0 + 1.92 * d, 6.0 - 2.4 * d * d, g0, half,
                         roots);
  for (double g : roots) candidates.emplace_back(0.4 * g - d, g);

  // γ = n/2: ψ decreases in β, endpoints already listed.

  // β = γ in [0, n/2]
  roots.clear();
  quadratic_roots_within(-18.0, 6.0 * n + 12.0, 6.0, 0.0, half, roots);
  for (double g : roots) candidates.emplace_back(g, g);

  PsiOptimum best;
  best.value = -std::numeric_limits<double>::infinity();
  for (auto [b, g] : candidates) {
    const double v = psi(b, g, n);
    if (v > best.value) {
      best = {b, g, v};
    }
  }
  return best;
}

namespace {

struct LpTask {
  std::uint32_t n = 0;
  std::uint32_t rho = 0;
  double value = 0.0;
};

void run_lp_tasks(std::vector<LpTask>& tasks, unsigned threads) {
  if (threads == 0) {
    threads = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
  }
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        tasks[i].value = lp_max_phi(tasks[i].n, tasks[i].rho).value;
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) {
    pool.emplace_back(worker);
  }
  worker();
  for (std::thread& t : pool) {
    t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

std::vector<std::uint32_t> geometric_rho_grid(std::uint32_t rho_max, std::size_t points) {
  std::vector<std::uint32_t> grid;
  if (rho_max == 0) return grid;
  const double top = std::log(static_cast<double>(rho_max));
  for (std::size_t i = 0; i < points; ++i) {
    const double x = std::exp(top * static_cast<double>(i) / static_cast<double>(points - 1));
    auto rho = static_cast<std::uint32_t>(std::lround(x));
    rho = std::max<std::uint32_t>(1, std::min(rho, rho_max));
    if (grid.empty() || grid.back() != rho) grid.push_back(rho);
  }
  return grid;
}

// Integer ternary search between the grid neighbors of the best grid
// point. The grid spacing grows geometrically, so a fixed-width
// neighborhood can miss the peak; the bracketed search pins the exact
// integer optimum under the (empirically solid) unimodality of the
// value in ρ. Returns the best (rho, value) over all evaluated points.
std::pair<std::uint32_t, double> refine_rho(std::uint32_t n, std::uint32_t lo, std::uint32_t hi,
                                            std::uint32_t seed_rho, double seed_value) {
  std::uint32_t best_rho = seed_rho;
  double best_value = seed_value;
  auto eval = [&](std::uint32_t rho) {
    const double v = lp_max_phi(n, rho).value;
    if (v > best_value) {
      best_value = v;
      best_rho = rho;
    }
    return v;
  };
  while (hi - lo >= 3) {
    const std::uint32_t m1 = lo + (hi - lo) / 3;
    const std::uint32_t m2 = hi - (hi - lo) / 3;
    if (eval(m1) < eval(m2)) {
      lo = m1 + 1;
    } else {
      hi = m2 - 1;
    }
  }
  for (std::uint32_t rho = lo; rho <= hi; ++rho) {
    eval(rho);
  }
  return {best_rho, best_value};
}

}  // namespace

ConvergenceReport convergence_report(const std::vector<std::uint32_t>& n_values,
                                     unsigned threads) {
  ConvergenceReport report;
  std::vector<LpTask> tasks;
  std::vector<std::pair<std::size_t, std::size_t>> spans;  // task range per n

  for (std::uint32_t n : n_values) {
    if (n < 100) {
      throw PreconditionError("convergence_report needs each n >= 100");
    }
    const auto rho_max = static_cast<std::uint32_t>((n - 1) / 2);
    const std::size_t begin = tasks.size();
    for (std::uint32_t rho : geometric_rho_grid(rho_max, 40)) {
      tasks.push_back({n, rho, 0.0});
    }
    spans.emplace_back(begin, tasks.size());
  }
  run_lp_tasks(tasks, threads);

  for (std::size_t idx = 0; idx < n_values.size(); ++idx) {
    const std::uint32_t n = n_values[idx];
    const auto rho_max = static_cast<std::uint32_t>((n - 1) / 2);
    std::size_t best_i = spans[idx].first;
    for (std::size_t i = spans[idx].first; i < spans[idx].second; ++i) {
      if (tasks[i].value > tasks[best_i].value) best_i = i;
    }
    // bracket between the neighboring grid points and pin the peak
    std::uint32_t lo = 1, hi = rho_max;
    if (best_i > spans[idx].first) lo = tasks[best_i - 1].rho + 1;
    if (best_i + 1 < spans[idx].second) hi = tasks[best_i + 1].rho - 1;
    lo = std::min(lo, tasks[best_i].rho);
    hi = std::max(hi, tasks[best_i].rho);
    const auto [best_rho, best_value] =
        refine_rho(n, lo, hi, tasks[best_i].rho, tasks[best_i].value);

    const double n3 = static_cast<double>(n) * n * n;
    const PsiOptimum analytic = maximize_psi(static_cast<double>(n));
    ConvergenceRow row;
    row.n = n;
    row.best_rho = best_rho;
    row.lp_value = best_value;
    row.lp_ratio = best_value / n3;
    row.psi_value = analytic.value;
    row.psi_ratio = analytic.value / n3;
    row.gap = analytic.value - best_value;
    report.rows.push_back(row);
  }

  const ConvergenceRow* largest = nullptr;
  for (const ConvergenceRow& row : report.rows) {
    if (largest == nullptr || row.n > largest->n) largest = &row;
  }
  if (largest != nullptr) {
    report.coefficient = 7.0 / 48.0 + 2.0 * largest->lp_ratio;
  }
  return report;
}

}  // namespace synclib
