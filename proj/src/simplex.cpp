#include "synclib/simplex.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace synclib {

namespace {
constexpr double kEps = 1e-9;
}

DenseSimplex::DenseSimplex(std::size_t num_rows, std::size_t num_cols)
    : m_(num_rows),
      n_(num_cols),
      stride_(num_cols + 2),
      tab_((num_rows + 2) * (num_cols + 2), 0.0),
      nonbasic_(num_cols + 1),
      basic_(num_rows) {
  for (std::size_t j = 0; j < n_; ++j) {
    nonbasic_[j] = static_cast<int>(j);
  }
  nonbasic_[n_] = -1;
  at(m_ + 1, n_) = 1.0;
  for (std::size_t i = 0; i < m_; ++i) {
    basic_[i] = static_cast<int>(n_ + i);
    at(i, n_) = -1.0;
  }
}

void DenseSimplex::set_entry(std::size_t row, std::size_t col, double value) {
  at(row, col) = value;
}

void DenseSimplex::set_bound(std::size_t row, double value) {
  at(row, n_ + 1) = value;
}

void DenseSimplex::set_objective(std::size_t col, double value) {
  at(m_, col) = -value;
}

void DenseSimplex::pivot(std::size_t row, std::size_t col) {
  double* pr = &tab_[row * stride_];
  const double inv = 1.0 / pr[col];
  for (std::size_t i = 0; i < m_ + 2; ++i) {
    if (i == row || std::fabs(at(i, col)) <= kEps) continue;
    double* pi = &tab_[i * stride_];
    const double factor = pi[col] * inv;
    for (std::size_t j = 0; j < stride_; ++j) {
      pi[j] -= pr[j] * factor;
    }
    pi[col] = pr[col] * factor;
  }
  for (std::size_t j = 0; j < stride_; ++j) {
    if (j != col) pr[j] *= inv;
  }
  for (std::size_t i = 0; i < m_ + 2; ++i) {
    if (i != row) at(i, col) *= -inv;
  }
  pr[col] = inv;
  std::swap(basic_[row], nonbasic_[col]);
}

bool DenseSimplex::optimize(int phase) {
  const std::size_t obj = m_ + (phase == 1 ? 0 : 1);
  for (;;) {
    std::size_t col = std::size_t(-1);
    for (std::size_t j = 0; j <= n_; ++j) {
      if (nonbasic_[j] == -phase) continue;
      if (col == std::size_t(-1) ||
          std::pair(at(obj, j), nonbasic_[j]) < std::pair(at(obj, col), nonbasic_[col])) {
        col = j;
      }
    }
    if (at(obj, col) >= -kEps) return true;
    std::size_t row = std::size_t(-1);
    for (std::size_t i = 0; i < m_; ++i) {
      if (at(i, col) <= kEps) continue;
      if (row == std::size_t(-1) ||
          std::pair(at(i, n_ + 1) / at(i, col), basic_[i]) <
              std::pair(at(row, n_ + 1) / at(row, col), basic_[row])) {
        row = i;
      }
    }
    if (row == std::size_t(-1)) return false;  // unbounded direction
    pivot(row, col);
  }
}

LpResult DenseSimplex::solve() {
  LpResult result;

  std::size_t worst = 0;
  for (std::size_t i = 1; i < m_; ++i) {
    if (at(i, n_ + 1) < at(worst, n_ + 1)) worst = i;
  }
  if (m_ > 0 && at(worst, n_ + 1) < -kEps) {
    pivot(worst, n_);
    if (!optimize(2) || at(m_ + 1, n_ + 1) < -kEps) {
      result.status = LpStatus::Infeasible;
      return result;
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (basic_[i] != -1) continue;
      std::size_t col = 0;
      for (std::size_t j = 1; j <= n_; ++j) {
        if (std::pair(at(i, j), nonbasic_[j]) < std::pair(at(i, col), nonbasic_[col])) {
          col = j;
        }
      }
      pivot(i, col);
    }
  }

  const bool bounded = optimize(1);
  result.x.assign(n_, 0.0);
  for (std::size_t i = 0; i < m_; ++i) {
    if (basic_[i] >= 0 && basic_[i] < static_cast<int>(n_)) {
      result.x[static_cast<std::size_t>(basic_[i])] = at(i, n_ + 1);
    }
  }
  result.value = at(m_, n_ + 1);
  result.status = bounded ? LpStatus::Optimal : LpStatus::Unbounded;
  return result;
}

}  // namespace synclib
