#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "synclib/rational.hpp"
#include "synclib/spectrum.hpp"
#include "synclib/synthesis.hpp"

namespace synclib {

// Machine-checkable bound certificate for one automaton. All bound
// values are exact integers/rationals; flags are pure comparisons.
struct CertificateReport {
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  std::optional<std::uint64_t> rt_exact;
  std::uint64_t rt_constructed = 0;
  std::uint64_t cerny_bound = 0;       // (n-1)²
  std::uint64_t pin_frankl_bound = 0;  // Σ_{r=0}^{n-2} (r+1)(r+2)/2 = (n³-n)/6
  Rat bucket_cubic_bound;                // 7/48·n³ + 2Σ min{r²/4, Σ j·s_j} + 3n²

  // Set when rt_exact is present.
  std::optional<bool> exact_le_cerny;
  std::optional<bool> exact_le_pin_frankl;
  std::optional<bool> exact_le_bucket_bound;
  bool constructed_le_pin_frankl = false;
  bool constructed_le_bucket_bound = false;

  bool all_flags_ok() const;
};

CertificateReport certify(const Automaton& aut, bool with_exact,
                          std::size_t node_budget = kDefaultNodeBudget);

struct BoundRow {
  std::uint32_t n;
  std::uint64_t cerny;       // (n-1)²
  std::uint64_t pin_frankl;  // cumulative greedy-compression budget
};

// Per-n bound values plus the headline cubic coefficient
// 7/48 + 2·15625/1597536 = 8257/49923 ≈ 0.1654.
struct BoundTable {
  std::vector<BoundRow> rows;
  Rat coefficient;
};

BoundTable bound_table(const std::vector<std::uint32_t>& n_values);

}  // namespace synclib
