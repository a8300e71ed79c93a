#include "synclib/certify.hpp"

#include <algorithm>

#include "synclib/optimizer.hpp"

namespace synclib {

namespace {

std::uint64_t cumulative_compression_budget(std::uint32_t n) {
  std::uint64_t sum = 0;
  for (std::uint64_t r = 0; r + 2 <= n; ++r) {
    sum += (r + 1) * (r + 2) / 2;
  }
  return sum;
}

}  // namespace

bool CertificateReport::all_flags_ok() const {
  bool ok = constructed_le_pin_frankl && constructed_le_bucket_bound;
  if (rt_exact) {
    ok = ok && *exact_le_cerny && *exact_le_pin_frankl && *exact_le_bucket_bound;
  }
  return ok;
}

CertificateReport certify(const Automaton& aut, bool with_exact, std::size_t node_budget) {
  const std::uint32_t n = aut.states();
  const RankProfile profile = rank_profile(aut, node_budget);
  const SynthesisTrace trace =
      (n >= 2) ? synthesize_with_profile(aut, profile, node_budget) : SynthesisTrace{};

  CertificateReport report;
  report.n = n;
  report.m = aut.letters();
  report.rt_constructed = trace.final_word.size();
  report.cerny_bound = static_cast<std::uint64_t>(n - 1) * (n - 1);
  report.pin_frankl_bound = cumulative_compression_budget(n);

  const long long nn = n;
  Rat value = Rat(7, 48) * nn * nn * nn + Rat(3) * nn * nn;
  const std::uint32_t k = profile.bucket_limit();
  for (std::uint32_t r = profile.rho; r <= k; ++r) {
    const Rat cap(static_cast<long long>(r) * r, 4);
    const Rat mass(static_cast<long long>(profile.weighted_bucket_sum(r)));
    value += Rat(2) * std::min(cap, mass);
  }
  report.bucket_cubic_bound = value;

  const Rat constructed(static_cast<long long>(report.rt_constructed));
  report.constructed_le_pin_frankl = report.rt_constructed <= report.pin_frankl_bound;
  report.constructed_le_bucket_bound = constructed <= report.bucket_cubic_bound;

  if (with_exact) {
    report.rt_exact = profile.lambda[n - 1];
    report.exact_le_cerny = *report.rt_exact <= report.cerny_bound;
    report.exact_le_pin_frankl = *report.rt_exact <= report.pin_frankl_bound;
    report.exact_le_bucket_bound = Rat(static_cast<long long>(*report.rt_exact)) <= report.bucket_cubic_bound;
  }
  return report;
}

BoundTable bound_table(const std::vector<std::uint32_t>& n_values) {
  BoundTable table;
  for (std::uint32_t n : n_values) {
    if (n < 2) {
      throw PreconditionError("bound_table needs n >= 2");
    }
    table.rows.push_back({n, static_cast<std::uint64_t>(n - 1) * (n - 1),
                          cumulative_compression_budget(n)});
  }
  table.coefficient = Rat(7, 48) + Rat(2) * kPhiLeadingCoefficient;
  return table;
}

}  // namespace synclib
