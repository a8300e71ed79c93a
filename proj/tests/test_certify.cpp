#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "synclib/certify.hpp"
#include "synclib/corpus.hpp"
#include "synclib/optimizer.hpp"

using namespace synclib;

TEST_CASE("certificate for the cerny three-cycle") {
  const CertificateReport report = certify(cerny(3), true);
  REQUIRE(report.rt_exact.has_value());
  CHECK(*report.rt_exact == 4);
  CHECK(report.cerny_bound == 4);  // tight on this family
  CHECK(report.pin_frankl_bound == (27 - 3) / 6);
  // rho = 2 > k = 1, so the middle sum is empty: 7/48·27 + 3·9 = 495/16
  CHECK(report.bucket_cubic_bound == Rat(495, 16));
  CHECK(report.all_flags_ok());
  CHECK(report.rt_constructed >= 4);
}

TEST_CASE("certificate without exact threshold") {
  const CertificateReport report = certify(cerny(4), false);
  CHECK(!report.rt_exact.has_value());
  CHECK(!report.exact_le_cerny.has_value());
  CHECK(report.constructed_le_pin_frankl);
  CHECK(report.constructed_le_bucket_bound);
}

TEST_CASE("certificate for the cerny eight-cycle") {
  const CertificateReport report = certify(cerny(8), true);
  REQUIRE(report.rt_exact.has_value());
  CHECK(*report.rt_exact == 49);
  CHECK(report.cerny_bound == 49);
  CHECK(report.all_flags_ok());
}

TEST_CASE("cumulative compression budget equals its closed form") {
  const BoundTable table = bound_table({2, 3, 8, 100});
  for (const BoundRow& row : table.rows) {
    const std::uint64_t n = row.n;
    CHECK(row.pin_frankl == (n * n * n - n) / 6);
    CHECK(row.cerny == (n - 1) * (n - 1));
  }
  CHECK(table.rows[0].cerny == 1);
  CHECK(table.rows[3].pin_frankl == 166650);
}

TEST_CASE("headline coefficient is exact") {
  const BoundTable table = bound_table({2});
  CHECK(table.coefficient == Rat(7, 48) + Rat(2) * Rat(15625, 1597536));
  CHECK(table.coefficient == Rat(8257, 49923));
  const double value = boost::rational_cast<double>(table.coefficient);
  CHECK(value == doctest::Approx(0.165395).epsilon(5e-6));
  CHECK(std::abs(value - 0.165395) <= 5e-7);
}

TEST_CASE("certify rejects non-synchronizing automata") {
  CHECK_THROWS_AS(certify(Automaton(3, 1, {1, 2, 0}), true), NotSynchronizingError);
}

TEST_CASE("bucket cubic bound depends only on the spectrum") {
  SplitMix64 rng(0x5eed3001);
  int done = 0;
  while (done < 40) {
    const Automaton a = random_automaton(10, 2, rng.next());
    if (!is_synchronizing(a)) continue;
    ++done;
    const CertificateReport report = certify(a, true);
    CHECK(report.all_flags_ok());

    // independent recomputation straight from the profile
    const RankProfile prof = rank_profile(a);
    Rat expect = Rat(7, 48) * 1000 + Rat(3) * 100;
    for (std::uint32_t r = prof.rho; r <= prof.bucket_limit(); ++r) {
      Rat mass(0);
      for (std::uint32_t j = 1; j <= r && j <= prof.bucket_limit(); ++j) {
        mass += Rat(static_cast<long long>(j)) * static_cast<long long>(prof.s[j]);
      }
      expect += Rat(2) * std::min(Rat(static_cast<long long>(r) * r, 4), mass);
    }
    CHECK(report.bucket_cubic_bound == expect);
    CHECK(Rat(static_cast<long long>(report.rt_constructed)) <= report.bucket_cubic_bound);
  }
}

TEST_CASE("bound_table rejects n below two") {
  CHECK_THROWS_AS(bound_table({1}), PreconditionError);
}
