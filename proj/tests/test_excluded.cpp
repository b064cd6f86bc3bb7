#include "doctest.h"
#include "oracles.hpp"

#include "loopstab/errors.hpp"
#include "loopstab/excluded.hpp"

using namespace loopstab;

TEST_CASE("excluded case setup") {
  const ExcludedCase c(3, 4);
  CHECK(c.loop_subgroup() == parse_loops("4/1/1"));
  CHECK_THROWS(ExcludedCase(3, 1));
  CHECK_THROWS(ExcludedCase(1, 3));
}

TEST_CASE("membership in Stab(U')") {
  const ExcludedCase c(3, 3);
  CHECK(in_stab_uprime(c, elementary(2, 1, 3)));
  CHECK(in_stab_uprime(c, elementary(2, 3, 3)));
  CHECK_FALSE(in_stab_uprime(c, elementary(1, 2, 3)));
  CHECK(in_stab_uprime(c, power(elementary(1, 2, 3), 3)));
  CHECK_FALSE(in_stab_uprime(c, power(elementary(1, 2, 3), 2)));
  CHECK(in_stab_uprime(c, diag_t(1, 3)));
  CHECK(fixes_uprime_mod(c, reduce_mod(elementary(3, 1, 3), 3)));
  CHECK_FALSE(fixes_uprime_mod(c, reduce_mod(elementary(1, 3, 3), 3)));
}

TEST_CASE("property: Stab(U') is closed and contains Gamma(s1)") {
  std::mt19937_64 rng(61);
  for (int s1 : {2, 3, 4}) {
    const ExcludedCase c(3, s1);
    const std::vector<CertifiedStabilizer> gens = candidate_generators(c);
    for (int trial = 0; trial < 50; ++trial) {
      IntMatrix m = identity_matrix(3);
      IntMatrix g = identity_matrix(3);
      for (int t = 0; t < 5; ++t) {
        m = multiply(m, gens[rng() % gens.size()].target);
        const int i = 1 + static_cast<int>(rng() % 3);
        const int j = 1 + (i + static_cast<int>(rng() % 2)) % 3;
        g = multiply(g, power(elementary(i, j, 3), rng() % 2 ? s1 : -s1));
      }
      CHECK(in_stab_uprime(c, m));
      CHECK(in_stab_uprime(c, invert(m)));
      CHECK(in_principal_congruence(g, s1));
      CHECK(gamma_s1_contained(c, g));
      CHECK(in_stab_uprime(c, g));
    }
  }
}

TEST_CASE("candidate generators are certified stabilizers") {
  const ExcludedCase c(3, 3);
  const LoopSubgroup u = c.loop_subgroup();
  const std::vector<CertifiedStabilizer> gens = candidate_generators(c);
  // 3 T's, 4 X_ij with i != 1, 2 X_1j^3.
  CHECK(gens.size() == 9);
  CHECK(gens.back().target == power(elementary(1, 3, 3), 3));
  CHECK(gens.back().construction == Construction::normal_core);
  for (const CertifiedStabilizer& s : gens) {
    CHECK(check_certificate(u, s).passed());
    CHECK(in_stab_uprime(c, s.target));
  }
}

TEST_CASE("verify_excluded orders") {
  const std::vector<std::pair<int, std::size_t>> expected = {{2, 24}, {3, 864}, {4, 3072}};
  for (const auto& [s1, order] : expected) {
    const ExcludedReport report = verify_excluded(ExcludedCase(3, s1));
    CHECK(report.closure_order == order);
    CHECK(report.filtered_order == order);
    CHECK(report.gamma_s1_trials == 100);
    CHECK(report.passed());
    for (const Check& ch : report.checks) CHECK_MESSAGE(ch.passed, s1 << ": " << ch.name);
  }
}

TEST_CASE("verify_excluded refuses an oversized enumeration") {
  ExcludedOptions tight;
  tight.max_enumeration = 1000;
  CHECK_THROWS(verify_excluded(ExcludedCase(3, 3), tight));
}
