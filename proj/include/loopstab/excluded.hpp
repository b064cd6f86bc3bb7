#pragma once

#include "loopstab/loop_group.hpp"
#include "loopstab/matrix.hpp"
#include "loopstab/stabilizer.hpp"

#include <cstdint>
#include <vector>

namespace loopstab {

// The s1/1/.../1 loop subgroup, U = {w : #_{g1} w = 0 mod s1}. Its
// abelianization is U' = {v in Z^r : v_1 = 0 mod s1}.
class ExcludedCase {
 public:
  ExcludedCase(int rank, int s1);

  int rank() const { return rank_; }
  int s1() const { return s1_; }
  LoopSubgroup loop_subgroup() const;

 private:
  int rank_;
  int s1_;
};

// M U' = U', checked for both M and its exact inverse: column j >= 2 must
// have first entry divisible by s1.
bool in_stab_uprime(const ExcludedCase& c, const IntMatrix& m);

// Mod-s1 shadow of the same condition for M over Z/s1Z.
bool fixes_uprime_mod(const ExcludedCase& c, const ModMatrix& m);

// in_principal_congruence(M, s1) implies in_stab_uprime(M).
bool gamma_s1_contained(const ExcludedCase& c, const IntMatrix& m);

// Certified stabilizing preimages of {T_i}, {X_ij : i != 1} and
// {X_1j^s1 : j != 1}, in that order.
std::vector<CertifiedStabilizer> candidate_generators(const ExcludedCase& c);

struct ExcludedReport {
  int rank = 0;
  int s1 = 0;
  std::size_t candidate_count = 0;
  std::size_t closure_order = 0;
  std::size_t filtered_order = 0;
  int gamma_s1_trials = 0;
  std::vector<Check> checks;

  bool passed() const;
};

struct ExcludedOptions {
  std::size_t cap = kDefaultClosureCap;
  int trials = 100;
  std::uint64_t seed = 20100;
  // Largest s1^(r*r) the brute-force filter will walk.
  std::uint64_t max_enumeration = std::uint64_t{1} << 26;
};

ExcludedReport verify_excluded(const ExcludedCase& c, const ExcludedOptions& options = {});

}  // namespace loopstab
