#pragma once

#include "loopstab/free_group.hpp"
#include "loopstab/loop_group.hpp"
#include "loopstab/matrix.hpp"
#include "loopstab/permutation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace loopstab {

enum class Construction {
  odd,              // g_j -> w g_i g_j, s_i odd
  squared,          // g_j -> w g_i^2 g_j
  double_elementary,  // g_k -> w g_i g_j g_k, s_i and s_j even
  tau,              // g_j -> g_j^-1
  commutator,       // [X_ik, X_kj] = X_ij through a looplet k
  trivial_looplet,  // g_j -> g_i g_j or g_i^2 g_j for a looplet i
  normal_core,      // g_j -> c g_j with pi(c) = Id
  product,          // composite of certified stabilizers
};

std::string to_string(Construction c);

// Automorphism of F_r together with the evidence that it stabilizes U.
//
// coset_map is the permutation P of cosets induced by gamma,
// P(vU) = gamma(v)U. Certification checks P(U) = U and
// pi(gamma(g_j)) = P pi(g_j) P^-1 for every generator; for transvections
// with a normal-core prefix P is the identity.
struct CertifiedStabilizer {
  std::string name;
  Construction construction = Construction::odd;
  Endo gamma;
  Endo gamma_inverse;
  IntMatrix target;
  Word witness;
  Permutation coset_map;
};

struct Certificate {
  bool two_sided_inverse = false;
  bool b_matrix_matches = false;
  bool coset_action = false;
  bool fixes_all_cosets = false;
  bool basis_preserved = false;

  bool passed() const { return two_sided_inverse && b_matrix_matches && coset_action && basis_preserved; }
};

// Permutation vU -> gamma(v)U computed on coset representatives, or nullopt
// if gamma does not permute the cosets of U.
std::optional<Permutation> induced_coset_map(const LoopSubgroup& u, const Endo& gamma);

Certificate check_certificate(const LoopSubgroup& u, const CertifiedStabilizer& s);

// Builds the stabilizer record and throws std::logic_error if any
// certificate check fails.
CertifiedStabilizer certify(const LoopSubgroup& u, std::string name, Construction construction,
                            Endo gamma, Endo gamma_inverse, IntMatrix target, Word witness);

// Preimage of X_ij: g_j -> w g_i g_j, w in the commutator subgroup of
// <g_i, g_k> with pi(w g_i) = Id. Needs s_i odd and s_i = 1 or some
// k != i, j with s_k > 1 (the least such k is used).
CertifiedStabilizer preimage_elementary(const LoopSubgroup& u, int i, int j);
// Preimage of X_ij^2: g_j -> w g_i^2 g_j.
CertifiedStabilizer preimage_elementary_squared(const LoopSubgroup& u, int i, int j);
// Preimage of X_ik X_jk: g_k -> w g_i g_j g_k with s_i, s_j even.
CertifiedStabilizer preimage_double(const LoopSubgroup& u, int i, int j, int k);
// Preimage of X_ij as [gamma_ik, gamma_kj] for a looplet k, in the case
// s_i odd > 1, s_j > 1 and every other loop a looplet.
CertifiedStabilizer preimage_via_commutator(const LoopSubgroup& u, int i, int j);
// tau_j, a preimage of T_j.
CertifiedStabilizer tau_preimage(const LoopSubgroup& u, int j);

CertifiedStabilizer product(const LoopSubgroup& u, const CertifiedStabilizer& a,
                            const CertifiedStabilizer& b);
CertifiedStabilizer inverse(const LoopSubgroup& u, const CertifiedStabilizer& a);
CertifiedStabilizer commutator(const LoopSubgroup& u, const CertifiedStabilizer& a,
                               const CertifiedStabilizer& b);

// Preimages of gamma2_generators(r) (at most r-3 looplets) or of
// gamma2_alt_generators(i, r) anchored at the least looplet i (r-2
// looplets), order for order.
std::vector<CertifiedStabilizer> gamma2_preimages(const LoopSubgroup& u);
// Preimages of sv_generators(parity_vector(u)), order for order.
std::vector<CertifiedStabilizer> sv_preimages(const LoopSubgroup& u);

// Closure mod 2 of the B-images of sv_preimages and gamma2_preimages.
MatrixSet image_mod2(const LoopSubgroup& u, std::size_t cap = kDefaultClosureCap);

// v B(gamma) = v (mod 2) for the parity vector v of u.
bool upper_bound_check(const LoopSubgroup& u, const Endo& gamma);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SharpboundReport {
  std::vector<int> loops;
  ParityVector parity_vector;
  std::size_t generator_count = 0;
  std::size_t image_order = 0;
  std::size_t expected_order = 0;
  std::vector<Check> checks;

  bool passed() const;
};

struct VerifyOptions {
  std::size_t cap = kDefaultClosureCap;
  // Brute-force enumeration of GL_5(Z/2Z) takes 2^25 determinant
  // evaluations, so rank 5 must be asked for explicitly.
  int max_rank = 4;
};

// Compares the mod-2 image with S(v) by brute force, checks the Gamma_2
// lower bound and the parity upper bound. Check failures are reported, not
// thrown; invalid input (r < 3, r-1 or more looplets) throws.
SharpboundReport verify_sharpbound(const LoopSubgroup& u, const VerifyOptions& options = {});

}  // namespace loopstab
