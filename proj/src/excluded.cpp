#include "loopstab/excluded.hpp"

#include "loopstab/errors.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace loopstab {

ExcludedCase::ExcludedCase(int rank, int s1) : rank_(rank), s1_(s1) {
  if (rank < 2) throw std::invalid_argument("excluded case needs r >= 2");
  if (s1 < 2) throw std::invalid_argument("excluded case needs s1 >= 2");
}

LoopSubgroup ExcludedCase::loop_subgroup() const {
  std::vector<int> loops(rank_, 1);
  loops[0] = s1_;
  return LoopSubgroup(std::move(loops));
}

namespace {

bool first_row_vanishes(const IntMatrix& m, Integer modulus) {
  for (Eigen::Index j = 1; j < m.cols(); ++j)
    if (m(0, j) % modulus != 0) return false;
  return true;
}

}  // namespace

bool in_stab_uprime(const ExcludedCase& c, const IntMatrix& m) {
  if (m.rows() != c.rank() || m.cols() != c.rank()) throw std::invalid_argument("size mismatch");
  const IntMatrix m_inv = invert(m);  // throws NotUnimodularError
  return first_row_vanishes(m, c.s1()) && first_row_vanishes(m_inv, c.s1());
}

bool fixes_uprime_mod(const ExcludedCase& c, const ModMatrix& m) {
  if (m.modulus() != c.s1() || m.rank() != c.rank()) throw std::invalid_argument("size mismatch");
  return first_row_vanishes(m.entries(), c.s1()) && first_row_vanishes(inverse(m).entries(), c.s1());
}

bool gamma_s1_contained(const ExcludedCase& c, const IntMatrix& m) {
  return !in_principal_congruence(m, c.s1()) || in_stab_uprime(c, m);
}

std::vector<CertifiedStabilizer> candidate_generators(const ExcludedCase& c) {
  const LoopSubgroup u = c.loop_subgroup();
  const int r = c.rank();
  std::vector<CertifiedStabilizer> out;
  for (int i = 1; i <= r; ++i) out.push_back(tau_preimage(u, i));
  for (int i = 2; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      if (i != j) out.push_back(preimage_elementary(u, i, j));
  const Word core = Word::generator(1, c.s1());
  for (int j = 2; j <= r; ++j) {
    std::ostringstream name;
    name << "X1," << j << '^' << c.s1();
    out.push_back(certify(u, name.str(), Construction::normal_core, transvection(j, core, r),
                          transvection_inverse(j, core, r), power(elementary(1, j, r), c.s1()),
                          Word()));
  }
  return out;
}

bool ExcludedReport::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

ExcludedReport verify_excluded(const ExcludedCase& c, const ExcludedOptions& options) {
  const int r = c.rank();
  const Integer s1 = c.s1();
  if (key_space(r, s1) > options.max_enumeration)
    throw CapExceededError("brute-force enumeration of GL_" + std::to_string(r) + "(Z/" +
                           std::to_string(s1) + ") is beyond the configured limit");
  ExcludedReport report;
  report.rank = r;
  report.s1 = c.s1();

  const std::vector<CertifiedStabilizer> candidates = candidate_generators(c);
  report.candidate_count = candidates.size();
  {
    bool ok = true;
    for (const auto& s : candidates) ok = ok && in_stab_uprime(c, s.target);
    report.checks.push_back({"candidates_in_stab_uprime", ok,
                             std::to_string(candidates.size()) + " candidate generators"});
  }
  {
    const LoopSubgroup u = c.loop_subgroup();
    bool ok = true;
    for (const auto& s : candidates) ok = ok && check_certificate(u, s).passed();
    report.checks.push_back({"certificates", ok, "inverse, B-image, coset action, basis"});
  }

  std::vector<ModMatrix> images;
  for (const auto& s : candidates) images.push_back(reduce_mod(s.target, s1));
  const MatrixSet generated = closure(images, r, s1, options.cap);
  const MatrixSet filtered = enumerate_gl(r, s1, [&](const ModMatrix& m) {
    const Integer d = determinant(m);
    return (d == 1 || d == s1 - 1) && fixes_uprime_mod(c, m);
  });
  report.closure_order = generated.size();
  report.filtered_order = filtered.size();
  {
    std::ostringstream detail;
    detail << "|closure| = " << generated.size() << ", |filtered| = " << filtered.size();
    report.checks.push_back({"closure_equals_filtered", generated == filtered, detail.str()});
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> index(1, r);
  std::uniform_int_distribution<int> length(1, 10);
  std::bernoulli_distribution negate(0.5);
  bool ok = true;
  for (int t = 0; t < options.trials; ++t) {
    IntMatrix m = identity_matrix(r);
    for (int step = length(rng); step > 0; --step) {
      int i = index(rng), j = index(rng);
      while (j == i) j = index(rng);
      const Integer e = negate(rng) ? -s1 : s1;
      m = multiply(m, power(elementary(i, j, r), e));
    }
    ok = ok && in_principal_congruence(m, s1) && in_stab_uprime(c, m);
    ++report.gamma_s1_trials;
  }
  report.checks.push_back({"gamma_s1_members", ok,
                           std::to_string(report.gamma_s1_trials) + " random products"});
  return report;
}

}  // namespace loopstab
