#include "doctest.h"
#include "oracles.hpp"

#include "loopstab/errors.hpp"
#include "loopstab/stabilizer.hpp"

using namespace loopstab;

namespace {

bool certified(const LoopSubgroup& u, const CertifiedStabilizer& s) {
  return check_certificate(u, s).passed();
}

// Every generator image, read as a coset walk from U, must land back in a
// coset related by the induced coset map; here checked via the basis.
bool preserves_u(const LoopSubgroup& u, const Endo& gamma) {
  for (const Word& b : basis(u))
    if (!contains(u, apply(gamma, b))) return false;
  return true;
}

}  // namespace

TEST_CASE("the 3/3/1 elementary preimages match the worked example") {
  const LoopSubgroup u = parse_loops("3/3/1");
  const CertifiedStabilizer g13 = preimage_elementary(u, 1, 3);
  CHECK(g13.target == elementary(1, 3, 3));
  CHECK(g13.gamma.image(3) == parse_word("y x y^-1 x y x^-2 y^-1 x z"));
  CHECK(g13.construction == Construction::odd);
  CHECK(in_derived_subgroup(g13.witness));
  CHECK(certified(u, g13));

  const CertifiedStabilizer g31 = preimage_elementary(u, 3, 1);
  CHECK(g31.construction == Construction::trivial_looplet);
  CHECK(g31.gamma.image(1) == parse_word("z x"));
  CHECK(certified(u, g31));
}

TEST_CASE("certificates of every construction") {
  const LoopSubgroup u = parse_loops("3/3/1");
  const LoopSubgroup full = parse_loops("4/3/2");
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      const CertifiedStabilizer sq = preimage_elementary_squared(full, i, j);
      CHECK(sq.target == power(elementary(i, j, 3), 2));
      CHECK(certified(full, sq));
      CHECK(preserves_u(full, sq.gamma));
    }
  // Without a third nontrivial loop there is no room for the witness.
  CHECK_THROWS_AS(preimage_elementary_squared(u, 1, 2), PreconditionError);
  for (int j = 1; j <= 3; ++j) {
    const CertifiedStabilizer t = tau_preimage(u, j);
    CHECK(t.target == diag_t(j, 3));
    CHECK(certified(u, t));
  }
  // tau_1 reverses the first loop, so it permutes cosets.
  CHECK_FALSE(tau_preimage(u, 1).coset_map.is_identity());
  CHECK(check_certificate(u, tau_preimage(u, 3)).fixes_all_cosets);

  const LoopSubgroup even = parse_loops("2/4/3");
  const CertifiedStabilizer d = preimage_double(even, 1, 2, 3);
  CHECK(d.target == multiply(elementary(1, 3, 3), elementary(2, 3, 3)));
  CHECK(d.construction == Construction::double_elementary);
  CHECK(certified(even, d));
  CHECK(preserves_u(even, d.gamma));

  const LoopSubgroup comm = parse_loops("3/2/1");
  const CertifiedStabilizer c = preimage_via_commutator(comm, 1, 2);
  CHECK(c.target == elementary(1, 2, 3));
  CHECK(c.construction == Construction::commutator);
  CHECK(certified(comm, c));
}

TEST_CASE("preimage preconditions") {
  const LoopSubgroup u = parse_loops("2/3/1");
  CHECK_THROWS_AS(preimage_elementary(u, 1, 2), PreconditionError);
  CHECK_THROWS_AS(preimage_double(u, 1, 2, 3), PreconditionError);
  CHECK_THROWS(preimage_elementary(u, 1, 1));
  CHECK_THROWS(tau_preimage(u, 4));
}

TEST_CASE("a tampered stabilizer fails certification") {
  const LoopSubgroup u = parse_loops("3/3/1");
  CertifiedStabilizer s = preimage_elementary(u, 1, 3);
  s.gamma = transvection(3, Word::generator(1), 3);
  s.gamma_inverse = transvection_inverse(3, Word::generator(1), 3);
  const Certificate cert = check_certificate(u, s);
  CHECK(cert.two_sided_inverse);
  CHECK(cert.b_matrix_matches);
  CHECK_FALSE(cert.basis_preserved);
  CHECK_FALSE(cert.passed());
  CHECK_FALSE(cert.coset_action);
  CHECK_THROWS_AS(certify(u, "bad", Construction::odd, s.gamma, s.gamma_inverse, s.target,
                          Word::generator(1)),
                  std::logic_error);
}

TEST_CASE("products, inverses and commutators stay certified") {
  const LoopSubgroup u = parse_loops("3/3/1");
  const CertifiedStabilizer a = preimage_elementary(u, 1, 3);
  const CertifiedStabilizer b = preimage_elementary(u, 3, 2);
  const CertifiedStabilizer ab = product(u, a, b);
  CHECK(ab.target == multiply(a.target, b.target));
  CHECK(b_matrix(ab.gamma) == ab.target);
  const CertifiedStabilizer ai = inverse(u, a);
  CHECK(ai.target == invert(a.target));
  CHECK(compose(ai.gamma, a.gamma) == Endo::identity(3));
  const CertifiedStabilizer c = commutator(u, a, b);
  CHECK(c.target == elementary(1, 2, 3));
  CHECK(certified(u, c));
}

TEST_CASE("generator preimages line up with the generator lists") {
  for (const char* text : {"3/3/1", "2/2/2", "2/3/3", "5/4/3", "4/4/1", "2/3/4/5", "2/2/1/1",
                           "3/3/1/1"}) {
    const LoopSubgroup u = parse_loops(text);
    const std::vector<ModMatrix> gens = sv_generators(parity_vector(u));
    const std::vector<CertifiedStabilizer> pre = sv_preimages(u);
    REQUIRE(pre.size() == gens.size());
    for (std::size_t t = 0; t < pre.size(); ++t) {
      CHECK(reduce_mod(pre[t].target, 2) == gens[t]);
      CHECK(b_matrix(pre[t].gamma) == pre[t].target);
      CHECK(certified(u, pre[t]));
    }
    for (const CertifiedStabilizer& s : gamma2_preimages(u)) CHECK(certified(u, s));
  }
}

TEST_CASE("property: random compositions respect the parity upper bound") {
  std::mt19937_64 rng(51);
  for (const char* text : {"3/3/1", "2/2/2", "5/4/3", "2/3/4/5"}) {
    const LoopSubgroup u = parse_loops(text);
    std::vector<CertifiedStabilizer> pool = sv_preimages(u);
    for (const CertifiedStabilizer& s : gamma2_preimages(u)) pool.push_back(s);
    for (int trial = 0; trial < 40; ++trial) {
      const int length = 1 + static_cast<int>(rng() % 4);
      Endo gamma = Endo::identity(u.rank());
      IntMatrix target = identity_matrix(u.rank());
      for (int t = 0; t < length; ++t) {
        const CertifiedStabilizer& s = pool[rng() % pool.size()];
        gamma = compose(gamma, s.gamma);
        target = multiply(target, s.target);
      }
      CHECK(b_matrix(gamma) == target);
      CHECK(upper_bound_check(u, gamma));
      CHECK(preserves_u(u, gamma));
    }
  }
}

TEST_CASE("an automorphism outside the stabilizer can break the bound") {
  const LoopSubgroup u = parse_loops("2/3/3");
  // g2 -> g1 g2 sends the odd loop onto a mixed one: v X_12 != v.
  CHECK_FALSE(upper_bound_check(u, transvection(2, Word::generator(1), 3)));
  CHECK(upper_bound_check(u, transvection(1, Word::generator(2), 3)));
}

TEST_CASE("verify_sharpbound on the rank-3 suite") {
  const std::vector<std::pair<const char*, std::size_t>> suite = {
      {"3/3/1", 168}, {"2/2/1", 24}, {"2/2/2", 24}, {"2/3/3", 24}, {"5/4/3", 24}, {"4/4/1", 24}};
  for (const auto& [text, order] : suite) {
    const SharpboundReport report = verify_sharpbound(parse_loops(text));
    CHECK(report.image_order == order);
    CHECK(report.expected_order == order);
    CHECK(report.passed());
    for (const Check& c : report.checks) CHECK_MESSAGE(c.passed, text << ": " << c.name);
  }
}

TEST_CASE("verify_sharpbound input validation") {
  CHECK_THROWS_AS(verify_sharpbound(parse_loops("3/1/1")), PreconditionError);
  CHECK_THROWS_AS(verify_sharpbound(parse_loops("3/3")), PreconditionError);
  VerifyOptions small;
  small.max_rank = 3;
  CHECK_THROWS(verify_sharpbound(parse_loops("2/3/4/5"), small));
}
