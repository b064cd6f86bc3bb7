#include "loopstab/stabilizer.hpp"

#include "loopstab/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace loopstab {

std::string to_string(Construction c) {
  switch (c) {
    case Construction::odd: return "odd";
    case Construction::squared: return "squared";
    case Construction::double_elementary: return "double";
    case Construction::tau: return "tau";
    case Construction::commutator: return "commutator";
    case Construction::trivial_looplet: return "trivial-looplet";
    case Construction::normal_core: return "normal-core";
    case Construction::product: return "product";
  }
  return "unknown";
}

std::optional<Permutation> induced_coset_map(const LoopSubgroup& u, const Endo& gamma) {
  if (gamma.rank() != u.rank()) throw std::invalid_argument("rank mismatch");
  std::vector<int> images(u.coset_count());
  for (int c = 1; c <= u.coset_count(); ++c)
    images[c - 1] = pi_word(u, apply(gamma, u.representative_word(c)))(1);
  try {
    return Permutation(std::move(images));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

Certificate check_certificate(const LoopSubgroup& u, const CertifiedStabilizer& s) {
  const int r = u.rank();
  Certificate cert;
  const Endo id = Endo::identity(r);
  cert.two_sided_inverse =
      compose(s.gamma, s.gamma_inverse) == id && compose(s.gamma_inverse, s.gamma) == id;
  cert.b_matrix_matches = b_matrix(s.gamma) == s.target;

  const std::optional<Permutation> p = induced_coset_map(u, s.gamma);
  if (p && *p == s.coset_map && s.coset_map(1) == 1) {
    const Permutation p_inv = inverse(*p);
    bool ok = true;
    bool fixes = true;
    for (int j = 1; j <= r && ok; ++j) {
      const Permutation moved = pi_word(u, s.gamma.image(j));
      ok = moved == compose(compose(*p, u.pi_generator(j)), p_inv);
      fixes = fixes && moved == u.pi_generator(j);
    }
    cert.coset_action = ok;
    cert.fixes_all_cosets = ok && fixes;
  }

  cert.basis_preserved = true;
  for (const Word& b : basis(u)) {
    if (!contains(u, apply(s.gamma, b)) || !contains(u, apply(s.gamma_inverse, b))) {
      cert.basis_preserved = false;
      break;
    }
  }
  return cert;
}

CertifiedStabilizer certify(const LoopSubgroup& u, std::string name, Construction construction,
                            Endo gamma, Endo gamma_inverse, IntMatrix target, Word witness) {
  std::optional<Permutation> p = induced_coset_map(u, gamma);
  CertifiedStabilizer s{std::move(name),          construction,         std::move(gamma),
                        std::move(gamma_inverse), std::move(target),    std::move(witness),
                        p ? *p : Permutation::identity(u.coset_count())};
  const Certificate cert = check_certificate(u, s);
  if (!p || !cert.passed()) {
    std::ostringstream msg;
    msg << "certificate failed for " << s.name << " on " << to_string(u)
        << ": inverse=" << cert.two_sided_inverse << " b_matrix=" << cert.b_matrix_matches
        << " coset_action=" << cert.coset_action << " basis=" << cert.basis_preserved;
    throw std::logic_error(msg.str());
  }
  return s;
}

namespace {

void check_pair(const LoopSubgroup& u, int i, int j) {
  const int r = u.rank();
  if (i < 1 || j < 1 || i > r || j > r) throw std::invalid_argument("generator index out of range");
  if (i == j) throw PreconditionError("construction needs i != j");
}

std::string matrix_name(const char* stem, int i, int j, const char* suffix = "") {
  std::ostringstream out;
  out << stem << i << ',' << j << suffix;
  return out.str();
}

// Least k outside {i, j} whose loop is not a looplet, or 0.
int auxiliary_loop(const LoopSubgroup& u, int i, int j) {
  for (int k = 1; k <= u.rank(); ++k)
    if (k != i && k != j && u.loop_length(k) > 1) return k;
  return 0;
}

// Word w in the commutator subgroup of <g_i, g_k> with pi(w) = pi(target)
// where target only moves cosets on loops i and k.
Word commutator_word(const LoopSubgroup& u, int i, int k, const Permutation& target) {
  const LoopRestriction loops = restrict_to_loops(u, i, k);
  const SWWord sw = decompose_even(loops.localize(target), loops.m);
  return substitute(sw, i, k);
}

CertifiedStabilizer transvection_stabilizer(const LoopSubgroup& u, std::string name,
                                            Construction construction, int moved,
                                            const Word& witness, const Word& prefix,
                                            IntMatrix target) {
  const int r = u.rank();
  return certify(u, std::move(name), construction, transvection(moved, prefix, r),
                 transvection_inverse(moved, prefix, r), std::move(target), witness);
}

}  // namespace

CertifiedStabilizer preimage_elementary(const LoopSubgroup& u, int i, int j) {
  check_pair(u, i, j);
  const int r = u.rank();
  const int si = u.loop_length(i);
  if (si % 2 == 0) throw PreconditionError("preimage of X_ij needs s_i odd");
  const std::string name = matrix_name("X", i, j);
  if (si == 1)
    return transvection_stabilizer(u, name, Construction::trivial_looplet, j, Word(),
                                   Word::generator(i), elementary(i, j, r));
  const int k = auxiliary_loop(u, i, j);
  if (k == 0)
    throw PreconditionError("preimage of X_ij needs s_i = 1 or a loop k != i, j with s_k > 1");
  const Word w = commutator_word(u, i, k, inverse(u.pi_generator(i)));
  return transvection_stabilizer(u, name, Construction::odd, j, w, w * Word::generator(i),
                                 elementary(i, j, r));
}

CertifiedStabilizer preimage_elementary_squared(const LoopSubgroup& u, int i, int j) {
  check_pair(u, i, j);
  const int r = u.rank();
  const std::string name = matrix_name("X", i, j, "^2");
  const IntMatrix target = power(elementary(i, j, r), 2);
  if (u.loop_length(i) == 1)
    return transvection_stabilizer(u, name, Construction::trivial_looplet, j, Word(),
                                   Word::generator(i, 2), target);
  const int k = auxiliary_loop(u, i, j);
  if (k == 0)
    throw PreconditionError("preimage of X_ij^2 needs s_i = 1 or a loop k != i, j with s_k > 1");
  const Word w = commutator_word(u, i, k, power(u.pi_generator(i), -2));
  return transvection_stabilizer(u, name, Construction::squared, j, w, w * Word::generator(i, 2),
                                 target);
}

CertifiedStabilizer preimage_double(const LoopSubgroup& u, int i, int j, int k) {
  check_pair(u, i, j);
  check_pair(u, i, k);
  check_pair(u, j, k);
  if (u.loop_length(i) % 2 != 0 || u.loop_length(j) % 2 != 0)
    throw PreconditionError("preimage of X_ik X_jk needs s_i and s_j even");
  const int r = u.rank();
  const Permutation pij = compose(u.pi_generator(i), u.pi_generator(j));
  const Word w = commutator_word(u, i, j, inverse(pij));
  std::ostringstream name;
  name << 'X' << i << ',' << k << " X" << j << ',' << k;
  return transvection_stabilizer(u, name.str(), Construction::double_elementary, k, w,
                                 w * Word::generator(i) * Word::generator(j),
                                 multiply(elementary(i, k, r), elementary(j, k, r)));
}

CertifiedStabilizer preimage_via_commutator(const LoopSubgroup& u, int i, int j) {
  check_pair(u, i, j);
  const int si = u.loop_length(i);
  if (si % 2 == 0 || si == 1 || u.loop_length(j) == 1 || auxiliary_loop(u, i, j) != 0)
    throw PreconditionError(
        "commutator route applies only when s_i is odd > 1, s_j > 1 and all other loops are "
        "looplets");
  int k = 1;
  while (k <= u.rank() && (k == i || k == j)) ++k;
  if (k > u.rank()) throw PreconditionError("commutator route needs a looplet k != i, j (r >= 3)");
  const CertifiedStabilizer a = preimage_elementary(u, i, k);
  const CertifiedStabilizer b = preimage_elementary(u, k, j);
  CertifiedStabilizer c = commutator(u, a, b);
  c.name = matrix_name("X", i, j);
  c.construction = Construction::commutator;
  if (c.target != elementary(i, j, u.rank()))
    throw std::logic_error("commutator route did not produce X_ij");
  return c;
}

CertifiedStabilizer tau_preimage(const LoopSubgroup& u, int j) {
  const int r = u.rank();
  if (j < 1 || j > r) throw std::invalid_argument("generator index out of range");
  return certify(u, "T" + std::to_string(j), Construction::tau, tau(j, r), tau(j, r), diag_t(j, r),
                 Word());
}

CertifiedStabilizer product(const LoopSubgroup& u, const CertifiedStabilizer& a,
                            const CertifiedStabilizer& b) {
  return certify(u, a.name + " * " + b.name, Construction::product, compose(a.gamma, b.gamma),
                 compose(b.gamma_inverse, a.gamma_inverse), multiply(a.target, b.target), Word());
}

CertifiedStabilizer inverse(const LoopSubgroup& u, const CertifiedStabilizer& a) {
  return certify(u, "(" + a.name + ")^-1", Construction::product, a.gamma_inverse, a.gamma,
                 invert(a.target), Word());
}

CertifiedStabilizer commutator(const LoopSubgroup& u, const CertifiedStabilizer& a,
                               const CertifiedStabilizer& b) {
  const CertifiedStabilizer ab = product(u, a, b);
  const CertifiedStabilizer ab_inv = product(u, inverse(u, a), inverse(u, b));
  CertifiedStabilizer c = product(u, ab, ab_inv);
  c.name = "[" + a.name + ", " + b.name + "]";
  return c;
}

namespace {

void check_theorem_range(const LoopSubgroup& u) {
  if (u.rank() < 3) throw PreconditionError("requires r >= 3");
  if (looplet_count(u) > u.rank() - 2)
    throw PreconditionError("requires at most r-2 looplets (r-1 looplets is the excluded case)");
}

}  // namespace

std::vector<CertifiedStabilizer> gamma2_preimages(const LoopSubgroup& u) {
  check_theorem_range(u);
  const int r = u.rank();
  std::vector<CertifiedStabilizer> out;
  if (looplet_count(u) <= r - 3) {
    for (int i = 1; i <= r; ++i)
      for (int j = 1; j <= r; ++j)
        if (i != j) out.push_back(preimage_elementary_squared(u, i, j));
  } else {
    const auto& loops = u.loops();
    const int anchor = static_cast<int>(std::find(loops.begin(), loops.end(), 1) - loops.begin()) + 1;
    for (int k = 1; k <= r; ++k)
      if (k != anchor) out.push_back(preimage_elementary(u, anchor, k));
    for (int j = 1; j <= r; ++j)
      if (j != anchor) out.push_back(preimage_elementary_squared(u, j, anchor));
  }
  for (int j = 1; j <= r; ++j) out.push_back(tau_preimage(u, j));
  return out;
}

std::vector<CertifiedStabilizer> sv_preimages(const LoopSubgroup& u) {
  check_theorem_range(u);
  std::vector<CertifiedStabilizer> out;
  for (const GeneratorSpec& spec : sv_generator_specs(parity_vector(u))) {
    if (spec.kind == GeneratorSpec::Kind::double_elementary) {
      out.push_back(preimage_double(u, spec.i, spec.j, spec.k));
    } else if (u.loop_length(spec.i) == 1 || auxiliary_loop(u, spec.i, spec.j) != 0) {
      out.push_back(preimage_elementary(u, spec.i, spec.j));
    } else {
      out.push_back(preimage_via_commutator(u, spec.i, spec.j));
    }
  }
  return out;
}

MatrixSet image_mod2(const LoopSubgroup& u, std::size_t cap) {
  std::vector<ModMatrix> gens;
  for (const auto& s : sv_preimages(u)) gens.push_back(reduce_mod(b_matrix(s.gamma), 2));
  for (const auto& s : gamma2_preimages(u)) gens.push_back(reduce_mod(b_matrix(s.gamma), 2));
  return closure(gens, u.rank(), 2, cap);
}

bool upper_bound_check(const LoopSubgroup& u, const Endo& gamma) {
  if (gamma.rank() != u.rank()) throw std::invalid_argument("rank mismatch");
  const ParityVector v = parity_vector(u);
  const RowVector<Integer> image = v * b_matrix(gamma);
  for (Eigen::Index j = 0; j < image.size(); ++j)
    if (((image(j) % 2) + 2) % 2 != v(j)) return false;
  return true;
}

bool SharpboundReport::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

SharpboundReport verify_sharpbound(const LoopSubgroup& u, const VerifyOptions& options) {
  check_theorem_range(u);
  const int r = u.rank();
  if (r > options.max_rank)
    throw PreconditionError("rank " + std::to_string(r) + " exceeds the enumeration limit " +
                            std::to_string(options.max_rank));
  SharpboundReport report;
  report.loops = u.loops();
  report.parity_vector = parity_vector(u);
  const ParityVector& v = report.parity_vector;

  const std::vector<CertifiedStabilizer> sv = sv_preimages(u);
  const std::vector<CertifiedStabilizer> g2 = gamma2_preimages(u);
  report.generator_count = sv.size() + g2.size();

  const MatrixSet expected = sv_set(v);
  report.expected_order = expected.size();

  std::vector<ModMatrix> images;
  for (const auto& s : sv) images.push_back(reduce_mod(b_matrix(s.gamma), 2));
  for (const auto& s : g2) images.push_back(reduce_mod(b_matrix(s.gamma), 2));
  const MatrixSet image = closure(images, r, 2, options.cap);
  report.image_order = image.size();

  {
    std::ostringstream detail;
    detail << "|image| = " << image.size() << ", |S(v)| = " << expected.size();
    report.checks.push_back({"image_equals_sv", image == expected, detail.str()});
  }
  {
    const MatrixSet generated = closure(sv_generators(v), r, 2, options.cap);
    report.checks.push_back({"sv_generators_generate_sv", generated == expected,
                             "|<sv_generators>| = " + std::to_string(generated.size())});
  }
  {
    bool ok = true;
    for (std::size_t t = 0; t < sv.size(); ++t)
      ok = ok && reduce_mod(sv[t].target, 2) == sv_generators(v)[t];
    report.checks.push_back({"sv_preimages_match_generators", ok,
                             std::to_string(sv.size()) + " preimages"});
  }
  {
    const bool alt = looplet_count(u) == r - 2;
    std::vector<IntMatrix> family;
    std::string which = "squares of elementary matrices and T_i";
    if (alt) {
      const auto& loops = u.loops();
      const int anchor = static_cast<int>(std::find(loops.begin(), loops.end(), 1) - loops.begin()) + 1;
      family = gamma2_alt_generators(anchor, r);
      which = "elementary matrices anchored at looplet " + std::to_string(anchor);
    } else {
      family = gamma2_generators(r);
    }
    bool ok = family.size() == g2.size();
    for (std::size_t t = 0; ok && t < family.size(); ++t) ok = g2[t].target == family[t];
    report.checks.push_back({"gamma2_lower_bound", ok, which});
  }
  {
    bool ok = true;
    for (const auto* list : {&sv, &g2})
      for (const auto& s : *list) ok = ok && upper_bound_check(u, s.gamma);
    report.checks.push_back({"parity_upper_bound", ok, "v B(gamma) = v mod 2 for all preimages"});
  }
  {
    bool ok = true;
    for (const auto* list : {&sv, &g2})
      for (const auto& s : *list) ok = ok && check_certificate(u, s).passed();
    report.checks.push_back({"certificates", ok, "inverse, B-image, coset action, basis"});
  }
  return report;
}

}  // namespace loopstab
