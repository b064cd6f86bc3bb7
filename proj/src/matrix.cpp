#include "loopstab/matrix.hpp"

#include "loopstab/errors.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace loopstab {

namespace {

Integer checked_add(Integer a, Integer b) {
  Integer out;
  if (__builtin_add_overflow(a, b, &out)) throw ArithmeticOverflowError("integer overflow");
  return out;
}

Integer checked_mul(Integer a, Integer b) {
  Integer out;
  if (__builtin_mul_overflow(a, b, &out)) throw ArithmeticOverflowError("integer overflow");
  return out;
}

Integer mod(Integer a, Integer l) { return ((a % l) + l) % l; }

void check_rank(int rank) {
  if (rank < 1) throw std::invalid_argument("matrix rank must be >= 1");
}

void check_index(int i, int rank) {
  if (i < 1 || i > rank) throw std::invalid_argument("matrix index out of range");
}

// Fraction-free elimination; exact for integer input.
Integer bareiss_determinant(IntMatrix a) {
  const Eigen::Index n = a.rows();
  if (n == 0) return 1;
  using Wide = __int128;
  Integer sign = 1;
  Integer previous = 1;
  for (Eigen::Index c = 0; c + 1 < n; ++c) {
    if (a(c, c) == 0) {
      Eigen::Index swap = c + 1;
      while (swap < n && a(swap, c) == 0) ++swap;
      if (swap == n) return 0;
      a.row(c).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = c + 1; i < n; ++i)
      for (Eigen::Index j = c + 1; j < n; ++j) {
        const Wide value = (Wide(a(i, j)) * a(c, c) - Wide(a(i, c)) * a(c, j)) / previous;
        if (value > std::numeric_limits<Integer>::max() ||
            value < std::numeric_limits<Integer>::min())
          throw ArithmeticOverflowError("determinant overflow");
        a(i, j) = static_cast<Integer>(value);
      }
    previous = a(c, c);
  }
  return checked_mul(sign, a(n - 1, n - 1));
}

IntMatrix minor_matrix(const IntMatrix& m, Eigen::Index row, Eigen::Index col) {
  const Eigen::Index n = m.rows();
  IntMatrix out(n - 1, n - 1);
  for (Eigen::Index i = 0, oi = 0; i < n; ++i) {
    if (i == row) continue;
    for (Eigen::Index j = 0, oj = 0; j < n; ++j) {
      if (j == col) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

// Inverse of a unit modulo l by extended Euclid.
Integer unit_inverse(Integer a, Integer l) {
  Integer old_r = mod(a, l), r = l, old_s = 1, s = 0;
  while (r != 0) {
    const Integer q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1) throw std::domain_error("not a unit modulo l");
  return mod(old_s, l);
}

IntMatrix adjugate(const IntMatrix& m) {
  const Eigen::Index n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Integer cofactor = bareiss_determinant(minor_matrix(m, i, j));
      adj(j, i) = (i + j) % 2 == 0 ? cofactor : -cofactor;
    }
  return adj;
}

}  // namespace

ModMatrix::ModMatrix(const IntMatrix& entries, Integer modulus) : modulus_(modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
  if (entries.rows() != entries.cols()) throw std::invalid_argument("matrix must be square");
  entries_ = entries.unaryExpr([modulus](Integer x) { return mod(x, modulus); });
}

ModMatrix ModMatrix::identity(int rank, Integer modulus) {
  return ModMatrix(identity_matrix(rank), modulus);
}

std::uint64_t key_space(int rank, Integer modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
  std::uint64_t total = 1;
  for (int t = 0; t < rank * rank; ++t) {
    if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(modulus))
      throw CapExceededError("matrix keys do not fit in 64 bits for this rank and modulus");
    total *= static_cast<std::uint64_t>(modulus);
  }
  return total;
}

std::uint64_t ModMatrix::key() const {
  key_space(rank(), modulus_);
  std::uint64_t key = 0;
  for (Eigen::Index i = 0; i < entries_.rows(); ++i)
    for (Eigen::Index j = 0; j < entries_.cols(); ++j)
      key = key * static_cast<std::uint64_t>(modulus_) + static_cast<std::uint64_t>(entries_(i, j));
  return key;
}

ModMatrix ModMatrix::from_key(std::uint64_t key, int rank, Integer modulus) {
  IntMatrix entries(rank, rank);
  const auto l = static_cast<std::uint64_t>(modulus);
  for (Eigen::Index i = rank - 1; i >= 0; --i)
    for (Eigen::Index j = rank - 1; j >= 0; --j) {
      entries(i, j) = static_cast<Integer>(key % l);
      key /= l;
    }
  return ModMatrix(entries, modulus);
}

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
  if (a.modulus_ != b.modulus_) throw std::invalid_argument("mixed moduli in product");
  if (a.rank() != b.rank()) throw std::invalid_argument("size mismatch in product");
  // Entries are below the modulus, so r * l^2 must stay in range.
  return ModMatrix(a.entries_ * b.entries_, a.modulus_);
}

IntMatrix identity_matrix(int rank) {
  check_rank(rank);
  return IntMatrix::Identity(rank, rank);
}

IntMatrix elementary(int i, int j, int rank) {
  check_index(i, rank);
  check_index(j, rank);
  if (i == j) throw std::invalid_argument("elementary matrix needs i != j");
  IntMatrix m = identity_matrix(rank);
  m(i - 1, j - 1) = 1;
  return m;
}

IntMatrix diag_t(int i, int rank) {
  check_index(i, rank);
  IntMatrix m = identity_matrix(rank);
  m(i - 1, i - 1) = -1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("size mismatch in product");
  IntMatrix out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Integer sum = 0;
      for (Eigen::Index k = 0; k < a.cols(); ++k)
        sum = checked_add(sum, checked_mul(a(i, k), b(k, j)));
      out(i, j) = sum;
    }
  return out;
}

IntMatrix power(const IntMatrix& m, Integer exponent) {
  IntMatrix base = exponent < 0 ? invert(m) : m;
  IntMatrix out = IntMatrix::Identity(m.rows(), m.cols());
  for (Integer e = exponent < 0 ? -exponent : exponent; e > 0; e >>= 1) {
    if (e & 1) out = multiply(out, base);
    if (e > 1) base = multiply(base, base);
  }
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  return bareiss_determinant(m);
}

bool is_unimodular(const IntMatrix& m) {
  const Integer d = determinant(m);
  return d == 1 || d == -1;
}

IntMatrix invert(const IntMatrix& m) {
  const Integer d = determinant(m);
  if (d != 1 && d != -1) throw NotUnimodularError("matrix is not in GL_r(Z): det = " + std::to_string(d));
  IntMatrix adj = adjugate(m);
  return d == 1 ? adj : IntMatrix(-adj);
}

IntMatrix commutator(const IntMatrix& a, const IntMatrix& b) {
  return multiply(multiply(a, b), multiply(invert(a), invert(b)));
}

ModMatrix reduce_mod(const IntMatrix& m, Integer modulus) { return ModMatrix(m, modulus); }

Integer determinant(const ModMatrix& m) {
  return mod(bareiss_determinant(m.entries()), m.modulus());
}

bool is_invertible(const ModMatrix& m) {
  return std::gcd(determinant(m), m.modulus()) == 1;
}

ModMatrix inverse(const ModMatrix& m) {
  const Integer d = determinant(m);
  if (std::gcd(d, m.modulus()) != 1) throw std::domain_error("matrix is singular modulo l");
  const Integer d_inv = unit_inverse(d, m.modulus());
  return ModMatrix(IntMatrix(adjugate(m.entries()) * d_inv), m.modulus());
}

ModMatrix power(const ModMatrix& m, Integer exponent) {
  ModMatrix base = exponent < 0 ? inverse(m) : m;
  ModMatrix out = ModMatrix::identity(m.rank(), m.modulus());
  for (Integer e = exponent < 0 ? -exponent : exponent; e > 0; e >>= 1) {
    if (e & 1) out = out * base;
    if (e > 1) base = base * base;
  }
  return out;
}

bool in_principal_congruence(const IntMatrix& m, Integer modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
  const IntMatrix diff = m - IntMatrix::Identity(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < diff.size(); ++i)
    if (diff(i) % modulus != 0) return false;
  return is_unimodular(m);
}

std::vector<IntMatrix> gamma2_generators(int rank) {
  if (rank < 2) throw std::invalid_argument("gamma2_generators needs r >= 2");
  std::vector<IntMatrix> out;
  for (int i = 1; i <= rank; ++i)
    for (int j = 1; j <= rank; ++j)
      if (i != j) out.push_back(power(elementary(i, j, rank), 2));
  for (int i = 1; i <= rank; ++i) out.push_back(diag_t(i, rank));
  return out;
}

std::vector<IntMatrix> gamma2_alt_generators(int i, int rank) {
  check_index(i, rank);
  std::vector<IntMatrix> out;
  for (int k = 1; k <= rank; ++k)
    if (k != i) out.push_back(elementary(i, k, rank));
  for (int j = 1; j <= rank; ++j)
    if (j != i) out.push_back(power(elementary(j, i, rank), 2));
  for (int j = 1; j <= rank; ++j) out.push_back(diag_t(j, rank));
  return out;
}

IntMatrix to_matrix(const GeneratorSpec& spec, int rank) {
  using Kind = GeneratorSpec::Kind;
  switch (spec.kind) {
    case Kind::elementary:
      return elementary(spec.i, spec.j, rank);
    case Kind::elementary_squared:
      return power(elementary(spec.i, spec.j, rank), 2);
    case Kind::double_elementary:
      return multiply(elementary(spec.i, spec.k, rank), elementary(spec.j, spec.k, rank));
    case Kind::diagonal:
      return diag_t(spec.i, rank);
  }
  throw std::logic_error("unknown generator kind");
}

std::string to_string(const GeneratorSpec& spec) {
  using Kind = GeneratorSpec::Kind;
  std::ostringstream out;
  switch (spec.kind) {
    case Kind::elementary:
      out << 'X' << spec.i << ',' << spec.j;
      break;
    case Kind::elementary_squared:
      out << 'X' << spec.i << ',' << spec.j << "^2";
      break;
    case Kind::double_elementary:
      out << 'X' << spec.i << ',' << spec.k << " X" << spec.j << ',' << spec.k;
      break;
    case Kind::diagonal:
      out << 'T' << spec.i;
      break;
  }
  return out.str();
}

std::vector<GeneratorSpec> sv_generator_specs(const ParityVector& v) {
  using Kind = GeneratorSpec::Kind;
  const int r = static_cast<int>(v.size());
  if (r < 2) throw std::invalid_argument("S(v) needs r >= 2");
  std::vector<GeneratorSpec> out;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      if (i != j && v(i - 1) % 2 == 0) out.push_back({Kind::elementary, i, j, 0});
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j)
      for (int k = 1; k <= r; ++k)
        if (k != i && k != j && v(i - 1) % 2 == 1 && v(j - 1) % 2 == 1)
          out.push_back({Kind::double_elementary, i, j, k});
  return out;
}

std::vector<ModMatrix> sv_generators(const ParityVector& v) {
  std::vector<ModMatrix> out;
  for (const GeneratorSpec& spec : sv_generator_specs(v))
    out.push_back(reduce_mod(to_matrix(spec, static_cast<int>(v.size())), 2));
  return out;
}

bool in_sv(const ModMatrix& m, const ParityVector& v) {
  if (m.modulus() != 2) throw std::invalid_argument("S(v) lives in GL_r(Z/2Z)");
  if (v.size() != m.rank()) throw std::invalid_argument("parity vector length mismatch");
  if (!is_invertible(m)) throw std::domain_error("matrix is singular modulo 2");
  const RowVector<Integer> image = v * m.entries();
  for (Eigen::Index j = 0; j < image.size(); ++j)
    if (mod(image(j), 2) != mod(v(j), 2)) return false;
  return true;
}

ModMatrix evaluate(const GenWord& word, const std::vector<ModMatrix>& generators) {
  if (generators.empty()) throw std::invalid_argument("evaluate needs the generator list");
  ModMatrix out = ModMatrix::identity(generators.front().rank(), generators.front().modulus());
  for (const GenSyllable& s : word) out = out * power(generators.at(s.generator), s.exponent);
  return out;
}

IntMatrix evaluate(const GenWord& word, const std::vector<IntMatrix>& generators) {
  if (generators.empty()) throw std::invalid_argument("evaluate needs the generator list");
  IntMatrix out = IntMatrix::Identity(generators.front().rows(), generators.front().cols());
  for (const GenSyllable& s : word) out = multiply(out, power(generators.at(s.generator), s.exponent));
  return out;
}

namespace {

int find_spec(const std::vector<GeneratorSpec>& specs, const GeneratorSpec& wanted) {
  const auto it = std::find(specs.begin(), specs.end(), wanted);
  if (it == specs.end()) throw std::logic_error("generator missing from family: " + to_string(wanted));
  return static_cast<int>(it - specs.begin());
}

void push_merged(GenWord& word, GenSyllable s) {
  if (s.exponent == 0) return;
  if (!word.empty() && word.back().generator == s.generator) {
    word.back().exponent += s.exponent;
    if (word.back().exponent == 0) word.pop_back();
    return;
  }
  word.push_back(s);
}

// Row-operation bookkeeping for the S(v) reduction over Z/2Z.
class SvReducer {
 public:
  SvReducer(const ModMatrix& m, const ParityVector& v)
      : a_(m.entries()), v_(v), r_(static_cast<int>(v.size())), specs_(sv_generator_specs(v)) {}

  GenWord run() {
    for (int c = 1; c <= r_; ++c) {
      fix_pivot(c);
      clear_column(c);
    }
    if (a_ != IntMatrix::Identity(r_, r_)) throw std::logic_error("S(v) reduction did not reach I");
    return word_;
  }

 private:
  Integer at(int row, int col) const { return a_(row - 1, col - 1); }
  bool even_loop(int i) const { return v_(i - 1) % 2 == 0; }

  // Left multiplication by X_ij adds row j to row i.
  void add_row(int from, int to) {
    a_.row(to - 1) = (a_.row(to - 1) + a_.row(from - 1)).unaryExpr([](Integer x) { return x % 2; });
  }

  void apply(const GeneratorSpec& spec) {
    using Kind = GeneratorSpec::Kind;
    if (spec.kind == Kind::elementary) {
      add_row(spec.j, spec.i);
    } else {
      add_row(spec.k, spec.i);
      add_row(spec.k, spec.j);
    }
    // Every generator is an involution mod 2, so the product form of the
    // witness lists the applied generators in application order.
    push_merged(word_, {find_spec(specs_, spec), 1});
  }

  GeneratorSpec elementary_spec(int i, int j) const {
    return {GeneratorSpec::Kind::elementary, i, j, 0};
  }
  GeneratorSpec double_spec(int a, int b, int column) const {
    return {GeneratorSpec::Kind::double_elementary, std::min(a, b), std::max(a, b), column};
  }

  void fix_pivot(int c) {
    if (at(c, c) == 1) return;
    std::vector<int> candidates;
    for (int j = c + 1; j <= r_; ++j)
      if (at(j, c) == 1) candidates.push_back(j);
    if (candidates.empty()) throw std::domain_error("matrix is singular modulo 2");

    if (even_loop(c)) {
      apply(elementary_spec(c, candidates.front()));
      return;
    }
    for (int j : candidates)
      for (int k = 1; k <= r_; ++k)
        if (k != c && k != j && !even_loop(k)) {
          apply(double_spec(c, k, j));
          return;
        }
    // v has ones exactly at c and j: swap rows c and j with
    // (X_ck X_jk * X_kc * X_kj)^2, which is the row swap mod 2.
    const int j = candidates.front();
    int k = 1;
    while (k == c || k == j) ++k;
    if (k > r_) throw PreconditionError("S(v) reduction needs r >= 3");
    for (int round = 0; round < 2; ++round) {
      apply(elementary_spec(k, j));
      apply(elementary_spec(k, c));
      apply(double_spec(c, j, k));
    }
  }

  void clear_column(int c) {
    std::vector<int> odd_rows;
    for (int j = 1; j <= r_; ++j) {
      if (j == c || at(j, c) == 0) continue;
      if (even_loop(j))
        apply(elementary_spec(j, c));
      else
        odd_rows.push_back(j);
    }
    if (odd_rows.size() % 2 != 0) throw PreconditionError("matrix is not in S(v)");
    for (std::size_t t = 0; t < odd_rows.size(); t += 2)
      apply(double_spec(odd_rows[t], odd_rows[t + 1], c));
  }

  IntMatrix a_;
  ParityVector v_;
  int r_;
  std::vector<GeneratorSpec> specs_;
  GenWord word_;
};

}  // namespace

GenWord sv_reduce(const ModMatrix& m, const ParityVector& v) {
  if (!in_sv(m, v)) throw PreconditionError("matrix is not in S(v)");
  return SvReducer(m, v).run();
}

std::vector<GeneratorSpec> glz_generator_specs(int rank) {
  check_rank(rank);
  std::vector<GeneratorSpec> out;
  for (int i = 1; i <= rank; ++i)
    for (int j = 1; j <= rank; ++j)
      if (i != j) out.push_back({GeneratorSpec::Kind::elementary, i, j, 0});
  out.push_back({GeneratorSpec::Kind::diagonal, 1, 0, 0});
  return out;
}

std::vector<IntMatrix> glz_generators(int rank) {
  std::vector<IntMatrix> out;
  for (const GeneratorSpec& spec : glz_generator_specs(rank)) out.push_back(to_matrix(spec, rank));
  return out;
}

GenWord decompose_glz(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
  if (!is_unimodular(m)) throw NotUnimodularError("decompose_glz needs det = +-1");
  const int r = static_cast<int>(m.rows());
  const std::vector<GeneratorSpec> specs = glz_generator_specs(r);
  IntMatrix a = m;
  // Left operations in application order; the product witness is their
  // inverses in the same order.
  GenWord ops;

  auto add_multiple = [&](int from, int to, Integer factor) {
    if (factor == 0) return;
    for (int col = 0; col < r; ++col)
      a(to - 1, col) = checked_add(a(to - 1, col), checked_mul(factor, a(from - 1, col)));
    ops.push_back({find_spec(specs, {GeneratorSpec::Kind::elementary, to, from, 0}), factor});
  };

  for (int c = 1; c <= r; ++c) {
    while (true) {
      int pivot = 0;
      int nonzero = 0;
      for (int row = c; row <= r; ++row) {
        if (a(row - 1, c - 1) == 0) continue;
        ++nonzero;
        if (pivot == 0 || std::llabs(a(row - 1, c - 1)) < std::llabs(a(pivot - 1, c - 1))) pivot = row;
      }
      if (nonzero == 0) throw NotUnimodularError("singular column during reduction");
      if (nonzero == 1) {
        if (pivot != c) {
          add_multiple(pivot, c, 1);
          add_multiple(c, pivot, -1);
        }
        break;
      }
      for (int row = c; row <= r; ++row)
        if (row != pivot && a(row - 1, c - 1) != 0)
          add_multiple(pivot, row, -(a(row - 1, c - 1) / a(pivot - 1, c - 1)));
    }
    const Integer unit = a(c - 1, c - 1);
    if (unit != 1 && unit != -1) throw NotUnimodularError("pivot is not a unit");
    for (int row = 1; row <= r; ++row)
      if (row != c) add_multiple(c, row, -a(row - 1, c - 1) * unit);
  }

  // a is now diagonal with entries +-1.
  const int t1 = find_spec(specs, {GeneratorSpec::Kind::diagonal, 1, 0, 0});
  std::vector<int> negative;
  for (int i = 1; i <= r; ++i)
    if (a(i - 1, i - 1) == -1) negative.push_back(i);
  if (negative.size() % 2 == 1) {
    a.row(0) = -a.row(0);
    ops.push_back({t1, 1});
    negative.clear();
    for (int i = 1; i <= r; ++i)
      if (a(i - 1, i - 1) == -1) negative.push_back(i);
  }
  // (X_pq X_qp^-1 X_pq)^2 acts as -I on rows p and q.
  for (std::size_t t = 0; t + 1 < negative.size(); t += 2) {
    const int p = negative[t];
    const int q = negative[t + 1];
    for (int round = 0; round < 2; ++round) {
      add_multiple(q, p, 1);
      add_multiple(p, q, -1);
      add_multiple(q, p, 1);
    }
  }
  if (a != IntMatrix::Identity(r, r)) throw std::logic_error("GL_r(Z) reduction did not reach I");

  GenWord word;
  for (const GenSyllable& s : ops) push_merged(word, {s.generator, -s.exponent});
  return word;
}

MatrixSet::MatrixSet(int rank, Integer modulus, std::vector<std::uint64_t> keys)
    : rank_(rank), modulus_(modulus), keys_(std::move(keys)) {
  std::sort(keys_.begin(), keys_.end());
  keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
}

bool MatrixSet::contains(const ModMatrix& m) const {
  if (m.rank() != rank_ || m.modulus() != modulus_) return false;
  return std::binary_search(keys_.begin(), keys_.end(), m.key());
}

bool MatrixSet::includes(const MatrixSet& other) const {
  if (other.rank_ != rank_ || other.modulus_ != modulus_) return false;
  return std::includes(keys_.begin(), keys_.end(), other.keys_.begin(), other.keys_.end());
}

std::vector<ModMatrix> MatrixSet::elements() const {
  std::vector<ModMatrix> out;
  out.reserve(keys_.size());
  for (std::uint64_t key : keys_) out.push_back(ModMatrix::from_key(key, rank_, modulus_));
  return out;
}

MatrixSet closure(const std::vector<ModMatrix>& generators, int rank, Integer modulus,
                  std::size_t cap) {
  key_space(rank, modulus);
  std::vector<ModMatrix> step;
  for (const ModMatrix& g : generators) {
    if (g.rank() != rank) throw std::invalid_argument("generator size mismatch in closure");
    if (g.modulus() != modulus) throw std::invalid_argument("mixed moduli in closure");
    if (!is_invertible(g)) throw std::domain_error("closure generator is not invertible");
    step.push_back(g);
    step.push_back(inverse(g));
  }
  const ModMatrix id = ModMatrix::identity(rank, modulus);
  std::unordered_set<std::uint64_t> seen{id.key()};
  std::deque<ModMatrix> frontier{id};
  while (!frontier.empty()) {
    const ModMatrix current = std::move(frontier.front());
    frontier.pop_front();
    for (const ModMatrix& g : step) {
      ModMatrix next = g * current;
      if (!seen.insert(next.key()).second) continue;
      if (seen.size() > cap)
        throw CapExceededError("closure exceeded cap of " + std::to_string(cap) + " elements");
      frontier.push_back(std::move(next));
    }
  }
  return MatrixSet(rank, modulus, std::vector<std::uint64_t>(seen.begin(), seen.end()));
}

MatrixSet enumerate_gl(int rank, Integer modulus) {
  return enumerate_gl(rank, modulus, [](const ModMatrix&) { return true; });
}

MatrixSet sv_set(const ParityVector& v) {
  return enumerate_gl(static_cast<int>(v.size()), 2,
                      [&v](const ModMatrix& m) { return in_sv(m, v); });
}

}  // namespace loopstab
