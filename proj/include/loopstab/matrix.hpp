#pragma once

#include "loopstab/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace loopstab {

// r x r matrix over Z/lZ with entries kept in 0..l-1.
class ModMatrix {
 public:
  ModMatrix(const IntMatrix& entries, Integer modulus);

  static ModMatrix identity(int rank, Integer modulus);

  int rank() const { return static_cast<int>(entries_.rows()); }
  Integer modulus() const { return modulus_; }
  const IntMatrix& entries() const { return entries_; }
  Integer operator()(Eigen::Index row, Eigen::Index col) const { return entries_(row, col); }

  // Base-l packing of the entries, row-major; requires l^(r*r) < 2^64.
  std::uint64_t key() const;
  static ModMatrix from_key(std::uint64_t key, int rank, Integer modulus);

  friend ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);
  friend bool operator==(const ModMatrix& a, const ModMatrix& b) {
    return a.modulus_ == b.modulus_ && a.entries_ == b.entries_;
  }

 private:
  IntMatrix entries_;
  Integer modulus_ = 2;
};

IntMatrix identity_matrix(int rank);
// X_ij: identity plus a one at row i, column j (1-based, i != j).
IntMatrix elementary(int i, int j, int rank);
// T_i: identity with -1 at (i, i).
IntMatrix diag_t(int i, int rank);

// Exact products; throws ArithmeticOverflowError instead of wrapping.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix power(const IntMatrix& m, Integer exponent);
Integer determinant(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);
// Adjugate over the determinant; throws NotUnimodularError unless det = +-1.
IntMatrix invert(const IntMatrix& m);
// [a, b] = a b a^-1 b^-1 for unimodular a, b.
IntMatrix commutator(const IntMatrix& a, const IntMatrix& b);

ModMatrix reduce_mod(const IntMatrix& m, Integer modulus);
Integer determinant(const ModMatrix& m);
bool is_invertible(const ModMatrix& m);
ModMatrix inverse(const ModMatrix& m);
ModMatrix power(const ModMatrix& m, Integer exponent);

// M = I entrywise mod l and det M = +-1.
bool in_principal_congruence(const IntMatrix& m, Integer modulus);

// {X_ij^2 : i != j} in (i, j) order, then T_1..T_r.
std::vector<IntMatrix> gamma2_generators(int rank);
// {X_ik : k != i}, then {X_ji^2 : j != i}, then T_1..T_r.
std::vector<IntMatrix> gamma2_alt_generators(int i, int rank);

// Names a member of one of the generator families (indices 1-based).
struct GeneratorSpec {
  enum class Kind { elementary, elementary_squared, double_elementary, diagonal };
  Kind kind = Kind::elementary;
  // elementary / squared: X_ij. double: X_ik X_jk. diagonal: T_i.
  int i = 0;
  int j = 0;
  int k = 0;

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

IntMatrix to_matrix(const GeneratorSpec& spec, int rank);
std::string to_string(const GeneratorSpec& spec);

// X_ij for v_i = 0 in (i, j) order, then X_ik X_jk for v_i = v_j = 1, i < j,
// in (i, j, k) order.
std::vector<GeneratorSpec> sv_generator_specs(const ParityVector& v);
std::vector<ModMatrix> sv_generators(const ParityVector& v);

// v * M = v over Z/2Z. Throws for singular M.
bool in_sv(const ModMatrix& m, const ParityVector& v);

// Word over a fixed generator list; syllable.generator indexes that list.
struct GenSyllable {
  int generator = 0;
  Integer exponent = 1;

  friend bool operator==(const GenSyllable&, const GenSyllable&) = default;
};
using GenWord = std::vector<GenSyllable>;

// Left-to-right product of the word's syllables.
ModMatrix evaluate(const GenWord& word, const std::vector<ModMatrix>& generators);
IntMatrix evaluate(const GenWord& word, const std::vector<IntMatrix>& generators);

// Word over sv_generators(v) whose product is M, read off the column-by-column
// reduction of M to the identity by left multiplication with generators.
GenWord sv_reduce(const ModMatrix& m, const ParityVector& v);

// X_ij for all i != j in (i, j) order, followed by T_1.
std::vector<GeneratorSpec> glz_generator_specs(int rank);
std::vector<IntMatrix> glz_generators(int rank);
// Word over glz_generators whose product is M (Euclidean row reduction).
GenWord decompose_glz(const IntMatrix& m);

// Sorted set of matrices over Z/lZ of one size, stored by key.
class MatrixSet {
 public:
  MatrixSet(int rank, Integer modulus, std::vector<std::uint64_t> keys);

  int rank() const { return rank_; }
  Integer modulus() const { return modulus_; }
  std::size_t size() const { return keys_.size(); }
  bool contains(const ModMatrix& m) const;
  bool includes(const MatrixSet& other) const;
  const std::vector<std::uint64_t>& keys() const { return keys_; }
  std::vector<ModMatrix> elements() const;

  friend bool operator==(const MatrixSet&, const MatrixSet&) = default;

 private:
  int rank_;
  Integer modulus_;
  std::vector<std::uint64_t> keys_;
};

inline constexpr std::size_t kDefaultClosureCap = 10'000'000;

// Subgroup generated by invertible `generators` (breadth-first, with
// inverses). Throws CapExceededError past `cap` elements.
MatrixSet closure(const std::vector<ModMatrix>& generators, int rank, Integer modulus,
                  std::size_t cap = kDefaultClosureCap);

// Every invertible r x r matrix over Z/lZ satisfying `keep`, by exhaustive
// enumeration of all l^(r*r) matrices.
template <typename Predicate>
MatrixSet enumerate_gl(int rank, Integer modulus, Predicate keep);
MatrixSet enumerate_gl(int rank, Integer modulus);

// Subgroup members of GL_r(Z/2Z) fixing v under right multiplication.
MatrixSet sv_set(const ParityVector& v);

std::uint64_t key_space(int rank, Integer modulus);

template <typename Predicate>
MatrixSet enumerate_gl(int rank, Integer modulus, Predicate keep) {
  const std::uint64_t total = key_space(rank, modulus);
  std::vector<std::uint64_t> keys;
  for (std::uint64_t key = 0; key < total; ++key) {
    const ModMatrix m = ModMatrix::from_key(key, rank, modulus);
    if (is_invertible(m) && keep(m)) keys.push_back(key);
  }
  return MatrixSet(rank, modulus, std::move(keys));
}

}  // namespace loopstab
