#pragma once

#include "loopstab/types.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace loopstab {

// One run g_gen^exponent of a word; generators are numbered from 1.
struct Syllable {
  int gen = 1;
  Integer exponent = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// Freely reduced word in F_r, stored in run-length form.
//
// Adjacent syllables always carry distinct generators and no exponent is
// zero; the empty word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> syllables);

  static Word generator(int gen, Integer exponent = 1);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  std::size_t syllable_count() const { return syllables_.size(); }
  // Total number of letters, i.e. the sum of |exponent| over syllables.
  Integer length() const;
  // Largest generator index occurring in the word (0 for the empty word).
  int max_generator() const;
  bool contains_generator(int gen) const;

  // Appends `other` to the right, cancelling at the seam.
  Word& operator*=(const Word& other);
  void push_back(Syllable s);

  friend Word operator*(Word lhs, const Word& rhs) {
    lhs *= rhs;
    return lhs;
  }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syllables_;
};

Word multiply(const Word& u, const Word& v);
Word invert(const Word& w);
Word power(const Word& w, Integer exponent);
// [a, b] = a b a^-1 b^-1
Word commutator(const Word& a, const Word& b);

Integer exponent_sum(const Word& w, int gen);
AbelianVector abelianize(const Word& w, int rank);
bool in_derived_subgroup(const Word& w);

// Generators print as g1, g2, ...; exponents other than 1 as g1^-2.
std::string to_string(const Word& w);

// Parses words such as "g1 g2^-1 g3^4", "y x y^-1 x" or "zx". The letters
// x, y, z (and their capitals as inverses) alias g1, g2, g3.
Word parse_word(std::string_view text);

// Endomorphism of F_r given by the images of g_1..g_r.
//
// Invertibility is not part of the type; constructions that must be
// automorphisms carry an explicit inverse (see stabilizer.hpp).
class Endo {
 public:
  Endo(int rank, std::vector<Word> images);

  static Endo identity(int rank);

  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(int gen) const { return images_.at(gen - 1); }

  friend bool operator==(const Endo&, const Endo&) = default;

 private:
  std::vector<Word> images_;
};

Word apply(const Endo& e, const Word& w);
// Composite e o f: g_j -> e(f(g_j)).
Endo compose(const Endo& e, const Endo& f);
// (B(e))_{ij} = exponent sum of g_i in e(g_j).
IntMatrix b_matrix(const Endo& e);

// g_j -> g_j^-1, all other generators fixed.
Endo tau(int j, int rank);
// g_j -> prefix * g_j, all other generators fixed.
Endo transvection(int j, const Word& prefix, int rank);
// Two-sided inverse of transvection(j, prefix) when prefix avoids g_j:
// g_j -> prefix^-1 * g_j.
Endo transvection_inverse(int j, const Word& prefix, int rank);

std::string to_string(const Endo& e);

}  // namespace loopstab
