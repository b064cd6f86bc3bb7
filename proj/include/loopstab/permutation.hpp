#pragma once

#include "loopstab/free_group.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace loopstab {

enum class Parity { even, odd };

// Bijection of the points 1..n.
//
// Composition is right-to-left: compose(f, g)(p) = f(g(p)).
class Permutation {
 public:
  Permutation() = default;
  // images[p-1] is the image of point p.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // A single cycle (a_1, ..., a_k) on n points.
  static Permutation cycle(int n, const std::vector<int>& points);
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_.at(point - 1); }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

Permutation compose(const Permutation& f, const Permutation& g);
Permutation inverse(const Permutation& p);
Permutation power(const Permutation& p, long long exponent);
Parity parity(const Permutation& p);
// Disjoint cycles, each starting at its least point, sorted by that point;
// fixed points omitted.
std::vector<std::vector<int>> cycles(const Permutation& p);

// "(1,2,4)(3,5)"; the identity prints as "()".
std::string to_string(const Permutation& p);
// Parses cycle notation such as "(1,2,4)(3,5)" on n points.
Permutation parse_cycles(int n, std::string_view text);

// Word in the two letters S and W, the images of which are sigma and omega.
class SWWord {
 public:
  enum class Letter { S = 1, W = 2 };

  SWWord() = default;
  explicit SWWord(Word word);
  static SWWord letter(Letter l, Integer exponent = 1);

  // Underlying free word, S = g1 and W = g2.
  const Word& word() const { return word_; }
  bool empty() const { return word_.empty(); }
  std::size_t syllable_count() const { return word_.syllable_count(); }
  Integer exponent_sum(Letter l) const;

  friend SWWord operator*(const SWWord& a, const SWWord& b) { return SWWord(a.word_ * b.word_); }
  friend bool operator==(const SWWord&, const SWWord&) = default;

 private:
  Word word_;
};

SWWord invert(const SWWord& w);
// "S W S^-1 W^-1"; the empty word prints as "1".
std::string to_string(const SWWord& w);

// Word in sigma = (1,...,m), omega = (1,m+1,...,n) evaluating to the 3-cycle
// (k,i,j), with both exponent sums zero.
SWWord three_cycle_word(int k, int i, int j, int m, int n);

// Word in sigma = (1,...,m), omega = (1,m+1,...,n) evaluating to the even
// permutation `target` of 1..n, with both exponent sums zero.
SWWord decompose_even(const Permutation& target, int m);

// Product of the syllables, right-to-left, with S -> sigma and W -> omega.
Permutation evaluate(const SWWord& w, const Permutation& sigma, const Permutation& omega);

// Free-group word with S -> g_i and W -> g_k.
Word substitute(const SWWord& w, int i, int k);

}  // namespace loopstab
