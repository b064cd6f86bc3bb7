#pragma once

// Test-only reference computations, kept independent of the library's
// algorithms: letter-by-letter free reduction, point-by-point permutation
// products and bit-row enumeration of GL_r(F_2).

#include "loopstab/free_group.hpp"
#include "loopstab/matrix.hpp"
#include "loopstab/permutation.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <set>
#include <vector>

namespace oracle {

// Signed letters: +g for g, -g for g^-1.
inline std::vector<int> letters(const loopstab::Word& w) {
  std::vector<int> out;
  for (const auto& s : w.syllables())
    for (long long t = 0; t < (s.exponent < 0 ? -s.exponent : s.exponent); ++t)
      out.push_back(s.exponent < 0 ? -s.gen : s.gen);
  return out;
}

inline std::vector<int> reduce_letters(const std::vector<int>& in) {
  std::vector<int> stack;
  for (int x : in) {
    if (!stack.empty() && stack.back() == -x)
      stack.pop_back();
    else
      stack.push_back(x);
  }
  return stack;
}

inline loopstab::Word random_word(std::mt19937_64& rng, int rank, int max_syllables,
                                  int max_exponent = 3) {
  std::uniform_int_distribution<int> gen(1, rank);
  std::uniform_int_distribution<int> count(0, max_syllables);
  std::uniform_int_distribution<int> exp(-max_exponent, max_exponent);
  std::vector<loopstab::Syllable> s;
  for (int t = count(rng); t > 0; --t) {
    int e = 0;
    while (e == 0) e = exp(rng);
    s.push_back({gen(rng), e});
  }
  return loopstab::Word(std::move(s));
}

// Point images as a plain vector, 1-based values.
using Map = std::vector<int>;

inline Map cycle_map(int n, const std::vector<int>& pts) {
  Map m(n);
  for (int p = 0; p < n; ++p) m[p] = p + 1;
  for (std::size_t t = 0; t < pts.size(); ++t) m[pts[t] - 1] = pts[(t + 1) % pts.size()];
  return m;
}

inline Map inverse_map(const Map& m) {
  Map out(m.size());
  for (std::size_t p = 0; p < m.size(); ++p) out[m[p] - 1] = static_cast<int>(p) + 1;
  return out;
}

// Applies letters right-to-left to each point: (ab)(p) = a(b(p)).
inline Map evaluate_letters(const std::vector<int>& word, const std::vector<Map>& gens, int n) {
  Map out(n);
  for (int p = 1; p <= n; ++p) {
    int q = p;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      const Map& g = gens[std::abs(*it) - 1];
      q = *it > 0 ? g[q - 1] : inverse_map(g)[q - 1];
    }
    out[p - 1] = q;
  }
  return out;
}

inline loopstab::Permutation random_even_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> images(n);
  for (int p = 0; p < n; ++p) images[p] = p + 1;
  std::shuffle(images.begin(), images.end(), rng);
  loopstab::Permutation p(images);
  if (loopstab::parity(p) == loopstab::Parity::odd) {
    std::swap(images[0], images[1]);
    p = loopstab::Permutation(images);
  }
  return p;
}

// GL_r(F_2) by enumerating bit rows and testing rank with XOR elimination.
inline std::vector<std::vector<std::uint32_t>> gl_f2_rows(int r) {
  std::vector<std::vector<std::uint32_t>> out;
  const std::uint32_t row_count = 1u << r;
  std::vector<std::uint32_t> rows(r, 0);
  auto independent = [&](const std::vector<std::uint32_t>& rs) {
    std::vector<std::uint32_t> basis;
    for (std::uint32_t x : rs) {
      for (std::uint32_t b : basis) x = std::min(x, x ^ b);
      if (x == 0) return false;
      basis.push_back(x);
      std::sort(basis.rbegin(), basis.rend());
    }
    return true;
  };
  std::uint64_t total = 1;
  for (int t = 0; t < r; ++t) total *= row_count;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int t = 0; t < r; ++t) {
      rows[t] = static_cast<std::uint32_t>(c % row_count);
      c /= row_count;
    }
    if (independent(rows)) out.push_back(rows);
  }
  return out;
}

// Bit c of a row is the entry in column c (0-based).
inline loopstab::ModMatrix from_rows(const std::vector<std::uint32_t>& rows) {
  const int r = static_cast<int>(rows.size());
  loopstab::IntMatrix m(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m(i, j) = (rows[i] >> j) & 1u;
  return loopstab::ModMatrix(m, 2);
}

// v M = v over F_2 with v given as bits; computed from the rows.
inline bool fixes_vector(const std::vector<std::uint32_t>& rows, std::uint32_t v) {
  std::uint32_t image = 0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if ((v >> i) & 1u) image ^= rows[i];
  return image == v;
}

inline std::set<std::uint64_t> sv_keys(int r, std::uint32_t v) {
  std::set<std::uint64_t> out;
  for (const auto& rows : gl_f2_rows(r))
    if (fixes_vector(rows, v)) out.insert(from_rows(rows).key());
  return out;
}

inline loopstab::ParityVector parity_bits(int r, std::uint32_t v) {
  loopstab::ParityVector out(r);
  for (int i = 0; i < r; ++i) out(i) = (v >> i) & 1u;
  return out;
}

}  // namespace oracle
