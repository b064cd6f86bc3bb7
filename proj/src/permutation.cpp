#include "loopstab/permutation.hpp"

#include "loopstab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace loopstab {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int q : images_) {
    if (q < 1 || q > n || seen[q])
      throw std::invalid_argument("permutation images must be a bijection of 1..n");
    seen[q] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative permutation size");
  std::vector<int> images(n);
  for (int p = 0; p < n; ++p) images[p] = p + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::cycle(int n, const std::vector<int>& points) {
  return from_cycles(n, {points});
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images = identity(n).images();
  std::vector<bool> used(n + 1, false);
  for (const auto& c : cycles) {
    for (std::size_t t = 0; t < c.size(); ++t) {
      const int p = c[t];
      if (p < 1 || p > n) throw std::invalid_argument("cycle point out of range");
      if (used[p]) throw std::invalid_argument("cycles are not disjoint");
      used[p] = true;
      images[p - 1] = c[(t + 1) % c.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int p = 0; p < size(); ++p)
    if (images_[p] != p + 1) return false;
  return true;
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> images(g.size());
  for (int p = 1; p <= g.size(); ++p) images[p - 1] = f(g(p));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> images(p.size());
  for (int q = 1; q <= p.size(); ++q) images[p(q) - 1] = q;
  return Permutation(std::move(images));
}

Permutation power(const Permutation& p, long long exponent) {
  // Per-point orbit walk; exponents are reduced modulo each cycle length.
  const int n = p.size();
  std::vector<int> images(n, 0);
  for (const auto& c : cycles(p)) {
    const long long len = static_cast<long long>(c.size());
    const long long shift = ((exponent % len) + len) % len;
    for (std::size_t t = 0; t < c.size(); ++t)
      images[c[t] - 1] = c[(t + shift) % c.size()];
  }
  for (int q = 1; q <= n; ++q)
    if (images[q - 1] == 0) images[q - 1] = q;
  return Permutation(std::move(images));
}

Parity parity(const Permutation& p) {
  std::size_t transpositions = 0;
  for (const auto& c : cycles(p)) transpositions += c.size() - 1;
  return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

std::vector<std::vector<int>> cycles(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(p.size() + 1, false);
  for (int start = 1; start <= p.size(); ++start) {
    if (seen[start] || p(start) == start) continue;
    std::vector<int> c;
    for (int q = start; !seen[q]; q = p(q)) {
      seen[q] = true;
      c.push_back(q);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string to_string(const Permutation& p) {
  const auto cs = cycles(p);
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& c : cs) {
    out << '(';
    for (std::size_t t = 0; t < c.size(); ++t) out << (t ? "," : "") << c[t];
    out << ')';
  }
  return out.str();
}

Permutation parse_cycles(int n, std::string_view text) {
  // Cycles are applied right-to-left so that non-disjoint input composes.
  std::vector<std::vector<int>> parsed;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++pos;
    std::vector<int> c;
    skip_space();
    while (pos < text.size() && text[pos] != ')') {
      skip_space();
      int value = 0;
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        ++pos;
      }
      if (pos == start) throw std::invalid_argument("expected a point in cycle notation");
      c.push_back(value);
      skip_space();
      if (pos < text.size() && text[pos] == ',') ++pos;
    }
    if (pos >= text.size()) throw std::invalid_argument("unterminated cycle");
    ++pos;
    parsed.push_back(std::move(c));
    skip_space();
  }
  Permutation result = Permutation::identity(n);
  for (auto it = parsed.rbegin(); it != parsed.rend(); ++it) {
    std::vector<int> c = *it;
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end())
      throw std::invalid_argument("repeated point inside a cycle");
    result = compose(Permutation::cycle(n, *it), result);
  }
  return result;
}

SWWord::SWWord(Word word) : word_(std::move(word)) {
  if (word_.max_generator() > 2) throw std::invalid_argument("SW-word uses only S and W");
}

SWWord SWWord::letter(Letter l, Integer exponent) {
  return SWWord(Word::generator(static_cast<int>(l), exponent));
}

Integer SWWord::exponent_sum(Letter l) const {
  return loopstab::exponent_sum(word_, static_cast<int>(l));
}

SWWord invert(const SWWord& w) { return SWWord(invert(w.word())); }

std::string to_string(const SWWord& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const Syllable& s : w.word().syllables()) {
    if (!first) out << ' ';
    first = false;
    out << (s.gen == 1 ? 'S' : 'W');
    if (s.exponent != 1) out << '^' << s.exponent;
  }
  return out.str();
}

namespace {

using Letter = SWWord::Letter;

SWWord S(Integer e) { return SWWord::letter(Letter::S, e); }
SWWord W(Integer e) { return SWWord::letter(Letter::W, e); }

// (1,i,j) for 1 < i <= m < j <= n: sigma^(i-1) omega^(j-m) sigma^-(i-1) omega^-(j-m).
SWWord through_one_mixed(int i, int j, int m) {
  return S(i - 1) * W(j - m) * S(-(i - 1)) * W(-(j - m));
}

// (1,i,j) for distinct i, j in 2..n.
SWWord through_one(int i, int j, int m) {
  const bool i_low = i <= m;
  const bool j_low = j <= m;
  if (i_low && !j_low) return through_one_mixed(i, j, m);
  // (1,i,j) = (1,j,i)^-1
  if (!i_low && j_low) return invert(through_one_mixed(j, i, m));
  // (1,i,j) = (1,j,m+1)^-1 o (1,i,m+1)
  if (i_low && j_low)
    return invert(through_one_mixed(j, m + 1, m)) * through_one_mixed(i, m + 1, m);
  // (1,i,j) = (1,2,j) o (1,2,i)^-1
  return through_one_mixed(2, j, m) * invert(through_one_mixed(2, i, m));
}

void check_sigma_omega_sizes(int m, int n) {
  if (!(1 < m && m < n)) throw PreconditionError("sigma/omega need 1 < m < n");
}

}  // namespace

SWWord three_cycle_word(int k, int i, int j, int m, int n) {
  check_sigma_omega_sizes(m, n);
  for (int p : {k, i, j})
    if (p < 1 || p > n) throw std::invalid_argument("3-cycle point out of range");
  if (k == i || i == j || k == j) throw std::invalid_argument("3-cycle points must be distinct");

  // omega o sigma = (1,2,...,n); its (k-1)-th power carries 1 to k, so
  // (k,i,j) is the conjugate of (1, i-(k-1), j-(k-1)) with indices mod n.
  auto shift_back = [&](int p) { return ((p - k) % n + n) % n + 1; };
  const SWWord base = through_one(shift_back(i), shift_back(j), m);
  if (k == 1) return base;
  const SWWord rotation = SWWord(power((W(1) * S(1)).word(), k - 1));
  return rotation * base * invert(rotation);
}

SWWord decompose_even(const Permutation& target, int m) {
  const int n = target.size();
  check_sigma_omega_sizes(m, n);
  if (parity(target) != Parity::even)
    throw PreconditionError("decompose_even needs an even permutation");

  // Peel off 3-cycles from the left: with p the least moved point, q its
  // image and a another moved point, (p,q,a)^-1 o residual fixes p without
  // enlarging the support. target = c_1 o c_2 o ... with c_t = (p,q,a).
  SWWord out;
  Permutation residual = target;
  while (!residual.is_identity()) {
    int p = 1;
    while (residual(p) == p) ++p;
    const int q = residual(p);
    int a = p + 1;
    while (a == q || residual(a) == a) ++a;
    out = out * three_cycle_word(p, q, a, m, n);
    const Permutation c = Permutation::cycle(n, {p, q, a});
    residual = compose(inverse(c), residual);
  }
  return out;
}

Permutation evaluate(const SWWord& w, const Permutation& sigma, const Permutation& omega) {
  if (sigma.size() != omega.size()) throw std::invalid_argument("sigma/omega size mismatch");
  Permutation result = Permutation::identity(sigma.size());
  for (const Syllable& s : w.word().syllables())
    result = compose(result, power(s.gen == 1 ? sigma : omega, s.exponent));
  return result;
}

Word substitute(const SWWord& w, int i, int k) {
  if (i == k) throw std::invalid_argument("substitute needs two distinct generators");
  if (i < 1 || k < 1) throw std::invalid_argument("generator index must be >= 1");
  Word out;
  for (const Syllable& s : w.word().syllables()) out.push_back({s.gen == 1 ? i : k, s.exponent});
  return out;
}

}  // namespace loopstab
