#include "loopstab/loop_group.hpp"

#include "loopstab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace loopstab {

LoopSubgroup::LoopSubgroup(std::vector<int> loops) : loops_(std::move(loops)) {
  if (loops_.empty()) throw std::invalid_argument("loop subgroup needs at least one loop");
  for (int s : loops_)
    if (s < 1) throw std::invalid_argument("loop lengths must be >= 1");
  offsets_.resize(loops_.size());
  int offset = 0;
  for (std::size_t i = 0; i < loops_.size(); ++i) {
    offsets_[i] = offset;
    offset += loops_[i] - 1;
  }
  coset_count_ = 1 + offset;
  generators_.reserve(loops_.size());
  for (int i = 1; i <= rank(); ++i) {
    std::vector<int> points;
    for (int t = 0; t < loop_length(i); ++t) points.push_back(label(i, t));
    generators_.push_back(points.size() > 1 ? Permutation::cycle(coset_count_, points)
                                            : Permutation::identity(coset_count_));
  }
}

int LoopSubgroup::label(int i, int t) const {
  const int s = loop_length(i);
  t = ((t % s) + s) % s;
  return t == 0 ? 1 : 1 + offsets_[i - 1] + t;
}

std::pair<int, int> LoopSubgroup::representative(int label) const {
  if (label < 1 || label > coset_count_) throw std::out_of_range("coset label out of range");
  if (label == 1) return {0, 0};
  for (int i = rank(); i >= 1; --i)
    if (loop_length(i) > 1 && label > 1 + offsets_[i - 1])
      return {i, label - 1 - offsets_[i - 1]};
  throw std::logic_error("unreachable coset label");
}

Word LoopSubgroup::representative_word(int label) const {
  const auto [i, t] = representative(label);
  return i == 0 ? Word() : Word::generator(i, t);
}

LoopSubgroup parse_loops(const std::string& text) {
  std::vector<int> loops;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, text.find('/') != std::string::npos ? '/' : ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    if (token.empty()) throw std::invalid_argument("empty loop length in '" + text + "'");
    std::size_t used = 0;
    const int s = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument("bad loop length '" + token + "'");
    loops.push_back(s);
  }
  return LoopSubgroup(std::move(loops));
}

std::string to_string(const LoopSubgroup& u) {
  std::ostringstream out;
  for (int i = 0; i < u.rank(); ++i) out << (i ? "/" : "") << u.loops()[i];
  return out.str();
}

Permutation pi_generator(const LoopSubgroup& u, int i) { return u.pi_generator(i); }

Permutation pi_word(const LoopSubgroup& u, const Word& w) {
  if (w.max_generator() > u.rank())
    throw std::invalid_argument("word uses a generator beyond the rank");
  Permutation result = Permutation::identity(u.coset_count());
  for (const Syllable& s : w.syllables())
    result = compose(result, power(u.pi_generator(s.gen), s.exponent));
  return result;
}

bool contains(const LoopSubgroup& u, const Word& w) { return pi_word(u, w)(1) == 1; }

bool in_normal_core(const LoopSubgroup& u, const Word& w) {
  return pi_word(u, w).is_identity();
}

std::vector<Word> basis(const LoopSubgroup& u) {
  std::vector<Word> out;
  const int r = u.rank();
  for (int i = 1; i <= r; ++i) out.push_back(Word::generator(i, u.loop_length(i)));
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) {
      if (i == j) continue;
      for (int k = 1; k < u.loop_length(i); ++k)
        out.push_back(Word::generator(i, -k) * Word::generator(j) * Word::generator(i, k));
    }
  return out;
}

ParityVector parity_vector(const LoopSubgroup& u) {
  ParityVector v(u.rank());
  for (int i = 0; i < u.rank(); ++i) v(i) = u.loops()[i] % 2 == 0 ? 1 : 0;
  return v;
}

int looplet_count(const LoopSubgroup& u) {
  return static_cast<int>(std::count(u.loops().begin(), u.loops().end(), 1));
}

Permutation LoopRestriction::localize(const Permutation& full) const {
  std::vector<int> images(n);
  for (int p = 1; p <= n; ++p) {
    const int q = to_local[full(to_full[p - 1]) - 1];
    if (q == 0) throw std::invalid_argument("permutation leaves the two loops");
    images[p - 1] = q;
  }
  return Permutation(std::move(images));
}

Permutation LoopRestriction::globalize(const Permutation& local, int coset_count) const {
  std::vector<int> images = Permutation::identity(coset_count).images();
  for (int p = 1; p <= n; ++p) images[to_full[p - 1] - 1] = to_full[local(p) - 1];
  return Permutation(std::move(images));
}

LoopRestriction restrict_to_loops(const LoopSubgroup& u, int i, int k) {
  if (i == k) throw PreconditionError("restrict_to_loops needs two distinct loops");
  if (i < 1 || k < 1 || i > u.rank() || k > u.rank())
    throw std::invalid_argument("loop index out of range");
  if (u.loop_length(i) < 2 || u.loop_length(k) < 2)
    throw PreconditionError("restrict_to_loops needs s_i > 1 and s_k > 1 (no looplets)");
  LoopRestriction out;
  out.m = u.loop_length(i);
  out.n = u.loop_length(i) + u.loop_length(k) - 1;
  out.to_local.assign(u.coset_count(), 0);
  out.to_full.push_back(1);
  for (int t = 1; t < u.loop_length(i); ++t) out.to_full.push_back(u.label(i, t));
  for (int t = 1; t < u.loop_length(k); ++t) out.to_full.push_back(u.label(k, t));
  for (int p = 1; p <= out.n; ++p) out.to_local[out.to_full[p - 1] - 1] = p;
  out.sigma = out.localize(u.pi_generator(i));
  out.omega = out.localize(u.pi_generator(k));
  return out;
}

namespace {

std::string coset_name(const LoopSubgroup& u, int label) {
  const auto [i, t] = u.representative(label);
  if (i == 0) return "U";
  std::ostringstream out;
  out << 'g' << i << '^' << t << 'U';
  return out.str();
}

}  // namespace

std::string coset_graph_dot(const LoopSubgroup& u) {
  std::ostringstream out;
  out << "digraph \"coset_graph_" << to_string(u) << "\" {\n";
  for (int c = 1; c <= u.coset_count(); ++c)
    out << "  c" << c << " [label=\"" << coset_name(u, c) << "\""
        << (c == 1 ? ", shape=doublecircle" : "") << "];\n";
  for (int c = 1; c <= u.coset_count(); ++c)
    for (int i = 1; i <= u.rank(); ++i)
      out << "  c" << c << " -> c" << u.pi_generator(i)(c) << " [label=\"g" << i << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace loopstab
