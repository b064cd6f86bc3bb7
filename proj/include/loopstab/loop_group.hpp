#pragma once

#include "loopstab/free_group.hpp"
#include "loopstab/permutation.hpp"
#include "loopstab/types.hpp"

#include <string>
#include <vector>

namespace loopstab {

// The s_1/.../s_r loop subgroup U of F_r.
//
// Cosets are labelled 1..n: U is 1, and g_i^t U (1 <= t < s_i) is
// 1 + offset_i + t with offset_i = sum_{l<i} (s_l - 1).
class LoopSubgroup {
 public:
  explicit LoopSubgroup(std::vector<int> loops);

  int rank() const { return static_cast<int>(loops_.size()); }
  const std::vector<int>& loops() const { return loops_; }
  int loop_length(int i) const { return loops_.at(i - 1); }
  int coset_count() const { return coset_count_; }

  // Label of g_i^t U; t is taken modulo s_i.
  int label(int i, int t) const;
  // Generator index and power of the representative g_i^t of a label;
  // {0, 0} for the coset U itself.
  std::pair<int, int> representative(int label) const;
  Word representative_word(int label) const;

  const Permutation& pi_generator(int i) const { return generators_.at(i - 1); }

  friend bool operator==(const LoopSubgroup& a, const LoopSubgroup& b) {
    return a.loops_ == b.loops_;
  }

 private:
  std::vector<int> loops_;
  std::vector<int> offsets_;
  int coset_count_ = 1;
  std::vector<Permutation> generators_;
};

// Parses "3,3,1" (also "3/3/1").
LoopSubgroup parse_loops(const std::string& text);
std::string to_string(const LoopSubgroup& u);

inline int coset_count(const LoopSubgroup& u) { return u.coset_count(); }
Permutation pi_generator(const LoopSubgroup& u, int i);
// Coset action pi(w)(vU) = wvU.
Permutation pi_word(const LoopSubgroup& u, const Word& w);
bool contains(const LoopSubgroup& u, const Word& w);
bool in_normal_core(const LoopSubgroup& u, const Word& w);

// {g_i^{s_i}} followed by {g_i^-k g_j g_i^k : i != j, 1 <= k < s_i}, ordered
// by (i, j, k).
std::vector<Word> basis(const LoopSubgroup& u);

// Bit i is 1 exactly when s_i is even.
ParityVector parity_vector(const LoopSubgroup& u);
int looplet_count(const LoopSubgroup& u);

// The cosets on loops i and k relabelled so that pi(g_i), pi(g_k) become
// sigma = (1,...,m) and omega = (1,m+1,...,n).
struct LoopRestriction {
  int m = 0;
  int n = 0;
  Permutation sigma;
  Permutation omega;
  // to_full[p-1] is the full coset label of local point p.
  std::vector<int> to_full;
  // Local point of a full label, 0 if the coset lies off both loops.
  std::vector<int> to_local;

  // Restricts a permutation supported on the two loops to local points.
  Permutation localize(const Permutation& full) const;
  // Extends a local permutation by fixing every other coset.
  Permutation globalize(const Permutation& local, int coset_count) const;
};

LoopRestriction restrict_to_loops(const LoopSubgroup& u, int i, int k);

// Graphviz digraph of the left coset graph: one node per coset, one edge
// vU -> g_i vU labelled g_i for every coset and generator.
std::string coset_graph_dot(const LoopSubgroup& u);

}  // namespace loopstab
