#include "doctest.h"
#include "oracles.hpp"

#include "loopstab/errors.hpp"
#include "loopstab/permutation.hpp"

using namespace loopstab;

namespace {

Permutation sigma_of(int m, int n) {
  std::vector<int> pts;
  for (int p = 1; p <= m; ++p) pts.push_back(p);
  return Permutation::cycle(n, pts);
}

Permutation omega_of(int m, int n) {
  std::vector<int> pts{1};
  for (int p = m + 1; p <= n; ++p) pts.push_back(p);
  return Permutation::cycle(n, pts);
}

// Evaluation through the letter oracle, independent of Permutation::compose.
oracle::Map evaluate_oracle(const SWWord& w, int m, int n) {
  std::vector<int> pts_s, pts_w{1};
  for (int p = 1; p <= m; ++p) pts_s.push_back(p);
  for (int p = m + 1; p <= n; ++p) pts_w.push_back(p);
  return oracle::evaluate_letters(oracle::letters(w.word()),
                                  {oracle::cycle_map(n, pts_s), oracle::cycle_map(n, pts_w)}, n);
}

}  // namespace

TEST_CASE("composition is right-to-left") {
  const Permutation a = Permutation::cycle(3, {1, 2});
  const Permutation b = Permutation::cycle(3, {2, 3});
  // (a o b)(2) = a(3) = 3
  CHECK(compose(a, b)(2) == 3);
  CHECK(compose(a, b) == Permutation::cycle(3, {1, 2, 3}));
  CHECK(compose(b, a) == Permutation::cycle(3, {1, 3, 2}));
}

TEST_CASE("inverse, power, parity, cycles") {
  const Permutation c = parse_cycles(6, "(1,2,4)(3,5)");
  CHECK(compose(c, inverse(c)).is_identity());
  CHECK(power(c, 6).is_identity());
  CHECK(power(c, -1) == inverse(c));
  CHECK(power(c, 3) == parse_cycles(6, "(3,5)"));
  CHECK(parity(c) == Parity::odd);
  CHECK(parity(Permutation::cycle(5, {1, 2, 3})) == Parity::even);
  CHECK(parity(Permutation::identity(4)) == Parity::even);
  CHECK(cycles(c) == std::vector<std::vector<int>>{{1, 2, 4}, {3, 5}});
  CHECK(to_string(c) == "(1,2,4)(3,5)");
  CHECK(to_string(Permutation::identity(3)) == "()");
  CHECK(parse_cycles(4, "()").is_identity());
}

TEST_CASE("malformed permutations are rejected") {
  CHECK_THROWS_AS(Permutation(std::vector<int>{1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles(3, "(1,4)"), std::invalid_argument);
  // Overlapping cycles compose right-to-left.
  CHECK(parse_cycles(3, "(1,2)(2,3)") == Permutation::cycle(3, {1, 2, 3}));
  CHECK_THROWS_AS(parse_cycles(3, "(1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles(3, "(1,1)"), std::invalid_argument);
  CHECK_THROWS_AS(compose(Permutation::identity(2), Permutation::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("property: parity is a homomorphism to Z/2") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 7;
    std::vector<int> ia(n), ib(n);
    for (int p = 0; p < n; ++p) ia[p] = ib[p] = p + 1;
    std::shuffle(ia.begin(), ia.end(), rng);
    std::shuffle(ib.begin(), ib.end(), rng);
    const Permutation a(ia), b(ib);
    const bool odd_a = parity(a) == Parity::odd, odd_b = parity(b) == Parity::odd;
    CHECK((parity(compose(a, b)) == Parity::odd) == (odd_a != odd_b));
  }
}

TEST_CASE("SW-words") {
  const SWWord w = SWWord::letter(SWWord::Letter::S) * SWWord::letter(SWWord::Letter::W) *
                   SWWord::letter(SWWord::Letter::S, -1) * SWWord::letter(SWWord::Letter::W, -1);
  CHECK(to_string(w) == "S W S^-1 W^-1");
  CHECK(to_string(SWWord()) == "1");
  CHECK(w.exponent_sum(SWWord::Letter::S) == 0);
  CHECK((w * invert(w)).empty());
  CHECK(substitute(w, 3, 1) == Word({{3, 1}, {1, 1}, {3, -1}, {1, -1}}));
  CHECK_THROWS_AS(SWWord(Word::generator(3)), std::invalid_argument);
  CHECK_THROWS_AS(substitute(w, 2, 2), std::invalid_argument);
}

TEST_CASE("commutator of sigma and omega is the 3-cycle (1,m+1,m)") {
  // [S, W] = S W S^-1 W^-1 for m = 2, n = 3.
  const SWWord w = three_cycle_word(1, 2, 3, 2, 3);
  CHECK(evaluate(w, sigma_of(2, 3), omega_of(2, 3)) == Permutation::cycle(3, {1, 2, 3}));
}

TEST_CASE("three_cycle_word for every 3-cycle with n <= 8") {
  int count = 0;
  for (int n = 3; n <= 8; ++n)
    for (int m = 2; m < n; ++m) {
      const Permutation s = sigma_of(m, n), o = omega_of(m, n);
      for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j) {
            if (k == i || i == j || k == j) continue;
            const SWWord w = three_cycle_word(k, i, j, m, n);
            const Permutation expected = Permutation::cycle(n, {k, i, j});
            CHECK(evaluate(w, s, o) == expected);
            CHECK(evaluate_oracle(w, m, n) == expected.images());
            CHECK(w.exponent_sum(SWWord::Letter::S) == 0);
            CHECK(w.exponent_sum(SWWord::Letter::W) == 0);
            ++count;
          }
    }
  CHECK(count > 0);
}

TEST_CASE("decompose_even on random even permutations") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 6;
    const int m = 2 + static_cast<int>(rng() % (n - 2));
    const Permutation target = oracle::random_even_permutation(rng, n);
    const SWWord w = decompose_even(target, m);
    CHECK(evaluate(w, sigma_of(m, n), omega_of(m, n)) == target);
    CHECK(evaluate_oracle(w, m, n) == target.images());
    CHECK(w.exponent_sum(SWWord::Letter::S) == 0);
    CHECK(w.exponent_sum(SWWord::Letter::W) == 0);
  }
  CHECK(decompose_even(Permutation::identity(4), 2).empty());
}

TEST_CASE("decompose_even preconditions") {
  CHECK_THROWS_AS(decompose_even(Permutation::cycle(4, {1, 2}), 2), PreconditionError);
  CHECK_THROWS_AS(decompose_even(Permutation::cycle(4, {1, 2, 3}), 1), PreconditionError);
  CHECK_THROWS_AS(decompose_even(Permutation::cycle(4, {1, 2, 3}), 4), PreconditionError);
  CHECK_THROWS_AS(three_cycle_word(1, 1, 2, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(three_cycle_word(1, 2, 9, 2, 4), std::invalid_argument);
}
