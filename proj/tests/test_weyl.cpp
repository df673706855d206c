#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagk/weyl.hpp"

using namespace flagk;

namespace {

std::vector<std::vector<int>> all_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 1; i <= n; ++i)
      if (mask & (1 << (i - 1))) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("length: identity, longest element, frozen value") {
  CHECK(length(Perm::identity(3)) == 0);
  CHECK(length(Perm::longest(3)) == 3);
  CHECK(length(Perm({2, 3, 1})) == 2);  // s_1 s_2 in S_3
  for (int m = 2; m <= 5; ++m)
    for (const Perm& w : all_elements(m))
      CHECK(length(w) == int(reduced_word(w).size()));
}

TEST_CASE("action on weights") {
  int n = 3;
  Weight v({5, -1, 2, 0});
  CHECK(act(Perm::identity(n + 1), v) == v);
  // w_circ(k) = n+2-k, so w_circ eps_1 = eps_{n+1}
  CHECK(act(Perm::longest(n + 1), Weight::eps(n, 1)) == Weight::eps(n, n + 1));
  // s_1 varpi_1 = varpi_1 - alpha_1
  CHECK(act(Perm::simple(n + 1, 1), Weight::fund(n, 1)) ==
        Weight::fund(n, 1) - Root::simple(1).as_weight(n));
  // linearity spot check
  Weight u({1, 4, -2, 0});
  Perm w({3, 1, 4, 2});
  CHECK(act(w, u + v) == act(w, u) + act(w, v));
}

TEST_CASE("pairing table") {
  for (int n = 1; n <= 4; ++n) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        CHECK(pairing(Weight::fund(n, i), Root::simple(j)) == (i == j ? 1 : 0));
    // <varpi_i, theta^vee> = 1 for every i in type A
    for (int i = 1; i <= n; ++i) CHECK(pairing(Weight::fund(n, i), Root::theta(n)) == 1);
    CHECK(pairing(Root::simple(1).as_weight(n), Root::simple(1)) == 2);
  }
}

TEST_CASE("pairing is representative-invariant") {
  int n = 2;
  Weight v({3, 1, 0});
  std::vector<i64> shifted{5, 3, 2};  // same class
  CHECK(Weight(shifted) == v);
  for (const Root& r : positive_roots(n)) CHECK(pairing(Weight(shifted), r) == pairing(v, r));
}

TEST_CASE("coroot action matches root action") {
  int n = 3;
  for (const Perm& w : all_elements(n + 1))
    for (const Root& r : positive_roots(n)) {
      SignedRoot im = act(w, r);
      Coroot expect = Coroot::of_root(n, im.r) * im.sign;
      CHECK(act(w, Coroot::of_root(n, r)) == expect);
    }
}

TEST_CASE("bruhat_leq agrees with the subword oracle") {
  for (int m = 2; m <= 4; ++m) {
    auto W = all_elements(m);
    for (const Perm& w : W) {
      auto lower = bruhat_lower_set(w);
      for (const Perm& v : W) CHECK(bruhat_leq(v, w) == (lower.count(v) > 0));
    }
  }
}

TEST_CASE("bruhat_leq examples") {
  Perm s1 = Perm::simple(3, 1), s2 = Perm::simple(3, 2);
  CHECK(bruhat_leq(Perm::identity(3), Perm::longest(3)));
  CHECK_FALSE(bruhat_leq(s1, s2));
  CHECK(bruhat_leq(s1, s1 * s2 * s1));
}

TEST_CASE("min_coset_rep: (mcr) membership and brute-force minimum") {
  for (int n = 1; n <= 3; ++n) {
    int m = n + 1;
    for (const auto& J : all_subsets(n)) {
      auto WJ = subgroup_WJ(m, J);
      for (const Perm& w : all_elements(m)) {
        Perm r = min_coset_rep(w, J);
        CHECK(is_min_rep(r, J));
        // r is in the same coset and has minimal length in it
        int best = 1 << 20;
        Perm arg = w;
        for (const Perm& u : WJ) {
          Perm y = w * u;
          if (length(y) < best) { best = length(y); arg = y; }
        }
        CHECK(r == arg);
        CHECK(length(r) == best);
      }
    }
  }
}

TEST_CASE("min_coset_rep examples") {
  CHECK(min_coset_rep(Perm({7, 3, 1, 2, 6, 4, 5}), {}) == Perm({7, 3, 1, 2, 6, 4, 5}));
  CHECK(min_coset_rep(Perm::longest(3), std::vector<int>{1}) == Perm({2, 3, 1}));
  CHECK(min_coset_rep(Perm::identity(4), std::vector<int>{1, 3}) == Perm::identity(4));
}

TEST_CASE("reduced words: product and multiplicity") {
  Perm w = Perm::longest(3);
  auto words = all_reduced_words(w);
  CHECK(words.size() == 2);  // (1,2,1) and (2,1,2)
  for (const auto& word : words) {
    CHECK(is_reduced_word(3, word));
    CHECK(product_of_word(3, word) == w);
  }
  // every element of S_4: the words returned under a limit multiply back
  for (const Perm& x : all_elements(4)) {
    auto two = all_reduced_words(x, 2);
    for (const auto& word : two) CHECK(product_of_word(4, word) == x);
    CHECK(two.size() >= 1);
  }
  // s_1 s_2 s_3 admits no braid or commutation move: unique reduced word
  CHECK(all_reduced_words(Perm({2, 3, 4, 1})).size() == 1);
}

TEST_CASE("reflection_order: frozen small cases and convexity") {
  CHECK(reflection_order(2, {1}) == std::vector<Root>{Root(1, 1)});
  CHECK(reflection_order(3, {1, 2, 1}) ==
        std::vector<Root>{Root(1, 1), Root(1, 2), Root(2, 2)});
  CHECK_THROWS(reflection_order(3, {1, 1, 2}));  // not reduced
  for (int m = 2; m <= 4; ++m) {
    size_t checked = 0;
    for (const auto& word : all_reduced_words(Perm::longest(m))) {
      auto order = reflection_order(m, word);
      CHECK(check_convex(m - 1, order));
      if (++checked >= 8) break;
    }
  }
}

TEST_CASE("labels of a reduced-word prefix enumerate N(prefix)") {
  int m = 4;
  auto word = reduced_word(Perm::longest(m));
  auto order = reflection_order(m, word);
  Perm pre = Perm::identity(m);
  std::set<Root> acc;
  for (size_t k = 0; k < word.size(); ++k) {
    acc.insert(order[k]);
    pre = pre * Perm::simple(m, word[k]);
    CHECK(inversion_set_N(pre) == acc);
  }
}

TEST_CASE("(refa) orders put Delta_J^+ first") {
  for (int n = 1; n <= 3; ++n) {
    int m = n + 1;
    for (const auto& J : all_subsets(n)) {
      auto order = reflection_order(m, refa_word(m, J));
      auto dj = positive_roots_J(n, J);
      std::set<Root> sj(dj.begin(), dj.end());
      for (size_t t = 0; t < order.size(); ++t) {
        bool expect = t < sj.size();
        CHECK((sj.count(order[t]) > 0) == expect);
      }
      CHECK(check_convex(n, order));
    }
  }
}

TEST_CASE("three-block orders: Delta_J^+ then middle then Delta_K^+") {
  for (int n = 1; n <= 3; ++n) {
    int m = n + 1;
    for (const auto& K : all_subsets(n)) {
      std::vector<int> J;
      for (int i = 1; i <= n; ++i)
        if (std::find(K.begin(), K.end(), i) == K.end()) J.push_back(i);
      auto word = three_block_word(m, J, K);
      CHECK(check_three_block(m, J, K, word));
    }
  }
}
