#include <doctest.h>
#include <superklr/permutation.hpp>

#include <algorithm>
#include <random>
#include <vector>

using namespace superklr;

namespace {

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

long brute_inversions(const Permutation& w) {
  long count = 0;
  for (int i = 1; i <= w.degree(); ++i)
    for (int j = i + 1; j <= w.degree(); ++j)
      if (w(i) > w(j)) ++count;
  return count;
}

// All reduced words of w, by peeling left descents.
void reduced_words(const Permutation& w, std::vector<int>& prefix,
                   std::vector<std::vector<int>>& out) {
  if (w.is_identity()) {
    out.push_back(prefix);
    return;
  }
  for (int a = 1; a < w.degree(); ++a) {
    if (!w.has_left_descent(a)) continue;
    prefix.push_back(a);
    reduced_words(Permutation::adjacent_transposition(w.degree(), a) * w, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

TEST_CASE("construction and basic maps") {
  const Permutation w({2, 3, 1});
  CHECK(w.degree() == 3);
  CHECK(w(1) == 2);
  CHECK(w(3) == 1);
  CHECK_FALSE(w.is_identity());
  CHECK(Permutation::identity(4).is_identity());
  CHECK(Permutation::adjacent_transposition(3, 2).one_line() ==
        std::vector<int>{1, 3, 2});
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
}

TEST_CASE("word evaluation composes as functions") {
  // (u*v)(x) = u(v(x)); the word s_1 s_2 sends 1 -> 2, 2 -> 3, 3 -> 1.
  CHECK(Permutation::from_word(3, {1, 2}).one_line() == std::vector<int>{2, 3, 1});
  CHECK(Permutation::from_word(3, {}).is_identity());
  CHECK(Permutation::from_word(3, {1, 1}).is_identity());
}

TEST_CASE("group axioms on random elements") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Permutation u = random_permutation(n, rng);
    const Permutation v = random_permutation(n, rng);
    const Permutation w = random_permutation(n, rng);
    CHECK((u * v) * w == u * (v * w));
    CHECK(u * Permutation::identity(n) == u);
    CHECK(u * u.inverse() == Permutation::identity(n));
    CHECK(u.inverse().inverse() == u);
  }
}

TEST_CASE("length is the inversion count") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Permutation w = random_permutation(n, rng);
    CHECK(w.length() == brute_inversions(w));
  }
  CHECK(Permutation({3, 2, 1}).length() == 3);
}

TEST_CASE("left descents") {
  const Permutation w({2, 3, 1});
  CHECK(w.has_left_descent(1));
  CHECK_FALSE(w.has_left_descent(2));
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Permutation w2 = random_permutation(n, rng);
    for (int a = 1; a < n; ++a) {
      const Permutation sw = Permutation::adjacent_transposition(n, a) * w2;
      CHECK(w2.has_left_descent(a) == (sw.length() < w2.length()));
    }
  }
}

TEST_CASE("minimal reduced word is reduced, evaluates back, and is lex-least") {
  for (const Permutation& w : all_permutations(4)) {
    const std::vector<int> word = w.min_reduced_word();
    CHECK(static_cast<long>(word.size()) == w.length());
    CHECK(Permutation::from_word(4, word) == w);
    std::vector<std::vector<int>> words;
    std::vector<int> prefix;
    reduced_words(w, prefix, words);
    CHECK(word == *std::min_element(words.begin(), words.end()));
  }
}

TEST_CASE("place action moves position j to position w(j)") {
  const Permutation s1 = Permutation::adjacent_transposition(2, 1);
  CHECK(act(s1, {5, 7}) == WeightSeq{7, 5});
  CHECK(act(Permutation({2, 3, 1}), {10, 20, 30}) == WeightSeq{30, 10, 20});

  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Permutation u = random_permutation(n, rng);
    const Permutation v = random_permutation(n, rng);
    WeightSeq nu(n);
    for (auto& entry : nu) entry = static_cast<long>(rng() % 3);
    CHECK(act(u * v, nu) == act(u, act(v, nu)));
  }
}

TEST_CASE("transporter agrees with brute force and is sorted") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    WeightSeq nu(n), nu_prime(n);
    for (auto& entry : nu) entry = static_cast<long>(rng() % 2);
    nu_prime = nu;
    std::shuffle(nu_prime.begin(), nu_prime.end(), rng);
    const std::vector<Permutation> fast = transporter(nu, nu_prime);
    std::vector<Permutation> slow;
    for (const Permutation& w : all_permutations(n))
      if (act(w, nu) == nu_prime) slow.push_back(w);
    CHECK(fast == slow);  // all_permutations is already lexicographic
  }
}

TEST_CASE("transporter edge cases") {
  CHECK(transporter({0, 1}, {1, 1}).empty());
  CHECK(transporter({}, {}).size() == 1);
  CHECK(transporter({0, 0, 1}, {0, 0, 1}).size() == 2);
  const WeightSeq big(11, 0);
  CHECK_THROWS_AS((void)transporter(big, big), GuardError);
}

TEST_CASE("young subgroup of a composition") {
  const std::vector<Permutation> sub = young_subgroup({2, 1});
  REQUIRE(sub.size() == 2);
  CHECK(sub[0] == Permutation::identity(3));
  CHECK(sub[1] == Permutation({2, 1, 3}));
  CHECK(young_subgroup({1, 1, 1}).size() == 1);
  CHECK(young_subgroup({3, 2}).size() == 12);
  CHECK(young_subgroup({}).size() == 1);  // the empty permutation
}

TEST_CASE("j_set lists earlier positions sent below w(t)") {
  const Permutation w({2, 3, 1});
  CHECK(j_set(w, 1).empty());
  CHECK(j_set(w, 2) == std::vector<int>{1});
  CHECK(j_set(w, 3).empty());
  const Permutation id = Permutation::identity(4);
  CHECK(j_set(id, 4) == std::vector<int>{1, 2, 3});
}
