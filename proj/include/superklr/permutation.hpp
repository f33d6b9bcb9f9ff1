/**
 * @file permutation.hpp
 * @brief Finite permutations in one-line notation, reduced words, transporter
 *        sets between sequences, and Young subgroups of compositions.
 *
 * Convention: a permutation w of degree n maps positions 1..n; w(j) is the
 * value at position j.  Products compose as functions, (u*v)(x) = u(v(x)).
 * The place action on a sequence nu is (w.nu) with (w.nu)_{w(j)} = nu_j, so
 * w moves the entry at position j to position w(j).
 */
#pragma once

#include <superklr/cartan.hpp>
#include <superklr/common.hpp>

#include <compare>
#include <vector>

namespace superklr {

class Permutation {
 public:
  Permutation() = default;  // degree 0
  /// One-line notation: images[j-1] = w(j); must be a bijection on 1..n.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Adjacent transposition s_a swapping a and a+1 (1 <= a <= n-1).
  static Permutation adjacent_transposition(int n, int a);
  /// Product s_{word[0]} * s_{word[1]} * ... (empty word = identity).
  static Permutation from_word(int n, const std::vector<int>& word);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int j) const { return images_[j - 1]; }  // 1-based
  const std::vector<int>& one_line() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  friend Permutation operator*(const Permutation& u, const Permutation& v);

  /// Coxeter length = number of inversions.
  long length() const;
  /// True when length(s_a * w) < length(w), i.e. a appears to the right of
  /// a+1 in the one-line values.
  bool has_left_descent(int a) const;
  /// Lexicographically smallest reduced word (greedy smallest left descent).
  std::vector<int> min_reduced_word() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

/// Place action: result_{w(j)} = nu_j.
WeightSeq act(const Permutation& w, const WeightSeq& nu);

/// All w with w.nu = nu_prime, sorted lexicographically by one-line notation.
/// Empty when the multisets differ.  Enumerated as a fixed representative
/// times the stabilizer of nu (the product of symmetric groups on the
/// positions of each label value).  Throws GuardError above the degree cap.
std::vector<Permutation> transporter(const WeightSeq& nu, const WeightSeq& nu_prime);

/// All permutations preserving the consecutive blocks of a composition
/// (b_1, ..., b_p) of n, sorted lexicographically.
std::vector<Permutation> young_subgroup(const std::vector<long>& blocks);

/// { j : 1 <= j < t, w(j) < w(t) }  (t is 1-based).
std::vector<int> j_set(const Permutation& w, int t);

}  // namespace superklr
