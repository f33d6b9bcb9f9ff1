/**
 * @file onh.hpp
 * @brief The odd nilHecke algebra ONH_n and its cyclotomic quotient ONH_n^l,
 *        realized concretely over an exact scalar field.
 *
 * ONH_n is generated by x_1..x_n (odd polynomial generators) and tau_1..
 * tau_{n-1} (odd crossings) with the relations
 *
 *   tau_a^2 = 0,                tau_a tau_{a+1} tau_a = tau_{a+1} tau_a tau_{a+1},
 *   x_a tau_a + tau_a x_{a+1} = 1,        tau_a x_a + x_{a+1} tau_a = 1,
 *   x_a x_b + x_b x_a = 0  (a != b),      tau_a tau_b + tau_b tau_a = 0  (|a-b| > 1),
 *   x_b tau_a + tau_a x_b = 0  (b != a, a+1).
 *
 * Elements are kept in the normal form  sum c * x_1^{a_1}..x_n^{a_n} tau_w,
 * where tau_w is the crossing word of the lexicographically smallest reduced
 * word of w; any other word for w equals +-tau_w or 0, and the sign is fixed
 * by this canonical choice.  The cyclotomic quotient kills x_1^l; a rewrite
 * system derived from the constructed annihilator families brings every
 * element to the bounded normal form with a_i <= l - i.
 *
 * The scalar type K must be an exact field of characteristic != 2 (the two
 * mixed relations force 2 to be invertible at level arithmetic); Rational is
 * the default, PrimeField<P> gives an odd prime field.
 */
#pragma once

#include <superklr/common.hpp>
#include <superklr/permutation.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace superklr {

// ---------------------------------------------------------------------------
// Scalars

/// The integers modulo an odd prime P (primality is the caller's contract;
/// inversion uses the extended Euclidean algorithm and rejects zero).
template <long P>
class PrimeField {
  static_assert(P >= 3 && P % 2 == 1, "the modulus must be an odd prime");

 public:
  PrimeField() = default;
  PrimeField(long x) : v_(((x % P) + P) % P) {}

  long value() const { return v_; }
  std::string text() const { return std::to_string(v_); }

  friend PrimeField operator+(PrimeField a, PrimeField b) { return PrimeField(a.v_ + b.v_); }
  friend PrimeField operator-(PrimeField a, PrimeField b) { return PrimeField(a.v_ - b.v_); }
  friend PrimeField operator-(PrimeField a) { return PrimeField(-a.v_); }
  friend PrimeField operator*(PrimeField a, PrimeField b) { return PrimeField(a.v_ * b.v_); }
  friend PrimeField operator/(PrimeField a, PrimeField b) { return a * b.inverse(); }
  PrimeField& operator+=(PrimeField o) { return *this = *this + o; }
  PrimeField& operator-=(PrimeField o) { return *this = *this - o; }
  PrimeField& operator*=(PrimeField o) { return *this = *this * o; }
  friend bool operator==(PrimeField, PrimeField) = default;

  PrimeField inverse() const {
    if (v_ == 0) throw std::invalid_argument("division by zero in PrimeField");
    long r0 = P, r1 = v_, t0 = 0, t1 = 1;
    while (r1 != 0) {
      const long q = r0 / r1;
      r0 -= q * r1;
      std::swap(r0, r1);
      t0 -= q * t1;
      std::swap(t0, t1);
    }
    return PrimeField(t0);
  }

 private:
  long v_ = 0;
};

template <long P>
inline std::string scalar_text(const PrimeField<P>& a) {
  return a.text();
}
inline std::string scalar_text(const Rational& a) { return a.get_str(); }

// ---------------------------------------------------------------------------
// Crossing words

/// Normal form of a crossing word tau_{g_1}..tau_{g_m}: either zero (the word
/// is not reduced), or a sign and the underlying permutation, the sign taken
/// relative to the canonical (lexicographically smallest) reduced word.
struct TauNormal {
  bool zero = true;
  int sign = 1;
  Permutation w;
};

namespace onh_detail {

/// Rewrite a reduced word in place so that it starts with the letter a, which
/// must be a left descent of the word's permutation.  Far commutations
/// contribute a factor -1 each, braid moves +1; the product of factors is
/// returned.  Recursion: if the first letter j is far from a, a stays a left
/// descent of the tail, so bring it to the front there and swap once; if j is
/// adjacent to a, both a and j are left descents, so the permutation starts
/// with the full dihedral braid s_j s_a s_j — bring a up in the tail, then j
/// up in the remainder, and contract the exposed (j, a, j) prefix by the
/// sign-free braid move.
inline int bring_to_front(std::vector<int>& word, int a, long& budget) {
  if (--budget < 0)
    throw GuardError("crossing-word normalization exceeded its step budget");
  const int j = word.front();
  if (j == a) return 1;
  std::vector<int> rest(word.begin() + 1, word.end());
  if (j - a >= 2 || a - j >= 2) {
    const int s = bring_to_front(rest, a, budget);
    word.clear();
    word.push_back(a);
    word.push_back(j);
    word.insert(word.end(), rest.begin() + 1, rest.end());
    return -s;
  }
  const int s1 = bring_to_front(rest, a, budget);
  std::vector<int> tail(rest.begin() + 1, rest.end());
  const int s2 = bring_to_front(tail, j, budget);
  word.clear();
  word.push_back(a);
  word.push_back(j);
  word.push_back(a);
  word.insert(word.end(), tail.begin() + 1, tail.end());
  return s1 * s2;
}

}  // namespace onh_detail

/// Reduce a crossing word.  Zero exactly when the word is longer than the
/// Coxeter length of its permutation; otherwise the sign is accumulated along
/// an explicit move path to the canonical word (greedy smallest left descent).
inline TauNormal tau_word_reduce(int n, const std::vector<int>& word) {
  for (int g : word)
    if (g < 1 || g >= n)
      throw std::invalid_argument("crossing index out of range 1..n-1");
  const Permutation w = Permutation::from_word(n, word);
  if (w.length() != static_cast<long>(word.size())) return TauNormal{};

  TauNormal out{false, 1, w};
  long budget = 2'000'000;
  std::vector<int> cur = word;
  Permutation left = w;
  while (!cur.empty()) {
    int a = 0;
    for (int i = 1; i < n; ++i)
      if (left.has_left_descent(i)) {
        a = i;
        break;
      }
    out.sign *= onh_detail::bring_to_front(cur, a, budget);
    cur.erase(cur.begin());
    left = Permutation::adjacent_transposition(n, a) * left;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Elements

/// Term key of the normal form x^{exps} tau_w; ordered lexicographically by
/// (one-line notation of w, exponent vector), so the crossing-free part of an
/// element always comes first.
struct OnhKey {
  std::vector<int> w_images;
  std::vector<long> exps;
  friend bool operator==(const OnhKey&, const OnhKey&) = default;
  friend auto operator<=>(const OnhKey&, const OnhKey&) = default;
};

/// Skew polynomial in x_1..x_n: x_a x_b = -x_b x_a for a != b.  Plain term
/// storage; arithmetic happens through the algebra embedding.
template <typename K>
struct SkewPoly {
  int n = 0;
  std::map<std::vector<long>, K> terms;
};

template <typename K>
class OnhElement {
 public:
  using TermMap = std::map<OnhKey, K>;

  explicit OnhElement(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative rank");
  }

  static OnhElement zero(int n) { return OnhElement(n); }
  static OnhElement one(int n) {
    return monomial(n, std::vector<long>(static_cast<std::size_t>(n), 0),
                    Permutation::identity(n), K(1));
  }
  static OnhElement x(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("polynomial index out of range 1..n");
    std::vector<long> exps(static_cast<std::size_t>(n), 0);
    exps[static_cast<std::size_t>(k) - 1] = 1;
    return monomial(n, std::move(exps), Permutation::identity(n), K(1));
  }
  static OnhElement tau(int n, int a) {
    if (a < 1 || a >= n) throw std::invalid_argument("crossing index out of range 1..n-1");
    return monomial(n, std::vector<long>(static_cast<std::size_t>(n), 0),
                    Permutation::adjacent_transposition(n, a), K(1));
  }
  static OnhElement monomial(int n, std::vector<long> exps, const Permutation& w,
                             K coeff) {
    OnhElement e(n);
    e.add_term(exps, w, coeff);
    return e;
  }

  int rank() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const std::vector<long>& exps, const Permutation& w, const K& coeff) {
    if (static_cast<int>(exps.size()) != n_ || w.degree() != n_)
      throw std::invalid_argument("term shape does not match the rank");
    for (long a : exps)
      if (a < 0) throw std::invalid_argument("negative exponent");
    if (coeff == K(0)) return;
    OnhKey key{w.one_line(), exps};
    auto [it, fresh] = terms_.emplace(std::move(key), coeff);
    if (!fresh) {
      it->second += coeff;
      if (it->second == K(0)) terms_.erase(it);
    }
  }

  OnhElement& operator+=(const OnhElement& rhs) {
    if (rhs.n_ != n_) throw std::invalid_argument("rank mismatch");
    for (const auto& [key, c] : rhs.terms_) {
      auto [it, fresh] = terms_.emplace(key, c);
      if (!fresh) {
        it->second += c;
        if (it->second == K(0)) terms_.erase(it);
      }
    }
    return *this;
  }
  OnhElement& operator-=(const OnhElement& rhs) {
    if (rhs.n_ != n_) throw std::invalid_argument("rank mismatch");
    for (const auto& [key, c] : rhs.terms_) {
      auto [it, fresh] = terms_.emplace(key, -c);
      if (!fresh) {
        it->second -= c;
        if (it->second == K(0)) terms_.erase(it);
      }
    }
    return *this;
  }
  OnhElement& operator*=(const K& s) {
    if (s == K(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [key, c] : terms_) c *= s;
    return *this;
  }
  friend OnhElement operator+(OnhElement a, const OnhElement& b) { return a += b; }
  friend OnhElement operator-(OnhElement a, const OnhElement& b) { return a -= b; }
  friend OnhElement operator*(OnhElement a, const K& s) { return a *= s; }
  friend bool operator==(const OnhElement& a, const OnhElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  int n_;
  TermMap terms_;
};

template <typename K>
OnhElement<K> from_skew(const SkewPoly<K>& p) {
  OnhElement<K> out(p.n);
  const Permutation id = Permutation::identity(p.n);
  for (const auto& [exps, c] : p.terms) out.add_term(exps, id, c);
  return out;
}

/// The crossing-free part of an element, as a skew polynomial.
template <typename K>
SkewPoly<K> skew_part(const OnhElement<K>& e) {
  SkewPoly<K> out;
  out.n = e.rank();
  const std::vector<int> id = Permutation::identity(e.rank()).one_line();
  for (const auto& [key, c] : e.terms())
    if (key.w_images == id) out.terms.emplace(key.exps, c);
  return out;
}

// ---------------------------------------------------------------------------
// Multiplication in the free algebra

namespace onh_detail {

/// accumulator += x^{exps} tau_w tau_g, normalizing the appended crossing.
template <typename K>
void push_tau_term(OnhElement<K>& acc, const std::vector<long>& exps,
                   const Permutation& w, const K& coeff, int g) {
  std::vector<int> word = w.min_reduced_word();
  word.push_back(g);
  const TauNormal tn = tau_word_reduce(acc.rank(), word);
  if (tn.zero) return;
  acc.add_term(exps, tn.w, tn.sign > 0 ? coeff : K(-coeff));
}

/// accumulator += x^{exps} tau_w x_k, re-expressed in normal form.  Peels the
/// last letter g of the canonical word of w:
///   tau_g x_k = -x_k tau_g                      when k != g, g+1,
///   tau_g x_g = 1 - x_{g+1} tau_g,
///   tau_g x_{g+1} = 1 - x_g tau_g,
/// and in the word-free base case skew-commutes x_k into its slot, one sign
/// flip per generator passed.
template <typename K>
void push_x_term(OnhElement<K>& acc, std::vector<long> exps, const Permutation& w,
                 K coeff, int k) {
  const int n = acc.rank();
  if (w.is_identity()) {
    long passed = 0;
    for (int i = k + 1; i <= n; ++i) passed += exps[static_cast<std::size_t>(i) - 1];
    if (passed % 2 != 0) coeff = -coeff;
    exps[static_cast<std::size_t>(k) - 1] += 1;
    acc.add_term(exps, w, coeff);
    return;
  }
  std::vector<int> word = w.min_reduced_word();
  const int g = word.back();
  word.pop_back();
  const Permutation u =
      w * Permutation::adjacent_transposition(n, g);  // the peeled word's permutation
  if (k != g && k != g + 1) {
    OnhElement<K> shorter(n);
    push_x_term(shorter, exps, u, K(-coeff), k);
    for (const auto& [key, c] : shorter.terms())
      push_tau_term(acc, key.exps, Permutation(key.w_images), c, g);
    return;
  }
  // tau_g x_k = 1 - x_m tau_g with m = k+1 (k == g) or m = k-1 (k == g+1).
  acc.add_term(exps, u, coeff);
  const int m = (k == g) ? k + 1 : k - 1;
  OnhElement<K> shorter(n);
  push_x_term(shorter, exps, u, coeff, m);
  for (const auto& [key, c] : shorter.terms())
    push_tau_term(acc, key.exps, Permutation(key.w_images), K(-c), g);
}

}  // namespace onh_detail

/// Product in the free algebra ONH_n, returned in normal form.
template <typename K>
OnhElement<K> multiply_free(const OnhElement<K>& a, const OnhElement<K>& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
  const int n = a.rank();
  OnhElement<K> out(n);
  for (const auto& [bkey, bc] : b.terms()) {
    OnhElement<K> cur = a;
    cur *= bc;
    for (int k = 1; k <= n; ++k)
      for (long rep = 0; rep < bkey.exps[static_cast<std::size_t>(k) - 1]; ++rep) {
        OnhElement<K> next(n);
        for (const auto& [key, c] : cur.terms())
          onh_detail::push_x_term(next, key.exps, Permutation(key.w_images), c, k);
        cur = std::move(next);
      }
    for (int g : Permutation(bkey.w_images).min_reduced_word()) {
      OnhElement<K> next(n);
      for (const auto& [key, c] : cur.terms())
        onh_detail::push_tau_term(next, key.exps, Permutation(key.w_images), c, g);
      cur = std::move(next);
    }
    out += cur;
  }
  return out;
}

// ---------------------------------------------------------------------------
// The cyclotomic quotient

/**
 * ONH_n^l = ONH_n / (x_1^l), for l >= n (below that the quotient is the zero
 * algebra and the construction below has nothing to build on).
 *
 * Construction: level k = 1..n-1 holds 2^k skew polynomials g_e indexed by
 * bit strings e = (e_k,..,e_1); writing tau_{S_k^e} = tau_k^{e_k}..tau_1^{e_1}
 * (letters in decreasing order, kept when the bit is set), each level
 * satisfies  sum_e g_e tau_{S_k^e} = 0  in the quotient.  Level 1:
 *   g_0 = sum_{a+b=l-1} (-1)^b x_2^b x_1^a,   g_1 = (-1)^l x_2^l,
 * which restates 0 = tau_1 x_1^l.  Level k+1 comes from level k by splitting
 * tau_{k+1} g_e = h + h' tau_{k+1} and setting g_{0e} = h, g_{1e} = h'.
 *
 * The bit-0 member of level m-1 is a polynomial in x_m of degree l-m+1 whose
 * leading coefficient c is a unit; solving the level relation for the leading
 * monomial yields the rewrite rule
 *   x_m^{l-m+1} -> -(1/c) * ( (g_0 - c x_m^{l-m+1}) + sum_{e != 0} g_e tau_{S^e} ),
 * and x_1^l -> 0 directly.  Reduction repeatedly rewrites, in every term, the
 * largest index m whose exponent exceeds l-m; this terminates because each
 * step lexicographically decreases (m, -length(w), exponent of x_m): the
 * crossing-free part of the rule drops the x_m exponent, and every crossing
 * term strictly lengthens w (a bounded quantity).
 */
template <typename K>
class OnhAlgebra {
 public:
  OnhAlgebra(int n, long ell) : n_(n), ell_(ell) {
    if (n < 0) throw std::invalid_argument("negative rank");
    if (ell < n)
      throw std::invalid_argument(
          "level below rank: the quotient collapses to zero and admits no "
          "bounded normal form");
    build_families();
    build_rules();
  }

  int rank() const { return n_; }
  long level() const { return ell_; }

  /// families()[k-1][e] is the level-k skew polynomial for bit string e
  /// (bit i-1 of e is the exponent of tau_i in the attached crossing word).
  const std::vector<std::vector<SkewPoly<K>>>& families() const { return families_; }

  /// The rewrite target of x_m^{l-m+1} (index m = 1..n).
  const OnhElement<K>& rule(int m) const {
    return rules_.at(static_cast<std::size_t>(m) - 1);
  }

  /// Unique bounded normal form of a modulo the two-sided ideal (x_1^l).
  OnhElement<K> reduce(const OnhElement<K>& a) const {
    if (a.rank() != n_) throw std::invalid_argument("rank mismatch");
    OnhElement<K> cur = a;
    long budget = 2'000'000;
    while (true) {
      OnhElement<K> next(n_);
      bool changed = false;
      for (const auto& [key, c] : cur.terms()) {
        const int m = largest_violation(key.exps);
        if (m == 0) {
          next.add_term(key.exps, Permutation(key.w_images), c);
          continue;
        }
        if (--budget < 0)
          throw GuardError("cyclotomic reduction exceeded its step budget");
        changed = true;
        const long drop = ell_ - m + 1;
        std::vector<long> head = key.exps;
        std::vector<long> tail(static_cast<std::size_t>(n_), 0);
        head[static_cast<std::size_t>(m) - 1] -= drop;
        for (int i = m + 1; i <= n_; ++i) {
          tail[static_cast<std::size_t>(i) - 1] = head[static_cast<std::size_t>(i) - 1];
          head[static_cast<std::size_t>(i) - 1] = 0;
        }
        const auto head_elem =
            OnhElement<K>::monomial(n_, std::move(head), Permutation::identity(n_), c);
        const auto tail_elem = OnhElement<K>::monomial(n_, std::move(tail),
                                                       Permutation(key.w_images), K(1));
        next += multiply_free(
            multiply_free(head_elem, rules_[static_cast<std::size_t>(m) - 1]),
            tail_elem);
      }
      if (!changed) return next;
      cur = std::move(next);
    }
  }

  /// Product in the quotient: free product followed by reduction.
  OnhElement<K> multiply(const OnhElement<K>& a, const OnhElement<K>& b) const {
    return reduce(multiply_free(a, b));
  }

 private:
  // Largest m with exps[m-1] > l - m, or 0 when all bounds hold.
  int largest_violation(const std::vector<long>& exps) const {
    for (int m = n_; m >= 1; --m)
      if (exps[static_cast<std::size_t>(m) - 1] > ell_ - m) return m;
    return 0;
  }

  void build_families() {
    if (n_ < 2) return;
    families_.resize(static_cast<std::size_t>(n_) - 1);

    // Level 1: two polynomials restating 0 = tau_1 x_1^l.  In canonical
    // variable order, x_2^b x_1^a = (-1)^{ab} x_1^a x_2^b.
    auto& base = families_[0];
    base.assign(2, SkewPoly<K>{n_, {}});
    for (long a = 0; a + 1 <= ell_; ++a) {
      const long b = ell_ - 1 - a;
      std::vector<long> exps(static_cast<std::size_t>(n_), 0);
      exps[0] = a;
      exps[1] = b;
      base[0].terms.emplace(std::move(exps),
                            K((b * (a + 1)) % 2 == 0 ? 1 : -1));
    }
    {
      std::vector<long> exps(static_cast<std::size_t>(n_), 0);
      exps[1] = ell_;
      base[1].terms.emplace(std::move(exps), K(ell_ % 2 == 0 ? 1 : -1));
    }

    for (int k = 2; k < n_; ++k) {
      const auto& prev = families_[static_cast<std::size_t>(k) - 2];
      auto& next = families_[static_cast<std::size_t>(k) - 1];
      next.assign(std::size_t{1} << k, SkewPoly<K>{n_, {}});
      const auto tau_k = OnhElement<K>::tau(n_, k);
      const std::vector<int> id = Permutation::identity(n_).one_line();
      const std::vector<int> flip =
          Permutation::adjacent_transposition(n_, k).one_line();
      for (std::size_t e = 0; e < prev.size(); ++e) {
        const auto product = multiply_free(tau_k, from_skew(prev[e]));
        for (const auto& [key, c] : product.terms()) {
          if (key.w_images == id)
            next[e].terms.emplace(key.exps, c);
          else if (key.w_images == flip)
            next[e | (std::size_t{1} << (k - 1))].terms.emplace(key.exps, c);
          else
            throw std::logic_error("annihilator split produced a stray crossing");
        }
      }
    }
  }

  void build_rules() {
    rules_.assign(static_cast<std::size_t>(n_), OnhElement<K>::zero(n_));
    // x_1^l -> 0: the empty rule at index 1 is already in place.
    for (int m = 2; m <= n_; ++m) {
      const auto& family = families_[static_cast<std::size_t>(m) - 2];
      std::vector<long> lead(static_cast<std::size_t>(n_), 0);
      lead[static_cast<std::size_t>(m) - 1] = ell_ - m + 1;
      const auto it = family[0].terms.find(lead);
      if (it == family[0].terms.end() || it->second == K(0))
        throw std::logic_error("annihilator leading coefficient vanished");
      const K c = it->second;

      OnhElement<K> rhs(n_);
      for (std::size_t e = 0; e < family.size(); ++e) {
        std::vector<int> word;
        for (int i = m - 1; i >= 1; --i)
          if (e & (std::size_t{1} << (i - 1))) word.push_back(i);
        const TauNormal tn = tau_word_reduce(n_, word);
        for (const auto& [exps, coeff] : family[e].terms)
          rhs.add_term(exps, tn.w, tn.sign > 0 ? coeff : K(-coeff));
      }
      rhs.add_term(lead, Permutation::identity(n_), K(-c));
      rhs *= K(-1) / c;
      rules_[static_cast<std::size_t>(m) - 1] = std::move(rhs);
    }
  }

  int n_;
  long ell_;
  std::vector<std::vector<SkewPoly<K>>> families_;
  std::vector<OnhElement<K>> rules_;
};

/// Standalone annihilator-family builder (families()[k-1][e] as above).
template <typename K>
std::vector<std::vector<SkewPoly<K>>> annihilator_families(int n, long ell) {
  return OnhAlgebra<K>(n, ell).families();
}

}  // namespace superklr
