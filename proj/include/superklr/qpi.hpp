/**
 * @file qpi.hpp
 * @brief Exact arithmetic in Z[q^{±1}][pi]/(pi^2 - 1) and its specializations.
 *
 * Graded super-dimensions live in the group ring of Z x Z/2: a formal sum of
 * monomials c * pi^s * q^e with big-integer c, s in {0,1}, e in Z.  The
 * canonical term order (descending q-exponent, pi-free slot first) is baked
 * into the term map so that iteration, text rendering, and equality are all
 * automatically canonical.  In rendered text pi prints as "p".
 */
#pragma once

#include <superklr/common.hpp>

#include <map>
#include <string>
#include <utility>

namespace superklr {

/// One monomial slot q^q * pi^par.
struct QPiKey {
  long q = 0;
  Parity par = Parity::even;
  friend bool operator==(const QPiKey&, const QPiKey&) = default;
};

/// Canonical order: larger q-exponent first; ties print the pi-free part first.
struct QPiKeyOrder {
  bool operator()(const QPiKey& a, const QPiKey& b) const {
    if (a.q != b.q) return a.q > b.q;
    return static_cast<unsigned>(a.par) < static_cast<unsigned>(b.par);
  }
};

class QPiPolynomial {
 public:
  using TermMap = std::map<QPiKey, BigInt, QPiKeyOrder>;

  QPiPolynomial() = default;

  static QPiPolynomial zero() { return {}; }
  static QPiPolynomial one() { return monomial(1, 0, Parity::even); }
  static QPiPolynomial monomial(BigInt coeff, long q_exp, Parity par);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  /// Coefficient of q^q_exp * pi^par (zero if absent).
  BigInt coefficient(long q_exp, Parity par) const;

  void add_term(long q_exp, Parity par, const BigInt& coeff);

  QPiPolynomial& operator+=(const QPiPolynomial& rhs);
  QPiPolynomial& operator-=(const QPiPolynomial& rhs);
  QPiPolynomial& operator*=(const BigInt& scalar);
  friend QPiPolynomial operator+(QPiPolynomial a, const QPiPolynomial& b) {
    a += b;
    return a;
  }
  friend QPiPolynomial operator-(QPiPolynomial a, const QPiPolynomial& b) {
    a -= b;
    return a;
  }
  friend QPiPolynomial operator*(const QPiPolynomial& a, const QPiPolynomial& b);
  friend QPiPolynomial operator*(QPiPolynomial a, const BigInt& s) {
    a *= s;
    return a;
  }

  friend bool operator==(const QPiPolynomial& a, const QPiPolynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const QPiPolynomial& a, const QPiPolynomial& b) {
    return !(a == b);
  }

  /// Multiply by the monomial q^q_exp * pi^par (exact, no allocation churn).
  QPiPolynomial shifted(long q_exp, Parity par) const;

  /// Canonical text, e.g. "q^8 + 3*p*q^6 + 4*q^4 + 3*p*q^2 + 1"; zero is "0".
  std::string to_text() const;

 private:
  TermMap terms_;
};

/// Laurent polynomial in q with big-integer coefficients, canonical order
/// descending in the exponent.  This is the pi -> 1 shadow of QPiPolynomial.
class LaurentPolynomial {
 public:
  using TermMap = std::map<long, BigInt, std::greater<long>>;

  LaurentPolynomial() = default;
  static LaurentPolynomial zero() { return {}; }
  static LaurentPolynomial one() { return monomial(1, 0); }
  static LaurentPolynomial monomial(BigInt coeff, long q_exp);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  BigInt coefficient(long q_exp) const;
  void add_term(long q_exp, const BigInt& coeff);

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    a += b;
    return a;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return !(a == b);
  }

  std::string to_text() const;

 private:
  TermMap terms_;
};

/**
 * Parity-twisted quantum integer [m] for a strand of weight scale d and the
 * given parity: with pi_i = pi^{p} and q_i = q^{d},
 *
 *   [m] = sum_{k=0}^{m-1} pi_i^{m-1-k} q_i^{m-1-2k}          for m >= 0,
 *   [m] = -pi_i^{|m|} [|m|]                                  for m < 0,
 *
 * which is the unique solution of [m] * (pi_i q_i - q_i^{-1}) =
 * (pi_i q_i)^m - q_i^{-m}.  [0] = 0 and [1] = 1.
 */
QPiPolynomial quantum_bracket(long m, long d, Parity parity);

/// Specialize pi -> 1 (collapse the two parity slots per q-exponent).
LaurentPolynomial specialize_pi_one(const QPiPolynomial& p);

/// Specialize q -> 1 and pi -> 1 (total coefficient sum).
BigInt specialize_total(const QPiPolynomial& p);

/// Sum of coefficients of a Laurent polynomial (q -> 1).
BigInt specialize_total(const LaurentPolynomial& p);

}  // namespace superklr
