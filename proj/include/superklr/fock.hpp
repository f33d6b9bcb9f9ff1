/**
 * @file fock.hpp
 * @brief Independent cross-check of the dimension formula through the exact
 *        raising-operator action on monomials in a highest-weight module.
 *
 * A state is a finite sum of labelled monomials: the key (j_1, ..., j_m)
 * stands for the product of lowering operators f_{j_m} ... f_{j_1} applied to
 * the highest-weight vector, with amplitude in Z[q^{±1}][pi]/(pi^2-1).  The
 * raising operator e_i removes one letter equal to i at a time:
 *
 *   e_i . (j_1..j_m)  =  sum over positions k with j_k = i of
 *       [m_k]_i * q_i^{m_k - 1}
 *       * pi_i^{(number of odd letters after k)}
 *       * q_i^{-<h_i, sum of alpha_{j_l} for l > k>}
 *       * (j_1..j_m with position k removed),
 *
 * where m_k = <h_i, Lambda - sum of alpha_{j_l} for l < k>.  Composing the
 * raising operators for nu in inner-first order against the monomial of nu'
 * and reading the amplitude of the empty monomial reproduces the graded
 * dimension of e(nu) R^Lambda(beta) e(nu') without ever enumerating a
 * transporter set.
 */
#pragma once

#include <superklr/cartan.hpp>
#include <superklr/qpi.hpp>

#include <map>

namespace superklr {

struct FockState {
  // Monomial label -> amplitude; zero amplitudes are never stored.
  std::map<WeightSeq, QPiPolynomial> amplitudes;

  void add(const WeightSeq& key, const QPiPolynomial& amp);
  friend bool operator==(const FockState&, const FockState&) = default;
};

/// The single monomial of nu' with amplitude 1.
FockState initial_state(const WeightSeq& nu_prime);

/// Apply the raising operator e_i to every monomial of the state.
FockState apply_e(const CartanSuperdatum& datum, const DominantWeight& lambda,
                  long i, const FockState& state);

/// Apply e_{nu_n}, ..., e_{nu_1} to the monomial of nu' and return the
/// amplitude of the empty monomial.  Throws std::logic_error if the final
/// state is supported anywhere else (internal-consistency failure).
QPiPolynomial oracle_dim(const CartanSuperdatum& datum, const DominantWeight& lambda,
                         const WeightSeq& nu, const WeightSeq& nu_prime);

}  // namespace superklr
