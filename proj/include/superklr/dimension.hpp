/**
 * @file dimension.hpp
 * @brief Graded super-dimensions of the inner spaces e(nu) R(beta) e(nu') of
 *        a cyclotomic quiver Hecke superalgebra, computed by the closed
 *        transporter-sum formula.
 *
 * For sequences nu, nu' of common length n and a dominant weight Lambda, the
 * (q, pi)-dimension of e(nu) R^Lambda(beta) e(nu') is
 *
 *   sum over w with w.nu = nu' of
 *     prod_{t=1}^{n} [N(w,nu,t)]_{nu_t} * q_{nu_t}^{N(1,nu,t)-1}
 *                                       * pi_{nu_t}^{p(w,nu,t)}
 *
 * where N(w,nu,t) = <h_{nu_t}, Lambda - sum_{j<t, w(j)<w(t)} alpha_{nu_j}>,
 * p(w,nu,t) = sum_{k<t, w(k)>w(t)} p(nu_k), q_i = q^{d_i}, pi_i = pi^{p(i)},
 * and [m]_i is the parity-twisted quantum integer.  Note the q-shift uses the
 * identity permutation's N-statistic for every summand.
 */
#pragma once

#include <superklr/cartan.hpp>
#include <superklr/permutation.hpp>
#include <superklr/qpi.hpp>

#include <vector>

namespace superklr {

/// N(w, nu, t) with t 1-based.
long n_stat(const CartanSuperdatum& datum, const DominantWeight& lambda,
            const WeightSeq& nu, const Permutation& w, int t);

/// The same statistic read through the target sequence nu' = w.nu:
/// <h_{nu_t}, Lambda - sum over positions k < w(t) hit by w(1..t-1) of
/// alpha_{nu'_k}>.  Equal to n_stat; kept as an independent route for tests.
long n_stat_target(const CartanSuperdatum& datum, const DominantWeight& lambda,
                   const WeightSeq& nu_prime, const Permutation& w, int t);

/// p(w, nu, t) = sum_{k<t, w(k)>w(t)} p(nu_k) in Z/2.
Parity p_stat(const CartanSuperdatum& datum, const WeightSeq& nu,
              const Permutation& w, int t);

/// The same parity read through the target sequence (independent route).
Parity p_stat_target(const CartanSuperdatum& datum, const WeightSeq& nu_prime,
                     const Permutation& w, int t);

/// Full (q, pi)-graded dimension.  n = 0 gives 1; an empty transporter set
/// gives 0.
QPiPolynomial graded_dim(const CartanSuperdatum& datum, const DominantWeight& lambda,
                         const WeightSeq& nu, const WeightSeq& nu_prime);

/// Z-graded dimension (pi collapsed), computed directly with classical
/// quantum integers rather than by specializing graded_dim.
LaurentPolynomial graded_dim_z(const CartanSuperdatum& datum,
                               const DominantWeight& lambda, const WeightSeq& nu,
                               const WeightSeq& nu_prime);

/// Ungraded dimension: plain integer transporter sum of N-products.
BigInt ungraded_dim(const CartanSuperdatum& datum, const DominantWeight& lambda,
                    const WeightSeq& nu, const WeightSeq& nu_prime);

struct IdempotentCheck {
  BigInt value;  // ungraded dimension of e(nu) R e(nu)
  bool nonzero = false;
};

/// e(nu) != 0 in the quotient iff the diagonal ungraded dimension is nonzero.
IdempotentCheck idempotent_nonzero(const CartanSuperdatum& datum,
                                   const DominantWeight& lambda, const WeightSeq& nu);

/// A sequence made of p pairwise distinct labels repeated in blocks:
/// block_label[i] repeated block_mult[i] times, concatenated.
struct TildeBlocks {
  std::vector<long> block_label;  // label indices, pairwise distinct
  std::vector<long> block_mult;   // multiplicities >= 1
};

WeightSeq tilde_sequence(const TildeBlocks& blocks);

struct TildeDims {
  /// First-column statistic per block: N_i = N(1, nu~, c_{i-1}+1).
  std::vector<long> block_n;
  /// Per-position box bound N(nu~, k) = N_i - (k - c_{i-1} - 1), k = 1..n.
  std::vector<long> box_bound;
  /// prod_i ( b_i! * prod_{j=0}^{b_i-1} (N_i - j) ).
  BigInt total;
  /// True iff N_i >= b_i for every block.
  bool nonzero = false;
};

/// Closed-form diagonal dimension for a block-constant sequence.
TildeDims tilde_dims(const CartanSuperdatum& datum, const DominantWeight& lambda,
                     const TildeBlocks& blocks);

}  // namespace superklr
