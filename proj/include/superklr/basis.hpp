/**
 * @file basis.hpp
 * @brief Explicit monomial bases: the diagonal basis of a block-constant
 *        sequence, the cyclotomic odd nilHecke basis, and the two-sided
 *        basis between multiplicity-free sequences.
 *
 * Every basis element is a monomial tau-word times a product of polynomial
 * generators under an idempotent; a label records the permutation, the
 * exponent vector, and the resulting (Z, Z/2) degree.  Enumeration order is
 * lexicographic on (one-line notation of w, exponent vector).
 */
#pragma once

#include <superklr/cartan.hpp>
#include <superklr/dimension.hpp>
#include <superklr/permutation.hpp>
#include <superklr/qpi.hpp>

#include <vector>

namespace superklr {

struct MonomialLabel {
  Permutation w;
  std::vector<long> exponents;  // exponent of x_k, k = 1..n
  long degree = 0;              // Z-degree
  Parity par = Parity::even;    // Z/2-degree

  friend bool operator==(const MonomialLabel&, const MonomialLabel&) = default;
};

/// Diagonal basis of e(nu~) R e(nu~) for a block-constant sequence:
/// tau_w prod x_k^{r_k} e(nu~) with w in the Young subgroup of the block
/// composition and 0 <= r_k < N(nu~, k).  Empty iff some box bound is <= 0.
std::vector<MonomialLabel> tilde_basis(const CartanSuperdatum& datum,
                                       const DominantWeight& lambda,
                                       const TildeBlocks& blocks);

/// Basis of the rank-n cyclotomic odd nilHecke algebra at level ell:
/// x_1^{k_1} ... x_n^{k_n} tau_w with 0 <= k_i <= ell - i; empty iff ell < n.
/// Degrees: deg x = 2, deg tau = -2, every generator odd.
std::vector<MonomialLabel> onh_basis(long n, long ell);

/// Graded super-dimension census of the cyclotomic odd nilHecke algebra:
/// sum of q^degree pi^parity over onh_basis(n, ell).
QPiPolynomial graded_super_dimension(long n, long ell);

/// Basis of e(nu) R e(mu) when all labels of mu are pairwise distinct:
/// tau_d prod x_k^{r_k} e(mu) with d the unique permutation with d.mu = nu
/// and 0 <= r_k < N(d, mu, k).
std::vector<MonomialLabel> distinct_root_basis(const CartanSuperdatum& datum,
                                               const DominantWeight& lambda,
                                               const WeightSeq& mu,
                                               const WeightSeq& nu);

}  // namespace superklr
