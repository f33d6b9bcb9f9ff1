#include <superklr/dimension.hpp>

#include <algorithm>
#include <set>

namespace superklr {

namespace {

void check_query(const CartanSuperdatum& datum, const DominantWeight& lambda,
                 const WeightSeq& nu, const WeightSeq& nu_prime) {
  check_weight(datum, lambda);
  check_weight_seq(datum, nu);
  check_weight_seq(datum, nu_prime);
  if (nu.size() != nu_prime.size())
    throw std::invalid_argument("sequences have different lengths");
}

/// Classical quantum integer [m] at q_i = q^d (the pi -> 1 shadow).
LaurentPolynomial laurent_bracket(long m, long d) {
  if (m < 0) {
    const LaurentPolynomial positive = laurent_bracket(-m, d);
    LaurentPolynomial out;
    for (const auto& [e, c] : positive.terms()) out.add_term(e, -c);
    return out;
  }
  LaurentPolynomial out;
  for (long k = 0; k < m; ++k) out.add_term(d * (m - 1 - 2 * k), 1);
  return out;
}

}  // namespace

long n_stat(const CartanSuperdatum& datum, const DominantWeight& lambda,
            const WeightSeq& nu, const Permutation& w, int t) {
  RootVector sub(datum.rank(), 0);
  for (int j : j_set(w, t)) ++sub[nu[j - 1]];
  return pairing(datum, nu[t - 1], lambda, sub);
}

long n_stat_target(const CartanSuperdatum& datum, const DominantWeight& lambda,
                   const WeightSeq& nu_prime, const Permutation& w, int t) {
  // Positions hit by w among 1..t-1, restricted to those below w(t).
  std::set<int> hit;
  for (int j = 1; j < t; ++j) hit.insert(w(j));
  RootVector sub(datum.rank(), 0);
  for (int k = 1; k < w(t); ++k)
    if (hit.count(k)) ++sub[nu_prime[k - 1]];
  return pairing(datum, nu_prime[w(t) - 1], lambda, sub);
}

Parity p_stat(const CartanSuperdatum& datum, const WeightSeq& nu,
              const Permutation& w, int t) {
  Parity out = Parity::even;
  for (int k = 1; k < t; ++k)
    if (w(k) > w(t)) out = parity_sum(out, datum.parity[nu[k - 1]]);
  return out;
}

Parity p_stat_target(const CartanSuperdatum& datum, const WeightSeq& nu_prime,
                     const Permutation& w, int t) {
  std::set<int> hit;
  for (int j = 1; j < t; ++j) hit.insert(w(j));
  Parity out = Parity::even;
  const int n = w.degree();
  for (int k = w(t) + 1; k <= n; ++k)
    if (hit.count(k)) out = parity_sum(out, datum.parity[nu_prime[k - 1]]);
  return out;
}

QPiPolynomial graded_dim(const CartanSuperdatum& datum, const DominantWeight& lambda,
                         const WeightSeq& nu, const WeightSeq& nu_prime) {
  check_query(datum, lambda, nu, nu_prime);
  const int n = static_cast<int>(nu.size());
  if (n == 0) return QPiPolynomial::one();

  const std::vector<Permutation> sources = transporter(nu, nu_prime);
  if (sources.empty()) return QPiPolynomial::zero();

  // The q-shift per column uses the identity permutation's statistic.
  const Permutation id = Permutation::identity(n);
  std::vector<long> n_id(n);
  for (int t = 1; t <= n; ++t) n_id[t - 1] = n_stat(datum, lambda, nu, id, t);

  QPiPolynomial total;
  for (const Permutation& w : sources) {
    QPiPolynomial term = QPiPolynomial::one();
    for (int t = 1; t <= n && !term.is_zero(); ++t) {
      const long i = nu[t - 1];
      const long di = datum.d[i];
      const Parity pi = datum.parity[i];
      const long m = n_stat(datum, lambda, nu, w, t);
      const Parity twist = parity_and(pi, p_stat(datum, nu, w, t));
      term = term * quantum_bracket(m, di, pi).shifted(di * (n_id[t - 1] - 1), twist);
    }
    total += term;
  }
  return total;
}

LaurentPolynomial graded_dim_z(const CartanSuperdatum& datum,
                               const DominantWeight& lambda, const WeightSeq& nu,
                               const WeightSeq& nu_prime) {
  check_query(datum, lambda, nu, nu_prime);
  const int n = static_cast<int>(nu.size());
  if (n == 0) return LaurentPolynomial::one();

  const std::vector<Permutation> sources = transporter(nu, nu_prime);
  if (sources.empty()) return LaurentPolynomial::zero();

  const Permutation id = Permutation::identity(n);
  std::vector<long> n_id(n);
  for (int t = 1; t <= n; ++t) n_id[t - 1] = n_stat(datum, lambda, nu, id, t);

  LaurentPolynomial total;
  for (const Permutation& w : sources) {
    LaurentPolynomial term = LaurentPolynomial::one();
    for (int t = 1; t <= n && !term.is_zero(); ++t) {
      const long i = nu[t - 1];
      const long di = datum.d[i];
      const long m = n_stat(datum, lambda, nu, w, t);
      term = term * (laurent_bracket(m, di) *
                     LaurentPolynomial::monomial(1, di * (n_id[t - 1] - 1)));
    }
    total += term;
  }
  return total;
}

BigInt ungraded_dim(const CartanSuperdatum& datum, const DominantWeight& lambda,
                    const WeightSeq& nu, const WeightSeq& nu_prime) {
  check_query(datum, lambda, nu, nu_prime);
  const int n = static_cast<int>(nu.size());
  if (n == 0) return 1;
  BigInt total = 0;
  for (const Permutation& w : transporter(nu, nu_prime)) {
    BigInt term = 1;
    for (int t = 1; t <= n && term != 0; ++t)
      term *= n_stat(datum, lambda, nu, w, t);
    total += term;
  }
  return total;
}

IdempotentCheck idempotent_nonzero(const CartanSuperdatum& datum,
                                   const DominantWeight& lambda,
                                   const WeightSeq& nu) {
  IdempotentCheck out;
  out.value = ungraded_dim(datum, lambda, nu, nu);
  out.nonzero = out.value != 0;
  return out;
}

WeightSeq tilde_sequence(const TildeBlocks& blocks) {
  WeightSeq nu;
  for (std::size_t i = 0; i < blocks.block_label.size(); ++i)
    nu.insert(nu.end(), blocks.block_mult[i], blocks.block_label[i]);
  return nu;
}

TildeDims tilde_dims(const CartanSuperdatum& datum, const DominantWeight& lambda,
                     const TildeBlocks& blocks) {
  const std::size_t p = blocks.block_label.size();
  if (blocks.block_mult.size() != p)
    throw std::invalid_argument("block labels and multiplicities differ in size");
  std::set<long> seen;
  for (long i : blocks.block_label) {
    if (i < 0 || i >= static_cast<long>(datum.rank()))
      throw std::invalid_argument("block label out of range");
    if (!seen.insert(i).second)
      throw std::invalid_argument("block labels must be pairwise distinct");
  }
  for (long b : blocks.block_mult)
    if (b < 1) throw std::invalid_argument("block multiplicities must be >= 1");
  check_weight(datum, lambda);

  TildeDims out;
  out.total = 1;
  out.nonzero = true;
  RootVector consumed(datum.rank(), 0);
  for (std::size_t i = 0; i < p; ++i) {
    const long label = blocks.block_label[i];
    const long b = blocks.block_mult[i];
    // N_i only sees the blocks strictly before block i.
    const long n_i = pairing(datum, label, lambda, consumed);
    out.block_n.push_back(n_i);
    out.total *= factorial(b);
    for (long j = 0; j < b; ++j) {
      out.box_bound.push_back(n_i - j);
      out.total *= BigInt(n_i - j);
    }
    if (n_i < b) out.nonzero = false;
    consumed[label] += b;
  }
  return out;
}

}  // namespace superklr
