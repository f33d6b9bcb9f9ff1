#include <superklr/fock.hpp>

namespace superklr {

void FockState::add(const WeightSeq& key, const QPiPolynomial& amp) {
  if (amp.is_zero()) return;
  auto [it, inserted] = amplitudes.emplace(key, amp);
  if (!inserted) {
    it->second += amp;
    if (it->second.is_zero()) amplitudes.erase(it);
  }
}

FockState initial_state(const WeightSeq& nu_prime) {
  FockState s;
  s.add(nu_prime, QPiPolynomial::one());
  return s;
}

FockState apply_e(const CartanSuperdatum& datum, const DominantWeight& lambda,
                  long i, const FockState& state) {
  check_weight(datum, lambda);
  if (i < 0 || i >= static_cast<long>(datum.rank()))
    throw std::invalid_argument("raising label out of range");
  const long di = datum.d[i];
  const Parity pi = datum.parity[i];

  FockState out;
  for (const auto& [seq, amp] : state.amplitudes) {
    const long m = static_cast<long>(seq.size());
    for (long k = 1; k <= m; ++k) {
      if (seq[k - 1] != i) continue;
      // Contraction against letter k: the prefix below k sets the quantum
      // integer, the suffix above k contributes the parity and q twists
      // picked up while commuting e_i inward.
      RootVector prefix(datum.rank(), 0);
      for (long l = 0; l < k - 1; ++l) ++prefix[seq[l]];
      const long m_k = pairing(datum, i, lambda, prefix);

      long suffix_pairing = 0;  // <h_i, sum of alpha_{j_l} for l > k>
      long suffix_odd = 0;      // number of odd letters after position k
      for (long l = k; l < m; ++l) {
        suffix_pairing += datum.cartan[i][seq[l]];
        suffix_odd += parity_bit(datum.parity[seq[l]]);
      }

      const QPiPolynomial weight =
          quantum_bracket(m_k, di, pi)
              .shifted(di * (m_k - 1) - di * suffix_pairing,
                       parity_pow(pi, suffix_odd));

      WeightSeq shorter;
      shorter.reserve(m - 1);
      for (long l = 0; l < m; ++l)
        if (l != k - 1) shorter.push_back(seq[l]);
      out.add(shorter, amp * weight);
    }
  }
  return out;
}

QPiPolynomial oracle_dim(const CartanSuperdatum& datum, const DominantWeight& lambda,
                         const WeightSeq& nu, const WeightSeq& nu_prime) {
  check_weight_seq(datum, nu);
  check_weight_seq(datum, nu_prime);
  if (nu.size() != nu_prime.size())
    throw std::invalid_argument("sequences have different lengths");

  FockState state = initial_state(nu_prime);
  for (std::size_t t = nu.size(); t > 0; --t)
    state = apply_e(datum, lambda, nu[t - 1], state);

  QPiPolynomial out;
  for (const auto& [seq, amp] : state.amplitudes) {
    if (!seq.empty())
      throw std::logic_error("raising chain left a nonempty monomial behind");
    out = amp;
  }
  return out;
}

}  // namespace superklr
