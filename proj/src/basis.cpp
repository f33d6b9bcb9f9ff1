#include <superklr/basis.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace superklr {

namespace {

struct TauDegree {
  long degree = 0;
  Parity par = Parity::even;
};

// Degree and parity of the crossing word tau_{a_1} ... tau_{a_m} applied to
// the idempotent of seq.  The rightmost crossing acts first, and each crossing
// at slot a sees the labels currently in positions a, a+1, then swaps them:
// deg tau_a = -(alpha_i|alpha_j), parity p(i)p(j).
TauDegree tau_word_degrees(const CartanSuperdatum& datum, WeightSeq seq,
                           const std::vector<int>& word) {
  TauDegree out;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int a = *it;
    const long i = seq[static_cast<std::size_t>(a) - 1];
    const long j = seq[static_cast<std::size_t>(a)];
    out.degree -= bilinear(datum, i, j);
    out.par = parity_sum(out.par, parity_and(datum.parity[i], datum.parity[j]));
    std::swap(seq[static_cast<std::size_t>(a) - 1], seq[static_cast<std::size_t>(a)]);
  }
  return out;
}

// All exponent vectors r with 0 <= r_k < bounds[k], in lexicographic order.
// Empty as soon as one bound is <= 0.
std::vector<std::vector<long>> exponent_boxes(const std::vector<long>& bounds) {
  std::vector<std::vector<long>> out;
  for (long b : bounds)
    if (b <= 0) return out;
  std::vector<long> r(bounds.size(), 0);
  while (true) {
    out.push_back(r);
    std::size_t k = bounds.size();
    while (k > 0 && ++r[k - 1] == bounds[k - 1]) r[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

}  // namespace

std::vector<MonomialLabel> tilde_basis(const CartanSuperdatum& datum,
                                       const DominantWeight& lambda,
                                       const TildeBlocks& blocks) {
  const TildeDims dims = tilde_dims(datum, lambda, blocks);  // also validates
  const WeightSeq nu = tilde_sequence(blocks);
  const GeneratorDegrees gen = generator_degrees(datum, nu);

  std::vector<MonomialLabel> out;
  const auto boxes = exponent_boxes(dims.box_bound);
  if (boxes.empty()) return out;

  for (const Permutation& w : young_subgroup(blocks.block_mult)) {
    const TauDegree tau = tau_word_degrees(datum, nu, w.min_reduced_word());
    for (const auto& r : boxes) {
      MonomialLabel label{w, r, tau.degree, tau.par};
      for (std::size_t k = 0; k < r.size(); ++k) {
        label.degree += r[k] * gen.x_degree[k];
        label.par = parity_sum(label.par, parity_pow(gen.x_parity[k], r[k]));
      }
      out.push_back(std::move(label));
    }
  }
  return out;
}

std::vector<MonomialLabel> onh_basis(long n, long ell) {
  if (n < 0 || ell < 0)
    throw std::invalid_argument("onh_basis: n and ell must be nonnegative");
  if (n > max_permutation_degree())
    throw GuardError("onh_basis: rank " + std::to_string(n) +
                     " exceeds the permutation degree cap");

  std::vector<MonomialLabel> out;
  std::vector<long> bounds(static_cast<std::size_t>(n));
  for (long i = 1; i <= n; ++i) bounds[static_cast<std::size_t>(i) - 1] = ell - i + 1;
  const auto boxes = exponent_boxes(bounds);
  if (boxes.empty() && n > 0) return out;  // the quotient collapses when ell < n

  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  do {
    const Permutation w{std::vector<int>(images)};
    const long len = w.length();
    for (const auto& r : boxes) {
      const long total = std::accumulate(r.begin(), r.end(), 0L);
      out.push_back(MonomialLabel{w, r, 2 * total - 2 * len,
                                  parity_of_int(total + len)});
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

QPiPolynomial graded_super_dimension(long n, long ell) {
  QPiPolynomial total;
  for (const MonomialLabel& label : onh_basis(n, ell))
    total.add_term(label.degree, label.par, 1);
  return total;
}

std::vector<MonomialLabel> distinct_root_basis(const CartanSuperdatum& datum,
                                               const DominantWeight& lambda,
                                               const WeightSeq& mu,
                                               const WeightSeq& nu) {
  check_weight_seq(datum, mu);
  check_weight_seq(datum, nu);
  check_weight(datum, lambda);
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (std::size_t j = i + 1; j < mu.size(); ++j)
      if (mu[i] == mu[j])
        throw std::invalid_argument(
            "distinct_root_basis: sequence entries must be pairwise distinct");

  const std::vector<Permutation> trans = transporter(mu, nu);
  if (trans.empty())
    throw std::invalid_argument(
        "distinct_root_basis: target is not a rearrangement of the source");
  const Permutation& d = trans.front();  // unique, since entries are distinct

  const int n = static_cast<int>(mu.size());
  std::vector<long> bounds(mu.size());
  for (int t = 1; t <= n; ++t)
    bounds[static_cast<std::size_t>(t) - 1] = n_stat(datum, lambda, mu, d, t);

  std::vector<MonomialLabel> out;
  const auto boxes = exponent_boxes(bounds);
  if (boxes.empty() && n > 0) return out;

  const GeneratorDegrees gen = generator_degrees(datum, mu);
  const TauDegree tau = tau_word_degrees(datum, mu, d.min_reduced_word());
  for (const auto& r : boxes) {
    MonomialLabel label{d, r, tau.degree, tau.par};
    for (std::size_t k = 0; k < r.size(); ++k) {
      label.degree += r[k] * gen.x_degree[k];
      label.par = parity_sum(label.par, parity_pow(gen.x_parity[k], r[k]));
    }
    out.push_back(std::move(label));
  }
  return out;
}

}  // namespace superklr
