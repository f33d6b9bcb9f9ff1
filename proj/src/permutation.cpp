#include <superklr/permutation.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace superklr {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument("not a permutation in one-line notation");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  Permutation w;
  w.images_ = std::move(img);
  return w;
}

Permutation Permutation::adjacent_transposition(int n, int a) {
  if (a < 1 || a >= n) throw std::invalid_argument("transposition index out of range");
  Permutation w = identity(n);
  std::swap(w.images_[a - 1], w.images_[a]);
  return w;
}

Permutation Permutation::from_word(int n, const std::vector<int>& word) {
  // Left-multiplying by s_a swaps the *values* a and a+1; folding the word
  // right to left this way realizes w = s_{word[0]} s_{word[1]} ...
  Permutation w = identity(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int a = *it;
    if (a < 1 || a >= n) throw std::invalid_argument("word letter out of range");
    for (auto& v : w.images_)
      if (v == a)
        v = a + 1;
      else if (v == a + 1)
        v = a;
  }
  return w;
}

bool Permutation::is_identity() const {
  for (int j = 1; j <= degree(); ++j)
    if (images_[j - 1] != j) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (int j = 1; j <= degree(); ++j) inv.images_[images_[j - 1] - 1] = j;
  return inv;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  if (u.degree() != v.degree())
    throw std::invalid_argument("permutation degrees differ");
  Permutation w;
  w.images_.resize(u.images_.size());
  for (int j = 1; j <= u.degree(); ++j) w.images_[j - 1] = u(v(j));
  return w;
}

long Permutation::length() const {
  long inv = 0;
  for (int j = 1; j <= degree(); ++j)
    for (int k = j + 1; k <= degree(); ++k)
      if ((*this)(j) > (*this)(k)) ++inv;
  return inv;
}

bool Permutation::has_left_descent(int a) const {
  // length(s_a w) < length(w) iff w^{-1}(a) > w^{-1}(a+1).
  int pos_a = 0, pos_a1 = 0;
  for (int j = 1; j <= degree(); ++j) {
    if (images_[j - 1] == a) pos_a = j;
    if (images_[j - 1] == a + 1) pos_a1 = j;
  }
  return pos_a > pos_a1;
}

std::vector<int> Permutation::min_reduced_word() const {
  std::vector<int> word;
  Permutation w = *this;
  while (!w.is_identity()) {
    int a = 0;
    for (int i = 1; i < w.degree(); ++i)
      if (w.has_left_descent(i)) {
        a = i;
        break;
      }
    word.push_back(a);
    // w <- s_a w: swap the values a and a+1.
    for (auto& v : w.images_)
      if (v == a)
        v = a + 1;
      else if (v == a + 1)
        v = a;
  }
  return word;
}

WeightSeq act(const Permutation& w, const WeightSeq& nu) {
  if (static_cast<std::size_t>(w.degree()) != nu.size())
    throw std::invalid_argument("degree mismatch in place action");
  WeightSeq out(nu.size());
  for (int j = 1; j <= w.degree(); ++j) out[w(j) - 1] = nu[j - 1];
  return out;
}

namespace {

/// Positions (1-based) of each label value, in increasing order.
std::map<long, std::vector<int>> label_positions(const WeightSeq& nu) {
  std::map<long, std::vector<int>> out;
  for (std::size_t j = 0; j < nu.size(); ++j)
    out[nu[j]].push_back(static_cast<int>(j + 1));
  return out;
}

/// All permutations mapping each position class onto itself, built as the
/// direct product of the symmetric groups of the classes.
std::vector<Permutation> position_class_group(
    int n, const std::vector<std::vector<int>>& classes) {
  std::vector<Permutation> out{Permutation::identity(n)};
  for (const auto& positions : classes) {
    if (positions.size() < 2) continue;
    // Enumerate arrangements of this class and graft them onto every
    // permutation accumulated so far.
    std::vector<int> arrangement(positions.begin(), positions.end());
    std::vector<std::vector<int>> arrangements;
    std::sort(arrangement.begin(), arrangement.end());
    do {
      arrangements.push_back(arrangement);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    std::vector<Permutation> grown;
    grown.reserve(out.size() * arrangements.size());
    for (const auto& base : out)
      for (const auto& arr : arrangements) {
        std::vector<int> img = base.one_line();
        for (std::size_t t = 0; t < positions.size(); ++t)
          img[positions[t] - 1] = arr[t];
        grown.emplace_back(std::move(img));
      }
    out = std::move(grown);
  }
  return out;
}

}  // namespace

std::vector<Permutation> transporter(const WeightSeq& nu, const WeightSeq& nu_prime) {
  if (nu.size() != nu_prime.size()) return {};
  const int n = static_cast<int>(nu.size());
  if (n > max_permutation_degree())
    throw GuardError("sequence length " + std::to_string(n) +
                     " exceeds the permutation enumeration cap of " +
                     std::to_string(max_permutation_degree()) +
                     " (override with SUPERKLR_MAX_N)");

  const auto classes_nu = label_positions(nu);
  const auto classes_np = label_positions(nu_prime);
  if (classes_nu.size() != classes_np.size()) return {};
  // Fixed representative: the order-preserving matching of each label class.
  std::vector<int> rep_img(n, 0);
  for (const auto& [label, positions] : classes_nu) {
    const auto it = classes_np.find(label);
    if (it == classes_np.end() || it->second.size() != positions.size()) return {};
    for (std::size_t t = 0; t < positions.size(); ++t)
      rep_img[positions[t] - 1] = it->second[t];
  }
  const Permutation rep{rep_img};

  std::vector<std::vector<int>> stab_classes;
  for (const auto& [label, positions] : classes_nu) stab_classes.push_back(positions);
  std::vector<Permutation> out;
  for (const auto& u : position_class_group(n, stab_classes)) out.push_back(rep * u);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> young_subgroup(const std::vector<long>& blocks) {
  long n = 0;
  std::vector<std::vector<int>> classes;
  for (long b : blocks) {
    if (b < 1) throw std::invalid_argument("composition parts must be positive");
    std::vector<int> positions(b);
    std::iota(positions.begin(), positions.end(), static_cast<int>(n + 1));
    classes.push_back(std::move(positions));
    n += b;
  }
  if (n > max_permutation_degree())
    throw GuardError("composition size " + std::to_string(n) +
                     " exceeds the permutation enumeration cap of " +
                     std::to_string(max_permutation_degree()) +
                     " (override with SUPERKLR_MAX_N)");
  std::vector<Permutation> out = position_class_group(static_cast<int>(n), classes);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> j_set(const Permutation& w, int t) {
  std::vector<int> out;
  for (int j = 1; j < t; ++j)
    if (w(j) < w(t)) out.push_back(j);
  return out;
}

}  // namespace superklr
