#include <superklr/cartan.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace superklr {

const char* validation_code_name(ValidationCode code) {
  switch (code) {
    case ValidationCode::BadShape: return "bad-shape";
    case ValidationCode::NotCartan: return "not-cartan";
    case ValidationCode::NotSymmetrizable: return "not-symmetrizable";
    case ValidationCode::BadSymmetrizer: return "bad-symmetrizer";
    case ValidationCode::ParityViolation: return "parity-violation";
  }
  return "unknown";
}

namespace {

std::string report_text(const ValidationReport& report) {
  std::ostringstream os;
  os << "superdatum validation failed:";
  for (const auto& issue : report.issues)
    os << " [" << validation_code_name(issue.code) << "] " << issue.message << ";";
  return os.str();
}

void add_issue(ValidationReport& report, ValidationCode code, std::string message) {
  report.issues.push_back({code, std::move(message)});
}

/// Solve d_i a_ij = d_j a_ji for positive integers, smallest per connected
/// component of the graph with edges {i,j : a_ij != 0}.  Returns empty and
/// records an issue when no solution exists.
std::vector<long> solve_symmetrizer(const std::vector<std::vector<long>>& a,
                                    ValidationReport& report) {
  const std::size_t n = a.size();
  std::vector<Rational> d(n, Rational(0));
  std::vector<int> component(n, -1);
  int ncomp = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (component[root] >= 0) continue;
    const int comp = ncomp++;
    component[root] = comp;
    d[root] = 1;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v) {
        if (v == u || a[u][v] == 0) continue;
        // d_v is forced by d_u along the edge: d_v = d_u * a_uv / a_vu.
        const Rational forced = d[u] * Rational(a[u][v]) / Rational(a[v][u]);
        if (component[v] < 0) {
          component[v] = comp;
          d[v] = forced;
          stack.push_back(v);
        } else if (d[v] != forced) {
          add_issue(report, ValidationCode::NotSymmetrizable,
                    "no positive symmetrizer exists (inconsistent around index " +
                        std::to_string(v) + ")");
          return {};
        }
      }
    }
  }
  // Scale each component to the smallest positive integers.
  std::vector<long> out(n, 1);
  for (int comp = 0; comp < ncomp; ++comp) {
    BigInt denom_lcm = 1;
    for (std::size_t i = 0; i < n; ++i)
      if (component[i] == comp)
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
                d[i].get_den().get_mpz_t());
    BigInt numer_gcd = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (component[i] == comp) {
        const Rational scaled = d[i] * Rational(denom_lcm);  // integral by choice of lcm
        mpz_gcd(numer_gcd.get_mpz_t(), numer_gcd.get_mpz_t(),
                scaled.get_num().get_mpz_t());
      }
    for (std::size_t i = 0; i < n; ++i)
      if (component[i] == comp) {
        const Rational scaled = d[i] * Rational(denom_lcm);
        const BigInt value = scaled.get_num() / numer_gcd;
        out[i] = value.get_si();
      }
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error(report_text(report)), report_(std::move(report)) {}

long CartanSuperdatum::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<long>(i);
  throw std::invalid_argument("unknown label '" + label + "'");
}

ValidationReport validate_superdatum(
    const std::vector<std::string>& labels,
    const std::vector<std::vector<long>>& cartan,
    const std::vector<Parity>& parity,
    const std::optional<std::vector<long>>& symmetrizer) {
  ValidationReport report;
  const std::size_t n = labels.size();

  if (n == 0) add_issue(report, ValidationCode::BadShape, "empty index set");
  if (std::set<std::string>(labels.begin(), labels.end()).size() != n)
    add_issue(report, ValidationCode::BadShape, "duplicate labels");
  if (cartan.size() != n)
    add_issue(report, ValidationCode::BadShape, "Cartan matrix row count != labels");
  for (const auto& row : cartan)
    if (row.size() != n) {
      add_issue(report, ValidationCode::BadShape, "Cartan matrix is not square");
      break;
    }
  if (parity.size() != n)
    add_issue(report, ValidationCode::BadShape, "parity list size != labels");
  if (symmetrizer && symmetrizer->size() != n)
    add_issue(report, ValidationCode::BadShape, "symmetrizer size != labels");
  if (!report.issues.empty()) return report;  // shape errors poison the rest

  for (std::size_t i = 0; i < n; ++i) {
    if (cartan[i][i] != 2)
      add_issue(report, ValidationCode::NotCartan,
                "diagonal entry at '" + labels[i] + "' is not 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && cartan[i][j] > 0)
        add_issue(report, ValidationCode::NotCartan,
                  "positive off-diagonal entry at ('" + labels[i] + "','" +
                      labels[j] + "')");
      if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
        add_issue(report, ValidationCode::NotCartan,
                  "zero pattern is asymmetric at ('" + labels[i] + "','" +
                      labels[j] + "')");
    }
  }

  if (symmetrizer) {
    bool bad = false;
    for (std::size_t i = 0; i < n && !bad; ++i)
      if ((*symmetrizer)[i] <= 0) {
        add_issue(report, ValidationCode::BadSymmetrizer,
                  "symmetrizer entry at '" + labels[i] + "' is not positive");
        bad = true;
      }
    for (std::size_t i = 0; i < n && !bad; ++i)
      for (std::size_t j = 0; j < n && !bad; ++j)
        if ((*symmetrizer)[i] * cartan[i][j] != (*symmetrizer)[j] * cartan[j][i]) {
          add_issue(report, ValidationCode::BadSymmetrizer,
                    "supplied symmetrizer fails d_i*a_ij = d_j*a_ji at ('" +
                        labels[i] + "','" + labels[j] + "')");
          bad = true;
        }
    if (!bad) report.symmetrizer = *symmetrizer;
  } else if (report.issues.empty()) {
    report.symmetrizer = solve_symmetrizer(cartan, report);
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!is_odd(parity[i])) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (cartan[i][j] % 2 != 0)
        add_issue(report, ValidationCode::ParityViolation,
                  "odd index '" + labels[i] + "' has odd Cartan entry against '" +
                      labels[j] + "'");
  }

  report.ok = report.issues.empty();
  return report;
}

CartanSuperdatum make_superdatum(std::vector<std::string> labels,
                                 std::vector<std::vector<long>> cartan,
                                 std::vector<Parity> parity,
                                 const std::optional<std::vector<long>>& symmetrizer) {
  ValidationReport report = validate_superdatum(labels, cartan, parity, symmetrizer);
  if (!report.ok) throw ValidationError(std::move(report));
  CartanSuperdatum datum;
  datum.labels = std::move(labels);
  datum.cartan = std::move(cartan);
  datum.parity = std::move(parity);
  datum.d = std::move(report.symmetrizer);
  return datum;
}

long bilinear(const CartanSuperdatum& datum, long i, long j) {
  return datum.d[i] * datum.cartan[i][j];
}

long pairing(const CartanSuperdatum& datum, long i, const DominantWeight& lambda,
             const RootVector& sub) {
  if (lambda.size() != datum.rank() || sub.size() != datum.rank())
    throw std::invalid_argument("pairing: weight/root vector size mismatch");
  long out = lambda[i];
  for (std::size_t j = 0; j < datum.rank(); ++j) out -= sub[j] * datum.cartan[i][j];
  return out;
}

RootVector root_vector_of(const CartanSuperdatum& datum, const WeightSeq& nu) {
  RootVector beta(datum.rank(), 0);
  for (long i : nu) ++beta[i];
  return beta;
}

GeneratorDegrees generator_degrees(const CartanSuperdatum& datum, const WeightSeq& nu) {
  check_weight_seq(datum, nu);
  GeneratorDegrees out;
  const std::size_t n = nu.size();
  out.x_degree.resize(n);
  out.x_parity.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.x_degree[k] = bilinear(datum, nu[k], nu[k]);
    out.x_parity[k] = datum.parity[nu[k]];
  }
  if (n > 0) {
    out.tau_degree.resize(n - 1);
    out.tau_parity.resize(n - 1);
    for (std::size_t a = 0; a + 1 < n; ++a) {
      out.tau_degree[a] = -bilinear(datum, nu[a], nu[a + 1]);
      out.tau_parity[a] = parity_and(datum.parity[nu[a]], datum.parity[nu[a + 1]]);
    }
  }
  return out;
}

void check_weight_seq(const CartanSuperdatum& datum, const WeightSeq& nu) {
  for (long i : nu)
    if (i < 0 || i >= static_cast<long>(datum.rank()))
      throw std::invalid_argument("sequence entry out of range");
}

void check_weight(const CartanSuperdatum& datum, const DominantWeight& lambda) {
  if (lambda.size() != datum.rank())
    throw std::invalid_argument("weight size != labels");
  for (long v : lambda)
    if (v < 0) throw std::invalid_argument("dominant weight has negative coordinate");
}

void check_root_vector(const CartanSuperdatum& datum, const RootVector& beta) {
  if (beta.size() != datum.rank())
    throw std::invalid_argument("root vector size != labels");
  for (long v : beta)
    if (v < 0) throw std::invalid_argument("root vector has negative multiplicity");
}

std::vector<WeightSeq> weight_sequences(const CartanSuperdatum& datum,
                                        const RootVector& beta, std::size_t cap) {
  check_root_vector(datum, beta);
  const long n = std::accumulate(beta.begin(), beta.end(), 0L);
  BigInt count = factorial(n);
  for (long m : beta) count /= factorial(m);
  if (count > static_cast<unsigned long>(cap))
    throw GuardError("sequence census for this root vector has " + count.get_str() +
                     " entries, above the cap of " + std::to_string(cap));
  WeightSeq seq;
  seq.reserve(n);
  for (std::size_t i = 0; i < beta.size(); ++i)
    seq.insert(seq.end(), beta[i], static_cast<long>(i));
  std::vector<WeightSeq> out;
  out.reserve(count.get_ui());
  do {
    out.push_back(seq);
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

}  // namespace superklr
