/**
 * @file cartan.hpp
 * @brief Cartan superdata: integer Cartan matrices with a parity assignment
 *        and a positive symmetrizer, plus weight/root bookkeeping.
 *
 * A superdatum is a finite index set I (string labels), a Cartan matrix
 * a[i][j] (diagonal 2, off-diagonal <= 0, zeros symmetric), positive integers
 * d[i] with d[i]*a[i][j] = d[j]*a[j][i], and a parity p(i) in Z/2 subject to
 * the evenness constraint: every row of an odd index consists of even
 * integers.  The symmetric form is (alpha_i|alpha_j) = d[i]*a[i][j].
 */
#pragma once

#include <superklr/common.hpp>

#include <optional>
#include <string>
#include <vector>

namespace superklr {

/// Sequence of label indices (a word in I^n); indices are 0-based into labels.
using WeightSeq = std::vector<long>;
/// Multiplicity vector over I (a nonnegative integer combination of simple roots).
using RootVector = std::vector<long>;
/// Dominant integral weight: nonnegative coordinate per label.
using DominantWeight = std::vector<long>;

enum class ValidationCode {
  BadShape,         // sizes inconsistent, duplicate labels, empty index set
  NotCartan,        // diagonal != 2, positive off-diagonal, asymmetric zeros
  NotSymmetrizable, // no positive d with d_i a_ij = d_j a_ji exists
  BadSymmetrizer,   // a supplied d is nonpositive or fails the identity
  ParityViolation,  // an odd index has an odd entry in its row
};

const char* validation_code_name(ValidationCode code);

struct ValidationIssue {
  ValidationCode code;
  std::string message;
};

struct ValidationReport {
  bool ok = false;
  std::vector<ValidationIssue> issues;
  /// The symmetrizer that was supplied or computed (empty when undeterminable).
  std::vector<long> symmetrizer;
};

/// Thrown by make_superdatum when validation fails; carries the full report.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

struct CartanSuperdatum {
  std::vector<std::string> labels;
  std::vector<std::vector<long>> cartan;
  std::vector<Parity> parity;
  std::vector<long> d;  // positive symmetrizer entries

  std::size_t rank() const { return labels.size(); }
  long index_of(const std::string& label) const;  // throws std::invalid_argument
};

/// Check all axioms; when the symmetrizer is omitted, compute the smallest
/// positive integer one per connected component of the Cartan graph.
ValidationReport validate_superdatum(
    const std::vector<std::string>& labels,
    const std::vector<std::vector<long>>& cartan,
    const std::vector<Parity>& parity,
    const std::optional<std::vector<long>>& symmetrizer = std::nullopt);

/// Validate and assemble; throws ValidationError when the report is not ok.
CartanSuperdatum make_superdatum(
    std::vector<std::string> labels,
    std::vector<std::vector<long>> cartan,
    std::vector<Parity> parity,
    const std::optional<std::vector<long>>& symmetrizer = std::nullopt);

/// Symmetric bilinear form (alpha_i|alpha_j) = d_i * a_ij.
long bilinear(const CartanSuperdatum& datum, long i, long j);

/// Pairing <h_i, Lambda - sum_j sub_j alpha_j> = lambda_i - sum_j sub_j a_ij.
long pairing(const CartanSuperdatum& datum, long i, const DominantWeight& lambda,
             const RootVector& sub);

/// Multiplicity vector of a sequence.
RootVector root_vector_of(const CartanSuperdatum& datum, const WeightSeq& nu);

/// Z-degrees and parities of the polynomial and crossing generators attached
/// to a sequence nu: deg x_k = (alpha_{nu_k}|alpha_{nu_k}) with parity
/// p(nu_k); deg tau_a = -(alpha_{nu_a}|alpha_{nu_{a+1}}) with parity
/// p(nu_a) * p(nu_{a+1}).
struct GeneratorDegrees {
  std::vector<long> x_degree;
  std::vector<Parity> x_parity;
  std::vector<long> tau_degree;
  std::vector<Parity> tau_parity;
};
GeneratorDegrees generator_degrees(const CartanSuperdatum& datum, const WeightSeq& nu);

/// Throw std::invalid_argument when a sequence/weight/root vector is malformed
/// for this datum.
void check_weight_seq(const CartanSuperdatum& datum, const WeightSeq& nu);
void check_weight(const CartanSuperdatum& datum, const DominantWeight& lambda);
void check_root_vector(const CartanSuperdatum& datum, const RootVector& beta);

/// All sequences with multiset beta, in lexicographic order on label indices.
/// Throws GuardError when the count would exceed the cap.
std::vector<WeightSeq> weight_sequences(const CartanSuperdatum& datum,
                                        const RootVector& beta,
                                        std::size_t cap = 5000);

}  // namespace superklr
