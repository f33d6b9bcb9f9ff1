/**
 * @file structure.hpp
 * @brief Idempotent-connectivity analysis of a weight-space block.
 *
 * For a fixed datum, dominant weight, and multiplicity vector beta, the
 * idempotent graph has the sequences nu with e(nu) != 0 as vertices and an
 * edge {mu, nu} whenever the inner space e(mu) R e(nu) is nonzero.  When beta
 * is multiplicity-free ("distinct roots": every simple root appears at most
 * once), a connected nonempty graph certifies that the block algebra is
 * indecomposable; outside that case the components are reported as a
 * diagnostic only, since connectivity is then not a proven criterion.
 */
#pragma once

#include <superklr/cartan.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace superklr {

struct IdempotentGraph {
  std::vector<WeightSeq> vertices;  // lexicographic order
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // index pairs, i < j
  bool distinct_roots = false;
};

/// Build the graph over all sequences with multiset beta.  Vertices are kept
/// when the diagonal ungraded dimension is nonzero; in the distinct-root case
/// the faster per-position criterion (all N(1, mu, k) > 0, and for edges all
/// N(d, mu, k) != 0 with d the unique transporter) replaces the full
/// transporter sums.  Throws GuardError when |I^beta| exceeds the cap.
IdempotentGraph build_graph(const CartanSuperdatum& datum,
                            const DominantWeight& lambda, const RootVector& beta,
                            std::size_t cap = 5000);

struct ConnectivityReport {
  std::vector<std::vector<std::size_t>> components;  // vertex indices per component
  std::string verdict;  // "zero algebra" | "indecomposable (certified)" | "diagnostic only"
};

ConnectivityReport connectivity_report(const IdempotentGraph& graph);

}  // namespace superklr
