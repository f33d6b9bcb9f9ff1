#include <superklr/structure.hpp>

#include <superklr/dimension.hpp>
#include <superklr/permutation.hpp>

#include <algorithm>

namespace superklr {

namespace {

bool fast_vertex(const CartanSuperdatum& datum, const DominantWeight& lambda,
                 const WeightSeq& mu) {
  const Permutation id = Permutation::identity(static_cast<int>(mu.size()));
  for (int t = 1; t <= static_cast<int>(mu.size()); ++t)
    if (n_stat(datum, lambda, mu, id, t) <= 0) return false;
  return true;
}

bool fast_edge(const CartanSuperdatum& datum, const DominantWeight& lambda,
               const WeightSeq& mu, const WeightSeq& nu) {
  const Permutation d = transporter(mu, nu).front();  // unique: entries distinct
  for (int t = 1; t <= static_cast<int>(mu.size()); ++t)
    if (n_stat(datum, lambda, mu, d, t) == 0) return false;
  return true;
}

}  // namespace

IdempotentGraph build_graph(const CartanSuperdatum& datum,
                            const DominantWeight& lambda, const RootVector& beta,
                            std::size_t cap) {
  check_weight(datum, lambda);
  check_root_vector(datum, beta);

  IdempotentGraph graph;
  graph.distinct_roots =
      std::all_of(beta.begin(), beta.end(), [](long m) { return m <= 1; });

  for (WeightSeq& mu : weight_sequences(datum, beta, cap)) {
    const bool alive = graph.distinct_roots
                           ? fast_vertex(datum, lambda, mu)
                           : idempotent_nonzero(datum, lambda, mu).nonzero;
    if (alive) graph.vertices.push_back(std::move(mu));
  }

  for (std::size_t i = 0; i < graph.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < graph.vertices.size(); ++j) {
      const bool joined =
          graph.distinct_roots
              ? fast_edge(datum, lambda, graph.vertices[i], graph.vertices[j])
              : ungraded_dim(datum, lambda, graph.vertices[i],
                             graph.vertices[j]) != 0;
      if (joined) graph.edges.emplace_back(i, j);
    }
  return graph;
}

ConnectivityReport connectivity_report(const IdempotentGraph& graph) {
  ConnectivityReport report;
  const std::size_t count = graph.vertices.size();
  std::vector<std::vector<std::size_t>> adjacency(count);
  for (const auto& [i, j] : graph.edges) {
    adjacency[i].push_back(j);
    adjacency[j].push_back(i);
  }

  std::vector<bool> seen(count, false);
  for (std::size_t start = 0; start < count; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> component{start};
    seen[start] = true;
    for (std::size_t at = 0; at < component.size(); ++at)
      for (std::size_t next : adjacency[component[at]])
        if (!seen[next]) {
          seen[next] = true;
          component.push_back(next);
        }
    std::sort(component.begin(), component.end());
    report.components.push_back(std::move(component));
  }

  if (count == 0)
    report.verdict = "zero algebra";
  else if (graph.distinct_roots && report.components.size() == 1)
    report.verdict = "indecomposable (certified)";
  else
    report.verdict = "diagnostic only";
  return report;
}

}  // namespace superklr
