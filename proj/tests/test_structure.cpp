#include <doctest.h>
#include <superklr/dimension.hpp>
#include <superklr/structure.hpp>

#include <algorithm>
#include <random>

#include "random_superdata.hpp"

using namespace superklr;

namespace {

CartanSuperdatum b2() {
  return make_superdatum({"1", "2"}, {{2, -2}, {-1, 2}}, {Parity::odd, Parity::even},
                         std::vector<long>{1, 2});
}

}  // namespace

TEST_CASE("two-vertex multiplicity-free block is certified") {
  const CartanSuperdatum datum = b2();
  const IdempotentGraph graph = build_graph(datum, {2, 1}, {1, 1});
  CHECK(graph.distinct_roots);
  REQUIRE(graph.vertices.size() == 2);
  CHECK(graph.vertices[0] == WeightSeq{0, 1});
  CHECK(graph.vertices[1] == WeightSeq{1, 0});
  REQUIRE(graph.edges.size() == 1);
  CHECK(graph.edges[0] == std::pair<std::size_t, std::size_t>{0, 1});

  const ConnectivityReport report = connectivity_report(graph);
  REQUIRE(report.components.size() == 1);
  CHECK(report.components[0] == std::vector<std::size_t>{0, 1});
  CHECK(report.verdict == "indecomposable (certified)");
}

TEST_CASE("empty vertex set is the zero algebra") {
  const CartanSuperdatum datum = b2();
  const IdempotentGraph graph = build_graph(datum, {0, 0}, {1, 0});
  CHECK(graph.vertices.empty());
  CHECK(graph.edges.empty());
  const ConnectivityReport report = connectivity_report(graph);
  CHECK(report.components.empty());
  CHECK(report.verdict == "zero algebra");
}

TEST_CASE("repeated roots downgrade the verdict to a diagnostic") {
  const CartanSuperdatum datum = b2();
  const IdempotentGraph graph = build_graph(datum, {2, 0}, {2, 0});
  CHECK_FALSE(graph.distinct_roots);
  REQUIRE(graph.vertices.size() == 1);  // (1,1) survives through the crossing term
  const ConnectivityReport report = connectivity_report(graph);
  CHECK(report.components.size() == 1);
  CHECK(report.verdict == "diagnostic only");
}

TEST_CASE("vertices and edges agree with the dimension engine") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 25; ++trial) {
    const CartanSuperdatum datum = testutil::random_superdatum(rng);
    const DominantWeight lambda = testutil::random_weight(rng, datum, 3);
    RootVector beta(datum.rank(), 0);
    for (auto& v : beta) v = static_cast<long>(rng() % 3);
    if (std::all_of(beta.begin(), beta.end(), [](long v) { return v == 0; })) continue;
    const IdempotentGraph graph = build_graph(datum, lambda, beta);

    // Every kept vertex has a nonzero diagonal dimension; every sequence of
    // the block that is missing has a zero one.
    for (const WeightSeq& nu : graph.vertices)
      CHECK(idempotent_nonzero(datum, lambda, nu).nonzero);
    const std::vector<WeightSeq> all = weight_sequences(datum, beta);
    std::size_t alive = 0;
    for (const WeightSeq& nu : all)
      if (idempotent_nonzero(datum, lambda, nu).nonzero) ++alive;
    CHECK(alive == graph.vertices.size());

    for (const auto& [i, j] : graph.edges) {
      CHECK(i < j);
      CHECK(ungraded_dim(datum, lambda, graph.vertices[i], graph.vertices[j]) != 0);
    }
  }
}

TEST_CASE("multiplicity-free blocks with vertices are connected") {
  std::mt19937_64 rng(62);
  int kept = 0;
  while (kept < 30) {
    const CartanSuperdatum datum = testutil::random_superdatum(rng);
    const DominantWeight lambda = testutil::random_weight(rng, datum);
    RootVector beta(datum.rank(), 0);
    for (auto& v : beta) v = static_cast<long>(rng() % 2);
    if (std::all_of(beta.begin(), beta.end(), [](long v) { return v == 0; })) continue;
    const IdempotentGraph graph = build_graph(datum, lambda, beta);
    CHECK(graph.distinct_roots);
    if (graph.vertices.empty()) continue;
    ++kept;
    const ConnectivityReport report = connectivity_report(graph);
    CHECK(report.components.size() == 1);
    CHECK(report.verdict == "indecomposable (certified)");
  }
}

TEST_CASE("census guard propagates") {
  const CartanSuperdatum datum = b2();
  CHECK_THROWS_AS((void)build_graph(datum, {2, 1}, {3, 3}, 10), GuardError);
}
