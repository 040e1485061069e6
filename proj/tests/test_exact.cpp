#include <algorithm>

#include "doctest.h"
#include "overlap/exact.hpp"
#include "overlap/families.hpp"
#include "overlap/tree.hpp"
#include "test_util.hpp"

using namespace overlap;
using namespace testutil;

namespace {

int phi(const Graph& g) {
  ExactResult r = exact_phi(g);
  REQUIRE(r.exact());
  CHECK(verify(g, r.witness, RepKind::overlap).ok());
  CHECK(r.witness.size() == r.value);
  return r.value;
}

int pol(const Graph& g) {
  ExactResult r = exact_pol(g);
  REQUIRE(r.exact());
  CHECK(verify(g, r.witness, RepKind::pure_overlap).ok());
  return r.value;
}

}  // namespace

TEST_CASE("exact overlap numbers of small named graphs") {
  CHECK(phi(cycle(6)) == 5);
  CHECK(phi(path(4)) == 4);
  CHECK(phi(complete(4)) == 4);
  // K_{1,3}^+ (triangle with a pendant edge)
  Graph paw = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
  CHECK(phi(paw) == 4);
  CHECK(phi(Graph::from_edges(4, {{0, 1}, {2, 3}})) == 5);  // 2K_2
  CHECK(phi(path(2)) == 3);
  CHECK(phi(Graph(1)) == 1);
  CHECK(phi(Graph(3)) == 1);  // equal singletons do not overlap
}

TEST_CASE("exact pure overlap numbers of small named graphs") {
  CHECK(pol(path(4)) == 5);
  CHECK(pol(cycle(5)) == 5);
  CHECK(pol(star(3)) == 6);
  CHECK(pol(star(2)) == 4);
  CHECK(pol(complete(3)) == 3);
  CHECK(pol(Graph::from_edges(4, {{0, 1}, {2, 3}})) == 6);  // 2K_2, additive
}

TEST_CASE("reduced solver matches the plain solver") {
  CHECK(exact_phi_reduced(gen_book(8)).value == 3);
  CHECK(exact_phi_reduced(cycle(4)).value == 3);
  Graph k23 = complete_bipartite(2, 3);
  ExactResult direct = exact_phi(k23);
  ExactResult red = exact_phi_reduced(k23);
  REQUIRE(direct.exact());
  REQUIRE(red.exact());
  CHECK(direct.value == red.value);
  CHECK(direct.value == 3);
  CHECK(verify(k23, red.witness, RepKind::overlap).ok());

  Rng rng(19);
  for (int it = 0; it < 25; ++it) {
    Graph g = random_graph(rng, 3 + rng.below(3), 20 + rng.below(60));
    ExactResult a = exact_phi(g);
    ExactResult b = exact_phi_reduced(g);
    REQUIRE(a.exact());
    REQUIRE(b.exact());
    CHECK(a.value == b.value);
    CHECK(verify(g, b.witness, RepKind::overlap).ok());
  }
}

TEST_CASE("optimized solver agrees with the naive enumerator on n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for (const Graph& g : enum_connected_graphs(n)) {
      auto nphi = naive_exact_phi(g);
      auto npol = naive_exact_pol(g);
      REQUIRE(nphi.has_value());
      REQUIRE(npol.has_value());
      CHECK(phi(g) == *nphi);
      CHECK(pol(g) == *npol);
    }
  }
  // A couple of disconnected shapes as well.
  for (const Graph& g : {Graph::from_edges(4, {{0, 1}, {2, 3}}),
                         Graph::from_edges(4, {{0, 1}}), Graph(4)}) {
    CHECK(phi(g) == *naive_exact_phi(g));
    CHECK(pol(g) == *naive_exact_pol(g));
  }
}

TEST_CASE("symmetry breaking does not change values") {
  SearchConfig plain;
  plain.symmetry_breaking = false;
  for (int n = 1; n <= 4; ++n)
    for (const Graph& g : enum_connected_graphs(n)) {
      CHECK(exact_phi(g).value == exact_phi(g, plain).value);
      CHECK(exact_pol(g).value == exact_pol(g, plain).value);
    }
}

TEST_CASE("parallel search returns identical values and witnesses") {
  SearchConfig par;
  par.parallel = true;
  Rng rng(29);
  for (int it = 0; it < 20; ++it) {
    Graph g = random_graph(rng, 4 + rng.below(2), 30 + rng.below(50));
    ExactResult a = exact_phi(g);
    ExactResult b = exact_phi(g, par);
    REQUIRE(a.exact());
    REQUIRE(b.exact());
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
    CHECK(a.nodes == b.nodes);
  }
  ExactResult a = exact_pol(star(3));
  ExactResult b = exact_pol(star(3), par);
  CHECK(a.value == b.value);
  CHECK(a.witness == b.witness);
}

TEST_CASE("node budget reports exceeded deterministically") {
  SearchConfig tight;
  tight.node_limit = 10;
  ExactResult r = exact_phi(cycle(6), tight);
  CHECK_FALSE(r.exact());
  SearchConfig par = tight;
  par.parallel = true;
  ExactResult rp = exact_phi(cycle(6), par);
  CHECK_FALSE(rp.exact());
}

TEST_CASE("phi is monotone under induced subgraphs and at most pol") {
  Rng rng(37);
  for (int it = 0; it < 12; ++it) {
    Graph g = random_graph(rng, 4 + rng.below(2), 30 + rng.below(50));
    int vg = phi(g);
    CHECK(vg <= pol(g));
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (rng.coin(70)) keep.push_back(v);
    if (keep.empty()) continue;
    Graph h = g.induced(keep);
    CHECK(phi(h) <= vg);
    CHECK(pol(h) <= pol(g));
  }
}

TEST_CASE("witnesses are canonical: first by set size then numerically") {
  ExactResult r = exact_phi(complete(3));
  REQUIRE(r.exact());
  CHECK(r.value == 3);
  // Deterministic rerun gives the identical witness object.
  CHECK(exact_phi(complete(3)).witness == r.witness);
}
