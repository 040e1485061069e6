#include <algorithm>
#include <set>

#include "doctest.h"
#include "overlap/error.hpp"
#include "overlap/graph.hpp"
#include "test_util.hpp"

using namespace overlap;
using namespace testutil;

TEST_CASE("graph construction rejects loops and multi-edges") {
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), precondition_error);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1}, {1, 0}}), precondition_error);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), precondition_error);
}

TEST_CASE("degree sum equals twice the edge count") {
  Rng rng(1);
  for (int it = 0; it < 50; ++it) {
    Graph g = random_graph(rng, 2 + rng.below(9), 10 + rng.below(80));
    int sum = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
    CHECK(sum == 2 * g.edge_count());
  }
}

TEST_CASE("basic queries on known graphs") {
  CHECK(path(4).is_tree());
  CHECK(path(4).min_degree() == 1);
  CHECK_FALSE(cycle(5).bipartition().bipartite);
  CHECK(cycle(5).bipartition().odd_cycle.size() == 5);
  CHECK(cycle(6).bipartition().bipartite);
  CHECK(complete(4).triangles().size() == 4);
  CHECK(cycle(6).is_triangle_free());
  CHECK_FALSE(complete(3).is_triangle_free());
}

TEST_CASE("odd cycle witness is a genuine odd cycle") {
  Rng rng(7);
  for (int it = 0; it < 40; ++it) {
    Graph g = random_graph(rng, 3 + rng.below(7), 20 + rng.below(60));
    auto bp = g.bipartition();
    if (bp.bipartite) continue;
    const auto& c = bp.odd_cycle;
    CHECK(c.size() % 2 == 1);
    for (size_t i = 0; i < c.size(); ++i)
      CHECK(g.adjacent(c[i], c[(i + 1) % c.size()]));
    CHECK(std::set<Vertex>(c.begin(), c.end()).size() == c.size());
  }
}

TEST_CASE("degeneracy values") {
  CHECK(path(5).degeneracy().value == 1);
  CHECK(star(4).degeneracy().value == 1);
  CHECK(cycle(6).degeneracy().value == 2);
  CHECK(complete(4).degeneracy().value == 3);
}

TEST_CASE("degeneracy order leaves at most k later neighbors") {
  Rng rng(3);
  for (int it = 0; it < 30; ++it) {
    Graph g = random_graph(rng, 3 + rng.below(8), 10 + rng.below(80));
    auto deg = g.degeneracy();
    std::vector<int> pos(g.vertex_count());
    for (size_t i = 0; i < deg.order.size(); ++i) pos[deg.order[i]] = static_cast<int>(i);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      int later = 0;
      for (Vertex w : g.neighbors(v))
        if (pos[w] > pos[v]) ++later;
      CHECK(later <= deg.value);
    }
  }
}

namespace {

// Independent re-check written directly against the definition.
bool has_star_cutset_slow(const Graph& g) {
  int n = g.vertex_count();
  for (Vertex x = 0; x < n; ++x) {
    const auto& nb = g.neighbors(x);
    for (unsigned mask = 0; mask < (1u << nb.size()); ++mask) {
      std::vector<Vertex> keep;
      for (Vertex v = 0; v < n; ++v) {
        if (v == x) continue;
        bool in_set = false;
        for (size_t i = 0; i < nb.size(); ++i)
          if ((mask & (1u << i)) && nb[i] == v) in_set = true;
        if (!in_set) keep.push_back(v);
      }
      if (keep.size() < 2) continue;
      if (!g.induced(keep).connected()) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("star-cutsets: paths have them, C_6 and the cube do not") {
  auto p4 = find_star_cutset(path(4));
  REQUIRE(p4.status == StarCutsetSearch::Status::found);
  CHECK(p4.cutset->set.size() >= 1);

  CHECK(find_star_cutset(cycle(6)).status == StarCutsetSearch::Status::none);

  // Cube graph Q_3.
  Graph cube = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                     {4, 5}, {5, 6}, {6, 7}, {7, 4},
                                     {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  CHECK(find_star_cutset(cube).status == StarCutsetSearch::Status::none);

  Graph two_parts = Graph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK(find_star_cutset(two_parts).status == StarCutsetSearch::Status::not_applicable);
}

TEST_CASE("star-cutset finder agrees with the direct definition") {
  Rng rng(11);
  for (int it = 0; it < 60; ++it) {
    Graph g = random_graph(rng, 3 + rng.below(6), 20 + rng.below(70));
    if (!g.connected()) continue;
    auto res = find_star_cutset(g);
    CHECK((res.status == StarCutsetSearch::Status::found) == has_star_cutset_slow(g));
    if (res.status == StarCutsetSearch::Status::found) {
      const auto& cs = *res.cutset;
      for (Vertex v : cs.set)
        if (v != cs.center) CHECK(g.adjacent(cs.center, v));
      std::vector<Vertex> keep;
      for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (std::find(cs.set.begin(), cs.set.end(), v) == cs.set.end())
          keep.push_back(v);
      CHECK_FALSE(g.induced(keep).connected());
    }
  }
}

TEST_CASE("duplicate neighborhoods and isolated vertices") {
  CHECK(duplicate_neighborhoods(cycle(4)).size() == 2);
  CHECK(duplicate_neighborhoods(star(4)).size() == 6);
  CHECK(duplicate_neighborhoods(path(5)).empty());
  Graph g = Graph::from_edges(3, {{0, 1}});
  CHECK(isolated_vertices(g) == std::vector<Vertex>{2});
}

TEST_CASE("edge list round trip") {
  Rng rng(5);
  Graph g = random_graph(rng, 7, 40);
  std::string text = format_edge_list(g);
  CHECK(parse_edge_list(text) == g);
  CHECK(format_edge_list(parse_edge_list(text)) == text);
  CHECK_THROWS_AS(parse_edge_list("2 1\n0 0\n"), parse_error);
  CHECK_THROWS_AS(parse_edge_list("oops"), parse_error);
}

TEST_CASE("graph6 reader") {
  // Standard samples: K_4 is "C~", C_5 is "DqK".
  CHECK(parse_graph6("C~") == complete(4));
  Graph c5 = parse_graph6("DqK");
  CHECK(c5.vertex_count() == 5);
  CHECK(c5.edge_count() == 5);
  CHECK(c5.min_degree() == 2);
  CHECK(c5.connected());
  CHECK_FALSE(c5.bipartition().bipartite);
}

TEST_CASE("isomorphism finder") {
  Graph a = path(4);
  Graph b = Graph::from_edges(4, {{2, 0}, {0, 3}, {3, 1}});
  auto perm = find_isomorphism(a, b);
  REQUIRE(perm.has_value());
  for (auto [u, v] : a.edges()) CHECK(b.adjacent((*perm)[u], (*perm)[v]));
  CHECK_FALSE(find_isomorphism(path(4), star(3)).has_value());
}
