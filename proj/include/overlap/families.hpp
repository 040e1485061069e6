#pragma once

#include <vector>

#include "overlap/graph.hpp"
#include "overlap/planar.hpp"

namespace overlap {

// K_{floor(n/2),ceil(n/2)} minus a maximum matching (odd n: one further edge
// at the unmatched vertex). Connected, triangle-free, star-cutset-free, with
// floor(n^2/4 - n/2) edges; all re-verified after generation.
Graph gen_biclique_minus_matching(int n);  // n >= 6

// Plane graph in which every face has length 4 and no star-cutset exists.
// Supported for n = 4, n = 8 and n >= 10.
PlaneGraph gen_quadrangulation(int n);

Graph gen_book(int n);  // n >= 3; union of n-2 triangles on a common edge

// Path of `spine` vertices with legs[i] extra leaves at spine vertex i.
Graph gen_caterpillar(int spine, const std::vector<int>& legs);

// Center vertex with paths of the given lengths attached.
Graph gen_spider(const std::vector<int>& legs);

bool is_caterpillar(const Graph& g);

// All non-isomorphic trees on n vertices (n <= 10), deterministic order.
std::vector<Graph> enum_trees(int n);

// All non-isomorphic connected graphs on n vertices (n <= 6).
std::vector<Graph> enum_connected_graphs(int n);

}  // namespace overlap
