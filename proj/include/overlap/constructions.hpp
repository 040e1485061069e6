#pragma once

#include <optional>
#include <string>
#include <vector>

#include "overlap/graph.hpp"
#include "overlap/rep.hpp"

namespace overlap {

// Edge-disjoint family of complete subgraphs covering E(G).
struct CliqueDecomposition {
  std::vector<std::vector<Vertex>> parts;  // each sorted, >= 2 vertices
  int max_order() const;
};

// Throws precondition_error when F is not a valid decomposition of g.
void validate_decomposition(const Graph& g, const CliqueDecomposition& f);

enum class Quantity { phi, pol };
enum class Direction { lower, upper };

// A claimed bound with machine-checkable evidence: a witness representation
// for upper bounds, a named rule with re-verified preconditions for lower.
struct BoundCertificate {
  Quantity quantity = Quantity::phi;
  Direction direction = Direction::upper;
  int value = 0;
  std::string rule;
  std::optional<OverlapRep> witness;
  std::string preconditions;  // human-readable note for lower-bound rules
};

std::string format_certificate(const BoundCertificate& c);

// Ordered removals of isolated / duplicate-neighborhood vertices.
struct ReductionTrace {
  enum class Kind { isolated, duplicate };
  struct Step {
    Kind kind;
    Vertex vertex;      // original id of the removed vertex
    Vertex twin = -1;   // original id of the kept twin (duplicate only)
  };
  int original_n = 0;
  std::vector<Step> steps;
  std::vector<Vertex> kept;  // original ids of the reduced graph's vertices
};

struct Reduction {
  Graph reduced;
  ReductionTrace trace;
};

// Repeatedly removes isolated vertices and one of each duplicate pair until
// none remain (never reducing below one vertex).
Reduction reduce(const Graph& g);
OverlapRep unreduce(const OverlapRep& rep, const ReductionTrace& trace);

// B_n: two adjacent spine vertices plus n-2 pages of degree 2. K_3 is B_3.
bool is_book(const Graph& g);

// Edge-labeled representation of size |E|-1 from the Edge Bound; requires
// min degree >= 2, uv an edge, and g not a book.
OverlapRep edge_bound_rep(const Graph& g, Vertex u, Vertex v);
// Default edge choice: maximum d(u)+d(v), lexicographic tie-break.
std::pair<Vertex, Vertex> default_edge_bound_pair(const Graph& g);

// Pure representation with f(v) = { parts containing v }. Requires every
// vertex to lie in at least two parts (which min degree >= max part order
// guarantees, and which is exactly what the bound's proof uses).
OverlapRep decomposition_rep(const Graph& g, const CliqueDecomposition& f);

// Greedy decomposition into triangles and edges keeping every vertex in at
// least two parts; requires min degree >= 2.
CliqueDecomposition greedy_triangle_decomposition(const Graph& g);

// Deletion Bound: extend a pure rep of g - v to g when d(v) <= 2.
// rep_sub is indexed by g-minus-v ids (vertices above v shifted down).
OverlapRep extend_deg_le2(const OverlapRep& rep_sub, const Graph& g, Vertex v);

// Leaf extension costing two labels; rep_sub is an overlap rep of g - v.
OverlapRep extend_leaf(const OverlapRep& rep_sub, const Graph& g, Vertex v);

// Triangle extension for pure reps: rep_sub is a pure rep of g - T.
struct TriangleExtension {
  OverlapRep rep;
  int degree_one_total = 0;     // vertices of degree 1 in g - T
  int degree_one_adjacent = 0;  // ... that are also adjacent to T
};
TriangleExtension extend_triangle(const OverlapRep& rep_sub, const Graph& g,
                                  const std::array<Vertex, 3>& t);

// Pure rep of K_n from the k-subsets of a (2k-1)-set.
OverlapRep clique_rep(int n);

// Best known explicit representation for graphs with n <= 5.
OverlapRep small_graph_rep(const Graph& g);

// The explicit small-graph table: representation plus the graph it represents
// (derived from the sets themselves).
struct SmallTableEntry {
  std::string name;
  OverlapRep rep;
  Graph graph;
};
const std::vector<SmallTableEntry>& small_graph_table();

// Every certified lower bound whose preconditions re-check true on g.
std::vector<BoundCertificate> lower_bound(const Graph& g);

// Smallest verified upper-bound witness over all construction routes.
BoundCertificate best_upper(const Graph& g);

}  // namespace overlap
