#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace overlap {

using Vertex = int;

// Finite simple undirected graph on vertices 0..n-1.
// Immutable after construction; adjacency lists kept sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n) {}

  static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool adjacent(Vertex u, Vertex v) const;
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

  int min_degree() const;
  int max_degree() const;

  // Component id per vertex, ids dense in discovery order from vertex 0.
  std::vector<int> component_ids() const;
  int component_count() const;
  bool connected() const;  // true for n <= 1
  bool is_tree() const;

  bool is_triangle_free() const;
  // All triangles as sorted triples u < v < w, in lexicographic order.
  std::vector<std::array<Vertex, 3>> triangles() const;

  struct Bipartition {
    bool bipartite = false;
    std::vector<int> side;           // 0/1 per vertex when bipartite
    std::vector<Vertex> odd_cycle;   // witness cycle when not bipartite
  };
  Bipartition bipartition() const;

  struct Degeneracy {
    int value = 0;
    std::vector<Vertex> order;  // elimination order (min-degree-first)
  };
  Degeneracy degeneracy() const;

  // New graph without vertex v; vertices above v shift down by one.
  Graph remove_vertex(Vertex v) const;
  // Induced subgraph on `keep` (ascending); vertex i of the result is keep[i].
  Graph induced(const std::vector<Vertex>& keep) const;
  // Relabel by permutation: vertex v of *this becomes perm[v] of the result.
  Graph relabeled(const std::vector<Vertex>& perm) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::pair<Vertex, Vertex>> edges_;  // normalized u < v, sorted
};

// A separating set S containing a center x adjacent to all of S - {x}.
struct StarCutset {
  Vertex center = -1;
  std::vector<Vertex> set;  // includes center
};

struct StarCutsetSearch {
  enum class Status { found, none, not_applicable };
  Status status = Status::none;
  std::optional<StarCutset> cutset;
};

// Exhaustive search over all (x, A subset of N(x)). Requires connected G to be
// meaningful; disconnected inputs report not_applicable.
StarCutsetSearch find_star_cutset(const Graph& g);

// Pairs (v, w) with v > w and N(v) == N(w), lexicographic by (w, v).
std::vector<std::pair<Vertex, Vertex>> duplicate_neighborhoods(const Graph& g);
std::vector<Vertex> isolated_vertices(const Graph& g);

// Brute-force isomorphism for small graphs (n <= 8). Returns a mapping
// perm with: u~v in a  <=>  perm[u]~perm[v] in b.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b);

// Edge-list text format: first line "n m", then m lines "u v" (0-based).
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);
Graph read_edge_list_file(const std::string& path);

// graph6 reader for interop with standard corpora.
Graph parse_graph6(const std::string& line);

}  // namespace overlap
