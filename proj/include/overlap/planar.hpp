#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "overlap/constructions.hpp"
#include "overlap/graph.hpp"
#include "overlap/rep.hpp"

namespace overlap {

// Plane graph as a rotation system: per-vertex cyclic order of neighbors.
// Faces are traced with next(a->b) = (b, successor of a in rot(b)).
class PlaneGraph {
 public:
  PlaneGraph() = default;
  explicit PlaneGraph(std::vector<std::vector<Vertex>> rotations);

  // Builds the rotation system from a list of facial walks; every directed
  // edge must be used exactly once.
  static PlaneGraph from_faces(int n, const std::vector<std::vector<Vertex>>& faces);

  const Graph& graph() const { return graph_; }
  const std::vector<Vertex>& rotation(Vertex v) const { return rot_[v]; }
  int vertex_count() const { return graph_.vertex_count(); }

  PlaneGraph remove_vertex(Vertex v) const;

 private:
  Graph graph_;
  std::vector<std::vector<Vertex>> rot_;
};

// Facial walks; each directed edge appears exactly once over all walks.
std::vector<std::vector<Vertex>> trace_faces(const PlaneGraph& pg);

// Decomposition into edges and facial triangles (triangles reference faces
// of the input embedding).
struct PlanarDecomposition {
  CliqueDecomposition decomposition;
  struct TrianglePart {
    std::array<Vertex, 3> triangle;
    int face_index;  // into trace_faces(pg)
  };
  std::vector<TrianglePart> triangles;
  int edge_parts = 0;
};

PlanarDecomposition plan_decompose(const PlaneGraph& pg);

// The three legal outcomes for a connected plane graph with n >= 3.
enum class PlanarDecompositionCase { within_bound, quadrangulation, k4 };
PlanarDecompositionCase classify_decomposition(const PlaneGraph& pg,
                                               const PlanarDecomposition& d);

// Pure representation from the planar pipeline: edge/triangle decomposition
// at min degree >= 3, otherwise low-degree peeling with label reuse.
OverlapRep planar_pol_rep(const PlaneGraph& pg);

// Verified overlap representation of size <= 2n-5 for plane graphs with
// n >= 5 (smaller inputs route through the small-graph table).
BoundCertificate planar_phi_upper(const PlaneGraph& pg);

// Exhaustive rotation-system search for small graphs; returns an embedding
// when g is planar and the search space fits in work_cap. Connected inputs
// only.
std::optional<PlaneGraph> try_embed_planar(const Graph& g, long long work_cap);

// Rotation-system text format: line 1 "n"; then per vertex "v: u1 u2 ... uk"
// listing neighbors in cyclic order.
PlaneGraph parse_rotation(const std::string& text);
std::string format_rotation(const PlaneGraph& pg);
PlaneGraph read_rotation_file(const std::string& path);

}  // namespace overlap
