#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "overlap/graph.hpp"
#include "overlap/rep.hpp"

namespace overlap {

// The skeleton of a tree plus the spine decomposition used to build its
// optimal representation. Spines are paths of the skeleton; the first spine
// is a longest path, later spines start at a vertex of an earlier spine and
// end at a skeleton leaf.
struct SkeletonResult {
  std::vector<Vertex> vertices;              // skeleton vertex set, ascending
  int size = 0;                              // |vertices|; equals phi(T)
  std::vector<std::vector<Vertex>> spines;   // spines[0] = longest path; for
                                             // s>0 the first entry is the
                                             // attachment vertex
  // T-leaves outside the skeleton, each with the spine and position (index
  // into spines[s]) of its neighbor.
  struct Leg {
    Vertex leaf;
    int spine;
    int position;
  };
  std::vector<Leg> legs;
};

SkeletonResult skeleton(const Graph& t);

// Lemma-style caterpillar representation of size l (longest path length).
OverlapRep caterpillar_rep(const Graph& t);

// One caterpillar-addition step: a new spine of `spine_length` vertices is
// glued to `attachment`, with optional legs hanging from internal spine
// positions 1..spine_length-1.
struct CaterpillarStep {
  Vertex attachment = -1;
  int spine_length = 0;
  std::vector<std::pair<int, int>> legs;  // (position, count)
};

struct CaterpillarExtension {
  Graph graph;                       // H plus the new caterpillar
  OverlapRep rep;
  std::vector<Vertex> spine_vertices;  // w_1..w_l (new ids)
  std::vector<int> spine_labels;       // b_1..b_l after canonical renumbering
};

// Requires `attachment` to be a-minimal in repH and non-isolated in H.
CaterpillarExtension extend_caterpillar(const OverlapRep& rep_h, const Graph& h,
                                        const CaterpillarStep& step, int a);

// Optimal overlap representation of a tree; size equals the skeleton size.
// Runs in time linear in n plus the size of the emitted representation.
OverlapRep tree_overlap_rep(const Graph& t);

// Quadratic reference builder applying the caterpillar steps with explicit
// set copies; must produce a representation identical to tree_overlap_rep.
OverlapRep tree_overlap_rep_naive(const Graph& t);

}  // namespace overlap
