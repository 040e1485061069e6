#pragma once

#include <optional>
#include <string>
#include <vector>

#include "overlap/graph.hpp"

namespace overlap {

using LabelSet = std::vector<int>;  // sorted ascending, labels >= 1

// Exactly one of these holds for any pair of nonempty sets.
enum class PairRelation { overlap, disjoint, proper_subset, proper_superset, equal };

enum class RepKind { overlap, pure_overlap, intersection };

PairRelation pair_relation(const LabelSet& a, const LabelSet& b);
const char* to_string(PairRelation r);
const char* to_string(RepKind k);

// Assignment of nonempty label sets to vertices over ground set 1..t.
// Labels are renumbered canonically on construction: first appearance over
// vertex order, scanning each set ascending.
class OverlapRep {
 public:
  OverlapRep() = default;
  explicit OverlapRep(std::vector<LabelSet> sets);

  int size() const { return ground_; }  // t = |union of assigned sets|
  int vertex_count() const { return static_cast<int>(sets_.size()); }
  const LabelSet& set_of(Vertex v) const { return sets_[v]; }
  const std::vector<LabelSet>& sets() const { return sets_; }

  bool operator==(const OverlapRep& o) const { return sets_ == o.sets_; }

 private:
  int ground_ = 0;
  std::vector<LabelSet> sets_;
};

// Canonical renumbering used by the OverlapRep constructor; also returns the
// old-label -> new-label map for callers that track labels across it.
std::pair<std::vector<LabelSet>, std::vector<int>> canonicalize_sets(
    const std::vector<LabelSet>& sets);

struct Violation {
  Vertex u = -1, v = -1;
  PairRelation relation = PairRelation::disjoint;
  bool adjacent = false;
  std::string describe() const;
};

struct VerifyResult {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

VerifyResult verify(const Graph& g, const OverlapRep& rep, RepKind kind);

// Lemma-style deletability test: S is deletable iff for every edge uv it
// contains neither the intersection nor either difference of f(u), f(v).
struct DeletableResult {
  bool deletable = false;
  bool creates_empty = false;  // some assigned set is a subset of S
};
DeletableResult deletable(const Graph& g, const OverlapRep& rep, const LabelSet& s);

// Subtract S from every assigned set (sets may become empty; callers that
// re-wrap into OverlapRep must check DeletableResult::creates_empty first).
std::vector<LabelSet> subtract(const std::vector<LabelSet>& sets, const LabelSet& s);

// S is uniform for the given sets if each contains all or none of S.
bool is_uniform(const std::vector<LabelSet>& sets, const LabelSet& s);

// Vertices whose set has no proper subset among the assigned sets.
std::vector<Vertex> minimal_vertices(const OverlapRep& rep);

// f(v) minimal among assigned sets containing label a; error if a not in f(v).
bool is_a_minimal(const OverlapRep& rep, Vertex v, int a);

// Checks the containment dichotomy: for each vertex v and each nontrivial
// component H of G - N[v], f(v) properly contains every set of H or is
// disjoint from every set of H. Holds for every valid overlap rep.
struct ContainmentCounterexample {
  Vertex v = -1;
  Vertex witness = -1;
  std::string detail;
};
std::optional<ContainmentCounterexample> containment_property_check(const Graph& g,
                                                                    const OverlapRep& rep);

// Representation text format: line 1 "t"; then one line per vertex
// "v: l1 l2 ...". Emitted files are canonical and round-trip bit-exactly.
OverlapRep parse_rep(const std::string& text);
std::string format_rep(const OverlapRep& rep);
OverlapRep read_rep_file(const std::string& path);

}  // namespace overlap
