#include "overlap/rep.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>

#include "overlap/error.hpp"

namespace overlap {

PairRelation pair_relation(const LabelSet& a, const LabelSet& b) {
  if (a.empty() || b.empty())
    throw precondition_error("pair_relation: empty set (model excludes empty sets)");
  size_t i = 0, j = 0;
  bool common = false, a_extra = false, b_extra = false;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      common = true;
      ++i, ++j;
    } else if (a[i] < b[j]) {
      a_extra = true;
      ++i;
    } else {
      b_extra = true;
      ++j;
    }
  }
  if (i < a.size()) a_extra = true;
  if (j < b.size()) b_extra = true;
  if (!common) return PairRelation::disjoint;
  if (a_extra && b_extra) return PairRelation::overlap;
  if (a_extra) return PairRelation::proper_superset;
  if (b_extra) return PairRelation::proper_subset;
  return PairRelation::equal;
}

const char* to_string(PairRelation r) {
  switch (r) {
    case PairRelation::overlap: return "overlap";
    case PairRelation::disjoint: return "disjoint";
    case PairRelation::proper_subset: return "proper-subset";
    case PairRelation::proper_superset: return "proper-superset";
    case PairRelation::equal: return "equal";
  }
  return "?";
}

const char* to_string(RepKind k) {
  switch (k) {
    case RepKind::overlap: return "overlap";
    case RepKind::pure_overlap: return "pure-overlap";
    case RepKind::intersection: return "intersection";
  }
  return "?";
}

std::pair<std::vector<LabelSet>, std::vector<int>> canonicalize_sets(
    const std::vector<LabelSet>& sets) {
  std::map<int, int> renumber;
  for (const auto& s : sets) {
    LabelSet sorted = s;
    std::sort(sorted.begin(), sorted.end());
    for (int l : sorted)
      if (!renumber.count(l)) {
        int next = static_cast<int>(renumber.size()) + 1;
        renumber[l] = next;
      }
  }
  std::vector<LabelSet> out(sets.size());
  for (size_t v = 0; v < sets.size(); ++v) {
    for (int l : sets[v]) out[v].push_back(renumber.at(l));
    std::sort(out[v].begin(), out[v].end());
  }
  std::vector<int> map_vec;
  if (!renumber.empty()) {
    map_vec.assign(renumber.rbegin()->first + 1, 0);
    for (auto [oldl, newl] : renumber) map_vec[oldl] = newl;
  }
  return {std::move(out), std::move(map_vec)};
}

OverlapRep::OverlapRep(std::vector<LabelSet> sets) {
  for (const auto& s : sets) {
    if (s.empty()) throw precondition_error("assigned sets must be nonempty");
    for (int l : s)
      if (l < 1) throw precondition_error("labels must be positive");
  }
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw precondition_error("duplicate label within a set");
  }
  auto [canon, map] = canonicalize_sets(sets);
  sets_ = std::move(canon);
  int t = 0;
  for (const auto& s : sets_)
    for (int l : s) t = std::max(t, l);
  ground_ = t;
}

std::string Violation::describe() const {
  std::ostringstream out;
  out << "pair (" << u << "," << v << "): " << (adjacent ? "adjacent" : "nonadjacent")
      << " but sets are " << to_string(relation);
  return out.str();
}

VerifyResult verify(const Graph& g, const OverlapRep& rep, RepKind kind) {
  if (rep.vertex_count() != g.vertex_count())
    throw precondition_error("representation does not assign a set to every vertex");
  VerifyResult res;
  int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      PairRelation r = pair_relation(rep.set_of(u), rep.set_of(v));
      bool adj = g.adjacent(u, v);
      bool ok = true;
      switch (kind) {
        case RepKind::overlap:
          ok = adj == (r == PairRelation::overlap);
          break;
        case RepKind::intersection:
          ok = adj == (r != PairRelation::disjoint);
          break;
        case RepKind::pure_overlap:
          // Overlap semantics plus no containment (including equality)
          // between sets of distinct vertices.
          ok = adj ? (r == PairRelation::overlap) : (r == PairRelation::disjoint);
          break;
      }
      if (!ok) res.violations.push_back({u, v, r, adj});
    }
  return res;
}

namespace {

// True iff s (sorted) is a superset of t (sorted).
bool contains_all(const LabelSet& s, const LabelSet& t) {
  return std::includes(s.begin(), s.end(), t.begin(), t.end());
}

LabelSet set_intersection(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

LabelSet set_difference(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

DeletableResult deletable(const Graph& g, const OverlapRep& rep, const LabelSet& s) {
  if (rep.vertex_count() != g.vertex_count())
    throw precondition_error("representation does not match graph");
  LabelSet ss = s;
  std::sort(ss.begin(), ss.end());
  DeletableResult res;
  res.deletable = true;
  for (auto [u, v] : g.edges()) {
    const auto& fu = rep.set_of(u);
    const auto& fv = rep.set_of(v);
    if (contains_all(ss, set_intersection(fu, fv)) ||
        contains_all(ss, set_difference(fu, fv)) ||
        contains_all(ss, set_difference(fv, fu))) {
      res.deletable = false;
      break;
    }
  }
  for (Vertex v = 0; v < rep.vertex_count(); ++v)
    if (contains_all(ss, rep.set_of(v))) {
      res.creates_empty = true;
      break;
    }
  return res;
}

std::vector<LabelSet> subtract(const std::vector<LabelSet>& sets, const LabelSet& s) {
  LabelSet ss = s;
  std::sort(ss.begin(), ss.end());
  std::vector<LabelSet> out;
  out.reserve(sets.size());
  for (const auto& f : sets) out.push_back(set_difference(f, ss));
  return out;
}

bool is_uniform(const std::vector<LabelSet>& sets, const LabelSet& s) {
  LabelSet ss = s;
  std::sort(ss.begin(), ss.end());
  for (const auto& f : sets) {
    auto common = set_intersection(f, ss);
    if (!common.empty() && common.size() != ss.size()) return false;
  }
  return true;
}

std::vector<Vertex> minimal_vertices(const OverlapRep& rep) {
  std::vector<Vertex> out;
  int n = rep.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    bool minimal = true;
    for (Vertex u = 0; u < n && minimal; ++u) {
      if (u == v) continue;
      if (pair_relation(rep.set_of(v), rep.set_of(u)) == PairRelation::proper_superset)
        minimal = false;
    }
    if (minimal) out.push_back(v);
  }
  return out;
}

bool is_a_minimal(const OverlapRep& rep, Vertex v, int a) {
  const auto& fv = rep.set_of(v);
  if (!std::binary_search(fv.begin(), fv.end(), a))
    throw precondition_error("is_a_minimal: label not in the vertex's set");
  for (Vertex u = 0; u < rep.vertex_count(); ++u) {
    if (u == v) continue;
    const auto& fu = rep.set_of(u);
    if (!std::binary_search(fu.begin(), fu.end(), a)) continue;
    if (pair_relation(rep.set_of(v), fu) == PairRelation::proper_superset) return false;
  }
  return true;
}

std::optional<ContainmentCounterexample> containment_property_check(const Graph& g,
                                                                    const OverlapRep& rep) {
  int n = g.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    std::vector<bool> removed(n, false);
    removed[v] = true;
    for (Vertex w : g.neighbors(v)) removed[w] = true;
    std::vector<int> comp(n, -1);
    int next = 0;
    for (Vertex s = 0; s < n; ++s) {
      if (removed[s] || comp[s] != -1) continue;
      comp[s] = next;
      std::queue<Vertex> q;
      q.push(s);
      while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u))
          if (!removed[w] && comp[w] == -1) {
            comp[w] = next;
            q.push(w);
          }
      }
      ++next;
    }
    for (int c = 0; c < next; ++c) {
      std::vector<Vertex> verts;
      for (Vertex u = 0; u < n; ++u)
        if (comp[u] == c) verts.push_back(u);
      bool nontrivial = false;
      for (Vertex u : verts)
        for (Vertex w : g.neighbors(u))
          if (comp[w] == c && w > u) nontrivial = true;
      if (!nontrivial) continue;
      // The dichotomy the lemma's proof establishes: equality with a member
      // of H is impossible, and if f(v) properly contains any member's set
      // it properly contains every member's set. (Sets of H may freely be
      // disjoint from f(v) or properly contain it.)
      int contains = 0;
      Vertex equal_witness = -1, other_witness = -1;
      for (Vertex u : verts) {
        PairRelation r = pair_relation(rep.set_of(v), rep.set_of(u));
        if (r == PairRelation::proper_superset)
          ++contains;
        else if (r == PairRelation::equal)
          equal_witness = u;
        else
          other_witness = u;
      }
      if (equal_witness != -1 ||
          (contains > 0 && contains < static_cast<int>(verts.size()))) {
        ContainmentCounterexample ce;
        ce.v = v;
        ce.witness = equal_witness != -1 ? equal_witness : other_witness;
        ce.detail = equal_witness != -1
                        ? "set equal to a member of a nontrivial component"
                        : "f(v) properly contains some but not all sets of a component";
        return ce;
      }
    }
  }
  return std::nullopt;
}

OverlapRep parse_rep(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw parse_error("representation: empty input");
  int t;
  {
    std::istringstream h(line);
    if (!(h >> t)) throw parse_error("representation: expected ground size");
    std::string rest;
    if (h >> rest) throw parse_error("representation: bad header");
  }
  std::vector<LabelSet> sets;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw parse_error("representation: expected \"v: labels\"");
    int v;
    {
      std::istringstream h(line.substr(0, colon));
      if (!(h >> v)) throw parse_error("representation: bad vertex id");
    }
    if (v != static_cast<int>(sets.size()))
      throw parse_error("representation: vertex lines must be 0..n-1 in order");
    std::istringstream rest(line.substr(colon + 1));
    LabelSet s;
    int l;
    while (rest >> l) s.push_back(l);
    sets.push_back(std::move(s));
  }
  try {
    OverlapRep rep{std::move(sets)};
    if (rep.size() != t)
      throw parse_error("representation: header size does not match label union");
    return rep;
  } catch (const precondition_error& e) {
    throw parse_error(std::string("representation: ") + e.what());
  }
}

std::string format_rep(const OverlapRep& rep) {
  std::ostringstream out;
  out << rep.size() << '\n';
  for (Vertex v = 0; v < rep.vertex_count(); ++v) {
    out << v << ':';
    for (int l : rep.set_of(v)) out << ' ' << l;
    out << '\n';
  }
  return out.str();
}

OverlapRep read_rep_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_rep(buf.str());
}

}  // namespace overlap
