#include "overlap/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "overlap/error.hpp"
#include "overlap/planar.hpp"
#include "overlap/tree.hpp"

namespace overlap {

int CliqueDecomposition::max_order() const {
  size_t k = 0;
  for (const auto& p : parts) k = std::max(k, p.size());
  return static_cast<int>(k);
}

void validate_decomposition(const Graph& g, const CliqueDecomposition& f) {
  std::set<std::pair<Vertex, Vertex>> covered;
  for (const auto& part : f.parts) {
    if (part.size() < 2)
      throw precondition_error("decomposition: parts need at least 2 vertices");
    if (!std::is_sorted(part.begin(), part.end()))
      throw precondition_error("decomposition: parts must be sorted");
    for (size_t i = 0; i < part.size(); ++i)
      for (size_t j = i + 1; j < part.size(); ++j) {
        Vertex u = part[i], v = part[j];
        if (u < 0 || v >= g.vertex_count() || !g.adjacent(u, v))
          throw precondition_error("decomposition: part is not a complete subgraph");
        if (!covered.emplace(u, v).second)
          throw precondition_error("decomposition: parts share an edge");
      }
  }
  if (static_cast<int>(covered.size()) != g.edge_count())
    throw precondition_error("decomposition: edges not fully covered");
}

std::string format_certificate(const BoundCertificate& c) {
  std::ostringstream out;
  out << (c.quantity == Quantity::phi ? "phi" : "pol") << ' '
      << (c.direction == Direction::upper ? "upper" : "lower") << ' ' << c.value << ' '
      << c.rule << '\n';
  if (c.witness) out << format_rep(*c.witness);
  return out.str();
}

Reduction reduce(const Graph& g) {
  Reduction res;
  res.trace.original_n = g.vertex_count();
  std::vector<Vertex> kept(g.vertex_count());
  std::iota(kept.begin(), kept.end(), 0);
  Graph cur = g;
  while (cur.vertex_count() > 1) {
    auto isolated = isolated_vertices(cur);
    if (!isolated.empty()) {
      Vertex v = isolated.front();
      res.trace.steps.push_back({ReductionTrace::Kind::isolated, kept[v], -1});
      kept.erase(kept.begin() + v);
      cur = cur.remove_vertex(v);
      continue;
    }
    auto dups = duplicate_neighborhoods(cur);
    if (!dups.empty()) {
      auto [v, w] = dups.front();  // v > w; remove v, keep w
      res.trace.steps.push_back({ReductionTrace::Kind::duplicate, kept[v], kept[w]});
      kept.erase(kept.begin() + v);
      cur = cur.remove_vertex(v);
      continue;
    }
    break;
  }
  res.reduced = cur;
  res.trace.kept = kept;
  return res;
}

OverlapRep unreduce(const OverlapRep& rep, const ReductionTrace& trace) {
  if (rep.vertex_count() != static_cast<int>(trace.kept.size()))
    throw precondition_error("unreduce: representation does not match the reduced graph");
  std::vector<LabelSet> sets(trace.original_n);
  std::vector<bool> assigned(trace.original_n, false);
  for (size_t i = 0; i < trace.kept.size(); ++i) {
    sets[trace.kept[i]] = rep.set_of(static_cast<Vertex>(i));
    assigned[trace.kept[i]] = true;
  }
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    if (it->kind == ReductionTrace::Kind::duplicate) {
      if (!assigned[it->twin]) throw precondition_error("unreduce: inconsistent trace");
      sets[it->vertex] = sets[it->twin];
    } else {
      std::set<int> all;
      for (Vertex v = 0; v < trace.original_n; ++v)
        if (assigned[v]) all.insert(sets[v].begin(), sets[v].end());
      sets[it->vertex].assign(all.begin(), all.end());
    }
    assigned[it->vertex] = true;
  }
  return OverlapRep(std::move(sets));
}

bool is_book(const Graph& g) {
  int n = g.vertex_count();
  if (n < 3 || g.edge_count() != 2 * (n - 2) + 1) return false;
  for (auto [u, v] : g.edges()) {
    bool ok = true;
    for (Vertex w = 0; w < n && ok; ++w) {
      if (w == u || w == v) continue;
      ok = g.degree(w) == 2 && g.adjacent(w, u) && g.adjacent(w, v);
    }
    if (ok) return true;
  }
  return false;
}

namespace {

void self_verify(const Graph& g, const OverlapRep& rep, RepKind kind, const char* what) {
  auto res = verify(g, rep, kind);
  if (!res.ok())
    throw internal_error(std::string(what) + ": construction failed verification: " +
                         res.violations.front().describe());
}

}  // namespace

std::pair<Vertex, Vertex> default_edge_bound_pair(const Graph& g) {
  if (g.edge_count() == 0) throw precondition_error("edge bound: graph has no edge");
  std::pair<Vertex, Vertex> best = g.edges().front();
  int best_deg = -1;
  for (auto [u, v] : g.edges()) {
    int d = g.degree(u) + g.degree(v);
    if (d > best_deg) {
      best_deg = d;
      best = {u, v};
    }
  }
  return best;
}

OverlapRep edge_bound_rep(const Graph& g, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  if (!g.adjacent(u, v)) throw precondition_error("edge bound: uv is not an edge");
  if (g.min_degree() < 2) throw precondition_error("edge bound: min degree below 2");
  if (is_book(g)) throw precondition_error("edge bound: graph is a book");

  std::map<std::pair<Vertex, Vertex>, int> label;
  int next = 1;
  for (auto e : g.edges())
    if (e != std::make_pair(u, v)) label[e] = next++;

  int n = g.vertex_count();
  std::vector<LabelSet> sets(n);
  for (auto e : g.edges()) {
    if (e == std::make_pair(u, v)) continue;
    int l = label[e];
    for (Vertex w : {e.first, e.second})
      if (w != u && w != v) sets[w].push_back(l);
    for (Vertex w : {u, v})
      if (e.first != w && e.second != w) sets[w].push_back(l);
  }
  OverlapRep rep{std::move(sets)};
  self_verify(g, rep, RepKind::overlap, "edge_bound_rep");
  if (rep.size() != g.edge_count() - 1)
    throw internal_error("edge_bound_rep: unexpected size");
  return rep;
}

OverlapRep decomposition_rep(const Graph& g, const CliqueDecomposition& f) {
  validate_decomposition(g, f);
  int n = g.vertex_count();
  std::vector<LabelSet> sets(n);
  for (size_t i = 0; i < f.parts.size(); ++i)
    for (Vertex v : f.parts[i]) sets[v].push_back(static_cast<int>(i) + 1);
  for (Vertex v = 0; v < n; ++v)
    if (sets[v].size() < 2)
      throw precondition_error(
          "decomposition bound: every vertex must lie in at least two parts");
  OverlapRep rep{std::move(sets)};
  self_verify(g, rep, RepKind::pure_overlap, "decomposition_rep");
  return rep;
}

CliqueDecomposition greedy_triangle_decomposition(const Graph& g) {
  if (g.min_degree() < 2)
    throw precondition_error("greedy decomposition: min degree below 2");
  std::set<std::pair<Vertex, Vertex>> free_edges(g.edges().begin(), g.edges().end());
  std::vector<int> tri_count(g.vertex_count(), 0);
  std::vector<int> rem_deg(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) rem_deg[v] = g.degree(v);

  CliqueDecomposition out;
  for (const auto& t : g.triangles()) {
    auto [a, b, c] = t;
    if (!free_edges.count({a, b}) || !free_edges.count({a, c}) ||
        !free_edges.count({b, c}))
      continue;
    bool keeps_incidence = true;
    for (Vertex x : {a, b, c})
      if (tri_count[x] + 1 + (rem_deg[x] - 2) < 2) keeps_incidence = false;
    if (!keeps_incidence) continue;
    out.parts.push_back({a, b, c});
    free_edges.erase({a, b});
    free_edges.erase({a, c});
    free_edges.erase({b, c});
    for (Vertex x : {a, b, c}) {
      ++tri_count[x];
      rem_deg[x] -= 2;
    }
  }
  for (auto [x, y] : free_edges) out.parts.push_back({x, y});
  std::sort(out.parts.begin(), out.parts.end(),
            [](const auto& p, const auto& q) {
              return p.size() != q.size() ? p.size() > q.size() : p < q;
            });
  return out;
}

namespace {

Vertex sub_index(Vertex u, Vertex removed) { return u < removed ? u : u - 1; }

}  // namespace

OverlapRep extend_deg_le2(const OverlapRep& rep_sub, const Graph& g, Vertex v) {
  if (g.vertex_count() < 3)
    throw precondition_error("deletion bound: graph needs at least 3 vertices");
  int d = g.degree(v);
  if (d > 2) throw precondition_error("deletion bound: vertex degree above 2");
  Graph sub = g.remove_vertex(v);
  auto check = verify(sub, rep_sub, RepKind::pure_overlap);
  if (!check.ok())
    throw precondition_error("deletion bound: input is not a pure rep of g - v");

  int t = rep_sub.size();
  std::vector<LabelSet> sets(g.vertex_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    if (u != v) sets[u] = rep_sub.set_of(sub_index(u, v));
  if (d == 0) {
    sets[v] = {t + 1};
  } else {
    sets[v] = {t + 1, t + 2};
    const auto& nb = g.neighbors(v);
    sets[nb[0]].push_back(t + 1);
    if (d == 2) sets[nb[1]].push_back(t + 2);
  }
  OverlapRep rep{std::move(sets)};
  self_verify(g, rep, RepKind::pure_overlap, "extend_deg_le2");
  return rep;
}

OverlapRep extend_leaf(const OverlapRep& rep_sub, const Graph& g, Vertex v) {
  if (g.degree(v) != 1) throw precondition_error("leaf extension: v is not a leaf");
  Graph sub = g.remove_vertex(v);
  if (sub.edge_count() == 0)
    throw precondition_error("leaf extension: g - v must be nontrivial");
  auto check = verify(sub, rep_sub, RepKind::overlap);
  if (!check.ok())
    throw precondition_error("leaf extension: input is not an overlap rep of g - v");

  Vertex u = g.neighbors(v)[0];
  int t = rep_sub.size();
  int a = t + 1, b = t + 2;
  std::vector<LabelSet> sets(g.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    if (x != v) sets[x] = rep_sub.set_of(sub_index(x, v));

  if (g.degree(u) == 1) {
    // uv is an isolated edge: both ends swallow the rest of the ground set.
    std::set<int> r;
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
      if (x == u || x == v) continue;
      r.insert(sets[x].begin(), sets[x].end());
    }
    if (r.empty()) throw internal_error("extend_leaf: empty ground set");
    sets[u].assign(r.begin(), r.end());
    sets[u].push_back(a);
    sets[v].assign(r.begin(), r.end());
    sets[v].push_back(b);
  } else {
    LabelSet fu = sets[u];  // old f(u)
    sets[v] = {a, b};
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
      if (x == v || x == u) continue;
      if (std::includes(sets[x].begin(), sets[x].end(), fu.begin(), fu.end())) {
        sets[x].push_back(a);
        sets[x].push_back(b);
      }
    }
    sets[u].push_back(b);
  }
  OverlapRep rep{std::move(sets)};
  self_verify(g, rep, RepKind::overlap, "extend_leaf");
  return rep;
}

TriangleExtension extend_triangle(const OverlapRep& rep_sub, const Graph& g,
                                  const std::array<Vertex, 3>& t) {
  auto [ta, tb, tc] = t;
  if (!(g.adjacent(ta, tb) && g.adjacent(ta, tc) && g.adjacent(tb, tc)))
    throw precondition_error("triangle extension: T is not a triangle");
  std::vector<Vertex> keep;
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    if (x != ta && x != tb && x != tc) keep.push_back(x);
  Graph sub = g.induced(keep);
  auto check = verify(sub, rep_sub, RepKind::pure_overlap);
  if (!check.ok())
    throw precondition_error("triangle extension: input is not a pure rep of g - T");

  std::vector<int> sub_idx(g.vertex_count(), -1);
  for (size_t i = 0; i < keep.size(); ++i) sub_idx[keep[i]] = static_cast<int>(i);

  int base = rep_sub.size();
  std::vector<LabelSet> sets(g.vertex_count());
  for (Vertex x : keep) sets[x] = rep_sub.set_of(sub_idx[x]);
  sets[ta] = {base + 1, base + 2};
  sets[tb] = {base + 1, base + 3};
  sets[tc] = {base + 2, base + 3};
  int next = base + 4;

  // Labels private to a vertex of the sub-representation.
  std::vector<int> owner(base + 1, -2);  // -2 unseen, -1 shared
  for (Vertex x : keep)
    for (int l : rep_sub.set_of(sub_idx[x]))
      owner[l] = owner[l] == -2 ? static_cast<int>(sub_idx[x]) : -1;

  TriangleExtension ext;
  for (Vertex x : keep) {
    int d = sub.degree(sub_idx[x]);
    bool adj_t = g.adjacent(x, ta) || g.adjacent(x, tb) || g.adjacent(x, tc);
    if (d == 1) {
      ++ext.degree_one_total;
      if (adj_t) ++ext.degree_one_adjacent;
    }
    if (!adj_t) continue;
    if (d == 1) {
      int priv = 0;
      for (int l : rep_sub.set_of(sub_idx[x]))
        if (owner[l] == sub_idx[x]) {
          priv = l;
          break;
        }
      if (!priv) throw internal_error("extend_triangle: leaf without a private label");
      for (Vertex y : {ta, tb, tc})
        if (g.adjacent(x, y)) sets[y].push_back(priv);
    } else {
      int l = next++;
      sets[x].push_back(l);
      for (Vertex y : {ta, tb, tc})
        if (g.adjacent(x, y)) sets[y].push_back(l);
    }
  }
  ext.rep = OverlapRep(std::move(sets));
  self_verify(g, ext.rep, RepKind::pure_overlap, "extend_triangle");
  if (ext.rep.size() > base + g.vertex_count() - ext.degree_one_total)
    throw internal_error("extend_triangle: size bound violated");
  return ext;
}

OverlapRep clique_rep(int n) {
  if (n < 1) throw precondition_error("clique rep: n must be positive");
  auto choose = [](int a, int b) {
    long long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - i + 1) / i;
    return r;
  };
  int k = 1;
  while (choose(2 * k - 1, k) < n) ++k;
  std::vector<LabelSet> sets;
  LabelSet cur(k);
  std::iota(cur.begin(), cur.end(), 1);
  for (int i = 0; i < n; ++i) {
    sets.push_back(cur);
    // next k-subset of [2k-1] in lexicographic order
    int j = k - 1;
    while (j >= 0 && cur[j] == 2 * k - 1 - (k - 1 - j)) --j;
    if (j < 0) break;
    ++cur[j];
    for (int l = j + 1; l < k; ++l) cur[l] = cur[l - 1] + 1;
  }
  OverlapRep rep{std::move(sets)};
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  self_verify(Graph::from_edges(n, edges), rep, RepKind::pure_overlap, "clique_rep");
  return rep;
}

namespace {

Graph overlap_graph_of(const std::vector<LabelSet>& sets) {
  int n = static_cast<int>(sets.size());
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (pair_relation(sets[u], sets[v]) == PairRelation::overlap)
        edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

SmallTableEntry make_entry(std::string name, std::vector<LabelSet> sets) {
  for (auto& s : sets) std::sort(s.begin(), s.end());
  SmallTableEntry e;
  e.name = std::move(name);
  e.graph = overlap_graph_of(sets);
  e.rep = OverlapRep(std::move(sets));
  return e;
}

}  // namespace

const std::vector<SmallTableEntry>& small_graph_table() {
  static const std::vector<SmallTableEntry> table = [] {
    std::vector<SmallTableEntry> t;
    t.push_back(make_entry("K3", {{1, 2}, {1, 3}, {2, 3}}));
    t.push_back(make_entry("K4", {{1, 2, 3}, {4, 1}, {4, 2}, {4, 3}}));
    t.push_back(make_entry("paw", {{1, 2, 3}, {1, 2, 4}, {1, 3}, {2, 3}}));
    t.push_back(make_entry("K5", {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 1}, {5, 1, 2}}));
    t.push_back(make_entry("K5-e", {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {1, 4}, {2, 5}}));
    // K_5 minus the two edges of a path: the vertex missing both edges has
    // its set sandwiched between its two non-neighbors' sets.
    t.push_back(make_entry("K5-P3", {{1, 2}, {2, 3}, {1, 2, 3}, {1, 3, 4}, {2, 4, 5}}));
    t.push_back(make_entry("K221", {{1, 2}, {3, 4}, {1, 4}, {2, 3}, {1, 3}}));
    t.push_back(make_entry("K311", {{1, 2}, {3, 4}, {1, 2, 3, 4}, {5, 1, 3}, {5, 2, 4}}));
    t.push_back(make_entry("K5-P4", {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3, 5}}));
    t.push_back(make_entry("K4+pendant",
                           {{1, 4, 5}, {2, 4, 5}, {3, 4, 5}, {1, 2, 3, 4}, {4, 5}}));
    t.push_back(make_entry("K3+2pendants",
                           {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 2, 4, 5}}));
    t.push_back(make_entry("K3+pendant-path",
                           {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 2, 3, 5}}));
    return t;
  }();
  return table;
}

OverlapRep small_graph_rep(const Graph& g) {
  int n = g.vertex_count();
  if (n < 1 || n > 5) throw precondition_error("small_graph_rep: needs 1 <= n <= 5");
  if (n == 1) return OverlapRep(std::vector<LabelSet>{{1}});

  for (const auto& entry : small_graph_table()) {
    if (entry.graph.vertex_count() != n) continue;
    if (auto perm = find_isomorphism(g, entry.graph)) {
      std::vector<LabelSet> sets(n);
      for (Vertex v = 0; v < n; ++v) sets[v] = entry.rep.set_of((*perm)[v]);
      OverlapRep rep{std::move(sets)};
      self_verify(g, rep, RepKind::overlap, "small_graph_rep(table)");
      return rep;
    }
  }

  Reduction red = reduce(g);
  if (red.reduced.vertex_count() < n) {
    OverlapRep rep = unreduce(small_graph_rep(red.reduced), red.trace);
    self_verify(g, rep, RepKind::overlap, "small_graph_rep(reduce)");
    return rep;
  }

  if (g.is_tree()) return tree_overlap_rep(g);

  auto comp = g.component_ids();
  int comps = 1 + *std::max_element(comp.begin(), comp.end());
  if (comps > 1) {
    // Irreducible disconnected graphs at this size split into cliques; pick
    // the base component minimizing rep size minus order, and let every
    // other clique swallow the running ground set plus one private label.
    std::vector<std::vector<Vertex>> members(comps);
    for (Vertex v = 0; v < n; ++v) members[comp[v]].push_back(v);
    int base_comp = 0, best_score = 1 << 20;
    std::vector<OverlapRep> reps(comps);
    for (int c = 0; c < comps; ++c) {
      reps[c] = small_graph_rep(g.induced(members[c]));
      int score = reps[c].size() - static_cast<int>(members[c].size());
      if (score < best_score) {
        best_score = score;
        base_comp = c;
      }
    }
    std::vector<LabelSet> sets(n);
    for (size_t i = 0; i < members[base_comp].size(); ++i)
      sets[members[base_comp][i]] = reps[base_comp].set_of(static_cast<Vertex>(i));
    int next = reps[base_comp].size() + 1;
    std::set<int> ground;
    for (Vertex v : members[base_comp])
      ground.insert(sets[v].begin(), sets[v].end());
    for (int c = 0; c < comps; ++c) {
      if (c == base_comp) continue;
      for (Vertex u : members[c])
        for (Vertex w : members[c])
          if (u < w && !g.adjacent(u, w))
            throw internal_error("small_graph_rep: non-clique extra component");
      std::vector<int> added;
      for (Vertex v : members[c]) {
        sets[v].assign(ground.begin(), ground.end());
        sets[v].push_back(next);
        added.push_back(next++);
      }
      ground.insert(added.begin(), added.end());
    }
    OverlapRep rep{std::move(sets)};
    self_verify(g, rep, RepKind::overlap, "small_graph_rep(components)");
    return rep;
  }

  if (g.min_degree() == 1) {
    Vertex v = 0;
    while (g.degree(v) != 1) ++v;
    return extend_leaf(small_graph_rep(g.remove_vertex(v)), g, v);
  }

  auto [u, v] = default_edge_bound_pair(g);
  return edge_bound_rep(g, u, v);
}

std::vector<BoundCertificate> lower_bound(const Graph& g) {
  std::vector<BoundCertificate> certs;
  int n = g.vertex_count();
  int m = g.edge_count();
  if (n >= 1 && m == 0)
    certs.push_back({Quantity::phi, Direction::lower, 1, "nonempty", {},
                     "graph has a vertex"});
  if (m >= 1)
    certs.push_back({Quantity::phi, Direction::lower, 3, "edge-exists", {},
                     "graph has an edge"});
  if (g.is_tree() && n >= 3) {
    SkeletonResult sk = skeleton(g);
    certs.push_back({Quantity::phi, Direction::lower, sk.size, "tree-skeleton", {},
                     "tree; skeleton has " + std::to_string(sk.size) + " vertices"});
  }
  bool tf = g.is_triangle_free();
  if (tf && m >= 1)
    certs.push_back({Quantity::pol, Direction::lower, m, "triangle-free-edges", {},
                     "triangle-free with " + std::to_string(m) + " edges"});
  if (tf && g.connected() && n >= 2) {
    auto sc = find_star_cutset(g);
    if (sc.status == StarCutsetSearch::Status::none)
      certs.push_back({Quantity::phi, Direction::lower, m - 1, "edge-lower", {},
                       "connected, triangle-free, star-cutset-free, m=" +
                           std::to_string(m)});
  }
  return certs;
}

BoundCertificate best_upper(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) throw precondition_error("best_upper: empty graph");

  std::vector<BoundCertificate> candidates;
  auto add = [&](const char* rule, OverlapRep rep) {
    self_verify(g, rep, RepKind::overlap, rule);
    BoundCertificate c;
    c.quantity = Quantity::phi;
    c.direction = Direction::upper;
    c.value = rep.size();
    c.rule = rule;
    c.witness = std::move(rep);
    candidates.push_back(std::move(c));
  };

  Reduction red = reduce(g);
  if (red.reduced.vertex_count() < n) {
    BoundCertificate inner = best_upper(red.reduced);
    add(("reduce+" + inner.rule).c_str(), unreduce(*inner.witness, red.trace));
  } else if (g.min_degree() == 1) {
    Vertex v = 0;
    while (g.degree(v) != 1) ++v;
    Graph sub = g.remove_vertex(v);
    if (sub.edge_count() >= 1) {
      BoundCertificate inner = best_upper(sub);
      add(("leaf+" + inner.rule).c_str(), extend_leaf(*inner.witness, g, v));
    }
  }

  if (g.is_tree()) add("tree-skeleton", tree_overlap_rep(g));
  if (n <= 5) add("small-graph", small_graph_rep(g));
  if (g.edge_count() == n * (n - 1) / 2 && n >= 2) add("clique-antichain", clique_rep(n));
  if (g.min_degree() >= 2 && !is_book(g)) {
    auto [u, v] = default_edge_bound_pair(g);
    add("edge-bound", edge_bound_rep(g, u, v));
  }
  if (g.min_degree() >= 2)
    add("decomposition", decomposition_rep(g, greedy_triangle_decomposition(g)));
  if (n >= 3 && n <= 8 && g.edge_count() <= 3 * n - 6 && g.connected() &&
      g.min_degree() >= 2 && red.reduced.vertex_count() == n) {
    if (auto pg = try_embed_planar(g, 2'000'000))
      add("planar", *planar_phi_upper(*pg).witness);
  }

  if (candidates.empty())
    throw internal_error("best_upper: no construction route applied");
  const BoundCertificate* best = &candidates.front();
  for (const auto& c : candidates)
    if (c.value < best->value) best = &c;

  for (const auto& lc : lower_bound(g))
    if (lc.quantity == Quantity::phi && best->value < lc.value)
      throw internal_error("best_upper: upper bound below a certified lower bound");
  return *best;
}

}  // namespace overlap
