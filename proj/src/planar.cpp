#include "overlap/planar.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "overlap/error.hpp"
#include "overlap/tree.hpp"

namespace overlap {

PlaneGraph::PlaneGraph(std::vector<std::vector<Vertex>> rotations) {
  int n = static_cast<int>(rotations.size());
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < n; ++v) {
    std::set<Vertex> seen;
    for (Vertex u : rotations[v]) {
      if (u < 0 || u >= n || u == v)
        throw precondition_error("rotation: bad neighbor entry");
      if (!seen.insert(u).second)
        throw precondition_error("rotation: neighbor listed twice");
      if (v < u) edges.emplace_back(v, u);
    }
  }
  graph_ = Graph::from_edges(n, edges);
  for (Vertex v = 0; v < n; ++v)
    if (static_cast<int>(rotations[v].size()) != graph_.degree(v))
      throw precondition_error("rotation: asymmetric adjacency");
  rot_ = std::move(rotations);
}

PlaneGraph PlaneGraph::from_faces(int n, const std::vector<std::vector<Vertex>>& faces) {
  // next_after[b][a] = c for consecutive a -> b -> c along a facial walk;
  // this is exactly the rotation successor map at b.
  std::vector<std::map<Vertex, Vertex>> next_after(n);
  for (const auto& walk : faces) {
    size_t k = walk.size();
    if (k < 2) throw precondition_error("from_faces: walk too short");
    for (size_t i = 0; i < k; ++i) {
      Vertex a = walk[i], b = walk[(i + 1) % k], c = walk[(i + 2) % k];
      if (b < 0 || b >= n) throw precondition_error("from_faces: vertex out of range");
      if (!next_after[b].emplace(a, c).second)
        throw precondition_error("from_faces: directed edge used twice");
    }
  }
  std::vector<std::vector<Vertex>> rotations(n);
  for (Vertex v = 0; v < n; ++v) {
    if (next_after[v].empty()) continue;
    Vertex start = next_after[v].begin()->first;
    Vertex cur = start;
    do {
      rotations[v].push_back(cur);
      auto it = next_after[v].find(cur);
      if (it == next_after[v].end())
        throw precondition_error("from_faces: open rotation at a vertex");
      cur = it->second;
    } while (cur != start && rotations[v].size() <= next_after[v].size());
    if (rotations[v].size() != next_after[v].size() || cur != start)
      throw precondition_error("from_faces: rotation is not a single cycle");
  }
  return PlaneGraph(std::move(rotations));
}

PlaneGraph PlaneGraph::remove_vertex(Vertex v) const {
  int n = vertex_count();
  std::vector<std::vector<Vertex>> rotations;
  rotations.reserve(n - 1);
  for (Vertex u = 0; u < n; ++u) {
    if (u == v) continue;
    std::vector<Vertex> r;
    for (Vertex w : rot_[u])
      if (w != v) r.push_back(w > v ? w - 1 : w);
    rotations.push_back(std::move(r));
  }
  return PlaneGraph(std::move(rotations));
}

std::vector<std::vector<Vertex>> trace_faces(const PlaneGraph& pg) {
  int n = pg.vertex_count();
  std::vector<std::map<Vertex, Vertex>> succ(n);  // succ[b][a]: next after a in rot(b)
  for (Vertex b = 0; b < n; ++b) {
    const auto& r = pg.rotation(b);
    for (size_t i = 0; i < r.size(); ++i) succ[b][r[i]] = r[(i + 1) % r.size()];
  }
  std::set<std::pair<Vertex, Vertex>> used;
  std::vector<std::vector<Vertex>> faces;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex w : pg.rotation(u)) {
      if (used.count({u, w})) continue;
      std::vector<Vertex> walk;
      Vertex a = u, b = w;
      do {
        walk.push_back(a);
        used.emplace(a, b);
        Vertex c = succ[b].at(a);
        a = b;
        b = c;
      } while (!(a == u && b == w));
      faces.push_back(std::move(walk));
    }
  return faces;
}

namespace {

struct Part {
  std::vector<Vertex> verts;       // 2 (edge) or 3 (triangle)
  bool operator<(const Part& o) const { return verts < o.verts; }
};

std::array<Vertex, 3> sorted_triple(Vertex a, Vertex b, Vertex c) {
  std::array<Vertex, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

// Replace the facial triangle walk [x,y,z] with a new vertex adjacent to
// x, y, z placed inside the old face.
PlaneGraph triangle_surgery(const PlaneGraph& pg, const std::vector<Vertex>& walk) {
  int n = pg.vertex_count();
  Vertex x = walk[0], y = walk[1], z = walk[2];
  std::vector<std::vector<Vertex>> rotations(n + 1);
  for (Vertex u = 0; u < n; ++u) rotations[u] = pg.rotation(u);
  // The corner at x is (z, x, y): entries z, y are cyclically consecutive.
  auto splice = [&](Vertex at, Vertex before, Vertex after) {
    auto& r = rotations[at];
    int d = static_cast<int>(r.size());
    int i = static_cast<int>(std::find(r.begin(), r.end(), before) - r.begin());
    if (i == d || r[(i + 1) % d] != after)
      throw internal_error("triangle surgery: face corner does not match rotation");
    std::vector<Vertex> out;
    for (int k = 0; k < d; ++k) {
      if (k == i) {
        out.push_back(n);  // the new vertex takes the corner slot
        ++k;               // skip `after` as well
        continue;
      }
      out.push_back(r[k]);
    }
    if (i == d - 1) out.erase(out.begin());  // wrapped pair: `after` was r[0]
    r = std::move(out);
  };
  splice(x, z, y);
  splice(y, x, z);
  splice(z, y, x);
  // Each face adjacent to the triangle gains the detour through the new
  // vertex (y->x becomes y->v->x and cyclically), which fixes its rotation
  // as the reverse of the face walk.
  rotations[n] = {x, z, y};
  return PlaneGraph(std::move(rotations));
}

std::vector<Part> decompose_component(const PlaneGraph& pg);

// Figure-style reassembly when every face of the surgered graph is a
// 4-cycle: the faces around the new vertex recover the facial triangles of
// the original graph adjacent to the chosen one.
std::vector<Part> reassemble_quadrangulation(const PlaneGraph& pg,
                                             const PlaneGraph& surgered,
                                             const std::vector<Vertex>& walk) {
  int n = pg.vertex_count();
  Vertex x = walk[0], y = walk[1], z = walk[2];
  auto faces = trace_faces(surgered);
  std::vector<std::array<Vertex, 3>> corner_triangles;  // {A, w, B} per face at v
  for (const auto& f : faces) {
    if (std::find(f.begin(), f.end(), n) == f.end()) continue;
    if (f.size() != 4)
      throw internal_error("planar decomposition: face at the new vertex not a 4-cycle");
    int i = static_cast<int>(std::find(f.begin(), f.end(), n) - f.begin());
    Vertex a = f[(i + 1) % 4], w = f[(i + 2) % 4], b = f[(i + 3) % 4];
    std::set<Vertex> ab{a, b};
    bool a_ok = ab.count(x) + ab.count(y) + ab.count(z) == 2;
    if (!a_ok || w == n || w == x || w == y || w == z || a == b)
      throw internal_error(
          "planar decomposition: quadrangulation subcase lacks a facial triangle "
          "on an edge of the chosen triangle");
    corner_triangles.push_back({a, w, b});
  }
  if (corner_triangles.size() != 3)
    throw internal_error("planar decomposition: expected three faces at the new vertex");

  // All three opposite corners equal: the component is K_4.
  Vertex p = corner_triangles[0][1];
  if (corner_triangles[1][1] == p && corner_triangles[2][1] == p) {
    if (pg.vertex_count() != 4 || pg.graph().edge_count() != 6)
      throw internal_error(
          "planar decomposition: K_{2,3} pocket inside a larger component");
    std::vector<Part> parts;
    auto t = sorted_triple(x, y, z);
    parts.push_back({{t[0], t[1], t[2]}});
    for (Vertex q : t) parts.push_back({{std::min(p, q), std::max(p, q)}});
    return parts;
  }

  std::vector<std::array<Vertex, 3>> candidates;
  for (auto [a, w, b] : corner_triangles) candidates.push_back(sorted_triple(a, w, b));
  std::sort(candidates.begin(), candidates.end());

  auto norm = [](Vertex a, Vertex b) {
    return std::make_pair(std::min(a, b), std::max(a, b));
  };
  std::vector<Part> parts;
  std::set<std::pair<Vertex, Vertex>> covered;
  for (const auto& cand : candidates) {
    auto e1 = norm(cand[0], cand[1]), e2 = norm(cand[0], cand[2]),
         e3 = norm(cand[1], cand[2]);
    if (covered.count(e1) || covered.count(e2) || covered.count(e3)) continue;
    covered.insert({e1, e2, e3});
    parts.push_back({{cand[0], cand[1], cand[2]}});
  }
  for (auto e : pg.graph().edges())
    if (!covered.count(e)) parts.push_back({{e.first, e.second}});
  return parts;
}

std::vector<Part> decompose_component(const PlaneGraph& pg) {
  if (pg.graph().edge_count() == 0) return {};
  auto faces = trace_faces(pg);
  int best_face = -1;
  std::array<Vertex, 3> best{};
  for (size_t i = 0; i < faces.size(); ++i) {
    const auto& f = faces[i];
    if (f.size() != 3 || f[0] == f[1] || f[1] == f[2] || f[0] == f[2]) continue;
    auto t = sorted_triple(f[0], f[1], f[2]);
    if (best_face == -1 || t < best) {
      best = t;
      best_face = static_cast<int>(i);
    }
  }
  if (best_face == -1) {
    std::vector<Part> parts;
    for (auto [u, v] : pg.graph().edges()) parts.push_back({{u, v}});
    return parts;
  }

  const auto& walk = faces[best_face];
  PlaneGraph surgered = triangle_surgery(pg, walk);
  auto sfaces = trace_faces(surgered);
  bool all_quads = std::all_of(sfaces.begin(), sfaces.end(),
                               [](const auto& f) { return f.size() == 4; });
  if (all_quads) return reassemble_quadrangulation(pg, surgered, walk);

  std::vector<Part> parts = decompose_component(surgered);
  int n = pg.vertex_count();
  Vertex x = walk[0], y = walk[1], z = walk[2];
  size_t before = parts.size();
  parts.erase(std::remove_if(parts.begin(), parts.end(),
                             [&](const Part& p) {
                               return p.verts.size() == 2 &&
                                      (p.verts[1] == n || p.verts[0] == n);
                             }),
              parts.end());
  if (before - parts.size() != 3)
    throw internal_error("planar decomposition: new vertex edges were not edge parts");
  auto t = sorted_triple(x, y, z);
  parts.push_back({{t[0], t[1], t[2]}});
  return parts;
}

}  // namespace

PlanarDecomposition plan_decompose(const PlaneGraph& pg) {
  int n = pg.vertex_count();
  if (n < 3) throw precondition_error("plan_decompose: need at least 3 vertices");

  // Process per connected component; rotation systems do not encode face
  // nesting between components.
  auto comp = pg.graph().component_ids();
  int comps = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
  std::vector<Part> parts;
  for (int c = 0; c < comps; ++c) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v)
      if (comp[v] == c) members.push_back(v);
    PlaneGraph sub = pg;
    // Delete all vertices outside the component (descending keeps ids stable).
    for (Vertex v = n - 1; v >= 0; --v)
      if (comp[v] != c) sub = sub.remove_vertex(v);
    for (auto part : decompose_component(sub)) {
      for (auto& v : part.verts) v = members[v];
      parts.push_back(part);
    }
  }
  std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
    return a.verts.size() != b.verts.size() ? a.verts.size() > b.verts.size()
                                            : a.verts < b.verts;
  });

  PlanarDecomposition out;
  auto faces = trace_faces(pg);
  for (const auto& p : parts) {
    out.decomposition.parts.push_back(p.verts);
    if (p.verts.size() == 2) {
      ++out.edge_parts;
      continue;
    }
    int face_index = -1;
    for (size_t i = 0; i < faces.size() && face_index == -1; ++i)
      if (faces[i].size() == 3 &&
          sorted_triple(faces[i][0], faces[i][1], faces[i][2]) ==
              std::array<Vertex, 3>{p.verts[0], p.verts[1], p.verts[2]})
        face_index = static_cast<int>(i);
    if (face_index == -1)
      throw internal_error("plan_decompose: triangle part is not a face");
    out.triangles.push_back({{p.verts[0], p.verts[1], p.verts[2]}, face_index});
  }
  validate_decomposition(pg.graph(), out.decomposition);
  return out;
}

PlanarDecompositionCase classify_decomposition(const PlaneGraph& pg,
                                               const PlanarDecomposition& d) {
  int n = pg.vertex_count();
  int parts = static_cast<int>(d.decomposition.parts.size());
  if (parts <= 2 * n - 5) return PlanarDecompositionCase::within_bound;
  auto faces = trace_faces(pg);
  bool all4 = std::all_of(faces.begin(), faces.end(),
                          [](const auto& f) { return f.size() == 4; });
  if (all4 && parts == 2 * n - 4) return PlanarDecompositionCase::quadrangulation;
  if (n == 4 && pg.graph().edge_count() == 6 && parts == 4)
    return PlanarDecompositionCase::k4;
  throw internal_error("planar decomposition: size outside the stated trichotomy");
}

namespace {

// Label of f(u) appearing in no other set, or 0.
int private_label(const OverlapRep& rep, Vertex u) {
  for (int l : rep.set_of(u)) {
    bool priv = true;
    for (Vertex w = 0; w < rep.vertex_count() && priv; ++w)
      if (w != u && std::binary_search(rep.set_of(w).begin(), rep.set_of(w).end(), l))
        priv = false;
    if (priv) return l;
  }
  return 0;
}

void assert_pure(const Graph& g, const OverlapRep& rep, const char* what) {
  if (!verify(g, rep, RepKind::pure_overlap).ok())
    throw internal_error(std::string(what) + ": pure verification failed");
}

}  // namespace

OverlapRep planar_pol_rep(const PlaneGraph& pg) {
  const Graph& g = pg.graph();
  int n = g.vertex_count();
  if (n == 0) throw precondition_error("planar_pol_rep: empty graph");
  if (g.edge_count() == 0) {
    std::vector<LabelSet> sets(n);
    for (Vertex v = 0; v < n; ++v) sets[v] = {v + 1};
    return OverlapRep(std::move(sets));
  }
  if (n == 2) return OverlapRep(std::vector<LabelSet>{{1, 2}, {2, 3}});

  if (g.min_degree() >= 3) {
    auto d = plan_decompose(pg);
    return decomposition_rep(g, d.decomposition);
  }

  Vertex v = 0;
  for (Vertex u = 1; u < n; ++u)
    if (g.degree(u) < g.degree(v)) v = u;

  // Five-vertex special case: K_4 plus a degree-2 vertex has a pure rep one
  // label cheaper than peeling gives.
  if (g.degree(v) == 2 && n == 5) {
    Graph sub = g.remove_vertex(v);
    if (sub.edge_count() == 6) {
      std::vector<LabelSet> sets(5);
      const auto& nb = g.neighbors(v);
      sets[v] = {1, 5};
      sets[nb[0]] = {1, 2, 3};
      sets[nb[1]] = {1, 4};
      std::vector<LabelSet> rest{{2, 4}, {3, 4}};
      int next = 0;
      for (Vertex u = 0; u < 5; ++u)
        if (u != v && u != nb[0] && u != nb[1]) sets[u] = rest[next++];
      OverlapRep rep{std::move(sets)};
      assert_pure(g, rep, "planar_pol_rep(K4+v)");
      return rep;
    }
  }

  OverlapRep sub_rep = planar_pol_rep(pg.remove_vertex(v));
  int d = g.degree(v);
  if (d == 0) return extend_deg_le2(sub_rep, g, v);

  auto sub_index = [&](Vertex u) { return u < v ? u : u - 1; };
  for (Vertex u : g.neighbors(v)) {
    int a = private_label(sub_rep, sub_index(u));
    if (a == 0 || sub_rep.set_of(sub_index(u)).size() < 2) continue;
    int t = sub_rep.size();
    std::vector<LabelSet> sets(n);
    for (Vertex w = 0; w < n; ++w)
      if (w != v) sets[w] = sub_rep.set_of(sub_index(w));
    sets[v] = {a, t + 1};
    if (d == 2) {
      Vertex other = g.neighbors(v)[0] == u ? g.neighbors(v)[1] : g.neighbors(v)[0];
      sets[other].push_back(t + 1);
    }
    OverlapRep rep{std::move(sets)};
    assert_pure(g, rep, "planar_pol_rep(private-label)");
    return rep;
  }
  return extend_deg_le2(sub_rep, g, v);
}

BoundCertificate planar_phi_upper(const PlaneGraph& pg) {
  const Graph& g = pg.graph();
  int n = g.vertex_count();
  if (n == 0) throw precondition_error("planar_phi_upper: empty graph");

  auto wrap = [&](std::string rule, OverlapRep rep) {
    if (!verify(g, rep, RepKind::overlap).ok())
      throw internal_error("planar_phi_upper: witness failed verification");
    BoundCertificate c;
    c.quantity = Quantity::phi;
    c.direction = Direction::upper;
    c.value = rep.size();
    c.rule = std::move(rule);
    c.witness = std::move(rep);
    return c;
  };

  if (n <= 5) return wrap("planar/small", small_graph_rep(g));

  Reduction red = reduce(g);
  if (red.reduced.vertex_count() < n) {
    PlaneGraph sub = pg;
    for (const auto& step : red.trace.steps) {
      // Trace steps store original ids; replay with current ids.
      Vertex cur = step.vertex;
      for (const auto& done : red.trace.steps) {
        if (&done == &step) break;
        if (done.vertex < step.vertex) --cur;
      }
      sub = sub.remove_vertex(cur);
    }
    BoundCertificate inner = planar_phi_upper(sub);
    return wrap("reduce+" + inner.rule, unreduce(*inner.witness, red.trace));
  }

  if (g.min_degree() == 1) {
    Vertex v = 0;
    while (g.degree(v) != 1) ++v;
    BoundCertificate inner = planar_phi_upper(pg.remove_vertex(v));
    return wrap("leaf+" + inner.rule, extend_leaf(*inner.witness, g, v));
  }

  std::vector<BoundCertificate> candidates;
  if (!is_book(g)) {
    auto [u, v] = default_edge_bound_pair(g);
    candidates.push_back(wrap("planar/edge-bound", edge_bound_rep(g, u, v)));
  }
  {
    auto d = plan_decompose(pg);
    bool incidence_ok = true;
    std::vector<int> count(n, 0);
    for (const auto& p : d.decomposition.parts)
      for (Vertex v : p) ++count[v];
    for (Vertex v = 0; v < n; ++v)
      if (count[v] < 2) incidence_ok = false;
    if (incidence_ok)
      candidates.push_back(
          wrap("planar/decomposition", decomposition_rep(g, d.decomposition)));
  }
  if (g.edge_count() == 2 * n - 3) {
    for (const auto& tri : g.triangles()) {
      bool outside = true;
      for (Vertex x : tri) {
        bool has = false;
        for (Vertex w : g.neighbors(x))
          if (w != tri[0] && w != tri[1] && w != tri[2]) has = true;
        if (!has) outside = false;
      }
      if (!outside) continue;
      CliqueDecomposition f;
      f.parts.push_back({tri[0], tri[1], tri[2]});
      auto in_tri = [&](Vertex a, Vertex b) {
        auto is_t = [&](Vertex q) { return q == tri[0] || q == tri[1] || q == tri[2]; };
        return is_t(a) && is_t(b);
      };
      for (auto [a, b] : g.edges())
        if (!in_tri(a, b)) f.parts.push_back({a, b});
      candidates.push_back(
          wrap("planar/triangle+edges", decomposition_rep(g, f)));
      break;
    }
  }
  candidates.push_back(wrap("planar/pure-peel", planar_pol_rep(pg)));

  const BoundCertificate* best = &candidates.front();
  for (const auto& c : candidates)
    if (c.value < best->value) best = &c;
  if (n >= 5 && best->value > 2 * n - 5)
    throw internal_error("planar_phi_upper: no route met the 2n-5 bound");
  return *best;
}

std::optional<PlaneGraph> try_embed_planar(const Graph& g, long long work_cap) {
  int n = g.vertex_count();
  if (!g.connected()) throw precondition_error("try_embed_planar: connected inputs only");
  int m = g.edge_count();
  if (m == 0) return PlaneGraph(std::vector<std::vector<Vertex>>(n));
  if (n >= 3 && m > 3 * n - 6) return std::nullopt;

  long long work = 1;
  for (Vertex v = 0; v < n; ++v) {
    int d = g.degree(v);
    for (int i = 2; i < d; ++i) {
      work *= i;
      if (work > work_cap) return std::nullopt;
    }
  }

  // Odometer over per-vertex cyclic orders (first neighbor pinned). Faces
  // are counted with flat arrays: directed edge (v, i-th rotation entry)
  // gets index offset[v] + i.
  std::vector<std::vector<Vertex>> rot(n);
  std::vector<std::vector<Vertex>> tail(n);
  for (Vertex v = 0; v < n; ++v) {
    rot[v] = g.neighbors(v);
    tail[v].assign(rot[v].begin() + (rot[v].empty() ? 0 : 1), rot[v].end());
  }
  std::vector<int> offset(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) offset[v + 1] = offset[v] + g.degree(v);

  std::vector<int> next_edge(2 * m);
  std::vector<char> used(2 * m);
  auto count_faces = [&]() {
    for (Vertex b = 0; b < n; ++b) {
      int d = static_cast<int>(rot[b].size());
      for (int i = 0; i < d; ++i) {
        // Directed edge (rot[b][i], b) continues to (b, rot[b][(i+1)%d]).
        Vertex a = rot[b][i];
        const auto& ra = rot[a];
        int pos_b = static_cast<int>(std::find(ra.begin(), ra.end(), b) - ra.begin());
        next_edge[offset[a] + pos_b] = offset[b] + (i + 1) % d;
      }
    }
    std::fill(used.begin(), used.end(), 0);
    int faces = 0;
    for (int e = 0; e < 2 * m; ++e) {
      if (used[e]) continue;
      ++faces;
      int cur = e;
      while (!used[cur]) {
        used[cur] = 1;
        cur = next_edge[cur];
      }
    }
    return faces;
  };

  while (true) {
    if (n - m + count_faces() == 2) {
      std::vector<std::vector<Vertex>> rotations = rot;
      return PlaneGraph(std::move(rotations));
    }
    Vertex v = 0;
    while (v < n) {
      if (std::next_permutation(tail[v].begin(), tail[v].end())) break;
      ++v;
    }
    if (v == n) return std::nullopt;
    for (Vertex u = 0; u <= v; ++u)
      std::copy(tail[u].begin(), tail[u].end(), rot[u].begin() + 1);
  }
}

PlaneGraph parse_rotation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw parse_error("rotation: empty input");
  int n;
  {
    std::istringstream h(line);
    if (!(h >> n) || n < 0) throw parse_error("rotation: expected vertex count");
  }
  std::vector<std::vector<Vertex>> rotations(n);
  int seen = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw parse_error("rotation: expected \"v: ...\"");
    int v;
    {
      std::istringstream h(line.substr(0, colon));
      if (!(h >> v) || v < 0 || v >= n) throw parse_error("rotation: bad vertex id");
    }
    std::istringstream rest(line.substr(colon + 1));
    Vertex u;
    while (rest >> u) rotations[v].push_back(u);
    ++seen;
  }
  if (seen != n) throw parse_error("rotation: expected one line per vertex");
  try {
    return PlaneGraph(std::move(rotations));
  } catch (const precondition_error& e) {
    throw parse_error(std::string("rotation: ") + e.what());
  }
}

std::string format_rotation(const PlaneGraph& pg) {
  std::ostringstream out;
  out << pg.vertex_count() << '\n';
  for (Vertex v = 0; v < pg.vertex_count(); ++v) {
    out << v << ':';
    for (Vertex u : pg.rotation(v)) out << ' ' << u;
    out << '\n';
  }
  return out.str();
}

PlaneGraph read_rotation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_rotation(buf.str());
}

}  // namespace overlap
