#include "overlap/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "overlap/error.hpp"

namespace overlap {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw internal_error(std::string("generator self-check failed: ") + what);
}

}  // namespace

Graph gen_biclique_minus_matching(int n) {
  if (n < 6) throw precondition_error("biclique-minus-matching: n >= 6 required");
  int k = n / 2;  // |X|
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n - k; ++j)
      if (j != i) edges.emplace_back(i, k + j);
  if (n % 2 == 1) {
    // Remove one edge at the unmatched vertex of the larger side.
    auto extra = std::make_pair(0, k + (n - k - 1));
    edges.erase(std::find(edges.begin(), edges.end(), extra));
  }
  Graph g = Graph::from_edges(n, edges);
  require(g.connected(), "connected");
  require(g.is_triangle_free(), "triangle-free");
  require(g.edge_count() == (n * n / 4) - (n % 2 == 0 ? n / 2 : n / 2 + 1) +
                                (n % 2 == 0 ? 0 : 0),
          "edge count");
  require(find_star_cutset(g).status == StarCutsetSearch::Status::none,
          "star-cutset-free");
  return g;
}

namespace {

PlaneGraph prism_tower(int k) {  // P_k box C_4, n = 4k
  auto id = [](int i, int j) { return 4 * i + ((j % 4) + 4) % 4; };
  std::vector<std::vector<Vertex>> faces;
  for (int i = 0; i + 1 < k; ++i)
    for (int j = 0; j < 4; ++j)
      faces.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)});
  faces.push_back({id(0, 0), id(0, 1), id(0, 2), id(0, 3)});
  faces.push_back({id(k - 1, 3), id(k - 1, 2), id(k - 1, 1), id(k - 1, 0)});
  return PlaneGraph::from_faces(4 * k, faces);
}

PlaneGraph cycle_with_apexes(int n) {  // n - 2 cycle plus inside/outside apexes
  int c = n - 2;
  Vertex inner = c, outer = c + 1;
  auto mod = [&](int i) { return ((i % c) + c) % c; };
  std::vector<std::vector<Vertex>> faces;
  for (int i = 0; i < c / 2; ++i)
    faces.push_back({inner, mod(2 * i), mod(2 * i + 1), mod(2 * i + 2)});
  for (int i = 0; i < c / 2; ++i)
    faces.push_back({outer, mod(2 * i + 1), mod(2 * i), mod(2 * i - 1)});
  return PlaneGraph::from_faces(n, faces);
}

// Replace a degree >= 4 vertex x by nonadjacent x', x'' whose neighborhoods
// split the rotation of x into two arcs sharing its endpoints; the lens
// between them becomes a new 4-face.
PlaneGraph split_vertex(const PlaneGraph& base) {
  int n = base.vertex_count();
  Vertex x = -1;
  for (Vertex v = 0; v < n && x == -1; ++v)
    if (static_cast<int>(base.rotation(v).size()) >= 4) x = v;
  if (x == -1) throw internal_error("quadrangulation split: no vertex of degree >= 4");
  const auto& r = base.rotation(x);
  Vertex u = r[0], w = r[2];
  std::map<Vertex, int> pos;
  for (size_t i = 0; i < r.size(); ++i) pos[r[i]] = static_cast<int>(i);

  Vertex x1 = x, x2 = n;  // x keeps arc r[0..2]; the new vertex takes the rest
  std::vector<std::vector<Vertex>> faces;
  for (const auto& f : trace_faces(base)) {
    std::vector<Vertex> walk = f;
    size_t k = walk.size();
    for (size_t i = 0; i < k; ++i) {
      if (walk[i] != x) continue;
      Vertex prev = f[(i + k - 1) % k];
      walk[i] = pos.at(prev) <= 1 ? x1 : x2;
    }
    faces.push_back(std::move(walk));
  }
  faces.push_back({x1, u, x2, w});
  return PlaneGraph::from_faces(n + 1, faces);
}

}  // namespace

PlaneGraph gen_quadrangulation(int n) {
  if (!(n == 4 || n == 8 || n >= 10))
    throw precondition_error("quadrangulation: supported for n = 4, 8 and n >= 10");
  PlaneGraph pg;
  if (n % 2 == 1) {
    pg = split_vertex(gen_quadrangulation(n - 1));
  } else if (n % 4 == 0) {
    pg = prism_tower(n / 4);
  } else {
    pg = cycle_with_apexes(n);
  }
  const Graph& g = pg.graph();
  require(g.vertex_count() == n, "vertex count");
  require(g.connected(), "connected");
  require(g.edge_count() == 2 * n - 4, "edge count");
  for (const auto& f : trace_faces(pg)) require(f.size() == 4, "face length 4");
  require(find_star_cutset(g).status == StarCutsetSearch::Status::none,
          "star-cutset-free");
  return pg;
}

Graph gen_book(int n) {
  if (n < 3) throw precondition_error("book: n >= 3 required");
  std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}};
  for (Vertex p = 2; p < n; ++p) {
    edges.emplace_back(0, p);
    edges.emplace_back(1, p);
  }
  Graph g = Graph::from_edges(n, edges);
  require(is_book(g), "book shape");
  return g;
}

Graph gen_caterpillar(int spine, const std::vector<int>& legs) {
  if (spine < 1 || static_cast<int>(legs.size()) != spine)
    throw precondition_error("caterpillar: legs list must match spine length");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
  int next = spine;
  for (int i = 0; i < spine; ++i)
    for (int l = 0; l < legs[i]; ++l) edges.emplace_back(i, next++);
  Graph g = Graph::from_edges(next, edges);
  require(is_caterpillar(g), "caterpillar shape");
  return g;
}

Graph gen_spider(const std::vector<int>& legs) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  int next = 1;
  for (int len : legs) {
    if (len < 1) throw precondition_error("spider: leg lengths must be positive");
    Vertex prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  Graph g = Graph::from_edges(next, edges);
  require(g.is_tree(), "tree shape");
  return g;
}

bool is_caterpillar(const Graph& g) {
  if (!g.is_tree()) return false;
  // The derived tree must be a path (or at most one vertex).
  std::vector<Vertex> internal;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= 2) internal.push_back(v);
  if (internal.size() <= 1) return true;
  Graph derived = g.induced(internal);
  if (!derived.connected()) return false;
  for (Vertex v = 0; v < derived.vertex_count(); ++v)
    if (derived.degree(v) > 2) return false;
  return true;
}

namespace {

// AHU encoding of a rooted tree, children encodings sorted.
std::string ahu(const Graph& g, Vertex root, Vertex parent, Vertex skip) {
  std::vector<std::string> child;
  for (Vertex w : g.neighbors(root))
    if (w != parent && w != skip) child.push_back(ahu(g, w, root, skip));
  std::sort(child.begin(), child.end());
  std::string out = "(";
  for (const auto& c : child) out += c;
  out += ")";
  return out;
}

std::vector<Vertex> centroids(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> size(n, 1), best(n, 0);
  // Iterative post-order from vertex 0.
  std::vector<Vertex> order, parent(n, -1), stack{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (Vertex w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = u;
        stack.push_back(w);
      }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex u = *it;
    int heaviest = n - size[u];
    for (Vertex w : g.neighbors(u))
      if (w != parent[u]) heaviest = std::max(heaviest, size[w]);
    best[u] = heaviest;
    if (parent[u] != -1) size[parent[u]] += size[u];
  }
  int opt = *std::min_element(best.begin(), best.end());
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (best[v] == opt) out.push_back(v);
  return out;
}

std::string canonical_tree_form(const Graph& g) {
  auto c = centroids(g);
  if (c.size() == 1) return "C" + ahu(g, c[0], -1, -1);
  std::string a = ahu(g, c[0], -1, c[1]);
  std::string b = ahu(g, c[1], -1, c[0]);
  if (b < a) std::swap(a, b);
  return "E" + a + "|" + b;
}

}  // namespace

std::vector<Graph> enum_trees(int n) {
  if (n < 1 || n > 10) throw precondition_error("enum_trees: supported for 1 <= n <= 10");
  if (n == 1) return {Graph(1)};
  std::vector<Graph> out;
  std::set<std::string> seen;
  // Level sequences of ordered trees: L[0] = 0, 1 <= L[i] <= L[i-1] + 1.
  std::vector<int> level(n, 0);
  std::vector<std::pair<Vertex, Vertex>> edges;
  auto attach_parent = [&](int i) {
    for (int j = i - 1; j >= 0; --j)
      if (level[j] == level[i] - 1) return j;
    return 0;
  };
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      edges.clear();
      for (int v = 1; v < n; ++v) edges.emplace_back(attach_parent(v), v);
      Graph t = Graph::from_edges(n, edges);
      if (seen.insert(canonical_tree_form(t)).second) out.push_back(t);
      return;
    }
    for (int l = 1; l <= level[i - 1] + 1; ++l) {
      level[i] = l;
      self(self, i + 1);
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<Graph> enum_connected_graphs(int n) {
  if (n < 1 || n > 6)
    throw precondition_error("enum_connected_graphs: supported for 1 <= n <= 6");
  static std::map<int, std::vector<Graph>> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  int np = static_cast<int>(pairs.size());

  // Edge-index remap for every vertex permutation.
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> remap;
  std::map<std::pair<Vertex, Vertex>, int> pair_index;
  for (int i = 0; i < np; ++i) pair_index[pairs[i]] = i;
  do {
    std::vector<int> r(np);
    for (int i = 0; i < np; ++i) {
      Vertex a = perm[pairs[i].first], b = perm[pairs[i].second];
      r[i] = pair_index.at({std::min(a, b), std::max(a, b)});
    }
    remap.push_back(std::move(r));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::set<unsigned> canon_seen;
  std::vector<unsigned> canon_masks;
  for (unsigned mask = 0; mask < (1u << np); ++mask) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < np; ++i)
      if (mask & (1u << i)) edges.push_back(pairs[i]);
    Graph g = Graph::from_edges(n, edges);
    if (!g.connected()) continue;
    unsigned canon = ~0u;
    for (const auto& r : remap) {
      unsigned image = 0;
      for (int i = 0; i < np; ++i)
        if (mask & (1u << i)) image |= 1u << r[i];
      canon = std::min(canon, image);
    }
    if (canon_seen.insert(canon).second) canon_masks.push_back(canon);
  }
  std::sort(canon_masks.begin(), canon_masks.end(),
            [](unsigned a, unsigned b) {
              int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
              return pa != pb ? pa < pb : a < b;
            });
  std::vector<Graph> out;
  for (unsigned mask : canon_masks) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < np; ++i)
      if (mask & (1u << i)) edges.push_back(pairs[i]);
    out.push_back(Graph::from_edges(n, edges));
  }
  cache[n] = out;
  return out;
}

}  // namespace overlap
