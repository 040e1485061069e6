#include "overlap/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>

#include "overlap/error.hpp"

namespace overlap {

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  if (n < 0) throw precondition_error("vertex count must be nonnegative");
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw precondition_error("edge endpoint out of range");
    if (u == v) throw precondition_error("loops are not allowed");
    if (u > v) std::swap(u, v);
    g.edges_.emplace_back(u, v);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (std::adjacent_find(g.edges_.begin(), g.edges_.end()) != g.edges_.end())
    throw precondition_error("multi-edges are not allowed");
  for (auto [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u == v) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : degree(0);
  for (Vertex v = 1; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<int> Graph::component_ids() const {
  std::vector<int> comp(n_, -1);
  int next = 0;
  for (Vertex s = 0; s < n_; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : adj_[u])
        if (comp[w] == -1) {
          comp[w] = next;
          q.push(w);
        }
    }
    ++next;
  }
  return comp;
}

int Graph::component_count() const {
  auto ids = component_ids();
  return ids.empty() ? 0 : 1 + *std::max_element(ids.begin(), ids.end());
}

bool Graph::connected() const { return component_count() <= 1; }

bool Graph::is_tree() const {
  return n_ >= 1 && edge_count() == n_ - 1 && connected();
}

bool Graph::is_triangle_free() const {
  for (auto [u, v] : edges_) {
    const auto& a = adj_[u];
    const auto& b = adj_[v];
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return false;
      (a[i] < b[j]) ? ++i : ++j;
    }
  }
  return true;
}

std::vector<std::array<Vertex, 3>> Graph::triangles() const {
  std::vector<std::array<Vertex, 3>> out;
  for (auto [u, v] : edges_) {
    const auto& a = adj_[u];
    const auto& b = adj_[v];
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) {
        if (a[i] > v) out.push_back({u, v, a[i]});
        ++i, ++j;
      } else {
        (a[i] < b[j]) ? ++i : ++j;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph::Bipartition Graph::bipartition() const {
  Bipartition res;
  res.side.assign(n_, -1);
  std::vector<Vertex> parent(n_, -1);
  for (Vertex s = 0; s < n_; ++s) {
    if (res.side[s] != -1) continue;
    res.side[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : adj_[u]) {
        if (res.side[w] == -1) {
          res.side[w] = 1 - res.side[u];
          parent[w] = u;
          q.push(w);
        } else if (res.side[w] == res.side[u]) {
          // Odd cycle: paths u->root and w->root plus edge uw.
          std::vector<Vertex> pu{u}, pw{w};
          while (pu.back() != pw.back()) {
            // Equal-depth vertices in a BFS tree: same color implies same
            // parity, so walk both up until they meet.
            auto depth = [&](Vertex x) {
              int d = 0;
              for (Vertex y = x; parent[y] != -1; y = parent[y]) ++d;
              return d;
            };
            if (depth(pu.back()) >= depth(pw.back()))
              pu.push_back(parent[pu.back()]);
            else
              pw.push_back(parent[pw.back()]);
          }
          std::vector<Vertex> cycle(pu.begin(), pu.end());
          for (auto it = pw.rbegin() + 1; it != pw.rend(); ++it) cycle.push_back(*it);
          res.bipartite = false;
          res.odd_cycle = cycle;
          res.side.clear();
          return res;
        }
      }
    }
  }
  res.bipartite = true;
  return res;
}

Graph::Degeneracy Graph::degeneracy() const {
  Degeneracy res;
  std::vector<int> deg(n_);
  std::vector<bool> removed(n_, false);
  for (Vertex v = 0; v < n_; ++v) deg[v] = degree(v);
  for (int step = 0; step < n_; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n_; ++v)
      if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
    res.value = std::max(res.value, deg[best]);
    res.order.push_back(best);
    removed[best] = true;
    for (Vertex w : adj_[best])
      if (!removed[w]) --deg[w];
  }
  return res;
}

Graph Graph::remove_vertex(Vertex v) const {
  std::vector<Vertex> keep;
  keep.reserve(n_ - 1);
  for (Vertex u = 0; u < n_; ++u)
    if (u != v) keep.push_back(u);
  return induced(keep);
}

Graph Graph::induced(const std::vector<Vertex>& keep) const {
  std::vector<int> idx(n_, -1);
  for (size_t i = 0; i < keep.size(); ++i) idx[keep[i]] = static_cast<int>(i);
  std::vector<std::pair<Vertex, Vertex>> es;
  for (auto [u, v] : edges_)
    if (idx[u] != -1 && idx[v] != -1) es.emplace_back(idx[u], idx[v]);
  return from_edges(static_cast<int>(keep.size()), es);
}

Graph Graph::relabeled(const std::vector<Vertex>& perm) const {
  std::vector<std::pair<Vertex, Vertex>> es;
  es.reserve(edges_.size());
  for (auto [u, v] : edges_) es.emplace_back(perm[u], perm[v]);
  return from_edges(n_, es);
}

namespace {

int component_count_without(const Graph& g, const std::vector<bool>& removed) {
  int n = g.vertex_count();
  std::vector<int> seen(n, 0);
  int comps = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (removed[s] || seen[s]) continue;
    ++comps;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u))
        if (!removed[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return comps;
}

}  // namespace

StarCutsetSearch find_star_cutset(const Graph& g) {
  StarCutsetSearch res;
  if (!g.connected() || g.vertex_count() <= 1) {
    res.status = StarCutsetSearch::Status::not_applicable;
    return res;
  }
  int n = g.vertex_count();
  std::vector<bool> removed(n, false);
  for (Vertex x = 0; x < n; ++x) {
    const auto& nb = g.neighbors(x);
    int d = static_cast<int>(nb.size());
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      std::fill(removed.begin(), removed.end(), false);
      removed[x] = true;
      int size = 1;
      for (int i = 0; i < d; ++i)
        if (mask & (1u << i)) {
          removed[nb[i]] = true;
          ++size;
        }
      if (size >= n - 1) continue;  // at most one vertex left, cannot separate
      if (component_count_without(g, removed) >= 2) {
        StarCutset cs;
        cs.center = x;
        cs.set.push_back(x);
        for (int i = 0; i < d; ++i)
          if (mask & (1u << i)) cs.set.push_back(nb[i]);
        std::sort(cs.set.begin(), cs.set.end());
        res.status = StarCutsetSearch::Status::found;
        res.cutset = std::move(cs);
        return res;
      }
    }
  }
  res.status = StarCutsetSearch::Status::none;
  return res;
}

std::vector<std::pair<Vertex, Vertex>> duplicate_neighborhoods(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  int n = g.vertex_count();
  for (Vertex w = 0; w < n; ++w)
    for (Vertex v = w + 1; v < n; ++v)
      if (g.neighbors(v) == g.neighbors(w)) out.emplace_back(v, w);
  return out;
}

std::vector<Vertex> isolated_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) out.push_back(v);
  return out;
}

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return std::nullopt;
  int n = a.vertex_count();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  // Degree-sequence pre-check keeps the factorial loop tolerable.
  auto degseq = [](const Graph& g) {
    std::vector<int> d;
    for (Vertex v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degseq(a) != degseq(b)) return std::nullopt;
  do {
    bool ok = true;
    for (auto [u, v] : a.edges())
      if (!b.adjacent(perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  int n, m;
  if (!(in >> n >> m)) throw parse_error("edge list: expected header \"n m\"");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v)) throw parse_error("edge list: expected edge line");
    edges.emplace_back(u, v);
  }
  std::string rest;
  if (in >> rest) throw parse_error("edge list: trailing content");
  try {
    return Graph::from_edges(n, edges);
  } catch (const precondition_error& e) {
    throw parse_error(std::string("edge list: ") + e.what());
  }
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

Graph parse_graph6(const std::string& line) {
  size_t pos = 0;
  if (line.compare(0, 2, ">>") == 0) {
    pos = line.find("<<");
    if (pos == std::string::npos) throw parse_error("graph6: bad header");
    pos += 2;
  }
  auto next = [&]() -> int {
    if (pos >= line.size()) throw parse_error("graph6: truncated");
    int c = static_cast<unsigned char>(line[pos++]);
    if (c < 63 || c > 126) throw parse_error("graph6: invalid character");
    return c - 63;
  };
  long n;
  int c = next();
  if (c < 63) {
    n = c;
  } else {
    int c1 = next();
    if (c1 < 63) {
      n = (static_cast<long>(c1) << 12) | (next() << 6) | next();
    } else {
      n = 0;
      for (int i = 0; i < 6; ++i) n = (n << 6) | next();
    }
  }
  if (n > 1000) throw parse_error("graph6: graph too large");
  std::vector<std::pair<Vertex, Vertex>> edges;
  int bits = 0, cur = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (bits == 0) {
        cur = next();
        bits = 6;
      }
      --bits;
      if (cur & (1 << bits)) edges.emplace_back(i, j);
    }
  return Graph::from_edges(static_cast<int>(n), edges);
}

}  // namespace overlap
