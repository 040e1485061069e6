#include "overlap/tree.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "overlap/error.hpp"

namespace overlap {

namespace {

// BFS distances with deterministic parents (neighbors scanned ascending).
std::pair<std::vector<int>, std::vector<Vertex>> bfs(const Graph& g, Vertex s) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<Vertex> parent(g.vertex_count(), -1);
  std::queue<Vertex> q;
  dist[s] = 0;
  q.push(s);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u))
      if (dist[w] == -1) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        q.push(w);
      }
  }
  return {dist, parent};
}

Vertex farthest(const std::vector<int>& dist) {
  Vertex best = 0;
  for (Vertex v = 1; v < static_cast<int>(dist.size()); ++v)
    if (dist[v] > dist[best]) best = v;
  return best;
}

}  // namespace

SkeletonResult skeleton(const Graph& t) {
  if (!t.is_tree()) throw precondition_error("skeleton: input is not a tree");
  int n = t.vertex_count();
  if (n < 3) throw precondition_error("skeleton: tree must have at least 3 vertices");

  std::vector<bool> in_skel(n, false);
  std::vector<Vertex> internal;  // the derived tree T'
  for (Vertex v = 0; v < n; ++v)
    if (t.degree(v) >= 2) {
      internal.push_back(v);
      in_skel[v] = true;
    }

  if (internal.size() == 1) {
    // Star or P_3: restore the two lowest-id leaves.
    Vertex c = internal[0];
    in_skel[t.neighbors(c)[0]] = true;
    in_skel[t.neighbors(c)[1]] = true;
  } else {
    std::vector<bool> is_internal(n, false);
    for (Vertex v : internal) is_internal[v] = true;
    for (Vertex u : internal) {
      int deg_in_derived = 0;
      for (Vertex w : t.neighbors(u))
        if (is_internal[w]) ++deg_in_derived;
      if (deg_in_derived != 1) continue;
      for (Vertex w : t.neighbors(u))  // lowest-id leaf neighbor
        if (!is_internal[w]) {
          in_skel[w] = true;
          break;
        }
    }
  }

  SkeletonResult res;
  for (Vertex v = 0; v < n; ++v)
    if (in_skel[v]) res.vertices.push_back(v);
  res.size = static_cast<int>(res.vertices.size());

  // Spine decomposition of the skeleton. Work on the induced subtree but
  // report original vertex ids.
  Graph skel = t.induced(res.vertices);
  auto orig = [&](Vertex v) { return res.vertices[v]; };

  auto [d0, p0] = bfs(skel, 0);
  Vertex a = farthest(d0);
  auto [d1, p1] = bfs(skel, a);
  Vertex b = farthest(d1);
  std::vector<Vertex> path;
  for (Vertex v = b; v != -1; v = p1[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());  // runs a..b

  int sn = skel.vertex_count();
  std::vector<bool> visited(sn, false);
  std::vector<std::pair<int, int>> fresh_pos(sn, {-1, -1});  // (spine, index)
  std::vector<Vertex> order;  // spine vertices in creation order (local ids)

  res.spines.emplace_back();
  for (size_t i = 0; i < path.size(); ++i) {
    res.spines[0].push_back(orig(path[i]));
    visited[path[i]] = true;
    fresh_pos[path[i]] = {0, static_cast<int>(i)};
    order.push_back(path[i]);
  }

  for (size_t scan = 0; scan < order.size(); ++scan) {
    Vertex u = order[scan];
    for (Vertex w : skel.neighbors(u)) {
      if (visited[w]) continue;
      // Peel a path from u through w down to a skeleton leaf.
      std::vector<Vertex> spine{u, w};
      visited[w] = true;
      Vertex prev = u, cur = w;
      while (true) {
        Vertex next = -1;
        for (Vertex x : skel.neighbors(cur))
          if (x != prev && !visited[x]) {
            next = x;
            break;
          }
        if (next == -1) break;
        spine.push_back(next);
        visited[next] = true;
        prev = cur;
        cur = next;
      }
      int s = static_cast<int>(res.spines.size());
      res.spines.emplace_back();
      for (size_t i = 0; i < spine.size(); ++i) {
        res.spines[s].push_back(orig(spine[i]));
        if (i > 0) {
          fresh_pos[spine[i]] = {s, static_cast<int>(i)};
          order.push_back(spine[i]);
        }
      }
    }
  }

  // Non-skeleton leaves attach to derived-tree vertices, which are internal
  // on their fresh spine.
  std::vector<int> local(n, -1);
  for (int i = 0; i < sn; ++i) local[res.vertices[i]] = i;
  for (Vertex x = 0; x < n; ++x) {
    if (in_skel[x]) continue;
    Vertex u = t.neighbors(x)[0];
    auto [s, idx] = fresh_pos[local[u]];
    res.legs.push_back({x, s, idx});
  }
  return res;
}

OverlapRep caterpillar_rep(const Graph& t) {
  if (!t.is_tree()) throw precondition_error("caterpillar_rep: input is not a tree");
  int n = t.vertex_count();
  auto [d0, p0] = bfs(t, 0);
  Vertex a = farthest(d0);
  auto [d1, p1] = bfs(t, a);
  Vertex b = farthest(d1);
  std::vector<Vertex> path;
  for (Vertex v = b; v != -1; v = p1[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  int l = static_cast<int>(path.size());
  if (l < 3) throw precondition_error("caterpillar_rep: longest path must have >= 3 vertices");

  std::vector<int> pos(n, -1);
  for (int i = 0; i < l; ++i) pos[path[i]] = i + 1;  // 1-based spine index

  std::vector<LabelSet> sets(n);
  for (int i = 1; i <= l - 1; ++i) sets[path[i - 1]] = {i, i + 1};
  for (Vertex x = 0; x < n; ++x) {
    if (pos[x] != -1 && pos[x] <= l - 1) continue;
    if (t.degree(x) != 1) throw precondition_error("caterpillar_rep: not a caterpillar");
    Vertex u = t.neighbors(x)[0];
    int i = pos[u];
    if (i == -1 || i < 2 || i > l - 1)
      throw precondition_error("caterpillar_rep: not a caterpillar");
    LabelSet prefix(i);
    for (int k = 0; k < i; ++k) prefix[k] = k + 1;
    sets[x] = std::move(prefix);
  }
  return OverlapRep(std::move(sets));
}

CaterpillarExtension extend_caterpillar(const OverlapRep& rep_h, const Graph& h,
                                        const CaterpillarStep& step, int a) {
  if (rep_h.vertex_count() != h.vertex_count())
    throw precondition_error("extend_caterpillar: representation does not match H");
  Vertex v = step.attachment;
  if (v < 0 || v >= h.vertex_count())
    throw precondition_error("extend_caterpillar: attachment out of range");
  if (h.degree(v) == 0)
    throw precondition_error("extend_caterpillar: attachment isolated in H");
  if (!is_a_minimal(rep_h, v, a))
    throw precondition_error("extend_caterpillar: attachment is not a-minimal");
  int l = step.spine_length;
  if (l < 1) throw precondition_error("extend_caterpillar: spine length must be >= 1");
  for (auto [p, c] : step.legs)
    if (p < 1 || p > l - 1 || c < 0)
      throw precondition_error("extend_caterpillar: legs attach to internal spine positions");

  int m = h.vertex_count();
  int t = rep_h.size();
  std::vector<std::pair<Vertex, Vertex>> edges = h.edges();
  std::vector<Vertex> spine_vertices(l);
  for (int i = 1; i <= l; ++i) {
    spine_vertices[i - 1] = m + i - 1;
    edges.emplace_back(i == 1 ? v : m + i - 2, m + i - 1);
  }
  int next_id = m + l;

  std::vector<LabelSet> sets(rep_h.sets());
  // Every set of H containing a gains all of B; the attachment keeps its set.
  for (Vertex u = 0; u < m; ++u) {
    if (u == v) continue;
    if (std::binary_search(sets[u].begin(), sets[u].end(), a))
      for (int i = 1; i <= l; ++i) sets[u].push_back(t + i);
  }
  auto b = [&](int i) { return i == 0 ? a : t + i; };
  for (int i = 1; i <= l; ++i) sets.push_back({b(i - 1), b(i)});
  std::vector<std::pair<int, int>> legs = step.legs;
  std::sort(legs.begin(), legs.end());
  for (auto [p, c] : legs)
    for (int k = 0; k < c; ++k) {
      edges.emplace_back(m + p - 1, next_id);
      LabelSet suffix;
      for (int i = p; i <= l; ++i) suffix.push_back(t + i);
      sets.push_back(std::move(suffix));
      ++next_id;
    }

  CaterpillarExtension ext{Graph::from_edges(next_id, edges), OverlapRep(), {}, {}};
  auto [canon, map] = canonicalize_sets(sets);
  ext.rep = OverlapRep(std::move(canon));
  ext.spine_vertices = spine_vertices;
  for (int i = 1; i <= l; ++i) ext.spine_labels.push_back(map[t + i]);
  return ext;
}

namespace {

struct SpineInfo {
  int start = 0, len = 0;      // labels start..start+len-1
  int parent_label = 0;        // b_0 (0 for the initial spine)
};

// Shared state of the block-sharing builder.
struct TreeBuilder {
  const Graph& t;
  const SkeletonResult& skel;
  int n;
  std::vector<SpineInfo> spines;
  int total_labels = 0;

  // Per-vertex base descriptor.
  enum class Kind { pair, prefix, suffix };
  struct Base {
    Kind kind;
    int x = 0, y = 0;   // pair labels
    int spine = 0, pos = 0;  // prefix/suffix parameters
  };
  std::vector<Base> base;
  std::vector<int> witness;  // minimal-witness label per vertex, 0 if none

  // Events: one per spine s >= 1. Parent = event of the spine owning the
  // attachment witness (or -1 when that spine is 0).
  std::vector<int> event_parent;
  std::vector<std::vector<Vertex>> event_explicit;
  std::map<int, std::vector<Vertex>> extra_holders;  // cross-block pair sets

  explicit TreeBuilder(const Graph& g, const SkeletonResult& sk)
      : t(g), skel(sk), n(g.vertex_count()), base(n), witness(n, 0),
        event_parent(sk.spines.size(), -1), event_explicit(sk.spines.size()) {}

  std::vector<int> label_spine;  // which spine owns each label
  int spine_of_label(int l) const { return label_spine[l]; }

  void build_spine0() {
    const auto& sp = skel.spines[0];
    int l = static_cast<int>(sp.size());
    spines.push_back({1, l, 0});
    total_labels = l;
    label_spine.assign(l + 1, 0);
    for (int i = 1; i <= l - 1; ++i) {
      base[sp[i - 1]] = {Kind::pair, i, i + 1, 0, 0};
      witness[sp[i - 1]] = i;
    }
    base[sp[l - 1]] = {Kind::prefix, 0, 0, 0, l - 1};
  }

  void add_spine(int s) {
    const auto& sp = skel.spines[s];
    Vertex attach = sp[0];
    int a = witness[attach];
    if (a == 0) throw internal_error("tree builder: attachment without witness label");
    int l = static_cast<int>(sp.size()) - 1;
    int start = total_labels + 1;
    spines.push_back({start, l, a});
    total_labels += l;
    label_spine.resize(total_labels + 1);
    for (int i = start; i < start + l; ++i) label_spine[i] = s;

    for (int i = 1; i <= l; ++i) {
      int lo = i == 1 ? a : start + i - 2;
      base[sp[i]] = {Kind::pair, lo, start + i - 1, 0, 0};
      witness[sp[i]] = start + i - 1;
    }

    // Gain set of this event: current holders of a.
    int r = spine_of_label(a);
    const SpineInfo& rs = spines[r];
    int j = a - rs.start + 1;  // index of a within its block
    auto& holders = event_explicit[s];
    const auto& rsp = skel.spines[r];
    if (r == 0) {
      if (j >= 2) holders.push_back(rsp[j - 2]);          // v_{j-1}
      holders.push_back(rsp[rs.len - 1]);                 // v_l, the prefix end
    } else {
      if (j + 1 <= rs.len) holders.push_back(rsp[j + 1]);  // w_{j+1}
    }
    for (const auto& leg : skel.legs) {
      if (leg.spine != r) continue;
      if (r == 0 ? (leg.position + 1 >= j) : (leg.position <= j))
        holders.push_back(leg.leaf);
    }
    if (auto it = extra_holders.find(a); it != extra_holders.end())
      for (Vertex w : it->second) holders.push_back(w);
    event_parent[s] = r == 0 ? -1 : r;

    // The new w_1 holds a cross-block pair {a, b_1}.
    extra_holders[a].push_back(sp[1]);
  }

  void add_legs() {
    for (const auto& leg : skel.legs) {
      if (leg.spine == 0)
        base[leg.leaf] = {Kind::prefix, 0, 0, 0, leg.position + 1};
      else
        base[leg.leaf] = {Kind::suffix, 0, 0, leg.spine, leg.position};
    }
  }

  std::vector<LabelSet> materialize() {
    int k = static_cast<int>(skel.spines.size());
    std::vector<std::vector<int>> children(k);
    for (int s = 1; s < k; ++s)
      if (event_parent[s] != -1) children[event_parent[s]].push_back(s);
    // Euler intervals over the event forest.
    std::vector<int> tin(k, 0), tout(k, 0);
    int timer = 0;
    for (int s = 1; s < k; ++s) {
      if (event_parent[s] != -1) continue;
      std::vector<std::pair<int, bool>> stack{{s, false}};
      while (!stack.empty()) {
        auto [e, done] = stack.back();
        stack.pop_back();
        if (done) {
          tout[e] = timer;
          continue;
        }
        tin[e] = ++timer;
        stack.emplace_back(e, true);
        for (auto it = children[e].rbegin(); it != children[e].rend(); ++it)
          stack.emplace_back(*it, false);
      }
    }

    std::vector<std::vector<int>> vertex_events(n);
    for (int s = 1; s < k; ++s)
      for (Vertex v : event_explicit[s]) vertex_events[v].push_back(s);

    std::vector<LabelSet> sets(n);
    for (Vertex v = 0; v < n; ++v) {
      LabelSet out;
      const Base& bs = base[v];
      switch (bs.kind) {
        case Kind::pair:
          out = {bs.x, bs.y};
          std::sort(out.begin(), out.end());
          break;
        case Kind::prefix:
          for (int i = 1; i <= bs.pos; ++i) out.push_back(i);
          break;
        case Kind::suffix: {
          const SpineInfo& si = spines[bs.spine];
          for (int i = bs.pos; i <= si.len; ++i) out.push_back(si.start + i - 1);
          break;
        }
      }
      auto& evs = vertex_events[v];
      std::sort(evs.begin(), evs.end(), [&](int x, int y) { return tin[x] < tin[y]; });
      int last_out = -1;
      for (int e : evs) {
        if (tin[e] <= last_out) continue;  // nested in an already-taken event
        last_out = tout[e];
        std::vector<int> stack{e};
        while (!stack.empty()) {
          int cur = stack.back();
          stack.pop_back();
          const SpineInfo& si = spines[cur];
          for (int i = 0; i < si.len; ++i) out.push_back(si.start + i);
          for (int c : children[cur]) stack.push_back(c);
        }
      }
      std::sort(out.begin(), out.end());
      sets[v] = std::move(out);
    }
    return sets;
  }
};

}  // namespace

OverlapRep tree_overlap_rep(const Graph& t) {
  if (!t.is_tree()) throw precondition_error("tree_overlap_rep: input is not a tree");
  int n = t.vertex_count();
  if (n == 1) return OverlapRep(std::vector<LabelSet>{{1}});
  if (n == 2) return OverlapRep(std::vector<LabelSet>{{1, 2}, {2, 3}});
  SkeletonResult sk = skeleton(t);
  TreeBuilder builder(t, sk);
  builder.build_spine0();
  for (int s = 1; s < static_cast<int>(sk.spines.size()); ++s) builder.add_spine(s);
  builder.add_legs();
  return OverlapRep(builder.materialize());
}

OverlapRep tree_overlap_rep_naive(const Graph& t) {
  if (!t.is_tree()) throw precondition_error("tree_overlap_rep_naive: input is not a tree");
  int n = t.vertex_count();
  if (n == 1) return OverlapRep(std::vector<LabelSet>{{1}});
  if (n == 2) return OverlapRep(std::vector<LabelSet>{{1, 2}, {2, 3}});
  SkeletonResult sk = skeleton(t);

  std::vector<std::set<int>> sets(n);
  std::vector<int> witness(n, 0);
  int total = 0;

  const auto& sp0 = sk.spines[0];
  int l0 = static_cast<int>(sp0.size());
  for (int i = 1; i <= l0 - 1; ++i) {
    sets[sp0[i - 1]] = {i, i + 1};
    witness[sp0[i - 1]] = i;
  }
  for (int i = 1; i <= l0 - 1; ++i) sets[sp0[l0 - 1]].insert(i);
  total = l0;

  // Legs are assigned when their spine is; remember them per (spine, pos).
  std::vector<std::vector<std::pair<int, Vertex>>> legs_at(sk.spines.size());
  for (const auto& leg : sk.legs) legs_at[leg.spine].emplace_back(leg.position, leg.leaf);
  for (auto [pos, leaf] : legs_at[0])
    for (int i = 1; i <= pos + 1; ++i) sets[leaf].insert(i);

  for (int s = 1; s < static_cast<int>(sk.spines.size()); ++s) {
    const auto& sp = sk.spines[s];
    Vertex attach = sp[0];
    int a = witness[attach];
    int l = static_cast<int>(sp.size()) - 1;
    int start = total + 1;
    total += l;
    for (Vertex u = 0; u < n; ++u) {
      if (u == attach || sets[u].empty() || !sets[u].count(a)) continue;
      for (int i = 0; i < l; ++i) sets[u].insert(start + i);
    }
    for (int i = 1; i <= l; ++i) {
      sets[sp[i]] = {i == 1 ? a : start + i - 2, start + i - 1};
      witness[sp[i]] = start + i - 1;
    }
    for (auto [pos, leaf] : legs_at[s])
      for (int i = pos; i <= l; ++i) sets[leaf].insert(start + i - 1);
  }

  std::vector<LabelSet> out(n);
  for (Vertex v = 0; v < n; ++v) out[v].assign(sets[v].begin(), sets[v].end());
  return OverlapRep(std::move(out));
}

}  // namespace overlap
