#include "overlap/exact.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "overlap/constructions.hpp"
#include "overlap/error.hpp"

namespace overlap {

namespace {

using Mask = std::uint32_t;

bool masks_overlap(Mask a, Mask b) {
  return (a & b) && (a & ~b) && (b & ~a);
}

struct SubtreeOutcome {
  bool found = false;
  std::uint64_t nodes_until_found = 0;  // placements up to and including the hit
  std::uint64_t nodes_total = 0;        // capped at the given limit + 1
  std::vector<Mask> assignment;
};

// Fixed-t search split at the first vertex's candidate sets. Per-subtree
// node counts are deterministic, so parallel and sequential runs fold to the
// same value, witness, and budget status.
class LevelSearch {
 public:
  LevelSearch(const Graph& g, const std::vector<Vertex>& order, int t, bool pure,
              bool symmetry, std::uint64_t limit)
      : n_(g.vertex_count()), t_(t), pure_(pure), symmetry_(symmetry), limit_(limit) {
    adj_.assign(n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (i != j && g.adjacent(order[i], order[j])) adj_[i] |= Mask(1) << j;
    candidates_by_max_.assign(t_ + 1, {});
  }

  // Nonempty subsets of [t] whose new labels, if any, extend max_used as a
  // consecutive run (canonical label introduction). Ascending by
  // (cardinality, value).
  const std::vector<Mask>& candidates(int max_used) {
    int key = symmetry_ ? max_used : t_;
    auto& list = candidates_by_max_[key];
    if (!list.empty()) return list;
    for (int run = 0; run <= t_ - key; ++run) {
      Mask run_mask = (run ? (Mask(1) << run) - 1 : 0) << key;
      Mask low = key ? (Mask(1) << key) - 1 : 0;
      Mask sub = 0;
      while (true) {
        if (Mask m = sub | run_mask; m != 0) list.push_back(m);
        if (sub == low) break;
        sub = (sub - low) & low;  // submasks of low, ascending
      }
    }
    std::sort(list.begin(), list.end(), [](Mask a, Mask b) {
      int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    return list;
  }

  SubtreeOutcome explore_first(Mask first) {
    SubtreeOutcome out;
    assigned_.assign(n_, 0);
    nodes_ = 0;
    aborted_ = false;
    assigned_[0] = first;
    count_node();
    if (dfs(1, 32 - std::countl_zero(first))) {
      out.found = true;
      out.nodes_until_found = nodes_;
      out.assignment = assigned_;
    }
    out.nodes_total = nodes_;
    return out;
  }

 private:
  void count_node() {
    if (++nodes_ > limit_) aborted_ = true;
  }

  bool feasible(int pos, Mask m) const {
    for (int j = 0; j < pos; ++j) {
      Mask a = assigned_[j];
      if ((adj_[pos] >> j) & 1) {
        if (!masks_overlap(m, a)) return false;
      } else if (pure_) {
        if (m & a) return false;
      } else {
        if (masks_overlap(m, a)) return false;
      }
    }
    return true;
  }

  bool dfs(int pos, int max_used) {
    if (aborted_) return false;
    if (pos == n_) return true;
    for (Mask m : candidates(max_used)) {
      if (!feasible(pos, m)) continue;
      assigned_[pos] = m;
      count_node();
      if (dfs(pos + 1, std::max(max_used, 32 - std::countl_zero(m)))) return true;
      if (aborted_) return false;
    }
    return false;
  }

  int n_, t_;
  bool pure_, symmetry_;
  std::uint64_t limit_, nodes_ = 0;
  bool aborted_ = false;
  std::vector<Mask> adj_;
  std::vector<Mask> assigned_;
  std::vector<std::vector<Mask>> candidates_by_max_;
};

// High-degree vertices are placed first: reverse degeneracy order.
std::vector<Vertex> search_order(const Graph& g) {
  auto deg = g.degeneracy();
  return {deg.order.rbegin(), deg.order.rend()};
}

OverlapRep assignment_to_rep(const std::vector<Mask>& assignment,
                             const std::vector<Vertex>& order, int t) {
  std::vector<LabelSet> sets(assignment.size());
  for (size_t i = 0; i < assignment.size(); ++i) {
    LabelSet s;
    for (int l = 0; l < t; ++l)
      if (assignment[i] & (Mask(1) << l)) s.push_back(l + 1);
    sets[order[i]] = std::move(s);
  }
  return OverlapRep(std::move(sets));
}

ExactResult exact_search(const Graph& g, bool pure, const SearchConfig& cfg) {
  int n = g.vertex_count();
  if (n == 0) throw precondition_error("exact search: empty graph");
  if (cfg.t_max > 30) throw precondition_error("exact search: t_max too large");
  int trivial = g.edge_count() > 0 ? 3 : 1;
  int t_min = std::max(cfg.t_min, trivial);

  ExactResult res;
  auto order = search_order(g);
  std::uint64_t total_nodes = 0;

  for (int t = t_min; t <= cfg.t_max; ++t) {
    LevelSearch lister(g, order, t, pure, cfg.symmetry_breaking, 0);
    const std::vector<Mask> first_candidates = lister.candidates(0);
    std::vector<SubtreeOutcome> outcomes(first_candidates.size());
    size_t ran = first_candidates.size();

    unsigned workers = cfg.parallel
        ? std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                             static_cast<unsigned>(first_candidates.size()))
        : 1;
    if (workers <= 1) {
      std::uint64_t used = 0;
      for (size_t i = 0; i < first_candidates.size(); ++i) {
        LevelSearch s(g, order, t, pure, cfg.symmetry_breaking, cfg.node_limit - used);
        outcomes[i] = s.explore_first(first_candidates[i]);
        used += outcomes[i].nodes_total;
        if (outcomes[i].found || used > cfg.node_limit) {
          ran = i + 1;
          break;
        }
      }
    } else {
      std::atomic<size_t> next{0};
      std::atomic<long> best_found{static_cast<long>(first_candidates.size())};
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
          while (true) {
            size_t i = next.fetch_add(1);
            if (i >= first_candidates.size()) return;
            if (static_cast<long>(i) > best_found.load()) continue;
            LevelSearch s(g, order, t, pure, cfg.symmetry_breaking, cfg.node_limit);
            outcomes[i] = s.explore_first(first_candidates[i]);
            if (outcomes[i].found) {
              long cur = best_found.load();
              while (static_cast<long>(i) < cur &&
                     !best_found.compare_exchange_weak(cur, static_cast<long>(i))) {
              }
            }
          }
        });
      for (auto& th : pool) th.join();
      long bf = best_found.load();
      ran = bf < static_cast<long>(first_candidates.size())
                ? static_cast<size_t>(bf) + 1
                : first_candidates.size();
    }

    // Fold subtree outcomes in candidate order; matches a sequential scan.
    std::uint64_t level_nodes = 0;
    bool found = false, exceeded = false;
    std::vector<Mask> assignment;
    for (size_t i = 0; i < ran; ++i) {
      const auto& o = outcomes[i];
      if (o.found) {
        if (total_nodes + level_nodes + o.nodes_until_found > cfg.node_limit) {
          exceeded = true;
        } else {
          level_nodes += o.nodes_until_found;
          assignment = o.assignment;
          found = true;
        }
        break;
      }
      level_nodes += o.nodes_total;
      if (total_nodes + level_nodes > cfg.node_limit) {
        exceeded = true;
        break;
      }
    }
    total_nodes += level_nodes;
    res.nodes = total_nodes;
    if (exceeded) {
      res.status = ExactResult::Status::budget_exceeded;
      return res;
    }
    if (found) {
      res.status = ExactResult::Status::exact;
      res.value = t;
      res.witness = assignment_to_rep(assignment, order, t);
      if (res.witness.size() != t)
        throw internal_error("exact search: witness size mismatch");
      return res;
    }
  }
  res.status = ExactResult::Status::budget_exceeded;
  return res;
}

std::optional<int> naive_search(const Graph& g, bool pure, int t_cap) {
  int n = g.vertex_count();
  if (n == 0) throw precondition_error("naive search: empty graph");
  int trivial = g.edge_count() > 0 ? 3 : 1;
  for (int t = trivial; t <= t_cap; ++t) {
    Mask full = (Mask(1) << t) - 1;
    std::vector<Mask> a(n, 0);
    auto prefix_ok = [&](int k) {
      for (int j = 0; j < k; ++j) {
        bool adj = g.adjacent(j, k);
        bool over = masks_overlap(a[j], a[k]);
        if (adj && !over) return false;
        if (!adj) {
          if (pure ? (a[j] & a[k]) != 0 : over) return false;
        }
      }
      return true;
    };
    int pos = 0;
    a[0] = 1;
    while (true) {
      if (prefix_ok(pos)) {
        ++pos;
        if (pos == n) return t;
        a[pos] = 1;
        continue;
      }
      while (pos >= 0 && a[pos] == full) --pos;
      if (pos < 0) break;
      ++a[pos];
    }
  }
  return std::nullopt;
}

}  // namespace

ExactResult exact_phi(const Graph& g, const SearchConfig& cfg) {
  return exact_search(g, /*pure=*/false, cfg);
}

ExactResult exact_pol(const Graph& g, const SearchConfig& cfg) {
  return exact_search(g, /*pure=*/true, cfg);
}

ExactResult exact_phi_reduced(const Graph& g, const SearchConfig& cfg) {
  Reduction red = reduce(g);
  ExactResult res = exact_phi(red.reduced, cfg);
  if (res.exact()) res.witness = unreduce(res.witness, red.trace);
  return res;
}

std::optional<int> naive_exact_phi(const Graph& g, int t_cap) {
  return naive_search(g, false, t_cap);
}

std::optional<int> naive_exact_pol(const Graph& g, int t_cap) {
  return naive_search(g, true, t_cap);
}

}  // namespace overlap
