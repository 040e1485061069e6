#pragma once

#include <cstdint>
#include <optional>

#include "overlap/graph.hpp"
#include "overlap/rep.hpp"

namespace overlap {

struct SearchConfig {
  int t_min = 0;                          // 0 = seed from the trivial bound
  int t_max = 16;                         // label sets live in machine words
  std::uint64_t node_limit = 400'000'000;
  bool parallel = false;
  bool symmetry_breaking = true;          // canonical label introduction
};

struct ExactResult {
  enum class Status { exact, budget_exceeded };
  Status status = Status::budget_exceeded;
  int value = 0;
  OverlapRep witness;
  std::uint64_t nodes = 0;
  bool exact() const { return status == Status::exact; }
};

// Minimum size of an overlap representation, by iterative deepening over the
// ground-set size with depth-first assignment in reverse degeneracy order.
ExactResult exact_phi(const Graph& g, const SearchConfig& cfg = {});

// Same search with containment (including equality) between distinct
// vertices' sets forbidden.
ExactResult exact_pol(const Graph& g, const SearchConfig& cfg = {});

// Reduce (isolated / duplicate-neighborhood vertices), solve, and replay the
// witness back onto the original graph; the value is invariant.
ExactResult exact_phi_reduced(const Graph& g, const SearchConfig& cfg = {});

// Independent ground-truth enumerators: plain odometer over all assignments
// of nonempty subsets, no symmetry breaking, no pruning beyond feasibility
// of the current prefix. Practical only for n <= 4.
std::optional<int> naive_exact_phi(const Graph& g, int t_cap = 12);
std::optional<int> naive_exact_pol(const Graph& g, int t_cap = 12);

}  // namespace overlap
