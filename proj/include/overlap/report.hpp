#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "overlap/constructions.hpp"

namespace overlap {

struct BatchOptions {
  int exact_threshold = 6;  // run exact when the reduced graph is this small
  int jobs = 1;
  std::uint64_t node_budget = 400'000'000;
};

struct BatchRow {
  std::string name;
  bool failed = false;
  std::string error;
  int n = 0, m = 0;
  int lower = 0;
  std::string lower_rule;
  int upper = 0;
  std::string upper_rule;
  bool pinned = false;
  int exact = -1;  // -1 when not computed
};

// One row per input; inputs are (name, file path) pairs. Files ending in
// ".rot" are rotation systems (their underlying graph is certified and the
// planar pipeline contributes an upper bound); everything else parses as an
// edge list. Rows come back in input order; jobs > 1 splits the work.
std::vector<BatchRow> batch_report(
    const std::vector<std::pair<std::string, std::string>>& inputs,
    const BatchOptions& opts);

// Fixed columns: name,n,m,lower,lower_rule,upper,upper_rule,pinned,exact.
std::string format_csv(const std::vector<BatchRow>& rows);

}  // namespace overlap
