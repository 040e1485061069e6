#include "overlap/report.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "overlap/error.hpp"
#include "overlap/exact.hpp"
#include "overlap/planar.hpp"

namespace overlap {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

BatchRow process_one(const std::string& name, const std::string& path,
                     const BatchOptions& opts) {
  BatchRow row;
  row.name = name;
  try {
    Graph g;
    BoundCertificate upper;
    if (ends_with(path, ".rot")) {
      PlaneGraph pg = read_rotation_file(path);
      g = pg.graph();
      upper = best_upper(g);
      BoundCertificate planar = planar_phi_upper(pg);
      if (planar.value < upper.value) upper = planar;
    } else {
      g = read_edge_list_file(path);
      upper = best_upper(g);
    }
    row.n = g.vertex_count();
    row.m = g.edge_count();
    row.upper = upper.value;
    row.upper_rule = upper.rule;
    row.lower = 0;
    for (const auto& c : lower_bound(g))
      if (c.quantity == Quantity::phi && c.value > row.lower) {
        row.lower = c.value;
        row.lower_rule = c.rule;
      }
    row.pinned = row.lower == row.upper;
    Reduction red = reduce(g);
    if (red.reduced.vertex_count() <= opts.exact_threshold) {
      SearchConfig cfg;
      cfg.node_limit = opts.node_budget;
      ExactResult ex = exact_phi_reduced(g, cfg);
      if (ex.exact()) {
        row.exact = ex.value;
        if (ex.value < row.lower || ex.value > row.upper)
          throw internal_error("batch: exact value escapes the certified bounds");
      }
    }
  } catch (const std::exception& e) {
    row.failed = true;
    row.error = e.what();
  }
  return row;
}

}  // namespace

std::vector<BatchRow> batch_report(
    const std::vector<std::pair<std::string, std::string>>& inputs,
    const BatchOptions& opts) {
  std::vector<BatchRow> rows(inputs.size());
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    for (size_t i = 0; i < inputs.size(); ++i)
      rows[i] = process_one(inputs[i].first, inputs[i].second, opts);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w)
      pool.emplace_back([&]() {
        while (true) {
          size_t i = next.fetch_add(1);
          if (i >= inputs.size()) return;
          rows[i] = process_one(inputs[i].first, inputs[i].second, opts);
        }
      });
    for (auto& th : pool) th.join();
  }
  return rows;
}

std::string format_csv(const std::vector<BatchRow>& rows) {
  std::ostringstream out;
  out << "name,n,m,lower,lower_rule,upper,upper_rule,pinned,exact\n";
  for (const auto& r : rows) {
    if (r.failed) {
      std::string msg = r.error;
      std::replace(msg.begin(), msg.end(), ',', ';');
      out << r.name << ",,,,,,,error," << msg << '\n';
      continue;
    }
    out << r.name << ',' << r.n << ',' << r.m << ',' << r.lower << ',' << r.lower_rule
        << ',' << r.upper << ',' << r.upper_rule << ',' << (r.pinned ? "yes" : "no")
        << ',';
    if (r.exact >= 0) out << r.exact;
    out << '\n';
  }
  return out.str();
}

}  // namespace overlap
