#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "overlap/constructions.hpp"
#include "overlap/error.hpp"
#include "overlap/exact.hpp"
#include "overlap/families.hpp"
#include "overlap/planar.hpp"
#include "overlap/report.hpp"
#include "overlap/tree.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitVerify = 3;
constexpr int kExitBudget = 4;
constexpr int kExitPrecondition = 5;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw overlap::parse_error("cannot write " + path);
  out << content;
}

std::uint64_t default_node_budget() {
  if (const char* env = std::getenv("OVERLAP_NODE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return overlap::SearchConfig{}.node_limit;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace overlap;

  CLI::App app{"overlap representations of finite graphs: construction, "
               "verification and certification"};
  app.require_subcommand(1);
  long long seed_unused = 0;
  app.add_option("--seed", seed_unused,
                 "rejected: all computations are deterministic");

  std::string input, graph_file, rep_file, output, cert_file, kind_str = "overlap";
  std::string quantity_str = "phi", family, legs_csv;
  int arg_n = 0, arg_u = -1, arg_v = -1;
  int t_min = 0, t_max = 16, exact_threshold = 6, jobs = 1;
  std::uint64_t budget = default_node_budget();
  bool parallel = false, naive = false, reduce_first = false;
  std::string batch_dir;

  auto* cmd_skeleton = app.add_subcommand("skeleton", "skeleton of a tree");
  cmd_skeleton->add_option("-i,--input", input)->required();
  cmd_skeleton->add_option("-o,--output", output);

  auto* cmd_tree = app.add_subcommand("tree-rep", "optimal tree representation");
  cmd_tree->add_option("-i,--input", input)->required();
  cmd_tree->add_option("-o,--output", output);

  auto* cmd_verify = app.add_subcommand("verify", "verify a representation");
  cmd_verify->add_option("-g,--graph", graph_file)->required();
  cmd_verify->add_option("-r,--rep", rep_file)->required();
  cmd_verify->add_option("-k,--kind", kind_str)
      ->check(CLI::IsMember({"overlap", "pure", "intersection"}));

  auto* cmd_construct = app.add_subcommand("construct", "bound constructions");
  std::string construct_kind;
  cmd_construct->add_option("kind", construct_kind)
      ->required()
      ->check(CLI::IsMember({"edge-bound", "decomp", "planar", "clique", "small"}));
  cmd_construct->add_option("-i,--input", input);
  cmd_construct->add_option("-n,--order", arg_n);
  cmd_construct->add_option("-u,--edge-u", arg_u);
  cmd_construct->add_option("-v,--edge-v", arg_v);
  cmd_construct->add_option("-o,--output", output);
  cmd_construct->add_option("--cert", cert_file);

  auto* cmd_decomp = app.add_subcommand("decompose-planar",
                                        "edges-and-facial-triangles decomposition");
  cmd_decomp->add_option("-i,--input", input)->required();
  cmd_decomp->add_option("-o,--output", output);

  auto* cmd_exact = app.add_subcommand("exact", "exhaustive exact solver");
  cmd_exact->add_option("-i,--input", input)->required();
  cmd_exact->add_option("-q,--quantity", quantity_str)
      ->check(CLI::IsMember({"phi", "pol"}));
  cmd_exact->add_option("--t-min", t_min);
  cmd_exact->add_option("--t-max", t_max);
  cmd_exact->add_option("--budget", budget);
  cmd_exact->add_flag("--parallel", parallel);
  cmd_exact->add_flag("--naive", naive);
  cmd_exact->add_flag("--reduce", reduce_first);
  cmd_exact->add_option("-w,--witness", output);

  auto* cmd_bounds = app.add_subcommand("bounds", "certified bounds for a graph");
  cmd_bounds->add_option("-i,--input", input)->required();
  cmd_bounds->add_option("--exact-threshold", exact_threshold);
  cmd_bounds->add_option("--budget", budget);

  auto* cmd_generate = app.add_subcommand("generate", "extremal family generators");
  cmd_generate->add_option("family", family)
      ->required()
      ->check(CLI::IsMember({"biclique-minus-matching", "quadrangulation", "book",
                             "caterpillar", "spider"}));
  cmd_generate->add_option("-n,--order", arg_n);
  cmd_generate->add_option("--legs", legs_csv);
  cmd_generate->add_option("-o,--output", output);

  auto* cmd_batch = app.add_subcommand("batch", "certify a directory of graphs");
  cmd_batch->add_option("-d,--dir", batch_dir)->required();
  cmd_batch->add_option("-o,--output", output);
  cmd_batch->add_option("--exact-threshold", exact_threshold);
  cmd_batch->add_option("--jobs", jobs);
  cmd_batch->add_option("--budget", budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }
  if (app.count("--seed")) {
    std::cerr << "error: --seed is rejected; every computation is deterministic\n";
    return kExitParse;
  }

  try {
    if (*cmd_skeleton) {
      Graph t = read_edge_list_file(input);
      SkeletonResult sk = skeleton(t);
      std::ostringstream out;
      out << "size " << sk.size << "\nvertices";
      for (Vertex v : sk.vertices) out << ' ' << v;
      out << '\n';
      for (size_t s = 0; s < sk.spines.size(); ++s) {
        out << "spine " << s << ':';
        for (Vertex v : sk.spines[s]) out << ' ' << v;
        out << '\n';
      }
      write_output(output, out.str());
    } else if (*cmd_tree) {
      Graph t = read_edge_list_file(input);
      OverlapRep rep = tree_overlap_rep(t);
      auto check = verify(t, rep, RepKind::overlap);
      if (!check.ok()) throw internal_error("tree representation failed verification");
      write_output(output, format_rep(rep));
    } else if (*cmd_verify) {
      Graph g = read_edge_list_file(graph_file);
      OverlapRep rep = read_rep_file(rep_file);
      RepKind kind = kind_str == "pure" ? RepKind::pure_overlap
                    : kind_str == "intersection" ? RepKind::intersection
                                                 : RepKind::overlap;
      auto res = verify(g, rep, kind);
      if (res.ok()) {
        std::cout << "ok: " << to_string(kind) << " representation of size "
                  << rep.size() << "\n";
      } else {
        for (const auto& v : res.violations) std::cout << v.describe() << "\n";
        return kExitVerify;
      }
    } else if (*cmd_construct) {
      OverlapRep rep;
      BoundCertificate cert;
      if (construct_kind == "edge-bound") {
        Graph g = read_edge_list_file(input);
        auto [u, v] = arg_u >= 0 && arg_v >= 0 ? std::pair<Vertex, Vertex>{arg_u, arg_v}
                                               : default_edge_bound_pair(g);
        rep = edge_bound_rep(g, u, v);
        cert = {Quantity::phi, Direction::upper, rep.size(), "edge-bound", rep, ""};
      } else if (construct_kind == "decomp") {
        Graph g = read_edge_list_file(input);
        rep = decomposition_rep(g, greedy_triangle_decomposition(g));
        cert = {Quantity::pol, Direction::upper, rep.size(), "decomposition", rep, ""};
      } else if (construct_kind == "planar") {
        PlaneGraph pg = read_rotation_file(input);
        cert = planar_phi_upper(pg);
        rep = *cert.witness;
      } else if (construct_kind == "clique") {
        if (arg_n < 1) throw precondition_error("construct clique: -n required");
        rep = clique_rep(arg_n);
        cert = {Quantity::pol, Direction::upper, rep.size(), "clique-antichain", rep, ""};
      } else {
        Graph g = read_edge_list_file(input);
        rep = small_graph_rep(g);
        cert = {Quantity::phi, Direction::upper, rep.size(), "small-graph", rep, ""};
      }
      write_output(output, format_rep(rep));
      if (!cert_file.empty()) write_output(cert_file, format_certificate(cert));
    } else if (*cmd_decomp) {
      PlaneGraph pg = read_rotation_file(input);
      PlanarDecomposition d = plan_decompose(pg);
      std::ostringstream out;
      size_t tri = 0;
      for (const auto& part : d.decomposition.parts) {
        if (part.size() == 3) {
          out << "triangle " << part[0] << ' ' << part[1] << ' ' << part[2] << " face "
              << d.triangles[tri++].face_index << '\n';
        } else {
          out << "edge " << part[0] << ' ' << part[1] << '\n';
        }
      }
      out << "parts " << d.decomposition.parts.size() << '\n';
      write_output(output, out.str());
    } else if (*cmd_exact) {
      Graph g = read_edge_list_file(input);
      if (naive) {
        auto value = quantity_str == "phi" ? naive_exact_phi(g, t_max)
                                           : naive_exact_pol(g, t_max);
        if (!value) return kExitBudget;
        std::cout << "value " << *value << " status exact\n";
        return 0;
      }
      SearchConfig cfg;
      cfg.t_min = t_min;
      cfg.t_max = t_max;
      cfg.node_limit = budget;
      cfg.parallel = parallel;
      ExactResult res;
      if (quantity_str == "phi")
        res = reduce_first ? exact_phi_reduced(g, cfg) : exact_phi(g, cfg);
      else
        res = exact_pol(g, cfg);
      if (!res.exact()) {
        std::cout << "status budget-exceeded nodes " << res.nodes << "\n";
        return kExitBudget;
      }
      std::cout << "value " << res.value << " nodes " << res.nodes
                << " status exact\n";
      if (!output.empty()) {
        auto check = verify(g, res.witness, quantity_str == "phi"
                                                ? RepKind::overlap
                                                : RepKind::pure_overlap);
        if (!check.ok()) throw internal_error("exact witness failed verification");
        write_output(output, format_rep(res.witness));
      }
    } else if (*cmd_bounds) {
      Graph g = read_edge_list_file(input);
      std::ostringstream out;
      int best_lower = 0;
      for (const auto& c : lower_bound(g)) {
        out << format_certificate(c);
        if (c.quantity == Quantity::phi) best_lower = std::max(best_lower, c.value);
      }
      BoundCertificate upper = best_upper(g);
      out << format_certificate(upper);
      if (upper.value == best_lower)
        out << "pinned phi " << upper.value << '\n';
      Reduction red = reduce(g);
      if (red.reduced.vertex_count() <= exact_threshold) {
        SearchConfig cfg;
        cfg.node_limit = budget;
        ExactResult ex = exact_phi_reduced(g, cfg);
        if (ex.exact()) out << "exact phi " << ex.value << '\n';
      }
      write_output(output, out.str());
    } else if (*cmd_generate) {
      if (family == "quadrangulation") {
        write_output(output, format_rotation(gen_quadrangulation(arg_n)));
      } else if (family == "biclique-minus-matching") {
        write_output(output, format_edge_list(gen_biclique_minus_matching(arg_n)));
      } else if (family == "book") {
        write_output(output, format_edge_list(gen_book(arg_n)));
      } else if (family == "caterpillar") {
        write_output(output,
                     format_edge_list(gen_caterpillar(arg_n, parse_int_list(legs_csv))));
      } else {
        write_output(output, format_edge_list(gen_spider(parse_int_list(legs_csv))));
      }
    } else if (*cmd_batch) {
      namespace fs = std::filesystem;
      std::vector<std::pair<std::string, std::string>> inputs;
      if (!fs::is_directory(batch_dir))
        throw parse_error("batch: not a directory: " + batch_dir);
      for (const auto& entry : fs::directory_iterator(batch_dir)) {
        if (!entry.is_regular_file()) continue;
        auto ext = entry.path().extension().string();
        if (ext == ".el" || ext == ".rot")
          inputs.emplace_back(entry.path().filename().string(), entry.path().string());
      }
      std::sort(inputs.begin(), inputs.end());
      BatchOptions opts;
      opts.exact_threshold = exact_threshold;
      opts.jobs = jobs;
      opts.node_budget = budget;
      write_output(output, format_csv(batch_report(inputs, opts)));
    }
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const internal_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
