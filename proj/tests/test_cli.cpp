#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "overlap/families.hpp"
#include "overlap/graph.hpp"
#include "overlap/planar.hpp"
#include "overlap/report.hpp"
#include "test_util.hpp"

using namespace overlap;
using namespace testutil;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(OVERLAP_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "overlap-cli-tests";
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream out(p);
  out << content;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("cli: skeleton and tree-rep") {
  auto dir = scratch_dir();
  write_file(dir / "p4.el", format_edge_list(path(4)));
  auto sk = run_cli("skeleton -i " + (dir / "p4.el").string());
  CHECK(sk.exit_code == 0);
  CHECK(sk.out.rfind("size 4", 0) == 0);

  auto rep = run_cli("tree-rep -i " + (dir / "p4.el").string() + " -o " +
                     (dir / "p4.rep").string());
  CHECK(rep.exit_code == 0);
  OverlapRep r = read_rep_file((dir / "p4.rep").string());
  CHECK(r.size() == 4);

  auto ver = run_cli("verify -g " + (dir / "p4.el").string() + " -r " +
                     (dir / "p4.rep").string());
  CHECK(ver.exit_code == 0);
  CHECK(ver.out.rfind("ok:", 0) == 0);
}

TEST_CASE("cli: verify failure exits 3") {
  auto dir = scratch_dir();
  write_file(dir / "k3.el", format_edge_list(complete(3)));
  write_file(dir / "bad.rep", "3\n0: 1\n1: 1 2\n2: 2 3\n");
  auto ver = run_cli("verify -g " + (dir / "k3.el").string() + " -r " +
                     (dir / "bad.rep").string());
  CHECK(ver.exit_code == 3);
}

TEST_CASE("cli: parse errors exit 2, preconditions exit 5") {
  auto dir = scratch_dir();
  write_file(dir / "broken.el", "not a graph\n");
  CHECK(run_cli("bounds -i " + (dir / "broken.el").string()).exit_code == 2);
  CHECK(run_cli("bounds -i " + (dir / "missing.el").string()).exit_code == 2);

  write_file(dir / "p4.el", format_edge_list(path(4)));
  CHECK(run_cli("construct edge-bound -i " + (dir / "p4.el").string()).exit_code == 5);

  CHECK(run_cli("--seed 7 bounds -i " + (dir / "p4.el").string()).exit_code == 2);
}

TEST_CASE("cli: exact solver and budget exit code") {
  auto dir = scratch_dir();
  write_file(dir / "c6.el", format_edge_list(cycle(6)));
  auto ex = run_cli("exact -i " + (dir / "c6.el").string() + " -q phi -w " +
                    (dir / "c6.rep").string());
  CHECK(ex.exit_code == 0);
  CHECK(ex.out.find("value 5") != std::string::npos);
  OverlapRep w = read_rep_file((dir / "c6.rep").string());
  CHECK(verify(cycle(6), w, RepKind::overlap).ok());

  auto tight = run_cli("exact -i " + (dir / "c6.el").string() + " --budget 5");
  CHECK(tight.exit_code == 4);

  auto naive = run_cli("exact -i " + (dir / "c6.el").string() + " --naive -q pol");
  CHECK(naive.exit_code == 0);
  CHECK(naive.out.find("value 6") != std::string::npos);
}

TEST_CASE("cli: bounds pins C_6") {
  auto dir = scratch_dir();
  write_file(dir / "c6.el", format_edge_list(cycle(6)));
  auto res = run_cli("bounds -i " + (dir / "c6.el").string());
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("pinned phi 5") != std::string::npos);
  CHECK(res.out.find("exact phi 5") != std::string::npos);
}

TEST_CASE("cli: generate and decompose-planar") {
  auto dir = scratch_dir();
  auto gen = run_cli("generate quadrangulation -n 12 -o " + (dir / "q12.rot").string());
  CHECK(gen.exit_code == 0);
  PlaneGraph pg = read_rotation_file((dir / "q12.rot").string());
  CHECK(pg.vertex_count() == 12);

  auto dec = run_cli("decompose-planar -i " + (dir / "q12.rot").string());
  CHECK(dec.exit_code == 0);
  CHECK(dec.out.find("parts 20") != std::string::npos);

  auto bad = run_cli("generate quadrangulation -n 7");
  CHECK(bad.exit_code == 5);

  auto cat = run_cli("generate caterpillar -n 5 --legs 0,2,0,1,0");
  CHECK(cat.exit_code == 0);
  CHECK(cat.out.rfind("8 7", 0) == 0);
}

TEST_CASE("cli: construct emits certificate and representation") {
  auto dir = scratch_dir();
  write_file(dir / "c4.el", format_edge_list(cycle(4)));
  auto res = run_cli("construct edge-bound -i " + (dir / "c4.el").string() + " -o " +
                     (dir / "c4.rep").string() + " --cert " + (dir / "c4.cert").string());
  CHECK(res.exit_code == 0);
  std::string cert = read_file(dir / "c4.cert");
  CHECK(cert.rfind("phi upper 3 edge-bound", 0) == 0);
  OverlapRep r = read_rep_file((dir / "c4.rep").string());
  CHECK(verify(cycle(4), r, RepKind::overlap).ok());
}

TEST_CASE("cli: batch output is deterministic and parallel-stable") {
  auto dir = scratch_dir() / "batch";
  fs::remove_all(dir);
  fs::create_directories(dir);
  write_file(dir / "c6.el", format_edge_list(cycle(6)));
  write_file(dir / "p4.el", format_edge_list(path(4)));
  write_file(dir / "k4.el", format_edge_list(complete(4)));
  write_file(dir / "q8.rot", format_rotation(gen_quadrangulation(8)));
  write_file(dir / "junk.el", "garbage\n");

  auto a = run_cli("batch -d " + dir.string());
  auto b = run_cli("batch -d " + dir.string() + " --jobs 4");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("name,n,m,lower,lower_rule,upper,upper_rule,pinned,exact") == 0);
  CHECK(a.out.find("c6.el,6,6,5,edge-lower,5,edge-bound,yes,5") != std::string::npos);
  CHECK(a.out.find("junk.el,,,,,,,error,") != std::string::npos);
  CHECK(a.out.find("q8.rot,8,12,11,edge-lower,11,") != std::string::npos);

  // Empty directory: header only, exit 0.
  auto empty_dir = scratch_dir() / "empty";
  fs::create_directories(empty_dir);
  auto e = run_cli("batch -d " + empty_dir.string());
  CHECK(e.exit_code == 0);
  CHECK(e.out == "name,n,m,lower,lower_rule,upper,upper_rule,pinned,exact\n");
}
