// Acceptance suite: one pass/fail line per criterion.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "formality/formality_complex.hpp"
#include "formality/graphic.hpp"
#include "oracles.hpp"

using namespace formality;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " " << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------- criterion 1
void criterion1() {
  auto t0 = Clock::now();
  Arrangement a =
      oracle::load_arrangement(std::string(DATA_DIR) + "/bt-example.arr");
  bool ok = a.rank() == 4;
  std::vector<std::size_t> all(a.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  ok = ok && relation_space_F(a, all).cols() == 6;

  FormalityComplex c = assemble_complex(a);
  const auto& blocks2 = c.blocks_by_level.at(2);
  ok = ok && blocks2.size() == 7;
  for (const auto& b : blocks2) ok = ok && b.basis.cols() == 1;
  ok = ok && c.dim(2) == 7 && c.dim(3) == 0;
  ok = ok && rank(c.differentials.at(2)) == 6;

  FormalityReport rep = formality_report(c);
  ok = ok && rep.homology == std::vector<std::size_t>{0, 1, 0};
  ok = ok && rep.formality_level == 2 && rep.verdict() == "formal, not 3-formal";
  double dt = seconds_since(t0);
  ok = ok && dt < 1.0;
  report("criterion-1 rank-4 ten-hyperplane golden run", ok,
         std::to_string(dt).substr(0, 5) + " s");
}

// ---------------------------------------------------------------- criterion 2
const Matrix kPaperF1{{1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
                      {-1, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0},
                      {0, 0, 0, 0, -1, 0, 0, 1, 1, 1, 0, 0},
                      {0, -1, 0, 0, 0, 0, 0, -1, 0, 0, 1, 1},
                      {0, 0, -1, 0, 0, -1, 0, 0, -1, 0, -1, 0},
                      {0, 0, 0, -1, 0, 0, -1, 0, 0, -1, 0, -1}};
const Matrix kPaperF2{{1, 1, 0, 0, 0, 0, 0, 0},
                      {0, 0, 1, 1, 0, 0, 0, 0},
                      {-1, 0, -1, 0, 0, 0, 0, 0},
                      {0, -1, 0, -1, 0, 0, 0, 0},
                      {0, 0, 0, 0, 1, 1, 0, 0},
                      {1, 0, 0, 0, -1, 0, 0, 0},
                      {0, 1, 0, 0, 0, -1, 0, 0},
                      {0, 0, 0, 0, 0, 0, 1, 1},
                      {0, 0, 0, 0, 1, 0, -1, 0},
                      {0, 0, 0, 0, 0, 1, 0, -1},
                      {0, 0, 1, 0, 0, 0, 1, 0},
                      {0, 0, 0, 1, 0, 0, 0, 1}};

Matrix negate(const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = -m.at(r, c);
  return out;
}

void criterion2() {
  auto t0 = Clock::now();
  Graph g = oracle::load_graph(std::string(DATA_DIR) + "/octahedron.graph");
  FlagComplex fc = flag_complex(g);
  ChainComplex cc = boundary_matrices(fc);
  bool ok = fc.face_counts() == std::vector<std::size_t>{6, 12, 8};
  ok = ok && rank(cc.boundary[1]) == 5;
  ok = ok && rank(cc.boundary[2]) == 7;
  ok = ok && kernel_basis(cc.boundary[2]).cols() == 1;
  auto h = simplicial_homology(cc, fc.face_counts());
  ok = ok && h == std::vector<std::size_t>{1, 0, 1};
  ok = ok && level_from_flag_homology(h, 5) == 2;

  // Match the published matrices, searching vertex relabelings; the level-1
  // matrix is compared up to the recorded global sign of the edge boundary.
  bool matched = false;
  std::vector<std::size_t> perm = {1, 2, 3, 4, 5, 6};
  std::sort(perm.begin(), perm.end());
  do {
    Graph relabeled;
    relabeled.n = 6;
    for (auto [i, j] : g.edges) {
      auto e = std::minmax(perm[i - 1], perm[j - 1]);
      relabeled.edges.push_back({e.first, e.second});
    }
    std::sort(relabeled.edges.begin(), relabeled.edges.end());
    ChainComplex rcc = boundary_matrices(flag_complex(relabeled));
    if (rcc.boundary[2] == kPaperF2 &&
        (rcc.boundary[1] == kPaperF1 || rcc.boundary[1] == negate(kPaperF1)) &&
        rank(rcc.boundary[1]) == rank(kPaperF1)) {
      matched = true;
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  ok = ok && matched;

  double dt = seconds_since(t0);
  ok = ok && dt < 1.0;
  report("criterion-2 octahedron golden run", ok,
         std::to_string(dt).substr(0, 5) + " s");
}

// ---------------------------------------------------------------- criterion 3
void criterion3() {
  auto t0 = Clock::now();
  std::mt19937_64 gen(2024);
  std::size_t done = 0;
  bool ok = true;
  while (done < 200) {
    std::size_t n = 4 + gen() % 5;  // 4..8
    Graph g = random_graph(gen, n, 1, 2);
    if (!g.connected() || g.edges.empty() || g.edges.size() > kMaxHyperplanes)
      continue;
    CrossCheckReport rep = cross_check(g);
    if (!rep.agreement) {
      ok = false;
      std::cerr << "disagreement on instance " << done << " (n=" << n << ")\n";
    }
    ++done;
  }
  double dt = seconds_since(t0);
  ok = ok && dt < 120.0;
  report("criterion-3 theorem property suite, 200 random graphs", ok,
         std::to_string(dt).substr(0, 6) + " s");
}

// ---------------------------------------------------------------- criterion 4
void criterion4() {
  bool ok = true;
  auto check_complex = [&](const FormalityComplex& c) {
    for (std::size_t k = 2; k <= c.top_level; ++k)
      ok = ok &&
           (c.differentials.at(k - 1) * c.differentials.at(k)).is_zero();
  };
  check_complex(assemble_complex(
      oracle::load_arrangement(std::string(DATA_DIR) + "/bt-example.arr")));
  for (const char* name : {"/octahedron.graph", "/c4.graph", "/k4.graph"}) {
    Graph g = oracle::load_graph(std::string(DATA_DIR) + name);
    check_complex(assemble_complex(graphic_arrangement(g)));
    check_complex(special_basis_complex(g));
  }
  report("criterion-4 complex identity d.d = 0 on all bundled instances", ok);
}

// ---------------------------------------------------------------- criterion 5
void criterion5() {
  bool ok = true;
  auto check = [&](const Arrangement& a) {
    FormalityComplex c = assemble_complex(a);
    if (c.top_level < 2) return;
    Matrix f2 = f2_span(a);
    ok = ok && same_column_span(c.differentials.at(2), f2);
    FormalityReport rep = formality_report(c);
    std::vector<std::size_t> all(a.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    bool f_eq_f2 = relation_space_F(a, all).cols() == rank(f2);
    bool h1_zero = rep.homology.empty() || rep.homology[0] == 0;
    ok = ok && f_eq_f2 == h1_zero;
  };
  check(oracle::load_arrangement(std::string(DATA_DIR) + "/bt-example.arr"));
  for (const char* name : {"/octahedron.graph", "/c4.graph", "/k4.graph"})
    check(graphic_arrangement(
        oracle::load_graph(std::string(DATA_DIR) + name)));
  std::mt19937_64 gen(99);
  int tested = 0;
  while (tested < 30) {
    Graph g = random_graph(gen, 4 + gen() % 4, 1, 2);
    if (!g.connected() || g.edges.empty() || g.edges.size() > kMaxHyperplanes)
      continue;
    check(graphic_arrangement(g));
    ++tested;
  }
  report("criterion-5 F_2 oracle: span(d_2) = span(length-3 relations)", ok);
}

// ---------------------------------------------------------------- criterion 6
void criterion6() {
  auto t0 = Clock::now();
  bool ok = true;
  for (std::size_t n = 3; n <= 6; ++n) {
    FormalityReport rep = formality_report(
        assemble_complex(graphic_arrangement(oracle::complete_graph(n))));
    ok = ok && rep.rank == n - 1 && rep.formality_level == n - 1;
    for (std::size_t h : rep.homology) ok = ok && h == 0;
  }
  for (std::size_t m = 4; m <= 7; ++m) {
    Graph cm = oracle::cycle_graph(m);
    FlagComplex fc = flag_complex(cm);
    ChainComplex cc = boundary_matrices(fc);
    // independent boundary-rank oracle: largest nonzero minor
    std::size_t f1_rank = oracle::rank_by_minors(cc.boundary[1]);
    std::size_t h1 = m - f1_rank;  // a_1 - rk f_1, no 2-faces
    ok = ok && h1 == 1;
    FormalityReport rep =
        formality_report(assemble_complex(graphic_arrangement(cm)));
    ok = ok && rep.formality_level == 1 && rep.homology[0] == h1;
    auto h = simplicial_homology(cc, fc.face_counts());
    ok = ok && h[1] == 1;
  }
  double dt = seconds_since(t0);
  ok = ok && dt < 10.0;
  report("criterion-6 known-answer families K_n and C_m", ok,
         std::to_string(dt).substr(0, 5) + " s");
}

// ---------------------------------------------------------------- criterion 7
std::string run_cli(const std::string& args) {
  std::string cmd = std::string(CLI_PATH) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  return out;
}

void criterion7() {
  std::string args = "random --n 7 --p 1/2 --seed 42 --count 20 --json";
  std::string a = run_cli(args);
  std::string b = run_cli(args);
  bool ok = !a.empty() && a == b;
  report("criterion-7 byte-identical repeated random run", ok,
         std::to_string(a.size()) + " bytes");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  if (failures) std::cout << failures << " criterion(s) FAILED\n";
  else std::cout << "all acceptance criteria passed\n";
  return failures == 0 ? 0 : 1;
}
