#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "formality/formality_complex.hpp"
#include "formality/graphic.hpp"

using json = nlohmann::ordered_json;
using namespace formality;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;
constexpr int kExitDisagreement = 3;

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return in;
}

int run_arr(const std::string& path, bool as_json,
            std::optional<std::size_t> max_k) {
  auto in = open_or_throw(path);
  Arrangement a = parse_arrangement(in);
  FormalityComplex c = assemble_complex(a, max_k);
  FormalityReport rep = formality_report(c);
  if (as_json) {
    json j;
    j["mode"] = "arr";
    j["ambient_dim"] = a.ambient_dim;
    j["num_hyperplanes"] = a.size();
    j["rank"] = rep.rank;
    j["d_dims"] = rep.d_dims;
    j["d_ranks"] = rep.d_ranks;
    j["homology"] = rep.homology;
    j["formality_level"] = rep.formality_level;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "arrangement: " << a.size() << " hyperplanes in dimension "
              << a.ambient_dim << "\n";
    std::cout << "rank=" << rep.rank << ", D=" << join(rep.d_dims)
              << ", d_ranks=" << join(rep.d_ranks) << ", H=" << join(rep.homology)
              << ", level=" << rep.formality_level << " (" << rep.verdict()
              << ")\n";
  }
  return kExitOk;
}

int run_graph(const std::string& path, bool as_json) {
  auto in = open_or_throw(path);
  Graph g = parse_graph(in);
  FlagComplex fc = flag_complex(g);
  ChainComplex cc = boundary_matrices(fc);
  std::vector<std::size_t> a = fc.face_counts();
  std::vector<std::size_t> h = simplicial_homology(cc, a);
  std::size_t rank = g.n - g.components();
  std::size_t level = level_from_flag_homology(h, rank);
  std::vector<std::size_t> f_ranks;
  for (std::size_t i = 1; i < cc.boundary.size(); ++i)
    f_ranks.push_back(formality::rank(cc.boundary[i]));
  if (as_json) {
    json j;
    j["mode"] = "graph";
    j["ambient_dim"] = g.n;
    j["num_hyperplanes"] = g.edges.size();
    j["rank"] = rank;
    j["d_dims"] = a;
    j["d_ranks"] = f_ranks;
    j["homology"] = std::vector<std::size_t>(h.begin() + 1, h.end());
    j["formality_level"] = level;
    j["clique_counts"] = a;
    j["flag_homology"] = h;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "graph: " << g.n << " vertices, " << g.edges.size()
              << " edges, rank=" << rank << "\n";
    std::cout << "a=" << join(a) << ", H=" << join(h) << ", level=" << level
              << "\n";
  }
  return kExitOk;
}

json cross_check_json(const CrossCheckReport& rep) {
  json j;
  j["mode"] = "verify";
  j["ambient_dim"] = rep.n;
  j["num_hyperplanes"] = rep.num_edges;
  j["rank"] = rep.rank;
  j["d_dims"] = rep.generic_dims;
  j["d_ranks"] = rep.generic_d_ranks;
  j["homology"] = rep.generic_homology;
  j["formality_level"] = rep.formality_level;
  j["clique_counts"] = rep.clique_counts;
  j["flag_homology"] = rep.flag_homology;
  j["agreement"] = rep.agreement;
  j["per_level_agreement"] = rep.per_level_agreement;
  return j;
}

void print_cross_check(const CrossCheckReport& rep) {
  std::cout << "graph: " << rep.n << " vertices, " << rep.num_edges
            << " edges, rank=" << rep.rank << "\n";
  std::cout << "cliques a=" << join(rep.clique_counts)
            << ", lattice D=" << join(rep.generic_dims)
            << ", clique D=" << join(rep.special_dims) << "\n";
  std::cout << "H(D)=" << join(rep.generic_homology)
            << ", H(Delta)=" << join(rep.flag_homology) << "\n";
  std::cout << "agreement=" << (rep.agreement ? "yes" : "NO")
            << ", level=" << rep.formality_level << "\n";
}

int run_verify(const std::string& path, bool as_json) {
  auto in = open_or_throw(path);
  Graph g = parse_graph(in);
  CrossCheckReport rep = cross_check(g);
  if (as_json)
    std::cout << cross_check_json(rep).dump(2) << "\n";
  else
    print_cross_check(rep);
  return rep.agreement ? kExitOk : kExitDisagreement;
}

int run_random(std::size_t n, std::uint64_t p_num, std::uint64_t p_den,
               std::uint64_t seed, std::size_t count, bool as_json) {
  std::mt19937_64 gen(seed);
  std::size_t ran = 0, agreed = 0, skipped = 0;
  std::map<std::size_t, std::size_t> level_counts;
  json instances = json::array();
  if (!as_json)
    std::cout << "random: generator=mt19937_64 n=" << n << " p=" << p_num << "/"
              << p_den << " seed=" << seed << " count=" << count << "\n";
  bool disagreement = false;
  for (std::size_t i = 0; i < count; ++i) {
    Graph g = random_graph(gen, n, p_num, p_den);
    if (!g.connected() || g.edges.empty()) {
      ++skipped;
      continue;
    }
    CrossCheckReport rep = cross_check(g);
    ++ran;
    if (rep.agreement) ++agreed;
    else disagreement = true;
    ++level_counts[rep.formality_level];
    if (as_json) {
      json j = cross_check_json(rep);
      j["instance"] = i;
      instances.push_back(j);
    } else {
      std::cout << "instance " << i << ": edges=" << g.edges.size()
                << " level=" << rep.formality_level
                << " agreement=" << (rep.agreement ? "yes" : "NO") << "\n";
    }
  }
  if (as_json) {
    json j;
    j["mode"] = "random";
    j["generator"] = "mt19937_64";
    j["n"] = n;
    j["p"] = std::to_string(p_num) + "/" + std::to_string(p_den);
    j["seed"] = seed;
    j["count"] = count;
    j["instances"] = instances;
    json levels = json::object();
    for (const auto& [lvl, cnt] : level_counts)
      levels[std::to_string(lvl)] = cnt;
    j["summary"] = {{"run", ran}, {"agreed", agreed}, {"skipped", skipped},
                    {"levels", levels}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "summary: run=" << ran << " agreed=" << agreed
              << " skipped=" << skipped << " levels=";
    bool first = true;
    for (const auto& [lvl, cnt] : level_counts) {
      if (!first) std::cout << ",";
      std::cout << lvl << ":" << cnt;
      first = false;
    }
    std::cout << "\n";
  }
  return disagreement ? kExitDisagreement : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-formality of central hyperplane arrangements"};
  app.require_subcommand(1);

  std::string path;
  bool as_json = false;
  std::size_t max_k = 0;
  std::size_t n = 0, count = 1;
  std::uint64_t seed = 0;
  std::string p_str;

  auto* arr = app.add_subcommand("arr", "analyze an arrangement file");
  arr->add_option("file", path)->required();
  arr->add_flag("--json", as_json);
  arr->add_option("--max-k", max_k, "cap the assembled levels");

  auto* graph = app.add_subcommand("graph", "flag-complex analysis of a graph");
  graph->add_option("file", path)->required();
  graph->add_flag("--json", as_json);

  auto* verify =
      app.add_subcommand("verify", "cross-check lattice and clique pipelines");
  verify->add_option("file", path)->required();
  verify->add_flag("--json", as_json);

  auto* random = app.add_subcommand("random", "seeded random-graph suite");
  random->add_option("--n", n)->required();
  random->add_option("--p", p_str, "edge probability as NUM/DEN")->required();
  random->add_option("--seed", seed)->required();
  random->add_option("--count", count);
  random->add_flag("--json", as_json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (arr->parsed())
      return run_arr(path, as_json,
                     max_k ? std::optional<std::size_t>(max_k) : std::nullopt);
    if (graph->parsed()) return run_graph(path, as_json);
    if (verify->parsed()) return run_verify(path, as_json);
    if (random->parsed()) {
      auto slash = p_str.find('/');
      std::uint64_t p_num = 0, p_den = 1;
      try {
        if (slash == std::string::npos) {
          p_num = std::stoull(p_str);
        } else {
          p_num = std::stoull(p_str.substr(0, slash));
          p_den = std::stoull(p_str.substr(slash + 1));
        }
      } catch (const std::exception&) {
        throw std::runtime_error("--p expects NUM or NUM/DEN");
      }
      if (n < 1 || p_den == 0 || p_num > p_den)
        throw std::runtime_error("--p must lie in [0,1] and --n must be >= 1");
      return run_random(n, p_num, p_den, seed, count, as_json);
    }
  } catch (const InternalInvariantError& e) {
    std::cerr << "internal invariant failure: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
