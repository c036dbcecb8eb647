#include "formality/graphic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace formality {

bool Graph::adjacent(std::size_t i, std::size_t j) const {
  if (i == j) return false;
  if (i > j) std::swap(i, j);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

std::size_t Graph::components() const {
  std::vector<std::size_t> parent(n + 1);
  for (std::size_t v = 1; v <= n; ++v) parent[v] = v;
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [i, j] : edges) parent[find(i)] = find(j);
  std::set<std::size_t> roots;
  for (std::size_t v = 1; v <= n; ++v) roots.insert(find(v));
  return roots.size();
}

std::size_t Graph::edge_index(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(i, j));
  return static_cast<std::size_t>(it - edges.begin());
}

std::vector<std::size_t> FlagComplex::face_counts() const {
  std::vector<std::size_t> a;
  for (const auto& faces : faces_by_dim) a.push_back(faces.size());
  return a;
}

namespace {

bool next_data_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_data_line(in, line, lineno))
    throw ParseError(lineno, "missing vertex count");
  Graph g;
  {
    std::istringstream ls(line);
    long long n = -1;
    std::string extra;
    if (!(ls >> n) || n < 1 || (ls >> extra))
      throw ParseError(lineno, "expected a single positive vertex count");
    g.n = static_cast<std::size_t>(n);
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  while (next_data_line(in, line, lineno)) {
    std::istringstream ls(line);
    long long i = 0, j = 0;
    std::string extra;
    if (!(ls >> i >> j) || (ls >> extra))
      throw ParseError(lineno, "expected an edge 'i j'");
    if (i < 1 || j < 1 || i > static_cast<long long>(g.n) ||
        j > static_cast<long long>(g.n))
      throw ParseError(lineno, "vertex out of range 1.." + std::to_string(g.n));
    if (i == j) throw ParseError(lineno, "loop edge");
    std::size_t lo = static_cast<std::size_t>(std::min(i, j));
    std::size_t hi = static_cast<std::size_t>(std::max(i, j));
    if (!seen.insert({lo, hi}).second)
      throw ParseError(lineno, "duplicate edge");
  }
  g.edges.assign(seen.begin(), seen.end());
  return g;
}

namespace {

void extend_clique(const Graph& g, std::vector<std::size_t>& clique,
                   std::size_t max_size, FlagComplex& fc) {
  for (std::size_t v = clique.back() + 1; v <= g.n; ++v) {
    bool joined = std::all_of(clique.begin(), clique.end(), [&](std::size_t u) {
      return g.adjacent(u, v);
    });
    if (!joined) continue;
    clique.push_back(v);
    if (fc.faces_by_dim.size() < clique.size())
      fc.faces_by_dim.resize(clique.size());
    fc.faces_by_dim[clique.size() - 1].push_back(clique);
    if (clique.size() < max_size) extend_clique(g, clique, max_size, fc);
    clique.pop_back();
  }
}

}  // namespace

FlagComplex flag_complex(const Graph& g, std::size_t max_dim) {
  FlagComplex fc;
  fc.faces_by_dim.resize(1);
  std::vector<std::size_t> clique;
  for (std::size_t v = 1; v <= g.n; ++v) {
    fc.faces_by_dim[0].push_back({v});
    clique.assign(1, v);
    if (max_dim >= 1) extend_clique(g, clique, max_dim + 1, fc);
  }
  return fc;
}

FlagComplex flag_complex(const Graph& g) { return flag_complex(g, g.n); }

ChainComplex boundary_matrices(const FlagComplex& fc) {
  ChainComplex cc;
  cc.boundary.resize(fc.faces_by_dim.size());
  for (std::size_t i = 1; i < fc.faces_by_dim.size(); ++i) {
    const auto& rows = fc.faces_by_dim[i - 1];
    const auto& cols = fc.faces_by_dim[i];
    std::map<std::vector<std::size_t>, std::size_t> row_index;
    for (std::size_t r = 0; r < rows.size(); ++r) row_index[rows[r]] = r;
    Matrix f(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      for (std::size_t j = 0; j < cols[c].size(); ++j) {
        std::vector<std::size_t> face = cols[c];
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
        f.at(row_index.at(face), c) = (j % 2 == 0) ? 1 : -1;
      }
    }
    cc.boundary[i] = std::move(f);
  }
  return cc;
}

std::vector<std::size_t> simplicial_homology(const ChainComplex& cc,
                                             const std::vector<std::size_t>& a) {
  std::vector<std::size_t> ranks(a.size() + 1, 0);
  for (std::size_t i = 1; i < cc.boundary.size(); ++i)
    ranks[i] = rank(cc.boundary[i]);
  std::vector<std::size_t> h;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t next = i + 1 < ranks.size() ? ranks[i + 1] : 0;
    h.push_back(a[i] - ranks[i] - next);
  }
  return h;
}

Arrangement graphic_arrangement(const Graph& g) {
  if (g.edges.empty())
    throw std::invalid_argument("graphic arrangement needs at least one edge");
  Arrangement a;
  a.ambient_dim = g.n;
  for (const auto& [i, j] : g.edges) {
    std::vector<Rational> normal(g.n);
    normal[i - 1] = 1;
    normal[j - 1] = -1;
    a.hyperplanes.push_back({std::move(normal)});
  }
  return a;
}

namespace {

std::vector<std::size_t> clique_edge_indices(const Graph& g,
                                             const std::vector<std::size_t>& cl) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < cl.size(); ++i)
    for (std::size_t j = i + 1; j < cl.size(); ++j)
      idx.push_back(g.edge_index(cl[i], cl[j]));
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace

FormalityComplex special_basis_complex(const Graph& g) {
  Arrangement arr = graphic_arrangement(g);
  FlagComplex fc = flag_complex(g);
  ChainComplex cc = boundary_matrices(fc);

  FormalityComplex c;
  c.d0_dim = g.n;
  c.d1_dim = g.edges.size();
  c.arrangement_rank = g.n - g.components();
  c.top_level = c.arrangement_rank;
  c.differentials[1] = arr.normal_matrix();

  const bool masks_fit = g.edges.size() <= 32;
  std::size_t prev_dim = c.d1_dim;
  for (std::size_t k = 2; k <= c.top_level; ++k) {
    Matrix d = (k < cc.boundary.size()) ? cc.boundary[k] : Matrix(prev_dim, 0);
    std::vector<RelationBlock> blocks;
    std::vector<std::size_t> offsets;
    if (k < fc.faces_by_dim.size()) {
      const auto& cliques = fc.faces_by_dim[k];
      for (std::size_t ci = 0; ci < cliques.size(); ++ci) {
        Flat flat;
        flat.closure = clique_edge_indices(g, cliques[ci]);
        flat.rank = k;
        flat.mask = masks_fit ? index_mask(flat.closure) : 0;
        blocks.push_back({std::move(flat), d.select_columns({ci}), k});
        offsets.push_back(ci);
      }
    }
    if (!(c.differentials.at(k - 1) * d).is_zero())
      throw InternalInvariantError("special complex: d_" + std::to_string(k - 1) +
                                   " * d_" + std::to_string(k) + " != 0");
    prev_dim = d.cols();
    c.differentials[k] = std::move(d);
    c.block_offsets[k] = std::move(offsets);
    c.blocks_by_level[k] = std::move(blocks);
  }
  return c;
}

std::size_t level_from_flag_homology(const std::vector<std::size_t>& h,
                                     std::size_t rank) {
  if (rank < 2) return rank;
  std::size_t level = 1;
  for (std::size_t k = 2; k <= rank; ++k) {
    bool ok = true;
    for (std::size_t i = 1; i < k; ++i)
      if (i < h.size() && h[i] != 0) ok = false;
    if (ok) level = k;
  }
  return level;
}

CrossCheckReport cross_check(const Graph& g) {
  if (!g.connected())
    throw std::invalid_argument(
        "cross-check requires a connected graph (hypothesis of the "
        "flag-complex criterion)");
  if (g.edges.empty())
    throw std::invalid_argument("cross-check requires at least one edge");
  if (g.edges.size() > kMaxHyperplanes)
    throw std::invalid_argument("graph has more than " +
                                std::to_string(kMaxHyperplanes) + " edges");

  CrossCheckReport rep;
  rep.n = g.n;
  rep.num_edges = g.edges.size();
  rep.rank = g.n - 1;

  FlagComplex fc = flag_complex(g);
  ChainComplex cc = boundary_matrices(fc);
  rep.clique_counts = fc.face_counts();
  rep.flag_homology = simplicial_homology(cc, rep.clique_counts);

  Arrangement arr = graphic_arrangement(g);
  FormalityComplex generic = assemble_complex(arr);
  FormalityComplex special = special_basis_complex(g);
  FormalityReport grep = formality_report(generic);
  FormalityReport srep = formality_report(special);

  rep.generic_d_ranks = grep.d_ranks;
  rep.generic_homology = grep.homology;
  for (std::size_t k = 0; k <= rep.rank; ++k) {
    rep.generic_dims.push_back(generic.dim(k));
    rep.special_dims.push_back(special.dim(k));
  }
  rep.formality_level = grep.formality_level;

  bool all_ok = true;

  // Per level: both pipelines must see one 1-dimensional block per
  // (k+1)-clique, and matching columns up to a nonzero scalar.
  // clique_of[k][b] = clique index of generic block b at level k.
  std::map<std::size_t, std::vector<std::size_t>> clique_of;
  for (std::size_t k = 2; k <= rep.rank; ++k) {
    bool ok = true;
    std::size_t a_k = k < fc.faces_by_dim.size() ? fc.faces_by_dim[k].size() : 0;
    ok = ok && generic.dim(k) == a_k && special.dim(k) == a_k;

    const auto git = generic.blocks_by_level.find(k);
    const std::vector<RelationBlock> empty;
    const auto& gblocks = git == generic.blocks_by_level.end() ? empty : git->second;
    ok = ok && gblocks.size() == a_k;

    std::vector<std::size_t>& cmap = clique_of[k];
    if (ok) {
      for (std::size_t b = 0; b < gblocks.size() && ok; ++b) {
        ok = ok && gblocks[b].basis.cols() == 1;
        // The closed edge set of the flat must be the edge set of a
        // (k+1)-clique.
        std::set<std::size_t> verts;
        for (std::size_t e : gblocks[b].flat.closure) {
          verts.insert(g.edges[e].first);
          verts.insert(g.edges[e].second);
        }
        if (verts.size() != k + 1 ||
            gblocks[b].flat.closure.size() != k * (k + 1) / 2) {
          ok = false;
          break;
        }
        std::vector<std::size_t> tuple(verts.begin(), verts.end());
        const auto& cliques = fc.faces_by_dim[k];
        auto it = std::lower_bound(cliques.begin(), cliques.end(), tuple);
        if (it == cliques.end() || *it != tuple) {
          ok = false;
          break;
        }
        cmap.push_back(static_cast<std::size_t>(it - cliques.begin()));
      }
    }
    if (ok) {
      // Compare generic d_k columns with boundary columns up to scalar,
      // permuting rows through the level-(k-1) block-to-clique map.
      const Matrix& gd = generic.differentials.at(k);
      const Matrix& sd = special.differentials.at(k);
      if (k >= 3 && clique_of[k - 1].size() != gd.rows()) ok = false;
      for (std::size_t b = 0; b < gblocks.size() && ok; ++b) {
        std::size_t scol = cmap[b];
        Rational scale = 0;
        for (std::size_t r = 0; r < gd.rows() && ok; ++r) {
          std::size_t srow = (k == 2) ? r : clique_of.at(k - 1)[r];
          const Rational& gv = gd.at(r, b);
          const Rational& sv = sd.at(srow, scol);
          if ((gv == 0) != (sv == 0)) {
            ok = false;
          } else if (gv != 0) {
            if (scale == 0)
              scale = gv / sv;
            else if (gv != scale * sv)
              ok = false;
          }
        }
        if (scale == 0) ok = false;
      }
    }
    rep.per_level_agreement.push_back(ok);
    all_ok = all_ok && ok;
  }

  // Homology agreement, including the level read directly off Delta(G).
  bool hom_ok = grep.homology == srep.homology;
  for (std::size_t i = 1; i + 1 <= rep.rank; ++i) {
    std::size_t flag_h = i < rep.flag_homology.size() ? rep.flag_homology[i] : 0;
    hom_ok = hom_ok && grep.homology[i - 1] == flag_h;
  }
  hom_ok = hom_ok &&
           level_from_flag_homology(rep.flag_homology, rep.rank) ==
               grep.formality_level &&
           srep.formality_level == grep.formality_level;
  rep.homology_agreement = hom_ok;

  rep.agreement = all_ok && hom_ok;
  return rep;
}

Graph random_graph(std::mt19937_64& gen, std::size_t n, std::uint64_t num,
                   std::uint64_t den) {
  Graph g;
  g.n = n;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (gen() % den < num) g.edges.push_back({i, j});
  return g;
}

}  // namespace formality
