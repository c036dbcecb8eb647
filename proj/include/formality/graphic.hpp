#pragma once

#include <cstdint>
#include <istream>
#include <random>
#include <utility>
#include <vector>

#include "formality/formality_complex.hpp"

namespace formality {

// Simple graph on vertices 1..n; edges sorted lexicographically, i < j.
struct Graph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  bool adjacent(std::size_t i, std::size_t j) const;
  std::size_t components() const;
  bool connected() const { return n > 0 && components() == 1; }
  // Index of edge {i, j} (i < j) in the lexicographic edge order.
  std::size_t edge_index(std::size_t i, std::size_t j) const;
};

// Faces of the flag (clique) complex: faces_by_dim[d] lists the (d+1)-vertex
// cliques as strictly increasing tuples, lexicographically sorted.
struct FlagComplex {
  std::vector<std::vector<std::vector<std::size_t>>> faces_by_dim;

  std::vector<std::size_t> face_counts() const;
};

// boundary[i] is the a_{i-1} x a_i matrix of f_i, i = 1..dim.
struct ChainComplex {
  std::vector<Matrix> boundary;  // boundary[0] unused (empty matrix)
};

struct CrossCheckReport {
  std::size_t n = 0;
  std::size_t num_edges = 0;
  std::size_t rank = 0;  // n - 1
  std::vector<std::size_t> clique_counts;     // a_0, a_1, ...
  std::vector<std::size_t> generic_dims;      // dim D_0 .. D_r (lattice route)
  std::vector<std::size_t> special_dims;      // clique route
  std::vector<std::size_t> generic_d_ranks;   // rank d_1 .. d_r
  std::vector<std::size_t> generic_homology;  // H_1 .. H_{r-1}
  std::vector<std::size_t> flag_homology;     // H_0 .. H_top of Delta(G)
  std::vector<bool> per_level_agreement;      // k = 2..r: dims + columns match
  bool homology_agreement = false;
  bool agreement = false;
  std::size_t formality_level = 0;
};

// File format: '#' comment lines; first non-comment line is the vertex
// count; each further non-comment line is "i j" with 1 <= i < j <= n.
Graph parse_graph(std::istream& in);

// All cliques of size <= max_dim + 1 by ordered vertex extension.
FlagComplex flag_complex(const Graph& g, std::size_t max_dim);
FlagComplex flag_complex(const Graph& g);  // max_dim = n

// Simplicial boundary matrices in the lexicographic bases:
// f_i([n_1..n_{i+1}]) = sum_j (-1)^{j-1} [n_1..^n_j..n_{i+1}].
ChainComplex boundary_matrices(const FlagComplex& fc);

// dim H_i = a_i - rank f_i - rank f_{i+1}, over the rationals.
std::vector<std::size_t> simplicial_homology(const ChainComplex& cc,
                                             const std::vector<std::size_t>& a);

// One hyperplane x_i - x_j per edge {i,j}, lexicographic edge order.
// Requires at least one edge.
Arrangement graphic_arrangement(const Graph& g);

// The relation complex of the graphic arrangement built directly from
// cliques: D_k basis = (k+1)-cliques, each block carrying the special
// basis vector, whose matrix is the simplicial boundary f_k for k >= 2.
FormalityComplex special_basis_complex(const Graph& g);

// Runs the lattice pipeline, the clique pipeline and flag-complex homology
// and checks that they agree. Requires a connected graph.
CrossCheckReport cross_check(const Graph& g);

// Formality level read off the flag-complex homology: largest k <= rank
// with H_1 = ... = H_{k-1} = 0, or 1 if H_1 != 0.
std::size_t level_from_flag_homology(const std::vector<std::size_t>& h,
                                     std::size_t rank);

// Deterministic Erdos-Renyi draw: edge {i,j} in lexicographic order is
// included iff (gen() mod den) < num.
Graph random_graph(std::mt19937_64& gen, std::size_t n, std::uint64_t num,
                   std::uint64_t den);

}  // namespace formality
