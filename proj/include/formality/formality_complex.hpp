#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "formality/arrangement.hpp"

namespace formality {

// Thrown when an assembled complex violates d_{k-1} * d_k = 0. This is an
// implementation bug, never bad input.
struct InternalInvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

// Basis of R_k(A_X) for one rank-k flat X, with columns written in the
// global coordinates of D_{k-1} (for k = 2: the n hyperplane coordinates).
struct RelationBlock {
  Flat flat;
  Matrix basis;
  std::size_t level = 0;
};

struct FormalityComplex {
  std::size_t d0_dim = 0;  // dim V*
  std::size_t d1_dim = 0;  // number of hyperplanes
  std::size_t arrangement_rank = 0;
  std::size_t top_level = 0;  // blocks assembled for k = 2..top_level
  std::map<std::size_t, std::vector<RelationBlock>> blocks_by_level;
  // k -> matrix of d_k. d_1 is the normal matrix (phi); for k >= 2 the
  // horizontal concatenation of the level-k block bases.
  std::map<std::size_t, Matrix> differentials;
  // k -> starting column of each level-k block inside D_k.
  std::map<std::size_t, std::vector<std::size_t>> block_offsets;

  std::size_t dim(std::size_t k) const;
};

struct FormalityReport {
  std::size_t rank = 0;
  std::vector<std::size_t> d_dims;    // dim D_0 .. dim D_r
  std::vector<std::size_t> d_ranks;   // rank d_1 .. rank d_r
  std::vector<std::size_t> homology;  // dim H_1 .. dim H_{r-1}
  std::size_t formality_level = 0;    // 1 = not formal

  std::string verdict() const;
};

// Basis of F of the sub-arrangement on `indices`, zero-padded to all n
// coordinates. Deterministic (RREF kernel convention).
Matrix relation_space_F(const Arrangement& a,
                        const std::vector<std::size_t>& indices);

// Basis of the span of all relations supported on exactly 3 hyperplanes,
// by enumeration of dependent 3-subsets. Independent oracle for im(d_2).
Matrix f2_span(const Arrangement& a);

// Blocks for all rank-k flats. For k >= 3, `prev` must hold the level-(k-1)
// blocks and prev_dim the dimension of D_{k-2} their bases live in.
std::vector<RelationBlock> compute_relation_blocks(
    const Lattice& lat, const Arrangement& a, std::size_t k,
    const std::vector<RelationBlock>& prev = {});

// Builds the whole complex up to min(max_k, rank(a)) and verifies
// d_{k-1} * d_k = 0 at every level.
FormalityComplex assemble_complex(const Arrangement& a,
                                  std::optional<std::size_t> max_k = {});

FormalityReport formality_report(const FormalityComplex& c);

}  // namespace formality
