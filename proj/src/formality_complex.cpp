#include "formality/formality_complex.hpp"

#include <algorithm>

namespace formality {

std::size_t FormalityComplex::dim(std::size_t k) const {
  if (k == 0) return d0_dim;
  if (k == 1) return d1_dim;
  auto it = differentials.find(k);
  return it == differentials.end() ? 0 : it->second.cols();
}

std::string FormalityReport::verdict() const {
  if (formality_level <= 1 && rank >= 2) return "not formal";
  if (formality_level == rank) return "k-formal for every k up to the rank";
  std::string name =
      formality_level == 2 ? "formal" : std::to_string(formality_level) + "-formal";
  return name + ", not " + std::to_string(formality_level + 1) + "-formal";
}

Matrix relation_space_F(const Arrangement& a,
                        const std::vector<std::size_t>& indices) {
  Matrix sub = a.normal_matrix().select_columns(indices);
  Matrix k = kernel_basis(sub);
  Matrix padded(a.size(), k.cols());
  for (std::size_t r = 0; r < indices.size(); ++r)
    for (std::size_t c = 0; c < k.cols(); ++c)
      padded.at(indices[r], c) = k.at(r, c);
  return padded;
}

Matrix f2_span(const Arrangement& a) {
  const std::size_t n = a.size();
  Matrix phi = a.normal_matrix();
  Matrix all(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = i + 1; k < j; ++k) {
        // unordered triples {i, k, j} in lexicographic order
        std::vector<std::size_t> t = {i, k, j};
        Matrix sub = phi.select_columns(t);
        if (rank(sub) == 3) continue;
        Matrix ker = kernel_basis(sub);
        Matrix padded(n, ker.cols());
        for (std::size_t r = 0; r < 3; ++r)
          for (std::size_t c = 0; c < ker.cols(); ++c)
            padded.at(t[r], c) = ker.at(r, c);
        all = all.hcat(padded);
      }
  return column_space_basis(all);
}

std::vector<RelationBlock> compute_relation_blocks(
    const Lattice& lat, const Arrangement& a, std::size_t k,
    const std::vector<RelationBlock>& prev) {
  std::vector<RelationBlock> out;
  auto it = lat.flats_by_rank.find(k);
  if (it == lat.flats_by_rank.end()) return out;

  if (k == 2) {
    for (const Flat& x : it->second) {
      Matrix basis = relation_space_F(a, x.closure);
      if (basis.cols() > 0) out.push_back({x, std::move(basis), 2});
    }
    return out;
  }

  // Column offset of each level-(k-1) block inside D_{k-1}.
  std::vector<std::size_t> offsets(prev.size());
  std::size_t dim_prev = 0;
  for (std::size_t b = 0; b < prev.size(); ++b) {
    offsets[b] = dim_prev;
    dim_prev += prev[b].basis.cols();
  }

  for (const Flat& x : it->second) {
    // R_k(A_X) = ker of the concatenation of the R_{k-1}(A_Y) bases over
    // rank-(k-1) flats Y below X; localization transitivity lets every
    // basis stay in the global D_{k-2} coordinates.
    std::vector<std::size_t> members;
    for (std::size_t b = 0; b < prev.size(); ++b)
      if ((prev[b].flat.mask & x.mask) == prev[b].flat.mask) members.push_back(b);
    if (members.empty()) continue;

    Matrix m = prev[members[0]].basis;
    for (std::size_t i = 1; i < members.size(); ++i)
      m = m.hcat(prev[members[i]].basis);
    Matrix ker = kernel_basis(m);
    if (ker.cols() == 0) continue;

    Matrix basis(dim_prev, ker.cols());
    std::size_t local = 0;
    for (std::size_t b : members) {
      for (std::size_t t = 0; t < prev[b].basis.cols(); ++t, ++local)
        for (std::size_t c = 0; c < ker.cols(); ++c)
          basis.at(offsets[b] + t, c) = ker.at(local, c);
    }
    out.push_back({x, std::move(basis), k});
  }
  return out;
}

FormalityComplex assemble_complex(const Arrangement& a,
                                  std::optional<std::size_t> max_k) {
  FormalityComplex c;
  c.d0_dim = a.ambient_dim;
  c.d1_dim = a.size();
  c.arrangement_rank = a.rank();
  c.top_level = std::min(max_k.value_or(c.arrangement_rank), c.arrangement_rank);

  Lattice lat = build_lattice(a, c.top_level);
  c.differentials[1] = a.normal_matrix();

  std::size_t prev_dim = c.d1_dim;
  std::vector<RelationBlock> prev;
  for (std::size_t k = 2; k <= c.top_level; ++k) {
    std::vector<RelationBlock> blocks =
        compute_relation_blocks(lat, a, k, prev);
    Matrix d(prev_dim, 0);
    std::vector<std::size_t> offsets;
    for (const RelationBlock& b : blocks) {
      offsets.push_back(d.cols());
      d = d.hcat(b.basis);
    }
    if (!(c.differentials.at(k - 1) * d).is_zero())
      throw InternalInvariantError("d_" + std::to_string(k - 1) + " * d_" +
                                   std::to_string(k) + " != 0");
    prev_dim = d.cols();
    c.differentials[k] = std::move(d);
    c.block_offsets[k] = std::move(offsets);
    c.blocks_by_level[k] = std::move(blocks);
    prev = c.blocks_by_level[k];
  }
  return c;
}

FormalityReport formality_report(const FormalityComplex& c) {
  FormalityReport rep;
  rep.rank = c.arrangement_rank;
  const std::size_t top = c.top_level;
  for (std::size_t k = 0; k <= top; ++k) rep.d_dims.push_back(c.dim(k));
  for (std::size_t k = 1; k <= top; ++k)
    rep.d_ranks.push_back(rank(c.differentials.at(k)));
  for (std::size_t i = 1; i + 1 <= top; ++i) {
    long long h = static_cast<long long>(c.dim(i)) -
                  static_cast<long long>(rep.d_ranks[i - 1]) -
                  static_cast<long long>(rep.d_ranks[i]);
    if (h < 0)
      throw InternalInvariantError("negative homology dimension at index " +
                                   std::to_string(i));
    rep.homology.push_back(static_cast<std::size_t>(h));
  }
  rep.formality_level = 1;
  if (top < 2) {
    rep.formality_level = rep.rank;
  } else {
    for (std::size_t k = 2; k <= top; ++k) {
      bool ok = true;
      for (std::size_t i = 1; i < k; ++i)
        if (rep.homology[i - 1] != 0) ok = false;
      if (ok) rep.formality_level = k;
    }
  }
  return rep;
}

}  // namespace formality
