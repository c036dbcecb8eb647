#include "formality/arrangement.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace formality {

std::uint32_t index_mask(const std::vector<std::size_t>& indices) {
  std::uint32_t m = 0;
  for (std::size_t i : indices) m |= std::uint32_t{1} << i;
  return m;
}

Matrix Arrangement::normal_matrix() const {
  Matrix m(ambient_dim, hyperplanes.size());
  for (std::size_t j = 0; j < hyperplanes.size(); ++j)
    for (std::size_t i = 0; i < ambient_dim; ++i)
      m.at(i, j) = hyperplanes[j].normal[i];
  return m;
}

std::size_t Arrangement::rank() const { return formality::rank(normal_matrix()); }

namespace {

// Reads the next non-comment, non-blank line; returns false at EOF.
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

Arrangement parse_arrangement(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_data_line(in, line, lineno))
    throw ParseError(lineno, "missing ambient dimension");

  std::size_t dim = 0;
  {
    std::istringstream ls(line);
    long long d = -1;
    std::string extra;
    if (!(ls >> d) || d < 1 || (ls >> extra))
      throw ParseError(lineno, "expected a single positive ambient dimension");
    dim = static_cast<std::size_t>(d);
  }

  Arrangement a;
  a.ambient_dim = dim;
  std::set<std::vector<Rational>> seen;
  while (next_data_line(in, line, lineno)) {
    std::istringstream ls(line);
    std::vector<Rational> v;
    std::string tok;
    while (ls >> tok) {
      try {
        v.push_back(parse_rational(tok));
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
      }
    }
    if (v.size() != dim)
      throw ParseError(lineno, "expected " + std::to_string(dim) +
                                   " coordinates, got " +
                                   std::to_string(v.size()));
    auto first = std::find_if(v.begin(), v.end(),
                              [](const Rational& x) { return x != 0; });
    if (first == v.end()) throw ParseError(lineno, "zero normal vector");
    Rational lead = *first;
    for (auto& x : v) x /= lead;
    if (!seen.insert(v).second)
      throw ParseError(lineno, "duplicate hyperplane (same projective class)");
    a.hyperplanes.push_back({std::move(v)});
  }
  if (a.hyperplanes.empty()) throw ParseError(lineno, "no hyperplanes given");
  return a;
}

std::pair<std::vector<std::size_t>, std::size_t> closure_of(
    const Arrangement& a, const std::vector<std::size_t>& subset) {
  const std::size_t dim = a.ambient_dim;
  // Row-reduce the chosen normals once, then test membership of every
  // other normal in the row span.
  Matrix m(subset.size(), dim);
  for (std::size_t r = 0; r < subset.size(); ++r)
    for (std::size_t c = 0; c < dim; ++c)
      m.at(r, c) = a.hyperplanes[subset[r]].normal[c];
  auto [red, pivots] = rref(m);

  std::uint32_t in_subset = index_mask(subset);
  std::vector<std::size_t> closure;
  for (std::size_t h = 0; h < a.size(); ++h) {
    if (in_subset & (std::uint32_t{1} << h)) {
      closure.push_back(h);
      continue;
    }
    std::vector<Rational> v = a.hyperplanes[h].normal;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const Rational& f = v[pivots[i]];
      if (f == 0) continue;
      Rational coef = f;  // pivot entries are 1
      for (std::size_t c = pivots[i]; c < dim; ++c)
        v[c] -= coef * red.at(i, c);
    }
    if (std::all_of(v.begin(), v.end(),
                    [](const Rational& x) { return x == 0; }))
      closure.push_back(h);
  }
  return {std::move(closure), pivots.size()};
}

Lattice build_lattice(const Arrangement& a, std::size_t max_rank) {
  if (a.size() > kMaxHyperplanes)
    throw std::invalid_argument(
        "arrangement has " + std::to_string(a.size()) +
        " hyperplanes; lattice construction is capped at " +
        std::to_string(kMaxHyperplanes));

  Lattice lat;
  if (max_rank == 0) return lat;

  // Distinct normalized normals make each singleton its own closure.
  std::vector<Flat>& rank1 = lat.flats_by_rank[1];
  for (std::size_t h = 0; h < a.size(); ++h)
    rank1.push_back({{h}, 1, std::uint32_t{1} << h});

  for (std::size_t k = 1; k < max_rank; ++k) {
    const auto& level = lat.flats_by_rank[k];
    std::vector<Flat> next;
    std::set<std::uint32_t> seen;
    for (const Flat& x : level) {
      for (std::size_t h = 0; h < a.size(); ++h) {
        std::uint32_t hbit = std::uint32_t{1} << h;
        if (x.mask & hbit) continue;
        // If a found rank-(k+1) flat already contains closure(x) + h, it
        // is that candidate's closure.
        std::uint32_t cand = x.mask | hbit;
        bool covered = false;
        for (const Flat& f : next)
          if ((f.mask & cand) == cand) {
            covered = true;
            break;
          }
        if (covered) continue;
        std::vector<std::size_t> gen = x.closure;
        gen.push_back(h);
        auto [closure, r] = closure_of(a, gen);
        // Adding an independent normal raises the rank by exactly one.
        if (r != k + 1) throw std::logic_error("lattice rank bookkeeping");
        std::uint32_t m = index_mask(closure);
        if (seen.insert(m).second)
          next.push_back({std::move(closure), k + 1, m});
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end(),
              [](const Flat& l, const Flat& r) { return l.closure < r.closure; });
    lat.flats_by_rank[k + 1] = std::move(next);
  }
  return lat;
}

std::vector<Flat> localization(const Lattice& lat, const Flat& x) {
  std::vector<Flat> out;
  for (const auto& [r, flats] : lat.flats_by_rank) {
    if (r > x.rank) break;
    for (const Flat& f : flats)
      if ((f.mask & x.mask) == f.mask) out.push_back(f);
  }
  return out;
}

}  // namespace formality
