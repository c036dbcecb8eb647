#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "formality/matrix.hpp"

namespace formality {

// Hard cap on the number of hyperplanes a lattice will be built for;
// closures are tracked as 32-bit masks.
constexpr std::size_t kMaxHyperplanes = 24;

struct ParseError : std::runtime_error {
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line(line) {}
  std::size_t line;
};

// Defining covector of a central hyperplane, normalized so the first
// nonzero coordinate is 1.
struct Hyperplane {
  std::vector<Rational> normal;
};

struct Arrangement {
  std::size_t ambient_dim = 0;
  std::vector<Hyperplane> hyperplanes;

  std::size_t size() const { return hyperplanes.size(); }

  // The ambient_dim x n matrix of normals; also the matrix of the map phi
  // sending e_H to alpha_H.
  Matrix normal_matrix() const;

  std::size_t rank() const;
};

// Flat of the intersection lattice, identified with its closed set of
// hyperplane indices (0-based, sorted). mask mirrors closure for subset
// tests.
struct Flat {
  std::vector<std::size_t> closure;
  std::size_t rank = 0;
  std::uint32_t mask = 0;

  bool operator==(const Flat&) const = default;
};

struct Lattice {
  // rank -> flats of that rank, ordered lexicographically by closure.
  std::map<std::size_t, std::vector<Flat>> flats_by_rank;
};

// File format: '#' comment lines anywhere; first non-comment line is the
// ambient dimension; each further non-comment line holds that many
// whitespace-separated rationals. Throws ParseError.
Arrangement parse_arrangement(std::istream& in);

// All hyperplane indices whose normal lies in the span of the normals
// indexed by `subset`. Also reports the rank of that span.
std::pair<std::vector<std::size_t>, std::size_t> closure_of(
    const Arrangement& a, const std::vector<std::size_t>& subset);

// Flats of rank 1..max_rank, built rank by rank. Requires
// max_rank <= rank(a) and a.size() <= kMaxHyperplanes.
Lattice build_lattice(const Arrangement& a, std::size_t max_rank);

// The order ideal below x: every flat whose closure is contained in
// closure(x), in lattice order.
std::vector<Flat> localization(const Lattice& lat, const Flat& x);

std::uint32_t index_mask(const std::vector<std::size_t>& indices);

}  // namespace formality
