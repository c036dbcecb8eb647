#include <doctest.h>

#include "formality/matrix.hpp"
#include "oracles.hpp"

using namespace formality;

namespace {

// The seven length-3 relation rows of the bundled rank-4 arrangement, as
// printed: rows are relations, columns the ten hyperplanes.
Matrix relation_rows_7x10() {
  return Matrix{{1, -1, 0, 0, 0, 0, 0, 0, 0, -1},
                {1, 0, 0, 1, 0, 0, -1, 0, 0, 0},
                {1, 0, 0, 0, 0, 1, 0, -1, 0, 0},
                {0, 2, 1, 0, 0, 0, -1, 0, 0, 0},
                {0, 2, 0, 0, 1, 0, 0, -1, 0, 0},
                {0, 0, 1, 0, 0, 1, 0, 0, -1, 0},
                {0, 0, 0, 1, 1, 0, 0, 0, -1, 0}};
}

}  // namespace

TEST_CASE("rref of identity is itself") {
  Matrix id = Matrix::identity(3);
  auto [red, piv] = rref(id);
  CHECK(red == id);
  CHECK(piv == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("rref of a single row") {
  Matrix m{{1, 1, 1}};
  auto [red, piv] = rref(m);
  CHECK(red == m);
  CHECK(piv == std::vector<std::size_t>{0});
}

TEST_CASE("the 7x10 relation matrix has 6 pivot columns") {
  CHECK(rref(relation_rows_7x10()).pivot_columns.size() == 6);
}

TEST_CASE("rank of zero matrix") { CHECK(rank(Matrix(4, 4)) == 0); }

TEST_CASE("kernel of identity is empty") {
  Matrix k = kernel_basis(Matrix::identity(3));
  CHECK(k.rows() == 3);
  CHECK(k.cols() == 0);
}

TEST_CASE("empty matrices have rank 0") {
  CHECK(rank(Matrix(0, 5)) == 0);
  CHECK(rank(Matrix(5, 0)) == 0);
  CHECK(kernel_basis(Matrix(5, 0)).cols() == 0);
  CHECK(kernel_basis(Matrix(0, 3)).cols() == 3);
}

TEST_CASE("rref is idempotent and kernel is exact on random matrices") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 1 + gen() % 5, cols = 1 + gen() % 5;
    Matrix m = oracle::random_matrix(gen, rows, cols);
    auto r = rref(m);
    CHECK(rref(r.reduced).reduced == r.reduced);
    Matrix k = kernel_basis(m);
    CHECK(rank(m) + k.cols() == m.cols());
    CHECK((m * k).is_zero());
  }
}

TEST_CASE("rank agrees with the minor-expansion oracle and transposition") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 1 + gen() % 5, cols = 1 + gen() % 5;
    Matrix m = oracle::random_matrix(gen, rows, cols);
    std::size_t r = rank(m);
    CHECK(r == oracle::rank_by_minors(m));
    CHECK(r == rank(m.transpose()));
  }
}

TEST_CASE("arithmetic is exact: (a+b)-b == a on awkward fractions") {
  Rational a(1, 3), b(10000000, 7);
  CHECK((a + b) - b == a);
  Rational big = Rational(Int("123456789123456789123456789"), 2);
  CHECK((a + big) - big == a);
}

TEST_CASE("same_column_span") {
  Matrix a{{1, 0}, {0, 1}, {0, 0}};
  Matrix b{{1, 1}, {1, -1}, {0, 0}};
  Matrix c{{1, 0}, {0, 0}, {0, 1}};
  CHECK(same_column_span(a, b));
  CHECK(!same_column_span(a, c));
}
