#include "formality/matrix.hpp"

#include <algorithm>
#include <cassert>

namespace formality {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    assert(row.size() == cols_);
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  assert(cols_ == rhs.rows_);
  Matrix p(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& v = at(r, k);
      if (v == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c)
        p.at(r, c) += v * rhs.at(k, c);
    }
  return p;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rational& v) { return v == 0; });
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
  Matrix s(rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < idx.size(); ++j) s.at(r, j) = at(r, idx[j]);
  return s;
}

Matrix Matrix::hcat(const Matrix& rhs) const {
  assert(rows_ == rhs.rows_);
  Matrix h(rows_, cols_ + rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) h.at(r, c) = at(r, c);
    for (std::size_t c = 0; c < rhs.cols_; ++c)
      h.at(r, cols_ + c) = rhs.at(r, c);
  }
  return h;
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a.at(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t c = col; c < a.cols(); ++c)
        std::swap(a.at(p, c), a.at(row, c));
    Rational inv = a.at(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a.at(row, c) /= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a.at(r, col) == 0) continue;
      Rational f = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        a.at(r, c) -= f * a.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivot_columns.size(); }

Matrix kernel_basis(const Matrix& m) {
  auto [red, pivots] = rref(m);
  std::vector<std::size_t> free_cols;
  {
    std::size_t pi = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (pi < pivots.size() && pivots[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  Matrix k(m.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    k.at(free_cols[j], j) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      k.at(pivots[i], j) = -red.at(i, free_cols[j]);
  }
  return k;
}

Matrix column_space_basis(const Matrix& m) {
  return m.select_columns(rref(m).pivot_columns);
}

bool same_column_span(const Matrix& a, const Matrix& b) {
  std::size_t ra = rank(a);
  std::size_t rb = rank(b);
  return ra == rb && rank(a.hcat(b)) == ra;
}

}  // namespace formality
