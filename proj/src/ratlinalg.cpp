#include "eta42/ratlinalg.hpp"

#include <numeric>
#include <string>
#include <utility>

namespace eta42 {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw std::invalid_argument("matrix entries: expected " + std::to_string(rows * cols) + ", got " +
                                std::to_string(entries_.size()));
  }
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

std::vector<Rational> RationalMatrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  std::vector<Rational> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  }
  return y;
}

namespace {

struct Echelon {
  RationalMatrix m;
  std::vector<std::size_t> row_origin;  // original index of each working row
  std::vector<std::size_t> pivot_cols;  // pivot column of row r, for r < rank
};

// Reduced row echelon form over the first `pivot_limit` columns. Remaining
// columns (an augmented right-hand side) are carried along.
Echelon reduce(RationalMatrix m, std::size_t pivot_limit) {
  Echelon e{std::move(m), {}, {}};
  auto& a = e.m;
  e.row_origin.resize(a.rows());
  std::iota(e.row_origin.begin(), e.row_origin.end(), std::size_t{0});

  std::size_t row = 0;
  Rational factor;
  for (std::size_t col = 0; col < pivot_limit && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(row, j));
      std::swap(e.row_origin[pivot], e.row_origin[row]);
    }
    const Rational inv = 1 / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || sgn(a(i, col)) == 0) continue;
      factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= factor * a(row, j);
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  return e;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) { return reduce(m, m.cols()).pivot_cols.size(); }

std::vector<Rational> solve(const RationalMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side length must equal row count");
  const std::size_t n = a.cols();
  RationalMatrix augmented(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented(i, j) = a(i, j);
    augmented(i, n) = b[i];
  }

  const Echelon e = reduce(std::move(augmented), n);
  const std::size_t r = e.pivot_cols.size();

  // Zero rows below the rank must have a zero right-hand side.
  std::size_t first_bad = a.rows();
  for (std::size_t i = r; i < a.rows(); ++i) {
    if (sgn(e.m(i, n)) != 0) first_bad = std::min(first_bad, e.row_origin[i]);
  }
  if (first_bad != a.rows()) {
    throw InconsistentSystem(first_bad, "inconsistent linear system: equation " + std::to_string(first_bad) +
                                            " cannot be satisfied");
  }
  if (r < n) {
    throw RankDeficientSystem(r, "linear system has rank " + std::to_string(r) + " < " + std::to_string(n) +
                                     " unknowns; solution is not unique");
  }

  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < r; ++i) x[e.pivot_cols[i]] = e.m(i, n);

  const auto residual = a.apply(x);
  for (std::size_t i = 0; i < residual.size(); ++i) {
    if (residual[i] != b[i]) {
      throw std::logic_error("solve: nonzero residual at equation " + std::to_string(i));
    }
  }
  return x;
}

}  // namespace eta42
