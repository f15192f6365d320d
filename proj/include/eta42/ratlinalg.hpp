#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "eta42/rational.hpp"

namespace eta42 {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);
  /// Throws std::invalid_argument if entries.size() != rows * cols.
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  RationalMatrix transpose() const;
  /// this * x; x.size() must equal cols().
  std::vector<Rational> apply(std::span<const Rational> x) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

/// a·x = b has no solution. row() is the first equation (original row order)
/// that elimination reduces to 0 = nonzero.
class InconsistentSystem : public std::runtime_error {
 public:
  InconsistentSystem(std::size_t row, const std::string& what) : std::runtime_error(what), row_(row) {}
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

/// a·x = b is consistent but a has rank < cols, so x is not unique.
class RankDeficientSystem : public std::runtime_error {
 public:
  RankDeficientSystem(std::size_t rank, const std::string& what) : std::runtime_error(what), rank_(rank) {}
  std::size_t rank() const { return rank_; }

 private:
  std::size_t rank_;
};

/// Rank by fraction-exact Gaussian elimination.
std::size_t rank(const RationalMatrix& m);

/// Unique solution of a possibly overdetermined system. Pivots are the first
/// nonzero entry in row order. The residual a·x - b is checked to be exactly
/// zero before returning.
std::vector<Rational> solve(const RationalMatrix& a, std::span<const Rational> b);

}  // namespace eta42
