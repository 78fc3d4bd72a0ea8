#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "acs/bigrational.hpp"

namespace acs {

using RatVector = std::vector<BigRational>;

/// Dense row-major matrix of exact rationals. Integrality is a query, not a type.
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<BigRational> entries);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  BigRational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const BigRational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  RatVector column(std::size_t j) const;
  RatMatrix transpose() const;
  bool is_integral() const;
  std::string str() const;

  friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y);
  friend RatVector operator*(const RatMatrix& x, std::span<const BigRational> v);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigRational> entries_;
};

/// Solves M x = b exactly. Rows are scaled to integers and eliminated with
/// fraction-free (Bareiss) steps; only back substitution touches rationals.
/// Throws SingularMatrix when det M = 0.
RatVector solve_exact(const RatMatrix& m, std::span<const BigRational> b);

RatMatrix inverse(const RatMatrix& m);
BigRational determinant(const RatMatrix& m);

/// Rows (1, x_i, x_i^2, ..., x_i^{n-1}).
RatMatrix vandermonde(std::span<const BigInt> nodes);

/// Inverse of vandermonde(nodes) from the closed form
///   c_ij = (-1)^{n-i} sigma_{n-i}(x_1..^x_j..x_n) / prod_{l != j} (x_j - x_l).
/// Throws DuplicateNodes when two nodes coincide.
RatMatrix vandermonde_inverse(std::span<const BigInt> nodes);

/// q-th elementary symmetric polynomial of values; sigma_0 = 1.
BigInt elem_sym(std::span<const BigInt> values, std::size_t q);

}  // namespace acs
