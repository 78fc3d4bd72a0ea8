#include "acs/matrix.hpp"

#include <sstream>
#include <utility>

#include "acs/errors.hpp"

namespace acs {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<BigRational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
  if (entries_.size() != rows * cols) {
    throw DimensionMismatch("entry count does not match rows x cols");
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVector RatMatrix::column(std::size_t j) const {
  RatVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RatMatrix::is_integral() const {
  for (const auto& e : entries_)
    if (!e.is_integer()) return false;
  return true;
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
  if (x.cols_ != y.rows_) throw DimensionMismatch("matrix product shape mismatch");
  RatMatrix out(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const auto& xik = x(i, k);
      if (xik.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) out(i, j) += xik * y(k, j);
    }
  return out;
}

RatVector operator*(const RatMatrix& x, std::span<const BigRational> v) {
  if (x.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  RatVector out(x.rows_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t j = 0; j < x.cols_; ++j) out[i] += x(i, j) * v[j];
  return out;
}

namespace {

// Augmented integer system [A | B] obtained by scaling each row of [M | b]
// by the lcm of its denominators. Row scaling leaves the solution unchanged.
std::vector<std::vector<BigInt>> integer_rows(const RatMatrix& m,
                                              std::span<const RatVector> rhs) {
  const std::size_t n = m.rows();
  std::vector<std::vector<BigInt>> rows(n, std::vector<BigInt>(n + rhs.size()));
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).raw().get_den_mpz_t());
    for (const auto& b : rhs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b[i].raw().get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = (m(i, j) * BigRational(l)).to_integer();
    for (std::size_t k = 0; k < rhs.size(); ++k) rows[i][n + k] = (rhs[k][i] * BigRational(l)).to_integer();
  }
  return rows;
}

// In-place Bareiss elimination to upper-triangular form. Returns the sign of
// the row permutation, or 0 if the leading n x n block is singular.
int bareiss(std::vector<std::vector<BigInt>>& a, std::size_t n) {
  int sign = 1;
  BigInt prev = 1;
  const std::size_t width = a.empty() ? 0 : a[0].size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        BigInt t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign;
}

std::vector<RatVector> solve_many(const RatMatrix& m, std::span<const RatVector> rhs) {
  if (!m.is_square()) throw DimensionMismatch("solve_exact needs a square matrix");
  const std::size_t n = m.rows();
  for (const auto& b : rhs)
    if (b.size() != n) throw DimensionMismatch("right-hand side length differs from matrix rows");

  auto a = integer_rows(m, rhs);
  if (bareiss(a, n) == 0) throw SingularMatrix("matrix is singular");

  std::vector<RatVector> out(rhs.size(), RatVector(n));
  for (std::size_t k = 0; k < rhs.size(); ++k) {
    auto& x = out[k];
    for (std::size_t ii = n; ii-- > 0;) {
      BigRational acc(a[ii][n + k]);
      for (std::size_t j = ii + 1; j < n; ++j) acc -= BigRational(a[ii][j]) * x[j];
      x[ii] = acc / BigRational(a[ii][ii]);
    }
  }
  return out;
}

}  // namespace

RatVector solve_exact(const RatMatrix& m, std::span<const BigRational> b) {
  const RatVector rhs(b.begin(), b.end());
  return solve_many(m, std::span<const RatVector>(&rhs, 1)).front();
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse needs a square matrix");
  const std::size_t n = m.rows();
  std::vector<RatVector> cols;
  cols.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    RatVector e(n);
    e[j] = 1;
    cols.push_back(std::move(e));
  }
  const auto sol = solve_many(m, cols);
  RatMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = sol[j][i];
  return inv;
}

BigRational determinant(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant needs a square matrix");
  const std::size_t n = m.rows();
  // Scale rows to integers, take the Bareiss determinant, then undo the scaling.
  BigRational scale = 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).raw().get_den_mpz_t());
    scale *= BigRational(l);
    for (std::size_t j = 0; j < n; ++j) a[i][j] = (m(i, j) * BigRational(l)).to_integer();
  }
  const int sign = bareiss(a, n);
  if (sign == 0) return 0;
  return BigRational(a[n - 1][n - 1] * sign) / scale;
}

RatMatrix vandermonde(std::span<const BigInt> nodes) {
  const std::size_t n = nodes.size();
  RatMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt p = 1;
    for (std::size_t j = 0; j < n; ++j) {
      v(i, j) = p;
      p *= nodes[i];
    }
  }
  return v;
}

BigInt elem_sym(std::span<const BigInt> values, std::size_t q) {
  if (q > values.size()) throw IndexOutOfRange("elementary symmetric index exceeds variable count");
  // Coefficients of prod (1 + x_i t), truncated at t^q.
  std::vector<BigInt> e(q + 1);
  e[0] = 1;
  for (const auto& x : values)
    for (std::size_t k = q; k >= 1; --k) e[k] += e[k - 1] * x;
  return e[q];
}

RatMatrix vandermonde_inverse(std::span<const BigInt> nodes) {
  const std::size_t n = nodes.size();
  if (n == 0) throw DimensionMismatch("no nodes");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (nodes[i] == nodes[j]) throw DuplicateNodes("nodes must be pairwise distinct");

  RatMatrix inv(n, n);
  std::vector<BigInt> others;
  others.reserve(n - 1);
  for (std::size_t j = 0; j < n; ++j) {
    others.clear();
    BigInt denom = 1;
    for (std::size_t l = 0; l < n; ++l) {
      if (l == j) continue;
      others.push_back(nodes[l]);
      denom *= nodes[j] - nodes[l];
    }
    // 1-based i runs 1..n; the sign and sigma index are n - i.
    for (std::size_t i = 1; i <= n; ++i) {
      const std::size_t q = n - i;
      BigInt numer = elem_sym(others, q);
      if (q % 2 == 1) numer = -numer;
      inv(i - 1, j) = BigRational(numer, denom);
    }
  }
  return inv;
}

}  // namespace acs
