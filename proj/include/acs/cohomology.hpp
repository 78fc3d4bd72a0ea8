#pragma once

#include <span>
#include <string>
#include <vector>

#include "acs/bigrational.hpp"
#include "acs/errors.hpp"

namespace acs {

/// An element of H*(CP^d; Q) = Q[u]/(u^{d+1}); coeffs[i] multiplies u^i.
class CohClass {
 public:
  explicit CohClass(int d);
  CohClass(int d, std::vector<BigRational> coeffs);

  static CohClass one(int d);
  static CohClass generator(int d);  // u
  static CohClass from_integers(int d, std::span<const long> coeffs);

  int dim() const { return d_; }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  const BigRational& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  bool is_integral() const;
  bool is_unit() const { return !coeffs_[0].is_zero(); }
  // Integer coefficient of u^i; throws NotDivisible when non-integral.
  BigInt integer_coeff(int i) const;
  std::string str() const;

  CohClass& operator+=(const CohClass& o);
  CohClass& operator-=(const CohClass& o);
  friend CohClass operator+(CohClass x, const CohClass& y) { return x += y; }
  friend CohClass operator-(CohClass x, const CohClass& y) { return x -= y; }
  friend CohClass operator*(const CohClass& x, const CohClass& y);
  friend CohClass operator*(const BigRational& s, const CohClass& x);
  friend bool operator==(const CohClass&, const CohClass&) = default;

 private:
  int d_;
  std::vector<BigRational> coeffs_;
};

CohClass coh_mul(const CohClass& x, const CohClass& y);
/// y with x y = 1. Throws NonUnit when the constant term is zero.
CohClass coh_invert_unit(const CohClass& x);
/// x^k by repeated squaring; negative k inverts first (NonUnit if impossible).
CohClass coh_pow(const CohClass& x, const BigInt& k);
/// sum_{i=0..d} t^i u^i / i!, the Chern character of a line bundle with c_1 = t u.
CohClass exp_series(const BigInt& t, int d);

/// Coefficients of x*y truncated above u^d, for any commutative coefficient
/// ring R. Used with polynomial coefficients for symbolic series work.
template <class R>
std::vector<R> truncated_product(const std::vector<R>& x, const std::vector<R>& y, int d) {
  std::vector<R> out(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d && i < static_cast<int>(x.size()); ++i)
    for (int j = 0; i + j <= d && j < static_cast<int>(y.size()); ++j)
      out[static_cast<std::size_t>(i + j)] += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
  return out;
}

}  // namespace acs
