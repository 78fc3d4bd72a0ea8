#include "acs/chernvec.hpp"

#include <utility>

#include "acs/errors.hpp"

namespace acs {

ChernVector::ChernVector(int dim, std::vector<BigInt> coeffs) : d(dim), c(std::move(coeffs)) {
  if (dim < 1) throw DimensionMismatch("Chern vectors need d >= 1");
  if (c.size() != static_cast<std::size_t>(dim)) {
    throw DimensionMismatch("Chern vector of dimension " + std::to_string(dim) + " needs " +
                            std::to_string(dim) + " entries, got " + std::to_string(c.size()));
  }
}

CohClass q_vector(const BigInt& m, int d) { return exp_series(m, d); }

RatMatrix w_matrix(int d) {
  if (d < 1) throw DimensionMismatch("w_matrix needs d >= 1");
  const auto n = static_cast<std::size_t>(d) + 1;
  RatMatrix w(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    BigInt p = 1;
    for (std::size_t i = 0; i < n; ++i) {
      w(i, j) = p;
      p *= static_cast<unsigned long>(j);
    }
  }
  return w;
}

RatMatrix q_matrix(int d) {
  if (d < 1) throw DimensionMismatch("q_matrix needs d >= 1");
  const auto n = static_cast<std::size_t>(d);
  RatMatrix q(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    BigInt p = static_cast<unsigned long>(j + 1);
    for (std::size_t i = 0; i < n; ++i) {
      q(i, j) = p;
      p *= static_cast<unsigned long>(j + 1);
    }
  }
  return q;
}

RatVector moment_vector(const BigInt& m, int d) {
  RatVector b;
  BigInt p = 1;
  for (int i = 0; i <= d; ++i) {
    b.emplace_back(p);
    p *= m;
  }
  return b;
}

RatVector closed_form_w(const BigInt& m, int d) {
  if (d < 1) throw DimensionMismatch("closed_form_w needs d >= 1");
  const long n = d + 1;
  const BigInt nfact = factorial(static_cast<unsigned long>(n - 1));
  RatVector w;
  w.reserve(static_cast<std::size_t>(n));
  for (long k = 1; k <= n; ++k) {
    BigInt prod = 1;
    for (long j = 0; j < n; ++j)
      if (j != k - 1) prod *= m - j;
    BigInt numer = binomial(BigInt(n - 1), k - 1) * prod;
    if ((n - k) % 2) numer = -numer;
    w.emplace_back(numer, nfact);
  }
  return w;
}

std::vector<BigInt> power_sums_from_chern(const ChernVector& v) {
  return newton_power_sums<BigInt>(v.c);
}

RatVector solve_multiplicities(const ChernVector& v) {
  const auto s = power_sums_from_chern(v);
  const RatVector rhs(s.begin(), s.end());
  return solve_exact(q_matrix(v.d), rhs);
}

std::optional<Decomposition> realizable(const ChernVector& v) {
  const auto x = solve_multiplicities(v);
  Decomposition out;
  out.a.reserve(x.size());
  for (const auto& e : x) {
    if (!e.is_integer()) return std::nullopt;
    out.a.push_back(e.num());
  }
  return out;
}

ChernVector chern_from_multiplicities(const Decomposition& a) {
  const int d = static_cast<int>(a.a.size());
  if (d < 1) throw DimensionMismatch("empty decomposition");
  CohClass total = CohClass::one(d);
  for (int k = 1; k <= d; ++k) {
    const auto& e = a.a[static_cast<std::size_t>(k - 1)];
    if (e == 0) continue;
    const CohClass line = CohClass::one(d) + BigRational(k) * CohClass::generator(d);
    total = total * coh_pow(line, e);
  }
  std::vector<BigInt> c;
  for (int k = 1; k <= d; ++k) c.push_back(total.integer_coeff(k));
  return ChernVector(d, std::move(c));
}

}  // namespace acs
