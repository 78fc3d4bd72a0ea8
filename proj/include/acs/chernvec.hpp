#pragma once

#include <optional>
#include <span>
#include <vector>

#include "acs/bigrational.hpp"
#include "acs/cohomology.hpp"
#include "acs/matrix.hpp"

namespace acs {

/// Chern classes c_k = c[k-1] u^k, k = 1..d, of a stable class over CP^d.
struct ChernVector {
  int d = 0;
  std::vector<BigInt> c;

  ChernVector() = default;
  ChernVector(int dim, std::vector<BigInt> coeffs);
  friend bool operator==(const ChernVector&, const ChernVector&) = default;
};

/// Multiplicities a_k of q_k = ch(H^k) - 1, k = 1..d, in the Chern character
/// of a reduced class: ch(E) = sum_k a_k q_k + (rank part).
struct Decomposition {
  std::vector<BigInt> a;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// q_m = ch(line bundle with c_1 = m u) = exp(m u).
CohClass q_vector(const BigInt& m, int d);

/// (d+1) x (d+1) matrix with entry j^i in row i, column j (0^0 = 1), so that
/// W a = b(m) expresses q_m in the basis q_0..q_d.
RatMatrix w_matrix(int d);
/// d x d matrix Q_ij = j^i, i, j = 1..d.
RatMatrix q_matrix(int d);
/// b(m) = (1, m, m^2, ..., m^d).
RatVector moment_vector(const BigInt& m, int d);

/// Coefficients of q_m in the basis q_0..q_d from the closed form
///   w_k = (-1)^{n-k} / (n-1)! * C(n-1, k-1) * prod_{j != k-1, 0 <= j < n} (m - j),
/// with n = d + 1 and k = 1..n.
RatVector closed_form_w(const BigInt& m, int d);

/// Power sums s_i of the Chern roots from the Chern classes via Newton:
///   s_i = c_1 s_{i-1} - c_2 s_{i-2} + ... + (-1)^{i-1} i c_i.
/// Works over any commutative ring T constructible from long.
template <class T>
std::vector<T> newton_power_sums(std::span<const T> c) {
  const std::size_t d = c.size();
  std::vector<T> s(d);
  for (std::size_t i = 1; i <= d; ++i) {
    T acc(0L);
    for (std::size_t j = 1; j < i; ++j) {
      T term = c[j - 1] * s[i - j - 1];
      if (j % 2 == 0) term = -term;
      acc += term;
    }
    T last = c[i - 1] * T(static_cast<long>(i));
    if (i % 2 == 0) last = -last;
    acc += last;
    s[i - 1] = acc;
  }
  return s;
}

/// C(E): entry i is i! ch_{2i}(E), expressed through the Chern classes.
std::vector<BigInt> power_sums_from_chern(const ChernVector& v);

/// The exact solution a of Q a = C(v) (possibly non-integral).
RatVector solve_multiplicities(const ChernVector& v);

/// The integral decomposition of v, or nullopt when Q^{-1} C(v) is not
/// integral (v is not the Chern vector of any class).
std::optional<Decomposition> realizable(const ChernVector& v);

/// Chern vector of sum_k a_k (H^k - 1), i.e. prod_k (1 + k u)^{a_k}.
ChernVector chern_from_multiplicities(const Decomposition& a);

}  // namespace acs
