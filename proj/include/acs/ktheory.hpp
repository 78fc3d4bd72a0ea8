#pragma once

#include <string>
#include <vector>

#include "acs/bigrational.hpp"
#include "acs/cohomology.hpp"

namespace acs {

/// An element of K(CP^d) = Z[L]/(L^{d+1}), L = H - 1; coeffs[i] multiplies L^i.
class KClass {
 public:
  explicit KClass(int d);
  KClass(int d, std::vector<BigInt> coeffs);

  static KClass one(int d);
  static KClass line(int d);  // L
  /// H^k for any integer k, expanded in powers of L.
  static KClass hopf_power(int d, long k);

  int dim() const { return d_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  bool is_zero() const;
  KClass pow(unsigned k) const;
  std::string str() const;

  KClass& operator+=(const KClass& o);
  KClass& operator-=(const KClass& o);
  friend KClass operator+(KClass x, const KClass& y) { return x += y; }
  friend KClass operator-(KClass x, const KClass& y) { return x -= y; }
  friend KClass operator*(const KClass& x, const KClass& y);
  friend KClass operator*(const BigInt& s, KClass x);
  KClass operator-() const;
  friend bool operator==(const KClass&, const KClass&) = default;

 private:
  int d_;
  std::vector<BigInt> coeffs_;
};

KClass k_mul(const KClass& x, const KClass& y);
/// Complex conjugation t, the ring map with t(L) = (1 + L)^{-1} - 1.
KClass conjugate(const KClass& x);
/// ch(x) with ch(L) = e^u - 1.
CohClass chern_character(const KClass& x);
/// Coefficients y_j with x = sum_j y_j H^j (j = 0..d).
std::vector<BigInt> hopf_expansion(const KClass& x);
/// Total Chern class prod_j (1 + j u)^{y_j} over the H^j expansion.
CohClass total_chern(const KClass& x);
/// Adams operation with psi^k(L) = (1 + L)^k - 1, k >= 1.
KClass adams_k(long k, const KClass& x);

/// An element of KO(CP^d), d in {4, 5, 6}, in Fujii's presentation:
///   d = 4: Z[w]/(w^3),  d = 5: Z[w]/(2w^3, w^4),  d = 6: Z[w]/(w^4),
/// where w = r(L). coeffs[j] multiplies w^j; for d = 5 the w^3 coefficient
/// is kept as its residue in {0, 1}.
class KOClass {
 public:
  explicit KOClass(int d);
  KOClass(int d, std::vector<BigInt> coeffs);

  static KOClass one(int d);
  static KOClass omega(int d);
  /// Highest power of w that survives (2 for d = 4, 3 otherwise).
  static int top_power(int d);

  int dim() const { return d_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& operator[](int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
  bool is_zero() const;
  KOClass pow(unsigned k) const;
  std::string str() const;

  KOClass& operator+=(const KOClass& o);
  KOClass& operator-=(const KOClass& o);
  friend KOClass operator+(KOClass x, const KOClass& y) { return x += y; }
  friend KOClass operator-(KOClass x, const KOClass& y) { return x -= y; }
  friend KOClass operator*(const KOClass& x, const KOClass& y);
  friend KOClass operator*(const BigInt& s, KOClass x);
  friend bool operator==(const KOClass&, const KOClass&) = default;

 private:
  void normalize();

  int d_;
  std::vector<BigInt> coeffs_;
};

KOClass ko_mul(const KOClass& x, const KOClass& y);
/// Complexification c, the ring map with c(w) = L + t(L).
KClass complexify(const KOClass& x);
/// r(L^i) for i = 0..d. For d = 5 this is the table resolved with Adams
/// operations; for d = 4, 6 it is obtained by solving c(y) = L^i + t(L^i),
/// which has a unique solution because c is injective there.
const std::vector<KOClass>& real_reduction_table(int d);
/// Real reduction r, additive extension of real_reduction_table.
KOClass real_reduce(const KClass& x);
/// psi^k on KO with psi^k(w) = r((L + 1)^k - 1). For d = 5 only powers of two
/// are supported; other k raise UnsupportedOperation.
KOClass adams_ko(long k, const KOClass& x);
/// Total Pontrjagin class, p_i = (-1)^i c_{2i}(c(x)). Only d = 4, 6.
CohClass pontrjagin_total(const KOClass& x);

}  // namespace acs
