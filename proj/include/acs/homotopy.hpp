#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "acs/bigrational.hpp"
#include "acs/chernvec.hpp"
#include "acs/cohomology.hpp"
#include "acs/ktheory.hpp"
#include "acs/mpoly.hpp"

namespace acs {

/// A homotopy CP^d (d = 4, 5, 6) up to structure-set torsion, given by its
/// classification parameters. Construct through validate_params.
class HtpyCP {
 public:
  int dim() const { return d_; }
  const BigInt& m() const { return m_; }
  const BigInt& n() const { return n_; }
  const BigInt& q() const { return q_; }  // zero unless d = 6
  std::string str() const;

  friend HtpyCP validate_params(int d, const BigInt& m, const BigInt& n, const std::optional<BigInt>& q);

 private:
  HtpyCP(int d, BigInt m, BigInt n, BigInt q) : d_(d), m_(std::move(m)), n_(std::move(n)), q_(std::move(q)) {}

  int d_;
  BigInt m_, n_, q_;
};

/// The failing constraint, or nullopt when (d, m, n, q) is admissible:
///   d = 4: 4m^2 - 10m - 28n = 0
///   d = 5: m even
///   d = 6: 32m^3 - 252m^2 + 301m - 672mn + 1152n + 1488q = 0
std::optional<std::string> constraint_violation(int d, const BigInt& m, const BigInt& n,
                                                const std::optional<BigInt>& q);
/// Throws ConstraintViolated naming the failing equation.
HtpyCP validate_params(int d, const BigInt& m, const BigInt& n, const std::optional<BigInt>& q = std::nullopt);

/// Reduced stable tangent class TX = (d+1) w + m xi_1 + n xi_2 (+ q xi_3).
KOClass tangent_ko_class(const HtpyCP& x);

/// p_i(X) = p[i-1] u^{2i}.
struct PontrjaginData {
  std::vector<BigRational> p;
  friend bool operator==(const PontrjaginData&, const PontrjaginData&) = default;
};

/// Closed polynomial formulas for p_i in m, n, q (d = 4 uses the form with n
/// eliminated through the constraint, so only m occurs).
std::vector<MPolyQ> pontrjagin_polynomials(int d);
PontrjaginData pontrjagin_closed_form(const HtpyCP& x);
/// p(TX) computed in KO: pontrjagin_total(tangent_ko_class(X)).
PontrjaginData pontrjagin_from_ko(const HtpyCP& x);
/// Both routes; throws InternalCheckFailure if they disagree,
/// UnsupportedDimension for d = 5.
PontrjaginData pontrjagin_of_X(const HtpyCP& x);

/// Completes (c_1 = a, c_3 = c for d = 6) to a full Chern vector satisfying
///   c_{2i}(E + conj E) = (-1)^i p_i(X)  and  c_d = d + 1,
/// or nullopt when some solved entry is not an integer.
/// Throws ZeroFirstChern for a = 0.
std::optional<ChernVector> complete_chern_vector(const HtpyCP& x, const BigInt& a,
                                                 const std::optional<BigInt>& c = std::nullopt);

struct ACSSolution {
  int d = 0;
  BigInt a;
  std::optional<BigInt> c;
  ChernVector full_chern;
  Decomposition decomposition;
};

struct SearchWindow {
  long a_max = 200;
  long c_max = 200;
};

/// 25 + (3/7)(576 m^2 + 240 m).
BigInt cp4_divisor_target(const BigInt& m);
/// Solutions indexed by the signed divisors of cp4_divisor_target; each is
/// confirmed with complete_chern_vector + realizable (InternalCheckFailure
/// otherwise).
std::vector<ACSSolution> acs_search_cp4(const HtpyCP& x);
/// Every a with 0 < |a| <= a_max whose completion exists and is realizable.
std::vector<ACSSolution> acs_direct_cp4(const HtpyCP& x, long a_max);

/// True iff m = 0 mod 3.
bool cp6_exists(const HtpyCP& x);
/// 147 - 8c^2 + (1/31)(-1152m^3 + 931632m^2 + 2488320mn + 262584m - 362880n).
BigRational cp6_divisor_target(const HtpyCP& x, const BigInt& c);
/// The existence criterion on (a, c): congruences mod 16/8 and mod 3, and a
/// dividing cp6_divisor_target.
bool cp6_criterion(const HtpyCP& x, const BigInt& a, const BigInt& c);
/// Criterion solutions in the window, cross-checked against
/// acs_direct_cp6 (InternalCheckFailure on any difference).
std::vector<ACSSolution> acs_search_cp6(const HtpyCP& x, const SearchWindow& w = {});
std::vector<ACSSolution> acs_direct_cp6(const HtpyCP& x, const SearchWindow& w = {});

/// Residue pairs (m, n) mod 31 solving the CP^6 constraint mod 31, by m.
std::vector<std::pair<int, int>> mod31_table();

struct Cp5Report {
  KOClass real_reduction;
  KOClass tangent;
  CohClass total_chern;
  BigInt c5;
  bool reduction_matches = false;
  bool euler_matches = false;
  bool passed() const { return reduction_matches && euler_matches; }
};

struct Cp5Structure {
  KClass e;
  Cp5Report report;
};

/// E = 6L + 12m L^2 + 80n L^3 + 43m L^4 + (-19m - 20n - 6m^2 + 80mn) L^5.
KClass cp5_candidate(const HtpyCP& x);
Cp5Structure cp5_structure(const HtpyCP& x);

struct Cp5Symbolic {
  std::vector<MPolyZ> k;    // k_1..k_5
  MPolyZ k_combination;     // K = k_3 + 2k_4 + 4k_5 + 24m^2 - 10m - 4m k_3
  MPolyZ c5;                // top Chern coefficient of E as a polynomial
  std::vector<MPolyZ> l2_power_series;  // coefficients of c_*(L^2)^{12m}
  BigInt mn_from_k5;        // mn coefficient contributed by 4k_5
  BigInt mn_from_mk3;       // mn coefficient contributed by -4m k_3
  bool k_vanishes = false;
  bool c5_matches = false;  // c_5 - 6 == 6K
  bool passed() const { return k_vanishes && c5_matches; }
};

Cp5Symbolic symbolic_verify_cp5();

/// Q^{-1} C as rational functions v_i = f_i / (den_i a), with the
/// parameters eliminated through the constraint (n for d = 4, q for d = 6).
struct SymbolicNumerators {
  int d = 0;
  std::vector<MPolyZ> f;             // f_1..f_d
  std::vector<BigInt> denominators;  // den_i
  MPolyZ reference;                  // a-free part of the reference row
  std::vector<BigInt> multiples;     // a-free part of f_i = multiples[i] * reference
  std::vector<bool> remainder_divisible;  // a | f_i - multiples[i] * reference
};

/// d = 4 uses row 2 as reference, d = 6 row 1.
SymbolicNumerators symbolic_numerators(int d);
SymbolicNumerators symbolic_cp6_numerators();

}  // namespace acs
