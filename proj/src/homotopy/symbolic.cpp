#include "acs/errors.hpp"
#include "acs/homotopy.hpp"

namespace acs {

namespace {

const MPolyQ kA = MPolyQ::variable(Var::a);
const MPolyQ kC = MPolyQ::variable(Var::c);
const MPolyQ kM = MPolyQ::variable(Var::m);
const MPolyQ kN = MPolyQ::variable(Var::n);

MPolyQ half(const MPolyQ& p) { return p.scalar_mul(BigRational(1, 2)); }

// binom(k, j) = k (k-1) ... (k-j+1) / j! as a polynomial in the variables of k.
MPolyQ binomial_poly(const MPolyQ& k, int j) {
  MPolyQ out(BigRational(1));
  for (int t = 0; t < j; ++t) out *= k - MPolyQ(BigRational(t));
  return out.scalar_mul(BigRational(1, factorial(static_cast<unsigned long>(j))));
}

// (1 + y)^k = sum_j binom(k, j) y^j for a series y without constant term.
std::vector<MPolyQ> series_power(const std::vector<MPolyQ>& one_plus_y, const MPolyQ& k, int d) {
  std::vector<MPolyQ> y = one_plus_y;
  y[0] = MPolyQ();
  std::vector<MPolyQ> out(static_cast<std::size_t>(d) + 1), yj(static_cast<std::size_t>(d) + 1);
  yj[0] = MPolyQ(BigRational(1));
  for (int j = 0; j <= d; ++j) {
    const MPolyQ b = binomial_poly(k, j);
    for (int i = 0; i <= d; ++i) out[static_cast<std::size_t>(i)] += b * yj[static_cast<std::size_t>(i)];
    yj = truncated_product(yj, y, d);
  }
  return out;
}

std::vector<MPolyQ> lift(const CohClass& x) {
  std::vector<MPolyQ> out;
  for (const auto& c : x.coeffs()) out.emplace_back(c);
  return out;
}

}  // namespace

Cp5Symbolic symbolic_verify_cp5() {
  Cp5Symbolic out;
  const MPolyZ m = MPolyZ::variable(Var::m);
  const MPolyZ n = MPolyZ::variable(Var::n);
  out.k = {MPolyZ(6), 12 * m, 80 * n, 43 * m, MPolyZ::parse("-19m - 20n - 6m^2 + 80mn")};
  const auto& k = out.k;

  const MPolyZ four_k5 = k[4].scalar_mul(4);
  const MPolyZ minus_4mk3 = (m * k[2]).scalar_mul(-4);
  out.k_combination = k[2] + k[3].scalar_mul(2) + four_k5 + MPolyZ::parse("24m^2 - 10m") + minus_4mk3;
  Monomial mn{};
  mn[static_cast<std::size_t>(Var::m)] = 1;
  mn[static_cast<std::size_t>(Var::n)] = 1;
  out.mn_from_k5 = four_k5.coefficient(mn);
  out.mn_from_mk3 = minus_4mk3.coefficient(mn);
  out.k_vanishes = out.k_combination.is_zero();

  constexpr int d = 5;
  std::vector<MPolyQ> total(d + 1);
  total[0] = MPolyQ(BigRational(1));
  for (int i = 1; i <= d; ++i) {
    const auto base = lift(total_chern(KClass::line(d).pow(static_cast<unsigned>(i))));
    const auto factor = series_power(base, to_rational(k[static_cast<std::size_t>(i - 1)]), d);
    if (i == 2) {
      for (const auto& c : factor) out.l2_power_series.push_back(to_integral(c));
    }
    total = truncated_product(total, factor, d);
  }
  out.c5 = to_integral(total[d]);
  out.c5_matches = out.c5 - MPolyZ(6) == out.k_combination.scalar_mul(6);
  return out;
}

SymbolicNumerators symbolic_numerators(int d) {
  if (d != 4 && d != 6) throw UnsupportedDimension("symbolic numerators exist for d = 4, 6");
  auto p = pontrjagin_polynomials(d);
  if (d == 6) {
    const MPolyQ q = MPolyQ::parse("-32m^3 + 252m^2 - 301m + 672mn - 1152n").scalar_mul(BigRational(1, 1488));
    for (auto& pi : p) pi = pi.substitute(Var::q, q);
  }

  // Chern classes c_1..c_d with the (d-1)-st left symbolic: a c_{d-1} = top.
  std::vector<MPolyQ> c(static_cast<std::size_t>(d));
  c[0] = kA;
  c[1] = half(kA * kA - p[0]);
  MPolyQ top;
  if (d == 4) {
    c[3] = MPolyQ(BigRational(5));
    top = half(c[3].scalar_mul(2) + c[1] * c[1] - p[1]);
  } else {
    c[2] = kC;
    c[3] = kA * kC + half(p[1] - c[1] * c[1]);
    c[5] = MPolyQ(BigRational(7));
    top = half(MPolyQ(BigRational(14)) + (c[1] * c[3]).scalar_mul(2) - kC * kC + p[2]);
  }

  // Power sums are affine in c_{d-1} through degree d.
  auto with = [&](long value) {
    auto cc = c;
    cc[static_cast<std::size_t>(d - 2)] = MPolyQ(BigRational(value));
    return newton_power_sums<MPolyQ>(cc);
  };
  const auto s0 = with(0);
  const auto s1 = with(1);
  std::vector<MPolyQ> a_s(static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < a_s.size(); ++i) a_s[i] = kA * s0[i] + (s1[i] - s0[i]) * top;

  const RatMatrix qinv = inverse(q_matrix(d));
  SymbolicNumerators out;
  out.d = d;
  for (std::size_t i = 0; i < a_s.size(); ++i) {
    MPolyQ row;
    for (std::size_t j = 0; j < a_s.size(); ++j) row += a_s[j].scalar_mul(qinv(i, j));
    const BigInt den = denominator_lcm(row);
    out.denominators.push_back(den);
    out.f.push_back(to_integral(row.scalar_mul(BigRational(den))));
  }

  const std::size_t ref = d == 4 ? 1 : 0;
  out.reference = out.f[ref].terms_without(Var::a);
  if (out.reference.is_zero()) throw InternalCheckFailure("reference row has no a-free terms");
  const auto& [lead, lead_coeff] = *out.reference.terms().begin();
  for (const auto& fi : out.f) {
    const MPolyZ free = fi.terms_without(Var::a);
    const BigInt num = free.coefficient(lead);
    if (!mpz_divisible_p(num.get_mpz_t(), lead_coeff.get_mpz_t())) {
      throw InternalCheckFailure("a-free part of a numerator is not a multiple of the reference");
    }
    const BigInt k = num / lead_coeff;
    if (free != out.reference.scalar_mul(k)) {
      throw InternalCheckFailure("a-free part of a numerator is not a multiple of the reference");
    }
    out.multiples.push_back(k);
    out.remainder_divisible.push_back((fi - out.reference.scalar_mul(k)).divisible_by_variable(Var::a));
  }
  return out;
}

SymbolicNumerators symbolic_cp6_numerators() { return symbolic_numerators(6); }

}  // namespace acs
