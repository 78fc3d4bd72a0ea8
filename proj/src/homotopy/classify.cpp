#include <sstream>

#include "acs/errors.hpp"
#include "acs/homotopy.hpp"
#include "internal.hpp"

namespace acs {

std::string HtpyCP::str() const {
  std::ostringstream os;
  os << "X_{" << m_ << "," << n_;
  if (d_ == 6) os << "," << q_;
  os << "} (d=" << d_ << ")";
  return os.str();
}

std::optional<std::string> constraint_violation(int d, const BigInt& m, const BigInt& n,
                                                const std::optional<BigInt>& q) {
  switch (d) {
    case 4:
      if (q && *q != 0) return "d=4 takes no q parameter";
      if (4 * m * m - 10 * m - 28 * n != 0) return "4m^2 - 10m - 28n = 0";
      return std::nullopt;
    case 5:
      if (q && *q != 0) return "d=5 takes no q parameter";
      if (mpz_odd_p(m.get_mpz_t())) return "m even";
      return std::nullopt;
    case 6: {
      const BigInt qq = q.value_or(0);
      if (32 * m * m * m - 252 * m * m + 301 * m - 672 * m * n + 1152 * n + 1488 * qq != 0) {
        return "32m^3 - 252m^2 + 301m - 672mn + 1152n + 1488q = 0";
      }
      return std::nullopt;
    }
    default:
      throw UnsupportedDimension("homotopy CP^d is only classified here for d in {4, 5, 6}");
  }
}

HtpyCP validate_params(int d, const BigInt& m, const BigInt& n, const std::optional<BigInt>& q) {
  if (auto bad = constraint_violation(d, m, n, q)) {
    throw ConstraintViolated("constraint violated: " + *bad);
  }
  return HtpyCP(d, m, n, d == 6 ? q.value_or(0) : BigInt(0));
}

KOClass tangent_ko_class(const HtpyCP& x) {
  const int d = x.dim();
  const BigInt& m = x.m();
  const BigInt& n = x.n();
  switch (d) {
    case 4:  // xi_1 = 24w + 98w^2, xi_2 = 240w^2
      return KOClass(4, {0, 5 + 24 * m, 98 * m + 240 * n});
    case 5:  // xi_1 = 24w + 98w^2 + w^3, xi_2 = 240w^2
      return KOClass(5, {0, 6 + 24 * m, 98 * m + 240 * n, m});
    default:  // xi_1 = 24w + 98w^2 + 111w^3, xi_2 = 240w^2 + 380w^3, xi_3 = 504w^3
      return KOClass(6, {0, 7 + 24 * m, 98 * m + 240 * n, 111 * m + 380 * n + 504 * x.q()});
  }
}

std::vector<MPolyQ> pontrjagin_polynomials(int d) {
  switch (d) {
    case 4:
      return {MPolyQ::parse("5 + 24m"), MPolyQ::parse("10 + 576/7m^2 + 240/7m")};
    case 6:
      return {MPolyQ::parse("7 + 24m"), MPolyQ::parse("21 + 288m^2 - 432m - 1440n"),
              MPolyQ::parse("35 + 2304m^3 - 12384m^2 + 11592m - 34560mn + 40320n + 60480q")};
    default:
      throw UnsupportedDimension("Pontrjagin classes are only computed for d = 4, 6");
  }
}

namespace {

BigRational evaluate(const MPolyQ& p, const HtpyCP& x) {
  MPolyQ r = p.substitute(Var::m, BigRational(x.m()))
                 .substitute(Var::n, BigRational(x.n()))
                 .substitute(Var::q, BigRational(x.q()));
  if (r.size() > 1) throw InternalCheckFailure("polynomial did not evaluate to a constant");
  return r.coefficient(Monomial{});
}

}  // namespace

PontrjaginData pontrjagin_closed_form(const HtpyCP& x) {
  PontrjaginData out;
  for (const auto& poly : pontrjagin_polynomials(x.dim())) out.p.push_back(evaluate(poly, x));
  return out;
}

PontrjaginData pontrjagin_from_ko(const HtpyCP& x) {
  const int d = x.dim();
  if (d == 5) throw UnsupportedDimension("Pontrjagin classes are only computed for d = 4, 6");
  const CohClass p = pontrjagin_total(tangent_ko_class(x));
  PontrjaginData out;
  for (int i = 1; 2 * i <= d; ++i) out.p.push_back(p[2 * i]);
  return out;
}

PontrjaginData pontrjagin_of_X(const HtpyCP& x) {
  auto closed = pontrjagin_closed_form(x);
  const auto ko = pontrjagin_from_ko(x);
  if (closed != ko) {
    throw InternalCheckFailure("Pontrjagin closed form disagrees with the KO computation for " + x.str());
  }
  return closed;
}

namespace detail {

// Solves the Chern relations degree by degree in exact integer arithmetic.
// p holds the integer Pontrjagin numbers p_1..p_{d/2}; odd_inputs holds
// c_1, c_3, ..., c_{d-3}.
std::optional<ChernVector> complete_from_pontrjagin(int d, const std::vector<BigInt>& p,
                                                    const std::vector<BigInt>& odd_inputs) {
  std::vector<BigInt> c(static_cast<std::size_t>(d) + 1);
  c[0] = 1;
  for (std::size_t j = 0; j < odd_inputs.size(); ++j) c[2 * j + 1] = odd_inputs[j];
  c[static_cast<std::size_t>(d)] = d + 1;
  const BigInt& a = c[1];
  BigInt acc;
  for (int i = 1; 2 * i <= d; ++i) {
    const int deg = 2 * i;
    // sum_{k=0}^{deg} (-1)^k c_{deg-k} c_k = (-1)^i p_i
    BigInt rhs = p[static_cast<std::size_t>(i - 1)];
    if (i % 2) rhs = -rhs;
    if (deg < d) {
      // unknown c_deg enters twice (k = 0 and k = deg) with coefficient +1
      acc = 0;
      for (int k = 1; k < deg; ++k) {
        BigInt t = c[static_cast<std::size_t>(deg - k)] * c[static_cast<std::size_t>(k)];
        if (k % 2) acc -= t; else acc += t;
      }
      BigInt num = rhs - acc;
      if (!mpz_divisible_ui_p(num.get_mpz_t(), 2)) return std::nullopt;
      mpz_divexact_ui(c[static_cast<std::size_t>(deg)].get_mpz_t(), num.get_mpz_t(), 2);
    } else {
      // unknown c_{d-1} enters at k = 1 and k = d - 1, each as -c_1 c_{d-1}
      acc = 0;
      for (int k = 0; k <= deg; ++k) {
        if (k == 1 || k == deg - 1) continue;
        BigInt t = c[static_cast<std::size_t>(deg - k)] * c[static_cast<std::size_t>(k)];
        if (k % 2) acc -= t; else acc += t;
      }
      BigInt num = acc - rhs;
      const BigInt den = 2 * a;
      if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return std::nullopt;
      mpz_divexact(c[static_cast<std::size_t>(d - 1)].get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  return ChernVector(d, std::vector<BigInt>(c.begin() + 1, c.end()));
}

std::vector<BigInt> integral_pontrjagin(const HtpyCP& x) {
  std::vector<BigInt> p;
  for (const auto& v : pontrjagin_of_X(x).p) p.push_back(v.to_integer());
  return p;
}

}  // namespace detail

std::optional<ChernVector> complete_chern_vector(const HtpyCP& x, const BigInt& a,
                                                 const std::optional<BigInt>& c) {
  const int d = x.dim();
  if (d != 4 && d != 6) throw UnsupportedDimension("Chern completion applies to d = 4, 6");
  if (a == 0) throw ZeroFirstChern("c_1 = 0 leaves the odd-degree relation unsolvable");
  std::vector<BigInt> odd{a};
  if (d == 6) {
    if (!c) throw UnsupportedOperation("d = 6 needs the c_3 coefficient");
    odd.push_back(*c);
  }
  return detail::complete_from_pontrjagin(d, detail::integral_pontrjagin(x), odd);
}

}  // namespace acs
