#include "acs/mpoly.hpp"

#include <numeric>

namespace acs {

unsigned total_degree(const Monomial& e) { return std::accumulate(e.begin(), e.end(), 0U); }

std::string monomial_str(const Monomial& e) {
  std::string s;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (e[i] == 0) continue;
    s += kVarNames[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

std::optional<Var> var_from_char(char ch) {
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (kVarNames[i] == ch) return static_cast<Var>(i);
  return std::nullopt;
}

bool GradedLex::operator()(const Monomial& x, const Monomial& y) const {
  const unsigned dx = total_degree(x), dy = total_degree(y);
  if (dx != dy) return dx > dy;
  return x > y;
}

MPolyQ to_rational(const MPolyZ& p) {
  MPolyQ out;
  for (const auto& [e, c] : p.terms()) out += MPolyQ::monomial(BigRational(c), e);
  return out;
}

MPolyZ to_integral(const MPolyQ& p) {
  MPolyZ out;
  for (const auto& [e, c] : p.terms()) out += MPolyZ::monomial(c.to_integer(), e);
  return out;
}

BigInt denominator_lcm(const MPolyQ& p) {
  BigInt l = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
  return l;
}

BigInt content(const MPolyZ& p) {
  BigInt g = 0;
  for (const auto& [e, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

MPolyZ reduce_mod(const MPolyZ& p, unsigned long prime, const ModReduction& how) {
  if (prime < 2) throw ZeroArgument("modulus must be at least 2");
  MPolyZ q = p;
  for (const auto& [v, r] : how.residues) q = q.substitute(v, BigInt(r));
  const BigInt modulus(prime);
  MPolyZ out;
  for (const auto& [e, c] : q.terms()) {
    Monomial r = e;
    for (const Var v : how.fermat_vars) {
      auto& k = r[static_cast<std::size_t>(v)];
      if (k >= prime) k = (k - 1) % (prime - 1) + 1;
    }
    out += MPolyZ::monomial(c, r);
  }
  MPolyZ reduced;
  for (const auto& [e, c] : out.terms()) reduced += MPolyZ::monomial(mod_floor(c, modulus), e);
  return reduced;
}

}  // namespace acs
