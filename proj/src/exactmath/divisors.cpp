#include "acs/divisors.hpp"

#include <algorithm>
#include <utility>

#include "acs/errors.hpp"

namespace acs {

namespace {

// Prime factorization of n > 0 by trial division.
std::vector<std::pair<BigInt, unsigned>> factor(BigInt n) {
  std::vector<std::pair<BigInt, unsigned>> out;
  auto strip = [&](const BigInt& p) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
      ++e;
    }
    if (e) out.emplace_back(p, e);
  };
  strip(2);
  for (BigInt p = 3; p * p <= n; p += 2) strip(p);
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<BigInt> positive_divisors(const BigInt& n) {
  std::vector<BigInt> out = {1};
  for (const auto& [p, e] : factor(n)) {
    const std::size_t base = out.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<BigInt> divisors_signed(const BigInt& n) {
  if (n == 0) throw ZeroArgument("cannot enumerate the divisors of 0");
  const auto pos = positive_divisors(abs(n));
  std::vector<BigInt> out;
  out.reserve(2 * pos.size());
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) out.push_back(-*it);
  out.insert(out.end(), pos.begin(), pos.end());
  return out;
}

}  // namespace acs
