#include <algorithm>
#include <array>
#include <sstream>

#include "acs/divisors.hpp"
#include "acs/errors.hpp"
#include "acs/homotopy.hpp"
#include "internal.hpp"

namespace acs {

namespace {

void require_dim(const HtpyCP& x, int d) {
  if (x.dim() != d) {
    throw UnsupportedDimension("expected a homotopy CP^" + std::to_string(d) + ", got " + x.str());
  }
}

std::optional<ACSSolution> try_solution(int d, const std::vector<BigInt>& p, const BigInt& a,
                                        const std::optional<BigInt>& c) {
  std::vector<BigInt> odd{a};
  if (c) odd.push_back(*c);
  auto v = detail::complete_from_pontrjagin(d, p, odd);
  if (!v) return std::nullopt;
  auto dec = realizable(*v);
  if (!dec) return std::nullopt;
  return ACSSolution{d, a, c, std::move(*v), std::move(*dec)};
}

bool same_keys(const std::vector<ACSSolution>& x, const std::vector<ACSSolution>& y) {
  return std::equal(x.begin(), x.end(), y.begin(), y.end(),
                    [](const ACSSolution& s, const ACSSolution& t) { return s.a == t.a && s.c == t.c; });
}

std::string keys_str(const std::vector<ACSSolution>& xs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < xs.size() && i < 20; ++i) {
    os << (i ? " " : "") << '(' << xs[i].a;
    if (xs[i].c) os << ',' << *xs[i].c;
    os << ')';
  }
  if (xs.size() > 20) os << " ...";
  os << '}';
  return os.str();
}

}  // namespace

BigInt cp4_divisor_target(const BigInt& m) {
  const BigInt num = 3 * (576 * m * m + 240 * m);
  if (!mpz_divisible_ui_p(num.get_mpz_t(), 7)) {
    throw NotDivisible("divisor target is not integral for m = " + m.get_str());
  }
  return 25 + num / 7;
}

std::vector<ACSSolution> acs_search_cp4(const HtpyCP& x) {
  require_dim(x, 4);
  const auto p = detail::integral_pontrjagin(x);
  const BigInt target = cp4_divisor_target(x.m());
  std::vector<ACSSolution> out;
  for (const auto& a : divisors_signed(target)) {
    auto s = try_solution(4, p, a, std::nullopt);
    if (!s) {
      throw InternalCheckFailure("a = " + a.get_str() + " divides " + target.get_str() +
                                 " but Q^{-1}C is not integral for " + x.str());
    }
    out.push_back(std::move(*s));
  }
  return out;
}

std::vector<ACSSolution> acs_direct_cp4(const HtpyCP& x, long a_max) {
  require_dim(x, 4);
  const auto p = detail::integral_pontrjagin(x);
  std::vector<ACSSolution> out;
  for (long a = -a_max; a <= a_max; ++a) {
    if (a == 0) continue;
    if (auto s = try_solution(4, p, BigInt(a), std::nullopt)) out.push_back(std::move(*s));
  }
  return out;
}

bool cp6_exists(const HtpyCP& x) {
  require_dim(x, 6);
  return mpz_divisible_ui_p(x.m().get_mpz_t(), 3) != 0;
}

BigRational cp6_divisor_target(const HtpyCP& x, const BigInt& c) {
  require_dim(x, 6);
  const BigInt& m = x.m();
  const BigInt& n = x.n();
  const BigInt tail = -1152 * m * m * m + 931632 * m * m + 2488320 * m * n + 262584 * m - 362880 * n;
  return BigRational(147 - 8 * c * c) + BigRational(tail, 31);
}

bool cp6_criterion(const HtpyCP& x, const BigInt& a, const BigInt& c) {
  if (!cp6_exists(x) || a == 0) return false;
  static constexpr std::array<std::pair<int, int>, 4> kResidues{{{1, 1}, {7, 3}, {9, 5}, {15, 7}}};
  const auto a16 = mod_floor(a, 16).get_si();
  const auto c8 = mod_floor(c, 8).get_si();
  const bool congruent = std::any_of(kResidues.begin(), kResidues.end(),
                                     [&](const auto& r) { return r.first == a16 && r.second == c8; });
  if (!congruent) return false;
  if (mod_floor(a, 3) == 0 || mod_floor(c, 3) == 0) return false;
  const BigRational target = cp6_divisor_target(x, c);
  if (!target.is_integer()) return false;
  return mpz_divisible_p(target.num().get_mpz_t(), a.get_mpz_t()) != 0;
}

std::vector<ACSSolution> acs_direct_cp6(const HtpyCP& x, const SearchWindow& w) {
  require_dim(x, 6);
  const auto p = detail::integral_pontrjagin(x);
  std::vector<ACSSolution> out;
  for (long a = -w.a_max; a <= w.a_max; ++a) {
    if (a == 0) continue;
    for (long c = -w.c_max; c <= w.c_max; ++c)
      if (auto s = try_solution(6, p, BigInt(a), BigInt(c))) out.push_back(std::move(*s));
  }
  return out;
}

std::vector<ACSSolution> acs_search_cp6(const HtpyCP& x, const SearchWindow& w) {
  require_dim(x, 6);
  const auto p = detail::integral_pontrjagin(x);
  std::vector<ACSSolution> out;
  for (long a = -w.a_max; a <= w.a_max; ++a) {
    if (a == 0) continue;
    for (long c = -w.c_max; c <= w.c_max; ++c) {
      if (!cp6_criterion(x, BigInt(a), BigInt(c))) continue;
      auto s = try_solution(6, p, BigInt(a), BigInt(c));
      if (!s) {
        throw InternalCheckFailure("criterion admits (a, c) = (" + std::to_string(a) + ", " + std::to_string(c) +
                                   ") but Q^{-1}C is not integral for " + x.str());
      }
      out.push_back(std::move(*s));
    }
  }
  const auto direct = acs_direct_cp6(x, w);
  if (!same_keys(out, direct)) {
    throw InternalCheckFailure("criterion set " + keys_str(out) + " differs from direct set " + keys_str(direct) +
                               " for " + x.str());
  }
  return out;
}

std::vector<std::pair<int, int>> mod31_table() {
  std::vector<std::pair<int, int>> out;
  for (long m = 0; m < 31; ++m)
    for (long n = 0; n < 31; ++n) {
      const long v = 32 * m * m * m - 252 * m * m + 301 * m - 672 * m * n + 1152 * n;
      if (v % 31 == 0) out.emplace_back(static_cast<int>(m), static_cast<int>(n));
    }
  return out;
}

KClass cp5_candidate(const HtpyCP& x) {
  require_dim(x, 5);
  const BigInt& m = x.m();
  const BigInt& n = x.n();
  return KClass(5, {0, 6, 12 * m, 80 * n, 43 * m, -19 * m - 20 * n - 6 * m * m + 80 * m * n});
}

Cp5Structure cp5_structure(const HtpyCP& x) {
  KClass e = cp5_candidate(x);
  Cp5Report report{real_reduce(e), tangent_ko_class(x), total_chern(e), 0};
  report.c5 = report.total_chern.integer_coeff(5);
  report.reduction_matches = report.real_reduction == report.tangent;
  report.euler_matches = report.c5 == 6;
  return Cp5Structure{std::move(e), std::move(report)};
}

}  // namespace acs
