#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "acs/bigrational.hpp"
#include "acs/errors.hpp"

namespace acs {

// Every polynomial in this library lives in Z[a, c, m, n, q] or Q[a, c, m, n, q]:
// a and c are the first and third Chern coefficients, m, n, q the
// classification parameters. Unused variables carry exponent 0.
enum class Var : std::size_t { a = 0, c = 1, m = 2, n = 3, q = 4 };
inline constexpr std::size_t kNumVars = 5;
inline constexpr std::array<char, kNumVars> kVarNames{'a', 'c', 'm', 'n', 'q'};

using Monomial = std::array<unsigned, kNumVars>;

unsigned total_degree(const Monomial& e);
std::string monomial_str(const Monomial& e);
std::optional<Var> var_from_char(char ch);

/// Graded lexicographic order, largest first: higher total degree wins, ties
/// broken by the exponent of a, then c, m, n, q.
struct GradedLex {
  bool operator()(const Monomial& x, const Monomial& y) const;
};

namespace detail {
inline bool coeff_is_zero(const BigInt& x) { return x == 0; }
inline bool coeff_is_zero(const BigRational& x) { return x.is_zero(); }
inline bool coeff_is_one(const BigInt& x) { return x == 1; }
inline bool coeff_is_one(const BigRational& x) { return x == BigRational(1); }
inline bool coeff_is_negative(const BigInt& x) { return x < 0; }
inline bool coeff_is_negative(const BigRational& x) { return x.sign() < 0; }
inline std::string coeff_str(const BigInt& x) { return x.get_str(); }
inline std::string coeff_str(const BigRational& x) {
  return x.is_integer() ? x.str() : "(" + x.str() + ")";
}
inline void parse_coeff(std::string_view s, BigInt& out) { out = parse_bigint(s); }
inline void parse_coeff(std::string_view s, BigRational& out) { out = BigRational::parse(s); }
}  // namespace detail

template <class Coeff>
class MPoly {
 public:
  using Terms = std::map<Monomial, Coeff, GradedLex>;

  MPoly() = default;
  MPoly(const Coeff& constant) { add_term(Monomial{}, constant); }  // NOLINT
  MPoly(long constant) : MPoly(Coeff(constant)) {}                  // NOLINT
  MPoly(int constant) : MPoly(Coeff(static_cast<long>(constant))) {}  // NOLINT

  static MPoly variable(Var v) {
    Monomial e{};
    e[static_cast<std::size_t>(v)] = 1;
    return monomial(Coeff(1L), e);
  }
  static MPoly monomial(const Coeff& c, const Monomial& e) {
    MPoly p;
    p.add_term(e, c);
    return p;
  }
  /// Parses text such as "-5184m^2 - 2160m - 525" or "31a^6 + 2a*c".
  static MPoly parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coefficient(const Monomial& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0L) : it->second;
  }
  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }
  unsigned degree_in(Var v) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(v)]);
    return d;
  }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  friend MPoly operator+(MPoly x, const MPoly& y) { return x += y; }
  friend MPoly operator-(MPoly x, const MPoly& y) { return x -= y; }
  friend MPoly operator*(const MPoly& x, const MPoly& y) {
    MPoly out;
    for (const auto& [ex, cx] : x.terms_)
      for (const auto& [ey, cy] : y.terms_) {
        Monomial e;
        for (std::size_t i = 0; i < kNumVars; ++i) e[i] = ex[i] + ey[i];
        out.add_term(e, cx * cy);
      }
    return out;
  }
  MPoly operator-() const {
    MPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }
  friend bool operator==(const MPoly&, const MPoly&) = default;

  MPoly scalar_mul(const Coeff& s) const {
    MPoly out;
    if (detail::coeff_is_zero(s)) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
    return out;
  }

  MPoly pow(unsigned k) const {
    MPoly result(Coeff(1L)), base = *this;
    while (k) {
      if (k & 1U) result *= base;
      k >>= 1U;
      if (k) base *= base;
    }
    return result;
  }

  /// Replaces v by an arbitrary polynomial.
  MPoly substitute(Var v, const MPoly& value) const {
    const auto idx = static_cast<std::size_t>(v);
    std::map<unsigned, MPoly> powers;
    MPoly out;
    for (const auto& [e, c] : terms_) {
      Monomial rest = e;
      rest[idx] = 0;
      const unsigned k = e[idx];
      auto it = powers.find(k);
      if (it == powers.end()) it = powers.emplace(k, value.pow(k)).first;
      out += monomial(c, rest) * it->second;
    }
    return out;
  }
  MPoly substitute(Var v, const Coeff& value) const { return substitute(v, MPoly(value)); }

  bool divisible_by_variable(Var v) const {
    const auto idx = static_cast<std::size_t>(v);
    for (const auto& [e, c] : terms_)
      if (e[idx] == 0) return false;
    return true;
  }

  /// Exact division by a single variable. Throws NotDivisible when some term
  /// does not contain v.
  MPoly divide_by_variable(Var v) const {
    const auto idx = static_cast<std::size_t>(v);
    MPoly out;
    for (const auto& [e, c] : terms_) {
      if (e[idx] == 0) {
        throw NotDivisible(std::string("term ") + detail::coeff_str(c) + monomial_str(e) +
                           " is not divisible by " + kVarNames[idx]);
      }
      Monomial r = e;
      --r[idx];
      out.terms_.emplace(r, c);
    }
    return out;
  }

  /// Terms in which v does not occur.
  MPoly terms_without(Var v) const {
    const auto idx = static_cast<std::size_t>(v);
    MPoly out;
    for (const auto& [e, c] : terms_)
      if (e[idx] == 0) out.terms_.emplace(e, c);
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      const bool neg = detail::coeff_is_negative(c);
      const Coeff mag = neg ? Coeff(-c) : c;
      if (first) {
        if (neg) s += "-";
      } else {
        s += neg ? " - " : " + ";
      }
      const std::string mono = monomial_str(e);
      if (mono.empty() || !detail::coeff_is_one(mag)) s += detail::coeff_str(mag);
      s += mono;
      first = false;
    }
    return s;
  }

 private:
  void add_term(const Monomial& e, const Coeff& c) {
    if (detail::coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (detail::coeff_is_zero(it->second)) terms_.erase(it);
  }

  Terms terms_;
};

using MPolyZ = MPoly<BigInt>;
using MPolyQ = MPoly<BigRational>;

template <class Coeff>
MPoly<Coeff> MPoly<Coeff>::parse(std::string_view text) {
  MPoly out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto digits = [&] {
    const std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    return text.substr(start, i - start);
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty polynomial");
  bool first = true;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
      neg = text[i] == '-';
      ++i;
      skip_ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-' in polynomial '" + std::string(text) + "'");
    }
    first = false;

    Coeff coeff(1L);
    bool have_coeff = false;
    const auto num = digits();
    if (!num.empty()) {
      std::string lit(num);
      if (i < text.size() && text[i] == '/') {
        ++i;
        const auto den = digits();
        if (den.empty()) throw ParseError("dangling '/' in polynomial");
        lit += "/" + std::string(den);
      }
      detail::parse_coeff(lit, coeff);
      have_coeff = true;
    }
    Monomial e{};
    bool have_var = false;
    while (i < text.size()) {
      if (text[i] == '*') {
        ++i;
        continue;
      }
      const auto v = var_from_char(text[i]);
      if (!v) break;
      ++i;
      unsigned k = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        const auto ex = digits();
        if (ex.empty()) throw ParseError("missing exponent after '^'");
        k = static_cast<unsigned>(std::stoul(std::string(ex)));
      }
      e[static_cast<std::size_t>(*v)] += k;
      have_var = true;
    }
    if (!have_coeff && !have_var) {
      throw ParseError("malformed term in polynomial '" + std::string(text) + "'");
    }
    out.add_term(e, neg ? Coeff(-coeff) : coeff);
  }
  return out;
}

MPolyQ to_rational(const MPolyZ& p);
/// Throws NotDivisible if some coefficient is not an integer.
MPolyZ to_integral(const MPolyQ& p);
/// Least common multiple of the coefficient denominators.
BigInt denominator_lcm(const MPolyQ& p);
/// Greatest common divisor of the coefficients (0 for the zero polynomial).
BigInt content(const MPolyZ& p);

/// How to reduce a polynomial modulo a prime.
struct ModReduction {
  // Variables that range over integers, so x^p may be replaced by x
  // (Fermat). Exponents e >= p become ((e - 1) mod (p - 1)) + 1.
  std::vector<Var> fermat_vars{};
  // Congruences var = residue applied before reducing.
  std::vector<std::pair<Var, long>> residues{};
};

/// Coefficients reduced into [0, p), zero terms dropped.
MPolyZ reduce_mod(const MPolyZ& p, unsigned long prime, const ModReduction& how = {});

}  // namespace acs
