#include "acs/bigrational.hpp"

#include <cctype>
#include <ostream>

#include "acs/errors.hpp"

namespace acs {

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(const BigInt& n, long k) {
  if (k < 0) return 0;
  BigInt r;
  // mpz_bin_ui accepts negative n and uses the falling-factorial convention.
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  std::size_t start = 0;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) start = 1;
  if (start == s.size()) throw ParseError("empty integer literal");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ParseError("malformed integer literal '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

BigInt mod_floor(const BigInt& x, const BigInt& p) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  if (r < 0) r += abs(p);
  return r;
}

bool fits_int53(const BigInt& x) {
  static const BigInt limit = (BigInt(1) << 53) - 1;
  return abs(x) <= limit;
}

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ZeroArgument("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_bigint(text));
  return BigRational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

BigInt BigRational::to_integer() const {
  if (!is_integer()) throw NotDivisible("value " + str() + " is not an integer");
  return v_.get_num();
}

std::string BigRational::str() const { return v_.get_str(); }

BigRational& BigRational::operator+=(const BigRational& o) {
  v_ += o.v_;
  return *this;
}
BigRational& BigRational::operator-=(const BigRational& o) {
  v_ -= o.v_;
  return *this;
}
BigRational& BigRational::operator*=(const BigRational& o) {
  v_ *= o.v_;
  return *this;
}
BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw ZeroArgument("division by zero");
  v_ /= o.v_;
  return *this;
}

BigRational BigRational::operator-() const {
  BigRational r;
  r.v_ = -v_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const BigRational& x) { return os << x.str(); }

}  // namespace acs
