#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace acs {

using BigInt = mpz_class;

BigInt factorial(unsigned long n);
// Binomial coefficient C(n, k) for integer n (any sign) and k >= 0, using the
// falling-factorial definition n(n-1)...(n-k+1)/k!. Zero when k < 0.
BigInt binomial(const BigInt& n, long k);
BigInt parse_bigint(std::string_view text);
// Euclidean residue in [0, p).
BigInt mod_floor(const BigInt& x, const BigInt& p);
bool fits_int53(const BigInt& x);

/// Exact rational number in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(int v) : v_(static_cast<long>(v)) {}  // NOLINT
  BigRational(const BigInt& v) : v_(v) {}  // NOLINT
  BigRational(const BigInt& num, const BigInt& den);

  static BigRational parse(std::string_view text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  // Throws NotDivisible when the value is not integral.
  BigInt to_integer() const;
  std::string str() const;

  BigRational& operator+=(const BigRational& o);
  BigRational& operator-=(const BigRational& o);
  BigRational& operator*=(const BigRational& o);
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational x, const BigRational& y) { return x += y; }
  friend BigRational operator-(BigRational x, const BigRational& y) { return x -= y; }
  friend BigRational operator*(BigRational x, const BigRational& y) { return x *= y; }
  friend BigRational operator/(BigRational x, const BigRational& y) { return x /= y; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& x, const BigRational& y) { return cmp(x.v_, y.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigRational& x, const BigRational& y) {
    const int c = cmp(x.v_, y.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& x);

}  // namespace acs
