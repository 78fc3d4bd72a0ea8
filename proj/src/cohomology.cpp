#include "acs/cohomology.hpp"

#include <sstream>
#include <utility>

namespace acs {

namespace {

void check_dim(int d) {
  if (d < 0) throw DimensionMismatch("cohomology truncation must be non-negative");
}

}  // namespace

CohClass::CohClass(int d) : d_(d) {
  check_dim(d);
  coeffs_.resize(static_cast<std::size_t>(d) + 1);
}

CohClass::CohClass(int d, std::vector<BigRational> coeffs) : d_(d), coeffs_(std::move(coeffs)) {
  check_dim(d);
  if (coeffs_.size() > static_cast<std::size_t>(d) + 1) {
    throw DimensionMismatch("more coefficients than the truncation allows");
  }
  coeffs_.resize(static_cast<std::size_t>(d) + 1);
}

CohClass CohClass::one(int d) {
  CohClass x(d);
  x.coeffs_[0] = 1;
  return x;
}

CohClass CohClass::generator(int d) {
  CohClass x(d);
  if (d >= 1) x.coeffs_[1] = 1;
  return x;
}

CohClass CohClass::from_integers(int d, std::span<const long> coeffs) {
  std::vector<BigRational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return CohClass(d, std::move(c));
}

bool CohClass::is_integral() const {
  for (const auto& c : coeffs_)
    if (!c.is_integer()) return false;
  return true;
}

BigInt CohClass::integer_coeff(int i) const { return (*this)[i].to_integer(); }

std::string CohClass::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= d_; ++i) {
    const auto& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const BigRational mag = neg ? -c : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    if (i == 0 || mag != BigRational(1)) os << mag;
    if (i >= 1) os << 'u';
    if (i >= 2) os << '^' << i;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

CohClass& CohClass::operator+=(const CohClass& o) {
  if (o.d_ != d_) throw DimensionMismatch("cohomology classes of different dimensions");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CohClass& CohClass::operator-=(const CohClass& o) {
  if (o.d_ != d_) throw DimensionMismatch("cohomology classes of different dimensions");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CohClass operator*(const CohClass& x, const CohClass& y) {
  if (x.d_ != y.d_) throw DimensionMismatch("cohomology classes of different dimensions");
  return CohClass(x.d_, truncated_product(x.coeffs_, y.coeffs_, x.d_));
}

CohClass operator*(const BigRational& s, const CohClass& x) {
  CohClass r = x;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

CohClass coh_mul(const CohClass& x, const CohClass& y) { return x * y; }

CohClass coh_invert_unit(const CohClass& x) {
  if (!x.is_unit()) throw NonUnit("class " + x.str() + " has zero constant term");
  const int d = x.dim();
  std::vector<BigRational> y(static_cast<std::size_t>(d) + 1);
  const BigRational inv0 = BigRational(1) / x[0];
  y[0] = inv0;
  for (int k = 1; k <= d; ++k) {
    BigRational acc;
    for (int j = 1; j <= k; ++j) acc += x[j] * y[static_cast<std::size_t>(k - j)];
    y[static_cast<std::size_t>(k)] = -acc * inv0;
  }
  return CohClass(d, std::move(y));
}

CohClass coh_pow(const CohClass& x, const BigInt& k) {
  if (k < 0) return coh_pow(coh_invert_unit(x), -k);
  CohClass result = CohClass::one(x.dim());
  CohClass base = x;
  const mp_bitcnt_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
  for (mp_bitcnt_t b = 0; b < bits; ++b) {
    if (mpz_tstbit(k.get_mpz_t(), b)) result = result * base;
    if (b + 1 < bits) base = base * base;
  }
  return result;
}

CohClass exp_series(const BigInt& t, int d) {
  std::vector<BigRational> c(static_cast<std::size_t>(d) + 1);
  BigInt power = 1;
  for (int i = 0; i <= d; ++i) {
    c[static_cast<std::size_t>(i)] = BigRational(power, factorial(static_cast<unsigned long>(i)));
    power *= t;
  }
  return CohClass(d, std::move(c));
}

}  // namespace acs
