#include "acs/ktheory.hpp"

#include <array>
#include <sstream>
#include <utility>

#include "acs/errors.hpp"

namespace acs {

namespace {

std::string poly_str(const std::vector<BigInt>& c, const char* var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const bool neg = c[i] < 0;
    const BigInt mag = abs(c[i]);
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

void check_supported(int d) {
  if (d < 4 || d > 6) {
    throw UnsupportedDimension("KO(CP^d) is only modelled for d in {4, 5, 6}, got " + std::to_string(d));
  }
}

}  // namespace

// ---------------------------------------------------------------- KClass

KClass::KClass(int d) : d_(d) {
  if (d < 1) throw DimensionMismatch("K(CP^d) needs d >= 1");
  coeffs_.resize(static_cast<std::size_t>(d) + 1);
}

KClass::KClass(int d, std::vector<BigInt> coeffs) : d_(d), coeffs_(std::move(coeffs)) {
  if (d < 1) throw DimensionMismatch("K(CP^d) needs d >= 1");
  if (coeffs_.size() > static_cast<std::size_t>(d) + 1) {
    throw DimensionMismatch("L^" + std::to_string(coeffs_.size() - 1) + " exceeds d = " + std::to_string(d));
  }
  coeffs_.resize(static_cast<std::size_t>(d) + 1);
}

KClass KClass::one(int d) {
  KClass x(d);
  x.coeffs_[0] = 1;
  return x;
}

KClass KClass::line(int d) {
  KClass x(d);
  x.coeffs_[1] = 1;
  return x;
}

KClass KClass::hopf_power(int d, long k) {
  KClass x(d);
  for (int i = 0; i <= d; ++i) x.coeffs_[static_cast<std::size_t>(i)] = binomial(BigInt(k), i);
  return x;
}

bool KClass::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

KClass KClass::pow(unsigned k) const {
  KClass result = one(d_), base = *this;
  while (k) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

std::string KClass::str() const { return poly_str(coeffs_, "L"); }

KClass& KClass::operator+=(const KClass& o) {
  if (o.d_ != d_) throw DimensionMismatch("K-classes of different dimensions");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

KClass& KClass::operator-=(const KClass& o) {
  if (o.d_ != d_) throw DimensionMismatch("K-classes of different dimensions");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

KClass operator*(const KClass& x, const KClass& y) {
  if (x.d_ != y.d_) throw DimensionMismatch("K-classes of different dimensions");
  KClass out(x.d_);
  for (int i = 0; i <= x.d_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; i + j <= x.d_; ++j) out.coeffs_[static_cast<std::size_t>(i + j)] += x[i] * y[j];
  }
  return out;
}

KClass operator*(const BigInt& s, KClass x) {
  for (auto& c : x.coeffs_) c *= s;
  return x;
}

KClass KClass::operator-() const { return BigInt(-1) * *this; }

KClass k_mul(const KClass& x, const KClass& y) { return x * y; }

namespace {

// Evaluates sum_i x_i g^i for a ring element g (Horner).
template <class Ring>
Ring substitute_line(const KClass& x, const Ring& g, const Ring& unit) {
  Ring acc = BigInt(0) * unit;
  for (int i = x.dim(); i >= 0; --i) acc = acc * g + x[i] * unit;
  return acc;
}

}  // namespace

KClass conjugate(const KClass& x) {
  const int d = x.dim();
  const KClass tl = KClass::hopf_power(d, -1) - KClass::one(d);
  return substitute_line(x, tl, KClass::one(d));
}

CohClass chern_character(const KClass& x) {
  const int d = x.dim();
  const CohClass g = exp_series(1, d) - CohClass::one(d);
  CohClass acc(d);
  for (int i = d; i >= 0; --i) acc = acc * g + BigRational(x[i]) * CohClass::one(d);
  return acc;
}

std::vector<BigInt> hopf_expansion(const KClass& x) {
  const int d = x.dim();
  std::vector<BigInt> y(static_cast<std::size_t>(d) + 1);
  // L^i = (H - 1)^i = sum_j C(i, j) (-1)^{i-j} H^j
  for (int i = 0; i <= d; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j <= i; ++j) {
      BigInt term = x[i] * binomial(BigInt(i), j);
      if ((i - j) % 2) term = -term;
      y[static_cast<std::size_t>(j)] += term;
    }
  }
  return y;
}

CohClass total_chern(const KClass& x) {
  const int d = x.dim();
  const auto y = hopf_expansion(x);
  CohClass result = CohClass::one(d);
  for (int j = 1; j <= d; ++j) {
    const auto& e = y[static_cast<std::size_t>(j)];
    if (e == 0) continue;
    CohClass line = CohClass::one(d);
    line = line + BigRational(j) * CohClass::generator(d);
    result = result * coh_pow(line, e);
  }
  return result;
}

KClass adams_k(long k, const KClass& x) {
  if (k < 1) throw UnsupportedOperation("Adams operations are defined here for k >= 1");
  const int d = x.dim();
  const KClass image = KClass::hopf_power(d, k) - KClass::one(d);
  return substitute_line(x, image, KClass::one(d));
}

// ---------------------------------------------------------------- KOClass

int KOClass::top_power(int d) {
  check_supported(d);
  return d == 4 ? 2 : 3;
}

KOClass::KOClass(int d) : d_(d) {
  coeffs_.resize(static_cast<std::size_t>(top_power(d)) + 1);
}

KOClass::KOClass(int d, std::vector<BigInt> coeffs) : d_(d), coeffs_(std::move(coeffs)) {
  const auto n = static_cast<std::size_t>(top_power(d)) + 1;
  if (coeffs_.size() > n) {
    throw DimensionMismatch("w^" + std::to_string(coeffs_.size() - 1) + " vanishes in KO(CP^" + std::to_string(d) + ")");
  }
  coeffs_.resize(n);
  normalize();
}

void KOClass::normalize() {
  if (d_ == 5) coeffs_[3] = mod_floor(coeffs_[3], 2);
}

KOClass KOClass::one(int d) {
  KOClass x(d);
  x.coeffs_[0] = 1;
  return x;
}

KOClass KOClass::omega(int d) {
  KOClass x(d);
  x.coeffs_[1] = 1;
  return x;
}

bool KOClass::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

KOClass KOClass::pow(unsigned k) const {
  KOClass result = one(d_), base = *this;
  while (k) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

std::string KOClass::str() const { return poly_str(coeffs_, "w"); }

KOClass& KOClass::operator+=(const KOClass& o) {
  if (o.d_ != d_) throw DimensionMismatch("KO-classes of different dimensions");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

KOClass& KOClass::operator-=(const KOClass& o) {
  if (o.d_ != d_) throw DimensionMismatch("KO-classes of different dimensions");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

KOClass operator*(const KOClass& x, const KOClass& y) {
  if (x.d_ != y.d_) throw DimensionMismatch("KO-classes of different dimensions");
  const int top = KOClass::top_power(x.d_);
  KOClass out(x.d_);
  for (int i = 0; i <= top; ++i)
    for (int j = 0; i + j <= top; ++j) out.coeffs_[static_cast<std::size_t>(i + j)] += x[i] * y[j];
  out.normalize();
  return out;
}

KOClass operator*(const BigInt& s, KOClass x) {
  for (auto& c : x.coeffs_) c *= s;
  x.normalize();
  return x;
}

KOClass ko_mul(const KOClass& x, const KOClass& y) { return x * y; }

KClass complexify(const KOClass& x) {
  const int d = x.dim();
  const KClass l = KClass::line(d);
  const KClass cw = l + conjugate(l);
  KClass acc(d);
  for (int j = KOClass::top_power(d); j >= 0; --j) acc = acc * cw + x[j] * KClass::one(d);
  return acc;
}

namespace {

// The unique y in torsion-free KO(CP^d) with c(y) = target. c(w)^j starts
// with L^{2j}, so the system is unitriangular in the L^{2j} coefficients.
KOClass solve_complexification(const KClass& target) {
  const int d = target.dim();
  const int top = KOClass::top_power(d);
  const KClass cw = complexify(KOClass::omega(d));
  KClass residual = target;
  std::vector<BigInt> y(static_cast<std::size_t>(top) + 1);
  KClass power = KClass::one(d);
  for (int j = 0; j <= top; ++j) {
    y[static_cast<std::size_t>(j)] = residual[2 * j];
    residual -= residual[2 * j] * power;
    power = power * cw;
  }
  if (!residual.is_zero()) {
    throw InternalCheckFailure("class " + target.str() + " is not in the image of complexification");
  }
  return KOClass(d, std::move(y));
}

std::vector<KOClass> build_table(int d) {
  std::vector<KOClass> table;
  if (d == 5) {
    auto ko = [](std::vector<BigInt> c) { return KOClass(5, std::move(c)); };
    table = {ko({2}), ko({0, 1}), ko({0, 2, 1}), ko({0, 0, 3, 1}), ko({0, 0, 2}), ko({0, 0, 0, 1})};
    return table;
  }
  for (int i = 0; i <= d; ++i) {
    const KClass x = KClass::line(d).pow(static_cast<unsigned>(i));
    table.push_back(solve_complexification(x + conjugate(x)));
  }
  return table;
}

}  // namespace

const std::vector<KOClass>& real_reduction_table(int d) {
  check_supported(d);
  static const std::array<std::vector<KOClass>, 3> tables{build_table(4), build_table(5), build_table(6)};
  return tables[static_cast<std::size_t>(d - 4)];
}

KOClass real_reduce(const KClass& x) {
  const int d = x.dim();
  const auto& table = real_reduction_table(d);
  KOClass out(d);
  for (int i = 0; i <= d; ++i)
    if (x[i] != 0) out += x[i] * table[static_cast<std::size_t>(i)];
  return out;
}

KOClass adams_ko(long k, const KOClass& x) {
  const int d = x.dim();
  check_supported(d);
  if (k < 1) throw UnsupportedOperation("Adams operations are defined here for k >= 1");
  if (d == 5 && (k & (k - 1)) != 0) {
    throw UnsupportedOperation("psi^" + std::to_string(k) +
                               " on KO(CP^5) is only resolved for powers of two");
  }
  const KOClass image = real_reduce(adams_k(k, KClass::line(d)));
  KOClass acc(d);
  for (int j = KOClass::top_power(d); j >= 0; --j) acc = acc * image + x[j] * KOClass::one(d);
  return acc;
}

CohClass pontrjagin_total(const KOClass& x) {
  const int d = x.dim();
  if (d != 4 && d != 6) {
    throw UnsupportedDimension("Pontrjagin classes are only computed for torsion-free KO (d = 4, 6)");
  }
  const CohClass c = total_chern(complexify(x));
  std::vector<BigRational> p(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    if (i % 2 == 1) {
      if (!c[i].is_zero()) throw InternalCheckFailure("odd Chern class of a complexification is nonzero");
      continue;
    }
    p[static_cast<std::size_t>(i)] = (i / 2) % 2 ? -c[i] : c[i];
  }
  return CohClass(d, std::move(p));
}

}  // namespace acs
