#include <gtest/gtest.h>

#include "acs/bigrational.hpp"
#include "acs/chernvec.hpp"
#include "acs/divisors.hpp"
#include "acs/errors.hpp"
#include "acs/matrix.hpp"
#include "acs/mpoly.hpp"
#include "support.hpp"

using namespace acs;

namespace {

RatVector ints(std::initializer_list<long> xs) {
  RatVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

RatMatrix mat(std::size_t r, std::size_t c, std::initializer_list<BigRational> xs) { return RatMatrix(r, c, xs); }

MPolyZ random_poly(std::mt19937_64& g) {
  MPolyZ p;
  const long terms = acs_test::uniform(g, 0, 4);
  for (long t = 0; t < terms; ++t) {
    Monomial e{};
    for (auto& x : e) x = static_cast<unsigned>(acs_test::uniform(g, 0, 2));
    p += MPolyZ::monomial(BigInt(acs_test::uniform(g, -9, 9)), e);
  }
  return p;
}

}  // namespace

TEST(BigRational, CanonicalForm) {
  const BigRational x(BigInt(6), BigInt(-4));
  EXPECT_EQ(x.num(), -3);
  EXPECT_EQ(x.den(), 2);
  EXPECT_EQ(BigRational(BigInt(0), BigInt(7)).den(), 1);
  EXPECT_THROW(BigRational(BigInt(1), BigInt(0)), ZeroArgument);
  EXPECT_THROW(BigRational(1) / BigRational(0), ZeroArgument);
}

TEST(BigRational, ArithmeticAndParse) {
  EXPECT_EQ(BigRational::parse("1/2") + BigRational::parse("1/3"), BigRational::parse("5/6"));
  EXPECT_EQ(BigRational::parse("-4/6").str(), "-2/3");
  EXPECT_EQ(BigRational(7).str(), "7");
  EXPECT_LT(BigRational::parse("-1/2"), BigRational(0));
  EXPECT_EQ(BigRational::parse("10/5").to_integer(), 2);
  EXPECT_THROW(BigRational::parse("1/2").to_integer(), NotDivisible);
  EXPECT_THROW(BigRational::parse("x"), ParseError);
}

TEST(BigInt, Helpers) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(-1, 3), -1);
  EXPECT_EQ(binomial(4, -1), 0);
  EXPECT_EQ(factorial(6), 720);
  EXPECT_EQ(mod_floor(-7, 3), 2);
  EXPECT_TRUE(fits_int53(BigInt("9007199254740991")));
  EXPECT_FALSE(fits_int53(BigInt("9007199254740992")));
}

TEST(SolveExact, Examples) {
  const RatMatrix w = w_matrix(2);
  EXPECT_EQ(solve_exact(w, ints({1, 0, 0})), ints({1, 0, 0}));
  EXPECT_EQ(solve_exact(w, ints({1, 3, 9})), ints({1, -3, 3}));
  EXPECT_THROW(solve_exact(mat(2, 2, {1, 1, 1, 1}), ints({1, 2})), SingularMatrix);
}

TEST(SolveExact, RationalEntries) {
  const RatMatrix m = mat(2, 2, {BigRational::parse("1/2"), 1, 3, BigRational::parse("-2/3")});
  const RatVector b = {BigRational::parse("5/4"), 1};
  const RatVector x = solve_exact(m, b);
  EXPECT_EQ(m * x, b);
}

TEST(SolveExact, RandomInverseProperty) {
  auto g = acs_test::rng(1);
  int tested = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(acs_test::uniform(g, 1, 8));
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = BigRational(acs_test::uniform(g, -5, 5));
    if (determinant(m).is_zero()) {
      EXPECT_THROW(inverse(m), SingularMatrix);
      continue;
    }
    ++tested;
    EXPECT_EQ(m * inverse(m), RatMatrix::identity(n));
  }
  EXPECT_GT(tested, 100);
}

TEST(Determinant, MatchesPermutationExpansion) {
  auto g = acs_test::rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    RatMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = BigRational(acs_test::uniform(g, -9, 9));
    const BigRational expect = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                               m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    EXPECT_EQ(determinant(m), expect);
  }
}

TEST(Vandermonde, Examples) {
  const std::vector<BigInt> two = {0, 1};
  EXPECT_EQ(vandermonde_inverse(two), mat(2, 2, {1, 0, -1, 1}));
  EXPECT_EQ(vandermonde_inverse(two), inverse(vandermonde(two)));
  const std::vector<BigInt> three = {0, 1, 2};
  const auto h = BigRational::parse("1/2");
  EXPECT_EQ(vandermonde_inverse(three), mat(3, 3, {1, 0, 0, BigRational::parse("-3/2"), 2, -h, h, -1, h}));
  const std::vector<BigInt> dup = {0, 0, 1};
  EXPECT_THROW(vandermonde_inverse(dup), DuplicateNodes);
}

TEST(Vandermonde, InverseProperty) {
  auto g = acs_test::rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = acs_test::uniform(g, 1, 8);
    std::vector<BigInt> nodes;
    while (static_cast<long>(nodes.size()) < n) {
      const BigInt x = acs_test::uniform(g, -5, 10);
      if (std::find(nodes.begin(), nodes.end(), x) == nodes.end()) nodes.push_back(x);
    }
    const RatMatrix inv = vandermonde_inverse(nodes);
    EXPECT_EQ(inv * vandermonde(nodes), RatMatrix::identity(nodes.size()));
    EXPECT_EQ(inv, inverse(vandermonde(nodes)));
  }
}

TEST(ElemSym, ExamplesAndSubsetOracle) {
  const std::vector<BigInt> v = {1, 2, 3};
  EXPECT_EQ(elem_sym(v, 0), 1);
  EXPECT_EQ(elem_sym(v, 2), 11);
  EXPECT_THROW(elem_sym(v, 4), IndexOutOfRange);

  auto g = acs_test::rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<BigInt> xs;
    for (long i = acs_test::uniform(g, 0, 7); i > 0; --i) xs.emplace_back(acs_test::uniform(g, -6, 6));
    std::vector<BigInt> by_size(xs.size() + 1, BigInt(0));
    for (unsigned mask = 0; mask < (1u << xs.size()); ++mask) {
      BigInt prod = 1;
      for (std::size_t i = 0; i < xs.size(); ++i)
        if (mask & (1u << i)) prod *= xs[i];
      by_size[static_cast<std::size_t>(__builtin_popcount(mask))] += prod;
    }
    for (std::size_t q = 0; q <= xs.size(); ++q) EXPECT_EQ(elem_sym(xs, q), by_size[q]);
  }
}

TEST(Divisors, Examples) {
  EXPECT_EQ(divisors_signed(25), (std::vector<BigInt>{-25, -5, -1, 1, 5, 25}));
  EXPECT_EQ(divisors_signed(9529), (std::vector<BigInt>{-9529, -733, -13, -1, 1, 13, 733, 9529}));
  EXPECT_EQ(divisors_signed(-12), (std::vector<BigInt>{-12, -6, -4, -3, -2, -1, 1, 2, 3, 4, 6, 12}));
  EXPECT_THROW(divisors_signed(0), ZeroArgument);
}

TEST(Divisors, NaiveScanOracle) {
  auto g = acs_test::rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    long n = acs_test::uniform(g, -5000, 5000);
    if (n == 0) n = 1;
    std::vector<BigInt> naive;
    for (long d = -std::abs(n); d <= std::abs(n); ++d)
      if (d != 0 && n % d == 0) naive.emplace_back(d);
    const auto ds = divisors_signed(n);
    ASSERT_EQ(ds, naive);
    EXPECT_EQ(ds.size() % 2, 0u);
    EXPECT_EQ(ds.front() * ds.back(), -BigInt(n) * n);
  }
}

TEST(Divisors, BeyondSixtyFourBits) {
  BigInt big;
  mpz_ui_pow_ui(big.get_mpz_t(), 2, 70);
  big *= 1000003;  // prime
  const auto ds = divisors_signed(big);
  EXPECT_EQ(ds.size(), 2u * 71 * 2);
  EXPECT_EQ(ds.back(), big);
  EXPECT_EQ(ds[ds.size() / 2], 1);
}

TEST(MPoly, ParseAndPrint) {
  const MPolyZ f = MPolyZ::parse("-5184m^2 - 2160m - 525");
  EXPECT_EQ(f.str(), "-5184m^2 - 2160m - 525");
  EXPECT_EQ(MPolyZ::parse("2a*c + c").str(), "2ac + c");
  EXPECT_EQ(MPolyQ::parse("576/7m^2").coefficient(Monomial{0, 0, 2, 0, 0}), BigRational::parse("576/7"));
  EXPECT_THROW(MPolyZ::parse("3x"), ParseError);
  EXPECT_THROW(MPolyZ::parse(""), ParseError);
}

TEST(MPoly, Examples) {
  const MPolyZ f = MPolyZ::parse("-5184m^2 - 2160m - 525");
  EXPECT_EQ(reduce_mod(f, 7), MPolyZ::parse("3m^2 + 3m"));
  EXPECT_EQ(f.substitute(Var::m, BigInt(0)), MPolyZ(-525));
  EXPECT_EQ(MPolyZ::parse("am + a^2").divide_by_variable(Var::a), MPolyZ::parse("m + a"));
  EXPECT_THROW(MPolyZ::parse("am + m").divide_by_variable(Var::a), NotDivisible);
}

TEST(MPoly, ReduceModWithFermatAndResidues) {
  ModReduction fermat{{Var::a}, {}};
  EXPECT_EQ(reduce_mod(MPolyZ::parse("a^3 - a"), 3, fermat), MPolyZ());
  EXPECT_EQ(reduce_mod(MPolyZ::parse("a^4"), 3, fermat), MPolyZ::parse("a^2"));
  ModReduction residue{{}, {{Var::m, 6}}};
  EXPECT_EQ(reduce_mod(MPolyZ::parse("-5184m^2 - 2160m - 525"), 7, residue), MPolyZ());
}

TEST(MPoly, RingLawsRandomized) {
  auto g = acs_test::rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const MPolyZ x = random_poly(g), y = random_poly(g), z = random_poly(g);
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x - x, MPolyZ());
    const BigInt v = acs_test::uniform(g, -4, 4);
    EXPECT_EQ((x * y).substitute(Var::m, v), x.substitute(Var::m, v) * y.substitute(Var::m, v));
    EXPECT_EQ((x + y).substitute(Var::a, v), x.substitute(Var::a, v) + y.substitute(Var::a, v));
  }
}

TEST(MPoly, SubstitutePolynomial) {
  const MPolyQ p = MPolyQ::parse("q^2 + m");
  EXPECT_EQ(p.substitute(Var::q, MPolyQ::parse("m + 1")), MPolyQ::parse("m^2 + 3m + 1"));
  EXPECT_EQ(to_integral(to_rational(MPolyZ::parse("3a - 2"))), MPolyZ::parse("3a - 2"));
  EXPECT_EQ(denominator_lcm(MPolyQ::parse("1/6a + 3/4m")), 12);
  EXPECT_EQ(content(MPolyZ::parse("6a + 9m")), 3);
  EXPECT_THROW(to_integral(MPolyQ::parse("1/2a")), NotDivisible);
}
