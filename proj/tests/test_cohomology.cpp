#include <gtest/gtest.h>

#include "acs/cohomology.hpp"
#include "acs/errors.hpp"
#include "support.hpp"

using namespace acs;

namespace {

CohClass ints(int d, std::vector<long> xs) { return CohClass::from_integers(d, xs); }

CohClass random_class(std::mt19937_64& g, int d, bool unit) {
  std::vector<BigRational> c;
  for (int i = 0; i <= d; ++i)
    c.emplace_back(BigInt(acs_test::uniform(g, -5, 5)), BigInt(acs_test::uniform(g, 1, 3)));
  if (unit && c[0].is_zero()) c[0] = 1;
  return CohClass(d, c);
}

}  // namespace

TEST(CohMul, Examples) {
  EXPECT_EQ(ints(4, {1, 1}) * ints(4, {1, -1}), ints(4, {1, 0, -1}));
  EXPECT_EQ(ints(4, {1, 0, 1}) * ints(4, {0, 0, 0, 1}), ints(4, {0, 0, 0, 1}));
  const CohClass cl2 = ints(5, {1, 0, -1, 2, -3, 4});
  const CohClass cl1 = ints(5, {1, 1});
  EXPECT_EQ(cl2 * cl1 * cl1, ints(5, {1, 2}));
  EXPECT_THROW(coh_mul(ints(3, {1}), ints(4, {1})), DimensionMismatch);
}

TEST(CohInvert, Examples) {
  EXPECT_EQ(coh_invert_unit(ints(5, {1, 1})), ints(5, {1, -1, 1, -1, 1, -1}));
  EXPECT_EQ(coh_invert_unit(CohClass::one(3)), CohClass::one(3));
  EXPECT_THROW(coh_invert_unit(CohClass::generator(3)), NonUnit);
}

TEST(CohPow, Examples) {
  const CohClass one_u = ints(5, {1, 1});
  const CohClass cl2 = ints(5, {1, 2}) * coh_pow(one_u, -2);
  EXPECT_EQ(cl2, ints(5, {1, 0, -1, 2, -3, 4}));
  const CohClass cl3 = ints(5, {1, 3}) * coh_pow(cl2, -3) * coh_pow(one_u, -3);
  EXPECT_EQ(cl3, ints(5, {1, 0, 0, 2, -9, 30}));
  EXPECT_EQ(coh_pow(ints(5, {3, 1, 4}), 0), CohClass::one(5));
  EXPECT_THROW(coh_pow(CohClass::generator(4), -1), NonUnit);
}

TEST(CohPow, LineSeriesChain) {
  // c_*(L^4), c_*(L^5) from the lower series.
  const CohClass one_u = ints(5, {1, 1});
  const CohClass cl2 = ints(5, {1, 0, -1, 2, -3, 4});
  const CohClass cl3 = ints(5, {1, 0, 0, 2, -9, 30});
  const CohClass cl4 = ints(5, {1, 4}) * coh_pow(cl3, -4) * coh_pow(cl2, -6) * coh_pow(one_u, -4);
  EXPECT_EQ(cl4, ints(5, {1, 0, 0, 0, -6, 48}));
  const CohClass cl5 =
      ints(5, {1, 5}) * coh_pow(cl4, -5) * coh_pow(cl3, -10) * coh_pow(cl2, -10) * coh_pow(one_u, -5);
  EXPECT_EQ(cl5, ints(5, {1, 0, 0, 0, 0, 24}));
}

TEST(ExpSeries, Examples) {
  EXPECT_EQ(exp_series(0, 4), CohClass::one(4));
  const auto r = [](const char* s) { return BigRational::parse(s); };
  EXPECT_EQ(exp_series(1, 4), CohClass(4, {1, 1, r("1/2"), r("1/6"), r("1/24")}));
  EXPECT_EQ(exp_series(2, 4), CohClass(4, {1, 2, 2, r("4/3"), r("2/3")}));
}

TEST(CohClass, Printing) {
  EXPECT_EQ(ints(5, {1, 0, -1, 2}).str(), "1 - u^2 + 2u^3");
  EXPECT_EQ(CohClass(2).str(), "0");
  EXPECT_EQ(exp_series(1, 2).str(), "1 + u + 1/2u^2");
}

TEST(CohProperties, RingLaws) {
  auto g = acs_test::rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = static_cast<int>(acs_test::uniform(g, 1, 8));
    const CohClass x = random_class(g, d, false), y = random_class(g, d, false), z = random_class(g, d, false);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * CohClass::one(d), x);
    EXPECT_EQ(x * (y + z), x * y + x * z);
  }
}

TEST(CohProperties, PowerInverse) {
  auto g = acs_test::rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = static_cast<int>(acs_test::uniform(g, 1, 8));
    const CohClass x = random_class(g, d, true);
    const long k = acs_test::uniform(g, -10, 10);
    EXPECT_EQ(coh_pow(x, k) * coh_pow(x, -k), CohClass::one(d));
    CohClass naive = CohClass::one(d);
    for (long i = 0; i < std::abs(k); ++i) naive = naive * x;
    EXPECT_EQ(coh_pow(x, std::abs(k)), naive);
  }
}

TEST(CohProperties, ExpAddition) {
  auto g = acs_test::rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = static_cast<int>(acs_test::uniform(g, 1, 8));
    const long s = acs_test::uniform(g, -20, 20), t = acs_test::uniform(g, -20, 20);
    EXPECT_EQ(exp_series(s, d) * exp_series(t, d), exp_series(s + t, d));
  }
}

TEST(CohClass, IntegralityQueries) {
  EXPECT_TRUE(ints(3, {1, 2, 3, 4}).is_integral());
  EXPECT_FALSE(exp_series(1, 2).is_integral());
  EXPECT_EQ(ints(3, {1, 2, 3, 4}).integer_coeff(3), 4);
  EXPECT_THROW(exp_series(1, 2).integer_coeff(2), NotDivisible);
}
