#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "ipx/scalars.hpp"
#include "support.hpp"

using namespace ipx;

TEST(GaussianRational, CanonicalForm) {
  EXPECT_EQ(GaussianRational::ratio(2, 4), GaussianRational::ratio(1, 2));
  EXPECT_EQ(GaussianRational::ratio(-3, -6).str(), GaussianRational::ratio(1, 2).str());
  EXPECT_THROW(GaussianRational::ratio(1, 0), std::domain_error);
}

TEST(GaussianRational, DivisionByZeroThrows) {
  EXPECT_THROW(GaussianRational(1) / GaussianRational(0), std::domain_error);
}

TEST(GaussianRational, FieldAxiomsHoldExactly) {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const auto a = ipx::testing::random_gq(rng);
    const auto b = ipx::testing::random_gq(rng);
    const auto c = ipx::testing::random_gq(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!is_zero(b)) {
      EXPECT_EQ((a / b) * b, a);
    }
  }
}

TEST(GaussianRational, ModulusSquaredMatchesProductWithConjugate) {
  Rng rng(12);
  for (int i = 0; i < 500; ++i) {
    const auto z = ipx::testing::random_gq(rng);
    const auto zz = z * conj(z);
    EXPECT_EQ(zz.im(), 0);
    EXPECT_EQ(zz.re(), z.re() * z.re() + z.im() * z.im());
    EXPECT_EQ(zz.re(), abs2(z));
    EXPECT_GE(sgn(abs2(z)), 0);
    EXPECT_EQ(conj(conj(z)), z);
  }
}

TEST(Complex, ConjugationIsInvolutionAndModulusMatches) {
  Rng rng(13);
  for (int i = 0; i < 500; ++i) {
    const Complex z = ipx::testing::random_scalar(rng);
    EXPECT_EQ(conj(conj(z)), z);
    EXPECT_NEAR(abs2(z), z.real() * z.real() + z.imag() * z.imag(), 1e-15 * std::max(1.0, abs2(z)));
  }
}

TEST(Scalar, BackendTagging) {
  const Scalar f(Complex(1.0, 2.0));
  const Scalar e(GaussianRational::ratio(1, 3));
  EXPECT_EQ(f.backend(), Backend::Float);
  EXPECT_EQ(e.backend(), Backend::Exact);
  EXPECT_THROW((void)f.as_exact(), std::logic_error);
  EXPECT_THROW((void)(f + e), std::invalid_argument);
  EXPECT_THROW((void)(e * f), std::invalid_argument);
  EXPECT_NEAR(e.approx().real(), 1.0 / 3.0, 1e-16);
  EXPECT_EQ((e * e).as_exact(), GaussianRational::ratio(1, 9));
  EXPECT_EQ(Scalar(GaussianRational(Rational(3, 5), Rational(4, 5))).abs2().as_exact(), GaussianRational(1));
}

TEST(ApproxLe, Examples) {
  const TolerancePolicy p;
  EXPECT_TRUE(approx_le(0.5, 0.5, 1.0, p));
  EXPECT_TRUE(approx_le(0.5 + 1e-15, 0.5, 1.0, p));
  EXPECT_FALSE(approx_le(0.6, 0.5, 1.0, p));
}

TEST(ApproxLe, NonFiniteInputIsAnError) {
  const double inf = std::numeric_limits<double>::infinity();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(approx_le(inf, 1.0, 1.0), std::domain_error);
  EXPECT_THROW(approx_le(1.0, nan, 1.0), std::domain_error);
  EXPECT_THROW(approx_le(1.0, 1.0, inf), std::domain_error);
  try {
    approx_le(nan, 0.0, 1.0);
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "non-finite comparison");
  }
}

TEST(ApproxLe, ReflexiveAndTransitiveWithinTwoTolerances) {
  const TolerancePolicy p;
  Rng rng(14);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  const double scale = 10.0;
  const double tol = p.tolerance(scale);
  for (int i = 0; i < 1000; ++i) {
    const double a = u(rng);
    EXPECT_TRUE(approx_le(a, a, scale, p));
    const double b = a - 0.9 * tol;
    const double c = b - 0.9 * tol;
    ASSERT_TRUE(approx_le(a, b, scale, p));
    ASSERT_TRUE(approx_le(b, c, scale, p));
    EXPECT_LE(a, c + 2.0 * tol);
  }
}

TEST(ApproxEq, IsSymmetric) {
  EXPECT_TRUE(approx_eq(1.0, 1.0 + 1e-12, 1.0));
  EXPECT_TRUE(approx_eq(1.0 + 1e-12, 1.0, 1.0));
  EXPECT_FALSE(approx_eq(1.0, 1.1, 1.0));
}

TEST(TolerancePolicy, MonotoneInScaleAndValidated) {
  const TolerancePolicy p;
  EXPECT_DOUBLE_EQ(p.tolerance(0.0), 1e-12 + 1e-9);
  EXPECT_DOUBLE_EQ(p.tolerance(100.0), 1e-12 + 1e-7);
  double prev = 0.0;
  for (double s = 0.0; s < 1e6; s = s * 3.0 + 0.5) {
    EXPECT_GE(p.tolerance(s), prev);
    prev = p.tolerance(s);
  }
  EXPECT_THROW((TolerancePolicy{0.0, 1e-12}.validate()), std::invalid_argument);
  EXPECT_THROW((TolerancePolicy{1e-9, -1.0}.validate()), std::invalid_argument);
  EXPECT_NO_THROW(TolerancePolicy{}.validate());
}

TEST(ExactEq, Examples) {
  EXPECT_TRUE(exact_eq(Scalar(GaussianRational::ratio(1, 2)), Scalar(GaussianRational::ratio(2, 4))));
  EXPECT_FALSE(exact_eq(Scalar(GaussianRational(0, 1)), Scalar(GaussianRational(0, -1))));
  const GaussianRational z(Rational(3, 5), Rational(4, 5));
  EXPECT_TRUE(exact_eq(Scalar(conj(z)), Scalar(GaussianRational(Rational(3, 5), Rational(-4, 5)))));
}

TEST(ExactEq, RequiresExactBackend) {
  try {
    exact_eq(Scalar(Complex(1.0)), Scalar(GaussianRational(1)));
    FAIL() << "expected an exception";
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "exact comparison requires exact backend");
  }
  EXPECT_THROW(exact_eq(Scalar(Complex(1.0)), Scalar(Complex(1.0))), std::invalid_argument);
}
