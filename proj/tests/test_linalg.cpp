#include <gtest/gtest.h>

#include <cmath>

#include "ipx/linalg.hpp"
#include "support.hpp"

using namespace ipx;
using ipx::testing::cvec;
using ipx::testing::rvec;

namespace {
const Complex I(0.0, 1.0);
}

TEST(Inner, Examples) {
  EXPECT_EQ(inner(rvec({1, 0}), rvec({0, 1})), Complex(0.0));
  EXPECT_EQ(inner(cvec({1.0, I}), cvec({1.0, I})), Complex(2.0));
  // conjugate-linear in the second slot
  EXPECT_EQ(inner(cvec({1.0, 0.0}), cvec({I, 0.0})), Complex(0.0, -1.0));
}

TEST(Inner, DimensionMismatchThrows) {
  EXPECT_THROW(inner(rvec({1, 2}), rvec({1, 2, 3})), std::invalid_argument);
}

TEST(Norm, Examples) {
  EXPECT_DOUBLE_EQ(norm(rvec({3, 4})), 5.0);
  EXPECT_DOUBLE_EQ(norm(rvec({0, 0})), 0.0);
  EXPECT_DOUBLE_EQ(norm(Vec::basis(4, 2)), 1.0);
}

TEST(Vec, ConstructionChecks) {
  EXPECT_THROW(Vec(std::vector<Complex>{}), std::invalid_argument);
  EXPECT_THROW(Vec({Complex(1.0, 1.0)}, true), std::invalid_argument);
  EXPECT_THROW(Vec::basis(3, 3), std::out_of_range);
}

TEST(ProjectOut, Examples) {
  const Vec p = project_out(rvec({1, 1}), rvec({1, 0}));
  EXPECT_EQ(p, rvec({0, 1}));
  const Vec q = project_out(rvec({2, 0}), rvec({5, 0}));
  EXPECT_NEAR(norm(q), 0.0, 1e-15);
  try {
    project_out(rvec({1, 1}), rvec({0, 0}));
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "projection onto zero vector");
  }
}

TEST(Gram, Examples) {
  const auto g = gram(std::vector<Vec>{rvec({1, 0}), rvec({1, 1})});
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g(0, 0), Complex(1.0));
  EXPECT_EQ(g(0, 1), Complex(1.0));
  EXPECT_EQ(g(1, 1), Complex(2.0));
  const auto h = gram(std::vector<Vec>{cvec({1.0, I}), cvec({I, 0.0})});
  EXPECT_EQ(h(0, 1), inner(cvec({1.0, I}), cvec({I, 0.0})));
  EXPECT_EQ(h(1, 0), std::conj(h(0, 1)));
}

TEST(Inner, SesquilinearExactly) {
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = ipx::testing::uniform_size(rng, 1, 5);
    const auto x = ipx::testing::random_exact(d, rng, false, false);
    const auto x2 = ipx::testing::random_exact(d, rng, false, false);
    const auto y = ipx::testing::random_exact(d, rng, false, false);
    const auto a = ipx::testing::random_gq(rng);
    EXPECT_EQ(inner(a * x + x2, y), a * inner(x, y) + inner(x2, y));
    EXPECT_EQ(inner(x, a * y), conj(a) * inner(x, y));
    EXPECT_EQ(inner(y, x), conj(inner(x, y)));
    EXPECT_EQ(GaussianRational(norm_sq(x), 0), inner(x, x));
    EXPECT_GE(sgn(norm_sq(x)), 0);
  }
}

TEST(Inner, CauchySchwarzHolds) {
  Rng rng(22);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t d = ipx::testing::uniform_size(rng, 1, 8);
    const Vec x = ipx::testing::random_vec(d, rng);
    const Vec y = ipx::testing::random_vec(d, rng);
    const double rhs = norm(x) * norm(y);
    EXPECT_TRUE(approx_le(std::abs(inner(x, y)), rhs, rhs));
  }
}

TEST(ProjectOut, PythagorasAndOrthogonality) {
  Rng rng(23);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t d = ipx::testing::uniform_size(rng, 1, 6);
    const Vec y = ipx::testing::random_vec(d, rng);
    const Vec z = ipx::testing::random_vec(d, rng);
    const Vec p = project_out(y, z);
    const Vec par = y - p;
    const double scale = norm_sq(y);
    EXPECT_LE(std::abs(inner(p, z)), 1e-12 * std::max(1.0, norm(y) * norm(z)));
    EXPECT_NEAR(norm_sq(par) + norm_sq(p), norm_sq(y), 1e-12 * std::max(1.0, scale));
  }
}

TEST(ProjectOut, ExactOrthogonality) {
  Rng rng(24);
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = ipx::testing::uniform_size(rng, 1, 4);
    const auto y = ipx::testing::random_exact(d, rng);
    const auto z = ipx::testing::random_exact(d, rng);
    EXPECT_TRUE(is_zero(inner(project_out(y, z), z)));
  }
}

TEST(Sample, UnitConstraint) {
  Rng rng(25);
  for (int t = 0; t < 200; ++t) {
    const Vec v = sample(5, {Constraint::unit()}, rng);
    EXPECT_NEAR(norm(v), 1.0, 1e-12);
  }
}

TEST(Sample, RealOrthogonal) {
  const Vec z = rvec({1, 2, 3});
  Rng rng(26);
  for (int t = 0; t < 200; ++t) {
    const Vec v = sample(3, {Constraint::real(), Constraint::orthogonal_to(z)}, rng);
    EXPECT_TRUE(v.is_real());
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(v[i].imag(), 0.0);
    EXPECT_LE(std::abs(inner(v, z)), 1e-9 * std::max(1.0, norm(v) * norm(z)));
  }
}

TEST(Sample, InnerEqualsOne) {
  const Vec z = cvec({1.0, I, 2.0});
  Rng rng(27);
  for (int t = 0; t < 200; ++t) {
    const Vec v = sample(3, {Constraint::inner_equals_one(z)}, rng);
    EXPECT_NEAR(std::abs(inner(v, z) - 1.0), 0.0, 1e-9);
  }
}

TEST(Sample, OrthogonalToSeveralAndUnit) {
  Rng rng(28);
  for (int t = 0; t < 100; ++t) {
    const auto zs = ipx::testing::random_family(3, 5, rng);
    const Vec v = sample(5, {Constraint::orthogonal_to(zs), Constraint::unit()}, rng);
    EXPECT_NEAR(norm(v), 1.0, 1e-9);
    for (const auto& z : zs) EXPECT_LE(std::abs(inner(v, z)), 1e-9 * norm(z));
    EXPECT_TRUE(satisfies(v, {Constraint::orthogonal_to(zs), Constraint::unit()}));
  }
}

TEST(Sample, InfeasibleThrows) {
  // the complement of a spanning set is {0}
  const ConstraintSet cs{Constraint::orthogonal_to(std::vector<Vec>{rvec({1, 0}), rvec({0, 1})}),
                         Constraint::nonzero()};
  try {
    sample(2, cs, 1);
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "infeasible constraint set");
  }
}

TEST(Sample, DeterministicPerSeed) {
  const ConstraintSet cs{Constraint::unit()};
  EXPECT_EQ(sample(4, cs, std::uint64_t{99}), sample(4, cs, std::uint64_t{99}));
  EXPECT_FALSE(sample(4, cs, std::uint64_t{99}) == sample(4, cs, std::uint64_t{100}));
  EXPECT_NE(derive_seed(1, 2), derive_seed(2, 1));
  EXPECT_EQ(derive_seed(7, 8), derive_seed(7, 8));
}

TEST(Enforce, RestoresConstraintsAfterPerturbation) {
  Rng rng(29);
  const Vec z = ipx::testing::random_vec(4, rng);
  const ConstraintSet cs{Constraint::orthogonal_to(z), Constraint::unit()};
  for (int t = 0; t < 100; ++t) {
    Vec v = sample(4, cs, rng);
    v += Complex(0.1, 0.0) * ipx::testing::random_vec(4, rng);
    ASSERT_TRUE(enforce(v, cs));
    EXPECT_TRUE(satisfies(v, cs));
  }
}
