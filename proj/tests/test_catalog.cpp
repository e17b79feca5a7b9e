#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "ipx/catalog.hpp"
#include "support.hpp"

using namespace ipx;
using ipx::testing::cvec;
using ipx::testing::rvec;

namespace {

Case vectors_case(std::initializer_list<std::pair<const std::string, Vec>> v) {
  Case c;
  c.vectors = v;
  return c;
}

void expect_values(const CheckResult& r, std::initializer_list<double> expect, double tol = 1e-12) {
  ASSERT_EQ(r.values.size(), expect.size());
  std::size_t i = 0;
  for (double e : expect) EXPECT_NEAR(r.values[i++], e, tol) << "value " << i - 1;
}

}  // namespace

TEST(Registry, HasFortyTwoEntriesInOrder) {
  const auto& entries = list_entries();
  ASSERT_EQ(entries.size(), 42u);
  EXPECT_EQ(entries.front().id, "CS_DISCRETE");
  EXPECT_EQ(entries[2].id, "CS");
  EXPECT_EQ(entries[4].id, "RICHARD");
  EXPECT_EQ(entries.back().id, "OPNORM_16_3");
  std::set<std::string> ids;
  for (const auto& e : entries) {
    EXPECT_TRUE(ids.insert(e.id).second) << "duplicate " << e.id;
    EXPECT_FALSE(e.quote.empty()) << e.id;
    EXPECT_FALSE(e.statement.empty()) << e.id;
    EXPECT_GE(e.chain_labels.size(), 2u) << e.id;
    EXPECT_LT(e.principal_link + 1, e.chain_labels.size()) << e.id;
    EXPECT_TRUE(static_cast<bool>(e.chain)) << e.id;
  }
  EXPECT_EQ(ids.count("SYNTHETIC_VIOLATION"), 0u);
}

TEST(Registry, FindEntry) {
  EXPECT_EQ(find_entry("BUZANO").id, "BUZANO");
  EXPECT_EQ(find_entry("SYNTHETIC_VIOLATION").id, "SYNTHETIC_VIOLATION");
  try {
    find_entry("NO_SUCH_ID");
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "unknown entry id: NO_SUCH_ID");
  }
}

TEST(LinkRatio, Cases) {
  EXPECT_DOUBLE_EQ(link_ratio(1.0, 2.0), 0.5);
  EXPECT_DOUBLE_EQ(link_ratio(0.0, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(link_ratio(2.0, 2.0), 1.0);
  EXPECT_DOUBLE_EQ(link_ratio(-2.0, -1.0), 0.5);
  EXPECT_DOUBLE_EQ(link_ratio(-1.0, 1.0), 0.0);
  EXPECT_GT(link_ratio(3.0, 2.0), 1.0);
  EXPECT_GT(link_ratio(1.0, 0.0), 1.0);
}

TEST(Evaluate, RichardIsTightOnParallelVectors) {
  const auto c = vectors_case({{"a", rvec({1, 0})}, {"b", rvec({1, 0})}, {"x", rvec({1, 0})}});
  const auto r = evaluate("RICHARD", c);
  expect_values(r, {0.5, 0.5});
  EXPECT_TRUE(r.pass);
  EXPECT_DOUBLE_EQ(r.tightness, 1.0);
}

TEST(Evaluate, LupuEquality) {
  const auto c = vectors_case({{"a", rvec({1, 0})}, {"b", rvec({0, 1})}, {"x", rvec({1, 1})}});
  const auto r = evaluate("LUPU", c);
  expect_values(r, {2.0, 2.0});
  EXPECT_TRUE(r.pass);
}

TEST(Evaluate, OstrowskiDiscrete) {
  const auto c = vectors_case({{"x", rvec({1, 0})}, {"y", rvec({0, 1})}, {"z", rvec({1, 0})}});
  const auto r = evaluate("OSTROWSKI_DISCRETE", c);
  expect_values(r, {1.0, 1.0});
  EXPECT_TRUE(r.pass);
}

TEST(Evaluate, RichardGapDominatesDefectTerm) {
  const auto c = vectors_case({{"a", rvec({1, 0})}, {"b", rvec({0, 1})}, {"x", rvec({1, 0})}});
  const auto r = evaluate("REM_23", c);
  expect_values(r, {0.0, 0.25, 0.5});
  EXPECT_TRUE(r.pass);
  ASSERT_EQ(r.link_ratios.size(), 2u);
  EXPECT_DOUBLE_EQ(r.link_ratios[1], 0.5);
}

TEST(Evaluate, PrecupanuGeneralised) {
  const auto c = vectors_case({{"a", rvec({1, 0})}, {"b", rvec({0, 1})}, {"w", rvec({1, 0})}, {"z", rvec({1, 0})}});
  const auto r = evaluate("PREC_GEN", c);
  expect_values(r, {0.0, 0.5});
  EXPECT_TRUE(r.pass);
}

TEST(Evaluate, FujiiKuboIsAlwaysOne) {
  Rng rng(51);
  for (int t = 0; t < 50; ++t) {
    const auto c = vectors_case({{"x", ipx::testing::random_unit(4, rng)}});
    EXPECT_NEAR(evaluate("FUJII_KUBO", c).tightness, 1.0, 1e-12);
  }
}

TEST(Evaluate, SyntheticViolationFails) {
  const auto r = evaluate(synthetic_violation_entry(), vectors_case({{"a", rvec({1, 1})}}));
  EXPECT_FALSE(r.pass);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_DOUBLE_EQ(r.violations[0].excess, 2.0);
  EXPECT_GT(r.tightness, 1.0);
}

TEST(Evaluate, ConstraintViolations) {
  auto expect_violation = [](std::string_view id, const Case& c) {
    try {
      evaluate(id, c);
      ADD_FAILURE() << id << " accepted an invalid case";
    } catch (const std::invalid_argument& e) {
      EXPECT_EQ(std::string(e.what()).rfind("constraint violation", 0), 0u) << e.what();
    }
  };
  expect_violation("REM_23", vectors_case({{"a", rvec({0, 0})}, {"b", rvec({0, 1})}, {"x", rvec({1, 0})}}));
  // complex input to a real-space entry
  expect_violation("RICHARD", vectors_case({{"a", cvec({Complex(0, 1), 1.0})}, {"b", rvec({0, 1})}, {"x", rvec({1, 0})}}));
  expect_violation("RICHARD", vectors_case({{"a", rvec({1, 0})}, {"b", rvec({0, 1})}}));
  expect_violation("FUJII_KUBO", vectors_case({{"x", rvec({1, 1})}}));
  expect_violation("CS", vectors_case({{"x", rvec({1, 0})}, {"y", rvec({1, 0, 0})}}));

  Case th21 = vectors_case({{"a", rvec({1, 0})}, {"b", rvec({0, 1})}, {"x", rvec({1, 1})}});
  th21.params = {{"alpha", Complex(1.0)}, {"beta", Complex(1.0)}};
  expect_violation("TH_21", th21);
  th21.params = {{"alpha", Complex(5.0)}, {"beta", Complex(1.0)}};
  expect_violation("TH_21", th21);
  th21.params = {{"alpha", Complex(1.5)}, {"beta", Complex(1.0)}};
  EXPECT_TRUE(evaluate("TH_21", th21).pass);

  Case dg = vectors_case({{"a", rvec({1, 0})}, {"b", rvec({1, 1})}, {"x", rvec({1, 0})}});
  expect_violation("DRAGOMIR_GOSA", dg);
}

TEST(SampleCase, SatisfiesSignatureForEveryEntry) {
  Rng rng(52);
  for (const auto& e : list_entries()) {
    for (std::size_t d = 1; d <= 5; ++d) {
      if (!dim_feasible(e, d)) {
        EXPECT_THROW(sample_case(e, d, rng), std::runtime_error) << e.id;
        continue;
      }
      for (int t = 0; t < 5; ++t) {
        const Case c = sample_case(e, d, rng);
        EXPECT_NO_THROW(validate_case(e, c)) << e.id << " dim " << d;
        for (const auto& [name, v] : c.vectors) EXPECT_EQ(v.dim(), d);
      }
    }
  }
}

TEST(SampleCase, FamilySizeOption) {
  Rng rng(53);
  const auto c = sample_case(find_entry("SELBERG"), 3, rng, {.family_size = 2});
  EXPECT_EQ(c.family("Z").size(), 2u);
  EXPECT_THROW(sample_case(find_entry("PROP_EORTH"), 2, rng, {.family_size = 2}), std::runtime_error);
}

TEST(ProjectCase, RestoresPerturbedCase) {
  Rng rng(54);
  for (const char* id : {"OSTROWSKI_IP", "PROP_EORTH", "PROD_RICHARD", "COR_CONVEX", "SANDWICH_15"}) {
    const auto& e = find_entry(id);
    for (int t = 0; t < 20; ++t) {
      Case c = sample_case(e, 3, rng);
      for (auto& [name, v] : c.vectors) v += Complex(1e-3) * ipx::testing::random_vec(3, rng, e.real_space);
      for (auto& w : c.weights) w += Complex(1e-3, -1e-3);
      if (project_case(e, c)) {
        EXPECT_NO_THROW(validate_case(e, c)) << id;
      }
    }
  }
}

TEST(Fuzz, CauchySchwarzPasses) {
  const auto s = fuzz("CS", 2000, {1, 2, 3, 4}, 42);
  EXPECT_TRUE(s.pass);
  EXPECT_EQ(s.samples, 8000u);
  EXPECT_EQ(s.violations, 0u);
  EXPECT_LE(s.max_tightness, 1.0 + 1e-9);
}

TEST(Fuzz, ReverseBoundOverDims) {
  const auto s = fuzz("TH_21", 1000, {2, 3, 4, 5, 6}, 7);
  EXPECT_TRUE(s.pass);
  EXPECT_EQ(s.samples, 5000u);
}

TEST(Fuzz, RichardGetsCloseToEquality) {
  const auto s = fuzz("RICHARD", 100000, {2}, 42);
  EXPECT_TRUE(s.pass);
  EXPECT_GE(s.max_tightness, 0.999);
  EXPECT_LE(s.max_tightness, 1.0 + 1e-9);
}

TEST(Fuzz, SyntheticViolationIsCaught) {
  const auto s = fuzz(synthetic_violation_entry(), 10, {2}, 1);
  EXPECT_FALSE(s.pass);
  EXPECT_EQ(s.violations, 10u);
  EXPECT_GT(s.max_excess, 0.0);
}

TEST(Fuzz, DeterministicAndThreadIndependent) {
  const auto a = fuzz("TH_GEN", 500, {2, 3}, 99);
  const auto b = fuzz("TH_GEN", 500, {2, 3}, 99);
  const auto c = fuzz("TH_GEN", 500, {2, 3}, 99, {}, 3);
  EXPECT_EQ(a.max_tightness, b.max_tightness);
  EXPECT_EQ(a.max_excess, b.max_excess);
  EXPECT_EQ(a.max_tightness, c.max_tightness);
  EXPECT_EQ(a.max_excess, c.max_excess);
  const auto d = fuzz("TH_GEN", 500, {2, 3}, 100);
  EXPECT_NE(a.max_tightness, d.max_tightness);
}

TEST(Fuzz, InfeasibleDimThrows) {
  EXPECT_THROW(fuzz("PROP_EORTH", 10, {1}, 1), std::invalid_argument);
  EXPECT_THROW(fuzz("CS", 0, {1}, 1), std::invalid_argument);
  EXPECT_THROW(fuzz("CS", 10, {}, 1), std::invalid_argument);
}

TEST(FuzzSummary, MergeIsAssociative) {
  Rng rng(55);
  std::uniform_real_distribution<double> u(-1.0, 2.0);
  auto random_summary = [&] {
    FuzzSummary s;
    s.id = "X";
    s.samples = rng() % 100;
    s.max_excess = u(rng);
    s.max_tightness = u(rng);
    s.violations = rng() % 3;
    s.pass = s.violations == 0;
    return s;
  };
  for (int t = 0; t < 200; ++t) {
    const auto a = random_summary();
    const auto b = random_summary();
    const auto c = random_summary();
    FuzzSummary left = a;
    left.merge(b);
    left.merge(c);
    FuzzSummary bc = b;
    bc.merge(c);
    FuzzSummary right = a;
    right.merge(bc);
    EXPECT_EQ(left.samples, right.samples);
    EXPECT_EQ(left.max_excess, right.max_excess);
    EXPECT_EQ(left.max_tightness, right.max_tightness);
    EXPECT_EQ(left.violations, right.violations);
    EXPECT_EQ(left.pass, right.pass);
  }
}

TEST(CrossEntry, KdmAtAlphaTwoIsTwiceRichard) {
  Rng rng(56);
  const auto& richard = find_entry("RICHARD");
  for (int t = 0; t < 200; ++t) {
    Case c = sample_case(richard, 3, rng);
    const auto r = evaluate(richard, c);
    c.params["alpha"] = Complex(2.0);
    const auto k = evaluate("KDM_17", c);
    for (std::size_t i = 0; i < 2; ++i) EXPECT_NEAR(k.values[i], 2.0 * r.values[i], 1e-10 * std::max(1.0, k.values[i]));
  }
}

TEST(CrossEntry, EqualParametersScaleTheUnitCase) {
  Rng rng(57);
  const auto& cor = find_entry("COR_19");
  for (int t = 0; t < 200; ++t) {
    Case c = sample_case(cor, 3, rng);
    const auto r = evaluate(cor, c);
    const Complex alpha = ipx::testing::random_scalar(rng);
    c.params = {{"alpha", alpha}, {"beta", alpha}};
    const auto th = evaluate("TH_18", c);
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_NEAR(th.values[i], std::norm(alpha) * r.values[i], 1e-10 * std::max(1.0, th.values[i]));
    }
  }
}

TEST(CrossEntry, PrecGen2ReducesToBuzano) {
  Rng rng(58);
  for (int t = 0; t < 200; ++t) {
    const Vec a = ipx::testing::random_vec(3, rng);
    const Vec b = ipx::testing::random_vec(3, rng);
    const Vec x = ipx::testing::random_vec(3, rng);
    const Vec z = sample(3, {Constraint::orthogonal_to(b), Constraint::nonzero()}, rng);
    const auto bz = evaluate("BUZANO", vectors_case({{"a", a}, {"b", b}, {"x", x}}));
    const auto pg = evaluate("PREC_GEN2", vectors_case({{"a", a}, {"b", b}, {"w", x}, {"z", z}}));
    const double xx = norm_sq(x);
    for (std::size_t i = 0; i < 2; ++i) EXPECT_NEAR(bz.values[i], xx * pg.values[i], 1e-9 * std::max(1.0, bz.values[i]));
  }
}

TEST(CrossEntry, RichardSelbergMatchesRichardOnRealUnitVectors) {
  Rng rng(59);
  for (int t = 0; t < 200; ++t) {
    const auto c = vectors_case({{"a", ipx::testing::random_vec(3, rng, true)},
                                 {"b", ipx::testing::random_vec(3, rng, true)},
                                 {"x", ipx::testing::random_unit(3, rng, true)}});
    const auto rs = evaluate("RICHARD_SELBERG", c);
    const auto r = evaluate("RICHARD", c);
    for (std::size_t i = 0; i < 2; ++i) EXPECT_NEAR(rs.values[i], r.values[i], 1e-10 * std::max(1.0, r.values[i]));
  }
}
