#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "vecbeam/errors.hpp"
#include "vecbeam/squeezing.hpp"

namespace vecbeam {
namespace {

// 10^(-0.34), evaluated independently.
constexpr double kMinus34dB = 0.457088189614875;
// 0.36 * kMinus34dB + 0.64 and its dB value.
constexpr double kAfterLoss = 0.80455174826135501;
constexpr double kAfterLossDb = -0.94446017119230307;

TEST(Units, DecibelConversions) {
  EXPECT_EQ(db_to_variance(0.0), 1.0);
  EXPECT_NEAR(db_to_variance(-3.4), kMinus34dB, 1e-15);
  for (double db : {-10.0, -3.4, -0.1, 0.0, 2.5, 7.0}) EXPECT_NEAR(variance_to_db(db_to_variance(db)), db, 1e-12);
  EXPECT_THROW(variance_to_db(0.0), DomainError);
  EXPECT_THROW(variance_to_db(-1.0), DomainError);
}

TEST(State, ValidatesVariance) {
  EXPECT_THROW(SqueezingState(0.0), DomainError);
  EXPECT_TRUE(SqueezingState(0.5).squeezed());
  EXPECT_FALSE(SqueezingState(1.0).squeezed());
}

TEST(ApplyLoss, Endpoints) {
  const auto s = SqueezingState::from_db(-3.4);
  EXPECT_EQ(apply_loss(s, 1.0).variance(), s.variance());
  EXPECT_EQ(apply_loss(s, 0.0).variance(), 1.0);
  EXPECT_THROW(apply_loss(s, 1.01), DomainError);
  EXPECT_THROW(apply_loss(s, -0.01), DomainError);
}

TEST(ApplyLoss, SixtyFourPercentLoss) {
  const auto out = apply_loss(SqueezingState::from_db(-3.4), 0.36);
  EXPECT_NEAR(out.variance(), kAfterLoss, 1e-15);
  EXPECT_NEAR(out.db(), kAfterLossDb, 1e-12);
}

TEST(ApplyLoss, UncertaintyScalesToFirstOrder) {
  const auto out = apply_loss(SqueezingState::from_db(-3.4, 0.1), 0.36);
  ASSERT_TRUE(out.uncertainty_db().has_value());
  EXPECT_NEAR(*out.uncertainty_db(), 0.1 * 0.36 * kMinus34dB / kAfterLoss, 1e-15);
  // Finite-difference check of the same slope.
  const double h = 1e-6;
  const double slope = (apply_loss(SqueezingState::from_db(-3.4 + h), 0.36).db() -
                        apply_loss(SqueezingState::from_db(-3.4 - h), 0.36).db()) /
                       (2 * h);
  EXPECT_NEAR(*out.uncertainty_db(), 0.1 * slope, 1e-9);
}

TEST(ApplyLoss, Properties) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> eta(0.0, 1.0);
  std::uniform_real_distribution<double> var(0.05, 6.0);
  for (int k = 0; k < 10000; ++k) {
    const double e1 = eta(rng);
    const double e2 = eta(rng);
    const SqueezingState s(var(rng));
    EXPECT_EQ(apply_loss(SqueezingState(1.0), e1).variance(), 1.0);
    const double v = apply_loss(s, e1).variance();
    EXPECT_NEAR(std::abs(v - 1.0), e1 * std::abs(s.variance() - 1.0), 1e-12);
    EXPECT_LE(std::abs(v - 1.0), std::abs(s.variance() - 1.0) + 1e-15);
    EXPECT_GE(v, std::min(s.variance(), 1.0) - 1e-15);
    EXPECT_LE(v, std::max(s.variance(), 1.0) + 1e-15);
    EXPECT_NEAR(apply_loss(apply_loss(s, e1), e2).variance(), apply_loss(s, e1 * e2).variance(), 1e-12);
  }
}

TEST(Budget, EmptyAndComposed) {
  const auto empty = budget(-3.4, {});
  EXPECT_EQ(empty.output().variance(), db_to_variance(-3.4));
  EXPECT_EQ(empty.total_transmission(), 1.0);

  const std::vector<double> twice{0.6, 0.6};
  const std::vector<double> once{0.36};
  const auto a = budget(-3.4, twice);
  const auto b = budget(-3.4, once);
  EXPECT_NEAR(a.output().db(), b.output().db(), 1e-12);
  EXPECT_NEAR(b.output().db(), kAfterLossDb, 1e-12);
  EXPECT_NEAR(a.total_transmission(), 0.36, 1e-15);
  ASSERT_EQ(a.stages.size(), 2u);
  EXPECT_NEAR(a.stages[0].cumulative_transmission, 0.6, 1e-15);
  const std::vector<double> bad{0.5, 1.5};
  EXPECT_THROW(budget(-3.4, bad), DomainError);
}

TEST(Budget, Formatting) {
  const std::vector<double> etas{0.6, 0.6};
  const auto report = budget(-3.4, etas, 0.1);
  const auto csv = format_budget_csv(report);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "stage,eta,cumulative_eta,variance,db,uncertainty_db");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  const auto table = format_budget_table(report);
  EXPECT_NE(table.find("-0.944"), std::string::npos);
}

TEST(LossForTarget, Examples) {
  // (V_out - 1) / (V_in - 1) with V = 10^(dB/10), evaluated independently.
  EXPECT_NEAR(loss_for_target(-3.4, -0.9), 0.34475117368164906, 1e-12);
  EXPECT_DOUBLE_EQ(loss_for_target(-2.0, -2.0), 1.0);
  EXPECT_DOUBLE_EQ(loss_for_target(3.0, 3.0), 1.0);
  EXPECT_NEAR(loss_for_target(-3.4, kAfterLossDb), 0.36, 1e-12);
  EXPECT_THROW(loss_for_target(-3.0, -4.0), DomainError);
  EXPECT_THROW(loss_for_target(-3.0, 1.0), DomainError);
  EXPECT_THROW(loss_for_target(0.0, -1.0), DomainError);
}

TEST(LossForTarget, AntiSqueezingContractsToo) {
  const auto out = apply_loss(SqueezingState::from_db(6.0), 0.5);
  EXPECT_FALSE(out.squeezed());
  EXPECT_NEAR(loss_for_target(6.0, out.db()), 0.5, 1e-12);
}

}  // namespace
}  // namespace vecbeam
