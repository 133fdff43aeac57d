#include <gtest/gtest.h>

#include <cmath>

#include "atxxz/eigensolve.hpp"
#include "atxxz/errors.hpp"
#include "atxxz/observables.hpp"

using namespace atxxz;

namespace {

Series sample(double start, double stop, double step, double (*f)(double)) {
  Series s;
  s.parameter = "delta";
  s.grid = uniform_grid(start, stop, step);
  for (double x : s.grid) s.values.push_back(f(x));
  s.descriptor = "test";
  return s;
}

}  // namespace

TEST(Observables, AllPlusState) {
  ModelParams p{Model::AshkinTeller, 3, 1.0, 1.0, 1.0};
  auto b = std::make_shared<const SpinBasis>(6, ground_sector(p));
  const auto plus = basis_state(b, 0, Frame::X);
  EXPECT_DOUBLE_EQ(magnetization_x(plus, p), 1.0);
  EXPECT_DOUBLE_EQ(correlator_x(plus, p), 1.0);
}

TEST(Observables, TranslationInvariantProfile) {
  ModelParams p{Model::AshkinTeller, 5, 1.0, 0.8, 1.3};
  const auto g = solve_ground_sector(p);
  const auto prof = x_profile(g.states[0], p);
  ASSERT_EQ(prof.sigma.size(), 5u);
  for (std::size_t j = 1; j < 5; ++j) {
    EXPECT_NEAR(prof.sigma[j], prof.sigma[0], 1e-9);
    EXPECT_NEAR(prof.tau[j], prof.tau[0], 1e-9);
    EXPECT_NEAR(prof.frontal[j], prof.frontal[0], 1e-9);
  }
  EXPECT_NEAR(prof.sigma[0], prof.tau[0], 1e-9);
}

TEST(Observables, SymmetryViolationAndModelCheck) {
  ModelParams p{Model::AshkinTeller, 2, 1.0, 1.0, 1.0};
  auto b = std::make_shared<const SpinBasis>(4, FullSector{});
  // sigma_1 flipped to |->, tau_1 kept at |+>.
  const auto broken = basis_state(b, 0b0001, Frame::X);
  EXPECT_THROW(magnetization_x(broken, p), SymmetryViolation);
  ModelParams xxz{Model::StaggeredXXZ, 2, 1.0, 1.0, 1.0};
  EXPECT_THROW(magnetization_x(basis_state(b, 0), xxz), ArgumentError);
}

TEST(FiniteDifference, QuadraticFirstDerivativeExact) {
  const auto s = sample(0.0, 2.0, 0.1, [](double x) { return x * x; });
  const auto d = finite_difference(s, 1);
  for (std::size_t i = 0; i < d.grid.size(); ++i) EXPECT_NEAR(d.values[i], 2.0 * d.grid[i], 1e-12);
  const auto d2 = finite_difference(s, 2);
  for (double v : d2.values) EXPECT_NEAR(v, 2.0, 1e-9);
}

TEST(FiniteDifference, ConstantIsZero) {
  const auto s = sample(0.0, 1.0, 0.25, [](double) { return 4.2; });
  for (double v : finite_difference(s, 1).values) EXPECT_NEAR(v, 0.0, 1e-12);
}

TEST(FiniteDifference, SecondOrderMatchesRepeatedFirst) {
  const double h = 0.01;
  const auto s = sample(0.0, 1.0, h, [](double x) { return std::sin(3.0 * x); });
  const auto d2 = finite_difference(s, 2);
  const auto dd = finite_difference(finite_difference(s, 1), 1);
  // Interior, away from the one-sided ends: difference is O(h^2) with
  // constant bounded by |f''''| = 81.
  for (std::size_t i = 3; i + 3 < s.grid.size(); ++i) EXPECT_LE(std::abs(d2.values[i] - dd.values[i]), 81.0 * h * h);
  for (std::size_t i = 1; i + 1 < s.grid.size(); ++i) {
    EXPECT_NEAR(d2.values[i], -9.0 * std::sin(3.0 * s.grid[i]), 81.0 * h * h / 12.0 + 1e-8);
  }
}

TEST(FiniteDifference, Errors) {
  Series s{"delta", {0.0, 0.1}, {1.0, 2.0}, ""};
  EXPECT_THROW(finite_difference(s, 1), ArgumentError);
  Series uneven{"delta", {0.0, 0.1, 0.3}, {1.0, 2.0, 3.0}, ""};
  EXPECT_THROW(finite_difference(uneven, 1), ArgumentError);
  Series ok{"delta", {0.0, 0.1, 0.2}, {1.0, 2.0, 3.0}, ""};
  EXPECT_THROW(finite_difference(ok, 3), ArgumentError);
  Series mismatch{"delta", {0.0, 0.1, 0.2}, {1.0, 2.0}, ""};
  EXPECT_THROW(mismatch.validate(), ArgumentError);
}

TEST(Extremes, SingleMaxNearOne) {
  const auto s = sample(0.0, 2.0, 0.1, [](double x) { return -(x - 1.0) * (x - 1.0); });
  const auto e = locate_extremes(s);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].kind, ExtremeKind::Max);
  EXPECT_NEAR(e[0].parameter, 1.0, 1e-12);
}

TEST(Extremes, MonotoneHasNone) {
  EXPECT_TRUE(locate_extremes(sample(0.0, 1.0, 0.1, [](double x) { return x * x * x; })).empty());
}

TEST(Extremes, PlateauReportsSmallestParameter) {
  Series s{"beta", {0.0, 1.0, 2.0, 3.0, 4.0}, {0.0, 1.0, 1.0, 0.5, 0.7}, ""};
  const auto e = locate_extremes(s);
  ASSERT_EQ(e.size(), 2u);
  EXPECT_EQ(e[0].kind, ExtremeKind::Max);
  EXPECT_DOUBLE_EQ(e[0].parameter, 1.0);
  EXPECT_EQ(e[1].kind, ExtremeKind::Min);
  EXPECT_DOUBLE_EQ(e[1].parameter, 3.0);
}

TEST(Grid, InclusiveStop) {
  const auto g = uniform_grid(0.5, 1.5, 0.025);
  EXPECT_EQ(g.size(), 41u);
  EXPECT_NEAR(g.back(), 1.5, 1e-12);
}
