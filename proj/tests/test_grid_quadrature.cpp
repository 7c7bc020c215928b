#include "dirac_magneto/grid_quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace dmag;
using V3 = Vector3<double>;

namespace {

constexpr double pi = std::numbers::pi;

BoxRegion<double> unit_box(int n) { return BoxRegion<double>::cube(V3::Zero(), 1.0, n); }

QuadratureRule simpson(int levels = 2) { return {QuadratureKind::simpson, levels}; }

}  // namespace

TEST(IntegrateScalar, ConstantOverUnitBoxIsExact) {
  for (int n : {3, 5, 9, 17}) {
    const auto r = integrate_scalar([](const V3&) { return 1.0; }, unit_box(n), simpson());
    EXPECT_EQ(r.value, 1.0) << n;
  }
}

TEST(IntegrateScalar, LinearFunction) {
  const auto r = integrate_scalar([](const V3& x) { return x(0); }, unit_box(5), simpson());
  EXPECT_NEAR(r.value, 0.5, 1e-15);
  EXPECT_LE(r.error_estimate, 1e-15);
  EXPECT_EQ(r.levels_used, 2);
}

TEST(IntegrateScalar, SineProductAgainstSeparableReference) {
  // Separable 1D reference: (int_0^pi sin)^3 = (1 - cos(pi))^3.
  const double reference = std::pow(1.0 - std::cos(pi), 3);
  // 33 nodes refined once gives the 65^3 finest grid.
  const BoxRegion<double> box = BoxRegion<double>::cube(V3::Zero(), pi, 33);
  const auto r = integrate_scalar([](const V3& x) { return std::sin(x(0)) * std::sin(x(1)) * std::sin(x(2)); }, box,
                                  simpson());
  EXPECT_NEAR(r.value, reference, 1e-6);
  EXPECT_NEAR(reference, 8.0, 1e-15);
  // The Richardson estimate must bound the true error to within a small factor.
  EXPECT_GT(r.error_estimate, 0.0);
  EXPECT_NEAR(std::abs(r.value - reference), r.error_estimate, 0.1 * r.error_estimate);
}

TEST(IntegrateVector, ConstantField) {
  const auto r = integrate_vector([](const V3&) { return V3(1, 2, 3); }, unit_box(5), simpson());
  EXPECT_LE((r.value - V3(1, 2, 3)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(IntegrateVector, OddFieldOverCenteredBox) {
  const BoxRegion<double> box{V3(-1, -2, -0.5), V3(2, 4, 1), {7, 9, 5}};
  const auto r = integrate_vector([](const V3& x) { return x; }, box, simpson());
  EXPECT_LE(r.value.cwiseAbs().maxCoeff(), 1e-12);
}

TEST(IntegrateVector, SineAlongX) {
  const BoxRegion<double> box{V3::Zero(), V3(pi, 1, 1), {129, 3, 3}};
  const auto r = integrate_vector([](const V3& x) { return V3(std::sin(x(0)), 0, 0); }, box, simpson());
  EXPECT_LE((r.value - V3(2, 0, 0)).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(IntegrateScalar, NonFiniteSampleReportsPoint) {
  try {
    integrate_scalar([](const V3& x) { return x(0) > 0.7 ? std::nan("") : 1.0; }, unit_box(5), simpson());
    FAIL() << "expected IntegrationError";
  } catch (const IntegrationError& e) {
    EXPECT_GT(e.point()[0], 0.7);
  }
}

TEST(IntegrateScalar, InvalidRegionsAndRules) {
  auto f = [](const V3&) { return 1.0; };
  EXPECT_THROW(integrate_scalar(f, unit_box(4), simpson()), std::invalid_argument);
  EXPECT_THROW(integrate_scalar(f, unit_box(1), simpson()), std::invalid_argument);
  EXPECT_THROW(integrate_scalar(f, unit_box(5), simpson(0)), std::invalid_argument);
  BoxRegion<double> flat = unit_box(5);
  flat.side_lengths(1) = 0.0;
  EXPECT_THROW(integrate_scalar(f, flat, simpson()), std::invalid_argument);
  EXPECT_THROW(level_grids(unit_box(9), simpson(12)), std::invalid_argument);
}

TEST(LevelGrids, RefinesUpwardFromRegionCounts) {
  const auto s = level_grids(unit_box(9), simpson(3));
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].samples_per_axis[0], 33);
  EXPECT_EQ(s[1].samples_per_axis[0], 17);
  EXPECT_EQ(s[2].samples_per_axis[0], 9);
  const auto m = level_grids(unit_box(7), QuadratureRule{QuadratureKind::midpoint, 2});
  EXPECT_EQ(m[0].samples_per_axis[0], 14);
  EXPECT_EQ(m[1].samples_per_axis[0], 7);
  EXPECT_EQ(level_grids(unit_box(3), simpson(1)).size(), 1u);
}

TEST(IntegrateScalar, MidpointCrossCheck) {
  const QuadratureRule mid{QuadratureKind::midpoint, 2};
  // Midpoint is exact for linear integrands.
  const auto lin = integrate_scalar([](const V3& x) { return 2 * x(0) - x(1) + 3 * x(2); }, unit_box(8), mid);
  EXPECT_NEAR(lin.value, 2.0, 1e-14);
  auto f = [](const V3& x) { return std::exp(x(0)) * std::cos(x(1)) * (1 + x(2) * x(2)); };
  const double exact = (std::exp(1.0) - 1) * std::sin(1.0) * (4.0 / 3.0);
  const auto m = integrate_scalar(f, unit_box(64), mid);
  const auto s = integrate_scalar(f, unit_box(65), simpson());
  EXPECT_NEAR(m.value, exact, 3 * m.error_estimate);
  EXPECT_NEAR(s.value, exact, 1e-9);
  EXPECT_NEAR(m.value, s.value, 3 * m.error_estimate);
}

TEST(IntegrateScalar, LinearityOnFixedGrid) {
  auto f = [](const V3& x) { return std::exp(-x.squaredNorm()); };
  auto g = [](const V3& x) { return std::sin(3 * x(0)) * x(1); };
  const double a = 2.5;
  const double b = -0.75;
  const auto box = unit_box(17);
  const double lhs = integrate_scalar([&](const V3& x) { return a * f(x) + b * g(x); }, box, simpson()).value;
  const double rhs = a * integrate_scalar(f, box, simpson()).value + b * integrate_scalar(g, box, simpson()).value;
  EXPECT_NEAR(lhs, rhs, 1e-12);
}

TEST(IntegrateScalar, BitIdenticalReruns) {
  auto f = [](const V3& x) { return std::cos(x(0) * x(1)) + std::exp(x(2)); };
  const auto box = unit_box(33);
  const auto r1 = integrate_scalar(f, box, simpson());
  const auto r2 = integrate_scalar(f, box, simpson());
  EXPECT_EQ(r1.value, r2.value);
  EXPECT_EQ(r1.error_estimate, r2.error_estimate);
}

TEST(IntegrateScalar, BoxAdditivity) {
  auto f = [](const V3& x) { return std::exp(x(0)) * std::cos(2 * x(1)) * x(2) * x(2); };
  const BoxRegion<double> whole{V3::Zero(), V3(2, 1, 1), {33, 17, 17}};
  BoxRegion<double> left{V3::Zero(), V3(1, 1, 1), {17, 17, 17}};
  BoxRegion<double> right{V3(1, 0, 0), V3(1, 1, 1), {17, 17, 17}};
  const auto w = integrate_scalar(f, whole, simpson());
  const auto l = integrate_scalar(f, left, simpson());
  const auto r = integrate_scalar(f, right, simpson());
  EXPECT_LE(std::abs(w.value - (l.value + r.value)), w.error_estimate + l.error_estimate + r.error_estimate + 1e-14);
}

TEST(ConvergenceStudy, QuarticErrorRatio) {
  // Exact value of int x^4 over the unit cube is 1/5.
  const auto rows = convergence_study([](const V3& x) { return std::pow(x(0), 4); }, unit_box(3),
                                      QuadratureKind::simpson, 3);
  ASSERT_EQ(rows.size(), 3u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double ratio = std::abs(rows[i - 1].value - 0.2) / std::abs(rows[i].value - 0.2);
    EXPECT_GE(ratio, 12.0);
    EXPECT_LE(ratio, 20.0);
    EXPECT_NEAR(rows[i].spacing, rows[i - 1].spacing / 2, 1e-15);
  }
  ASSERT_TRUE(rows[2].ratio.has_value());
  EXPECT_GE(*rows[2].ratio, 12.0);
  EXPECT_LE(*rows[2].ratio, 20.0);
}

TEST(ConvergenceStudy, CubicPolynomialsAreExactAtEveryLevel) {
  // int (x^3 + x y^2 - 2 z^3 + x y z) over the unit cube = 1/4 + 1/6 - 1/2 + 1/8.
  const double exact = 0.25 + 1.0 / 6.0 - 0.5 + 0.125;
  const auto rows = convergence_study(
      [](const V3& x) { return x(0) * x(0) * x(0) + x(0) * x(1) * x(1) - 2 * x(2) * x(2) * x(2) + x.prod(); },
      unit_box(3), QuadratureKind::simpson, 4);
  for (const auto& row : rows) EXPECT_NEAR(row.value, exact, 1e-13);
}

TEST(ConvergenceStudy, ConstantIdenticalAtAllLevels) {
  const auto rows = convergence_study([](const V3&) { return 3.0; }, unit_box(3), QuadratureKind::simpson, 3);
  for (const auto& row : rows) EXPECT_EQ(row.value, rows.front().value);
  EXPECT_THROW(convergence_study([](const V3&) { return 3.0; }, unit_box(3), QuadratureKind::simpson, 1),
               std::invalid_argument);
}
