#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "qalg/thermal.hpp"

using namespace qalg::thermal;

TEST(Thermal, HalfFillingAtSymmetricPoint) {
  for (double kT : {0.01, 1.0, 50.0}) {
    ThermalParams p{{0.5, 1.5}, 1.0, kT, false};
    auto n = occupation(p);
    EXPECT_NEAR(n[0], 0.5, 1e-15);
    EXPECT_LT(n[1], 0.5);
  }
}

TEST(Thermal, ZeroTemperatureStep) {
  ThermalParams p{{0.2, 0.5, 0.9}, 1.0, 0.0, true};
  auto n = occupation(p);
  EXPECT_EQ(n[0], 1.0);
  EXPECT_EQ(n[1], 0.5);
  EXPECT_EQ(n[2], 0.0);
  // Small kT approaches the step.
  ThermalParams q{{0.2, 0.9}, 1.0, 1e-3, false};
  auto m = occupation(q);
  EXPECT_NEAR(m[0], 1.0, 1e-12);
  EXPECT_NEAR(m[1], 0.0, 1e-12);
  EXPECT_LE(m[0], 1.0);
}

TEST(Thermal, FiniteTemperatureBelowOne) {
  ThermalParams p{{0.1}, 1.0, 0.5, false};
  EXPECT_LT(occupation(p)[0], 1.0);
  EXPECT_GT(occupation(p)[0], 0.5);
}

TEST(Thermal, ParticleHoleSumRule) {
  for (int k = 0; k < 100; ++k) {
    double x = -50.0 + 100.0 * k / 99.0;
    EXPECT_NEAR(fermi_dirac(x) + fermi_dirac(-x), 1.0, 1e-12) << x;
  }
  EXPECT_EQ(fermi_dirac(1e6), 0.0);
  EXPECT_EQ(fermi_dirac(-1e6), 1.0);
  EXPECT_FALSE(std::isnan(fermi_dirac(800.0)));
}

TEST(Thermal, Monotonicity) {
  double prev = 1.0;
  for (double b = 0.1; b < 3.0; b += 0.1) {
    double n = occupation({{b}, 1.0, 0.3, false})[0];
    EXPECT_LT(n, prev);
    prev = n;
  }
  prev = 0.0;
  for (double mu = -1.0; mu < 3.0; mu += 0.1) {
    double n = occupation({{0.5}, mu, 0.3, false})[0];
    EXPECT_GT(n, prev);
    prev = n;
  }
  // Above the symmetric point, heating raises the occupation.
  EXPECT_LT(occupation({{1.0}, 1.0, 0.1, false})[0], occupation({{1.0}, 1.0, 1.0, false})[0]);
}

TEST(Thermal, Validation) {
  EXPECT_THROW(occupation({{0.5}, 1.0, 0.0, false}), std::invalid_argument);
  EXPECT_THROW(occupation({{-0.5}, 1.0, 1.0, false}), std::invalid_argument);
  EXPECT_THROW(occupation({{}, 1.0, 1.0, false}), std::invalid_argument);
  EXPECT_NO_THROW(occupation({{0.5}, 1.0, 0.0, true}));
}

TEST(Thermal, AmbiguousBand) {
  ThermalParams p{{0.3, 0.7, 1.2}, 1.0, 1.0, false};
  EXPECT_EQ(ambiguous_sites(p), (std::vector<int>{1}));
}
