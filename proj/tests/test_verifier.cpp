#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "qalg/verifier.hpp"

using namespace qalg;
using namespace qalg::verify;
using std::numbers::pi;

namespace {

void expect_pass(const IdentityCheck& c) {
  EXPECT_TRUE(c.passed()) << c.name;
  for (const auto& p : c.parts)
    if (!p.informational) EXPECT_TRUE(p.passed) << c.name << ": " << p.label << " residual " << p.residual;
}

}  // namespace

TEST(Verifier, EveryNamedCheckPasses) {
  for (const auto& name : check_names()) expect_pass(run_check(name));
}

TEST(Verifier, UnknownNameThrows) { EXPECT_THROW(run_check("nope"), std::invalid_argument); }

TEST(Verifier, RecouplingSpecialAnglesExact) {
  auto z = OperatorSum::pauli(1, 0, 'Z'), x = OperatorSum::pauli(1, 0, 'X');
  for (double phi : {pi / 4, pi / 2}) {
    auto c = check_recoupling(z, x, 0.9, phi);
    expect_pass(c);
    bool exact_part = false;
    for (const auto& p : c.parts) exact_part = exact_part || (p.metric == Metric::exact && !p.informational && p.label.find("exact") != std::string::npos);
    EXPECT_TRUE(exact_part);
  }
}

TEST(Verifier, RecouplingGeneralAnglesProperty) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  auto a = OperatorSum::pauli_string("ZX"), b = OperatorSum::pauli_string("XY");
  for (int k = 0; k < 10; ++k) expect_pass(check_recoupling(a, b, u(rng), u(rng)));
}

TEST(Verifier, RecouplingNeedsAnticommutation) {
  auto z = OperatorSum::pauli(1, 0, 'Z');
  auto c = check_recoupling(z, z, 0.3, pi / 4);
  EXPECT_FALSE(c.passed());
}

TEST(Verifier, BchRatioTest) {
  auto z = OperatorSum::pauli(1, 0, 'Z'), x = OperatorSum::pauli(1, 0, 'X');
  auto c = check_bch_series(z, x, 1e-2, 4);
  expect_pass(c);
  EXPECT_LT(c.parts.front().residual, 1e-9);
  expect_pass(check_bch_series(z, x, 5e-2, 2));
  for (int order = 0; order <= 5; ++order) expect_pass(check_bch_series(z, x, 2e-2, order));
  // Commuting pair: the series terminates after the first term.
  expect_pass(check_bch_series(z, z, 1e-2, 0));
  EXPECT_THROW(check_bch_series(z, x, 1e-2, 7), std::invalid_argument);
}

TEST(Verifier, AngularAllTriples) {
  for (auto t : {Su2Choice::spin_half, Su2Choice::r_triple, Su2Choice::t_triple})
    for (double phi : {0.0, 0.4, pi / 2, 2.0}) expect_pass(check_angular_recoupling(0.6, phi, t));
}

TEST(Verifier, IonTrapLargerCutoff) { expect_pass(check_iontrap_xy(4)); }

TEST(Verifier, SplitRandomParameters) {
  std::mt19937 rng(12);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int k = 0; k < 10; ++k) expect_pass(check_axy_split(u(rng), u(rng), u(rng), u(rng)));
}
