#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "qalg/dense.hpp"
#include "qalg/pauli.hpp"

using namespace qalg;

namespace {

oracle::Mat dense_string(const std::string& letters) {
  const int n = static_cast<int>(letters.size());
  oracle::Mat m = oracle::id(n);
  for (int k = 0; k < n; ++k) m = m * oracle::embed(oracle::pauli(letters[k]), k, n);
  return m;
}

std::string random_letters(std::mt19937& rng, int n) {
  static const char kL[] = "IXYZ";
  std::string s;
  for (int k = 0; k < n; ++k) s.push_back(kL[rng() % 4]);
  return s;
}

OperatorSum random_sum(std::mt19937& rng, int n, int terms) {
  OperatorSum op(n);
  for (int t = 0; t < terms; ++t) {
    Coeff c(mpq_class(static_cast<long>(rng() % 7) - 3, 1 + rng() % 4), mpq_class(static_cast<long>(rng() % 5) - 2, 2));
    op += OperatorSum::pauli_string(random_letters(rng, n), c);
  }
  return op;
}

}  // namespace

TEST(Coeff, DecimalsAreExactRationals) {
  EXPECT_EQ(Coeff::parse_real("0.1"), Coeff(mpq_class(1, 10)));
  EXPECT_EQ(Coeff::parse_real("-2.5e-1"), Coeff(mpq_class(-1, 4)));
  EXPECT_EQ(Coeff::parse_real("3/6"), Coeff(mpq_class(1, 2)));
  EXPECT_EQ(Coeff::parse_real("1e3"), Coeff(1000));
  EXPECT_THROW(Coeff::parse_real("x"), std::invalid_argument);
  EXPECT_THROW(Coeff::parse_real("1/0"), std::invalid_argument);
}

TEST(Coeff, FromDoubleIsExact) {
  Coeff c = Coeff::from_double(0.1);
  EXPECT_NE(c, Coeff(mpq_class(1, 10)));
  EXPECT_EQ(c.re().get_d(), 0.1);
  EXPECT_EQ(Coeff::from_double(-0.375), Coeff(mpq_class(-3, 8)));
}

TEST(Coeff, ComplexArithmetic) {
  Coeff i = Coeff::i();
  EXPECT_EQ(i * i, Coeff(-1));
  EXPECT_EQ(Coeff::i_pow(3), -i);
  EXPECT_EQ(Coeff(2, 1) / Coeff(0, 1), Coeff(1, -2));
  EXPECT_EQ(Coeff(mpq_class(1, 2), -1).str(), "(1/2,-1)");
  EXPECT_EQ(Coeff(mpq_class(-3, 2)).str(), "-3/2");
}

TEST(PauliAlgebra, SingleModeProducts) {
  auto x = OperatorSum::pauli(1, 0, 'X'), y = OperatorSum::pauli(1, 0, 'Y'), z = OperatorSum::pauli(1, 0, 'Z');
  const auto i = Coeff::i();
  EXPECT_EQ(x * y, z * i);
  EXPECT_EQ(y * z, x * i);
  EXPECT_EQ(z * x, y * i);
  EXPECT_EQ(x * x, OperatorSum::identity(1));
  EXPECT_EQ(commutator(x, y), z * Coeff(0, 2));
  EXPECT_TRUE(anticommutator(x, y).is_zero());
}

TEST(PauliAlgebra, ProductMatchesDenseOracle) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    std::string la = random_letters(rng, n), lb = random_letters(rng, n);
    OperatorSum prod = OperatorSum::pauli_string(la) * OperatorSum::pauli_string(lb);
    oracle::Mat expect = dense_string(la) * dense_string(lb);
    EXPECT_LT(oracle::maxabs(realize(prod) - expect), 1e-14) << la << " * " << lb;
  }
}

TEST(PauliAlgebra, AnticommutationRuleMatchesDense) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    std::string la = random_letters(rng, n), lb = random_letters(rng, n);
    oracle::Mat a = dense_string(la), b = dense_string(lb);
    bool dense_anti = oracle::maxabs(a * b + b * a) < 1e-12;
    auto ka = OperatorSum::pauli_string(la).terms().begin()->first;
    auto kb = OperatorSum::pauli_string(lb).terms().begin()->first;
    EXPECT_EQ(anticommutes(ka, kb), dense_anti);
  }
}

TEST(PauliAlgebra, CommutatorMatchesDense) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    OperatorSum a = random_sum(rng, n, 4), b = random_sum(rng, n, 4);
    DenseMatrix A = realize(a), B = realize(b);
    EXPECT_LT(max_abs_diff(realize(commutator(a, b)), A * B - B * A), 1e-12);
    EXPECT_LT(max_abs_diff(realize(anticommutator(a, b)), A * B + B * A), 1e-12);
    EXPECT_LT(max_abs_diff(realize(a.adjoint()), A.adjoint()), 1e-14);
  }
}

TEST(PauliAlgebra, Associativity) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    OperatorSum a = random_sum(rng, 3, 3), b = random_sum(rng, 3, 3), c = random_sum(rng, 3, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(PauliAlgebra, HermiticityAndInnerProduct) {
  auto xy = OperatorSum::pauli_string("XY");
  EXPECT_TRUE(xy.is_hermitian());
  EXPECT_FALSE((xy * Coeff::i()).is_hermitian());
  EXPECT_EQ(xy.inner(xy), Coeff(1));
  EXPECT_EQ(xy.inner(OperatorSum::pauli_string("YX")), Coeff(0));
}

TEST(PauliAlgebra, ModeMismatchThrows) {
  EXPECT_THROW(OperatorSum::pauli(2, 0, 'X') + OperatorSum::pauli(3, 0, 'X'), ModeMismatch);
  EXPECT_THROW(OperatorSum::pauli(2, 0, 'X') * OperatorSum::pauli(3, 0, 'X'), ModeMismatch);
  EXPECT_THROW(OperatorSum::pauli(2, 2, 'X'), std::out_of_range);
  EXPECT_THROW(check_modes(kMaxModes + 1), std::invalid_argument);
}

TEST(PauliAlgebra, LadderOperators) {
  auto sp = sigma_plus(1, 0), sm = sigma_minus(1, 0), z = OperatorSum::pauli(1, 0, 'Z');
  EXPECT_EQ(commutator(sp, sm), z);
  EXPECT_TRUE((sp * sp).is_zero());
  EXPECT_EQ(number_op(1, 0), sp * sm);
  // a^dag = sigma^+ moves the empty state (bit 1) to the occupied one (bit 0).
  EXPECT_LT(oracle::maxabs(realize(sp) - oracle::ad(0, 1)), 1e-15);
  // Parity is +1 on the vacuum (all bits 1).
  DenseMatrix p = realize(parity_op(3));
  EXPECT_DOUBLE_EQ(p(7, 7).real(), 1.0);
  EXPECT_DOUBLE_EQ(p(6, 6).real(), -1.0);
}

TEST(PauliAlgebra, PrinterFormat) {
  OperatorSum op = OperatorSum::pauli_string("XX", Coeff(mpq_class(1, 2))) + OperatorSum::identity(2, Coeff(-1));
  EXPECT_EQ(op.str(), "-1 + 1/2 X(0) X(1)");
  EXPECT_EQ(OperatorSum::zero(2).str(), "0");
}

TEST(Dense, SerialParallelAndKroneckerAgree) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + static_cast<int>(rng() % 7);
    OperatorSum op = random_sum(rng, n, 6);
    DenseMatrix s = kernels::realize_serial(op), p = kernels::realize_parallel(op);
    EXPECT_TRUE(s == p) << "serial and parallel must be bit-identical";
    EXPECT_LT(max_abs_diff(s, kernels::realize_kronecker(op)), 1e-14);
  }
}

TEST(Dense, LimitIsEnforced) {
  int old = dense_limit();
  set_dense_limit(3);
  EXPECT_THROW(realize(OperatorSum::identity(4)), DimensionLimitError);
  EXPECT_NO_THROW(realize(OperatorSum::identity(3)));
  set_dense_limit(old);
}

TEST(Dense, ExponentialClosedForm) {
  const double t = 0.7;
  DenseMatrix z = realize(OperatorSum::pauli(1, 0, 'Z'));
  DenseMatrix e = matrix_exponential(z, cplx(0, t));
  EXPECT_NEAR(std::abs(e(0, 0) - std::exp(cplx(0, t))), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(e(1, 1) - std::exp(cplx(0, -t))), 0.0, 1e-15);
  DenseMatrix phased = e * std::exp(cplx(0, 1.2));
  EXPECT_LT(max_abs_diff_up_to_phase(phased, e), 1e-14);
}
