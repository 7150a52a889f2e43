#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "qalg/codes.hpp"
#include "qalg/dense.hpp"
#include "qalg/generator_sets.hpp"
#include "qalg/lie_engine.hpp"

using namespace qalg;
using lie::GeneratorSet;

namespace {

std::vector<oracle::Mat> dense_gens(const GeneratorSet& s) {
  std::vector<oracle::Mat> out;
  for (const auto& g : s.generators) out.push_back(realize(g));
  return out;
}

bool hit(const lie::AlgebraVerdict& v, const std::string& name) {
  for (const auto& m : v.matches)
    if (m.name == name) return m.hit;
  return false;
}

}  // namespace

// Dimensions confirmed against an independent dense Gram-Schmidt closure.
class PresetDims : public ::testing::TestWithParam<std::tuple<std::string, int>> {};

TEST_P(PresetDims, ExactClosureMatchesDenseOracle) {
  auto [name, n] = GetParam();
  auto set = lie::sets::preset(name, n);
  auto basis = lie::close(set);
  ASSERT_TRUE(basis.closed);
  EXPECT_EQ(basis.dimension, oracle::closure_dim(dense_gens(set))) << name << " N=" << n;
  EXPECT_EQ(basis.dimension_traceless, oracle::closure_dim(dense_gens(set), true)) << name << " N=" << n;
}

INSTANTIATE_TEST_SUITE_P(Sets, PresetDims,
                         ::testing::Combine(::testing::Values("su", "so2n", "so2n1", "u2n", "su-fermion", "so2n-fermion",
                                                              "so2n1-fermion", "u2n-fermion", "xy-nn", "xyz", "hop-all",
                                                              "hop-all-fermion", "bilinear-all"),
                                            ::testing::Values(2, 3)));

TEST(Closure, TableDimensions) {
  for (int n = 2; n <= 3; ++n) {
    for (std::string suffix : {"", "-fermion"}) {
      auto su = lie::close(lie::sets::preset("su" + suffix, n));
      auto so = lie::close(lie::sets::preset("so2n" + suffix, n));
      auto so1 = lie::close(lie::sets::preset("so2n1" + suffix, n));
      auto u = lie::close(lie::sets::preset("u2n" + suffix, n));
      EXPECT_EQ(su.dimension_traceless, size_t(n * n - 1));
      EXPECT_EQ(so.dimension_traceless, size_t(n * (2 * n - 1)));
      EXPECT_EQ(so1.dimension_traceless, size_t(n * (2 * n + 1)));
      EXPECT_EQ(u.dimension_traceless, (size_t(1) << (2 * n)) - 1);
      EXPECT_TRUE(hit(lie::classify_algebra(so), "so(2N)"));
      EXPECT_TRUE(hit(lie::classify_algebra(so1), "so(2N+1)"));
      EXPECT_TRUE(lie::classify_algebra(u).universal_full_space);
    }
  }
}

TEST(Closure, XYChainIsNotUniversal) {
  for (int n = 3; n <= 4; ++n) {
    auto b = lie::close(lie::sets::xy_nearest_neighbor(n));
    auto v = lie::classify_algebra(b);
    EXPECT_EQ(b.dimension, size_t(n * n));
    EXPECT_FALSE(v.universal_full_space);
    EXPECT_TRUE(v.conserves_number);
    EXPECT_TRUE(hit(v, "u(N)"));
  }
}

TEST(Closure, XYZConservesParity) {
  for (int n = 2; n <= 3; ++n) {
    auto b = lie::close(lie::sets::xyz_without_fields(n));
    auto p = parity_op(n);
    for (const auto& e : b.basis) EXPECT_TRUE(commutator(e, p).is_zero());
    EXPECT_LE(b.dimension, size_t(1) << (2 * n - 1));
    EXPECT_TRUE(lie::classify_algebra(b).conserves_parity);
  }
}

TEST(Closure, SerialAndParallelBitIdentical) {
  for (const char* name : {"u2n", "xyz", "so2n1"}) {
    auto set = lie::sets::preset(name, 3);
    lie::CloseOptions serial;
    serial.parallel = false;
    lie::CloseOptions small_batches;
    small_batches.batch_size = 7;
    auto a = lie::close(set, serial), b = lie::close(set), c = lie::close(set, small_batches);
    EXPECT_EQ(a.basis, b.basis) << name;
    EXPECT_EQ(a.basis, c.basis) << name;
    EXPECT_EQ(a.rounds, b.rounds);
  }
}

TEST(Closure, InvariantUnderGeneratorPermutation) {
  std::mt19937 rng(31337);
  for (const char* name : {"su", "so2n", "so2n1", "u2n", "xy-nn"}) {
    auto set = lie::sets::preset(name, 3);
    const size_t dim = lie::close(set).dimension;
    for (int k = 0; k < 10; ++k) {
      auto perm = set;
      std::shuffle(perm.generators.begin(), perm.generators.end(), rng);
      EXPECT_EQ(lie::close(perm).dimension, dim) << name;
    }
  }
}

TEST(Closure, BasisElementsArePrimitiveAndHermitian) {
  auto b = lie::close(lie::sets::preset("so2n", 3));
  for (const auto& e : b.basis) {
    EXPECT_TRUE(e.is_hermitian());
    for (const auto& [k, c] : e.terms()) EXPECT_EQ(c.re().get_den(), 1);
  }
  EXPECT_GE(b.provenance_depth(), 1);
  EXPECT_EQ(b.provenance.size(), b.basis.size());
}

TEST(Closure, MaxDimStopsEarly) {
  lie::CloseOptions opt;
  opt.max_dim = 5;
  auto b = lie::close(lie::sets::preset("u2n", 3), opt);
  EXPECT_FALSE(b.closed);
  EXPECT_LE(b.dimension, 5u);
  EXPECT_THROW(lie::classify_algebra(b), std::logic_error);
}

TEST(Closure, RejectsBadGenerators) {
  GeneratorSet s{2, "bad", {sigma_plus(2, 0)}, {}, true};
  EXPECT_THROW(lie::close(s), std::invalid_argument);
  GeneratorSet z{2, "zero", {OperatorSum(2)}, {}, true};
  EXPECT_THROW(lie::close(z), std::invalid_argument);
  GeneratorSet m{2, "mismatch", {OperatorSum::pauli(3, 0, 'X')}, {}, true};
  EXPECT_THROW(lie::close(m), std::invalid_argument);
}

TEST(Closure, IdentityDetection) {
  GeneratorSet s{1, "u1", {OperatorSum::identity(1), OperatorSum::pauli(1, 0, 'Z')}, {}, true};
  auto b = lie::close(s);
  EXPECT_EQ(b.dimension, 2u);
  EXPECT_EQ(b.dimension_traceless, 1u);
  EXPECT_TRUE(b.identity_in_span);
}

TEST(Candidates, Dimensions) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& c : lie::candidates(n)) {
      if (c.name == "SA_n") EXPECT_EQ(c.expected_dim, oracle::binom(2 * n, n));
      if (c.name == "SA_p") EXPECT_EQ(c.expected_dim, uint64_t(1) << (2 * n - 1));
      if (c.name == "so(2N)") EXPECT_EQ(c.expected_dim, uint64_t(n * (2 * n - 1)));
    }
  }
}

TEST(SubspaceClosure, EncodedQutrit) {
  using codes::TKind;
  auto code = codes::build_code(3, 1);
  auto tx = [&](int i, int j) { return codes::t_operator(3, TKind::Tx, i, j); };
  GeneratorSet two{3, "two", {tx(0, 1), tx(1, 2)}, {}, true};
  EXPECT_EQ(lie::close_on_subspace(two, code).dimension, 3u);
  GeneratorSet three{3, "three", {tx(0, 1), tx(1, 2), tx(0, 2)}, {}, true};
  auto b = lie::close_on_subspace(three, code);
  EXPECT_EQ(b.dimension, 8u);
  EXPECT_TRUE(hit(lie::classify_algebra(b), "su(d)"));
}

TEST(SubspaceClosure, MatchesProjectedDenseOracle) {
  using codes::TKind;
  for (auto [n, k] : {std::pair{3, 1}, std::pair{4, 2}, std::pair{4, 1}}) {
    auto code = codes::build_code(n, k);
    GeneratorSet set{n, "nn", {}, {}, true};
    for (int i = 0; i + 1 < n; ++i) {
      set.generators.push_back(codes::t_operator(n, TKind::Tx, i, i + 1));
      set.generators.push_back(codes::t_operator(n, TKind::Tz, i, i + 1));
    }
    // Oracle: restrict the dense generators to the code columns by hand.
    std::vector<Eigen::Index> idx;
    for (Eigen::Index b = 0; b < (Eigen::Index(1) << n); ++b)
      if (__builtin_popcountll(b) == k) idx.push_back(b);
    std::vector<oracle::Mat> proj;
    for (const auto& g : set.generators) {
      oracle::Mat full = realize(g), r(idx.size(), idx.size());
      for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j) r(i, j) = full(idx[i], idx[j]);
      proj.push_back(r);
    }
    auto basis = lie::close_on_subspace(set, code);
    EXPECT_EQ(basis.dimension, oracle::closure_dim(proj)) << n << "," << k;
    EXPECT_EQ(basis.dimension_traceless, oracle::closure_dim(proj, true)) << n << "," << k;
  }
}
