#include <gtest/gtest.h>

#include <random>

#include "qalg/dsl.hpp"
#include "qalg/parafermion.hpp"

using namespace qalg;
using dsl::parse_expr;

TEST(Dsl, HoppingExpression) {
  auto e = parse_expr("ad(0) a(1) + ad(1) a(0)", 2);
  const auto& sq = std::get<SecondQuantizedExpr>(e);
  EXPECT_EQ(sq.species(), Species::parafermion);
  EXPECT_EQ(sq.terms().size(), 2u);
}

TEST(Dsl, PauliFormOfExchange) {
  auto e = parse_expr("0.5 X(0) X(1) + 0.5 Y(0) Y(1)", 2);
  const auto& op = std::get<OperatorSum>(e);
  auto hop = dsl::to_operator(parse_expr("ad(1) a(0) + ad(0) a(1)", 2));
  EXPECT_EQ(op, hop);
}

TEST(Dsl, NilpotentProductParsesToZero) {
  auto e = parse_expr("a(0) a(0)", 1);
  EXPECT_EQ(std::get<SecondQuantizedExpr>(e).terms().size(), 1u);
  EXPECT_TRUE(dsl::to_operator(e).is_zero());
}

TEST(Dsl, Coefficients) {
  auto op = [](const std::string& s) { return std::get<OperatorSum>(parse_expr(s, 1)); };
  auto z = OperatorSum::pauli(1, 0, 'Z');
  EXPECT_EQ(op("2i Z(0)"), z * Coeff(0, 2));
  EXPECT_EQ(op("i Z(0)"), z * Coeff::i());
  EXPECT_EQ(op("(0.5,-1) Z(0)"), z * Coeff(mpq_class(1, 2), -1));
  EXPECT_EQ(op("-3/4 Z(0)"), z * Coeff(mpq_class(-3, 4)));
  EXPECT_EQ(op("1e-1 Z(0)"), z * Coeff(mpq_class(1, 10)));
  EXPECT_EQ(op("Z(0) - Z(0)"), OperatorSum(1));
  EXPECT_EQ(op("2"), OperatorSum::identity(1, 2));
}

TEST(Dsl, SpeciesFromTokens) {
  EXPECT_EQ(std::get<SecondQuantizedExpr>(parse_expr("fd(0) f(1)", 2)).species(), Species::fermion);
  EXPECT_EQ(std::get<SecondQuantizedExpr>(parse_expr("bd(0) b(1)", 2)).species(), Species::boson);
  EXPECT_EQ(std::get<SecondQuantizedExpr>(parse_expr("n(0)", 2, Species::fermion)).species(), Species::fermion);
}

TEST(Dsl, Errors) {
  auto pos = [](const std::string& s, int n) -> long {
    try {
      parse_expr(s, n);
    } catch (const dsl::ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  EXPECT_EQ(pos("ad(0) q(1)", 2), 6);
  EXPECT_EQ(pos("ad(5)", 2), 3);
  EXPECT_EQ(pos("ad(0", 2), 4);
  EXPECT_EQ(pos("ad(0) +", 2), 7);
  EXPECT_GE(pos("ad(0) f(1)", 2), 0);
  EXPECT_GE(pos("X(0) a(1)", 2), 0);
  EXPECT_GE(pos("", 2), 0);
  EXPECT_GE(pos("(1,2", 2), 0);
}

TEST(Dsl, RoundTripProperty) {
  std::mt19937 rng(41);
  const std::vector<std::string> pf_tokens = {"a", "ad", "n"};
  const std::vector<std::string> f_tokens = {"f", "fd", "n"};
  const std::vector<std::string> b_tokens = {"b", "bd", "n"};
  const std::vector<std::string> pauli_tokens = {"X", "Y", "Z"};
  const std::vector<std::string> coeffs = {"", "2 ", "-1/3 ", "0.25 ", "(1,-2) ", "3i ", "i "};
  const std::vector<std::vector<std::string>> families = {pf_tokens, f_tokens, b_tokens, pauli_tokens};
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto& toks = families[rng() % 4];
    std::string text;
    int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
      if (t) text += rng() % 2 ? " + " : " - ";
      text += coeffs[rng() % coeffs.size()];
      int factors = 1 + static_cast<int>(rng() % 3);
      for (int f = 0; f < factors; ++f) text += toks[rng() % toks.size()] + "(" + std::to_string(rng() % n) + ") ";
    }
    auto e = parse_expr(text, n, Species::fermion);
    auto printed = dsl::print_expr(e);
    auto again = parse_expr(printed, n, Species::fermion);
    EXPECT_EQ(e, again) << text << " -> " << printed;
    EXPECT_EQ(dsl::print_expr(again), printed);
  }
}

TEST(Script, ParseAndGenerators) {
  const char* text = R"(# chain
modes 3
species parafermion
label demo
n0 = n(0)     # field
herm t01 = ad(0) a(1)
x12 = X(1) X(2)
)";
  auto s = dsl::parse_script(text);
  EXPECT_EQ(s.n_modes, 3);
  EXPECT_EQ(s.label, "demo");
  ASSERT_EQ(s.entries.size(), 3u);
  EXPECT_TRUE(s.entries[1].hermitize);
  auto set = dsl::script_to_generators(s);
  EXPECT_EQ(set.generators.size(), 4u);
  EXPECT_EQ(set.names[1], "t01.re");
  auto again = dsl::parse_script(dsl::print_script(s));
  EXPECT_EQ(dsl::print_script(again), dsl::print_script(s));
}

TEST(Script, Errors) {
  EXPECT_THROW(dsl::parse_script("x = X(0)\n"), dsl::ParseError);
  EXPECT_THROW(dsl::parse_script("modes 2\nspecies fermion\nx = ad(0)\n"), dsl::ParseError);
  EXPECT_THROW(dsl::parse_script("modes 2\nfoo 3\n"), dsl::ParseError);
  EXPECT_THROW(dsl::parse_script("modes 2\nx = X(3)\n"), dsl::ParseError);
  auto nonherm = dsl::parse_script("modes 2\nq = ad(0) a(1)\n");
  EXPECT_THROW(dsl::script_to_generators(nonherm), std::invalid_argument);
  auto bos = dsl::parse_script("modes 2\nspecies boson\nq = n(0)\n");
  EXPECT_THROW(dsl::script_to_generators(bos), std::invalid_argument);
}
