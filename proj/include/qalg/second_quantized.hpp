#pragma once

#include <string>
#include <vector>

#include "qalg/coeff.hpp"

namespace qalg {

enum class Species { parafermion, fermion, boson };
enum class FactorKind { create, annihilate, number };

std::string species_name(Species s);
Species parse_species(const std::string& name);

struct ModeFactor {
  FactorKind kind;
  int mode;
  friend bool operator==(const ModeFactor&, const ModeFactor&) = default;
};

struct ModeMonomial {
  Coeff coeff;
  std::vector<ModeFactor> factors;  // left to right, as written
  friend bool operator==(const ModeMonomial&, const ModeMonomial&) = default;
};

/// Sum of ordered products of mode operators of a single species.
class SecondQuantizedExpr {
 public:
  SecondQuantizedExpr(int n_modes, Species species);

  static SecondQuantizedExpr identity(int n_modes, Species species, const Coeff& c = 1);
  static SecondQuantizedExpr single(int n_modes, Species species, FactorKind kind, int mode);
  static SecondQuantizedExpr create(int n_modes, Species s, int mode) { return single(n_modes, s, FactorKind::create, mode); }
  static SecondQuantizedExpr annihilate(int n_modes, Species s, int mode) {
    return single(n_modes, s, FactorKind::annihilate, mode);
  }
  static SecondQuantizedExpr number(int n_modes, Species s, int mode) { return single(n_modes, s, FactorKind::number, mode); }

  int n_modes() const { return n_modes_; }
  Species species() const { return species_; }
  const std::vector<ModeMonomial>& terms() const { return terms_; }

  void add_term(const Coeff& c, std::vector<ModeFactor> factors);

  /// Reverses factor order, swaps create/annihilate, conjugates coefficients.
  SecondQuantizedExpr adjoint() const;

  SecondQuantizedExpr& operator+=(const SecondQuantizedExpr& o);
  SecondQuantizedExpr& operator*=(const Coeff& c);
  friend SecondQuantizedExpr operator+(SecondQuantizedExpr a, const SecondQuantizedExpr& b) { return a += b; }
  friend SecondQuantizedExpr operator-(SecondQuantizedExpr a, const SecondQuantizedExpr& b) {
    return a += b * Coeff(-1);
  }
  friend SecondQuantizedExpr operator*(SecondQuantizedExpr a, const Coeff& c) { return a *= c; }
  friend SecondQuantizedExpr operator*(const Coeff& c, SecondQuantizedExpr a) { return a *= c; }
  /// Ordered product: every term of a followed by every term of b.
  friend SecondQuantizedExpr operator*(const SecondQuantizedExpr& a, const SecondQuantizedExpr& b);
  friend bool operator==(const SecondQuantizedExpr&, const SecondQuantizedExpr&) = default;

  /// DSL text, e.g. "1 ad(0) a(1) + 1/2 n(2)".
  std::string str() const;

 private:
  void check_compatible(const SecondQuantizedExpr& o) const;

  int n_modes_;
  Species species_;
  std::vector<ModeMonomial> terms_;
};

/// DSL token for a factor of the given species ("ad", "f", "bd", "n", ...).
std::string factor_token(Species s, FactorKind k);

}  // namespace qalg
