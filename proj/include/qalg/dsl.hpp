#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qalg/lie_engine.hpp"
#include "qalg/pauli.hpp"
#include "qalg/second_quantized.hpp"

namespace qalg::dsl {

/// Syntax or semantic error; `position` is a 0-based byte offset into the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, size_t position);
  size_t position() const { return position_; }

 private:
  size_t position_;
};

using Expr = std::variant<SecondQuantizedExpr, OperatorSum>;

/// expr   := term (('+' | '-') term)*
/// term   := coeff? factor*          (at least one of the two)
/// factor := KIND '(' index ')'      KIND in a ad f fd b bd n X Y Z
/// coeff  := decimal | p/q | decimal 'i' | 'i' | '(' re ',' im ')'
/// Pauli factors give an OperatorSum; mode factors give an expression of
/// their species. `n` alone takes `default_species`. A term without factors
/// is a multiple of the identity.
Expr parse_expr(std::string_view text, int n_modes, Species default_species = Species::parafermion);
std::string print_expr(const Expr& e);

struct ScriptEntry {
  std::string name;
  std::string text;
  bool hermitize = false;  // `herm` prefix: use Q + Q^dag and i(Q - Q^dag)
  Expr expr;
};

/// .ops file:
///   modes 3
///   species parafermion
///   label xy-nn
///   eps0 = n(0)
///   herm t01 = ad(0) a(1)
/// `#` starts a comment. modes must precede the first generator.
struct OperatorScript {
  int n_modes = 0;
  Species species = Species::parafermion;
  std::string label;
  std::vector<ScriptEntry> entries;
};

OperatorScript parse_script(std::string_view text);
std::string print_script(const OperatorScript& script);

/// Any parsed expression as a Pauli sum (parafermions directly, fermions via Jordan-Wigner).
OperatorSum to_operator(const Expr& e);
/// Generators for the closure engine; throws for bosonic or non-Hermitian entries.
lie::GeneratorSet script_to_generators(const OperatorScript& script);

}  // namespace qalg::dsl
