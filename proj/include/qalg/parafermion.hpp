#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "qalg/pauli.hpp"
#include "qalg/second_quantized.hpp"

namespace qalg::parafermion {

/// a_i^dag -> sigma^+_i, a_i -> sigma^-_i, n_i -> (1 + Z_i)/2.
OperatorSum to_pauli(const SecondQuantizedExpr& expr);

/// Q_{alpha,beta}: creations on the modes set in alpha, annihilations on beta.
struct GeneratorIndex {
  uint64_t alpha = 0;
  uint64_t beta = 0;
  int creations() const { return popcount(alpha); }
  int annihilations() const { return popcount(beta); }
  bool parity_preserving() const { return ((creations() - annihilations()) & 1) == 0; }
  bool number_preserving() const { return creations() == annihilations(); }
  auto operator<=>(const GeneratorIndex&) const = default;
};

enum class SubalgebraFilter { none, SAp, SAn };

inline constexpr int kDefaultEnumerationLimit = 8;

/// All (alpha, beta) pairs in lexicographic order, optionally filtered.
std::vector<GeneratorIndex> enumerate_generators(int n_modes, SubalgebraFilter filter = SubalgebraFilter::none,
                                                 int limit = kDefaultEnumerationLimit);

/// a_{N-1}^dag ... a_0^dag (over alpha) times a_{N-1} ... a_0 (over beta).
SecondQuantizedExpr generator_expr(int n_modes, GeneratorIndex g);
OperatorSum generator_operator(int n_modes, GeneratorIndex g);

struct SubalgebraVerdict {
  bool in_SAn = false;
  bool in_SAp = false;
  std::set<int> local_support;
};

/// Exact commutation with the total number and parity operators. Hermitian input only.
SubalgebraVerdict classify(const OperatorSum& op);
bool commutes_with_number(const OperatorSum& op);
bool commutes_with_parity(const OperatorSum& op);
std::set<int> support(const OperatorSum& op);

enum class Bilinear { T, R };

struct Su2Triple {
  OperatorSum x;
  OperatorSum y;
  OperatorSum z;
};

/// T: (a_j^dag a_i + a_i^dag a_j, i[T^x,T^z], n_i - n_j)
/// R: (a_i a_j + a_i^dag a_j^dag, i[R^x,R^z], n_i + n_j - 1)
Su2Triple bilinear_su2(int n_modes, int i, int j, Bilinear family);
/// (X/2, Y/4, Z/2): satisfies [J_a, J_b] = i eps_abc J_c on the active two-state block.
Su2Triple normalized_su2(const Su2Triple& t);
/// [Jx,Jy] = iJz and cyclic, exactly.
bool satisfies_su2(const Su2Triple& t);

}  // namespace qalg::parafermion
