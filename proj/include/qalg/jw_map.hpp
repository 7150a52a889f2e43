#pragma once

#include <string>
#include <vector>

#include "qalg/dense.hpp"
#include "qalg/pauli.hpp"
#include "qalg/second_quantized.hpp"

namespace qalg::jw {

enum class Direction { fermion_to_qubit, qubit_to_fermion };

/// S_i = prod_{k<i} (1 - 2 n_k). The string is its own inverse, so both
/// directions use the same operator.
struct JWStringOp {
  int mode = 0;
  Direction direction = Direction::fermion_to_qubit;
  OperatorSum to_pauli(int n_modes) const;
};

OperatorSum string_operator(int n_modes, int mode);
OperatorSum fermion_annihilator(int n_modes, int mode);
OperatorSum fermion_creator(int n_modes, int mode);

/// f_i -> a_i S_i, f_i^dag -> a_i^dag S_i, n_i -> n_i.
OperatorSum jw_fermion_to_pauli(const SecondQuantizedExpr& expr);

struct RelationCheck {
  std::string relation;
  bool passed = false;
};

struct CarReport {
  int n_modes = 0;
  std::vector<RelationCheck> relations;
  bool all_passed() const;
};

/// {f_i, f_j^dag} = delta_ij, {f_i, f_j} = 0, {f_i^dag, f_j^dag} = 0 for all i <= j, exactly.
CarReport verify_car(int n_modes);

/// [B, B^dag] with B = N^{-1/2} sum_i a_i, computed exactly.
OperatorSum boson_approx_commutator(int n_modes);
/// I - (2/N) sum_i n_i.
OperatorSum boson_approx_expected(int n_modes);

/// Fock space of n_modes bosons with occupations 0..cutoff. Mode 0 is the
/// fastest-varying digit of the basis index.
class TruncatedBosonSpace {
 public:
  TruncatedBosonSpace(int n_modes, int cutoff = 2);

  int n_modes() const { return n_modes_; }
  int cutoff() const { return cutoff_; }
  Eigen::Index dim() const { return dim_; }

  Eigen::Index index(const std::vector<int>& occupations) const;
  std::vector<int> occupations(Eigen::Index index) const;
  DenseVector fock_state(const std::vector<int>& occupations) const;

  DenseMatrix annihilator(int mode) const;
  DenseMatrix creator(int mode) const;
  DenseMatrix number(int mode) const;
  /// Diagonal 0/1 matrix selecting states whose every occupation is < cutoff.
  DenseMatrix below_cutoff_projector() const;
  /// Realizes a boson-species expression.
  DenseMatrix realize(const SecondQuantizedExpr& expr) const;

 private:
  int n_modes_;
  int cutoff_;
  Eigen::Index dim_;
};

struct CompoundRelation {
  std::string name;
  double residual = 0.0;  // 0 for exact checks
  bool exact = true;
  bool passed = false;
};

struct CompoundReport {
  int case_id = 0;
  int n_pairs = 0;
  int boson_cutoff = 0;
  std::vector<CompoundRelation> relations;
  bool all_passed() const;
};

inline constexpr double kCompoundTolerance = 1e-10;

/// Composite parafermions from pairs of physical modes (2k, 2k+1):
///   case 1: a_k = f_{2k+1} f_{2k}          on n_{2k} = n_{2k+1}
///   case 2: a_k = f_{2k+1}^dag f_{2k}      on n_{2k} + n_{2k+1} = 1
///   case 3: a_k = b_{2k+1}^dag b_{2k}      on n_{2k} + n_{2k+1} = 1
/// Cases 1-2 are checked exactly in the Pauli algebra, case 3 on a truncated Fock space.
CompoundReport compound_mapping_check(int case_id, int n_pairs, int boson_cutoff = 1);

}  // namespace qalg::jw
