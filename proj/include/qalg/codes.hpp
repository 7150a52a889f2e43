#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qalg/code_subspace.hpp"
#include "qalg/lie_engine.hpp"

namespace qalg::codes {

CodeSubspace build_code(int n_modes, int excitations);

/// log2 C(N, n) / N.
double rate(int n_modes, int excitations);
/// Binary entropy in bits, S(0) = S(1) = 0.
double shannon_entropy(double p);

enum class TKind { Tx, Tz };
/// Generators are Hermitian; unitaries must satisfy U^dag U = 1.
enum class GateKind { generator, unitary };

struct EncodedGate {
  std::string name;
  std::vector<int> support;
  GateKind kind = GateKind::generator;
  DenseMatrix action;               // d x d on the ordered codewords
  std::optional<ExactMatrix> exact;  // present when the action is rational
};

/// Tx(i,j) = (X_i X_j + Y_i Y_j)/2, Tz(i,j) = (Z_i - Z_j)/2.
OperatorSum t_operator(int n_modes, TKind kind, int i, int j);

EncodedGate encoded_generator(const CodeSubspace& code, TKind kind, int i, int j);

/// Non-adjacent Tx(i,j) routed along the line: Tx(j-1,j) conjugated by
/// exp(-i pi/2 Tx(k,k+1)) for k = j-2 down to i.
EncodedGate routed_generator(const CodeSubspace& code, int i, int j);
/// exp(-i pi/2 Tx(k,k+1)) restricted to the code.
EncodedGate swap_gate(const CodeSubspace& code, int k);

bool is_unitary(const EncodedGate& g, double tol = 1e-10);
/// [op, P] = 0 on the full space (dense, within tol).
double projector_commutator_norm(const OperatorSum& op, const CodeSubspace& code);

struct CphaseResult {
  EncodedGate gate;               // unitary, first entry normalized to 1
  std::vector<int> diagonal;      // sigma^z sigma^z across the boundary, A-major
  std::vector<int> left_factor;   // from bit N_A - 1 of A's codewords
  std::vector<int> right_factor;  // from bit 0 of B's codewords
  bool factorizes = false;
};

/// sigma^z on the last mode of A times sigma^z on the first mode of B, with
/// sigma^z |b> = (-1)^b |b>.
CphaseResult encoded_cphase(const CodeSubspace& a, const CodeSubspace& b);

/// For the pair (i, i+1): codeword index pairs exchanged by Tx, one per
/// assignment of the other N-2 bits with n-1 ones.
struct SwapPair {
  size_t first;
  size_t second;
};
std::vector<SwapPair> swap_pairs(const CodeSubspace& code, int i);

struct SynthesisReport {
  lie::LieBasis basis;
  size_t d = 0;
  bool success = false;
  uint64_t overlapping_su2 = 0;  // C(N-2, n-1) * C(N, 2)
  mpq_class su2_ratio;           // overlapping_su2 / d = n(N-n)/2
  bool counting_ok = false;      // overlapping_su2 >= d
};

inline constexpr size_t kDefaultSynthesisLimit = 20;

/// Closes {Tx(i,i+1), Tz(i,i+1)} on the code; success iff traceless dim = d^2 - 1.
SynthesisReport synthesize_su_d(const CodeSubspace& code, size_t d_limit = kDefaultSynthesisLimit);

}  // namespace qalg::codes
