#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qalg/code_subspace.hpp"
#include "qalg/dense.hpp"
#include "qalg/pauli.hpp"

namespace qalg::lie {

/// Hermitian generators on a common mode count.
struct GeneratorSet {
  int n_modes = 0;
  std::string label;
  std::vector<OperatorSum> generators;
  std::vector<std::string> names;  // optional, parallel to generators
  bool physical = true;            // false for sets the literature flags as unphysical

  /// Throws on non-Hermitian or zero generators or mode mismatch.
  void validate() const;
};

/// Where a basis element came from: an input generator or i[b_lhs, b_rhs].
struct Provenance {
  int generator = -1;
  int lhs = -1;
  int rhs = -1;
  int depth = 0;
  bool is_generator() const { return generator >= 0; }
};

struct LieBasis {
  int n_modes = 0;
  /// Full-space closure: exact Hermitian elements, primitive integer Pauli coordinates.
  std::vector<OperatorSum> basis;
  /// Subspace closure: orthonormal Hermitian d x d matrices (Frobenius).
  std::vector<DenseMatrix> encoded_basis;
  size_t code_dim = 0;
  size_t dimension = 0;
  /// dimension minus one if the identity lies in the span.
  size_t dimension_traceless = 0;
  bool identity_in_span = false;
  bool closed = false;
  int rounds = 0;
  std::vector<Provenance> provenance;
  std::string label;
  bool physical = true;

  bool on_subspace() const { return code_dim > 0; }
  int provenance_depth() const;
};

struct CloseOptions {
  std::optional<size_t> max_dim;
  bool parallel = true;
  /// Brackets evaluated per parallel batch before the ordered reduction.
  size_t batch_size = 1024;
};

/// Breadth-first exact closure under (A, B) -> i[A, B].
LieBasis close(const GeneratorSet& set, const CloseOptions& options = {});

inline constexpr double kSubspaceRankTolerance = 1e-9;

/// Closure of the projected generators on a code; numeric rank at 1e-9.
LieBasis close_on_subspace(const GeneratorSet& set, const codes::CodeSubspace& code,
                           const CloseOptions& options = {});

struct Candidate {
  std::string name;
  uint64_t expected_dim = 0;
  bool compare_traceless = false;
  bool needs_number = false;
  bool needs_parity = false;
  bool hit = false;
};

struct AlgebraVerdict {
  size_t dimension = 0;
  size_t dimension_traceless = 0;
  std::vector<Candidate> matches;
  bool conserves_parity = false;
  bool conserves_number = false;
  bool universal_full_space = false;
};

/// Named algebras at N modes with their dimensions (hit flags unset).
std::vector<Candidate> candidates(int n_modes);
/// Candidates for a closure on a d-dimensional code: su(d), u(d).
std::vector<Candidate> subspace_candidates(size_t d);

/// Requires a closed basis.
AlgebraVerdict classify_algebra(const LieBasis& basis);

uint64_t binomial(int n, int k);

}  // namespace qalg::lie
