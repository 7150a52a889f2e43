#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qalg/dense.hpp"
#include "qalg/pauli.hpp"

namespace qalg::codes {

/// C(N, n): computational basis states with exactly n one-bits.
///
/// Codewords are ordered by increasing binary value read with mode 0 as the
/// most significant digit, which is also the order of their printed bitstrings
/// (mode 0 leftmost). Label bit k is mode k, as in dense realizations.
class CodeSubspace {
 public:
  CodeSubspace(int n_modes, int excitations);

  int n_modes() const { return n_modes_; }
  int excitations() const { return excitations_; }
  size_t dim() const { return codewords_.size(); }
  const std::vector<uint64_t>& codewords() const { return codewords_; }
  std::optional<size_t> index_of(uint64_t label) const;
  /// Mode 0 leftmost.
  std::string bitstring(size_t i) const;
  /// 2^N x 2^N diagonal projector; respects the dense limit.
  DenseMatrix projector() const;

 private:
  int n_modes_;
  int excitations_;
  std::vector<uint64_t> codewords_;
};

std::string label_bitstring(uint64_t label, int n_modes);

/// Dense-free rectangular matrix of exact coefficients, row-major.
struct ExactMatrix {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<Coeff> data;

  ExactMatrix() = default;
  ExactMatrix(size_t r, size_t c) : rows(r), cols(c), data(r * c) {}
  Coeff& at(size_t r, size_t c) { return data[r * cols + c]; }
  const Coeff& at(size_t r, size_t c) const { return data[r * cols + c]; }
  DenseMatrix to_dense() const;
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;
};

ExactMatrix exact_product(const ExactMatrix& a, const ExactMatrix& b);

class SubspaceLeak : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact restriction <c_r| op |c_c> to the code. Throws SubspaceLeak when
/// op maps a codeword outside the code (P op (1 - P) != 0).
ExactMatrix project_exact(const OperatorSum& op, const CodeSubspace& code);
bool preserves(const OperatorSum& op, const CodeSubspace& code);

}  // namespace qalg::codes
