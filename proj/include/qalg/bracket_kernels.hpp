#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qalg/dense.hpp"
#include "qalg/pauli.hpp"

namespace qalg::lie::kernels {

/// Hermitian operator as a real vector over Pauli strings, sorted by packed key.
using SparseVector = std::vector<std::pair<uint64_t, mpq_class>>;

inline uint64_t pack(PauliKey k) { return (k.x << 32) | k.z; }
inline PauliKey unpack(uint64_t p) { return {p >> 32, p & 0xffffffffULL}; }

/// Requires real coefficients.
SparseVector from_operator(const OperatorSum& op);
OperatorSum to_operator(int n_modes, const SparseVector& v);

/// i[A, B] for Hermitian A, B; the result is Hermitian with rational coefficients.
SparseVector bracket(const SparseVector& a, const SparseVector& b);

/// v - f * w, merged in key order.
SparseVector axpy(const SparseVector& v, const mpq_class& f, const SparseVector& w);
/// Coefficient at key, zero if absent.
const mpq_class* find(const SparseVector& v, uint64_t key);
/// Scale to a primitive integer vector whose first entry is positive.
void normalize_primitive(SparseVector& v);

struct BracketTask {
  uint32_t lhs;
  uint32_t rhs;
};

std::vector<SparseVector> bracket_batch_serial(std::span<const SparseVector> basis, std::span<const BracketTask> tasks);
std::vector<SparseVector> bracket_batch_parallel(std::span<const SparseVector> basis,
                                                 std::span<const BracketTask> tasks);

std::vector<DenseMatrix> dense_bracket_batch_serial(std::span<const DenseMatrix> basis,
                                                    std::span<const BracketTask> tasks);
std::vector<DenseMatrix> dense_bracket_batch_parallel(std::span<const DenseMatrix> basis,
                                                      std::span<const BracketTask> tasks);

}  // namespace qalg::lie::kernels
