#include "qalg/dense.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

namespace qalg {

namespace {

int limit_from_env() {
  if (const char* env = std::getenv("QALG_DENSE_LIMIT")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 16) return static_cast<int>(v);
  }
  return 10;
}

std::atomic<int>& limit_slot() {
  static std::atomic<int> slot{limit_from_env()};
  return slot;
}

}  // namespace

int dense_limit() { return limit_slot().load(); }

void set_dense_limit(int n_modes) {
  if (n_modes < 1 || n_modes > 16) throw std::invalid_argument("dense limit must be in 1..16");
  limit_slot().store(n_modes);
}

void require_dense(int n_modes, const char* what) {
  if (n_modes > dense_limit()) {
    throw DimensionLimitError(std::string(what) + ": " + std::to_string(n_modes) + " modes exceeds dense limit " +
                              std::to_string(dense_limit()));
  }
}

DenseMatrix realize(const OperatorSum& op) { return kernels::realize_parallel(op); }

DenseMatrix matrix_exponential(const DenseMatrix& m, cplx scale) {
  if (!m.allFinite() || !std::isfinite(scale.real()) || !std::isfinite(scale.imag())) {
    throw std::domain_error("matrix_exponential: non-finite input");
  }
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix_exponential: non-square input");
  DenseMatrix scaled = m * scale;
  return scaled.exp();
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("max_abs_diff: shape mismatch");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

double max_abs_diff_up_to_phase(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("max_abs_diff: shape mismatch");
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  cplx phase = 1.0;
  if (std::abs(b(r, c)) > 0 && std::abs(a(r, c)) > 0) {
    phase = (a(r, c) / b(r, c));
    phase /= std::abs(phase);
  }
  return max_abs_diff(a, b * phase);
}

DenseMatrix dense_commutator(const DenseMatrix& a, const DenseMatrix& b) { return a * b - b * a; }

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace qalg
