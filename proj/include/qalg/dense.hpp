#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

#include "qalg/pauli.hpp"

namespace qalg {

using cplx = std::complex<double>;
/// Dense 2^N x 2^N realization; basis index bit k is the Z eigenvalue of mode k
/// (0 -> +1 = occupied, 1 -> -1 = empty).
using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

class DimensionLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Current dense ceiling in modes. Default 10, overridden by QALG_DENSE_LIMIT
/// or set_dense_limit.
int dense_limit();
void set_dense_limit(int n_modes);
/// Throws DimensionLimitError if n_modes exceeds dense_limit().
void require_dense(int n_modes, const char* what);

/// Parallel realization (columns built independently).
DenseMatrix realize(const OperatorSum& op);

namespace kernels {
/// Column-wise realization; the OpenMP and serial variants produce identical bits.
DenseMatrix realize_parallel(const OperatorSum& op);
DenseMatrix realize_serial(const OperatorSum& op);
/// Kronecker-product reference, independent of the column formula.
DenseMatrix realize_kronecker(const OperatorSum& op);
}  // namespace kernels

/// exp(scale * m) via Pade scaling-and-squaring.
DenseMatrix matrix_exponential(const DenseMatrix& m, cplx scale = 1.0);

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);
/// min over global phases e^{i t} of max |a - e^{i t} b|; the phase is fixed
/// by the largest entry of b.
double max_abs_diff_up_to_phase(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix dense_commutator(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace qalg
