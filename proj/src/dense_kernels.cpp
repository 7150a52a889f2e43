#include <vector>

#include "qalg/dense.hpp"

namespace qalg::kernels {

namespace {

struct FlatTerm {
  uint64_t x;
  uint64_t z;
  cplx value;  // coefficient times i^{|x&z|}
};

std::vector<FlatTerm> flatten(const OperatorSum& op) {
  static const cplx kIPow[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::vector<FlatTerm> out;
  out.reserve(op.size());
  for (const auto& [k, c] : op.terms()) {
    out.push_back({k.x, k.z, c.to_complex() * kIPow[popcount(k.x & k.z) % 4]});
  }
  return out;
}

// X^x Z^z |b> = (-1)^{|z&b|} |b^x>.
inline void fill_column(const std::vector<FlatTerm>& terms, uint64_t b, DenseMatrix& m) {
  for (const auto& t : terms) {
    cplx v = (popcount(t.z & b) & 1) ? -t.value : t.value;
    m(static_cast<Eigen::Index>(b ^ t.x), static_cast<Eigen::Index>(b)) += v;
  }
}

}  // namespace

DenseMatrix realize_parallel(const OperatorSum& op) {
  require_dense(op.n_modes(), "realize");
  const auto terms = flatten(op);
  const int64_t dim = int64_t{1} << op.n_modes();
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
#pragma omp parallel for schedule(static)
  for (int64_t b = 0; b < dim; ++b) fill_column(terms, static_cast<uint64_t>(b), m);
  return m;
}

DenseMatrix realize_serial(const OperatorSum& op) {
  require_dense(op.n_modes(), "realize");
  const auto terms = flatten(op);
  const int64_t dim = int64_t{1} << op.n_modes();
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  for (int64_t b = 0; b < dim; ++b) fill_column(terms, static_cast<uint64_t>(b), m);
  return m;
}

DenseMatrix realize_kronecker(const OperatorSum& op) {
  require_dense(op.n_modes(), "realize");
  DenseMatrix I = DenseMatrix::Identity(2, 2);
  DenseMatrix X(2, 2), Y(2, 2), Z(2, 2);
  X << 0, 1, 1, 0;
  Y << 0, cplx(0, -1), cplx(0, 1), 0;
  Z << 1, 0, 0, -1;
  const int n = op.n_modes();
  const int64_t dim = int64_t{1} << n;
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  for (const auto& [k, c] : op.terms()) {
    // Mode 0 is the least significant index bit, so it is the rightmost factor.
    DenseMatrix acc = DenseMatrix::Identity(1, 1);
    for (int mode = n - 1; mode >= 0; --mode) {
      bool x = (k.x >> mode) & 1;
      bool z = (k.z >> mode) & 1;
      const DenseMatrix& f = x ? (z ? Y : X) : (z ? Z : I);
      acc = kron(acc, f);
    }
    m += c.to_complex() * acc;
  }
  return m;
}

}  // namespace qalg::kernels
