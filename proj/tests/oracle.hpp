#pragma once
// Independent reference constructions for tests. Nothing here calls the
// library's realization, bracket or elimination code.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Single-mode matrices in the basis {bit 0 = occupied, bit 1 = empty}.
inline Mat pauli(char c) {
  Mat m(2, 2);
  switch (c) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m = Mat::Identity(2, 2);
  }
  return m;
}
// a maps occupied (bit 0) to empty (bit 1).
inline Mat annihilator1() {
  Mat m = Mat::Zero(2, 2);
  m(1, 0) = 1;
  return m;
}

// Embeds a one-mode matrix at `mode`; mode 0 is the least significant bit,
// i.e. the rightmost Kronecker factor.
inline Mat embed(const Mat& single, int mode, int n) {
  Mat out = Mat::Identity(1, 1);
  for (int k = n - 1; k >= 0; --k) out = kron(out, k == mode ? single : Mat::Identity(2, 2));
  return out;
}

inline Mat a(int mode, int n) { return embed(annihilator1(), mode, n); }
inline Mat ad(int mode, int n) { return embed(annihilator1().adjoint(), mode, n); }
inline Mat num(int mode, int n) { return ad(mode, n) * a(mode, n); }
inline Mat id(int n) { return Mat::Identity(Eigen::Index(1) << n, Eigen::Index(1) << n); }

// Jordan-Wigner fermions: f_i = a_i prod_{k<i} (1 - 2 n_k).
inline Mat f(int mode, int n) {
  Mat s = id(n);
  for (int k = 0; k < mode; ++k) s = s * (id(n) - 2.0 * num(k, n));
  return a(mode, n) * s;
}

inline double maxabs(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

// Dimension of the real Lie algebra generated by Hermitian matrices under
// (A, B) -> i[A, B]: modified Gram-Schmidt on real vectorizations.
struct DenseClosure {
  std::vector<Mat> basis;
  std::vector<Eigen::VectorXd> ortho;
  double tol = 1e-8;

  bool add(const Mat& m) {
    Eigen::VectorXd v(2 * m.size());
    for (Eigen::Index k = 0; k < m.size(); ++k) {
      v[2 * k] = m.data()[k].real();
      v[2 * k + 1] = m.data()[k].imag();
    }
    double norm0 = v.norm();
    if (norm0 < tol) return false;
    v /= norm0;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& o : ortho) v -= o.dot(v) * o;
    double r = v.norm();
    if (r < tol) return false;
    ortho.push_back(v / r);
    basis.push_back(m / norm0);
    return true;
  }
};

inline size_t closure_dim(const std::vector<Mat>& gens, bool traceless = false) {
  DenseClosure c;
  for (const auto& g : gens) c.add(g);
  for (size_t i = 0; i < c.basis.size(); ++i)
    for (size_t j = 0; j < i; ++j) c.add(cplx(0, 1) * (c.basis[i] * c.basis[j] - c.basis[j] * c.basis[i]));
  if (!traceless) return c.basis.size();
  // Remove the identity direction if it is in the span.
  DenseClosure probe = c;
  const Eigen::Index d = gens.front().rows();
  bool independent = probe.add(Mat::Identity(d, d));
  return independent ? c.basis.size() : c.basis.size() - 1;
}

inline uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
