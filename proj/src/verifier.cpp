#include "qalg/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qalg/code_subspace.hpp"
#include "qalg/codes.hpp"
#include "qalg/exact_conjugation.hpp"
#include "qalg/jw_map.hpp"
#include "qalg/parafermion.hpp"

namespace qalg::verify {

using std::numbers::pi;

namespace {

double max_coeff(const OperatorSum& op) {
  double m = 0.0;
  for (const auto& [k, c] : op.terms()) m = std::max(m, std::abs(c.to_complex()));
  return m;
}

DenseMatrix expi(const DenseMatrix& m, double t) { return matrix_exponential(m, cplx(0, t)); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

const cplx kI(0, 1);

}  // namespace

bool IdentityCheck::passed() const {
  bool any = false;
  for (const auto& p : parts) {
    if (p.informational) continue;
    any = true;
    if (!p.passed) return false;
  }
  return any;
}

double IdentityCheck::max_residual() const {
  double r = 0.0;
  for (const auto& p : parts) {
    if (!p.informational) r = std::max(r, p.residual);
  }
  return r;
}

void IdentityCheck::add_exact(std::string label, const OperatorSum& difference, bool informational) {
  double r = max_coeff(difference);
  parts.push_back({std::move(label), Metric::exact, r, 0.0, difference.is_zero(), informational});
}

void IdentityCheck::add_exact(std::string label, bool holds, bool informational) {
  parts.push_back({std::move(label), Metric::exact, holds ? 0.0 : 1.0, 0.0, holds, informational});
}

void IdentityCheck::add_numeric(std::string label, double residual, double tolerance, bool informational) {
  parts.push_back({std::move(label), Metric::max_abs_diff, residual, tolerance, residual <= tolerance, informational});
}

IdentityCheck check_recoupling(const OperatorSum& a, const OperatorSum& b, double theta, double phi) {
  IdentityCheck c;
  c.name = "recoupling";
  if (a.n_modes() != b.n_modes()) throw ModeMismatch(a.n_modes(), b.n_modes());
  const int n = a.n_modes();
  const bool herm = a.is_hermitian() && b.is_hermitian();
  c.add_exact("A and B Hermitian", herm);
  if (!herm) return c;

  const bool half = std::abs(phi - pi / 2) < 1e-12;
  const bool quarter = std::abs(phi - pi / 4) < 1e-12;
  const bool special = half || quarter;
  const bool squares_to_one = a * a == OperatorSum::identity(n);
  const bool anti = anticommutator(a, b).is_zero();
  c.add_exact("A^2 = 1", squares_to_one, !special);
  c.add_exact("{A,B} = 0", anti, !special);

  const DenseMatrix A = realize(a);
  const DenseMatrix B = realize(b);
  const DenseMatrix u = expi(A, -phi);
  const DenseMatrix ud = expi(A, phi);
  const DenseMatrix lhs = u * expi(B, theta) * ud;
  c.add_numeric("U exp(iV) U^dag = exp(i U V U^dag)", max_abs_diff(lhs, expi(u * B * ud, theta)));
  if (std::abs(phi) < 1e-15) c.add_numeric("phi = 0 leaves exp(i theta B) unchanged", max_abs_diff(lhs, expi(B, theta)));
  if (!(squares_to_one && anti)) {
    if (special) c.notes.push_back("closed forms need A^2 = 1 and {A,B} = 0");
    return c;
  }

  const OperatorSum iba = b * a * Coeff::i();
  if (half) {
    SurdOperator conj = conjugate_exact(a, QuarterAngle::pi_over_2, b);
    c.add_exact("C^{pi/2}_A o B = -B (exact)", conj.rational + b);
    c.add_numeric("C^{pi/2}_A o exp(i theta B) = exp(-i theta B)", max_abs_diff(lhs, expi(B, -theta)));
  } else if (quarter) {
    SurdOperator conj = conjugate_exact(a, QuarterAngle::pi_over_4, b);
    c.add_exact("C^{pi/4}_A o B = iBA (exact)", conj.rational - iba);
    c.add_exact("C^{pi/4}_A o B has no sqrt(2) part", conj.sqrt2);
    c.add_numeric("C^{pi/4}_A o exp(i theta B) = exp(i theta (iBA))", max_abs_diff(lhs, expi(realize(iba), theta)));
    const OperatorSum iab = a * b * Coeff::i();
    double printed = max_abs_diff(lhs, expi(realize(iab), theta));
    c.add_numeric("operand order iAB (informational)", printed, kTolerance, true);
    c.notes.push_back("with {A,B} = 0, iAB = -iBA, so the iAB ordering rotates the opposite way (residual " +
                      fmt(printed) + ")");
  } else {
    DenseMatrix rotated = std::cos(2 * phi) * B + std::sin(2 * phi) * realize(iba);
    c.add_numeric("C^phi_A o exp(i theta B) = exp(i theta (cos 2phi B + sin 2phi iBA))",
                  max_abs_diff(lhs, expi(rotated, theta)));
  }
  return c;
}

namespace {

parafermion::Su2Triple triple_for(Su2Choice choice) {
  using parafermion::Bilinear;
  switch (choice) {
    case Su2Choice::spin_half: {
      const Coeff h(mpq_class(1, 2));
      return {OperatorSum::pauli(1, 0, 'X') * h, OperatorSum::pauli(1, 0, 'Y') * h, OperatorSum::pauli(1, 0, 'Z') * h};
    }
    case Su2Choice::r_triple: return parafermion::normalized_su2(parafermion::bilinear_su2(2, 0, 1, Bilinear::R));
    case Su2Choice::t_triple: return parafermion::normalized_su2(parafermion::bilinear_su2(2, 0, 1, Bilinear::T));
  }
  throw std::logic_error("unreachable");
}

}  // namespace

IdentityCheck check_angular_recoupling(double theta, double phi, Su2Choice choice) {
  IdentityCheck c;
  c.name = "angular";
  const auto t = triple_for(choice);
  c.add_exact("[Jx,Jy] = iJz and cyclic", parafermion::satisfies_su2(t));
  const DenseMatrix jx = realize(t.x), jy = realize(t.y), jz = realize(t.z);
  const DenseMatrix u = expi(jz, -phi), ud = expi(jz, phi);
  const DenseMatrix rotated = jx * std::cos(phi) + jy * std::sin(phi);
  c.add_numeric("exp(-i phi Jz) Jx exp(i phi Jz) = Jx cos phi + Jy sin phi", max_abs_diff(u * jx * ud, rotated));
  c.add_numeric("C^phi_Jz o exp(i theta Jx) = exp(i theta (Jx cos phi + Jy sin phi))",
                max_abs_diff(u * expi(jx, theta) * ud, expi(rotated, theta)));
  // Recoupling with A = 2Jz, B = 2Jx rotates by twice the angle.
  const DenseMatrix u2 = expi(2.0 * jz, -phi), u2d = expi(2.0 * jz, phi);
  const DenseMatrix rotated2 = 2.0 * (jx * std::cos(2 * phi) + jy * std::sin(2 * phi));
  c.add_numeric("C^phi_{2Jz} o exp(i theta 2Jx) = exp(i theta 2(Jx cos 2phi + Jy sin 2phi))",
                max_abs_diff(u2 * expi(2.0 * jx, theta) * u2d, expi(rotated2, theta)));

  // Normalization of the sl(2) pair built from sigma^+- = (X +- iY)/2.
  const OperatorSum sp = sigma_plus(1, 0), sm = sigma_minus(1, 0), z = OperatorSum::pauli(1, 0, 'Z');
  c.add_exact("[s+,s-] = Z", commutator(sp, sm) - z);
  c.add_exact("[Z,s+] = 2 s+", commutator(z, sp) - sp * Coeff(2));
  c.add_exact("[Z,s-] = -2 s-", commutator(z, sm) + sm * Coeff(2));
  c.notes.push_back("with sigma^z = Z the pair reads [s+,s-] = Z, [Z,s+-] = +-2 s+-; "
                    "the forms [s+,s-] = 2 s^z, [s^z,s+-] = +- s+- hold for s^z = Z/2");
  return c;
}

IdentityCheck check_canonical_reduction() {
  IdentityCheck c;
  c.name = "canonical";
  const int n = 2;
  const OperatorSum xx = OperatorSum::pauli_string("XX"), yy = OperatorSum::pauli_string("YY");
  const OperatorSum zz = OperatorSum::pauli_string("ZZ");
  const OperatorSum x0 = OperatorSum::pauli(n, 0, 'X');
  const OperatorSum y0 = OperatorSum::pauli(n, 0, 'Y'), y1 = OperatorSum::pauli(n, 1, 'Y');
  const Coeff half(mpq_class(1, 2));
  const OperatorSum xy = (xx + yy) * half;

  SurdOperator step1 = conjugate_exact(x0, QuarterAngle::pi_over_2, xy);
  c.add_exact("C^{pi/2}_{X0} o (XX+YY)/2 = (XX-YY)/2 (exact)", step1.rational - (xx - yy) * half);
  SurdOperator s0 = conjugate_exact(y0, QuarterAngle::pi_over_4, xx);
  c.add_exact("C^{pi/4}_{Y0} o XX is rational", s0.sqrt2);
  SurdOperator s1 = conjugate_exact(y1, QuarterAngle::pi_over_4, s0.rational);
  c.add_exact("C^{pi/4}_{Y0+Y1} o XX = ZZ (exact)", s1.rational - zz);
  c.add_exact("C^{pi/4}_{Y0+Y1} o XX has no sqrt(2) part", s1.sqrt2);

  const DenseMatrix XY = realize(xy), X0 = realize(x0), XX = realize(xx), ZZ = realize(zz);
  const DenseMatrix Ysum = realize(y0 + y1);
  for (double theta : {0.0, 0.1, 0.7, pi / 3}) {
    const std::string at = " at theta=" + fmt(theta);
    DenseMatrix e = expi(XY, theta);
    DenseMatrix flipped = expi(X0, -pi / 2) * e * expi(X0, pi / 2);
    c.add_numeric("exp(i theta XY) (C^{pi/2}_{X0} o exp(i theta XY)) = exp(i theta XX)" + at,
                  max_abs_diff(e * flipped, expi(XX, theta)));
    c.add_numeric("C^{pi/4}_{Y0+Y1} o exp(i theta XX) = exp(i theta ZZ)" + at,
                  max_abs_diff(expi(Ysum, -pi / 4) * expi(XX, theta) * expi(Ysum, pi / 4), expi(ZZ, theta)));
  }
  return c;
}

IdentityCheck check_kerr_selfkerr() {
  IdentityCheck c;
  c.name = "kerr";
  // Modes 0..3 carry the rails; qubit one uses modes 0/1, qubit two modes 2/3.
  jw::TruncatedBosonSpace space(4, 2);
  const std::vector<std::vector<int>> rails = {{1, 0, 1, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}, {0, 1, 0, 1}};
  DenseMatrix V = DenseMatrix::Zero(space.dim(), 4);
  for (int k = 0; k < 4; ++k) V.col(k) = space.fock_state(rails[k]);
  const DenseMatrix n1 = space.number(1), n3 = space.number(3);
  const DenseMatrix lhs = expi(n1 * n3, -pi);
  const DenseMatrix k13 = space.creator(1) * space.annihilator(3) - space.creator(3) * space.annihilator(1);
  const DenseMatrix self = (n1 * n1 + n3 * n3 - n1 - n3) * 0.5;
  const DenseMatrix rhs =
      matrix_exponential(k13, -pi / 4) * expi(self, -pi) * matrix_exponential(k13, pi / 4);

  DenseMatrix cphase = DenseMatrix::Identity(4, 4);
  cphase(3, 3) = -1.0;
  const DenseMatrix lhs_p = V.adjoint() * lhs * V;
  const DenseMatrix rhs_p = V.adjoint() * rhs * V;
  const DenseMatrix Q = DenseMatrix::Identity(space.dim(), space.dim()) - V * V.adjoint();
  c.add_numeric("projected exp(-i pi n2 n4) = diag(1,1,1,-1)", max_abs_diff(lhs_p, cphase));
  c.add_numeric("exp(-i pi n2 n4) keeps the dual-rail subspace", (Q * lhs * V).cwiseAbs().maxCoeff());
  c.add_numeric("self-interaction circuit keeps the dual-rail subspace", (Q * rhs * V).cwiseAbs().maxCoeff());
  c.add_numeric("self-interaction circuit = exp(-i pi n2 n4) on the subspace", max_abs_diff(rhs_p, lhs_p));
  c.add_numeric("self-interaction circuit = CPHASE up to global phase", max_abs_diff_up_to_phase(rhs_p, cphase));

  // Beamsplitter identity, compared on inputs with total occupation below the cutoff.
  jw::TruncatedBosonSpace two(2, 3);
  const DenseMatrix a = two.annihilator(0), b = two.annihilator(1);
  const DenseMatrix kab = a.adjoint() * b - b.adjoint() * a;
  DenseMatrix below = DenseMatrix::Zero(two.dim(), two.dim());
  for (Eigen::Index s = 0; s < two.dim(); ++s) {
    auto occ = two.occupations(s);
    if (occ[0] + occ[1] < two.cutoff()) below(s, s) = 1.0;
  }
  for (double phi : {0.3, pi / 4, 1.1}) {
    DenseMatrix l = matrix_exponential(kab, phi) * b.adjoint() * matrix_exponential(kab, -phi) * below;
    DenseMatrix r = (std::cos(phi) * b.adjoint() + std::sin(phi) * a.adjoint()) * below;
    c.add_numeric("exp(phi K) b^dag exp(-phi K) = cos phi b^dag + sin phi a^dag at phi=" + fmt(phi),
                  max_abs_diff(l, r));
  }
  return c;
}

IdentityCheck check_bch_series(const OperatorSum& a, const OperatorSum& b, double alpha, int order) {
  IdentityCheck c;
  c.name = "bch";
  if (order < 0 || order > 6) throw std::invalid_argument("check_bch_series: order must be in 0..6");
  if (!(alpha > 0.0)) throw std::invalid_argument("check_bch_series: alpha must be positive");
  const DenseMatrix A = realize(a), B = realize(b);
  std::vector<DenseMatrix> nested = {B};
  for (int k = 1; k <= order + 1; ++k) nested.push_back(A * nested.back() - nested.back() * A);
  auto residual = [&](double al) {
    DenseMatrix exact = matrix_exponential(A, -al) * B * matrix_exponential(A, al);
    DenseMatrix series = DenseMatrix::Zero(B.rows(), B.cols());
    double f = 1.0;
    for (int k = 0; k <= order; ++k) {
      series += f * nested[k];
      f *= -al / (k + 1);
    }
    return max_abs_diff(exact, series);
  };
  const double r1 = residual(alpha), r2 = residual(alpha / 2);
  double next = std::pow(alpha, order + 1) / std::tgamma(order + 2.0) * nested[order + 1].cwiseAbs().maxCoeff();
  c.add_numeric("series residual within twice the next term at alpha=" + fmt(alpha), r1, 2 * next + 1e-13);
  const double expected = std::pow(2.0, order + 1);
  if (r1 <= 1e-13 && r2 <= 1e-13) {
    c.add_exact("series terminates (nested commutators vanish)", nested[order + 1].cwiseAbs().maxCoeff() == 0.0);
    c.notes.push_back("residual below round-off at both step sizes; ratio test not applicable");
  } else {
    double ratio = r1 / r2;
    c.add_numeric("residual ratio under alpha-halving vs 2^(order+1)=" + fmt(expected) + " (ratio " + fmt(ratio) + ")",
                  std::abs(ratio - expected) / expected, 0.2);
  }
  return c;
}

IdentityCheck check_iontrap_xy(int cutoff) {
  if (cutoff < 2) throw std::invalid_argument("check_iontrap_xy: cutoff must be >= 2");
  IdentityCheck c;
  c.name = "iontrap";
  jw::TruncatedBosonSpace mode(1, cutoff);
  const Eigen::Index nb = mode.dim();
  const DenseMatrix Ib = DenseMatrix::Identity(nb, nb);
  const DenseMatrix b = mode.annihilator(0), bd = mode.creator(0);
  // Hybrid ordering: qubits (outer) x boson (inner).
  auto q = [&](const OperatorSum& op) { return kron(realize(op), Ib); };
  auto boson = [&](const DenseMatrix& m) { return kron(DenseMatrix::Identity(4, 4), m); };
  const DenseMatrix h0 = q(sigma_minus(2, 0)) * boson(bd) + q(sigma_plus(2, 0)) * boson(b);
  const DenseMatrix h1 = q(sigma_minus(2, 1)) * boson(bd) + q(sigma_plus(2, 1)) * boson(b);
  const DenseMatrix k = 2.0 * kI * (h0 * h1 - h1 * h0);
  const OperatorSum zdiff = OperatorSum::pauli(2, 0, 'Z') - OperatorSum::pauli(2, 1, 'Z');
  const DenseMatrix target = q(OperatorSum::pauli_string("XX") + OperatorSum::pauli_string("YY"));

  auto conjugated = [&](const OperatorSum& gen) {
    const DenseMatrix A = q(gen);
    return DenseMatrix(expi(A, -pi / 4) * k * expi(A, pi / 4));
  };
  const DenseMatrix half = conjugated(zdiff * Coeff(mpq_class(1, 2)));
  const DenseMatrix literal = conjugated(zdiff);

  auto sector_residual = [&](const DenseMatrix& m, int s) {
    double r = 0.0;
    for (Eigen::Index qi = 0; qi < 4; ++qi) {
      Eigen::Index col = qi * nb + s;
      r = std::max(r, (m.col(col) - target.col(col)).cwiseAbs().maxCoeff());
    }
    return r;
  };
  for (int s = 0; s <= cutoff; ++s) {
    const bool required = s <= 1;
    const bool top = s == cutoff;
    std::string label = "C^{pi/4}_{(Z0-Z1)/2} o 2i[...] = XX+YY on boson sector " + std::to_string(s);
    if (top) label += " (truncation edge)";
    c.add_numeric(label, sector_residual(half, s), kTolerance, !required);
  }
  for (int s = 0; s <= std::min(1, cutoff); ++s) {
    c.add_numeric("generator Z0-Z1 (full strength) on boson sector " + std::to_string(s), sector_residual(literal, s),
                  kTolerance, true);
  }
  // |00> (both labels 0) is annihilated for every boson number.
  double r00 = 0.0;
  for (Eigen::Index s = 0; s < nb; ++s) r00 = std::max(r00, half.col(s).cwiseAbs().maxCoeff());
  c.add_numeric("commutator annihilates |00> on every boson sector", r00);
  c.notes.push_back("below the cutoff the commutator equals X0Y1 - Y0X1 independently of the boson number; "
                    "a relative rotation by pi/2 needs exp(-i pi/4 (Z0-Z1)/2); with Z0-Z1 the rotation is pi");
  return c;
}

IdentityCheck check_axy_encoded() {
  IdentityCheck c;
  c.name = "axy-encoded";
  const int n = 4;
  using codes::TKind;
  auto t = [&](int i, int j) { return codes::t_operator(n, TKind::Tx, i, j); };
  auto z = [&](int i) { return OperatorSum::pauli(n, i, 'Z'); };

  SurdOperator first = conjugate_exact(t(0, 1), QuarterAngle::pi_over_2, t(1, 2));
  const OperatorSum rhs1 = z(0) * z(1) * t(0, 2) * Coeff::i();
  c.add_exact("C^{pi/2}_{T12} o T23 = i s1z s2z T13 (exact)", first.rational - rhs1);
  c.add_exact("first identity has no sqrt(2) part", first.sqrt2);
  SurdOperator second = conjugate_exact(t(0, 2), QuarterAngle::pi_over_4, first.rational);
  const OperatorSum rhs2 = z(1) * (z(2) - z(0)) * Coeff(mpq_class(1, 2));
  c.add_exact("C^{pi/4}_{T13} o (C_{T12} o T23) = s2z (s3z - s1z)/2 (exact)", second.rational - rhs2);
  c.add_exact("second identity has no sqrt(2) part", second.sqrt2);

  // s2z s3z across the block boundary, two independent evaluations.
  const std::vector<int> expected = {-1, 1, 1, -1};
  const auto block = codes::build_code(2, 1);
  auto cp = codes::encoded_cphase(block, block);
  c.add_exact("boundary factorization gives the table (-,+,+,-)", cp.diagonal == expected);
  const codes::CodeSubspace joint(4, 2);
  const auto proj = codes::project_exact(z(1) * z(2), joint);
  std::vector<int> table;
  for (uint64_t ca : block.codewords()) {
    for (uint64_t cb : block.codewords()) {
      size_t idx = *joint.index_of(ca | (cb << 2));
      table.push_back(proj.at(idx, idx) == Coeff(1) ? 1 : -1);
    }
  }
  c.add_exact("four-qubit projection gives the table (-,+,+,-)", table == expected);
  // Same action as -T1z T2z on the code.
  auto tz = [&](int i, int j) { return codes::t_operator(n, TKind::Tz, i, j); };
  const auto lhs = codes::project_exact(z(1) * z(2), joint);
  const auto rhs = codes::project_exact(tz(0, 1) * tz(2, 3) * Coeff(-1), joint);
  bool same = true;
  for (uint64_t ca : block.codewords()) {
    for (uint64_t cb : block.codewords()) {
      size_t idx = *joint.index_of(ca | (cb << 2));
      same = same && lhs.at(idx, idx) == rhs.at(idx, idx);
    }
  }
  c.add_exact("s2z s3z = -T1z T2z on C(2,1) x C(2,1)", same);
  return c;
}

IdentityCheck check_axy_split(double jxy, double jyx, double eps1, double eps2) {
  IdentityCheck c;
  c.name = "axy-split";
  const int n = 2;
  const Coeff Jxy = Coeff::from_double(jxy), Jyx = Coeff::from_double(jyx);
  const Coeff e1 = Coeff::from_double(eps1), e2 = Coeff::from_double(eps2);
  const Coeff half(mpq_class(1, 2));
  const OperatorSum v = OperatorSum::pauli_string("XY", Jxy) + OperatorSum::pauli_string("YX", Jyx);
  const OperatorSum h0 = (OperatorSum::pauli(n, 0, 'Z') * e1 + OperatorSum::pauli(n, 1, 'Z') * e2) * half;
  const OperatorSum h = h0 + v;
  using parafermion::Bilinear;
  const auto T = parafermion::bilinear_su2(n, 0, 1, Bilinear::T);
  const auto R = parafermion::bilinear_su2(n, 0, 1, Bilinear::R);

  const Coeff jt = Jxy + Jyx, dt = Jxy - Jyx;
  const OperatorSum split = R.y * (jt * half) + R.z * ((e1 + e2) * half) - T.y * (dt * half) + T.z * ((e1 - e2) * half);
  c.add_exact("H0 + V = (J~/2) Ry + ((e1+e2)/2) Rz - (D~/2) Ty + ((e1-e2)/2) Tz", h - split);
  // The same coefficients from orthogonal projection.
  auto coord = [&](const OperatorSum& g) { return g.inner(h) / g.inner(g); };
  c.add_exact("projection onto Ry gives J~/2", coord(R.y) == jt * half);
  c.add_exact("projection onto Ty gives -D~/2", coord(T.y) == -(dt * half));
  c.add_exact("projection onto Rz gives (e1+e2)/2", coord(R.z) == (e1 + e2) * half);
  c.add_exact("projection onto Tz gives (e1-e2)/2", coord(T.z) == (e1 - e2) * half);
  for (const auto* tg : {&T.x, &T.y, &T.z}) {
    for (const auto* rg : {&R.x, &R.y, &R.z}) c.add_exact("[T, R] = 0", commutator(*tg, *rg));
  }
  if (jxy == jyx) c.add_exact("Jxy = Jyx leaves only R terms in V", v - R.y * (jt * half));
  if (jxy == -jyx) c.add_exact("Jxy = -Jyx leaves only T terms in V", v + T.y * (dt * half));
  return c;
}

IdentityCheck check_boson_commutator(int max_modes) {
  IdentityCheck c;
  c.name = "boson-commutator";
  for (int n = 1; n <= max_modes; ++n) {
    OperatorSum comm = jw::boson_approx_commutator(n);
    c.add_exact("[B,B^dag] = 1 - (2/N) sum n at N=" + std::to_string(n), comm - jw::boson_approx_expected(n));
    // C(N,N) holds the single all-empty label, i.e. the vacuum.
    const auto vac = codes::project_exact(comm, codes::CodeSubspace(n, n));
    c.add_exact("vacuum eigenvalue 1 at N=" + std::to_string(n), vac.at(0, 0) == Coeff(1));
  }
  return c;
}

IdentityCheck check_compound(int case_id, int max_pairs, int boson_cutoff) {
  IdentityCheck c;
  c.name = "compound-" + std::to_string(case_id);
  for (int p = 1; p <= max_pairs; ++p) {
    auto rep = jw::compound_mapping_check(case_id, p, boson_cutoff);
    for (const auto& r : rep.relations) {
      std::string label = "pairs=" + std::to_string(p) + ": " + r.name;
      if (r.exact) {
        c.add_exact(label, r.passed);
      } else {
        c.add_numeric(label, r.residual, jw::kCompoundTolerance);
      }
    }
  }
  return c;
}

IdentityCheck check_car(int max_modes) {
  IdentityCheck c;
  c.name = "car";
  for (int n = 1; n <= max_modes; ++n) {
    auto rep = jw::verify_car(n);
    for (const auto& r : rep.relations) c.add_exact("N=" + std::to_string(n) + ": " + r.relation, r.passed);
  }
  return c;
}

std::vector<std::string> check_names() {
  return {"recoupling", "angular",          "canonical",  "kerr",       "bch",        "iontrap", "axy-encoded",
          "axy-split",  "boson-commutator", "compound-1", "compound-2", "compound-3", "car"};
}

namespace {

IdentityCheck merge(std::string name, const std::vector<std::pair<std::string, IdentityCheck>>& runs) {
  IdentityCheck out;
  out.name = std::move(name);
  for (const auto& [prefix, chk] : runs) {
    for (auto p : chk.parts) {
      p.label = prefix + ": " + p.label;
      out.parts.push_back(std::move(p));
    }
    for (const auto& note : chk.notes) {
      if (std::find(out.notes.begin(), out.notes.end(), note) == out.notes.end()) out.notes.push_back(note);
    }
  }
  return out;
}

}  // namespace

IdentityCheck run_check(std::string_view name) {
  const OperatorSum z = OperatorSum::pauli(1, 0, 'Z'), x = OperatorSum::pauli(1, 0, 'X');
  if (name == "recoupling") {
    return merge("recoupling", {{"A=Z B=X phi=pi/4", check_recoupling(z, x, 0.37, pi / 4)},
                                {"A=Z B=X phi=pi/2", check_recoupling(z, x, 0.37, pi / 2)},
                                {"A=Z B=X phi=0", check_recoupling(z, x, 0.37, 0.0)},
                                {"A=Z0Z1 B=X0 phi=pi/4", check_recoupling(OperatorSum::pauli_string("ZZ"),
                                                                          OperatorSum::pauli_string("XI"), 1.1, pi / 4)}});
  }
  if (name == "angular") {
    std::vector<std::pair<std::string, IdentityCheck>> runs;
    for (double phi : {0.0, pi / 2, pi, 0.3}) {
      runs.push_back({"R triple phi=" + fmt(phi), check_angular_recoupling(0.37, phi, Su2Choice::r_triple)});
    }
    runs.push_back({"spin-1/2 phi=pi/2", check_angular_recoupling(0.37, pi / 2, Su2Choice::spin_half)});
    runs.push_back({"T triple phi=0.3", check_angular_recoupling(0.37, 0.3, Su2Choice::t_triple)});
    return merge("angular", runs);
  }
  if (name == "canonical") return check_canonical_reduction();
  if (name == "kerr") return check_kerr_selfkerr();
  if (name == "bch") {
    return merge("bch", {{"A=Z B=X", check_bch_series(z, x, 1e-2, 4)}, {"A=B=X", check_bch_series(x, x, 1e-2, 4)}});
  }
  if (name == "iontrap") return check_iontrap_xy(3);
  if (name == "axy-encoded") return check_axy_encoded();
  if (name == "axy-split") {
    return merge("axy-split", {{"generic", check_axy_split(0.7, -0.3, 0.45, -1.25)},
                               {"symmetric", check_axy_split(0.6, 0.6, 1.0, 0.5)},
                               {"antisymmetric", check_axy_split(0.6, -0.6, 1.0, 0.5)},
                               {"zero", check_axy_split(0.0, 0.0, 0.0, 0.0)}});
  }
  if (name == "boson-commutator") return check_boson_commutator(6);
  if (name == "compound-1") return check_compound(1);
  if (name == "compound-2") return check_compound(2);
  if (name == "compound-3") return check_compound(3);
  if (name == "car") return check_car(5);
  throw std::invalid_argument("unknown check '" + std::string(name) + "'");
}

std::vector<IdentityCheck> run_all() {
  std::vector<IdentityCheck> out;
  for (const auto& n : check_names()) out.push_back(run_check(n));
  return out;
}

}  // namespace qalg::verify
