#include "qalg/jw_map.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qalg/parafermion.hpp"

namespace qalg::jw {

OperatorSum JWStringOp::to_pauli(int n_modes) const { return string_operator(n_modes, mode); }

OperatorSum string_operator(int n_modes, int mode) {
  if (mode < 0 || mode >= n_modes) throw std::out_of_range("string_operator: mode out of range");
  OperatorSum s = OperatorSum::identity(n_modes);
  for (int k = 0; k < mode; ++k) s = s * (OperatorSum::pauli(n_modes, k, 'Z') * Coeff(-1));
  return s;
}

OperatorSum fermion_annihilator(int n_modes, int mode) {
  return sigma_minus(n_modes, mode) * string_operator(n_modes, mode);
}

OperatorSum fermion_creator(int n_modes, int mode) { return sigma_plus(n_modes, mode) * string_operator(n_modes, mode); }

OperatorSum jw_fermion_to_pauli(const SecondQuantizedExpr& expr) {
  if (expr.species() != Species::fermion) {
    throw std::invalid_argument("jw_fermion_to_pauli expects a fermion expression, got " +
                                species_name(expr.species()));
  }
  const int n = expr.n_modes();
  OperatorSum out(n);
  for (const auto& t : expr.terms()) {
    OperatorSum prod = OperatorSum::identity(n, t.coeff);
    for (const auto& f : t.factors) {
      switch (f.kind) {
        case FactorKind::create: prod = prod * fermion_creator(n, f.mode); break;
        case FactorKind::annihilate: prod = prod * fermion_annihilator(n, f.mode); break;
        case FactorKind::number: prod = prod * number_op(n, f.mode); break;
      }
      if (prod.is_zero()) break;
    }
    out += prod;
  }
  return out;
}

bool CarReport::all_passed() const {
  for (const auto& r : relations) {
    if (!r.passed) return false;
  }
  return !relations.empty();
}

CarReport verify_car(int n_modes) {
  check_modes(n_modes);
  CarReport rep;
  rep.n_modes = n_modes;
  std::vector<OperatorSum> f, fd;
  for (int i = 0; i < n_modes; ++i) {
    f.push_back(fermion_annihilator(n_modes, i));
    fd.push_back(fermion_creator(n_modes, i));
  }
  const OperatorSum id = OperatorSum::identity(n_modes);
  const OperatorSum zero(n_modes);
  for (int i = 0; i < n_modes; ++i) {
    for (int j = 0; j < n_modes; ++j) {
      std::string ij = std::to_string(i) + "," + std::to_string(j);
      rep.relations.push_back({"{f" + std::to_string(i) + ",fd" + std::to_string(j) + "}=" + (i == j ? "1" : "0"),
                               anticommutator(f[i], fd[j]) == (i == j ? id : zero)});
      if (j < i) continue;
      rep.relations.push_back({"{f" + std::to_string(i) + ",f" + std::to_string(j) + "}=0",
                               anticommutator(f[i], f[j]).is_zero()});
      rep.relations.push_back({"{fd" + std::to_string(i) + ",fd" + std::to_string(j) + "}=0",
                               anticommutator(fd[i], fd[j]).is_zero()});
    }
  }
  return rep;
}

OperatorSum boson_approx_commutator(int n_modes) {
  check_modes(n_modes);
  OperatorSum sum_a(n_modes);
  for (int i = 0; i < n_modes; ++i) sum_a += sigma_minus(n_modes, i);
  // B = sum_a / sqrt(N), so [B, B^dag] = [sum_a, sum_a^dag] / N.
  return commutator(sum_a, sum_a.adjoint()) * Coeff(mpq_class(1, n_modes));
}

OperatorSum boson_approx_expected(int n_modes) {
  return OperatorSum::identity(n_modes) - total_number(n_modes) * Coeff(mpq_class(2, n_modes));
}

TruncatedBosonSpace::TruncatedBosonSpace(int n_modes, int cutoff) : n_modes_(n_modes), cutoff_(cutoff) {
  if (n_modes < 1) throw std::invalid_argument("TruncatedBosonSpace: n_modes must be >= 1");
  if (cutoff < 1) throw std::invalid_argument("TruncatedBosonSpace: cutoff must be >= 1");
  double d = std::pow(static_cast<double>(cutoff + 1), n_modes);
  if (d > 4096) throw DimensionLimitError("TruncatedBosonSpace: dimension " + std::to_string(d) + " exceeds 4096");
  dim_ = static_cast<Eigen::Index>(d);
}

Eigen::Index TruncatedBosonSpace::index(const std::vector<int>& occ) const {
  if (static_cast<int>(occ.size()) != n_modes_) throw std::invalid_argument("occupation vector length mismatch");
  Eigen::Index idx = 0;
  for (int m = n_modes_ - 1; m >= 0; --m) {
    if (occ[m] < 0 || occ[m] > cutoff_) throw std::out_of_range("occupation outside 0..cutoff");
    idx = idx * (cutoff_ + 1) + occ[m];
  }
  return idx;
}

std::vector<int> TruncatedBosonSpace::occupations(Eigen::Index index) const {
  std::vector<int> occ(n_modes_);
  for (int m = 0; m < n_modes_; ++m) {
    occ[m] = static_cast<int>(index % (cutoff_ + 1));
    index /= (cutoff_ + 1);
  }
  return occ;
}

DenseVector TruncatedBosonSpace::fock_state(const std::vector<int>& occ) const {
  DenseVector v = DenseVector::Zero(dim_);
  v(index(occ)) = 1.0;
  return v;
}

DenseMatrix TruncatedBosonSpace::annihilator(int mode) const {
  if (mode < 0 || mode >= n_modes_) throw std::out_of_range("boson mode out of range");
  DenseMatrix m = DenseMatrix::Zero(dim_, dim_);
  for (Eigen::Index s = 0; s < dim_; ++s) {
    auto occ = occupations(s);
    int k = occ[mode];
    if (k == 0) continue;
    occ[mode] = k - 1;
    m(index(occ), s) = std::sqrt(static_cast<double>(k));
  }
  return m;
}

DenseMatrix TruncatedBosonSpace::creator(int mode) const { return annihilator(mode).adjoint(); }

DenseMatrix TruncatedBosonSpace::number(int mode) const {
  if (mode < 0 || mode >= n_modes_) throw std::out_of_range("boson mode out of range");
  DenseMatrix m = DenseMatrix::Zero(dim_, dim_);
  for (Eigen::Index s = 0; s < dim_; ++s) m(s, s) = occupations(s)[mode];
  return m;
}

DenseMatrix TruncatedBosonSpace::below_cutoff_projector() const {
  DenseMatrix m = DenseMatrix::Zero(dim_, dim_);
  for (Eigen::Index s = 0; s < dim_; ++s) {
    bool ok = true;
    for (int o : occupations(s)) ok = ok && o < cutoff_;
    if (ok) m(s, s) = 1.0;
  }
  return m;
}

DenseMatrix TruncatedBosonSpace::realize(const SecondQuantizedExpr& expr) const {
  if (expr.species() != Species::boson) throw std::invalid_argument("TruncatedBosonSpace::realize expects bosons");
  if (expr.n_modes() != n_modes_) throw ModeMismatch(n_modes_, expr.n_modes());
  DenseMatrix out = DenseMatrix::Zero(dim_, dim_);
  for (const auto& t : expr.terms()) {
    DenseMatrix prod = DenseMatrix::Identity(dim_, dim_) * t.coeff.to_complex();
    for (const auto& f : t.factors) {
      switch (f.kind) {
        case FactorKind::create: prod = prod * creator(f.mode); break;
        case FactorKind::annihilate: prod = prod * annihilator(f.mode); break;
        case FactorKind::number: prod = prod * number(f.mode); break;
      }
    }
    out += prod;
  }
  return out;
}

bool CompoundReport::all_passed() const {
  for (const auto& r : relations) {
    if (!r.passed) return false;
  }
  return !relations.empty();
}

namespace {

double size_of(const OperatorSum& op) {
  double m = 0.0;
  for (const auto& [k, c] : op.terms()) m = std::max(m, std::abs(c.to_complex()));
  return m;
}

double size_of(const DenseMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

OperatorSum times(const OperatorSum& m, int s) { return m * Coeff(s); }
DenseMatrix times(const DenseMatrix& m, int s) { return m * static_cast<double>(s); }
OperatorSum adj(const OperatorSum& m) { return m.adjoint(); }
DenseMatrix adj(const DenseMatrix& m) { return m.adjoint(); }

// Relation suite shared by the exact and the truncated-boson realizations.
// `a` are the composite annihilators, `z` the constituent form of 2n_k - 1,
// `P` the constraint projector, `vac` an operator whose range is the stated vacuum.
template <class M>
void relation_suite(const std::vector<M>& a, const std::vector<M>& z, const M& P, const M& I, const M& vac,
                    bool exact, bool check_leakage, std::vector<CompoundRelation>& out) {
  auto record = [&](std::string name, const M& diff) {
    double r = size_of(diff);
    out.push_back({std::move(name), r, exact, exact ? r == 0.0 : r <= kCompoundTolerance});
  };
  const M Q = I - P;
  const size_t n = a.size();
  for (size_t k = 0; k < n; ++k) {
    const std::string ks = std::to_string(k);
    const M ad = adj(a[k]);
    if (check_leakage) {
      record("a" + ks + " preserves constraint", M(Q * a[k] * P));
      record("ad" + ks + " preserves constraint", M(Q * ad * P));
    }
    record("{a" + ks + ",ad" + ks + "}=1", M(P * (a[k] * ad + ad * a[k]) * P - P));
    record("a" + ks + " a" + ks + "=0", M(P * a[k] * a[k] * P));
    record("2 ad" + ks + " a" + ks + " - 1 = constituent form", M(P * (times(ad * a[k], 2) - I - z[k]) * P));
    M h = times(ad * a[k], 2) - I;
    record("[ad" + ks + ",a" + ks + "]=2n-1", M(P * (ad * a[k] - a[k] * ad - h) * P));
    record("[2n-1,ad" + ks + "]=2ad" + ks, M(P * (h * ad - ad * h - times(ad, 2)) * P));
    record("[2n-1,a" + ks + "]=-2a" + ks, M(P * (h * a[k] - a[k] * h + times(a[k], 2)) * P));
    record("a" + ks + " vacuum=0", M(a[k] * vac));
    for (size_t l = 0; l < n; ++l) {
      if (l == k) continue;
      const std::string ls = std::to_string(l);
      record("[a" + ks + ",ad" + ls + "]=0", M(P * (a[k] * adj(a[l]) - adj(a[l]) * a[k]) * P));
      if (l > k) record("[a" + ks + ",a" + ls + "]=0", M(P * (a[k] * a[l] - a[l] * a[k]) * P));
    }
  }
  // The vacuum must be a nonzero state inside the constraint.
  bool vac_nonzero = size_of(vac) > 1e-6;
  out.push_back({"vacuum nonzero", vac_nonzero ? 0.0 : 1.0, exact, vac_nonzero});
  record("vacuum inside constraint", M(Q * vac));
}

void check_exact_case(int case_id, int n_pairs, CompoundReport& rep) {
  const int m = 2 * n_pairs;
  const OperatorSum I = OperatorSum::identity(m);
  OperatorSum P = I;
  std::vector<OperatorSum> a, z;
  for (int k = 0; k < n_pairs; ++k) {
    const int lo = 2 * k, hi = 2 * k + 1;
    OperatorSum zz = OperatorSum::pauli(m, lo, 'Z') * OperatorSum::pauli(m, hi, 'Z');
    // Equal occupations <=> Z_lo Z_hi = +1.
    P = P * ((I + (case_id == 1 ? zz : zz * Coeff(-1))) * Coeff(mpq_class(1, 2)));
    if (case_id == 1) {
      a.push_back(fermion_annihilator(m, hi) * fermion_annihilator(m, lo));
      z.push_back(number_op(m, lo) + number_op(m, hi) - I);
    } else {
      a.push_back(fermion_creator(m, hi) * fermion_annihilator(m, lo));
      z.push_back(number_op(m, lo) - number_op(m, hi));
    }
  }
  // Fermionic vacuum projector, then the stated composite vacuum built on it.
  OperatorSum vac = I;
  for (int i = 0; i < m; ++i) vac = vac * (I - number_op(m, i));
  if (case_id == 2) {
    for (int k = 0; k < n_pairs; ++k) vac = fermion_creator(m, 2 * k + 1) * vac;
  }
  relation_suite(a, z, P, I, vac, true, true, rep.relations);
}

void check_boson_case(int n_pairs, int cutoff, CompoundReport& rep) {
  const int m = 2 * n_pairs;
  TruncatedBosonSpace space(m, cutoff);
  // Isometry V onto the constrained subspace (one boson per pair). Leakage is
  // checked on the full space; the relations then run on V^dag X V, which is
  // faithful once every operator is known to preserve range(V).
  std::vector<Eigen::Index> cols;
  for (Eigen::Index s = 0; s < space.dim(); ++s) {
    auto occ = space.occupations(s);
    bool ok = true;
    for (int k = 0; k < n_pairs; ++k) ok = ok && occ[2 * k] + occ[2 * k + 1] == 1;
    if (ok) cols.push_back(s);
  }
  const Eigen::Index r = static_cast<Eigen::Index>(cols.size());
  DenseMatrix V = DenseMatrix::Zero(space.dim(), r);
  for (Eigen::Index c = 0; c < r; ++c) V(cols[c], c) = 1.0;
  const DenseMatrix Q = DenseMatrix::Identity(space.dim(), space.dim()) - V * V.adjoint();

  std::vector<DenseMatrix> a, z;
  for (int k = 0; k < n_pairs; ++k) {
    const std::string ks = std::to_string(k);
    DenseMatrix full = space.creator(2 * k + 1) * space.annihilator(2 * k);
    for (int dag = 0; dag < 2; ++dag) {
      DenseMatrix op = dag ? DenseMatrix(full.adjoint()) : full;
      double leak = size_of(DenseMatrix(Q * op * V));
      rep.relations.push_back({(dag ? "ad" : "a") + ks + " preserves constraint", leak, false,
                               leak <= kCompoundTolerance});
    }
    a.push_back(V.adjoint() * full * V);
    z.push_back(V.adjoint() * (space.number(2 * k) - space.number(2 * k + 1)) * V);
  }
  std::vector<int> occ(m, 0);
  for (int k = 0; k < n_pairs; ++k) occ[2 * k + 1] = 1;
  const DenseVector vac_state = space.fock_state(occ);
  const double outside = (Q * vac_state).cwiseAbs().maxCoeff();
  rep.relations.push_back({"vacuum inside constraint (full space)", outside, false, outside <= kCompoundTolerance});
  DenseMatrix vac = DenseMatrix::Zero(r, r);
  vac.col(0) = V.adjoint() * vac_state;
  const DenseMatrix I = DenseMatrix::Identity(r, r);
  relation_suite(a, z, I, I, vac, false, false, rep.relations);
}

}  // namespace

CompoundReport compound_mapping_check(int case_id, int n_pairs, int boson_cutoff) {
  if (case_id < 1 || case_id > 3) throw std::invalid_argument("compound case must be 1, 2 or 3");
  if (n_pairs < 1 || n_pairs > 3) throw std::invalid_argument("compound_mapping_check: n_pairs must be in 1..3");
  CompoundReport rep;
  rep.case_id = case_id;
  rep.n_pairs = n_pairs;
  if (case_id == 3) {
    if (boson_cutoff < 1) throw std::invalid_argument("compound case 3 needs boson cutoff >= 1");
    rep.boson_cutoff = boson_cutoff;
    check_boson_case(n_pairs, boson_cutoff, rep);
  } else {
    check_exact_case(case_id, n_pairs, rep);
  }
  return rep;
}

}  // namespace qalg::jw
