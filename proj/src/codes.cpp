#include "qalg/codes.hpp"

#include <cmath>
#include <stdexcept>

#include "qalg/exact_conjugation.hpp"

namespace qalg::codes {

CodeSubspace build_code(int n_modes, int excitations) { return CodeSubspace(n_modes, excitations); }

double rate(int n_modes, int excitations) {
  if (n_modes < 1 || n_modes > 62 || excitations < 0 || excitations > n_modes) {
    throw std::invalid_argument("rate: invalid code parameters");
  }
  return std::log2(static_cast<double>(lie::binomial(n_modes, excitations))) / n_modes;
}

double shannon_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("shannon_entropy: p outside [0,1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

namespace {

void check_pair(int n, int i, int j) {
  if (i < 0 || j >= n || i >= j) {
    throw std::invalid_argument("invalid mode pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
}

EncodedGate from_exact(std::string name, std::vector<int> support, GateKind kind, ExactMatrix m) {
  EncodedGate g;
  g.name = std::move(name);
  g.support = std::move(support);
  g.kind = kind;
  g.action = m.to_dense();
  g.exact = std::move(m);
  return g;
}

}  // namespace

OperatorSum t_operator(int n, TKind kind, int i, int j) {
  check_pair(n, i, j);
  const Coeff half(mpq_class(1, 2));
  if (kind == TKind::Tx) {
    return (OperatorSum::pauli(n, i, 'X') * OperatorSum::pauli(n, j, 'X') +
            OperatorSum::pauli(n, i, 'Y') * OperatorSum::pauli(n, j, 'Y')) *
           half;
  }
  return (OperatorSum::pauli(n, i, 'Z') - OperatorSum::pauli(n, j, 'Z')) * half;
}

EncodedGate encoded_generator(const CodeSubspace& code, TKind kind, int i, int j) {
  OperatorSum op = t_operator(code.n_modes(), kind, i, j);
  std::string name = std::string(kind == TKind::Tx ? "Tx" : "Tz") + "(" + std::to_string(i) + "," +
                     std::to_string(j) + ")";
  return from_exact(name, {i, j}, GateKind::generator, project_exact(op, code));
}

EncodedGate routed_generator(const CodeSubspace& code, int i, int j) {
  const int n = code.n_modes();
  check_pair(n, i, j);
  OperatorSum op = t_operator(n, TKind::Tx, j - 1, j);
  std::vector<int> support = {j - 1, j};
  for (int k = j - 2; k >= i; --k) {
    // Rational at pi/2, so the sqrt(2) part is empty.
    op = conjugate_exact(t_operator(n, TKind::Tx, k, k + 1), QuarterAngle::pi_over_2, op).rational;
    support.insert(support.begin(), k);
  }
  return from_exact("routed Tx(" + std::to_string(i) + "," + std::to_string(j) + ")", support, GateKind::generator,
                    project_exact(op, code));
}

EncodedGate swap_gate(const CodeSubspace& code, int k) {
  const int n = code.n_modes();
  check_pair(n, k, k + 1);
  OperatorSum a = t_operator(n, TKind::Tx, k, k + 1);
  OperatorSum u = OperatorSum::identity(n) - a * a - a * Coeff::i();
  return from_exact("swap(" + std::to_string(k) + "," + std::to_string(k + 1) + ")", {k, k + 1}, GateKind::unitary,
                    project_exact(u, code));
}

bool is_unitary(const EncodedGate& g, double tol) {
  const auto d = g.action.rows();
  return max_abs_diff(g.action.adjoint() * g.action, DenseMatrix::Identity(d, d)) <= tol;
}

double projector_commutator_norm(const OperatorSum& op, const CodeSubspace& code) {
  DenseMatrix p = code.projector();
  DenseMatrix m = realize(op);
  return (m * p - p * m).cwiseAbs().maxCoeff();
}

CphaseResult encoded_cphase(const CodeSubspace& a, const CodeSubspace& b) {
  CphaseResult r;
  const int na = a.n_modes();
  auto sign = [](uint64_t label, int bit) { return ((label >> bit) & 1) ? -1 : 1; };
  for (uint64_t c : a.codewords()) r.left_factor.push_back(sign(c, na - 1));
  for (uint64_t c : b.codewords()) r.right_factor.push_back(sign(c, 0));
  // Diagonal evaluated on the joint register (A on modes 0..N_A-1, B above it).
  for (uint64_t ca : a.codewords()) {
    for (uint64_t cb : b.codewords()) {
      uint64_t joint = ca | (cb << na);
      r.diagonal.push_back(sign(joint, na - 1) * sign(joint, na));
    }
  }
  r.factorizes = true;
  for (size_t i = 0; i < r.left_factor.size(); ++i) {
    for (size_t j = 0; j < r.right_factor.size(); ++j) {
      r.factorizes = r.factorizes && r.diagonal[i * r.right_factor.size() + j] == r.left_factor[i] * r.right_factor[j];
    }
  }
  if (!r.factorizes) throw std::logic_error("encoded_cphase: boundary diagonal does not factorize");
  // exp(-i pi/2 D) = diag(-i d_k); dividing by the first entry leaves d_k d_0.
  const size_t dim = r.diagonal.size();
  ExactMatrix u(dim, dim);
  for (size_t k = 0; k < dim; ++k) u.at(k, k) = Coeff(r.diagonal[k] * r.diagonal[0]);
  r.gate = from_exact("CPHASE", {na - 1, na}, GateKind::unitary, std::move(u));
  return r;
}

std::vector<SwapPair> swap_pairs(const CodeSubspace& code, int i) {
  check_pair(code.n_modes(), i, i + 1);
  std::vector<SwapPair> out;
  for (size_t idx = 0; idx < code.dim(); ++idx) {
    uint64_t c = code.codewords()[idx];
    // Take each pair once, from the member with the excitation on mode i.
    if (((c >> i) & 1) == 1 && ((c >> (i + 1)) & 1) == 0) {
      uint64_t partner = c ^ (uint64_t{3} << i);
      out.push_back({idx, *code.index_of(partner)});
    }
  }
  return out;
}

SynthesisReport synthesize_su_d(const CodeSubspace& code, size_t d_limit) {
  const int N = code.n_modes();
  const int n = code.excitations();
  if (n <= 0 || n >= N) throw std::invalid_argument("synthesize_su_d: need 0 < n < N");
  if (code.dim() > d_limit) {
    throw DimensionLimitError("synthesize_su_d: code dimension " + std::to_string(code.dim()) + " exceeds limit " +
                              std::to_string(d_limit));
  }
  lie::GeneratorSet set;
  set.n_modes = N;
  set.label = "nearest-neighbour T on C(" + std::to_string(N) + "," + std::to_string(n) + ")";
  for (int i = 0; i + 1 < N; ++i) {
    set.generators.push_back(t_operator(N, TKind::Tx, i, i + 1));
    set.names.push_back("Tx(" + std::to_string(i) + "," + std::to_string(i + 1) + ")");
    set.generators.push_back(t_operator(N, TKind::Tz, i, i + 1));
    set.names.push_back("Tz(" + std::to_string(i) + "," + std::to_string(i + 1) + ")");
  }
  SynthesisReport rep;
  rep.d = code.dim();
  rep.basis = lie::close_on_subspace(set, code);
  rep.success = rep.basis.closed && rep.basis.dimension_traceless == rep.d * rep.d - 1;
  rep.overlapping_su2 = lie::binomial(N - 2, n - 1) * lie::binomial(N, 2);
  rep.su2_ratio = mpq_class(rep.overlapping_su2, rep.d);
  rep.su2_ratio.canonicalize();
  rep.counting_ok = rep.overlapping_su2 >= rep.d;
  return rep;
}

}  // namespace qalg::codes
