#include "qalg/lie_engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "qalg/bracket_kernels.hpp"
#include "qalg/parafermion.hpp"

namespace qalg::lie {

using kernels::BracketTask;
using kernels::SparseVector;

void GeneratorSet::validate() const {
  check_modes(n_modes);
  if (generators.empty()) throw std::invalid_argument("generator set '" + label + "' is empty");
  for (size_t g = 0; g < generators.size(); ++g) {
    const auto& op = generators[g];
    if (op.n_modes() != n_modes) throw ModeMismatch(n_modes, op.n_modes());
    if (op.is_zero()) throw std::invalid_argument("generator " + std::to_string(g) + " of '" + label + "' is zero");
    if (!op.is_hermitian()) {
      throw std::invalid_argument("generator " + std::to_string(g) + " of '" + label + "' is not Hermitian");
    }
  }
}

int LieBasis::provenance_depth() const {
  int d = 0;
  for (const auto& p : provenance) d = std::max(d, p.depth);
  return d;
}

uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<uint64_t>(n - k + i) / static_cast<uint64_t>(i);
  return r;
}

namespace {

std::vector<BracketTask> round_tasks(size_t frontier_begin, size_t frontier_end) {
  std::vector<BracketTask> tasks;
  for (size_t j = frontier_begin; j < frontier_end; ++j) {
    for (size_t i = 0; i < j; ++i) tasks.push_back({static_cast<uint32_t>(i), static_cast<uint32_t>(j)});
  }
  return tasks;
}

uint64_t full_dimension(int n_modes) {
  return n_modes >= 32 ? UINT64_MAX : (uint64_t{1} << (2 * n_modes));
}

// Triangular exact elimination; pivots are the leading keys in insertion order.
struct ExactSpan {
  std::vector<SparseVector> elems;
  size_t traceful = 0;  // elements with an identity component

  SparseVector reduce(SparseVector v) const {
    for (size_t i = 0; i < elems.size() && !v.empty(); ++i) {
      const auto& e = elems[i];
      const mpq_class* c = kernels::find(v, e.front().first);
      if (!c) continue;
      mpq_class f = *c / e.front().second;
      v = kernels::axpy(v, f, e);
    }
    return v;
  }

  void append(SparseVector v) {
    kernels::normalize_primitive(v);
    if (kernels::find(v, 0)) ++traceful;
    elems.push_back(std::move(v));
  }
};

// Gram-Schmidt over the real Frobenius inner product, two passes per vector.
struct NumericSpan {
  std::vector<DenseMatrix> elems;
  size_t traceful = 0;

  static double dot(const DenseMatrix& a, const DenseMatrix& b) { return (a.conjugate().cwiseProduct(b)).sum().real(); }

  std::optional<DenseMatrix> residual(const DenseMatrix& m) const {
    double nrm = m.norm();
    if (nrm < 1e-12) return std::nullopt;
    DenseMatrix r = m / nrm;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : elems) r -= dot(q, r) * q;
    }
    double rn = r.norm();
    if (rn < kSubspaceRankTolerance) return std::nullopt;
    return DenseMatrix(r / rn);
  }

  void append(DenseMatrix m) {
    if (std::abs(m.trace()) > kSubspaceRankTolerance) ++traceful;
    elems.push_back(std::move(m));
  }
};

}  // namespace

LieBasis close(const GeneratorSet& set, const CloseOptions& options) {
  set.validate();
  const int n = set.n_modes;
  const uint64_t full = full_dimension(n);
  const size_t cap = options.max_dim ? std::min<uint64_t>(*options.max_dim, full) : full;

  LieBasis out;
  out.n_modes = n;
  out.label = set.label;
  out.physical = set.physical;

  ExactSpan span;
  bool truncated = false;
  for (size_t g = 0; g < set.generators.size(); ++g) {
    SparseVector r = span.reduce(kernels::from_operator(set.generators[g]));
    if (r.empty()) continue;
    if (span.elems.size() >= cap) {
      truncated = true;
      break;
    }
    span.append(std::move(r));
    out.provenance.push_back({static_cast<int>(g), -1, -1, 0});
  }

  // Everything is spanned, or exactly the traceless operators are.
  auto complete = [&] {
    return span.elems.size() == full || (span.elems.size() + 1 == full && span.traceful == 0);
  };

  size_t frontier_begin = 0;
  while (!truncated && !complete()) {
    const size_t frontier_end = span.elems.size();
    if (frontier_begin == frontier_end) break;
    ++out.rounds;
    const auto tasks = round_tasks(frontier_begin, frontier_end);
    for (size_t start = 0; start < tasks.size() && !truncated && !complete(); start += options.batch_size) {
      std::span<const BracketTask> chunk(tasks.data() + start, std::min(options.batch_size, tasks.size() - start));
      std::span<const SparseVector> snapshot(span.elems.data(), frontier_end);
      auto brackets = options.parallel ? kernels::bracket_batch_parallel(snapshot, chunk)
                                       : kernels::bracket_batch_serial(snapshot, chunk);
      for (size_t t = 0; t < chunk.size(); ++t) {
        SparseVector r = span.reduce(std::move(brackets[t]));
        if (r.empty()) continue;
        if (span.elems.size() >= cap) {
          truncated = true;
          break;
        }
        span.append(std::move(r));
        const auto& task = chunk[t];
        int depth = std::max(out.provenance[task.lhs].depth, out.provenance[task.rhs].depth) + 1;
        out.provenance.push_back({-1, static_cast<int>(task.lhs), static_cast<int>(task.rhs), depth});
        if (complete()) break;
      }
    }
    frontier_begin = frontier_end;
  }

  out.closed = !truncated;
  out.dimension = span.elems.size();
  out.identity_in_span = span.reduce(SparseVector{{0, mpq_class(1)}}).empty();
  out.dimension_traceless = out.dimension - (out.identity_in_span ? 1 : 0);
  out.basis.reserve(span.elems.size());
  for (const auto& v : span.elems) out.basis.push_back(kernels::to_operator(n, v));
  return out;
}

LieBasis close_on_subspace(const GeneratorSet& set, const codes::CodeSubspace& code, const CloseOptions& options) {
  set.validate();
  if (set.n_modes != code.n_modes()) throw ModeMismatch(set.n_modes, code.n_modes());
  const size_t d = code.dim();
  const size_t full = d * d;
  const size_t cap = options.max_dim ? std::min(*options.max_dim, full) : full;

  LieBasis out;
  out.n_modes = set.n_modes;
  out.code_dim = d;
  out.label = set.label;
  out.physical = set.physical;

  NumericSpan span;
  bool truncated = false;
  for (size_t g = 0; g < set.generators.size(); ++g) {
    // Throws SubspaceLeak if the generator does not preserve the code.
    DenseMatrix m = codes::project_exact(set.generators[g], code).to_dense();
    auto r = span.residual(m);
    if (!r) continue;
    if (span.elems.size() >= cap) {
      truncated = true;
      break;
    }
    span.append(std::move(*r));
    out.provenance.push_back({static_cast<int>(g), -1, -1, 0});
  }

  auto complete = [&] {
    return span.elems.size() == full || (span.elems.size() + 1 == full && span.traceful == 0);
  };

  size_t frontier_begin = 0;
  while (!truncated && !complete()) {
    const size_t frontier_end = span.elems.size();
    if (frontier_begin == frontier_end) break;
    ++out.rounds;
    const auto tasks = round_tasks(frontier_begin, frontier_end);
    for (size_t start = 0; start < tasks.size() && !truncated && !complete(); start += options.batch_size) {
      std::span<const BracketTask> chunk(tasks.data() + start, std::min(options.batch_size, tasks.size() - start));
      std::span<const DenseMatrix> snapshot(span.elems.data(), frontier_end);
      auto brackets = options.parallel ? kernels::dense_bracket_batch_parallel(snapshot, chunk)
                                       : kernels::dense_bracket_batch_serial(snapshot, chunk);
      for (size_t t = 0; t < chunk.size(); ++t) {
        auto r = span.residual(brackets[t]);
        if (!r) continue;
        if (span.elems.size() >= cap) {
          truncated = true;
          break;
        }
        span.append(std::move(*r));
        const auto& task = chunk[t];
        int depth = std::max(out.provenance[task.lhs].depth, out.provenance[task.rhs].depth) + 1;
        out.provenance.push_back({-1, static_cast<int>(task.lhs), static_cast<int>(task.rhs), depth});
        if (complete()) break;
      }
    }
    frontier_begin = frontier_end;
  }

  out.closed = !truncated;
  out.dimension = span.elems.size();
  out.identity_in_span = !span.residual(DenseMatrix::Identity(d, d)).has_value();
  out.dimension_traceless = out.dimension - (out.identity_in_span ? 1 : 0);
  out.encoded_basis = std::move(span.elems);
  return out;
}

std::vector<Candidate> candidates(int n_modes) {
  const uint64_t N = static_cast<uint64_t>(n_modes);
  const uint64_t full = full_dimension(n_modes);
  return {
      {"su(2^N)", full - 1, true, false, false},
      {"u(2^N)", full, false, false, false},
      {"so(2N+1)", N * (2 * N + 1), true, false, false},
      {"so(2N)", N * (2 * N - 1), true, false, true},
      {"u(N)", N * N, false, true, false},
      {"su(N)", N * N - 1, true, true, false},
      {"SA_n", binomial(2 * n_modes, n_modes), false, true, false},
      {"SA_p", full / 2, false, false, true},
  };
}

std::vector<Candidate> subspace_candidates(size_t d) {
  return {{"su(d)", d * d - 1, true, false, false}, {"u(d)", d * d, false, false, false}};
}

AlgebraVerdict classify_algebra(const LieBasis& basis) {
  if (!basis.closed) throw std::invalid_argument("classify_algebra: basis is not closed");
  AlgebraVerdict v;
  v.dimension = basis.dimension;
  v.dimension_traceless = basis.dimension_traceless;
  if (basis.on_subspace()) {
    v.matches = subspace_candidates(basis.code_dim);
    v.universal_full_space = false;
  } else {
    v.conserves_number = std::all_of(basis.basis.begin(), basis.basis.end(),
                                     [](const OperatorSum& b) { return parafermion::commutes_with_number(b); });
    v.conserves_parity = std::all_of(basis.basis.begin(), basis.basis.end(),
                                     [](const OperatorSum& b) { return parafermion::commutes_with_parity(b); });
    v.matches = candidates(basis.n_modes);
    v.universal_full_space = v.dimension + 1 >= full_dimension(basis.n_modes);
  }
  for (auto& c : v.matches) {
    size_t value = c.compare_traceless ? v.dimension_traceless : v.dimension;
    c.hit = value == c.expected_dim && (!c.needs_number || v.conserves_number) &&
            (!c.needs_parity || v.conserves_parity);
  }
  return v;
}

}  // namespace qalg::lie
