#include "qalg/bracket_kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace qalg::lie::kernels {

SparseVector from_operator(const OperatorSum& op) {
  SparseVector v;
  v.reserve(op.size());
  for (const auto& [k, c] : op.terms()) {
    if (!c.is_real()) throw std::invalid_argument("from_operator: operator is not Hermitian");
    v.emplace_back(pack(k), c.re());
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

OperatorSum to_operator(int n_modes, const SparseVector& v) {
  OperatorSum op(n_modes);
  for (const auto& [k, c] : v) op.add_term(unpack(k), Coeff(c));
  return op;
}

SparseVector bracket(const SparseVector& a, const SparseVector& b) {
  SparseVector raw;
  for (const auto& [ka, ca] : a) {
    const PauliKey pa = unpack(ka);
    for (const auto& [kb, cb] : b) {
      const PauliKey pb = unpack(kb);
      if (!anticommutes(pa, pb)) continue;
      // i(PQ - QP) = 2i * i^s R with s odd: -2 R for s = 1, +2 R for s = 3.
      int s = product_phase(pa, pb);
      mpq_class c = ca * cb;
      c *= (s == 1 ? -2 : 2);
      raw.emplace_back(pack({pa.x ^ pb.x, pa.z ^ pb.z}), std::move(c));
    }
  }
  std::sort(raw.begin(), raw.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVector out;
  for (auto& [k, c] : raw) {
    if (!out.empty() && out.back().first == k) {
      out.back().second += c;
    } else {
      if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
      out.emplace_back(k, std::move(c));
    }
  }
  if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
  return out;
}

SparseVector axpy(const SparseVector& v, const mpq_class& f, const SparseVector& w) {
  SparseVector out;
  out.reserve(v.size() + w.size());
  size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      out.push_back(v[i++]);
    } else if (i == v.size() || w[j].first < v[i].first) {
      out.emplace_back(w[j].first, -f * w[j].second);
      ++j;
    } else {
      mpq_class c = v[i].second - f * w[j].second;
      if (sgn(c) != 0) out.emplace_back(v[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

const mpq_class* find(const SparseVector& v, uint64_t key) {
  auto it = std::lower_bound(v.begin(), v.end(), key, [](const auto& e, uint64_t k) { return e.first < k; });
  return (it != v.end() && it->first == key) ? &it->second : nullptr;
}

void normalize_primitive(SparseVector& v) {
  if (v.empty()) return;
  mpz_class l = 1, g = 0;
  for (const auto& [k, c] : v) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  }
  mpq_class f(l, g);
  if (sgn(v.front().second) < 0) f = -f;
  for (auto& [k, c] : v) c *= f;
}

std::vector<SparseVector> bracket_batch_serial(std::span<const SparseVector> basis, std::span<const BracketTask> tasks) {
  std::vector<SparseVector> out(tasks.size());
  for (size_t t = 0; t < tasks.size(); ++t) out[t] = bracket(basis[tasks[t].lhs], basis[tasks[t].rhs]);
  return out;
}

std::vector<SparseVector> bracket_batch_parallel(std::span<const SparseVector> basis,
                                                 std::span<const BracketTask> tasks) {
  std::vector<SparseVector> out(tasks.size());
  const int64_t n = static_cast<int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (int64_t t = 0; t < n; ++t) out[t] = bracket(basis[tasks[t].lhs], basis[tasks[t].rhs]);
  return out;
}

namespace {
inline DenseMatrix dense_bracket(const DenseMatrix& a, const DenseMatrix& b) {
  return cplx(0, 1) * (a * b - b * a);
}
}  // namespace

std::vector<DenseMatrix> dense_bracket_batch_serial(std::span<const DenseMatrix> basis,
                                                    std::span<const BracketTask> tasks) {
  std::vector<DenseMatrix> out(tasks.size());
  for (size_t t = 0; t < tasks.size(); ++t) out[t] = dense_bracket(basis[tasks[t].lhs], basis[tasks[t].rhs]);
  return out;
}

std::vector<DenseMatrix> dense_bracket_batch_parallel(std::span<const DenseMatrix> basis,
                                                      std::span<const BracketTask> tasks) {
  std::vector<DenseMatrix> out(tasks.size());
  const int64_t n = static_cast<int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (int64_t t = 0; t < n; ++t) out[t] = dense_bracket(basis[tasks[t].lhs], basis[tasks[t].rhs]);
  return out;
}

}  // namespace qalg::lie::kernels
