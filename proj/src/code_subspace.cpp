#include "qalg/code_subspace.hpp"

#include <algorithm>
#include <map>

namespace qalg::codes {

namespace {

uint64_t msb_first_value(uint64_t label, int n) {
  uint64_t v = 0;
  for (int k = 0; k < n; ++k) v = (v << 1) | ((label >> k) & 1);
  return v;
}

}  // namespace

CodeSubspace::CodeSubspace(int n_modes, int excitations) : n_modes_(n_modes), excitations_(excitations) {
  if (n_modes < 1 || n_modes > 24) throw std::invalid_argument("CodeSubspace: N must be in 1..24");
  if (excitations < 0 || excitations > n_modes) throw std::invalid_argument("CodeSubspace: n must be in 0..N");
  for (uint64_t b = 0; b < (uint64_t{1} << n_modes); ++b) {
    if (popcount(b) == excitations) codewords_.push_back(b);
  }
  std::sort(codewords_.begin(), codewords_.end(),
            [n_modes](uint64_t a, uint64_t b) { return msb_first_value(a, n_modes) < msb_first_value(b, n_modes); });
}

std::optional<size_t> CodeSubspace::index_of(uint64_t label) const {
  if (popcount(label) != excitations_ || (label >> n_modes_) != 0) return std::nullopt;
  auto key = msb_first_value(label, n_modes_);
  auto it = std::lower_bound(codewords_.begin(), codewords_.end(), key, [this](uint64_t c, uint64_t k) {
    return msb_first_value(c, n_modes_) < k;
  });
  if (it == codewords_.end() || *it != label) return std::nullopt;
  return static_cast<size_t>(it - codewords_.begin());
}

std::string label_bitstring(uint64_t label, int n_modes) {
  std::string s;
  for (int k = 0; k < n_modes; ++k) s.push_back(((label >> k) & 1) ? '1' : '0');
  return s;
}

std::string CodeSubspace::bitstring(size_t i) const { return label_bitstring(codewords_.at(i), n_modes_); }

DenseMatrix CodeSubspace::projector() const {
  require_dense(n_modes_, "CodeSubspace::projector");
  const Eigen::Index dim = Eigen::Index{1} << n_modes_;
  DenseMatrix p = DenseMatrix::Zero(dim, dim);
  for (uint64_t c : codewords_) p(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c)) = 1.0;
  return p;
}

DenseMatrix ExactMatrix::to_dense() const {
  DenseMatrix m(rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) m(r, c) = at(r, c).to_complex();
  }
  return m;
}

ExactMatrix exact_product(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("exact_product: shape mismatch");
  ExactMatrix out(a.rows, b.cols);
  for (size_t r = 0; r < a.rows; ++r) {
    for (size_t k = 0; k < a.cols; ++k) {
      if (a.at(r, k).is_zero()) continue;
      for (size_t c = 0; c < b.cols; ++c) out.at(r, c) += a.at(r, k) * b.at(k, c);
    }
  }
  return out;
}

ExactMatrix project_exact(const OperatorSum& op, const CodeSubspace& code) {
  if (op.n_modes() != code.n_modes()) throw ModeMismatch(op.n_modes(), code.n_modes());
  const size_t d = code.dim();
  ExactMatrix m(d, d);
  for (size_t col = 0; col < d; ++col) {
    const uint64_t b = code.codewords()[col];
    // Exact image of the codeword, keyed by output label.
    std::map<uint64_t, Coeff> image;
    for (const auto& [k, c] : op.terms()) {
      int ph = popcount(k.x & k.z) + 2 * (popcount(k.z & b) & 1);
      image[b ^ k.x] += c.times_i_pow(ph);
    }
    for (const auto& [label, amp] : image) {
      if (amp.is_zero()) continue;
      auto row = code.index_of(label);
      if (!row) {
        throw SubspaceLeak("operator maps codeword " + label_bitstring(b, code.n_modes()) + " to " +
                           label_bitstring(label, code.n_modes()) + " outside C(" +
                           std::to_string(code.n_modes()) + "," + std::to_string(code.excitations()) + ")");
      }
      m.at(*row, col) = amp;
    }
  }
  return m;
}

bool preserves(const OperatorSum& op, const CodeSubspace& code) {
  try {
    project_exact(op, code);
    return true;
  } catch (const SubspaceLeak&) {
    return false;
  }
}

}  // namespace qalg::codes
