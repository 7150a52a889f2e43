#include "qalg/pauli.hpp"

#include <sstream>

namespace qalg {

ModeMismatch::ModeMismatch(int a, int b)
    : std::invalid_argument("mode-count mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}

void check_modes(int n_modes) {
  if (n_modes < 1 || n_modes > kMaxModes) {
    throw std::invalid_argument("n_modes must be in 1.." + std::to_string(kMaxModes) + ", got " +
                                std::to_string(n_modes));
  }
}

namespace {

uint64_t mode_mask(int n_modes) {
  return n_modes >= 64 ? ~uint64_t{0} : ((uint64_t{1} << n_modes) - 1);
}

void check_same(int a, int b) {
  if (a != b) throw ModeMismatch(a, b);
}

void check_mode_index(int n_modes, int mode) {
  if (mode < 0 || mode >= n_modes) {
    throw std::out_of_range("mode " + std::to_string(mode) + " out of range for " + std::to_string(n_modes) +
                            " modes");
  }
}

}  // namespace

PauliTerm::PauliTerm(int n_modes, PauliKey key, int phase) : n_modes_(n_modes), key_(key), phase_(((phase % 4) + 4) % 4) {
  check_modes(n_modes);
  uint64_t m = mode_mask(n_modes);
  if ((key.x & ~m) || (key.z & ~m)) throw std::out_of_range("PauliTerm: mask exceeds n_modes");
}

PauliTerm PauliTerm::single(int n_modes, int mode, char which) {
  check_modes(n_modes);
  check_mode_index(n_modes, mode);
  uint64_t b = uint64_t{1} << mode;
  switch (which) {
    case 'I': return PauliTerm(n_modes, {});
    case 'X': return PauliTerm(n_modes, {b, 0});
    case 'Y': return PauliTerm(n_modes, {b, b});
    case 'Z': return PauliTerm(n_modes, {0, b});
    default: throw std::invalid_argument(std::string("unknown Pauli letter '") + which + "'");
  }
}

PauliTerm multiply(const PauliTerm& lhs, const PauliTerm& rhs) {
  check_same(lhs.n_modes_, rhs.n_modes_);
  int s = product_phase(lhs.key_, rhs.key_);
  return PauliTerm(lhs.n_modes_, {lhs.key_.x ^ rhs.key_.x, lhs.key_.z ^ rhs.key_.z}, lhs.phase_ + rhs.phase_ + s);
}

std::string PauliTerm::str() const {
  static const char* kPhase[] = {"+", "+i", "-", "-i"};
  std::string out = kPhase[phase_];
  for (int k = 0; k < n_modes_; ++k) {
    bool x = (key_.x >> k) & 1;
    bool z = (key_.z >> k) & 1;
    out.push_back(x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I'));
  }
  return out;
}

OperatorSum::OperatorSum(int n_modes) : n_modes_(n_modes) { check_modes(n_modes); }

OperatorSum::OperatorSum(const PauliTerm& term, const Coeff& c) : n_modes_(term.n_modes()) {
  add_term(term.key(), c.times_i_pow(term.phase()));
}

OperatorSum OperatorSum::identity(int n_modes, const Coeff& c) {
  OperatorSum out(n_modes);
  out.add_term({}, c);
  return out;
}

OperatorSum OperatorSum::pauli(int n_modes, int mode, char which) {
  return OperatorSum(PauliTerm::single(n_modes, mode, which));
}

OperatorSum OperatorSum::pauli_string(std::string_view letters, const Coeff& c) {
  int n = static_cast<int>(letters.size());
  OperatorSum out = OperatorSum::identity(n, c);
  for (int k = 0; k < n; ++k) {
    if (letters[k] != 'I') out = out * pauli(n, k, letters[k]);
  }
  return out;
}

Coeff OperatorSum::coefficient(PauliKey key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Coeff() : it->second;
}

void OperatorSum::add_term(PauliKey key, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OperatorSum OperatorSum::adjoint() const {
  OperatorSum out(n_modes_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, c.conj());
  return out;
}

bool OperatorSum::is_hermitian() const {
  for (const auto& [k, c] : terms_) {
    if (!c.is_real()) return false;
  }
  return true;
}

Coeff OperatorSum::inner(const OperatorSum& other) const {
  check_same(n_modes_, other.n_modes_);
  Coeff acc;
  for (const auto& [k, c] : terms_) {
    auto it = other.terms_.find(k);
    if (it != other.terms_.end()) acc += c.conj() * it->second;
  }
  return acc;
}

OperatorSum OperatorSum::operator-() const {
  OperatorSum out(n_modes_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

OperatorSum& OperatorSum::operator+=(const OperatorSum& o) {
  check_same(n_modes_, o.n_modes_);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

OperatorSum& OperatorSum::operator-=(const OperatorSum& o) {
  check_same(n_modes_, o.n_modes_);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

OperatorSum& OperatorSum::operator*=(const Coeff& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

OperatorSum operator*(const OperatorSum& a, const OperatorSum& b) {
  check_same(a.n_modes_, b.n_modes_);
  OperatorSum out(a.n_modes_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      out.add_term({ka.x ^ kb.x, ka.z ^ kb.z}, (ca * cb).times_i_pow(product_phase(ka, kb)));
    }
  }
  return out;
}

std::string OperatorSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    if (k.is_identity()) continue;
    for (int m = 0; m < n_modes_; ++m) {
      bool x = (k.x >> m) & 1;
      bool z = (k.z >> m) & 1;
      if (!x && !z) continue;
      os << ' ' << (x ? (z ? 'Y' : 'X') : 'Z') << '(' << m << ')';
    }
  }
  return os.str();
}

OperatorSum commutator(const OperatorSum& lhs, const OperatorSum& rhs) {
  check_same(lhs.n_modes(), rhs.n_modes());
  // Commuting string pairs cancel; anticommuting ones contribute twice.
  OperatorSum out(lhs.n_modes());
  for (const auto& [ka, ca] : lhs.terms()) {
    for (const auto& [kb, cb] : rhs.terms()) {
      if (!anticommutes(ka, kb)) continue;
      out.add_term({ka.x ^ kb.x, ka.z ^ kb.z}, (ca * cb * Coeff(2)).times_i_pow(product_phase(ka, kb)));
    }
  }
  return out;
}

OperatorSum anticommutator(const OperatorSum& lhs, const OperatorSum& rhs) {
  check_same(lhs.n_modes(), rhs.n_modes());
  OperatorSum out(lhs.n_modes());
  for (const auto& [ka, ca] : lhs.terms()) {
    for (const auto& [kb, cb] : rhs.terms()) {
      if (anticommutes(ka, kb)) continue;
      out.add_term({ka.x ^ kb.x, ka.z ^ kb.z}, (ca * cb * Coeff(2)).times_i_pow(product_phase(ka, kb)));
    }
  }
  return out;
}

OperatorSum power(const OperatorSum& op, int p) {
  if (p < 0) throw std::invalid_argument("power: negative exponent");
  OperatorSum out = OperatorSum::identity(op.n_modes());
  for (int k = 0; k < p; ++k) out = out * op;
  return out;
}

OperatorSum sigma_plus(int n_modes, int mode) {
  return (OperatorSum::pauli(n_modes, mode, 'X') + OperatorSum::pauli(n_modes, mode, 'Y') * Coeff::i()) *
         Coeff(mpq_class(1, 2));
}

OperatorSum sigma_minus(int n_modes, int mode) {
  return (OperatorSum::pauli(n_modes, mode, 'X') - OperatorSum::pauli(n_modes, mode, 'Y') * Coeff::i()) *
         Coeff(mpq_class(1, 2));
}

OperatorSum number_op(int n_modes, int mode) {
  return (OperatorSum::identity(n_modes) + OperatorSum::pauli(n_modes, mode, 'Z')) * Coeff(mpq_class(1, 2));
}

OperatorSum total_number(int n_modes) {
  OperatorSum out(n_modes);
  for (int i = 0; i < n_modes; ++i) out += number_op(n_modes, i);
  return out;
}

OperatorSum parity_op(int n_modes) {
  check_modes(n_modes);
  uint64_t all = mode_mask(n_modes);
  OperatorSum out(n_modes);
  out.add_term({0, all}, Coeff(n_modes % 2 == 0 ? 1 : -1));
  return out;
}

}  // namespace qalg
