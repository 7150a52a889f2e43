#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "qalg/coeff.hpp"

namespace qalg {

/// Hard ceiling on mode counts for bit-mask storage.
inline constexpr int kMaxModes = 32;

/// (x_mask, z_mask) pair naming the Hermitian Pauli string
/// i^{|x&z|} X^x Z^z. Bit k refers to mode k.
struct PauliKey {
  uint64_t x = 0;
  uint64_t z = 0;
  auto operator<=>(const PauliKey&) const = default;
  bool is_identity() const { return x == 0 && z == 0; }
};

inline int popcount(uint64_t v) { return std::popcount(v); }

/// True when the two strings anticommute.
inline bool anticommutes(PauliKey a, PauliKey b) {
  return ((popcount(a.x & b.z) + popcount(a.z & b.x)) & 1) != 0;
}

/// Phase exponent s (power of i) in P_a P_b = i^s P_{a^b}, for Hermitian
/// base strings.
inline int product_phase(PauliKey a, PauliKey b) {
  uint64_t x3 = a.x ^ b.x;
  uint64_t z3 = a.z ^ b.z;
  int s = popcount(a.x & a.z) + popcount(b.x & b.z) + 2 * popcount(a.z & b.x) - popcount(x3 & z3);
  return ((s % 4) + 4) % 4;
}

class OperatorSum;

/// Single Pauli string with a phase in {+1, +i, -1, -i}.
class PauliTerm {
 public:
  PauliTerm(int n_modes, PauliKey key, int phase = 0);

  static PauliTerm identity(int n_modes) { return PauliTerm(n_modes, {}); }
  /// which is one of 'I', 'X', 'Y', 'Z'.
  static PauliTerm single(int n_modes, int mode, char which);

  int n_modes() const { return n_modes_; }
  PauliKey key() const { return key_; }
  uint64_t x_mask() const { return key_.x; }
  uint64_t z_mask() const { return key_.z; }
  /// Power of i, 0..3.
  int phase() const { return phase_; }

  bool is_hermitian() const { return (phase_ & 1) == 0; }
  PauliTerm adjoint() const { return PauliTerm(n_modes_, key_, (4 - phase_) % 4); }
  bool commutes_with(const PauliTerm& o) const { return !anticommutes(key_, o.key_); }

  /// Letters per mode, mode 0 first, e.g. "+XIZ" or "-iYY".
  std::string str() const;

  friend PauliTerm multiply(const PauliTerm& lhs, const PauliTerm& rhs);
  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;

 private:
  int n_modes_;
  PauliKey key_;
  int phase_;
};

PauliTerm multiply(const PauliTerm& lhs, const PauliTerm& rhs);

/// Mode-count mismatch between operands.
class ModeMismatch : public std::invalid_argument {
 public:
  ModeMismatch(int a, int b);
};

void check_modes(int n_modes);

/// Linear combination of Hermitian Pauli strings with exact coefficients.
/// Terms are kept in (x_mask, z_mask) order and zero coefficients are never stored.
class OperatorSum {
 public:
  using TermMap = std::map<PauliKey, Coeff>;

  explicit OperatorSum(int n_modes);
  OperatorSum(const PauliTerm& term, const Coeff& c = 1);

  static OperatorSum zero(int n_modes) { return OperatorSum(n_modes); }
  static OperatorSum identity(int n_modes, const Coeff& c = 1);
  static OperatorSum pauli(int n_modes, int mode, char which);
  /// Letters for modes 0..N-1, e.g. "XIZ".
  static OperatorSum pauli_string(std::string_view letters, const Coeff& c = 1);

  int n_modes() const { return n_modes_; }
  const TermMap& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Coeff coefficient(PauliKey key) const;
  Coeff identity_coefficient() const { return coefficient(PauliKey{}); }

  /// Adds c to the coefficient of key, erasing the entry if it cancels.
  void add_term(PauliKey key, const Coeff& c);

  OperatorSum adjoint() const;
  bool is_hermitian() const;
  /// Hilbert-Schmidt inner product divided by 2^N: sum conj(a_k) b_k.
  Coeff inner(const OperatorSum& other) const;

  OperatorSum operator-() const;
  OperatorSum& operator+=(const OperatorSum& o);
  OperatorSum& operator-=(const OperatorSum& o);
  OperatorSum& operator*=(const Coeff& c);

  friend OperatorSum operator+(OperatorSum a, const OperatorSum& b) { return a += b; }
  friend OperatorSum operator-(OperatorSum a, const OperatorSum& b) { return a -= b; }
  friend OperatorSum operator*(OperatorSum a, const Coeff& c) { return a *= c; }
  friend OperatorSum operator*(const Coeff& c, OperatorSum a) { return a *= c; }
  friend OperatorSum operator*(const OperatorSum& a, const OperatorSum& b);
  friend bool operator==(const OperatorSum& a, const OperatorSum& b) {
    return a.n_modes_ == b.n_modes_ && a.terms_ == b.terms_;
  }

  /// Canonical text: "1/2 X(0) X(1) + 1/2 Y(0) Y(1)"; parses back via the DSL.
  std::string str() const;

 private:
  int n_modes_;
  TermMap terms_;
};

OperatorSum commutator(const OperatorSum& lhs, const OperatorSum& rhs);
OperatorSum anticommutator(const OperatorSum& lhs, const OperatorSum& rhs);
/// Integer power, p >= 0.
OperatorSum power(const OperatorSum& op, int p);

/// sigma^+ = (X + iY)/2, the image of a creation operator.
OperatorSum sigma_plus(int n_modes, int mode);
/// sigma^- = (X - iY)/2.
OperatorSum sigma_minus(int n_modes, int mode);
/// Occupation n = (1 + Z)/2.
OperatorSum number_op(int n_modes, int mode);
/// Total occupation sum_i n_i.
OperatorSum total_number(int n_modes);
/// Parity (-1)^n = prod_i (1 - 2 n_i) = (-1)^N Z_0 ... Z_{N-1}; +1 on the vacuum.
OperatorSum parity_op(int n_modes);

}  // namespace qalg
