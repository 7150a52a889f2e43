#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qalg {

/// Exact complex number with rational real and imaginary parts.
///
/// All Pauli-side arithmetic runs on this type so that products, commutators
/// and rank decisions never involve a tolerance.
class Coeff {
 public:
  Coeff() = default;
  Coeff(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Coeff(mpq_class re, mpq_class im = 0);

  static Coeff i() { return Coeff(0, 1); }
  /// Power of i, k taken mod 4.
  static Coeff i_pow(int k);
  /// Exact conversion of a double (every finite double is a dyadic rational).
  static Coeff from_double(double re, double im = 0.0);
  /// Parses a decimal ("-0.25", "3", "1e-3") or rational ("p/q") literal.
  static Coeff parse_real(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  Coeff conj() const { return Coeff(re_, -im_); }
  /// Multiply by i^k without a general complex product.
  Coeff times_i_pow(int k) const;

  Coeff operator-() const { return Coeff(-re_, -im_); }
  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  Coeff& operator*=(const Coeff& o);
  Coeff& operator/=(const Coeff& o);

  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
  friend Coeff operator/(Coeff a, const Coeff& b) { return a /= b; }
  friend bool operator==(const Coeff& a, const Coeff& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// Canonical text form: "3/2", "-1", "(1/2,-1)". Parses back via the DSL.
  std::string str() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Canonical string of a rational, "p" or "p/q".
std::string rational_str(const mpq_class& q);

}  // namespace qalg
