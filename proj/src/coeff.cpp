#include "qalg/coeff.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qalg {

Coeff::Coeff(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Coeff Coeff::i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return Coeff(1);
    case 1: return Coeff(0, 1);
    case 2: return Coeff(-1);
    default: return Coeff(0, -1);
  }
}

Coeff Coeff::from_double(double re, double im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw std::domain_error("Coeff::from_double: non-finite value");
  }
  return Coeff(mpq_class(re), mpq_class(im));
}

Coeff Coeff::parse_real(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty numeric literal");
  if (auto slash = s.find('/'); slash != std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0 || sgn(q.get_den()) == 0) {
      throw std::invalid_argument("bad rational literal '" + s + "'");
    }
    q.canonicalize();
    return Coeff(q);
  }
  // Decimal with optional exponent, converted digit by digit so 0.1 is 1/10.
  size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
      any_digit = true;
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw std::invalid_argument("bad numeric literal '" + s + "'");
  long exponent = 0;
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    size_t used = 0;
    try {
      exponent = std::stol(s.substr(pos), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad exponent in '" + s + "'");
    }
    pos += used;
  }
  if (pos != s.size()) throw std::invalid_argument("bad numeric literal '" + s + "'");
  long scale = exponent - frac_digits;
  if (scale > 4000 || scale < -4000) throw std::invalid_argument("exponent out of range in '" + s + "'");
  mpz_class mant(digits, 10);
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  mpq_class q = scale < 0 ? mpq_class(mant, ten_pow) : mpq_class(mant * ten_pow);
  q.canonicalize();
  return Coeff(negative ? mpq_class(-q) : q);
}

Coeff Coeff::times_i_pow(int k) const {
  switch (((k % 4) + 4) % 4) {
    case 0: return *this;
    case 1: return Coeff(-im_, re_);
    case 2: return Coeff(-re_, -im_);
    default: return Coeff(im_, -re_);
  }
}

Coeff& Coeff::operator+=(const Coeff& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Coeff& Coeff::operator*=(const Coeff& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Coeff& Coeff::operator/=(const Coeff& o) {
  if (o.is_zero()) throw std::domain_error("Coeff: division by zero");
  mpq_class den = o.re_ * o.re_ + o.im_ * o.im_;
  mpq_class r = (re_ * o.re_ + im_ * o.im_) / den;
  mpq_class i = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

std::string rational_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Coeff::str() const {
  if (is_real()) return rational_str(re_);
  return "(" + rational_str(re_) + "," + rational_str(im_) + ")";
}

}  // namespace qalg
