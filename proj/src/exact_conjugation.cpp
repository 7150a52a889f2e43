#include "qalg/exact_conjugation.hpp"

#include <stdexcept>

namespace qalg {

bool is_tripotent(const OperatorSum& a) { return a * a * a == a; }

SurdOperator conjugate_exact(const OperatorSum& a, QuarterAngle phi, const OperatorSum& b) {
  if (a.n_modes() != b.n_modes()) throw ModeMismatch(a.n_modes(), b.n_modes());
  if (!is_tripotent(a)) throw std::invalid_argument("conjugate_exact: generator does not satisfy A^3 = A");
  const int n = a.n_modes();
  const OperatorSum I = OperatorSum::identity(n);
  const OperatorSum a2 = a * a;
  const Coeff half(mpq_class(1, 2));
  if (phi == QuarterAngle::pi_over_2) {
    // cos = 0, sin = 1.
    OperatorSum u = I - a2 - a * Coeff::i();
    return {u * b * u.adjoint(), OperatorSum(n)};
  }
  // cos = sin = 1/sqrt2: U = (1 - A^2) + sqrt2 (A^2/2 - i A/2) = U0 + sqrt2 U1.
  OperatorSum u0 = I - a2;
  OperatorSum u1 = (a2 - a * Coeff::i()) * half;
  OperatorSum rational = u0 * b * u0.adjoint() + u1 * b * u1.adjoint() * Coeff(2);
  OperatorSum surd = u0 * b * u1.adjoint() + u1 * b * u0.adjoint();
  return {rational, surd};
}

}  // namespace qalg
