#pragma once

#include "qalg/pauli.hpp"

namespace qalg {

/// R + sqrt(2) S with exact rational-complex operator parts.
struct SurdOperator {
  OperatorSum rational;
  OperatorSum sqrt2;
  bool is_rational() const { return sqrt2.is_zero(); }
  friend bool operator==(const SurdOperator&, const SurdOperator&) = default;
};

enum class QuarterAngle { pi_over_4, pi_over_2 };

/// True when A^3 = A (spectrum in {-1, 0, 1}).
bool is_tripotent(const OperatorSum& a);

/// C^phi_A o B = exp(-i phi A) B exp(i phi A), exactly, for tripotent A and
/// phi in {pi/4, pi/2}. Uses exp(-i phi A) = 1 - (1 - cos phi) A^2 - i sin(phi) A.
SurdOperator conjugate_exact(const OperatorSum& a, QuarterAngle phi, const OperatorSum& b);

}  // namespace qalg
