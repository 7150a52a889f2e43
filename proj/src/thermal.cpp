#include "qalg/thermal.hpp"

#include <cmath>
#include <stdexcept>

namespace qalg::thermal {

void ThermalParams::validate() const {
  if (B.empty()) throw std::invalid_argument("thermal: no field values");
  for (double b : B) {
    if (!(b > 0.0) || !std::isfinite(b)) throw std::invalid_argument("thermal: fields must be positive and finite");
  }
  if (!std::isfinite(mu)) throw std::invalid_argument("thermal: mu must be finite");
  if (!zero_limit && !(kT > 0.0 && std::isfinite(kT))) {
    throw std::invalid_argument("thermal: kT must be positive (or request the zero-temperature limit)");
  }
}

double fermi_dirac(double x) {
  if (std::isnan(x)) throw std::invalid_argument("fermi_dirac: NaN argument");
  if (x >= 0.0) {
    double e = std::exp(-x);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(x));
}

std::vector<double> occupation(const ThermalParams& params) {
  params.validate();
  std::vector<double> out;
  out.reserve(params.B.size());
  for (double b : params.B) {
    double gap = 2.0 * b - params.mu;
    if (params.zero_limit) {
      out.push_back(gap < 0.0 ? 1.0 : gap > 0.0 ? 0.0 : 0.5);
    } else {
      out.push_back(fermi_dirac(gap / params.kT));
    }
  }
  return out;
}

std::vector<int> ambiguous_sites(const ThermalParams& params) {
  std::vector<int> out;
  for (size_t i = 0; i < params.B.size(); ++i) {
    double b = params.B[i];
    if (b > params.mu / 2.0 && b < params.mu) out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace qalg::thermal
