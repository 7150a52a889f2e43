#pragma once

#include <vector>

namespace qalg::thermal {

struct ThermalParams {
  std::vector<double> B;  // per-site fields, > 0
  double mu = 0.0;
  double kT = 1.0;        // > 0 unless zero_limit
  bool zero_limit = false;

  /// Throws std::invalid_argument when an invariant fails.
  void validate() const;
};

/// <n> = 1 / (exp(x) + 1), evaluated without overflow for large |x|.
double fermi_dirac(double x);

/// <n_i> = 1 / (exp((2 B_i - mu)/kT) + 1); at T -> 0 a step with 1/2 at 2B = mu.
std::vector<double> occupation(const ThermalParams& params);

/// Sites with mu/2 < B < mu, where the step of the formula (at 2B = mu) and a
/// step placed at B = mu give different zero-temperature occupations.
std::vector<int> ambiguous_sites(const ThermalParams& params);

}  // namespace qalg::thermal
