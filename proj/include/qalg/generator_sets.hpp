#pragma once

#include <string>
#include <vector>

#include "qalg/lie_engine.hpp"
#include "qalg/second_quantized.hpp"

namespace qalg::lie::sets {

/// Q + Q^dag and i(Q - Q^dag), dropping zeros; a Hermitian Q yields itself once.
std::vector<OperatorSum> hermitian_forms(const OperatorSum& q);

/// Rows of the nearest-neighbour Hamiltonian-generator table.
enum class StandardGroup { su_N, so_2N, so_2N1, u_2N };

std::string group_name(StandardGroup g);

/// Parafermion column, e.g. su(N): a_i^dag a_{i+1} + h.c. forms.
GeneratorSet standard_parafermion(StandardGroup group, int n_modes);
/// Fermion column, mapped to qubits by Jordan-Wigner.
GeneratorSet standard_fermion(StandardGroup group, int n_modes);
/// The fermion-column expressions before mapping (one entry per non-Hermitian monomial).
std::vector<SecondQuantizedExpr> standard_fermion_monomials(StandardGroup group, int n_modes);

/// {n_i} and {a_i^dag a_{i+1} + h.c.}: each controllable XY term on its own.
GeneratorSet xy_nearest_neighbor(int n_modes);
/// {n_i}, {a_i a_{i+1} + h.c.}, {a_i^dag a_{i+1} + h.c.}, {n_i n_{i+1}}: the XYZ model without single-qubit fields.
GeneratorSet xyz_without_fields(int n_modes);
/// Hermitian forms of a_i^dag a_j for all i < j.
GeneratorSet parafermion_hopping_all(int n_modes);
/// Hermitian forms of f_i^dag f_j for all i, j (i = j gives n_i), via Jordan-Wigner.
GeneratorSet fermion_hopping_all(int n_modes);
/// Hermitian forms of a_i^dag a_j for all i, j including i = j.
GeneratorSet parafermion_bilinear_all(int n_modes);

/// Names accepted by preset(): "su", "so2n", "so2n1", "u2n" (parafermion),
/// the same with "-fermion", and "xy-nn", "xyz", "hop-all", "hop-all-fermion", "bilinear-all".
std::vector<std::string> preset_names();
GeneratorSet preset(const std::string& name, int n_modes);

}  // namespace qalg::lie::sets
