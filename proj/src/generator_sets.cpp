#include "qalg/generator_sets.hpp"

#include <stdexcept>

#include "qalg/jw_map.hpp"
#include "qalg/parafermion.hpp"

namespace qalg::lie::sets {

namespace {

using SQ = SecondQuantizedExpr;

SQ mono(int n, Species s, std::vector<ModeFactor> f) {
  SQ e(n, s);
  e.add_term(1, std::move(f));
  return e;
}

ModeFactor cr(int m) { return {FactorKind::create, m}; }
ModeFactor an(int m) { return {FactorKind::annihilate, m}; }

// prod_{k<i} (1 - 2 n_k) written in the given species.
SQ string_expr(int n, Species s, int i) {
  SQ out = SQ::identity(n, s);
  for (int k = 0; k < i; ++k) out = out * (SQ::identity(n, s) - SQ::number(n, s, k) * Coeff(2));
  return out;
}

OperatorSum to_qubits(const SQ& e) {
  return e.species() == Species::fermion ? jw::jw_fermion_to_pauli(e) : parafermion::to_pauli(e);
}

void add_forms(GeneratorSet& set, const OperatorSum& q, const std::string& name) {
  auto forms = hermitian_forms(q);
  for (size_t k = 0; k < forms.size(); ++k) {
    set.generators.push_back(forms[k]);
    set.names.push_back(forms.size() == 1 ? name : name + (k == 0 ? " +h.c." : " i(-h.c.)"));
  }
}

std::vector<SQ> standard_monomials(StandardGroup group, int n, Species s) {
  std::vector<SQ> out;
  if (group == StandardGroup::so_2N1) {
    for (int i = 0; i < n; ++i) {
      // Parafermions carry the explicit string; for fermions JW supplies it.
      out.push_back(s == Species::parafermion ? mono(n, s, {an(i)}) * string_expr(n, s, i) : mono(n, s, {an(i)}));
    }
    return out;
  }
  if (group == StandardGroup::u_2N) {
    for (int i = 0; i < n; ++i) {
      out.push_back(s == Species::fermion ? mono(n, s, {an(i)}) * string_expr(n, s, i) : mono(n, s, {an(i)}));
    }
  }
  for (int i = 0; i + 1 < n; ++i) out.push_back(mono(n, s, {cr(i), an(i + 1)}));
  if (group == StandardGroup::so_2N) {
    for (int i = 0; i + 1 < n; ++i) out.push_back(mono(n, s, {an(i), an(i + 1)}));
  }
  return out;
}

GeneratorSet standard_set(StandardGroup group, int n, Species s) {
  GeneratorSet set;
  set.n_modes = n;
  set.label = group_name(group) + " " + species_name(s);
  set.physical = group != StandardGroup::so_2N1 && !(group == StandardGroup::u_2N && s == Species::fermion);
  for (const auto& m : standard_monomials(group, n, s)) add_forms(set, to_qubits(m), m.str());
  return set;
}

}  // namespace

std::vector<OperatorSum> hermitian_forms(const OperatorSum& q) {
  std::vector<OperatorSum> out;
  const OperatorSum qd = q.adjoint();
  if (q == qd) {
    if (!q.is_zero()) out.push_back(q);
    return out;
  }
  OperatorSum re = q + qd;
  OperatorSum im = (q - qd) * Coeff::i();
  if (!re.is_zero()) out.push_back(re);
  if (!im.is_zero()) out.push_back(im);
  return out;
}

std::string group_name(StandardGroup g) {
  switch (g) {
    case StandardGroup::su_N: return "su(N)";
    case StandardGroup::so_2N: return "so(2N)";
    case StandardGroup::so_2N1: return "so(2N+1)";
    case StandardGroup::u_2N: return "u(2^N)";
  }
  return "?";
}

GeneratorSet standard_parafermion(StandardGroup group, int n_modes) { return standard_set(group, n_modes, Species::parafermion); }

GeneratorSet standard_fermion(StandardGroup group, int n_modes) { return standard_set(group, n_modes, Species::fermion); }

std::vector<SecondQuantizedExpr> standard_fermion_monomials(StandardGroup group, int n_modes) {
  return standard_monomials(group, n_modes, Species::fermion);
}

GeneratorSet xy_nearest_neighbor(int n) {
  GeneratorSet set;
  set.n_modes = n;
  set.label = "xy nearest-neighbour";
  for (int i = 0; i < n; ++i) add_forms(set, number_op(n, i), "n(" + std::to_string(i) + ")");
  for (int i = 0; i + 1 < n; ++i) {
    auto t = parafermion::bilinear_su2(n, i, i + 1, parafermion::Bilinear::T);
    add_forms(set, t.x, "Tx(" + std::to_string(i) + "," + std::to_string(i + 1) + ")");
  }
  return set;
}

GeneratorSet xyz_without_fields(int n) {
  GeneratorSet set;
  set.n_modes = n;
  set.label = "xyz without single-qubit fields";
  for (int i = 0; i < n; ++i) add_forms(set, number_op(n, i), "n(" + std::to_string(i) + ")");
  for (int i = 0; i + 1 < n; ++i) {
    std::string p = "(" + std::to_string(i) + "," + std::to_string(i + 1) + ")";
    add_forms(set, parafermion::bilinear_su2(n, i, i + 1, parafermion::Bilinear::R).x, "Rx" + p);
    add_forms(set, parafermion::bilinear_su2(n, i, i + 1, parafermion::Bilinear::T).x, "Tx" + p);
    add_forms(set, number_op(n, i) * number_op(n, i + 1), "nn" + p);
  }
  return set;
}

GeneratorSet parafermion_hopping_all(int n) {
  GeneratorSet set;
  set.n_modes = n;
  set.label = "parafermion hopping, all pairs";
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto m = mono(n, Species::parafermion, {cr(i), an(j)});
      add_forms(set, parafermion::to_pauli(m), m.str());
    }
  }
  return set;
}

GeneratorSet fermion_hopping_all(int n) {
  GeneratorSet set;
  set.n_modes = n;
  set.label = "fermion hopping, all pairs";
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      auto m = mono(n, Species::fermion, {cr(i), an(j)});
      add_forms(set, jw::jw_fermion_to_pauli(m), m.str());
    }
  }
  return set;
}

GeneratorSet parafermion_bilinear_all(int n) {
  GeneratorSet set;
  set.n_modes = n;
  set.label = "parafermion a^dag a, all i,j";
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      auto m = mono(n, Species::parafermion, {cr(i), an(j)});
      add_forms(set, parafermion::to_pauli(m), m.str());
    }
  }
  return set;
}

std::vector<std::string> preset_names() {
  return {"su",          "so2n",        "so2n1", "u2n",     "su-fermion",      "so2n-fermion",
          "so2n1-fermion", "u2n-fermion", "xy-nn", "xyz",     "hop-all",         "hop-all-fermion",
          "bilinear-all"};
}

GeneratorSet preset(const std::string& name, int n) {
  check_modes(n);
  static const std::pair<const char*, StandardGroup> kGroups[] = {
      {"su", StandardGroup::su_N}, {"so2n", StandardGroup::so_2N}, {"so2n1", StandardGroup::so_2N1}, {"u2n", StandardGroup::u_2N}};
  for (const auto& [key, g] : kGroups) {
    if (name == key) return standard_parafermion(g, n);
    if (name == std::string(key) + "-fermion") return standard_fermion(g, n);
  }
  if (name == "xy-nn") return xy_nearest_neighbor(n);
  if (name == "xyz") return xyz_without_fields(n);
  if (name == "hop-all") return parafermion_hopping_all(n);
  if (name == "hop-all-fermion") return fermion_hopping_all(n);
  if (name == "bilinear-all") return parafermion_bilinear_all(n);
  throw std::invalid_argument("unknown preset '" + name + "'");
}

}  // namespace qalg::lie::sets
