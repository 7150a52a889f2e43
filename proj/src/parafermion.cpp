#include "qalg/parafermion.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qalg::parafermion {

namespace {

OperatorSum factor_image(int n_modes, const ModeFactor& f) {
  switch (f.kind) {
    case FactorKind::create: return sigma_plus(n_modes, f.mode);
    case FactorKind::annihilate: return sigma_minus(n_modes, f.mode);
    case FactorKind::number: return number_op(n_modes, f.mode);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

OperatorSum to_pauli(const SecondQuantizedExpr& expr) {
  if (expr.species() != Species::parafermion) {
    throw std::invalid_argument("to_pauli expects a parafermion expression, got " + species_name(expr.species()));
  }
  const int n = expr.n_modes();
  OperatorSum out(n);
  for (const auto& t : expr.terms()) {
    OperatorSum prod = OperatorSum::identity(n, t.coeff);
    for (const auto& f : t.factors) {
      prod = prod * factor_image(n, f);
      if (prod.is_zero()) break;
    }
    out += prod;
  }
  return out;
}

std::vector<GeneratorIndex> enumerate_generators(int n_modes, SubalgebraFilter filter, int limit) {
  if (n_modes < 1) throw std::invalid_argument("enumerate_generators: n_modes must be >= 1");
  if (n_modes > limit) {
    throw std::invalid_argument("enumerate_generators: n_modes " + std::to_string(n_modes) +
                                " exceeds enumeration limit " + std::to_string(limit));
  }
  const uint64_t count = uint64_t{1} << n_modes;
  std::vector<GeneratorIndex> out;
  for (uint64_t a = 0; a < count; ++a) {
    for (uint64_t b = 0; b < count; ++b) {
      GeneratorIndex g{a, b};
      if (filter == SubalgebraFilter::SAp && !g.parity_preserving()) continue;
      if (filter == SubalgebraFilter::SAn && !g.number_preserving()) continue;
      out.push_back(g);
    }
  }
  return out;
}

SecondQuantizedExpr generator_expr(int n_modes, GeneratorIndex g) {
  std::vector<ModeFactor> f;
  for (int m = n_modes - 1; m >= 0; --m) {
    if ((g.alpha >> m) & 1) f.push_back({FactorKind::create, m});
  }
  for (int m = n_modes - 1; m >= 0; --m) {
    if ((g.beta >> m) & 1) f.push_back({FactorKind::annihilate, m});
  }
  SecondQuantizedExpr e(n_modes, Species::parafermion);
  e.add_term(1, std::move(f));
  return e;
}

OperatorSum generator_operator(int n_modes, GeneratorIndex g) { return to_pauli(generator_expr(n_modes, g)); }

bool commutes_with_number(const OperatorSum& op) { return commutator(op, total_number(op.n_modes())).is_zero(); }

bool commutes_with_parity(const OperatorSum& op) { return commutator(op, parity_op(op.n_modes())).is_zero(); }

std::set<int> support(const OperatorSum& op) {
  uint64_t m = 0;
  for (const auto& [k, c] : op.terms()) m |= k.x | k.z;
  std::set<int> out;
  for (int i = 0; i < op.n_modes(); ++i) {
    if ((m >> i) & 1) out.insert(i);
  }
  return out;
}

SubalgebraVerdict classify(const OperatorSum& op) {
  if (!op.is_hermitian()) throw std::invalid_argument("classify: operator is not Hermitian");
  SubalgebraVerdict v;
  v.in_SAn = commutes_with_number(op);
  v.in_SAp = commutes_with_parity(op);
  v.local_support = support(op);
  return v;
}

Su2Triple bilinear_su2(int n_modes, int i, int j, Bilinear family) {
  if (i == j) throw std::invalid_argument("bilinear_su2: modes must differ");
  OperatorSum x(n_modes);
  OperatorSum z(n_modes);
  if (family == Bilinear::T) {
    x = sigma_plus(n_modes, j) * sigma_minus(n_modes, i) + sigma_plus(n_modes, i) * sigma_minus(n_modes, j);
    z = number_op(n_modes, i) - number_op(n_modes, j);
  } else {
    x = sigma_minus(n_modes, i) * sigma_minus(n_modes, j) + sigma_plus(n_modes, i) * sigma_plus(n_modes, j);
    z = number_op(n_modes, i) + number_op(n_modes, j) - OperatorSum::identity(n_modes);
  }
  OperatorSum y = commutator(x, z) * Coeff::i();
  return {x, y, z};
}

Su2Triple normalized_su2(const Su2Triple& t) {
  return {t.x * Coeff(mpq_class(1, 2)), t.y * Coeff(mpq_class(1, 4)), t.z * Coeff(mpq_class(1, 2))};
}

bool satisfies_su2(const Su2Triple& t) {
  const Coeff i = Coeff::i();
  return commutator(t.x, t.y) == t.z * i && commutator(t.y, t.z) == t.x * i && commutator(t.z, t.x) == t.y * i;
}

}  // namespace qalg::parafermion
