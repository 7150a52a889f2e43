#include "qalg/second_quantized.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qalg/pauli.hpp"

namespace qalg {

std::string species_name(Species s) {
  switch (s) {
    case Species::parafermion: return "parafermion";
    case Species::fermion: return "fermion";
    case Species::boson: return "boson";
  }
  return "?";
}

Species parse_species(const std::string& name) {
  if (name == "parafermion" || name == "qubit") return Species::parafermion;
  if (name == "fermion") return Species::fermion;
  if (name == "boson") return Species::boson;
  throw std::invalid_argument("unknown species '" + name + "'");
}

std::string factor_token(Species s, FactorKind k) {
  if (k == FactorKind::number) return "n";
  std::string base = s == Species::parafermion ? "a" : s == Species::fermion ? "f" : "b";
  return k == FactorKind::create ? base + "d" : base;
}

SecondQuantizedExpr::SecondQuantizedExpr(int n_modes, Species species) : n_modes_(n_modes), species_(species) {
  check_modes(n_modes);
}

SecondQuantizedExpr SecondQuantizedExpr::identity(int n_modes, Species species, const Coeff& c) {
  SecondQuantizedExpr e(n_modes, species);
  e.add_term(c, {});
  return e;
}

SecondQuantizedExpr SecondQuantizedExpr::single(int n_modes, Species species, FactorKind kind, int mode) {
  SecondQuantizedExpr e(n_modes, species);
  e.add_term(1, {{kind, mode}});
  return e;
}

void SecondQuantizedExpr::add_term(const Coeff& c, std::vector<ModeFactor> factors) {
  for (const auto& f : factors) {
    if (f.mode < 0 || f.mode >= n_modes_) {
      throw std::out_of_range("mode index " + std::to_string(f.mode) + " out of range for " +
                              std::to_string(n_modes_) + " modes");
    }
  }
  if (c.is_zero()) return;
  terms_.push_back({c, std::move(factors)});
}

SecondQuantizedExpr SecondQuantizedExpr::adjoint() const {
  SecondQuantizedExpr out(n_modes_, species_);
  for (const auto& t : terms_) {
    std::vector<ModeFactor> f(t.factors.rbegin(), t.factors.rend());
    for (auto& x : f) {
      if (x.kind == FactorKind::create) {
        x.kind = FactorKind::annihilate;
      } else if (x.kind == FactorKind::annihilate) {
        x.kind = FactorKind::create;
      }
    }
    out.terms_.push_back({t.coeff.conj(), std::move(f)});
  }
  return out;
}

void SecondQuantizedExpr::check_compatible(const SecondQuantizedExpr& o) const {
  if (o.n_modes_ != n_modes_) throw ModeMismatch(n_modes_, o.n_modes_);
  if (o.species_ != species_) {
    throw std::invalid_argument("species mixing: " + species_name(species_) + " with " + species_name(o.species_));
  }
}

SecondQuantizedExpr& SecondQuantizedExpr::operator+=(const SecondQuantizedExpr& o) {
  check_compatible(o);
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

SecondQuantizedExpr& SecondQuantizedExpr::operator*=(const Coeff& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

SecondQuantizedExpr operator*(const SecondQuantizedExpr& a, const SecondQuantizedExpr& b) {
  a.check_compatible(b);
  SecondQuantizedExpr out(a.n_modes_, a.species_);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      std::vector<ModeFactor> f = ta.factors;
      f.insert(f.end(), tb.factors.begin(), tb.factors.end());
      out.add_term(ta.coeff * tb.coeff, std::move(f));
    }
  }
  return out;
}

std::string SecondQuantizedExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    const auto& t = terms_[i];
    os << t.coeff.str();
    for (const auto& f : t.factors) os << ' ' << factor_token(species_, f.kind) << '(' << f.mode << ')';
  }
  return os.str();
}

}  // namespace qalg
