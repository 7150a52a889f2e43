#include "qalg/dsl.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "qalg/generator_sets.hpp"
#include "qalg/jw_map.hpp"
#include "qalg/parafermion.hpp"

namespace qalg::dsl {

ParseError::ParseError(const std::string& what, size_t position)
    : std::runtime_error("position " + std::to_string(position) + ": " + what), position_(position) {}

namespace {

struct Factor {
  char pauli = 0;  // 'X', 'Y', 'Z' or 0 for a mode operator
  std::optional<Species> species;  // unset for `n`
  FactorKind kind = FactorKind::number;
  int mode = 0;
};

struct Term {
  Coeff coeff{1};
  std::vector<Factor> factors;
};

class Parser {
 public:
  Parser(std::string_view text, int n_modes) : s_(text), n_(n_modes) {}

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = get() == '-';
      skip();
    }
    while (true) {
      Term t = term();
      if (negate) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip();
      if (pos_ == s_.size()) break;
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("expected '+' or '-', got '") + c + "'", pos_);
      negate = get() == '-';
      skip();
      // The printer writes "a + -b".
      while (peek() == '-' || peek() == '+') {
        if (get() == '-') negate = !negate;
        skip();
      }
    }
    return terms;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_number() const {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  }
  bool at_imag_unit() const {
    // A bare `i` not followed by an identifier character.
    if (peek() != 'i') return false;
    size_t next = pos_ + 1;
    return next >= s_.size() || !std::isalnum(static_cast<unsigned char>(s_[next]));
  }

  std::string number_text() {
    size_t start = pos_;
    if (peek() == '+' || peek() == '-') ++pos_;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '/') {
        ++pos_;
      } else if ((c == 'e' || c == 'E') && pos_ + 1 < s_.size() &&
                 (std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])) || s_[pos_ + 1] == '-' ||
                  s_[pos_ + 1] == '+')) {
        pos_ += 2;
      } else {
        break;
      }
    }
    return std::string(s_.substr(start, pos_ - start));
  }

  Coeff real(size_t at) {
    std::string text = number_text();
    try {
      return Coeff::parse_real(text);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), at);
    }
  }

  std::optional<Coeff> coeff() {
    size_t at = pos_;
    if (peek() == '(') {
      ++pos_;
      skip();
      Coeff re = real(pos_);
      skip();
      if (peek() != ',') throw ParseError("expected ',' in complex coefficient", pos_);
      ++pos_;
      skip();
      Coeff im = real(pos_);
      skip();
      if (peek() != ')') throw ParseError("expected ')' closing complex coefficient", pos_);
      ++pos_;
      return Coeff(re.re(), im.re());
    }
    if (at_number()) {
      Coeff c = real(at);
      if (at_imag_unit()) {
        ++pos_;
        c = c * Coeff::i();
      }
      return c;
    }
    if (at_imag_unit()) {
      ++pos_;
      return Coeff::i();
    }
    return std::nullopt;
  }

  Term term() {
    Term t;
    size_t start = pos_;
    if (auto c = coeff()) t.coeff = *c;
    skip();
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(peek()))) {
      t.factors.push_back(factor());
      skip();
    }
    if (pos_ == start) throw ParseError("expected a coefficient or factor", pos_);
    return t;
  }

  Factor factor() {
    size_t at = pos_;
    std::string kind;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(peek()))) kind.push_back(get());
    Factor f;
    if (kind == "X" || kind == "Y" || kind == "Z") {
      f.pauli = kind[0];
    } else if (kind == "a" || kind == "ad") {
      f.species = Species::parafermion;
      f.kind = kind == "a" ? FactorKind::annihilate : FactorKind::create;
    } else if (kind == "f" || kind == "fd") {
      f.species = Species::fermion;
      f.kind = kind == "f" ? FactorKind::annihilate : FactorKind::create;
    } else if (kind == "b" || kind == "bd") {
      f.species = Species::boson;
      f.kind = kind == "b" ? FactorKind::annihilate : FactorKind::create;
    } else if (kind == "n") {
      f.kind = FactorKind::number;
    } else {
      throw ParseError("unknown operator '" + kind + "'", at);
    }
    skip();
    if (peek() != '(') throw ParseError("expected '(' after '" + kind + "'", pos_);
    ++pos_;
    skip();
    size_t idx_at = pos_;
    std::string digits;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(get());
    if (digits.empty()) throw ParseError("expected a mode index", idx_at);
    if (digits.size() > 6 || std::stoi(digits) >= n_) {
      throw ParseError("mode index " + digits + " out of range for " + std::to_string(n_) + " modes", idx_at);
    }
    f.mode = std::stoi(digits);
    skip();
    if (peek() != ')') throw ParseError("expected ')'", pos_);
    ++pos_;
    return f;
  }

  std::string_view s_;
  int n_;
  size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text, int n_modes, Species default_species) {
  check_modes(n_modes);
  std::vector<Term> terms = Parser(text, n_modes).parse();
  bool any_pauli = false, any_mode = false;
  std::optional<Species> species;
  for (const auto& t : terms) {
    for (const auto& f : t.factors) {
      if (f.pauli) {
        any_pauli = true;
        continue;
      }
      any_mode = true;
      if (!f.species) continue;
      if (species && *species != *f.species) {
        throw ParseError("mixed species " + species_name(*species) + " and " + species_name(*f.species), 0);
      }
      species = f.species;
    }
  }
  if (any_pauli && any_mode) throw ParseError("Pauli and mode operators cannot be mixed", 0);
  if (!any_mode) {
    OperatorSum out(n_modes);
    for (const auto& t : terms) {
      OperatorSum prod = OperatorSum::identity(n_modes, t.coeff);
      for (const auto& f : t.factors) prod = prod * OperatorSum::pauli(n_modes, f.mode, f.pauli);
      out += prod;
    }
    return out;
  }
  SecondQuantizedExpr out(n_modes, species.value_or(default_species));
  for (const auto& t : terms) {
    std::vector<ModeFactor> fs;
    for (const auto& f : t.factors) fs.push_back({f.kind, f.mode});
    out.add_term(t.coeff, std::move(fs));
  }
  return out;
}

std::string print_expr(const Expr& e) {
  return std::visit([](const auto& x) { return x.str(); }, e);
}

namespace {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.' && c != '-') return false;
  }
  return true;
}

}  // namespace

OperatorScript parse_script(std::string_view text) {
  OperatorScript script;
  bool have_modes = false;
  size_t offset = 0;
  int line_no = 0;
  while (offset <= text.size()) {
    size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view raw = text.substr(offset, end - offset);
    const size_t line_start = offset;
    offset = end + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    auto where = [&](const std::string& msg) { return "line " + std::to_string(line_no) + ": " + msg; };

    auto eq = line.find('=');
    if (eq == std::string::npos) {
      std::istringstream is(line);
      std::string key, value, extra;
      is >> key >> value;
      if (value.empty() || (is >> extra)) throw ParseError(where("expected 'key value' or 'name = expr'"), line_start);
      if (key == "modes") {
        if (!script.entries.empty()) throw ParseError(where("'modes' must precede generators"), line_start);
        try {
          script.n_modes = std::stoi(value);
          check_modes(script.n_modes);
        } catch (const std::exception&) {
          throw ParseError(where("bad mode count '" + value + "'"), line_start);
        }
        have_modes = true;
      } else if (key == "species") {
        try {
          script.species = parse_species(value);
        } catch (const std::exception& e) {
          throw ParseError(where(e.what()), line_start);
        }
      } else if (key == "label") {
        script.label = value;
      } else {
        throw ParseError(where("unknown directive '" + key + "'"), line_start);
      }
      continue;
    }
    if (!have_modes) throw ParseError(where("'modes' must precede generators"), line_start);
    std::string lhs = trim(line.substr(0, eq));
    std::string rhs = trim(line.substr(eq + 1));
    ScriptEntry entry{"", rhs, false, OperatorSum(script.n_modes)};
    if (lhs.rfind("herm ", 0) == 0) {
      entry.hermitize = true;
      lhs = trim(lhs.substr(5));
    }
    if (!valid_name(lhs)) throw ParseError(where("bad generator name '" + lhs + "'"), line_start);
    entry.name = lhs;
    try {
      entry.expr = parse_expr(rhs, script.n_modes, script.species);
    } catch (const ParseError& e) {
      size_t rhs_off = line_start + std::string_view(raw).find(rhs);
      throw ParseError(where(e.what()), rhs_off + e.position());
    }
    if (const auto* sq = std::get_if<SecondQuantizedExpr>(&entry.expr); sq && sq->species() != script.species) {
      throw ParseError(where("expression species " + species_name(sq->species()) + " differs from script species " +
                             species_name(script.species)),
                       line_start);
    }
    script.entries.push_back(std::move(entry));
  }
  if (!have_modes) throw ParseError("script declares no 'modes'", 0);
  return script;
}

std::string print_script(const OperatorScript& script) {
  std::ostringstream os;
  os << "modes " << script.n_modes << '\n';
  os << "species " << species_name(script.species) << '\n';
  if (!script.label.empty()) os << "label " << script.label << '\n';
  for (const auto& e : script.entries) {
    os << (e.hermitize ? "herm " : "") << e.name << " = " << print_expr(e.expr) << '\n';
  }
  return os.str();
}

OperatorSum to_operator(const Expr& e) {
  if (const auto* op = std::get_if<OperatorSum>(&e)) return *op;
  const auto& sq = std::get<SecondQuantizedExpr>(e);
  switch (sq.species()) {
    case Species::parafermion: return parafermion::to_pauli(sq);
    case Species::fermion: return jw::jw_fermion_to_pauli(sq);
    case Species::boson: break;
  }
  throw std::invalid_argument("bosonic expressions have no finite Pauli form");
}

lie::GeneratorSet script_to_generators(const OperatorScript& script) {
  lie::GeneratorSet set;
  set.n_modes = script.n_modes;
  set.label = script.label.empty() ? "script" : script.label;
  for (const auto& e : script.entries) {
    OperatorSum op = to_operator(e.expr);
    if (!e.hermitize) {
      if (!op.is_hermitian()) throw std::invalid_argument("generator '" + e.name + "' is not Hermitian; prefix with 'herm'");
      set.generators.push_back(op);
      set.names.push_back(e.name);
      continue;
    }
    auto forms = lie::sets::hermitian_forms(op);
    for (size_t k = 0; k < forms.size(); ++k) {
      set.generators.push_back(forms[k]);
      set.names.push_back(forms.size() == 1 ? e.name : e.name + (k == 0 ? ".re" : ".im"));
    }
  }
  set.validate();
  return set;
}

}  // namespace qalg::dsl
