#include "qalg/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qalg/codes.hpp"
#include "qalg/dsl.hpp"
#include "qalg/generator_sets.hpp"
#include "qalg/jw_map.hpp"
#include "qalg/lie_engine.hpp"
#include "qalg/parafermion.hpp"
#include "qalg/report.hpp"
#include "qalg/thermal.hpp"
#include "qalg/verifier.hpp"

namespace qalg::cli {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  json body;
  bool ok = true;
  std::string csv;  // only verbs that support CSV fill this
};

std::string read_file(const std::string& path) {
  namespace fs = std::filesystem;
  fs::path p(path);
  if (!fs::exists(p) && p.is_relative() && fs::exists(fs::path(QALG_DATA_DIR) / p)) p = fs::path(QALG_DATA_DIR) / p;
  std::ifstream in(p);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json modes_list(uint64_t mask) {
  json out = json::array();
  for (int m = 0; mask >> m; ++m) {
    if ((mask >> m) & 1) out.push_back(m);
  }
  return out;
}

json exact_json(const codes::ExactMatrix& m) {
  json rows = json::array();
  for (size_t r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (size_t c = 0; c < m.cols; ++c) row.push_back(m.at(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

json dense_json(const DenseMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

json gate_json(const codes::EncodedGate& g) {
  json j{{"name", g.name}, {"support", g.support},
         {"kind", g.kind == codes::GateKind::generator ? "generator" : "unitary"}};
  if (g.exact) {
    j["action"] = exact_json(*g.exact);
  } else {
    j["action"] = dense_json(g.action);
  }
  return j;
}

json verdict_json(const lie::LieBasis& basis, const lie::AlgebraVerdict& v) {
  json matches = json::array();
  for (const auto& c : v.matches) {
    matches.push_back({{"name", c.name}, {"expected_dim", c.expected_dim}, {"hit", c.hit}});
  }
  return {{"label", basis.label},
          {"n_modes", basis.n_modes},
          {"physical", basis.physical},
          {"dimension", basis.dimension},
          {"dimension_traceless", basis.dimension_traceless},
          {"identity_in_span", basis.identity_in_span},
          {"closed", basis.closed},
          {"rounds", basis.rounds},
          {"conserves_number", v.conserves_number},
          {"conserves_parity", v.conserves_parity},
          {"universal_full_space", v.universal_full_space},
          {"matches", matches},
          {"provenance_depth", basis.provenance_depth()}};
}

json check_json(const verify::IdentityCheck& c) {
  json parts = json::array();
  for (const auto& p : c.parts) {
    parts.push_back({{"label", p.label},
                     {"metric", p.metric == verify::Metric::exact ? "exact" : "max_abs_diff"},
                     {"residual", p.residual},
                     {"tolerance", p.tolerance},
                     {"passed", p.passed},
                     {"informational", p.informational}});
  }
  return {{"name", c.name}, {"passed", c.passed()}, {"max_residual", c.max_residual()}, {"parts", parts},
          {"notes", c.notes}};
}

struct GeneratorInput {
  int modes = 0;
  std::string set_path;
  std::string preset;
  int excitations = -1;
  size_t max_dim = 0;
  bool serial = false;
  bool basis = false;
};

void add_generator_options(CLI::App* sub, GeneratorInput& in) {
  sub->add_option("--modes", in.modes, "number of modes")->check(CLI::Range(1, kMaxModes));
  auto* set = sub->add_option("--set", in.set_path, ".ops generator script");
  auto* pre = sub->add_option("--preset", in.preset, "built-in set: " + [] {
    std::string s;
    for (const auto& n : lie::sets::preset_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }());
  set->excludes(pre);
  sub->add_option("--excitations", in.excitations, "close on the code C(modes, n) instead of the full space");
  sub->add_option("--max-dim", in.max_dim, "stop after this many basis elements");
  sub->add_flag("--serial", in.serial, "disable the parallel bracket kernel");
  sub->add_flag("--basis", in.basis, "list basis elements (full-space closures)");
}

struct Closed {
  lie::LieBasis basis;
  lie::AlgebraVerdict verdict;
  lie::GeneratorSet set;
};

Closed close_input(const GeneratorInput& in, std::string& canonical) {
  lie::GeneratorSet set;
  if (!in.set_path.empty()) {
    std::string text = read_file(in.set_path);
    canonical += "script\n" + text;
    dsl::OperatorScript script;
    try {
      script = dsl::parse_script(text);
    } catch (const dsl::ParseError& e) {
      throw UsageError(in.set_path + ": " + e.what());
    }
    if (in.modes && in.modes != script.n_modes) {
      throw UsageError("--modes " + std::to_string(in.modes) + " differs from the script's modes " +
                       std::to_string(script.n_modes));
    }
    set = dsl::script_to_generators(script);
  } else if (!in.preset.empty()) {
    if (!in.modes) throw UsageError("--preset needs --modes");
    set = lie::sets::preset(in.preset, in.modes);
  } else {
    throw UsageError("one of --set or --preset is required");
  }
  lie::CloseOptions opt;
  opt.parallel = !in.serial;
  if (in.max_dim) opt.max_dim = in.max_dim;
  Closed out{{}, {}, set};
  if (in.excitations >= 0) {
    if (in.excitations > set.n_modes) throw UsageError("--excitations exceeds the mode count");
    out.basis = lie::close_on_subspace(set, codes::build_code(set.n_modes, in.excitations), opt);
  } else {
    out.basis = lie::close(set, opt);
  }
  if (out.basis.closed) out.verdict = lie::classify_algebra(out.basis);
  return out;
}

json closure_body(const Closed& c, const GeneratorInput& in) {
  json body = verdict_json(c.basis, c.verdict);
  body["generators"] = c.set.generators.size();
  if (c.basis.on_subspace()) {
    body["code"] = {{"n_modes", c.set.n_modes}, {"excitations", in.excitations}, {"dim", c.basis.code_dim}};
  }
  if (!c.basis.closed) body["matches"] = json::array();
  if (in.basis && !c.basis.on_subspace()) {
    json elems = json::array();
    for (const auto& b : c.basis.basis) elems.push_back(b.str());
    body["basis"] = elems;
  }
  return body;
}

Outcome run_verify(const std::string& name, bool all) {
  std::vector<verify::IdentityCheck> checks;
  if (all) {
    checks = verify::run_all();
  } else {
    if (name.empty()) throw UsageError("verify needs a check name or --all");
    auto names = verify::check_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) throw UsageError("unknown check '" + name + "'");
    checks.push_back(verify::run_check(name));
  }
  Outcome o;
  json arr = json::array();
  for (const auto& c : checks) {
    arr.push_back(check_json(c));
    o.ok = o.ok && c.passed();
  }
  o.body = {{"passed", o.ok}, {"checks", arr}};
  return o;
}

std::vector<double> parse_sweep(const std::string& spec, std::string& variable) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() != 4) throw UsageError("--sweep expects var:min:max:steps");
  variable = parts[0];
  if (variable != "kT" && variable != "mu") throw UsageError("--sweep variable must be kT or mu");
  double lo = 0, hi = 0;
  int steps = 0;
  try {
    lo = std::stod(parts[1]);
    hi = std::stod(parts[2]);
    steps = std::stoi(parts[3]);
  } catch (const std::exception&) {
    throw UsageError("bad --sweep '" + spec + "'");
  }
  if (steps < 1) throw UsageError("--sweep needs at least one step");
  std::vector<double> out;
  for (int k = 0; k < steps; ++k) out.push_back(steps == 1 ? lo : lo + (hi - lo) * k / (steps - 1));
  return out;
}

std::string csv_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Operator-algebra toolkit for qubit, fermion and boson models", "qalg"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  std::string out_path;
  bool no_timestamp = false;
  app.add_option("--format", format, "json | text | csv")->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_option("--out", out_path, "write the report to a file");
  app.add_flag("--no-timestamp", no_timestamp, "omit the envelope timestamp");

  // enumerate
  auto* en = app.add_subcommand("enumerate", "list the 4^N generators a^alpha+ a^beta, optionally filtered");
  int en_modes = 0;
  std::string en_filter = "none";
  int en_limit = 8;
  en->add_option("--modes", en_modes, "number of modes")->required()->check(CLI::Range(1, 16));
  en->add_option("--filter", en_filter, "none | sap | san")->check(CLI::IsMember({"none", "sap", "san"}));
  en->add_option("--limit", en_limit, "maximum modes accepted")->check(CLI::Range(1, 16));

  GeneratorInput cl_in, cf_in;
  auto* cl = app.add_subcommand("closure", "Lie closure of a generator set");
  add_generator_options(cl, cl_in);
  auto* cf = app.add_subcommand("classify", "closure plus per-generator subalgebra membership");
  add_generator_options(cf, cf_in);

  // jw
  auto* jwc = app.add_subcommand("jw", "Jordan-Wigner images and relation checks");
  int jw_modes = 0, jw_car = 0, jw_boson = 0, jw_case = 0, jw_pairs = 1, jw_cutoff = 1;
  std::string jw_expr;
  jwc->add_option("--modes", jw_modes, "number of modes")->check(CLI::Range(1, kMaxModes));
  jwc->add_option("--expr", jw_expr, "operator expression to map to Pauli form");
  jwc->add_option("--car", jw_car, "check the anticommutation relations up to N modes")->check(CLI::Range(1, 10));
  jwc->add_option("--boson-approx", jw_boson, "[B,B^dag] for N modes")->check(CLI::Range(1, 16));
  jwc->add_option("--compound", jw_case, "compound mapping case")->check(CLI::Range(1, 3));
  jwc->add_option("--pairs", jw_pairs, "pairs for --compound")->check(CLI::Range(1, 3));
  jwc->add_option("--cutoff", jw_cutoff, "boson cutoff for --compound 3")->check(CLI::Range(1, 2));

  // code
  auto* co = app.add_subcommand("code", "constant-excitation codes C(N,n)");
  int co_modes = 0, co_exc = 0, co_rmodes = 0, co_rexc = -1;
  size_t co_dlimit = codes::kDefaultSynthesisLimit;
  bool co_list = false, co_rate = false, co_gen = false, co_cphase = false, co_synth = false;
  co->add_option("--modes", co_modes, "physical qubits N")->required()->check(CLI::Range(1, 24));
  co->add_option("--excitations", co_exc, "excitation number n")->required()->check(CLI::NonNegativeNumber);
  co->add_flag("--list", co_list, "ordered codewords");
  co->add_flag("--rate", co_rate, "log2 C(N,n) / N and the entropy S(n/N)");
  co->add_flag("--encoded-generators", co_gen, "Tx and Tz on every pair, restricted to the code");
  co->add_flag("--cphase-check", co_cphase, "ZZ across the boundary of two blocks");
  co->add_flag("--synthesize", co_synth, "close the nearest-neighbor T's on the code");
  co->add_option("--right-modes", co_rmodes, "second block size for --cphase-check (default: same)");
  co->add_option("--right-excitations", co_rexc, "second block excitations (default: same)");
  co->add_option("--d-limit", co_dlimit, "largest code dimension for --synthesize");

  // verify
  auto* ve = app.add_subcommand("verify", "run named identity checks");
  std::string ve_name;
  bool ve_all = false;
  ve->add_option("name", ve_name, "check name");
  ve->add_flag("--all", ve_all, "run every check");

  // thermal
  auto* th = app.add_subcommand("thermal", "non-interacting occupation numbers");
  std::vector<double> th_B;
  double th_mu = 0.0, th_kT = 1.0;
  bool th_zero = false;
  std::string th_sweep;
  th->add_option("--B", th_B, "per-site fields")->required()->delimiter(',');
  th->add_option("--mu", th_mu, "chemical potential")->required();
  th->add_option("--kT", th_kT, "temperature in energy units");
  th->add_flag("--zero-limit", th_zero, "T -> 0 step function");
  th->add_option("--sweep", th_sweep, "var:min:max:steps with var kT or mu");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    if (code == 0) return kExitOk;
    err << app.help();
    return kExitUsage;
  }

  // Everything that shapes the body goes into the hash; output routing does not.
  std::string canonical;
  for (size_t k = 0; k < args.size(); ++k) {
    if ((args[k] == "--out" || args[k] == "--format") && k + 1 < args.size()) {
      ++k;
      continue;
    }
    if (args[k].rfind("--out=", 0) == 0 || args[k].rfind("--format=", 0) == 0 || args[k] == "--no-timestamp") continue;
    canonical += args[k];
    canonical.push_back('\0');
  }

  Outcome o;
  std::string verb;
  try {
    if (*en) {
      verb = "enumerate";
      auto filter = en_filter == "sap"   ? parafermion::SubalgebraFilter::SAp
                    : en_filter == "san" ? parafermion::SubalgebraFilter::SAn
                                         : parafermion::SubalgebraFilter::none;
      auto gens = parafermion::enumerate_generators(en_modes, filter, en_limit);
      json arr = json::array();
      for (const auto& g : gens) {
        arr.push_back({{"alpha", modes_list(g.alpha)},
                       {"beta", modes_list(g.beta)},
                       {"expr", parafermion::generator_expr(en_modes, g).str()},
                       {"pauli", parafermion::generator_operator(en_modes, g).str()},
                       {"parity_preserving", g.parity_preserving()},
                       {"number_preserving", g.number_preserving()}});
      }
      o.body = {{"n_modes", en_modes}, {"filter", en_filter}, {"count", gens.size()}, {"generators", arr}};
    } else if (*cl) {
      verb = "closure";
      Closed c = close_input(cl_in, canonical);
      o.body = closure_body(c, cl_in);
    } else if (*cf) {
      verb = "classify";
      Closed c = close_input(cf_in, canonical);
      o.body = closure_body(c, cf_in);
      json gens = json::array();
      for (size_t k = 0; k < c.set.generators.size(); ++k) {
        auto v = parafermion::classify(c.set.generators[k]);
        gens.push_back({{"name", k < c.set.names.size() ? c.set.names[k] : std::to_string(k)},
                        {"pauli", c.set.generators[k].str()},
                        {"in_SAn", v.in_SAn},
                        {"in_SAp", v.in_SAp},
                        {"support", std::vector<int>(v.local_support.begin(), v.local_support.end())}});
      }
      o.body["generator_verdicts"] = gens;
      std::string algebra = "unidentified";
      for (const auto& m : c.verdict.matches) {
        if (m.hit) {
          algebra = m.name;
          break;
        }
      }
      o.body["algebra"] = algebra;
    } else if (*jwc) {
      verb = "jw";
      o.body = json::object();
      bool any = false;
      if (!jw_expr.empty()) {
        if (!jw_modes) throw UsageError("--expr needs --modes");
        dsl::Expr e = OperatorSum(jw_modes);
        try {
          e = dsl::parse_expr(jw_expr, jw_modes, Species::fermion);
        } catch (const dsl::ParseError& pe) {
          throw UsageError(std::string("--expr: ") + pe.what());
        }
        OperatorSum op = dsl::to_operator(e);
        std::string species = std::holds_alternative<OperatorSum>(e)
                                  ? "pauli"
                                  : species_name(std::get<SecondQuantizedExpr>(e).species());
        o.body["map"] = {{"input", dsl::print_expr(e)}, {"species", species}, {"pauli", op.str()},
                         {"hermitian", op.is_hermitian()}, {"terms", op.size()}};
        any = true;
      }
      if (jw_car) {
        json arr = json::array();
        for (int n = 1; n <= jw_car; ++n) {
          auto rep = jw::verify_car(n);
          json rel = json::array();
          for (const auto& r : rep.relations) rel.push_back({{"relation", r.relation}, {"passed", r.passed}});
          arr.push_back({{"n_modes", n}, {"passed", rep.all_passed()}, {"relations", rel}});
          o.ok = o.ok && rep.all_passed();
        }
        o.body["car"] = arr;
        any = true;
      }
      if (jw_boson) {
        OperatorSum comm = jw::boson_approx_commutator(jw_boson);
        bool eq = comm == jw::boson_approx_expected(jw_boson);
        o.body["boson_approx"] = {{"n_modes", jw_boson}, {"commutator", comm.str()}, {"matches_expected", eq}};
        o.ok = o.ok && eq;
        any = true;
      }
      if (jw_case) {
        auto rep = jw::compound_mapping_check(jw_case, jw_pairs, jw_cutoff);
        json rel = json::array();
        for (const auto& r : rep.relations) {
          rel.push_back({{"name", r.name}, {"exact", r.exact}, {"residual", r.residual}, {"passed", r.passed}});
        }
        o.body["compound"] = {{"case", jw_case}, {"pairs", jw_pairs}, {"passed", rep.all_passed()}, {"relations", rel}};
        o.ok = o.ok && rep.all_passed();
        any = true;
      }
      if (!any) throw UsageError("jw needs --expr, --car, --boson-approx or --compound");
    } else if (*co) {
      verb = "code";
      if (co_exc > co_modes) throw UsageError("--excitations exceeds --modes");
      const auto code = codes::build_code(co_modes, co_exc);
      o.body = {{"n_modes", co_modes}, {"excitations", co_exc}, {"dim", code.dim()}, {"mode0", "leftmost"}};
      bool any = false;
      if (co_list) {
        json words = json::array();
        for (size_t k = 0; k < code.dim(); ++k) words.push_back(code.bitstring(k));
        o.body["codewords"] = words;
        any = true;
      }
      if (co_rate) {
        o.body["rate"] = codes::rate(co_modes, co_exc);
        o.body["entropy"] = codes::shannon_entropy(static_cast<double>(co_exc) / co_modes);
        any = true;
      }
      if (co_gen) {
        json gens = json::array();
        for (int i = 0; i < co_modes; ++i) {
          for (int j = i + 1; j < co_modes; ++j) {
            gens.push_back(gate_json(codes::encoded_generator(code, codes::TKind::Tx, i, j)));
            gens.push_back(gate_json(codes::encoded_generator(code, codes::TKind::Tz, i, j)));
          }
        }
        o.body["encoded_generators"] = gens;
        any = true;
      }
      if (co_cphase) {
        const int rm = co_rmodes ? co_rmodes : co_modes;
        const int re = co_rexc >= 0 ? co_rexc : co_exc;
        if (re > rm) throw UsageError("--right-excitations exceeds --right-modes");
        auto cp = codes::encoded_cphase(code, codes::build_code(rm, re));
        o.body["cphase"] = {{"diagonal", cp.diagonal},
                            {"left_factor", cp.left_factor},
                            {"right_factor", cp.right_factor},
                            {"factorizes", cp.factorizes},
                            {"gate", gate_json(cp.gate)}};
        o.ok = o.ok && cp.factorizes;
        any = true;
      }
      if (co_synth) {
        auto rep = codes::synthesize_su_d(code, co_dlimit);
        o.body["synthesis"] = {{"d", rep.d},
                               {"dimension", rep.basis.dimension},
                               {"dimension_traceless", rep.basis.dimension_traceless},
                               {"target", rep.d * rep.d - 1},
                               {"success", rep.success},
                               {"overlapping_su2", rep.overlapping_su2},
                               {"su2_ratio", rep.su2_ratio.get_str()},
                               {"counting_ok", rep.counting_ok}};
        o.ok = o.ok && rep.success;
        any = true;
      }
      if (!any) throw UsageError("code needs one of --list, --rate, --encoded-generators, --cphase-check, --synthesize");
    } else if (*ve) {
      verb = "verify";
      o = run_verify(ve_name, ve_all);
    } else if (*th) {
      verb = "thermal";
      std::string var;
      std::vector<double> values;
      if (!th_sweep.empty()) {
        values = parse_sweep(th_sweep, var);
        if (th_zero && var == "kT") throw UsageError("--zero-limit conflicts with a kT sweep");
      }
      if (values.empty()) values.push_back(var == "mu" ? th_mu : th_kT);
      json rows = json::array();
      std::ostringstream csv;
      csv << "site,B,mu,kT,n,ambiguous\n";
      for (double v : values) {
        thermal::ThermalParams p{th_B, th_mu, th_kT, th_zero};
        if (var == "kT") p.kT = v;
        if (var == "mu") p.mu = v;
        try {
          p.validate();
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        auto occ = thermal::occupation(p);
        auto amb = thermal::ambiguous_sites(p);
        for (size_t s = 0; s < occ.size(); ++s) {
          bool flagged = std::find(amb.begin(), amb.end(), static_cast<int>(s)) != amb.end();
          json kt = p.zero_limit ? json(0.0) : json(p.kT);
          rows.push_back({{"site", s}, {"B", p.B[s]}, {"mu", p.mu}, {"kT", kt}, {"n", occ[s]}, {"ambiguous", flagged}});
          csv << s << ',' << csv_number(p.B[s]) << ',' << csv_number(p.mu) << ','
              << csv_number(p.zero_limit ? 0.0 : p.kT) << ',' << csv_number(occ[s]) << ',' << (flagged ? 1 : 0) << '\n';
        }
      }
      o.body = {{"zero_limit", th_zero}, {"rows", rows}};
      if (!th_sweep.empty()) o.body["sweep"] = var;
      o.csv = csv.str();
    }
  } catch (const UsageError& e) {
    err << "qalg: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "qalg " << verb << ": " << e.what() << "\n";
    return kExitFailed;
  }

  std::string text;
  if (format == "csv") {
    if (o.csv.empty()) {
      err << "qalg: --format csv is only available for thermal\n";
      return kExitUsage;
    }
    text = o.csv;
  } else if (format == "text") {
    text = report::to_text(o.body);
  } else {
    text = report::wrap(verb, canonical, o.body, !no_timestamp).dump(2) + "\n";
  }
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) {
      err << "qalg: cannot write '" << out_path << "'\n";
      return kExitFailed;
    }
    f << text;
  } else {
    out << text;
  }
  return o.ok ? kExitOk : kExitFailed;
}

}  // namespace qalg::cli
