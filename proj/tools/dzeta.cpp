// Command-line front end: evaluate double zeta values, verify identities
// exactly and numerically, dump relation spans, fit divergence asymptotics.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "dzeta/dzeta.hpp"

namespace {

struct Config {
  long prec = 50;
  std::string axioms_str = "extended";
  std::string t_samples_str = "0,1,2";
  std::string format = "text";
  int jobs = 1;
  std::string out_path;
  bool no_timings = false;

  dzeta::Axioms axioms() const {
    return axioms_str == "strict" ? dzeta::Axioms::strict
                                  : dzeta::Axioms::extended;
  }
  bool timings() const { return !no_timings; }
};

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

long to_long(const std::string& s) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty())
    throw dzeta::DomainError("not an integer: \"" + s + "\"");
  return v;
}

std::vector<long> parse_t_samples(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(to_long(item));
  }
  return out;
}

std::size_t count_distinct(const std::vector<long>& v) {
  return std::set<long>(v.begin(), v.end()).size();
}

dzeta::VerifyMode parse_mode(const std::string& s) {
  if (s == "symbolic") return dzeta::VerifyMode::symbolic;
  if (s == "numeric") return dzeta::VerifyMode::numeric;
  return dzeta::VerifyMode::both;
}

// kinds may be spelled with hyphens on the command line
std::string normalize_kind(std::string s) {
  std::replace(s.begin(), s.end(), '-', '_');
  return s;
}

void write_output(const Config& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) throw dzeta::Error("cannot open output file " + cfg.out_path);
  f << text;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += "\"\"";
    else q += c;
  }
  return q + "\"";
}

std::string cert_flat(const dzeta::Certificate& cert) {
  std::string s;
  for (std::size_t i = 0; i < cert.size(); ++i) {
    if (i) s += ";";
    s += cert[i].row.str() + "*" + cert[i].coef.to_string();
  }
  return s;
}

std::string fmt_ms(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << ms;
  return os.str();
}

std::string result_word(const dzeta::Report& rep) {
  switch (rep.exit_code()) {
    case 0: return "PASS";
    case 3: return "PRECISION";
    default: return "FAIL";
  }
}

// --- report rendering --------------------------------------------------------

std::string report_text(const dzeta::Report& rep, const Config& cfg) {
  std::ostringstream os;
  if (rep.n > 0)
    os << rep.identity << " (m=" << rep.m << ", n=" << rep.n << "), weight "
       << rep.weight << "\n";
  else
    os << rep.identity << " (weight " << rep.weight << ")\n";
  if (rep.symbolic) {
    os << "  symbolic: " << to_string(rep.symbolic->status) << "\n";
    if (rep.symbolic->status == dzeta::SymStatus::proven)
      os << "    certificate: " << to_string(rep.symbolic->certificate) << "\n";
    if (rep.symbolic->status == dzeta::SymStatus::not_in_span)
      os << "    residue: " << to_string(rep.symbolic->irreducible) << "\n";
  }
  if (rep.numeric) {
    const dzeta::NumericOutcome& n = *rep.numeric;
    os << "  numeric: max residual " << n.max_residual.to_sci(3)
       << ", tolerance " << n.tolerance.to_sci(3) << ", err estimate "
       << n.err_estimate.to_sci(3) << ", " << n.digits << " digits";
    if (!n.t_samples.empty()) {
      os << ", T in {";
      for (std::size_t i = 0; i < n.t_samples.size(); ++i)
        os << (i ? "," : "") << n.t_samples[i];
      os << "}";
    }
    os << "\n";
  }
  if (!rep.note.empty()) os << "  note: " << rep.note << "\n";
  if (!rep.error.empty()) os << "  error: " << rep.error << "\n";
  if (cfg.timings()) os << "  ms: " << fmt_ms(rep.ms) << "\n";
  os << "  result: " << result_word(rep) << "\n";
  return os.str();
}

std::string report_csv_header(bool timings) {
  std::string h =
      "identity,m,n,weight,status,cert_size,certificate,residue,"
      "max_residual,tolerance,err_estimate,precision,within_tol,"
      "precision_ok,note,error";
  if (timings) h += ",ms";
  return h + "\n";
}

std::string report_csv_row(const dzeta::Report& rep, bool timings) {
  std::ostringstream os;
  os << csv_field(rep.identity) << "," << rep.m << "," << rep.n << ","
     << rep.weight << ",";
  std::string status, cert, residue, cert_size;
  if (rep.symbolic) {
    status = to_string(rep.symbolic->status);
    cert = cert_flat(rep.symbolic->certificate);
    cert_size = std::to_string(rep.symbolic->certificate.size());
    if (rep.symbolic->status == dzeta::SymStatus::not_in_span)
      residue = to_string(rep.symbolic->irreducible);
  }
  os << status << "," << cert_size << "," << csv_field(cert) << ","
     << csv_field(residue) << ",";
  if (rep.numeric) {
    const dzeta::NumericOutcome& n = *rep.numeric;
    os << n.max_residual.to_sci(3) << "," << n.tolerance.to_sci(3) << ","
       << n.err_estimate.to_sci(3) << "," << n.digits << ","
       << (n.within_tol ? "true" : "false") << ","
       << (n.precision_ok ? "true" : "false") << ",";
  } else {
    os << ",,,,,,";
  }
  os << csv_field(rep.note) << "," << csv_field(rep.error);
  if (timings) os << "," << fmt_ms(rep.ms);
  os << "\n";
  return os.str();
}

std::string batch_text(const dzeta::BatchResult& batch) {
  std::ostringstream os;
  os << std::left << std::setw(18) << "identity" << std::right << std::setw(4)
     << "m" << std::setw(4) << "n" << "  " << std::left << std::setw(11)
     << "status" << std::right << std::setw(5) << "cert" << "  " << std::left
     << std::setw(11) << "residual" << "result\n";
  for (const dzeta::Report& rep : batch.reports) {
    std::string status = "-";
    std::string cert = "-";
    if (!rep.error.empty()) {
      status = "ERROR";
    } else if (rep.symbolic) {
      status = to_string(rep.symbolic->status);
      cert = std::to_string(rep.symbolic->certificate.size());
    }
    std::string residual =
        rep.numeric ? rep.numeric->max_residual.to_sci(3) : "-";
    os << std::left << std::setw(18) << rep.identity << std::right
       << std::setw(4) << rep.m << std::setw(4) << rep.n << "  " << std::left
       << std::setw(11) << status << std::right << std::setw(5) << cert << "  "
       << std::left << std::setw(11) << residual << result_word(rep) << "\n";
  }
  int proven = 0, zero = 0, out_of_span = 0, errors = 0, checked = 0,
      failed = 0, prec_failed = 0;
  for (const dzeta::Report& r : batch.reports) {
    if (!r.error.empty()) ++errors;
    if (r.symbolic) {
      if (r.symbolic->status == dzeta::SymStatus::proven) ++proven;
      if (r.symbolic->status == dzeta::SymStatus::exact_zero) ++zero;
      if (r.symbolic->status == dzeta::SymStatus::not_in_span) ++out_of_span;
    }
    if (r.numeric) {
      ++checked;
      if (!r.numeric->within_tol) ++failed;
      if (!r.numeric->precision_ok) ++prec_failed;
    }
  }
  os << "total " << batch.reports.size() << ": proven " << proven
     << ", exact zero " << zero << ", not in span " << out_of_span
     << ", errors " << errors << "\n";
  os << "numeric: checked " << checked << ", failures " << failed
     << ", precision failures " << prec_failed << "\n";
  os << "exit " << batch.exit_code() << "\n";
  return os.str();
}

// --- subcommands -------------------------------------------------------------

int run_eval(const Config& cfg, const std::vector<std::string>& args) {
  if (args.empty())
    return usage_error("eval needs a target: single|double|star|reg");
  const std::string& target = args[0];
  dzeta::RealCtx ctx(cfg.prec);
  const std::size_t digits = static_cast<std::size_t>(cfg.prec);

  auto scalar_out = [&](const std::string& label, long a, long b,
                        const dzeta::NumericValue& nv) {
    std::ostringstream os;
    if (cfg.format == "json") {
      dzeta::Json j;
      j["target"] = target;
      j["args"] = b > 0 ? dzeta::Json::array({a, b}) : dzeta::Json::array({a});
      j["precision"] = cfg.prec;
      j["value"] = nv.value.to_sci(digits);
      j["err"] = nv.err.to_sci(3);
      os << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
      os << "target,a,b,rule,t,value,err\n";
      os << target << "," << a << "," << (b > 0 ? std::to_string(b) : "")
         << ",,," << nv.value.to_sci(digits) << "," << nv.err.to_sci(3) << "\n";
    } else {
      os << label << " = " << nv.value.to_fixed(digits) << " (" << cfg.prec
         << " digits, err <= " << nv.err.to_sci(3) << ")\n";
    }
    write_output(cfg, os.str());
    return 0;
  };

  if (target == "single") {
    if (args.size() != 2) return usage_error("eval single needs one index");
    long w = to_long(args[1]);
    return scalar_out("zeta(" + std::to_string(w) + ")", w, 0,
                      dzeta::zeta_single(w, ctx));
  }
  if (target == "double") {
    if (args.size() != 3) return usage_error("eval double needs two indices");
    long a = to_long(args[1]), b = to_long(args[2]);
    return scalar_out("zeta(" + std::to_string(a) + "," + std::to_string(b) +
                          ")",
                      a, b, dzeta::zeta_double(a, b, ctx));
  }
  if (target == "star") {
    if (args.size() != 3) return usage_error("eval star needs two indices");
    long a = to_long(args[1]), b = to_long(args[2]);
    dzeta::NumericValue nv = dzeta::nv_add(dzeta::zeta_double(a, b, ctx),
                                           dzeta::zeta_single(a + b, ctx));
    return scalar_out("zeta*(" + std::to_string(a) + "," + std::to_string(b) +
                          ")",
                      a, b, nv);
  }
  if (target == "reg") {
    if (args.size() != 4)
      return usage_error("eval reg needs two indices and a rule");
    long a = to_long(args[1]), b = to_long(args[2]);
    if (args[3] != "stuffle" && args[3] != "shuffle")
      return usage_error("rule must be stuffle or shuffle");
    dzeta::Rule rule =
        args[3] == "stuffle" ? dzeta::Rule::stuffle : dzeta::Rule::shuffle;
    dzeta::FormalValue w =
        dzeta::reg_double(static_cast<int>(a), static_cast<int>(b), rule);
    int t_max = 0;
    for (const auto& [mono, coef] : w.terms())
      t_max = std::max(t_max, mono.t_exp);
    std::vector<std::pair<int, dzeta::NumericValue>> coeffs;
    for (int t = t_max; t >= 0; --t) {
      dzeta::FormalValue slice = dzeta::t_slice(w, t);
      if (slice.is_zero() && t != 0) continue;
      coeffs.emplace_back(t, dzeta::eval_formal(slice, 0, ctx));
    }
    std::ostringstream os;
    if (cfg.format == "json") {
      dzeta::Json j;
      j["target"] = target;
      j["args"] = dzeta::Json::array({a, b});
      j["rule"] = args[3];
      j["precision"] = cfg.prec;
      dzeta::Json cs = dzeta::Json::array();
      for (const auto& [t, nv] : coeffs) {
        dzeta::Json c;
        c["t"] = t;
        c["value"] = nv.value.to_sci(digits);
        c["err"] = nv.err.to_sci(3);
        cs.push_back(std::move(c));
      }
      j["coefficients"] = std::move(cs);
      os << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
      os << "target,a,b,rule,t,value,err\n";
      for (const auto& [t, nv] : coeffs)
        os << target << "," << a << "," << b << "," << args[3] << "," << t
           << "," << nv.value.to_sci(digits) << "," << nv.err.to_sci(3) << "\n";
    } else {
      os << "zeta_" << args[3] << "(" << a << "," << b << ") regularized:\n";
      for (const auto& [t, nv] : coeffs)
        os << "  T^" << t << ": " << nv.value.to_fixed(digits) << "\n";
    }
    write_output(cfg, os.str());
    return 0;
  }
  return usage_error("unknown eval target \"" + target + "\"");
}

int run_verify(const Config& cfg, const std::string& kind_str, int m, int n,
               int weight, long x, long a, unsigned long terms,
               const std::string& mode_str) {
  dzeta::IdentityKind kind = dzeta::parse_identity(normalize_kind(kind_str));
  dzeta::VerifyOptions opt;
  opt.mode = parse_mode(mode_str);
  opt.axioms = cfg.axioms();
  opt.t_samples = parse_t_samples(cfg.t_samples_str);
  const bool numeric_on = opt.mode != dzeta::VerifyMode::symbolic;
  if (numeric_on && count_distinct(opt.t_samples) < 3)
    return usage_error("need at least 3 distinct T samples");

  dzeta::RealCtx ctx(cfg.prec);
  dzeta::Report rep;
  if (kind == dzeta::IdentityKind::partial_fraction) {
    rep = dzeta::verify_partial_fraction(m, n, x, a);
  } else if (kind == dzeta::IdentityKind::key_numeric) {
    rep = dzeta::verify_key_numeric(m, n, terms, ctx);
  } else if (dzeta::weight_parameterized(kind)) {
    rep = dzeta::verify(kind, weight > 0 ? weight : m, 0, opt, ctx);
  } else {
    rep = dzeta::verify(kind, m, n, opt, ctx);
  }

  std::ostringstream os;
  if (cfg.format == "json") {
    os << to_json(rep, cfg.timings()).dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << report_csv_header(cfg.timings()) << report_csv_row(rep, cfg.timings());
  } else {
    if (kind == dzeta::IdentityKind::partial_fraction && rep.symbolic) {
      dzeta::BigRat lhs =
          dzeta::BigRat(1) / (dzeta::BigRat(x).pow(static_cast<unsigned>(m)) *
                              dzeta::BigRat(x + a).pow(static_cast<unsigned>(n)));
      dzeta::BigRat rhs = lhs;
      for (const auto& [mono, c] : rep.symbolic->residual.terms()) rhs += c;
      os << lhs.to_string() << " = " << rhs.to_string() << "\n";
    }
    os << report_text(rep, cfg);
  }
  write_output(cfg, os.str());
  return rep.exit_code();
}

int run_verify_all(const Config& cfg, int max_weight,
                   const std::string& identities, const std::string& mode_str) {
  if (max_weight < 4) return usage_error("--max-weight must be >= 4");
  dzeta::BatchOptions opt;
  opt.max_weight = max_weight;
  opt.mode = parse_mode(mode_str);
  opt.axioms = cfg.axioms();
  opt.t_samples = parse_t_samples(cfg.t_samples_str);
  opt.digits = cfg.prec;
  opt.jobs = cfg.jobs;
  if (opt.mode != dzeta::VerifyMode::symbolic &&
      count_distinct(opt.t_samples) < 3)
    return usage_error("need at least 3 distinct T samples");
  if (!identities.empty()) {
    std::stringstream ss(identities);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty())
        opt.kinds.push_back(dzeta::parse_identity(normalize_kind(item)));
  }

  dzeta::BatchResult batch = dzeta::verify_all(opt);

  std::ostringstream os;
  if (cfg.format == "json") {
    os << to_json(batch, cfg.timings()).dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << report_csv_header(cfg.timings());
    for (const dzeta::Report& rep : batch.reports)
      os << report_csv_row(rep, cfg.timings());
  } else {
    os << batch_text(batch);
  }
  write_output(cfg, os.str());
  return batch.exit_code();
}

int run_relations(const Config& cfg, int weight, bool print_basis) {
  dzeta::RelationSet set = dzeta::RelationSet::build(weight, cfg.axioms());
  std::ostringstream os;
  if (cfg.format == "json") {
    os << to_json(set, print_basis).dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "id,value\n";
    for (const dzeta::RelationRow& r : set.rows())
      os << r.id.str() << "," << csv_field(to_string(r.value)) << "\n";
  } else {
    os << "weight " << set.weight() << ", axioms " << to_string(set.axioms())
       << ", rank " << set.rank() << "\n";
    os << "rows:\n";
    for (const dzeta::RelationRow& r : set.rows())
      os << "  " << r.id.str() << ": " << to_string(r.value) << "\n";
    if (print_basis) {
      os << "echelon:\n";
      for (const dzeta::RelationSet::EchelonRow& er : set.echelon()) {
        os << "  pivot " << to_string(er.pivot) << ": " << to_string(er.value)
           << "  [";
        bool first = true;
        for (const auto& [id, c] : er.combo) {
          if (!first) os << " + ";
          os << c.to_string() << "*" << id.str();
          first = false;
        }
        os << "]\n";
      }
    }
  }
  write_output(cfg, os.str());
  return 0;
}

int run_fit(const Config& cfg, const std::string& kind_str, int a,
            unsigned long max_n) {
  dzeta::FitKind kind =
      kind_str == "abel" ? dzeta::FitKind::abel : dzeta::FitKind::harmonic;
  dzeta::FitSchedule sched = dzeta::FitSchedule::defaults(kind);
  if (kind == dzeta::FitKind::harmonic) {
    if (max_n < 1000) return usage_error("--max-n must be at least 1000");
    sched.ns = {max_n / 16, max_n / 8, max_n / 4, max_n / 2, max_n};
  }
  dzeta::RealCtx ctx(cfg.prec);
  dzeta::FitResult res = dzeta::reg_fit(kind, a, ctx, sched);

  std::ostringstream os;
  if (cfg.format == "json") {
    os << to_json(res, cfg.prec).dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "param,estimate,reference,deviation\n";
    auto row = [&](const char* name, const dzeta::Real& est,
                   const dzeta::Real& ref) {
      os << name << "," << est.to_sci(12) << "," << ref.to_sci(12) << ","
         << (est - ref).abs().to_sci(3) << "\n";
    };
    if (res.quadratic) row("b2", res.b2, res.ref_b2);
    row("b1", res.b1, res.ref_b1);
    row("b0", res.b0, res.ref_b0);
    row("c1", res.c1, res.ref_c1);
    row("c0", res.c0, res.ref_c0);
  } else {
    os << "fit " << to_string(kind) << " a=" << a << " ("
       << sched.size(kind) << " samples)\n";
    auto line = [&](const char* name, const dzeta::Real& est,
                    const dzeta::Real& ref) {
      os << "    " << name << " = " << est.to_sci(12) << " (ref "
         << ref.to_sci(12) << ", dev " << (est - ref).abs().to_sci(3) << ")\n";
    };
    os << "  double word (" << a << ",1):\n";
    if (res.quadratic) line("b2", res.b2, res.ref_b2);
    line("b1", res.b1, res.ref_b1);
    line("b0", res.b0, res.ref_b0);
    os << "  single word (" << a << "):\n";
    line("c1", res.c1, res.ref_c1);
    line("c0", res.c0, res.ref_c0);
  }
  write_output(cfg, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and arbitrary-precision verification of double zeta identities"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--prec", cfg.prec, "working precision in decimal digits")
      ->envname("DZETA_PREC")
      ->capture_default_str();
  app.add_option("--axioms", cfg.axioms_str, "relation axioms")
      ->check(CLI::IsMember({"strict", "extended"}))
      ->capture_default_str();
  app.add_option("--t-samples", cfg.t_samples_str,
                 "comma-separated T sample points")
      ->capture_default_str();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "worker threads for batch runs")
      ->capture_default_str();
  app.add_option("--out", cfg.out_path, "write output to a file");
  app.add_flag("--no-timings", cfg.no_timings, "omit timing fields");

  CLI::App* eval_cmd =
      app.add_subcommand("eval", "evaluate a value numerically");
  eval_cmd->fallthrough();
  std::vector<std::string> eval_args;
  eval_cmd
      ->add_option("target", eval_args,
                   "single w | double a b | star a b | reg a b stuffle|shuffle")
      ->expected(-1);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "verify one identity instance");
  verify_cmd->fallthrough();
  std::string v_kind, v_mode = "both";
  int v_m = 0, v_n = 0, v_weight = 0;
  long v_x = 1, v_a = 1;
  unsigned long v_terms = 1000;
  verify_cmd
      ->add_option("kind", v_kind,
                   "prima|harmonic|shuffle|eds|thm1|secunda|tertia|gkz|"
                   "gkz-sub|sum-formula|partial-fraction|key-numeric")
      ->required();
  verify_cmd->add_option("--m", v_m, "first index");
  verify_cmd->add_option("--n", v_n, "second index");
  verify_cmd->add_option("--weight", v_weight, "weight (gkz, sum-formula)");
  verify_cmd->add_option("--x", v_x, "evaluation point (partial-fraction)");
  verify_cmd->add_option("--a", v_a, "shift (partial-fraction)");
  verify_cmd->add_option("--terms", v_terms, "outer terms (key-numeric)")
      ->capture_default_str();
  verify_cmd->add_option("--mode", v_mode, "what to check")
      ->check(CLI::IsMember({"symbolic", "numeric", "both"}))
      ->capture_default_str();

  CLI::App* all_cmd =
      app.add_subcommand("verify-all", "verify identity families to a weight cap");
  all_cmd->fallthrough();
  int all_max_weight = 10;
  std::string all_idents, all_mode = "both";
  all_cmd->add_option("--max-weight", all_max_weight, "weight cap")
      ->capture_default_str();
  all_cmd->add_option("--identities", all_idents,
                      "comma-separated kinds (default: all)");
  all_cmd->add_option("--mode", all_mode, "what to check")
      ->check(CLI::IsMember({"symbolic", "numeric", "both"}))
      ->capture_default_str();

  CLI::App* rel_cmd =
      app.add_subcommand("relations", "dump the relation span at one weight");
  rel_cmd->fallthrough();
  int rel_weight = 0;
  bool rel_basis = false;
  rel_cmd->add_option("--weight", rel_weight, "weight")->required();
  rel_cmd->add_flag("--print-basis", rel_basis, "include the echelon basis");

  CLI::App* fit_cmd = app.add_subcommand(
      "fit", "fit truncation/damping asymptotics of divergent words");
  fit_cmd->fallthrough();
  std::string fit_kind;
  int fit_a = 1;
  unsigned long fit_max_n = 1000000;
  fit_cmd->add_option("--kind", fit_kind, "harmonic or abel")
      ->required()
      ->check(CLI::IsMember({"harmonic", "abel"}));
  fit_cmd->add_option("--a", fit_a, "word index")->required();
  fit_cmd->add_option("--max-n", fit_max_n, "largest harmonic cutoff")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (cfg.prec < 15) return usage_error("--prec must be at least 15");
  if (cfg.jobs < 1) return usage_error("--jobs must be at least 1");

  try {
    if (app.got_subcommand(eval_cmd)) return run_eval(cfg, eval_args);
    if (app.got_subcommand(verify_cmd))
      return run_verify(cfg, v_kind, v_m, v_n, v_weight, v_x, v_a, v_terms,
                        v_mode);
    if (app.got_subcommand(all_cmd))
      return run_verify_all(cfg, all_max_weight, all_idents, all_mode);
    if (app.got_subcommand(rel_cmd))
      return run_relations(cfg, rel_weight, rel_basis);
    if (app.got_subcommand(fit_cmd))
      return run_fit(cfg, fit_kind, fit_a, fit_max_n);
  } catch (const dzeta::DomainError& e) {
    return usage_error(e.what());
  } catch (const dzeta::DivergentValue& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return usage_error("no subcommand given");
}
