#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "dzeta/fit.hpp"
#include "dzeta/relations.hpp"
#include "dzeta/verify.hpp"

namespace dzeta {

// Key order is meaningful for byte-stable output, so everything below builds
// ordered_json explicitly.
using Json = nlohmann::ordered_json;

inline constexpr std::size_t kResidualDigits = 3;

inline Json to_json(const Atom& a) {
  Json j;
  switch (a.kind) {
    case Atom::Kind::unit:
      j["kind"] = "unit";
      j["args"] = Json::array();
      break;
    case Atom::Kind::single:
      j["kind"] = "single";
      j["args"] = Json::array({a.a});
      break;
    case Atom::Kind::dbl:
      j["kind"] = "double";
      j["args"] = Json::array({a.a, a.b});
      break;
  }
  return j;
}

inline Atom atom_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const Json& args = j.at("args");
  if (kind == "unit") return Atom::unit();
  if (kind == "single") return Atom::single(args.at(0).get<int>());
  if (kind == "double")
    return Atom::dbl(args.at(0).get<int>(), args.at(1).get<int>());
  throw DomainError("atom_from_json: unknown kind \"" + kind + "\"");
}

inline Json to_json(const FormalValue& v) {
  Json arr = Json::array();
  for (const auto& [mono, coef] : v.terms()) {
    Json t;
    t["t"] = mono.t_exp;
    t["atom"] = to_json(mono.atom);
    t["coef"] = coef.to_string();
    arr.push_back(std::move(t));
  }
  return arr;
}

inline FormalValue formal_value_from_json(const Json& j) {
  FormalValue v;
  for (const Json& t : j)
    v.add(Mono{t.at("t").get<int>(), atom_from_json(t.at("atom"))},
          BigRat(t.at("coef").get<std::string>()));
  return v;
}

inline Json to_json(const Certificate& cert) {
  Json arr = Json::array();
  for (const CertTerm& t : cert) {
    Json e;
    e["row"] = t.row.str();
    e["coef"] = t.coef.to_string();
    arr.push_back(std::move(e));
  }
  return arr;
}

inline RowId row_id_from_string(const std::string& s) {
  auto bad = [&]() -> RowId {
    throw DomainError("row_id_from_string: cannot parse \"" + s + "\"");
  };
  if (s.size() < 4 || s[1] != '(' || s.back() != ')') return bad();
  std::string body = s.substr(2, s.size() - 3);
  if (s[0] == 'S') return RowId::s(std::stoi(body));
  if (s[0] != 'E') return bad();
  auto comma = body.find(',');
  if (comma == std::string::npos) return bad();
  return RowId::e(std::stoi(body.substr(0, comma)),
                  std::stoi(body.substr(comma + 1)));
}

inline Certificate certificate_from_json(const Json& j) {
  Certificate cert;
  for (const Json& e : j)
    cert.push_back(CertTerm{row_id_from_string(e.at("row").get<std::string>()),
                            BigRat(e.at("coef").get<std::string>())});
  return cert;
}

inline Json to_json(const RelationSet& set, bool with_echelon = false) {
  Json j;
  j["weight"] = set.weight();
  j["axioms"] = to_string(set.axioms());
  Json rows = Json::array();
  for (const RelationRow& r : set.rows()) {
    Json e;
    e["id"] = r.id.str();
    e["value"] = to_json(r.value);
    rows.push_back(std::move(e));
  }
  j["rows"] = std::move(rows);
  j["rank"] = set.rank();
  if (with_echelon) {
    Json ech = Json::array();
    for (const RelationSet::EchelonRow& er : set.echelon()) {
      Json e;
      e["pivot"] = Json{{"t", er.pivot.t_exp}, {"atom", to_json(er.pivot.atom)}};
      e["value"] = to_json(er.value);
      Json combo = Json::array();
      for (const auto& [id, c] : er.combo) {
        Json ct;
        ct["row"] = id.str();
        ct["coef"] = c.to_string();
        combo.push_back(std::move(ct));
      }
      e["combo"] = std::move(combo);
      ech.push_back(std::move(e));
    }
    j["echelon"] = std::move(ech);
  }
  return j;
}

inline Json to_json(const Report& rep, bool timings = true) {
  Json j;
  j["identity"] = rep.identity;
  j["m"] = rep.m;
  j["n"] = rep.n;
  j["weight"] = rep.weight;
  if (rep.symbolic) {
    Json s;
    s["status"] = to_string(rep.symbolic->status);
    if (rep.symbolic->status == SymStatus::proven)
      s["certificate"] = to_json(rep.symbolic->certificate);
    if (rep.symbolic->status == SymStatus::not_in_span)
      s["residue"] = to_json(rep.symbolic->irreducible);
    j["symbolic"] = std::move(s);
  }
  if (rep.numeric) {
    Json n;
    n["t_samples"] = rep.numeric->t_samples;
    n["max_residual"] = rep.numeric->max_residual.to_sci(kResidualDigits);
    n["tolerance"] = rep.numeric->tolerance.to_sci(kResidualDigits);
    n["err_estimate"] = rep.numeric->err_estimate.to_sci(kResidualDigits);
    n["precision"] = rep.numeric->digits;
    n["within_tol"] = rep.numeric->within_tol;
    n["precision_ok"] = rep.numeric->precision_ok;
    j["numeric"] = std::move(n);
  }
  if (!rep.note.empty()) j["note"] = rep.note;
  if (!rep.error.empty()) j["error"] = rep.error;
  if (timings) j["ms"] = rep.ms;
  return j;
}

inline Report report_from_json(const Json& j) {
  Report rep;
  rep.identity = j.at("identity").get<std::string>();
  rep.m = j.at("m").get<int>();
  rep.n = j.at("n").get<int>();
  rep.weight = j.at("weight").get<int>();
  if (j.contains("symbolic")) {
    const Json& s = j.at("symbolic");
    SymbolicOutcome sym;
    const std::string status = s.at("status").get<std::string>();
    if (status == "ExactZero")
      sym.status = SymStatus::exact_zero;
    else if (status == "Proven")
      sym.status = SymStatus::proven;
    else if (status == "NotInSpan")
      sym.status = SymStatus::not_in_span;
    else
      throw DomainError("report_from_json: bad status \"" + status + "\"");
    if (s.contains("certificate"))
      sym.certificate = certificate_from_json(s.at("certificate"));
    if (s.contains("residue"))
      sym.irreducible = formal_value_from_json(s.at("residue"));
    rep.symbolic = std::move(sym);
  }
  if (j.contains("numeric")) {
    const Json& n = j.at("numeric");
    NumericOutcome num;
    num.t_samples = n.at("t_samples").get<std::vector<long>>();
    num.max_residual =
        Real::from_string(n.at("max_residual").get<std::string>(), 128);
    num.tolerance = Real::from_string(n.at("tolerance").get<std::string>(), 128);
    num.err_estimate =
        Real::from_string(n.at("err_estimate").get<std::string>(), 128);
    num.digits = n.at("precision").get<long>();
    num.within_tol = n.at("within_tol").get<bool>();
    num.precision_ok = n.at("precision_ok").get<bool>();
    rep.numeric = std::move(num);
  }
  if (j.contains("note")) rep.note = j.at("note").get<std::string>();
  if (j.contains("error")) rep.error = j.at("error").get<std::string>();
  if (j.contains("ms")) rep.ms = j.at("ms").get<double>();
  return rep;
}

inline Json to_json(const BatchResult& batch, bool timings = true) {
  Json j;
  Json reports = Json::array();
  int proven = 0, zero = 0, out_of_span = 0, num_checked = 0, num_failed = 0,
      prec_failed = 0, errors = 0;
  Real worst(kErrPrec);
  for (const Report& r : batch.reports) {
    reports.push_back(to_json(r, timings));
    if (!r.error.empty()) ++errors;
    if (r.symbolic) {
      switch (r.symbolic->status) {
        case SymStatus::proven: ++proven; break;
        case SymStatus::exact_zero: ++zero; break;
        case SymStatus::not_in_span: ++out_of_span; break;
      }
    }
    if (r.numeric) {
      ++num_checked;
      if (!r.numeric->within_tol) ++num_failed;
      if (!r.numeric->precision_ok) ++prec_failed;
      if (worst < r.numeric->max_residual) worst = r.numeric->max_residual;
    }
  }
  j["reports"] = std::move(reports);
  Json summary;
  summary["total"] = batch.reports.size();
  summary["proven"] = proven;
  summary["exact_zero"] = zero;
  summary["not_in_span"] = out_of_span;
  summary["numeric_checked"] = num_checked;
  summary["numeric_failures"] = num_failed;
  summary["precision_failures"] = prec_failed;
  summary["errors"] = errors;
  summary["worst_residual"] = worst.to_sci(kResidualDigits);
  summary["exit_code"] = batch.exit_code();
  j["summary"] = std::move(summary);
  return j;
}

inline Json to_json(const FitResult& fit, long digits) {
  auto fmt = [&](const Real& r) {
    return r.to_sci(static_cast<std::size_t>(digits < 12 ? digits : 12));
  };
  Json j;
  j["kind"] = to_string(fit.kind);
  j["a"] = fit.a;
  j["quadratic"] = fit.quadratic;
  Json dw;
  if (fit.quadratic) dw["b2"] = fmt(fit.b2);
  dw["b1"] = fmt(fit.b1);
  dw["b0"] = fmt(fit.b0);
  Json dref;
  if (fit.quadratic) dref["b2"] = fmt(fit.ref_b2);
  dref["b1"] = fmt(fit.ref_b1);
  dref["b0"] = fmt(fit.ref_b0);
  dw["reference"] = std::move(dref);
  j["double_word"] = std::move(dw);
  Json sw;
  sw["c1"] = fmt(fit.c1);
  sw["c0"] = fmt(fit.c0);
  Json sref;
  sref["c1"] = fmt(fit.ref_c1);
  sref["c0"] = fmt(fit.ref_c0);
  sw["reference"] = std::move(sref);
  j["single_word"] = std::move(sw);
  Json xs = Json::array();
  for (const Real& x : fit.xs) xs.push_back(x.to_sci(8));
  j["xs"] = std::move(xs);
  return j;
}

}  // namespace dzeta
