#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "dzeta/fit.hpp"
#include "dzeta/genfun.hpp"
#include "dzeta/numerics.hpp"
#include "dzeta/relations.hpp"

namespace dzeta {

enum class IdentityKind {
  prima,
  harmonic,
  shuffle,
  eds,
  thm1,
  secunda,
  tertia,
  gkz,
  gkz_sub,
  sum_formula,
  partial_fraction,
  key_numeric,
};

inline const char* to_string(IdentityKind k) {
  switch (k) {
    case IdentityKind::prima: return "prima";
    case IdentityKind::harmonic: return "harmonic";
    case IdentityKind::shuffle: return "shuffle";
    case IdentityKind::eds: return "eds";
    case IdentityKind::thm1: return "thm1";
    case IdentityKind::secunda: return "secunda";
    case IdentityKind::tertia: return "tertia";
    case IdentityKind::gkz: return "gkz";
    case IdentityKind::gkz_sub: return "gkz_sub";
    case IdentityKind::sum_formula: return "sum_formula";
    case IdentityKind::partial_fraction: return "partial_fraction";
    case IdentityKind::key_numeric: return "key_numeric";
  }
  return "?";
}

inline IdentityKind parse_identity(const std::string& s) {
  for (IdentityKind k :
       {IdentityKind::prima, IdentityKind::harmonic, IdentityKind::shuffle,
        IdentityKind::eds, IdentityKind::thm1, IdentityKind::secunda,
        IdentityKind::tertia, IdentityKind::gkz, IdentityKind::gkz_sub,
        IdentityKind::sum_formula, IdentityKind::partial_fraction,
        IdentityKind::key_numeric})
    if (s == to_string(k)) return k;
  throw DomainError("unknown identity kind \"" + s + "\"");
}

// weight-parameterized kinds take a single w instead of (m,n)
inline bool weight_parameterized(IdentityKind k) {
  return k == IdentityKind::gkz || k == IdentityKind::sum_formula;
}

enum class VerifyMode { symbolic, numeric, both };
enum class SymStatus { exact_zero, proven, not_in_span };

inline const char* to_string(SymStatus s) {
  switch (s) {
    case SymStatus::exact_zero: return "ExactZero";
    case SymStatus::proven: return "Proven";
    case SymStatus::not_in_span: return "NotInSpan";
  }
  return "?";
}

struct SymbolicOutcome {
  SymStatus status = SymStatus::exact_zero;
  Certificate certificate;  // for Proven
  FormalValue residual;     // the value that was decided
  FormalValue irreducible;  // remainder for NotInSpan
};

struct NumericOutcome {
  std::vector<long> t_samples;
  Real max_residual{kErrPrec};
  Real tolerance{kErrPrec};
  Real err_estimate{kErrPrec};
  long digits = 0;
  bool within_tol = false;
  bool precision_ok = false;
};

struct Report {
  std::string identity;
  int m = 0;
  int n = 0;
  int weight = 0;
  std::optional<SymbolicOutcome> symbolic;
  std::optional<NumericOutcome> numeric;
  std::string note;
  std::string error;  // set when verification itself blew up
  double ms = 0.0;

  // 0 clean, 1 identity failed, 3 tolerance unreachable at this precision
  int exit_code() const {
    if (!error.empty()) return 1;
    if (symbolic && symbolic->status == SymStatus::not_in_span) return 1;
    if (numeric && !numeric->within_tol) return 1;
    if (numeric && !numeric->precision_ok) return 3;
    return 0;
  }
  bool passed() const { return exit_code() == 0; }
};

struct VerifyOptions {
  VerifyMode mode = VerifyMode::both;
  Axioms axioms = Axioms::extended;
  std::vector<long> t_samples = {0, 1, 2};
};

namespace detail {

inline SymbolicOutcome decide(const FormalValue& residual, Axioms axioms) {
  SymbolicOutcome out;
  out.residual = residual;
  if (residual.is_zero()) {
    out.status = SymStatus::exact_zero;
    return out;
  }
  RelationSet set = RelationSet::build(residual.weight(), axioms);
  RelationSet::MemberResult mr = set.member(residual);
  if (mr.in_span) {
    out.status = SymStatus::proven;
    out.certificate = std::move(mr.certificate);
  } else {
    out.status = SymStatus::not_in_span;
    out.irreducible = std::move(mr.residue);
  }
  return out;
}

// regularized single as a number: zeta(w) for w >= 2, the sample T at w = 1
inline NumericValue nv_reg_single(long w, long t, RealCtx& ctx) {
  if (w == 1) {
    NumericValue r{Real::from_si(t, ctx.bits()), Real(kErrPrec)};
    return r;
  }
  return zeta_single(w, ctx);
}

inline NumericValue nv_star(long a, long b, RealCtx& ctx) {
  return nv_add(zeta_double(a, b, ctx), zeta_single(a + b, ctx));
}

// thm1 right side evaluated with genuine multiplications
inline NumericValue nv_p(int m, int n, long t, RealCtx& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  NumericValue acc{Real(bits), Real(kErrPrec)};
  for (int i = 0; i <= m - 1; ++i) {
    NumericValue term =
        nv_mul(zeta_single(n + i, ctx), nv_reg_single(m - i, t, ctx));
    BigRat c = binom(n + i - 1, i);
    if (i % 2) c = -c;
    acc = nv_add(acc, nv_scale(term, Real::from_rat(c, bits)));
  }
  const BigRat sgn_m(m % 2 ? -1 : 1);
  for (int j = 0; j <= n - 1; ++j) {
    NumericValue term =
        nv_mul(zeta_single(m + j, ctx), nv_reg_single(n - j, t, ctx));
    term = nv_sub(term, nv_star(n - j, m + j, ctx));
    acc = nv_add(acc, nv_scale(term, Real::from_rat(sgn_m * binom(m + j - 1, j),
                                                    bits)));
  }
  return acc;
}

// third closed form, as a formal value (stuffle-regularized words)
inline FormalValue tertia_rhs(int m, int n) {
  FormalValue v;
  for (int i = 0; i <= m - 1; ++i) {
    FormalValue brace = reg_double(n + i, m - i, Rule::stuffle);
    brace += double_zeta(m - i, n + i);
    brace += single(m + n);
    BigRat c = binom(n + i - 1, i);
    if (i % 2) c = -c;
    brace *= c;
    v += brace;
  }
  const BigRat sgn_m(m % 2 ? -1 : 1);
  for (int j = 0; j <= n - 1; ++j) {
    FormalValue t = reg_double(m + j, n - j, Rule::stuffle);
    t *= sgn_m * binom(m + j - 1, j);
    v += t;
  }
  return v;
}

// second shuffle-linearization side of one Q coefficient, via real products
inline NumericValue nv_q_coeff(int k, int p, long t, RealCtx& ctx) {
  return nv_mul(nv_reg_single(p + 1, t, ctx), nv_reg_single(k - 1 - p, t, ctx));
}

struct NumericSides {
  // evaluate (lhs, rhs) at a T sample
  std::function<std::pair<NumericValue, NumericValue>(long)> at;
};

inline NumericOutcome run_numeric(const NumericSides& sides,
                                  const std::vector<long>& t_samples,
                                  RealCtx& ctx) {
  NumericOutcome out;
  out.t_samples = t_samples;
  out.digits = ctx.digits();
  out.tolerance = ctx.tol();
  for (long t : t_samples) {
    auto [l, r] = sides.at(t);
    Real res = (l.value - r.value).abs();
    Real err = l.err + r.err;
    if (out.max_residual < res) out.max_residual = res;
    if (out.err_estimate < err) out.err_estimate = err;
  }
  out.within_tol = !(out.tolerance < out.max_residual);
  out.precision_ok = !(out.tolerance < out.err_estimate);
  return out;
}

}  // namespace detail

// Verifies one identity instance. For weight-parameterized kinds pass the
// weight as m (n is ignored). partial_fraction and key_numeric have their own
// entry points below.
inline Report verify(IdentityKind kind, int m, int n, const VerifyOptions& opt,
                     RealCtx& ctx) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.identity = to_string(kind);
  rep.m = m;
  rep.n = weight_parameterized(kind) ? 0 : n;
  rep.weight = weight_parameterized(kind) ? m : m + n;

  const bool want_sym =
      opt.mode == VerifyMode::symbolic || opt.mode == VerifyMode::both;
  const bool want_num =
      opt.mode == VerifyMode::numeric || opt.mode == VerifyMode::both;
  if (want_num && opt.t_samples.size() < 3)
    throw DomainError("verify: need at least 3 T samples");

  FormalValue residual;
  detail::NumericSides sides;

  switch (kind) {
    case IdentityKind::prima: {
      if (m < 2 || n < 2) throw DomainError("prima: needs m,n >= 2");
      residual = star(m, n) + star(n, m) -
                 product_singles(m, n, Rule::stuffle) - single(m + n);
      sides.at = [m, n, &ctx](long) {
        NumericValue lhs =
            nv_add(detail::nv_star(m, n, ctx), detail::nv_star(n, m, ctx));
        NumericValue rhs = nv_add(nv_mul(zeta_single(m, ctx), zeta_single(n, ctx)),
                                  zeta_single(m + n, ctx));
        return std::make_pair(lhs, rhs);
      };
      break;
    }
    case IdentityKind::harmonic: {
      if (m < 2 || n < 2) throw DomainError("harmonic: needs m,n >= 2");
      residual = product_singles(m, n, Rule::stuffle) - double_zeta(m, n) -
                 double_zeta(n, m) - single(m + n);
      sides.at = [m, n, &ctx](long) {
        NumericValue lhs = nv_mul(zeta_single(m, ctx), zeta_single(n, ctx));
        NumericValue rhs = nv_add(
            nv_add(zeta_double(m, n, ctx), zeta_double(n, m, ctx)),
            zeta_single(m + n, ctx));
        return std::make_pair(lhs, rhs);
      };
      break;
    }
    case IdentityKind::shuffle: {
      if (m < 2 || n < 2) throw DomainError("shuffle: needs m,n >= 2");
      FormalValue rhs_formal = product_singles(m, n, Rule::shuffle);
      residual = product_singles(m, n, Rule::stuffle) - rhs_formal;
      sides.at = [m, n, rhs_formal, &ctx](long t) {
        NumericValue lhs = nv_mul(zeta_single(m, ctx), zeta_single(n, ctx));
        NumericValue rhs = eval_formal(rhs_formal, t, ctx);
        return std::make_pair(lhs, rhs);
      };
      break;
    }
    case IdentityKind::eds: {
      if (m < 1 || n < 1) throw DomainError("eds: needs m,n >= 1");
      FormalValue sh = product_singles(m, n, Rule::shuffle);
      FormalValue st = product_singles(m, n, Rule::stuffle);
      residual = sh - st;
      sides.at = [sh, st, &ctx](long t) {
        return std::make_pair(eval_formal(sh, t, ctx),
                              eval_formal(st, t, ctx));
      };
      break;
    }
    case IdentityKind::thm1: {
      if (m < 2 || n < 2) throw DomainError("thm1: needs m,n >= 2");
      residual = build_p(m, n) - double_zeta(m, n);
      sides.at = [m, n, &ctx](long t) {
        return std::make_pair(zeta_double(m, n, ctx),
                              detail::nv_p(m, n, t, ctx));
      };
      break;
    }
    case IdentityKind::secunda: {
      if (m < 2 || n < 2) throw DomainError("secunda: needs m,n >= 2");
      residual = build_p(m, n) + build_p(n, m) -
                 product_singles(m, n, Rule::stuffle) + single(m + n);
      sides.at = [m, n, &ctx](long t) {
        NumericValue lhs = nv_sub(
            nv_mul(zeta_single(m, ctx), zeta_single(n, ctx)),
            zeta_single(m + n, ctx));
        NumericValue rhs =
            nv_add(detail::nv_p(m, n, t, ctx), detail::nv_p(n, m, t, ctx));
        return std::make_pair(lhs, rhs);
      };
      break;
    }
    case IdentityKind::tertia: {
      if (m < 2 || n < 2) throw DomainError("tertia: needs m,n >= 2");
      FormalValue rhs_formal = detail::tertia_rhs(m, n);
      if (!rhs_formal.t_free())
        throw Error("tertia: T-monomials failed to cancel");
      residual = rhs_formal - double_zeta(m, n);
      sides.at = [m, n, rhs_formal, &ctx](long t) {
        return std::make_pair(zeta_double(m, n, ctx),
                              eval_formal(rhs_formal, t, ctx));
      };
      break;
    }
    case IdentityKind::gkz: {
      const int k = m;
      if (k < 3) throw DomainError("gkz: needs weight >= 3");
      std::vector<FormalValue> residuals = check_gkz(k);
      for (const FormalValue& r : residuals)
        if (!r.is_zero()) {
          residual = r;  // report the first failing coefficient
          break;
        }
      // numeric: every coefficient against the real product, worst case
      BiPoly d = build_d(k);
      const BigRat one(1), zero(0);
      BiPoly lhs_poly = substitute(d, one, one, zero, one);
      lhs_poly += substitute(d, one, one, one, zero);
      sides.at = [k, lhs_poly, &ctx](long t) {
        NumericValue worst_l{Real(ctx.bits()), Real(kErrPrec)};
        NumericValue worst_r{Real(ctx.bits()), Real(kErrPrec)};
        Real worst(kErrPrec);
        bool any = false;
        for (int p = 0; p <= k - 2; ++p) {
          NumericValue l = eval_formal(lhs_poly.coeff(p, k - 2 - p), t, ctx);
          NumericValue r = detail::nv_q_coeff(k, p, t, ctx);
          Real res = (l.value - r.value).abs();
          if (!any || worst < res) {
            worst = res;
            worst_l = l;
            worst_r = r;
            any = true;
          }
        }
        return std::make_pair(worst_l, worst_r);
      };
      break;
    }
    case IdentityKind::gkz_sub: {
      if (m < 2 || n < 2) throw DomainError("gkz_sub: needs m,n >= 2");
      const int k = m + n;
      const BigRat one(1), zero(0), neg(-1);
      BiPoly q = build_q(k);
      BiPoly qsub = substitute(q, one, neg, zero, one);  // Q(X-Y, Y)
      BiPoly d = build_d(k);
      BiPoly dsub = substitute(d, one, zero, one, neg);  // D(X, X-Y)
      FormalValue lhs_formal = qsub.coeff(n - 1, m - 1);
      FormalValue rhs_formal = d.coeff(n - 1, m - 1) + dsub.coeff(n - 1, m - 1);
      residual = lhs_formal - rhs_formal;
      if (!residual.t_free())
        throw Error("gkz_sub: T-monomials failed to cancel");
      sides.at = [m, n, k, rhs_formal, &ctx](long t) {
        // left side re-derived with real products:
        // coeff of X^{n-1} Y^{m-1} in sum_i [z(i) z(k-i)] (X-Y)^{i-1} Y^{k-i-1}
        const mpfr_prec_t bits = ctx.bits();
        NumericValue lhs{Real(bits), Real(kErrPrec)};
        for (int i = n; i <= k - 1; ++i) {
          NumericValue prod = nv_mul(detail::nv_reg_single(i, t, ctx),
                                     detail::nv_reg_single(k - i, t, ctx));
          BigRat c = binom(i - 1, n - 1);
          if ((i - n) % 2) c = -c;
          lhs = nv_add(lhs, nv_scale(prod, Real::from_rat(c, bits)));
        }
        return std::make_pair(lhs, eval_formal(rhs_formal, t, ctx));
      };
      break;
    }
    case IdentityKind::sum_formula: {
      const int w = m;
      if (w < 3) throw DomainError("sum_formula: needs weight >= 3");
      residual = row_s(w).value;
      sides.at = [w, &ctx](long) {
        NumericValue lhs = zeta_single(w, ctx);
        NumericValue rhs{Real(ctx.bits()), Real(kErrPrec)};
        for (int a = 1; a <= w - 2; ++a)
          rhs = nv_add(rhs, zeta_double(a, w - a, ctx));
        return std::make_pair(lhs, rhs);
      };
      break;
    }
    case IdentityKind::partial_fraction:
    case IdentityKind::key_numeric:
      throw DomainError(std::string(to_string(kind)) +
                        ": use its dedicated entry point");
  }

  if (want_sym) rep.symbolic = detail::decide(residual, opt.axioms);
  if (want_num) rep.numeric = detail::run_numeric(sides, opt.t_samples, ctx);

  rep.ms = std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
               .count();
  return rep;
}

// Exact check of the partial-fraction expansion of 1/(x^m (x+a)^n). The
// decomposition is stated for the orientation with x carrying the exponent m;
// the report notes whether the swapped orientation happens to agree too.
inline Report verify_partial_fraction(int m, int n, long x, long a) {
  auto t0 = std::chrono::steady_clock::now();
  if (m < 1 || n < 1) throw DomainError("partial_fraction: needs m,n >= 1");
  if (x < 1 || a < 1) throw DomainError("partial_fraction: needs x,a >= 1");
  Report rep;
  rep.identity = to_string(IdentityKind::partial_fraction);
  rep.m = m;
  rep.n = n;
  rep.weight = m + n;

  const BigRat xr(x), ar(a), xa(x + a);
  BigRat lhs = BigRat(1) / (xr.pow(m) * xa.pow(n));
  BigRat rhs;
  for (int i = 0; i <= m - 1; ++i) {
    BigRat t = binom(n + i - 1, i) / (ar.pow(n + i) * xr.pow(m - i));
    rhs += i % 2 ? -t : t;
  }
  for (int j = 0; j <= n - 1; ++j) {
    BigRat t = binom(m + j - 1, j) / (ar.pow(m + j) * xa.pow(n - j));
    rhs += m % 2 ? -t : t;
  }
  BigRat swapped_lhs = BigRat(1) / (xr.pow(n) * xa.pow(m));

  SymbolicOutcome sym;
  sym.residual = FormalValue::term(Mono{0, Atom::unit()}, rhs - lhs);
  sym.status =
      sym.residual.is_zero() ? SymStatus::exact_zero : SymStatus::not_in_span;
  if (sym.status == SymStatus::not_in_span) sym.irreducible = sym.residual;
  rep.symbolic = sym;
  rep.note = "x=" + std::to_string(x) + " a=" + std::to_string(a) +
             "; swapped orientation " +
             (rhs == swapped_lhs ? "also matches" : "differs");
  rep.ms = std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
               .count();
  return rep;
}

// exact rational residual of the expansion, for sweep tests
inline BigRat partial_fraction_residual(int m, int n, long x, long a) {
  Report r = verify_partial_fraction(m, n, x, a);
  const auto& terms = r.symbolic->residual.terms();
  return terms.empty() ? BigRat() : terms.begin()->second;
}

// Partial sums over the shifted-denominator family: S_A = sum_{a<=A} s_a with
// s_a = sum_x 1/(x^m (x+a)^n). Returns the sums at the requested ascending
// checkpoints; one sweep, per-a truncation bounded by (X+a)^-n X^{1-m}/(m-1)
// pushed below 1e-9.
inline std::vector<NumericValue> key_numeric_partials(
    int m, int n, const std::vector<unsigned long>& checkpoints, RealCtx& ctx) {
  if (m < 2 || n < 2) throw DomainError("key_numeric: needs m,n >= 2");
  if (checkpoints.empty() || checkpoints.front() < 1)
    throw DomainError("key_numeric: checkpoints must start at >= 1");
  const mpfr_prec_t bits = ctx.bits();
  const unsigned long a_max = checkpoints.back();

  auto cutoff = [&](unsigned long a) {
    unsigned long x = 64;
    while (true) {
      double bound = -static_cast<double>(n) * std::log10(double(x + a)) -
                     (m - 1) * std::log10(double(x)) - std::log10(double(m - 1));
      if (bound < -9.0) return x;
      x *= 2;
    }
  };
  const unsigned long x_max = cutoff(1);  // cutoffs shrink as a grows

  std::vector<Real> ipm, ipn;
  ipm.reserve(x_max + 1);
  ipn.reserve(x_max + a_max + 1);
  ipm.emplace_back(bits);  // index 0 unused
  ipn.emplace_back(bits);
  for (unsigned long x = 1; x <= x_max; ++x)
    ipm.push_back(Real::inv_pow(x, static_cast<unsigned long>(m), bits));
  for (unsigned long y = 1; y <= x_max + a_max; ++y)
    ipn.push_back(Real::inv_pow(y, static_cast<unsigned long>(n), bits));

  std::vector<NumericValue> out;
  Real acc(bits);
  unsigned long ops = 0;
  std::size_t next = 0;
  for (unsigned long a = 1; a <= a_max; ++a) {
    const unsigned long xa = cutoff(a);
    Real s(bits);
    for (unsigned long x = 1; x <= xa; ++x) s += ipm[x] * ipn[x + a];
    acc += s;
    ops += xa;
    while (next < checkpoints.size() && checkpoints[next] == a) {
      NumericValue v{acc, Real(kErrPrec)};
      // truncation 1e-9 per a, plus rounding
      v.err = Real::pow10(-9, kErrPrec).mul_ui(a) + ulp_of(acc).mul_ui(2 * ops);
      out.push_back(std::move(v));
      ++next;
    }
  }
  if (next != checkpoints.size())
    throw DomainError("key_numeric: checkpoints must be ascending");
  return out;
}

// Numeric-only check that S_A approaches zeta(m,n) within the analytic tail
// bound zeta(m) * tail_sum(n, A).
inline Report verify_key_numeric(int m, int n, unsigned long a_terms,
                                 RealCtx& ctx) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.identity = to_string(IdentityKind::key_numeric);
  rep.m = m;
  rep.n = n;
  rep.weight = m + n;
  NumericValue s = key_numeric_partials(m, n, {a_terms}, ctx).front();
  NumericValue target = zeta_double(m, n, ctx);
  NumericValue bound = nv_mul(zeta_single(m, ctx), tail_sum(n, a_terms, ctx));

  NumericOutcome num;
  num.t_samples = {};
  num.digits = ctx.digits();
  num.max_residual = (s.value - target.value).abs();
  num.tolerance = bound.value;
  num.err_estimate = s.err + target.err;
  num.within_tol = !(num.tolerance < num.max_residual);
  // the gap must dominate the numerical noise for the bound to mean anything
  Real headroom = num.err_estimate;
  headroom.mul_ui(100);
  num.precision_ok = !(num.tolerance < headroom);
  rep.numeric = num;
  rep.note = "A=" + std::to_string(a_terms) + "; tail bound " +
             bound.value.to_sci(3);
  rep.ms = std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
               .count();
  return rep;
}

// --- batch ------------------------------------------------------------------

struct BatchOptions {
  int max_weight = 10;
  std::vector<IdentityKind> kinds;  // empty: every kind
  VerifyMode mode = VerifyMode::both;
  Axioms axioms = Axioms::extended;
  std::vector<long> t_samples = {0, 1, 2};
  long digits = 50;
  int jobs = 1;
};

struct BatchResult {
  std::vector<Report> reports;

  int exit_code() const {
    int worst = 0;
    for (const Report& r : reports) {
      int c = r.exit_code();
      if (c == 1) return 1;
      if (c > worst) worst = c;
    }
    return worst;
  }
};

inline std::vector<IdentityKind> all_identity_kinds() {
  return {IdentityKind::prima,       IdentityKind::harmonic,
          IdentityKind::shuffle,     IdentityKind::eds,
          IdentityKind::thm1,        IdentityKind::secunda,
          IdentityKind::tertia,      IdentityKind::gkz,
          IdentityKind::gkz_sub,     IdentityKind::sum_formula,
          IdentityKind::partial_fraction, IdentityKind::key_numeric};
}

// Runs every instance of the chosen kinds up to the weight cap. Tasks are
// enumerated deterministically and reports come back in enumeration order
// regardless of the number of worker threads.
inline BatchResult verify_all(const BatchOptions& opt) {
  struct Task {
    IdentityKind kind;
    int m, n;
    long x = 0, a = 0;
    unsigned long terms = 0;
  };
  std::vector<Task> tasks;
  std::vector<IdentityKind> kinds =
      opt.kinds.empty() ? all_identity_kinds() : opt.kinds;
  const int w = opt.max_weight;
  for (IdentityKind k : kinds) {
    switch (k) {
      case IdentityKind::prima:
      case IdentityKind::harmonic:
      case IdentityKind::shuffle:
      case IdentityKind::thm1:
      case IdentityKind::secunda:
      case IdentityKind::tertia:
      case IdentityKind::gkz_sub:
        for (int mw = 4; mw <= w; ++mw)
          for (int m = 2; m <= mw - 2; ++m) tasks.push_back(Task{k, m, mw - m});
        break;
      case IdentityKind::eds:
        for (int mw = 2; mw <= w; ++mw)
          for (int m = 1; m <= mw - 1; ++m) tasks.push_back(Task{k, m, mw - m});
        break;
      case IdentityKind::gkz:
      case IdentityKind::sum_formula:
        for (int mw = 3; mw <= w; ++mw) tasks.push_back(Task{k, mw, 0});
        break;
      case IdentityKind::partial_fraction:
        for (int mw = 2; mw <= (w < 8 ? w : 8); ++mw)
          for (int m = 1; m <= mw - 1; ++m)
            for (long x = 1; x <= 2; ++x)
              for (long a = 1; a <= 2; ++a)
                tasks.push_back(Task{k, m, mw - m, x, a});
        break;
      case IdentityKind::key_numeric:
        for (int mw = 4; mw <= (w < 5 ? w : 5); ++mw)
          for (int m = 2; m <= mw - 2; ++m)
            tasks.push_back(Task{k, m, mw - m, 0, 0, 200});
        break;
    }
  }

  VerifyOptions vopt;
  vopt.mode = opt.mode;
  vopt.axioms = opt.axioms;
  vopt.t_samples = opt.t_samples;

  BatchResult result;
  result.reports.resize(tasks.size());
  std::atomic<std::size_t> cursor{0};
  int jobs = opt.jobs < 1 ? 1 : opt.jobs;
  if (static_cast<std::size_t>(jobs) > tasks.size() && !tasks.empty())
    jobs = static_cast<int>(tasks.size());

  auto worker = [&]() {
    RealCtx ctx(opt.digits);
    while (true) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= tasks.size()) break;
      const Task& t = tasks[i];
      try {
        switch (t.kind) {
          case IdentityKind::partial_fraction:
            result.reports[i] = verify_partial_fraction(t.m, t.n, t.x, t.a);
            break;
          case IdentityKind::key_numeric:
            result.reports[i] = verify_key_numeric(t.m, t.n, t.terms, ctx);
            break;
          default:
            result.reports[i] = verify(t.kind, t.m, t.n, vopt, ctx);
        }
      } catch (const std::exception& e) {
        Report rep;
        rep.identity = to_string(t.kind);
        rep.m = t.m;
        rep.n = t.n;
        rep.error = e.what();
        result.reports[i] = rep;
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  return result;
}

}  // namespace dzeta
