// Acceptance gate: ten end-to-end criteria, one PASS/FAIL line each.
// Tolerances are pinned here; a FAIL line means the stated claim did not
// hold when this binary ran.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "dzeta/dzeta.hpp"

using namespace dzeta;

namespace {

void report(int n, bool ok, const std::string& desc) {
  std::printf("ACCEPTANCE %d: %s - %s\n", n, ok ? "PASS" : "FAIL",
              desc.c_str());
  std::fflush(stdout);
  EXPECT_TRUE(ok) << "criterion " << n << ": " << desc;
}

Real tol10(long e) { return Real::pow10(e, 64); }

bool in_span(const Report& rep) {
  return rep.error.empty() && rep.symbolic &&
         rep.symbolic->status != SymStatus::not_in_span;
}

TEST(Acceptance, Criterion1ClosedFormCertified) {
  bool ok = true;
  for (int w = 4; w <= 16; ++w) {
    RelationSet set = RelationSet::build(w, Axioms::extended);
    std::map<RowId, FormalValue> rows;
    for (const RelationRow& r : set.rows()) rows[r.id] = r.value;
    for (int m = 2; m <= w - 2; ++m) {
      const int n = w - m;
      FormalValue residual = build_p(m, n) - double_zeta(m, n);
      RelationSet::MemberResult mr = set.member(residual);
      if (!mr.in_span || mr.certificate.empty()) {
        ok = false;
        continue;
      }
      FormalValue replay;
      for (const CertTerm& t : mr.certificate) replay += t.coef * rows.at(t.row);
      ok = ok && replay == residual;
    }
  }
  RelationSet w4 = RelationSet::build(4, Axioms::extended);
  RelationSet::MemberResult spot = w4.member(build_p(2, 2) - double_zeta(2, 2));
  ok = ok && spot.in_span && spot.certificate.size() == 2 &&
       spot.certificate[0].row == RowId::e(2, 2) &&
       spot.certificate[0].coef == BigRat(-1) &&
       spot.certificate[1].row == RowId::s(4) &&
       spot.certificate[1].coef == BigRat(-2);
  report(1, ok,
         "closed form for zeta(m,n) certified over the extended span with "
         "replayed certificates, weights 4..16");
}

TEST(Acceptance, Criterion2StrictSpanRejects) {
  RelationSet strict = RelationSet::build(4, Axioms::strict);
  RelationSet::MemberResult mr =
      strict.member(build_p(2, 2) - double_zeta(2, 2));
  report(2, !mr.in_span && !mr.residue.is_zero(),
         "closed form at (2,2) falls outside the strict span");
}

TEST(Acceptance, Criterion3FunctionalEquation) {
  bool ok = true;
  for (int k = 3; k <= 20; ++k)
    for (const FormalValue& c : check_gkz(k)) ok = ok && c.is_zero();
  RealCtx ctx(20);
  VerifyOptions sym;
  sym.mode = VerifyMode::symbolic;
  for (int m = 2; m + 2 <= 16; ++m)
    for (int n = 2; m + n <= 16; ++n)
      ok = ok && in_span(verify(IdentityKind::gkz_sub, m, n, sym, ctx));
  report(3, ok,
         "generating-function equation vanishes identically for k <= 20 and "
         "its substitution instances stay in the span to weight 16");
}

TEST(Acceptance, Criterion4NormalFormsAgree) {
  RealCtx ctx(20);
  VerifyOptions sym;
  sym.mode = VerifyMode::symbolic;
  bool ok = true;
  for (int m = 2; m + 2 <= 16; ++m)
    for (int n = 2; m + n <= 16; ++n) {
      Report sec = verify(IdentityKind::secunda, m, n, sym, ctx);
      Report ter = verify(IdentityKind::tertia, m, n, sym, ctx);
      Report fwd = verify(IdentityKind::thm1, m, n, sym, ctx);
      Report swp = verify(IdentityKind::thm1, n, m, sym, ctx);
      ok = ok && in_span(sec) && in_span(ter) && in_span(fwd) && in_span(swp);
      if (!ok) break;
      ok = ok && sec.symbolic->residual ==
                     fwd.symbolic->residual + swp.symbolic->residual;
      ok = ok && ter.symbolic->residual == fwd.symbolic->residual;
    }
  report(4, ok,
         "second and third closed forms reduce to the first: residuals split "
         "and normal forms coincide, weights to 16");
}

TEST(Acceptance, Criterion5FiftyDigitCrossChecks) {
  RealCtx ctx(50);
  bool ok = true;

  Real d1 = (zeta_double(1, 2, ctx).value - zeta_single(3, ctx).value).abs();
  ok = ok && d1 < tol10(-40);

  Real z2 = zeta_single(2, ctx).value;
  Real want22 = z2 * z2 - zeta_single(4, ctx).value;
  want22.div_ui(2);
  Real d2 = (zeta_double(2, 2, ctx).value - want22).abs();
  ok = ok && d2 < tol10(-40);

  FormalValue p22 = build_p(2, 2);
  Real z22 = zeta_double(2, 2, ctx).value;
  for (long t : {0L, 1L, 2L})
    ok = ok && (eval_formal(p22, t, ctx).value - z22).abs() < tol10(-40);

  for (int w = 3; w <= 12; ++w) {
    RelationSet set = RelationSet::build(w, Axioms::extended);
    for (const RelationRow& r : set.rows())
      ok = ok && eval_formal(r.value, 0, ctx).value.abs() < tol10(-45);
  }
  report(5, ok,
         "50-digit numerics: zeta(1,2)=zeta(3), zeta(2,2) from products, the "
         "(2,2) closed form, and every relation row through weight 12");
}

TEST(Acceptance, Criterion6SumFormula) {
  RealCtx ctx(50);
  bool ok = true;
  for (int w = 3; w <= 12; ++w) {
    FormalValue s = row_s(w).value;
    ok = ok && eval_formal(s, 0, ctx).value.abs() < tol10(-40);
    ok = ok && RelationSet::build(w, Axioms::extended).member(s).in_span;
    if (w <= 8)
      ok = ok && !RelationSet::build(w, Axioms::strict).member(s).in_span;
  }
  report(6, ok,
         "sum formula holds to 1e-40 for weights 3..12, sits inside the "
         "extended span and outside the strict one");
}

TEST(Acceptance, Criterion7PartialFractionSweep) {
  bool ok = true;
  long cases = 0;
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n)
      for (long x = 1; x <= 20; ++x)
        for (long a = 1; a <= 20; ++a) {
          Report rep = verify_partial_fraction(m, n, x, a);
          ++cases;
          ok = ok && rep.error.empty() && rep.symbolic &&
               rep.symbolic->status == SymStatus::exact_zero;
        }
  ok = ok && cases == 14400;

  // orientation regression: swapping the exponents at (1,2,1,1) gives 1/2,
  // not the correct 1/4
  Report reg = verify_partial_fraction(1, 2, 1, 1);
  ok = ok &&
       reg.note.find("swapped orientation differs") != std::string::npos;
  BigRat lhs = BigRat(1) / (BigRat(1).pow(1) * BigRat(2).pow(2));
  BigRat swapped = BigRat(1) / (BigRat(1).pow(2) * BigRat(2).pow(1));
  ok = ok && lhs == BigRat(1) / BigRat(4) &&
       swapped == BigRat(1) / BigRat(2) && !(lhs == swapped);
  report(7, ok,
         "partial-fraction identity exact over all 14400 cases with "
         "n,m <= 6 and x,a <= 20; orientation regression pinned at 1/4 vs 1/2");
}

TEST(Acceptance, Criterion8TelescopedPartialSums) {
  RealCtx ctx(30);
  const std::vector<unsigned long> cps = {10, 50, 100, 250, 500, 1000};
  std::vector<NumericValue> partials = key_numeric_partials(2, 2, cps, ctx);
  Real z22 = zeta_double(2, 2, ctx).value;
  bool ok = partials.size() == cps.size();
  std::vector<Real> gaps;
  for (const NumericValue& p : partials)
    gaps.push_back((p.value - z22).abs());
  for (std::size_t i = 1; i < gaps.size(); ++i)
    ok = ok && gaps[i] < gaps[i - 1];
  ok = ok && !gaps.empty() && gaps.back() < tol10(-2);
  report(8, ok,
         "outer partial sums of the telescoped double series close on "
         "zeta(2,2) within 1e-2 with monotonically shrinking gap");
}

TEST(Acceptance, Criterion9DivergentWordFits) {
  bool ok = true;
  {
    RealCtx ctx(30);
    FitResult res = reg_fit(FitKind::harmonic, 2, ctx,
                            FitSchedule::defaults(FitKind::harmonic));
    Real z2 = zeta_single(2, ctx).value;
    Real z3 = zeta_single(3, ctx).value;
    ok = ok && (res.b1 - z2).abs() < tol10(-4);
    ok = ok && (res.b0 + z3 + z3).abs() < tol10(-3);
  }
  {
    RealCtx ctx(20);
    FitResult res =
        reg_fit(FitKind::abel, 2, ctx, FitSchedule::defaults(FitKind::abel));
    Real z3 = zeta_single(3, ctx).value;
    ok = ok && (res.b0 + z3 + z3).abs() < tol10(-2);
  }
  report(9, ok,
         "truncation fit recovers slope zeta(2) (1e-4) and constant "
         "-2*zeta(3) (1e-3); damping fit matches the constant to 1e-2");
}

TEST(Acceptance, Criterion10TailsAndIntegerSuites) {
  RealCtx ctx(30);
  const unsigned long N = 2000;
  bool ok = true;
  for (long a = 1; a + 2 <= 8; ++a)
    for (long b = 2; a + b <= 8; ++b) {
      NumericValue em = zeta_double(a, b, ctx);
      NumericValue brute = zeta_double_bruteforce(a, b, N, ctx);
      Real diff = (em.value - brute.value).abs();
      Real bound = a >= 2 ? zeta_single(a, ctx).value *
                                tail_sum(b, N, ctx).value
                          : tail_sum(b, N, ctx).value +
                                log_tail_sum(b, N, ctx).value;
      ok = ok && diff < bound;
    }

  for (unsigned long n = 1; n <= 64; ++n) {
    ok = ok && binom(n, 0) == BigRat(1) && binom(n, n) == BigRat(1);
    for (unsigned long k = 1; k < n; ++k)
      ok = ok && binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k);
  }
  for (unsigned k = 3; k <= 63; k += 2) ok = ok && bernoulli(k) == BigRat(0);
  for (unsigned m = 1; m <= 40; ++m) {
    BigRat s;
    for (unsigned j = 0; j <= m; ++j) s += binom(m + 1, j) * bernoulli(j);
    ok = ok && s == BigRat(0);
  }
  report(10, ok,
         "tail-accelerated double sums match brute force within analytic "
         "bounds; Pascal, odd-zero, and recurrence suites exhaustive");
}

}  // namespace
