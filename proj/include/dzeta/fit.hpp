#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "dzeta/numerics.hpp"

namespace dzeta {

// Two independent routes to the regularized (a,1) words: 'harmonic' truncates
// the divergent series at N and fits against log N + gamma; 'abel' damps it
// with (1-eps)^k and fits against -log eps.
enum class FitKind { harmonic, abel };

inline const char* to_string(FitKind k) {
  return k == FitKind::harmonic ? "harmonic" : "abel";
}

struct FitSchedule {
  std::vector<unsigned long> ns;  // harmonic cutoffs, ascending
  std::vector<BigRat> epsilons;   // abel dampings, descending

  static FitSchedule defaults(FitKind k) {
    FitSchedule s;
    if (k == FitKind::harmonic) {
      s.ns = {62500, 125000, 250000, 500000, 1000000};
    } else {
      s.epsilons = {BigRat(1, 1000), BigRat(3, 10000), BigRat(1, 10000),
                    BigRat(3, 100000), BigRat(1, 100000)};
    }
    return s;
  }

  std::size_t size(FitKind k) const {
    return k == FitKind::harmonic ? ns.size() : epsilons.size();
  }
};

struct FitResult {
  FitKind kind = FitKind::harmonic;
  int a = 1;
  bool quadratic = false;  // degree-2 double-word model (only a = 1)
  // double word (a,1): y ~ b2 x^2 + b1 x + b0
  Real b2, b1, b0;
  // single word a: y ~ c1 x + c0
  Real c1, c0;
  // references evaluated from the regularized words under T -> x
  Real ref_b2, ref_b1, ref_b0, ref_c1, ref_c0;
  std::vector<Real> xs;  // sample abscissae, for diagnostics
};

namespace detail {

struct Line {
  Real c1, c0;
};

inline Line ls_line(const std::vector<Real>& xs, const std::vector<Real>& ys,
                    mpfr_prec_t bits) {
  Real sx(bits), sy(bits), sxx(bits), sxy(bits);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  Real n = Real::from_ui(xs.size(), bits);
  Real den = n * sxx - sx * sx;
  Line l{Real(bits), Real(bits)};
  l.c1 = (n * sxy - sx * sy) / den;
  l.c0 = (sy - l.c1 * sx) / n;
  return l;
}

// least-squares quadratic via 3x3 normal equations (Cramer)
inline void ls_quad(const std::vector<Real>& xs, const std::vector<Real>& ys,
                    mpfr_prec_t bits, Real& b2, Real& b1, Real& b0) {
  Real s0 = Real::from_ui(xs.size(), bits);
  Real s1(bits), s2(bits), s3(bits), s4(bits);
  Real t0(bits), t1(bits), t2(bits);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Real& x = xs[i];
    Real x2 = x * x;
    s1 += x;
    s2 += x2;
    s3 += x2 * x;
    s4 += x2 * x2;
    t0 += ys[i];
    t1 += x * ys[i];
    t2 += x2 * ys[i];
  }
  auto det3 = [](const Real& a, const Real& b, const Real& c, const Real& d,
                 const Real& e, const Real& f, const Real& g, const Real& h,
                 const Real& i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
  };
  // unknowns ordered (b0, b1, b2)
  Real det = det3(s0, s1, s2, s1, s2, s3, s2, s3, s4);
  b0 = det3(t0, s1, s2, t1, s2, s3, t2, s3, s4) / det;
  b1 = det3(s0, t0, s2, s1, t1, s3, s2, t2, s4) / det;
  b2 = det3(s0, s1, t0, s1, s2, t1, s2, s3, t2) / det;
}

// line through the last two points
inline Line two_point(const std::vector<Real>& xs, const std::vector<Real>& ys,
                      mpfr_prec_t bits) {
  std::size_t n = xs.size();
  Line l{Real(bits), Real(bits)};
  l.c1 = (ys[n - 1] - ys[n - 2]) / (xs[n - 1] - xs[n - 2]);
  l.c0 = ys[n - 1] - l.c1 * xs[n - 1];
  return l;
}

// exact quadratic through the last three points (Lagrange)
inline void quad_through(const std::vector<Real>& xs,
                         const std::vector<Real>& ys, mpfr_prec_t bits,
                         Real& b2, Real& b1, Real& b0) {
  std::size_t n = xs.size();
  const Real &x0 = xs[n - 3], &x1 = xs[n - 2], &x2 = xs[n - 1];
  const Real &y0 = ys[n - 3], &y1 = ys[n - 2], &y2 = ys[n - 1];
  Real d0 = (x0 - x1) * (x0 - x2);
  Real d1 = (x1 - x0) * (x1 - x2);
  Real d2 = (x2 - x0) * (x2 - x1);
  Real a0 = y0 / d0, a1 = y1 / d1, a2 = y2 / d2;
  b2 = a0 + a1 + a2;
  b1 = -(a0 * (x1 + x2) + a1 * (x0 + x2) + a2 * (x0 + x1));
  b0 = a0 * x1 * x2 + a1 * x0 * x2 + a2 * x0 * x1;
  (void)bits;
}

}  // namespace detail

// Truncation / damping samples of the divergent words zeta(a) and the double
// word ending in 1, fitted against the matching regularized references.
inline FitResult reg_fit(FitKind kind, int a, RealCtx& ctx,
                         const FitSchedule& sched) {
  if (a < 1) throw DomainError("reg_fit: index must be >= 1");
  if (sched.size(kind) < 3)
    throw ScheduleTooShort("reg_fit: need at least 3 sample points");
  const mpfr_prec_t bits = ctx.bits();

  FitResult res;
  res.kind = kind;
  res.a = a;
  res.quadratic = (a == 1);

  std::vector<Real> xs, y_single, y_double;
  if (kind == FitKind::harmonic) {
    NumericValue g = euler_gamma(ctx);
    std::vector<unsigned long> ns = sched.ns;
    unsigned long max_n = ns.back();
    Real part(bits), s(bits);
    std::size_t next = 0;
    for (unsigned long k = 1; k <= max_n && next < ns.size(); ++k) {
      // double word first: uses the inner sum through k-1
      Real inv_k = Real::inv_pow(k, 1, bits);
      s += part * inv_k;
      part += a == 1 ? inv_k
                     : Real::inv_pow(k, static_cast<unsigned long>(a), bits);
      if (k == ns[next]) {
        xs.push_back(log(Real::from_ui(k, bits)) + g.value);
        y_single.push_back(part);
        y_double.push_back(s);
        ++next;
      }
    }
    res.xs = xs;
    detail::Line ls = detail::ls_line(xs, y_single, bits);
    res.c1 = ls.c1;
    res.c0 = ls.c0;
    if (a == 1) {
      detail::ls_quad(xs, y_double, bits, res.b2, res.b1, res.b0);
    } else {
      detail::Line ld = detail::ls_line(xs, y_double, bits);
      res.b1 = ld.c1;
      res.b0 = ld.c0;
      res.b2 = Real(bits);
    }
  } else {
    for (const BigRat& eps : sched.epsilons) {
      if (!(eps > BigRat(0)) || !(eps < BigRat(1)))
        throw DomainError("reg_fit: abel damping must lie in (0,1)");
      double eps_d = eps.to_double();
      // truncation: (1-eps)^M / (M eps) below ~1e-26 of the result scale
      unsigned long m_cut = static_cast<unsigned long>(
          std::ceil((26.0 * 2.302585 + 2.0 * std::log(1.0 / eps_d)) / eps_d));
      Real q = Real::from_rat(BigRat(1) - eps, bits);
      Real qk = Real::from_ui(1, bits);
      Real part(bits), s(bits), single(bits);
      for (unsigned long k = 1; k <= m_cut; ++k) {
        qk *= q;
        Real inv_ka = a == 1
                          ? Real::inv_pow(k, 1, bits)
                          : Real::inv_pow(k, static_cast<unsigned long>(a), bits);
        single += qk * inv_ka;
        Real t = part * qk;
        t.div_ui(k);
        s += t;
        part += inv_ka;
      }
      xs.push_back(-log(Real::from_rat(eps, bits)));
      y_single.push_back(single);
      y_double.push_back(s);
    }
    res.xs = xs;
    detail::Line ls = detail::two_point(xs, y_single, bits);
    res.c1 = ls.c1;
    res.c0 = ls.c0;
    if (a == 1) {
      detail::quad_through(xs, y_double, bits, res.b2, res.b1, res.b0);
    } else {
      detail::Line ld = detail::two_point(xs, y_double, bits);
      res.b1 = ld.c1;
      res.b0 = ld.c0;
      res.b2 = Real(bits);
    }
  }

  // references: T-degree slices of the regularized words
  Rule rule = kind == FitKind::harmonic ? Rule::stuffle : Rule::shuffle;
  FormalValue w = reg_double(a, 1, rule);
  res.ref_b0 = eval_formal(t_slice(w, 0), 0, ctx).value;
  res.ref_b1 = eval_formal(t_slice(w, 1), 0, ctx).value;
  res.ref_b2 = eval_formal(t_slice(w, 2), 0, ctx).value;
  FormalValue sw = reg_single(a);
  res.ref_c0 = eval_formal(t_slice(sw, 0), 0, ctx).value;
  res.ref_c1 = eval_formal(t_slice(sw, 1), 0, ctx).value;
  return res;
}

}  // namespace dzeta
