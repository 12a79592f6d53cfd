#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dzeta/algebra.hpp"
#include "dzeta/real.hpp"

namespace dzeta {

// Error bounds ride along at low precision; they only need an order of
// magnitude, never digits.
inline constexpr mpfr_prec_t kErrPrec = 32;

struct NumericValue {
  Real value;
  Real err;  // nonnegative absolute error bound estimate

  NumericValue() : value(64), err(kErrPrec) {}
  explicit NumericValue(Real v) : value(std::move(v)), err(kErrPrec) {}
  NumericValue(Real v, Real e) : value(std::move(v)), err(std::move(e)) {}

  // decimal string, scientific, truncated to the digits the error justifies
  std::string to_string(std::size_t max_digits) const {
    if (value.is_zero()) return "0";
    long ve = value.exp10();
    long ee = err.is_zero() ? ve - static_cast<long>(max_digits) : err.exp10();
    long justified = ve - ee;  // digits above the error floor
    if (justified < 2) justified = 2;
    if (justified > static_cast<long>(max_digits))
      justified = static_cast<long>(max_digits);
    return value.to_sci(static_cast<std::size_t>(justified));
  }
};

inline Real ulp_of(const Real& v) {
  Real u(kErrPrec);
  if (v.is_zero() || v.is_nan()) {
    mpfr_set_ui_2exp(u.raw_mut(), 1, -v.prec(), MPFR_RNDN);
    return u;
  }
  mpfr_set_ui_2exp(u.raw_mut(), 1, mpfr_get_exp(v.raw()) - v.prec() + 1,
                   MPFR_RNDN);
  return u;
}

inline NumericValue nv_add(const NumericValue& a, const NumericValue& b) {
  Real v = a.value + b.value;
  Real e = a.err + b.err + ulp_of(v);
  return NumericValue{std::move(v), std::move(e)};
}
inline NumericValue nv_sub(const NumericValue& a, const NumericValue& b) {
  Real v = a.value - b.value;
  Real e = a.err + b.err + ulp_of(v);
  return NumericValue{std::move(v), std::move(e)};
}
inline NumericValue nv_mul(const NumericValue& a, const NumericValue& b) {
  Real v = a.value * b.value;
  Real e = a.value.abs() * b.err + b.value.abs() * a.err + a.err * b.err +
           ulp_of(v);
  return NumericValue{std::move(v), std::move(e)};
}
inline NumericValue nv_scale(const NumericValue& a, const Real& s) {
  Real v = a.value * s;
  Real e = s.abs() * a.err + ulp_of(v);
  return NumericValue{std::move(v), std::move(e)};
}

inline BigRat rat_factorial(unsigned long n) {
  BigRat r(1);
  for (unsigned long k = 2; k <= n; ++k) r *= BigRat(static_cast<long>(k));
  return r;
}

// Evaluation context: working precision, Euler-Maclaurin policy and caches.
// One context per thread of work; it is not safe to share mutably.
class RealCtx {
 public:
  explicit RealCtx(long digits) : digits_(digits) {
    if (digits_ < 1) throw DomainError("RealCtx: digits must be positive");
    guard_ = 10 + digits_ / 10;
    bits_ = static_cast<mpfr_prec_t>((digits_ + guard_) * 3.3220 + 16);
    em_cutoff_ = static_cast<unsigned long>(digits_ < 50 ? 50 : digits_);
    eps_ = Real::pow10(-(digits_ + guard_ - 2), kErrPrec);
    tol_ = Real::pow10(5 - digits_, kErrPrec);
  }

  long digits() const { return digits_; }
  mpfr_prec_t bits() const { return bits_; }
  unsigned long em_cutoff() const { return em_cutoff_; }
  unsigned em_max_terms() const { return em_max_terms_; }
  const Real& eps() const { return eps_; }
  const Real& tol() const { return tol_; }

  // B_{2j}/(2j)!
  const Real& b2j_over_fact(unsigned j) {
    while (b2f_.size() <= j)
      b2f_.push_back(Real::from_rat(
          bernoulli(2 * b2f_.size()) / rat_factorial(2 * b2f_.size()), bits_));
    return b2f_[j];
  }
  // B_{2j}/(2j), j >= 1
  const Real& b2j_over_2j(unsigned j) {
    while (b22j_.size() <= j)
      b22j_.push_back(
          b22j_.empty()
              ? Real::from_ui(0, bits_)
              : Real::from_rat(bernoulli(2 * b22j_.size()) /
                                   BigRat(2L * static_cast<long>(b22j_.size())),
                               bits_));
    return b22j_[j];
  }

  std::map<long, NumericValue>& zeta_cache() { return zeta_; }
  std::map<std::pair<long, long>, NumericValue>& zeta2_cache() {
    return zeta2_;
  }
  std::optional<NumericValue>& gamma_cache() { return gamma_; }

 private:
  long digits_;
  long guard_;
  mpfr_prec_t bits_;
  unsigned long em_cutoff_;
  unsigned em_max_terms_ = 600;
  Real eps_{kErrPrec};
  Real tol_{kErrPrec};
  std::vector<Real> b2f_;
  std::vector<Real> b22j_;
  std::map<long, NumericValue> zeta_;
  std::map<std::pair<long, long>, NumericValue> zeta2_;
  std::optional<NumericValue> gamma_;
};

// sum_{k=1}^{N} k^{-s} as an exact rational; meant for small N only
inline BigRat harmonic_exact(long s, unsigned long n) {
  if (s < 1) throw DomainError("harmonic_exact: exponent must be >= 1");
  if (n > 5000) throw DomainError("harmonic_exact: N too large for exact sum");
  BigRat h;
  for (unsigned long k = 1; k <= n; ++k)
    h += BigRat(1) / BigRat(static_cast<long>(k)).pow(static_cast<unsigned>(s));
  return h;
}

namespace detail {

// Euler-Maclaurin tail sum_{k >= n0} k^{-s} with the head already consumed.
// Requires n0 large enough for the asymptotic series to reach ctx.eps before
// the terms turn; if it stalls, the head is extended by doubling n0.
inline NumericValue em_power_tail(long s, unsigned long n0, RealCtx& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  unsigned long n = n0;
  Real head(bits);
  Real head_err(kErrPrec);
  for (int rounds = 0; rounds < 64; ++rounds) {
    Real v = Real::inv_pow(n, static_cast<unsigned long>(s - 1), bits);
    v.div_ui(static_cast<unsigned long>(s - 1));
    Real half = Real::inv_pow(n, static_cast<unsigned long>(s), bits);
    half.div_ui(2);
    v += half;
    Real inv_n2 = Real::inv_pow(n, 2, bits);
    Real p = Real::inv_pow(n, static_cast<unsigned long>(s + 1), bits);
    Real rise = Real::from_si(s, bits);  // (s)_{2j-1}
    Real prev_abs(kErrPrec);
    bool done = false;
    Real term_abs(kErrPrec);
    for (unsigned j = 1; j <= ctx.em_max_terms(); ++j) {
      if (j > 1) {
        rise.mul_ui(static_cast<unsigned long>(s + 2 * j - 3));
        rise.mul_ui(static_cast<unsigned long>(s + 2 * j - 2));
      }
      Real term = ctx.b2j_over_fact(j) * rise * p;
      term_abs = term.abs();
      if (j > 1 && !(term_abs < prev_abs)) break;  // series turned
      v += term;
      p *= inv_n2;
      prev_abs = term_abs;
      if (term_abs < ctx.eps()) {
        done = true;
        break;
      }
    }
    if (done) {
      Real e = term_abs + head_err + ulp_of(v).mul_ui(256);
      return NumericValue{head + v, std::move(e)};
    }
    // stalled: fold [n, 2n) into the head and retry
    for (unsigned long k = n; k < 2 * n; ++k)
      head += Real::inv_pow(k, static_cast<unsigned long>(s), bits);
    head_err += ulp_of(head).mul_ui(n);
    n *= 2;
  }
  throw Error("em_power_tail: no convergence");
}

// Euler-Maclaurin tail sum_{k >= n0} log(k) k^{-s}
inline NumericValue em_log_tail(long s, unsigned long n0, RealCtx& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  unsigned long n = n0;
  Real head(bits);
  Real head_err(kErrPrec);
  for (int rounds = 0; rounds < 64; ++rounds) {
    Real logn = log(Real::from_ui(n, bits));
    Real sm1 = Real::from_si(s - 1, bits);
    // integral: n^{1-s} (log n/(s-1) + 1/(s-1)^2)
    Real v = Real::inv_pow(n, static_cast<unsigned long>(s - 1), bits) *
             (logn / sm1 + Real::from_ui(1, bits) / (sm1 * sm1));
    Real fn = Real::inv_pow(n, static_cast<unsigned long>(s), bits) * logn;
    fn.div_ui(2);
    v += fn;
    // f^{(r)}(x) = x^{-s-r} (alpha_r log x + beta_r)
    Real alpha = Real::from_ui(1, bits), beta(bits);
    Real xpow = Real::inv_pow(n, static_cast<unsigned long>(s + 1), bits);
    Real inv_n = Real::inv_pow(n, 1, bits);
    Real prev_abs(kErrPrec), term_abs(kErrPrec);
    bool done = false;
    long r = 0;
    for (unsigned j = 1; j <= ctx.em_max_terms(); ++j) {
      // advance derivatives to r = 2j-1
      while (r < 2 * static_cast<long>(j) - 1) {
        Real na = -Real::from_si(s + r, bits) * alpha;
        beta = alpha - Real::from_si(s + r, bits) * beta;
        alpha = std::move(na);
        ++r;
      }
      Real term = ctx.b2j_over_fact(j) * xpow * (alpha * logn + beta);
      term_abs = term.abs();
      if (j > 1 && !(term_abs < prev_abs)) break;
      v -= term;
      xpow *= inv_n;
      xpow *= inv_n;
      prev_abs = term_abs;
      if (term_abs < ctx.eps()) {
        done = true;
        break;
      }
    }
    if (done) {
      Real e = term_abs + head_err + ulp_of(v).mul_ui(256);
      return NumericValue{head + v, std::move(e)};
    }
    for (unsigned long k = n; k < 2 * n; ++k)
      head += log(Real::from_ui(k, bits)) *
              Real::inv_pow(k, static_cast<unsigned long>(s), bits);
    head_err += ulp_of(head).mul_ui(n);
    n *= 2;
  }
  throw Error("em_log_tail: no convergence");
}

}  // namespace detail

// sum_{k > K} k^{-s}, s >= 2
inline NumericValue tail_sum(long s, unsigned long k, RealCtx& ctx) {
  if (s < 2) throw DomainError("tail_sum: diverges for s < 2");
  const mpfr_prec_t bits = ctx.bits();
  unsigned long kx = k < ctx.em_cutoff() ? ctx.em_cutoff() : k;
  Real head(bits);
  for (unsigned long i = k + 1; i <= kx; ++i)
    head += Real::inv_pow(i, static_cast<unsigned long>(s), bits);
  NumericValue tail = detail::em_power_tail(s, kx + 1, ctx);
  Real v = head + tail.value;
  Real e = tail.err + ulp_of(v).mul_ui(kx - k + 2);
  return NumericValue{std::move(v), std::move(e)};
}

// sum_{k > K} log(k) k^{-s}, s >= 2
inline NumericValue log_tail_sum(long s, unsigned long k, RealCtx& ctx) {
  if (s < 2) throw DomainError("log_tail_sum: diverges for s < 2");
  const mpfr_prec_t bits = ctx.bits();
  unsigned long kx = k < ctx.em_cutoff() ? ctx.em_cutoff() : k;
  Real head(bits);
  for (unsigned long i = k + 1; i <= kx; ++i)
    head += log(Real::from_ui(i, bits)) *
            Real::inv_pow(i, static_cast<unsigned long>(s), bits);
  NumericValue tail = detail::em_log_tail(s, kx + 1, ctx);
  Real v = head + tail.value;
  Real e = tail.err + ulp_of(v).mul_ui(kx - k + 2);
  return NumericValue{std::move(v), std::move(e)};
}

// zeta(s) for integer s >= 2: exact head to the cutoff, EM tail
inline NumericValue zeta_single(long s, RealCtx& ctx) {
  if (s < 2) throw DivergentValue("zeta_single: s must be >= 2");
  auto it = ctx.zeta_cache().find(s);
  if (it != ctx.zeta_cache().end()) return it->second;
  const unsigned long k = ctx.em_cutoff();
  NumericValue head;
  if (k <= 5000 && static_cast<unsigned long>(s) * k <= 200000) {
    head = NumericValue{Real::from_rat(harmonic_exact(s, k), ctx.bits()),
                        ulp_of(Real(ctx.bits()))};
    head.err = ulp_of(head.value);
  } else {
    Real h(ctx.bits());
    for (unsigned long i = 1; i <= k; ++i)
      h += Real::inv_pow(i, static_cast<unsigned long>(s), ctx.bits());
    head = NumericValue{std::move(h), Real(kErrPrec)};
    head.err = ulp_of(head.value).mul_ui(k);
  }
  NumericValue z = nv_add(head, tail_sum(s, k, ctx));
  ctx.zeta_cache().emplace(s, z);
  return z;
}

// Euler's constant via the harmonic-number expansion with an exact head:
// gamma = H_N - log N - 1/(2N) + sum_j B_{2j}/(2j) N^{-2j} ...
inline NumericValue euler_gamma(RealCtx& ctx) {
  if (ctx.gamma_cache()) return *ctx.gamma_cache();
  const mpfr_prec_t bits = ctx.bits();
  unsigned long n = static_cast<unsigned long>(
      200 > 2 * (ctx.digits() + 12) ? 200 : 2 * (ctx.digits() + 12));
  if (n > 5000) n = 5000;  // exact-head ceiling; plenty for supported digits
  Real v = Real::from_rat(harmonic_exact(1, n), bits);
  v -= log(Real::from_ui(n, bits));
  Real half = Real::inv_pow(n, 1, bits);
  half.div_ui(2);
  v -= half;
  Real npow = Real::inv_pow(n, 2, bits);
  Real inv_n2 = npow;
  Real term_abs(kErrPrec), prev_abs(kErrPrec);
  for (unsigned j = 1; j <= ctx.em_max_terms(); ++j) {
    Real term = ctx.b2j_over_2j(j) * npow;
    term_abs = term.abs();
    if (j > 1 && !(term_abs < prev_abs)) break;
    v += term;
    npow *= inv_n2;
    prev_abs = term_abs;
    if (term_abs < ctx.eps()) break;
  }
  NumericValue g{std::move(v), term_abs + ulp_of(Real(bits)).mul_ui(64)};
  g.err = term_abs + ulp_of(g.value).mul_ui(64);
  ctx.gamma_cache() = g;
  return g;
}

// sum_{k=1}^{N} k^{-s}; exact for tiny N, EM-assisted for large N
inline NumericValue harmonic(long s, unsigned long n, RealCtx& ctx) {
  if (s < 1) throw DomainError("harmonic: exponent must be >= 1");
  const mpfr_prec_t bits = ctx.bits();
  if (n == 0) return NumericValue{Real(bits), Real(kErrPrec)};
  if (s == 1) {
    if (n <= ctx.em_cutoff() || n <= 5000) {
      if (n <= 2000)
        return NumericValue{Real::from_rat(harmonic_exact(1, n), bits),
                            ulp_of(Real(bits))};
      Real h(bits);
      for (unsigned long k = 1; k <= n; ++k) h += Real::inv_pow(k, 1, bits);
      NumericValue r{std::move(h), Real(kErrPrec)};
      r.err = ulp_of(r.value).mul_ui(n);
      return r;
    }
    // H_N = log N + gamma + 1/(2N) - sum_j B_{2j}/(2j) N^{-2j} ...
    NumericValue g = euler_gamma(ctx);
    Real v = log(Real::from_ui(n, bits)) + g.value;
    Real half = Real::inv_pow(n, 1, bits);
    half.div_ui(2);
    v += half;
    Real npow = Real::inv_pow(n, 2, bits);
    Real inv_n2 = npow;
    Real term_abs(kErrPrec), prev_abs(kErrPrec);
    for (unsigned j = 1; j <= ctx.em_max_terms(); ++j) {
      Real term = ctx.b2j_over_2j(j) * npow;
      term_abs = term.abs();
      if (j > 1 && !(term_abs < prev_abs)) break;
      v -= term;
      npow *= inv_n2;
      prev_abs = term_abs;
      if (term_abs < ctx.eps()) break;
    }
    return NumericValue{std::move(v),
                        g.err + term_abs + ulp_of(Real(bits)).mul_ui(64)};
  }
  if (n <= ctx.em_cutoff()) {
    Real h(bits);
    for (unsigned long k = 1; k <= n; ++k)
      h += Real::inv_pow(k, static_cast<unsigned long>(s), bits);
    NumericValue r{std::move(h), Real(kErrPrec)};
    r.err = ulp_of(r.value).mul_ui(n + 1);
    return r;
  }
  return nv_sub(zeta_single(s, ctx), tail_sum(s, n, ctx));
}

// zeta(a,b) = sum_{0<k1<k2} k1^{-a} k2^{-b}: exact double head up to the
// cutoff, then the inner harmonic tail is expanded by Euler-Maclaurin so the
// outer tails reduce to single-variable tail sums.
inline NumericValue zeta_double(long a, long b, RealCtx& ctx) {
  if (a < 1) throw DomainError("zeta_double: first index must be >= 1");
  if (b < 2) throw DivergentValue("zeta_double: second index must be >= 2");
  auto key = std::make_pair(a, b);
  auto it = ctx.zeta2_cache().find(key);
  if (it != ctx.zeta2_cache().end()) return it->second;
  const mpfr_prec_t bits = ctx.bits();
  const unsigned long k = ctx.em_cutoff();

  NumericValue head;
  if (k <= 128) {
    BigRat h, s;
    for (unsigned long k2 = 2; k2 <= k; ++k2) {
      h += BigRat(1) /
           BigRat(static_cast<long>(k2 - 1)).pow(static_cast<unsigned>(a));
      s += h / BigRat(static_cast<long>(k2)).pow(static_cast<unsigned>(b));
    }
    head = NumericValue{Real::from_rat(s, bits), Real(kErrPrec)};
    head.err = ulp_of(head.value);
  } else {
    Real h(bits), s(bits);
    for (unsigned long k2 = 2; k2 <= k; ++k2) {
      h += Real::inv_pow(k2 - 1, static_cast<unsigned long>(a), bits);
      s += h * Real::inv_pow(k2, static_cast<unsigned long>(b), bits);
    }
    head = NumericValue{std::move(s), Real(kErrPrec)};
    head.err = ulp_of(head.value).mul_ui(3 * k);
  }

  NumericValue tail;
  if (a >= 2) {
    // H^(a)_{k-1} = zeta(a) - sum_{i>=k} i^{-a}; expand the inner tail at k
    NumericValue t1 = nv_mul(zeta_single(a, ctx), tail_sum(b, k, ctx));
    NumericValue piece = nv_scale(
        tail_sum(a + b - 1, k, ctx),
        Real::from_rat(BigRat(1) / BigRat(a - 1), bits));
    piece = nv_add(piece, nv_scale(tail_sum(a + b, k, ctx),
                                   Real::from_rat(BigRat(1, 2), bits)));
    Real rise = Real::from_si(a, bits);
    Real prev_mag(kErrPrec);
    for (unsigned j = 1; j <= ctx.em_max_terms(); ++j) {
      if (j > 1) {
        rise.mul_ui(static_cast<unsigned long>(a + 2 * j - 3));
        rise.mul_ui(static_cast<unsigned long>(a + 2 * j - 2));
      }
      NumericValue ts = tail_sum(a + b + 2 * j - 1, k, ctx);
      NumericValue term = nv_scale(ts, ctx.b2j_over_fact(j) * rise);
      Real mag = term.value.abs();
      if (j > 1 && !(mag < prev_mag)) {
        piece.err += prev_mag;  // series turned; bound by the last used term
        break;
      }
      piece = nv_add(piece, term);
      prev_mag = mag;
      if (mag < ctx.eps()) {
        piece.err += mag;
        break;
      }
    }
    tail = nv_sub(t1, piece);
  } else {
    // H_{k-1} = log k + gamma - 1/(2k) - sum_j B_{2j}/(2j) k^{-2j} ...
    NumericValue g = euler_gamma(ctx);
    tail = log_tail_sum(b, k, ctx);
    tail = nv_add(tail, nv_scale(tail_sum(b, k, ctx), g.value));
    tail.err += g.err;  // gamma error times tail_sum < 1, absorb directly
    tail = nv_sub(tail, nv_scale(tail_sum(b + 1, k, ctx),
                                 Real::from_rat(BigRat(1, 2), bits)));
    Real prev_mag(kErrPrec);
    for (unsigned j = 1; j <= ctx.em_max_terms(); ++j) {
      NumericValue ts = tail_sum(b + 2 * j, k, ctx);
      NumericValue term = nv_scale(ts, ctx.b2j_over_2j(j));
      Real mag = term.value.abs();
      if (j > 1 && !(mag < prev_mag)) {
        tail.err += prev_mag;
        break;
      }
      tail = nv_sub(tail, term);
      prev_mag = mag;
      if (mag < ctx.eps()) {
        tail.err += mag;
        break;
      }
    }
  }

  NumericValue z = nv_add(head, tail);
  ctx.zeta2_cache().emplace(key, z);
  return z;
}

// literal truncated double sum over 0 < k1 < k2 <= N, single pass
inline NumericValue zeta_double_bruteforce(long a, long b, unsigned long n,
                                           RealCtx& ctx) {
  if (a < 1) throw DomainError("zeta_double_bruteforce: first index >= 1");
  if (b < 2) throw DivergentValue("zeta_double_bruteforce: second index >= 2");
  const mpfr_prec_t bits = ctx.bits();
  Real h(bits), s(bits);
  for (unsigned long k2 = 2; k2 <= n; ++k2) {
    h += Real::inv_pow(k2 - 1, static_cast<unsigned long>(a), bits);
    s += h * Real::inv_pow(k2, static_cast<unsigned long>(b), bits);
  }
  NumericValue r{std::move(s), Real(kErrPrec)};
  r.err = ulp_of(r.value).mul_ui(3 * n + 3);
  return r;
}

// Evaluate a formal value at T = t. Every atom must be convergent, which
// holds for anything the constructors here produce.
inline NumericValue eval_formal(const FormalValue& v, long t, RealCtx& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  NumericValue acc{Real(bits), Real(kErrPrec)};
  Real tr = Real::from_si(t, bits);
  for (const auto& [mono, coef] : v.terms()) {
    NumericValue term{Real::from_rat(coef, bits), Real(kErrPrec)};
    term.err = ulp_of(term.value);
    for (int e = 0; e < mono.t_exp; ++e) term = nv_scale(term, tr);
    switch (mono.atom.kind) {
      case Atom::Kind::unit:
        break;
      case Atom::Kind::single:
        term = nv_mul(term, zeta_single(mono.atom.a, ctx));
        break;
      case Atom::Kind::dbl:
        term = nv_mul(term, zeta_double(mono.atom.a, mono.atom.b, ctx));
        break;
    }
    acc = nv_add(acc, term);
  }
  return acc;
}

// T^t coefficient of a formal value, with the T factor stripped
inline FormalValue t_slice(const FormalValue& v, int t) {
  FormalValue out;
  for (const auto& [mono, coef] : v.terms())
    if (mono.t_exp == t) out.add(Mono{0, mono.atom}, coef);
  return out;
}

}  // namespace dzeta
