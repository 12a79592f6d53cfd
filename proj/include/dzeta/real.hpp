#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

#include "dzeta/rational.hpp"

namespace dzeta {

// MPFR float with per-value precision. Binary operations round to the wider
// of the two operand precisions (MPFR_RNDN throughout).
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64) {
    mpfr_init2(x_, prec);
    mpfr_set_zero(x_, 1);
  }

  Real(const Real& o) {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
  }

  Real(Real&& o) noexcept {
    mpfr_init2(x_, 2);
    mpfr_swap(x_, o.x_);
  }

  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(x_, mpfr_get_prec(o.x_));
      mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
  }

  Real& operator=(Real&& o) noexcept {
    mpfr_swap(x_, o.x_);
    return *this;
  }

  ~Real() { mpfr_clear(x_); }

  static Real from_ui(unsigned long v, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_ui(r.x_, v, MPFR_RNDN);
    return r;
  }
  static Real from_si(long v, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.x_, v, MPFR_RNDN);
    return r;
  }
  static Real from_rat(const BigRat& q, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.x_, q.raw(), MPFR_RNDN);
    return r;
  }
  // parses decimal/scientific notation
  static Real from_string(const std::string& s, mpfr_prec_t prec) {
    Real r(prec);
    if (mpfr_set_str(r.x_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw DomainError("Real: cannot parse \"" + s + "\"");
    return r;
  }
  // 10^e
  static Real pow10(long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_ui_pow_ui(r.x_, 10, static_cast<unsigned long>(e < 0 ? -e : e),
                   MPFR_RNDN);
    if (e < 0) mpfr_ui_div(r.x_, 1, r.x_, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
  bool is_zero() const { return mpfr_zero_p(x_) != 0; }
  bool is_nan() const { return mpfr_nan_p(x_) != 0; }
  int sgn() const { return mpfr_sgn(x_); }

  friend Real operator+(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
  }
  Real operator-() const {
    Real r(prec());
    mpfr_neg(r.x_, x_, MPFR_RNDN);
    return r;
  }

  Real& operator+=(const Real& o) {
    mpfr_add(x_, x_, o.x_, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Real& o) {
    mpfr_sub(x_, x_, o.x_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& o) {
    mpfr_mul(x_, x_, o.x_, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(const Real& o) {
    mpfr_div(x_, x_, o.x_, MPFR_RNDN);
    return *this;
  }

  Real& mul_ui(unsigned long v) {
    mpfr_mul_ui(x_, x_, v, MPFR_RNDN);
    return *this;
  }
  Real& div_ui(unsigned long v) {
    mpfr_div_ui(x_, x_, v, MPFR_RNDN);
    return *this;
  }

  friend bool operator<(const Real& a, const Real& b) {
    return mpfr_cmp(a.x_, b.x_) < 0;
  }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) {
    return mpfr_cmp(a.x_, b.x_) <= 0;
  }
  friend bool operator>=(const Real& a, const Real& b) { return b <= a; }
  friend bool operator==(const Real& a, const Real& b) {
    return mpfr_cmp(a.x_, b.x_) == 0;
  }

  bool abs_less(const Real& o) const { return mpfr_cmpabs(x_, o.x_) < 0; }

  Real abs() const {
    Real r(prec());
    mpfr_abs(r.x_, x_, MPFR_RNDN);
    return r;
  }

  friend Real log(const Real& a) {
    Real r(a.prec());
    mpfr_log(r.x_, a.x_, MPFR_RNDN);
    return r;
  }

  // k^e at given precision
  static Real ui_pow_ui(unsigned long k, unsigned long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_ui_pow_ui(r.x_, k, e, MPFR_RNDN);
    return r;
  }
  // k^-e at given precision
  static Real inv_pow(unsigned long k, unsigned long e, mpfr_prec_t prec) {
    Real r = ui_pow_ui(k, e, prec);
    mpfr_ui_div(r.x_, 1, r.x_, MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

  // floor(log10(|x|)); INT_MIN-ish sentinel for zero
  long exp10() const {
    if (is_zero() || is_nan()) return -999999999L;
    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, 2, x_, MPFR_RNDN);
    mpfr_free_str(raw);
    return static_cast<long>(e) - 1;
  }

  // scientific notation with the given number of significant digits
  std::string to_sci(std::size_t digits) const {
    if (is_nan()) return "nan";
    if (is_zero()) return "0";
    if (digits < 2) digits = 2;
    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, digits, x_, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (!mant.empty() && mant[0] == '-') {
      sign = "-";
      mant.erase(0, 1);
    }
    std::string out = sign + mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
  }

  // positional decimal with the given number of digits after the point
  std::string to_fixed(std::size_t frac_digits) const {
    if (is_nan()) return "nan";
    char* raw = nullptr;
    std::string fmt = "%." + std::to_string(frac_digits) + "Rf";
    if (mpfr_asprintf(&raw, fmt.c_str(), x_) < 0)
      throw Error("Real: formatting failed");
    std::string s(raw);
    mpfr_free_str(raw);
    return s;
  }

  mpfr_srcptr raw() const { return x_; }
  mpfr_ptr raw_mut() { return x_; }

 private:
  static mpfr_prec_t join(const Real& a, const Real& b) {
    return std::max(mpfr_get_prec(a.x_), mpfr_get_prec(b.x_));
  }

  mpfr_t x_;
};

}  // namespace dzeta
