#pragma once

#include <gmp.h>

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "dzeta/errors.hpp"

namespace dzeta {

// Arbitrary-precision rational. Invariant: always canonical (lowest terms,
// positive denominator), so == is plain mpq_equal and to_string is unique.
class BigRat {
 public:
  BigRat() { mpq_init(q_); }

  BigRat(long num) {  // NOLINT: implicit by design, integers embed
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
  }

  BigRat(long num, unsigned long den) {
    if (den == 0) throw DomainError("BigRat: zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, den);
    mpq_canonicalize(q_);
  }

  // accepts "a" or "a/b", base 10
  explicit BigRat(const std::string& s) {
    mpq_init(q_);
    if (s.empty() || mpq_set_str(q_, s.c_str(), 10) != 0 ||
        mpz_sgn(mpq_denref(q_)) == 0) {
      mpq_clear(q_);
      throw DomainError("BigRat: cannot parse \"" + s + "\"");
    }
    mpq_canonicalize(q_);
  }

  BigRat(const BigRat& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }

  BigRat(BigRat&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }

  BigRat& operator=(const BigRat& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }

  BigRat& operator=(BigRat&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }

  ~BigRat() { mpq_clear(q_); }

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  int sgn() const { return mpq_sgn(q_); }

  BigRat& operator+=(const BigRat& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  BigRat& operator-=(const BigRat& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  BigRat& operator*=(const BigRat& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  BigRat& operator/=(const BigRat& o) {
    if (o.is_zero()) throw DomainError("BigRat: division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
  }

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

  BigRat operator-() const {
    BigRat r;
    mpq_neg(r.q_, q_);
    return r;
  }

  BigRat abs() const {
    BigRat r;
    mpq_abs(r.q_, q_);
    return r;
  }

  friend bool operator==(const BigRat& a, const BigRat& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend bool operator!=(const BigRat& a, const BigRat& b) { return !(a == b); }
  friend bool operator<(const BigRat& a, const BigRat& b) {
    return mpq_cmp(a.q_, b.q_) < 0;
  }
  friend bool operator<=(const BigRat& a, const BigRat& b) {
    return mpq_cmp(a.q_, b.q_) <= 0;
  }
  friend bool operator>(const BigRat& a, const BigRat& b) { return b < a; }
  friend bool operator>=(const BigRat& a, const BigRat& b) { return b <= a; }

  double to_double() const { return mpq_get_d(q_); }

  // "n" when the denominator is 1, otherwise "n/d"
  std::string to_string() const {
    char* raw = mpq_get_str(nullptr, 10, q_);
    std::string s(raw);
    std::free(raw);
    return s;
  }

  // exponentiation by small integer, e >= 0
  BigRat pow(unsigned e) const {
    BigRat r(1);
    BigRat base(*this);
    while (e) {
      if (e & 1u) r *= base;
      base *= base;
      e >>= 1u;
    }
    return r;
  }

  mpq_srcptr raw() const { return q_; }

 private:
  friend BigRat binom(unsigned long, unsigned long);
  mpq_t q_;
};

// binomial coefficient; zero when k > n
inline BigRat binom(unsigned long n, unsigned long k) {
  BigRat r;
  mpz_bin_uiui(mpq_numref(r.q_), n, k);
  return r;
}

// Bernoulli numbers B_k (B_1 = -1/2 convention), memoized process-wide.
// Storage is a fixed slab so readers of already-published entries never take
// the lock: publication happens through an atomic watermark.
class BernoulliCache {
 public:
  static constexpr unsigned kMax = 4096;

  static BernoulliCache& global() {
    static BernoulliCache c;
    return c;
  }

  BigRat get(unsigned k) {
    if (k >= kMax) throw DomainError("BernoulliCache: index beyond slab");
    if (k >= ready_.load(std::memory_order_acquire)) extend(k);
    return vals_[k];
  }

 private:
  BernoulliCache() : vals_(kMax) {
    vals_[0] = BigRat(1);
    ready_.store(1, std::memory_order_release);
  }

  void extend(unsigned k) {
    std::lock_guard<std::mutex> lock(mu_);
    // recurrence: sum_{j=0}^{k} C(k+1, j) B_j = 0 for k >= 1
    for (unsigned m = ready_.load(std::memory_order_relaxed); m <= k; ++m) {
      BigRat acc;
      for (unsigned j = 0; j < m; ++j) acc += binom(m + 1, j) * vals_[j];
      vals_[m] = -acc / BigRat(static_cast<long>(m) + 1);
      ready_.store(m + 1, std::memory_order_release);
    }
  }

  std::mutex mu_;
  std::vector<BigRat> vals_;  // never resized after construction
  std::atomic<unsigned> ready_{0};
};

inline BigRat bernoulli(unsigned k) { return BernoulliCache::global().get(k); }

}  // namespace dzeta
