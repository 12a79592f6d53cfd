#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dzeta/algebra.hpp"

namespace dzeta {

// Polynomial in two commuting variables X, Y with FormalValue coefficients.
// Zero coefficients are never stored.
class BiPoly {
 public:
  using Key = std::pair<int, int>;  // (X exponent, Y exponent)

  const std::map<Key, FormalValue>& coeffs() const { return coeffs_; }

  FormalValue coeff(int i, int j) const {
    auto it = coeffs_.find(Key{i, j});
    return it == coeffs_.end() ? FormalValue{} : it->second;
  }

  BiPoly& add(int i, int j, const FormalValue& v) {
    if (v.is_zero()) return *this;
    if (i < 0 || j < 0) throw DomainError("BiPoly: negative exponent");
    auto [it, fresh] = coeffs_.emplace(Key{i, j}, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
    return *this;
  }

  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [k, v] : o.coeffs_) add(k.first, k.second, v);
    return *this;
  }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::map<Key, FormalValue> coeffs_;
};

// Linear substitution X <- xx*X + xy*Y, Y <- yx*X + yy*Y, expanded over Q.
inline BiPoly substitute(const BiPoly& p, const BigRat& xx, const BigRat& xy,
                         const BigRat& yx, const BigRat& yy) {
  BiPoly out;
  for (const auto& [key, v] : p.coeffs()) {
    const int i = key.first, j = key.second;
    // (xx X + xy Y)^i (yx X + yy Y)^j
    for (int p1 = 0; p1 <= i; ++p1) {
      BigRat ci = binom(i, p1) * xx.pow(p1) * xy.pow(i - p1);
      if (ci.is_zero()) continue;
      for (int q1 = 0; q1 <= j; ++q1) {
        BigRat cj = binom(j, q1) * yx.pow(q1) * yy.pow(j - q1);
        if (cj.is_zero()) continue;
        FormalValue t = v;
        t *= ci * cj;
        out.add(p1 + q1, i + j - p1 - q1, t);
      }
    }
  }
  return out;
}

// D_k(X,Y) = sum_{i=1}^{k-1} reg_sh(k-i, i) X^{i-1} Y^{k-i-1}
inline BiPoly build_d(int k) {
  if (k < 2) throw DomainError("build_d: weight must be >= 2");
  BiPoly d;
  for (int i = 1; i <= k - 1; ++i)
    d.add(i - 1, k - i - 1, reg_double(k - i, i, Rule::shuffle));
  return d;
}

// Q_k(X,Y) = sum_{i=1}^{k-1} [zeta_reg(i) zeta_reg(k-i)] X^{i-1} Y^{k-i-1},
// each product linearized under the given rule (stuffle by default).
inline BiPoly build_q(int k, Rule rule = Rule::stuffle) {
  if (k < 2) throw DomainError("build_q: weight must be >= 2");
  BiPoly q;
  for (int i = 1; i <= k - 1; ++i)
    q.add(i - 1, k - i - 1, product_singles(i, k - i, rule));
  return q;
}

// Coefficient-wise residuals of D_k(X+Y,Y) + D_k(X+Y,X) - Q_k(X,Y) with the
// products in Q linearized under the shuffle rule, so each residual vanishes
// identically in the formal algebra. Returned in X-degree order; length k-1.
inline std::vector<FormalValue> check_gkz(int k) {
  if (k < 3) throw DomainError("check_gkz: weight must be >= 3");
  const BigRat one(1), zero(0);
  BiPoly d = build_d(k);
  BiPoly lhs = substitute(d, one, one, zero, one);  // D(X+Y, Y)
  lhs += substitute(d, one, one, one, zero);        // D(X+Y, X)
  BiPoly q = build_q(k, Rule::shuffle);
  std::vector<FormalValue> res;
  res.reserve(k - 1);
  for (int i = 0; i <= k - 2; ++i) {
    FormalValue r = lhs.coeff(i, k - 2 - i);
    r -= q.coeff(i, k - 2 - i);
    res.push_back(std::move(r));
  }
  return res;
}

// Partial-fraction closed form for zeta(m,n):
//   P(m,n) = sum_{i=0}^{m-1} (-1)^i C(n+i-1,i) zeta(n+i) zeta_reg(m-i)
//          + (-1)^m sum_{j=0}^{n-1} C(m+j-1,j)
//                   { zeta(m+j) zeta_reg(n-j) - zeta_star(n-j, m+j) },
// with each product of singles linearized under the stuffle rule. The two
// T-monomials carry C(m+n-2,m-1) = C(m+n-2,n-1) with opposite signs and
// cancel, so the result is a T-free weight m+n value.
inline FormalValue build_p(int m, int n) {
  if (m < 2 || n < 2) throw DomainError("build_p: needs m,n >= 2");
  FormalValue p;
  for (int i = 0; i <= m - 1; ++i) {
    FormalValue t = product_singles(n + i, m - i, Rule::stuffle);
    BigRat c = binom(n + i - 1, i);
    if (i % 2) c = -c;
    t *= c;
    p += t;
  }
  const BigRat sgn_m(m % 2 ? -1 : 1);
  for (int j = 0; j <= n - 1; ++j) {
    FormalValue t = product_singles(m + j, n - j, Rule::stuffle);
    t -= star(n - j, m + j);
    t *= sgn_m * binom(m + j - 1, j);
    p += t;
  }
  if (!p.t_free()) throw Error("build_p: T-monomials failed to cancel");
  return p;
}

}  // namespace dzeta
