#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>

#include "dzeta/rational.hpp"

namespace dzeta {

// Which quasi-shuffle product linearizes a product of regularized words.
enum class Rule : std::uint8_t { stuffle, shuffle };

inline const char* to_string(Rule r) {
  return r == Rule::stuffle ? "stuffle" : "shuffle";
}

// One basis symbol: the rational unit, a single value zeta(w) with w >= 2,
// or a convergent double value zeta(a,b) = sum_{0<k1<k2} k1^-a k2^-b with
// a >= 1, b >= 2. Ordering is (kind, args) lexicographic.
struct Atom {
  enum class Kind : std::uint8_t { unit = 0, single = 1, dbl = 2 };

  Kind kind = Kind::unit;
  int a = 0;
  int b = 0;

  static Atom unit() { return Atom{}; }
  static Atom single(int w) { return Atom{Kind::single, w, 0}; }
  static Atom dbl(int a, int b) { return Atom{Kind::dbl, a, b}; }

  int weight() const { return a + b; }

  friend auto operator<=>(const Atom&, const Atom&) = default;
};

// Monomial T^t * atom; weight adds the T-degree.
struct Mono {
  int t_exp = 0;
  Atom atom;

  int weight() const { return t_exp + atom.weight(); }

  friend auto operator<=>(const Mono&, const Mono&) = default;
};

inline std::string to_string(const Mono& m) {
  std::ostringstream os;
  if (m.t_exp == 1) os << "T";
  if (m.t_exp > 1) os << "T^" << m.t_exp;
  if (m.atom.kind == Atom::Kind::unit) {
    if (m.t_exp == 0) os << "1";
  } else {
    if (m.t_exp > 0) os << "*";
    os << "zeta(" << m.atom.a;
    if (m.atom.kind == Atom::Kind::dbl) os << "," << m.atom.b;
    os << ")";
  }
  return os.str();
}

// Finite Q-linear combination of monomials. Zero coefficients are never
// stored, so the default-constructed value is the canonical zero and == is
// structural equality.
class FormalValue {
 public:
  FormalValue() = default;

  static FormalValue term(const Mono& m, BigRat c) {
    FormalValue v;
    v.add(m, c);
    return v;
  }

  const std::map<Mono, BigRat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool t_free() const {
    for (const auto& [m, c] : terms_)
      if (m.t_exp != 0) return false;
    return true;
  }

  BigRat coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigRat() : it->second;
  }

  FormalValue& add(const Mono& m, const BigRat& c) {
    if (c.is_zero()) return *this;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
  }

  FormalValue& operator+=(const FormalValue& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  FormalValue& operator-=(const FormalValue& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  FormalValue& operator*=(const BigRat& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend FormalValue operator+(FormalValue a, const FormalValue& b) {
    return a += b;
  }
  friend FormalValue operator-(FormalValue a, const FormalValue& b) {
    return a -= b;
  }
  friend FormalValue operator*(const BigRat& s, FormalValue v) {
    return v *= s;
  }
  FormalValue operator-() const {
    FormalValue r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  friend bool operator==(const FormalValue& a, const FormalValue& b) {
    return a.terms_ == b.terms_;
  }

  // common weight of all monomials; 0 for the zero value
  int weight() const {
    if (terms_.empty()) return 0;
    int w = terms_.begin()->first.weight();
    for (const auto& [m, c] : terms_)
      if (m.weight() != w)
        throw NotHomogeneous("weight: mixed weights " + std::to_string(w) +
                             " vs " + std::to_string(m.weight()));
    return w;
  }

 private:
  std::map<Mono, BigRat> terms_;
};

inline std::string to_string(const FormalValue& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : v.terms()) {
    BigRat a = c.abs();
    if (first) {
      if (c.sgn() < 0) os << "-";
      first = false;
    } else {
      os << (c.sgn() < 0 ? " - " : " + ");
    }
    bool is_unit_mono = m.t_exp == 0 && m.atom.kind == Atom::Kind::unit;
    if (a == BigRat(1) && !is_unit_mono)
      os << to_string(m);
    else if (is_unit_mono)
      os << a.to_string();
    else
      os << a.to_string() << "*" << to_string(m);
  }
  return os.str();
}

// --- constructors -----------------------------------------------------------

// zeta(w), convergent only
inline FormalValue single(int w) {
  if (w <= 1)
    throw DivergentValue("single: zeta(" + std::to_string(w) +
                         ") diverges; use reg_single");
  return FormalValue::term(Mono{0, Atom::single(w)}, BigRat(1));
}

// zeta(w) for w >= 2, T for w = 1
inline FormalValue reg_single(int w) {
  if (w < 1) throw DomainError("reg_single: weight must be >= 1");
  if (w == 1) return FormalValue::term(Mono{1, Atom::unit()}, BigRat(1));
  return single(w);
}

// zeta(a,b), convergent only (b >= 2)
inline FormalValue double_zeta(int a, int b) {
  if (a < 1) throw DomainError("double_zeta: first index must be >= 1");
  if (b == 1)
    throw DivergentValue("double_zeta: zeta(" + std::to_string(a) +
                         ",1) diverges; use reg_double");
  if (b < 1) throw DomainError("double_zeta: second index must be >= 1");
  return FormalValue::term(Mono{0, Atom::dbl(a, b)}, BigRat(1));
}

// zeta*(a,b) = zeta(a,b) + zeta(a+b), convergent only
inline FormalValue star(int a, int b) {
  return double_zeta(a, b) + single(a + b);
}

// Regularized double word as a polynomial in T. For b >= 2 both flavors agree
// with the convergent value; the b = 1 tails are forced by the regularized
// product identities with a single word of index 1:
//   stuffle: zeta*(a,1) = zeta(a) T - zeta(1,a) - zeta(a+1)
//   shuffle: zeta_sh(a,1) = zeta(a) T - zeta(1,a) - sum_{i=1}^{a-1} zeta(a-i,1+i)
//   (1,1):   stuffle (T^2 - zeta(2))/2, shuffle T^2/2
inline FormalValue reg_double(int a, int b, Rule rule) {
  if (a < 1 || b < 1) throw DomainError("reg_double: indices must be >= 1");
  if (b >= 2) return double_zeta(a, b);
  if (a == 1) {
    FormalValue v = FormalValue::term(Mono{2, Atom::unit()}, BigRat(1, 2));
    if (rule == Rule::stuffle) v.add(Mono{0, Atom::single(2)}, BigRat(-1, 2));
    return v;
  }
  FormalValue v = FormalValue::term(Mono{1, Atom::single(a)}, BigRat(1));
  v.add(Mono{0, Atom::dbl(1, a)}, BigRat(-1));
  if (rule == Rule::stuffle) {
    v.add(Mono{0, Atom::single(a + 1)}, BigRat(-1));
  } else {
    for (int i = 1; i <= a - 1; ++i)
      v.add(Mono{0, Atom::dbl(a - i, 1 + i)}, BigRat(-1));
  }
  return v;
}

// Linearization of the product zeta_reg(m) * zeta_reg(n) under the given rule:
//   stuffle: reg(m,n) + reg(n,m) + zeta(m+n)
//   shuffle: sum_i C(n+i-1,i) reg(m-i,n+i) + sum_j C(m+j-1,j) reg(n-j,m+j)
inline FormalValue product_singles(int m, int n, Rule rule) {
  if (m < 1 || n < 1)
    throw DomainError("product_singles: indices must be >= 1");
  FormalValue v;
  if (rule == Rule::stuffle) {
    v += reg_double(m, n, rule);
    v += reg_double(n, m, rule);
    v += reg_single(m + n);
    return v;
  }
  for (int i = 0; i <= m - 1; ++i) {
    FormalValue t = reg_double(m - i, n + i, rule);
    t *= binom(n + i - 1, i);
    v += t;
  }
  for (int j = 0; j <= n - 1; ++j) {
    FormalValue t = reg_double(n - j, m + j, rule);
    t *= binom(m + j - 1, j);
    v += t;
  }
  return v;
}

}  // namespace dzeta
