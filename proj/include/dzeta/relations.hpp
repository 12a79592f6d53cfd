#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dzeta/algebra.hpp"

namespace dzeta {

// Identifier of a generating relation row. E(m,n) is the double shuffle
// difference at (m,n) with 2 <= m <= n; S(w) is the weight-w sum row.
struct RowId {
  enum class Family : std::uint8_t { E = 0, S = 1 };

  Family family = Family::E;
  int m = 0;
  int n = 0;  // unused for S

  static RowId e(int m, int n) { return RowId{Family::E, m, n}; }
  static RowId s(int w) { return RowId{Family::S, w, 0}; }

  std::string str() const {
    if (family == Family::E)
      return "E(" + std::to_string(m) + "," + std::to_string(n) + ")";
    return "S(" + std::to_string(m) + ")";
  }

  friend auto operator<=>(const RowId&, const RowId&) = default;
};

struct RelationRow {
  RowId id;
  FormalValue value;
};

// shuffle-minus-stuffle linearization of zeta(m) zeta(n); T-free for m,n >= 2
inline RelationRow row_e(int m, int n) {
  if (m < 2 || n < 2) throw DomainError("row_e: needs m,n >= 2");
  if (m > n) std::swap(m, n);
  FormalValue v = product_singles(m, n, Rule::shuffle) -
                  product_singles(m, n, Rule::stuffle);
  return RelationRow{RowId::e(m, n), std::move(v)};
}

// zeta(w) - sum_{a=1}^{w-2} zeta(a, w-a)
inline RelationRow row_s(int w) {
  if (w < 3) throw DomainError("row_s: needs weight >= 3");
  FormalValue v = single(w);
  for (int a = 1; a <= w - 2; ++a) v -= double_zeta(a, w - a);
  return RelationRow{RowId::s(w), std::move(v)};
}

enum class Axioms : std::uint8_t { strict, extended };

inline const char* to_string(Axioms ax) {
  return ax == Axioms::strict ? "strict" : "extended";
}

struct CertTerm {
  RowId row;
  BigRat coef;
};
using Certificate = std::vector<CertTerm>;  // sorted by row id, no zeros

// Relation span at one weight, echelonized once at construction. strict spans
// the E rows only; extended adjoins S(w). Echelonization is deterministic:
// rows are reduced in generation order (E(2,w-2), E(3,w-3), ..., then S),
// pivots are the least surviving monomial, pivot coefficients normalized to 1.
class RelationSet {
 public:
  struct EchelonRow {
    Mono pivot;
    FormalValue value;
    std::map<RowId, BigRat> combo;  // value == sum combo[id] * row(id)
  };

  struct MemberResult {
    bool in_span = false;
    Certificate certificate;  // filled when in_span
    FormalValue residue;      // irreducible remainder otherwise
  };

  static RelationSet build(int weight, Axioms axioms) {
    if (weight < 3) throw DomainError("RelationSet: weight must be >= 3");
    RelationSet set;
    set.weight_ = weight;
    set.axioms_ = axioms;
    for (int m = 2; m <= weight - m; ++m) set.rows_.push_back(row_e(m, weight - m));
    if (axioms == Axioms::extended) set.rows_.push_back(row_s(weight));
    for (const auto& row : set.rows_) set.absorb(row);
    return set;
  }

  int weight() const { return weight_; }
  Axioms axioms() const { return axioms_; }
  const std::vector<RelationRow>& rows() const { return rows_; }
  const std::vector<EchelonRow>& echelon() const { return echelon_; }
  int rank() const { return static_cast<int>(echelon_.size()); }

  // Decides membership of v in the span. A returned certificate is always
  // replayed against the generating rows before being handed out.
  MemberResult member(const FormalValue& v) const {
    if (!v.t_free()) throw NotTFree("member: value carries T-monomials");
    if (!v.is_zero() && v.weight() != weight_)
      throw WeightMismatch("member: value has weight " +
                           std::to_string(v.weight()) + ", set has " +
                           std::to_string(weight_));
    MemberResult res;
    if (v.is_zero()) {
      res.in_span = true;
      return res;
    }
    FormalValue rem = v;
    std::map<RowId, BigRat> combo;
    for (const auto& er : echelon_) {
      BigRat c = rem.coeff(er.pivot);
      if (c.is_zero()) continue;
      FormalValue sub = er.value;
      sub *= c;
      rem -= sub;
      for (const auto& [id, k] : er.combo) combo[id] += c * k;
    }
    if (!rem.is_zero()) {
      res.residue = std::move(rem);
      return res;
    }
    for (const auto& [id, c] : combo)
      if (!c.is_zero()) res.certificate.push_back(CertTerm{id, c});
    replay_check(v, res.certificate);
    res.in_span = true;
    return res;
  }

 private:
  void absorb(const RelationRow& row) {
    FormalValue rem = row.value;
    std::map<RowId, BigRat> combo;
    combo[row.id] = BigRat(1);
    for (const auto& er : echelon_) {
      BigRat c = rem.coeff(er.pivot);
      if (c.is_zero()) continue;
      FormalValue sub = er.value;
      sub *= c;
      rem -= sub;
      for (const auto& [id, k] : er.combo) combo[id] += -c * k;
    }
    if (rem.is_zero()) return;  // dependent row
    Mono pivot = rem.terms().begin()->first;
    BigRat lead = rem.coeff(pivot);
    BigRat inv = BigRat(1) / lead;
    rem *= inv;
    for (auto& [id, k] : combo) k *= inv;
    std::map<RowId, BigRat> clean;
    for (const auto& [id, k] : combo)
      if (!k.is_zero()) clean.emplace(id, k);
    echelon_.push_back(EchelonRow{pivot, std::move(rem), std::move(clean)});
  }

  void replay_check(const FormalValue& v, const Certificate& cert) const {
    FormalValue acc;
    for (const auto& [id, c] : cert) {
      const RelationRow* row = nullptr;
      for (const auto& r : rows_)
        if (r.id == id) {
          row = &r;
          break;
        }
      if (!row) throw Error("certificate names unknown row " + id.str());
      FormalValue t = row->value;
      t *= c;
      acc += t;
    }
    if (!(acc == v)) throw Error("certificate replay mismatch");
  }

  int weight_ = 0;
  Axioms axioms_ = Axioms::strict;
  std::vector<RelationRow> rows_;
  std::vector<EchelonRow> echelon_;
};

inline std::string to_string(const Certificate& cert) {
  if (cert.empty()) return "(empty)";
  std::string s;
  for (std::size_t i = 0; i < cert.size(); ++i) {
    if (i) s += " + ";
    s += cert[i].coef.to_string() + "*" + cert[i].row.str();
  }
  return s;
}

}  // namespace dzeta
