#include "dzeta/genfun.hpp"

#include <gtest/gtest.h>

using namespace dzeta;

namespace {

FormalValue unit_one() {
  return FormalValue::term(Mono{0, Atom::unit()}, BigRat(1));
}

}  // namespace

TEST(BiPoly, AddAndCancel) {
  BiPoly p;
  p.add(1, 2, single(3));
  p.add(1, 2, -single(3));
  EXPECT_TRUE(p.coeffs().empty());
  EXPECT_TRUE(p.coeff(1, 2).is_zero());
  EXPECT_THROW(p.add(-1, 0, single(2)), DomainError);
  EXPECT_THROW(p.add(0, -2, single(2)), DomainError);
}

TEST(BiPoly, SumOfPolys) {
  BiPoly a, b;
  a.add(0, 1, single(2));
  b.add(0, 1, single(2));
  b.add(2, 0, single(3));
  BiPoly c = a + b;
  EXPECT_EQ(c.coeff(0, 1), BigRat(2) * single(2));
  EXPECT_EQ(c.coeff(2, 0), single(3));
}

TEST(Substitute, BinomialExpansion) {
  // (X+Y)^2 Y = X^2 Y + 2 X Y^2 + Y^3
  BiPoly p;
  p.add(2, 1, unit_one());
  BiPoly q = substitute(p, BigRat(1), BigRat(1), BigRat(0), BigRat(1));
  EXPECT_EQ(q.coeff(2, 1), unit_one());
  EXPECT_EQ(q.coeff(1, 2), BigRat(2) * unit_one());
  EXPECT_EQ(q.coeff(0, 3), unit_one());
  EXPECT_EQ(q.coeffs().size(), 3u);
}

TEST(Substitute, IdentityMap) {
  BiPoly d = build_d(5);
  EXPECT_EQ(substitute(d, BigRat(1), BigRat(0), BigRat(0), BigRat(1)), d);
}

TEST(Substitute, Composition) {
  // X <- X-Y then X <- X+Y recovers the original
  BiPoly d = build_d(6);
  BiPoly fwd = substitute(d, BigRat(1), BigRat(-1), BigRat(0), BigRat(1));
  BiPoly back = substitute(fwd, BigRat(1), BigRat(1), BigRat(0), BigRat(1));
  EXPECT_EQ(back, d);
}

TEST(GenFun, BuildD) {
  BiPoly d = build_d(4);
  EXPECT_EQ(d.coeffs().size(), 3u);
  EXPECT_EQ(d.coeff(1, 1), double_zeta(2, 2));
  EXPECT_EQ(d.coeff(2, 0), double_zeta(1, 3));
  EXPECT_EQ(d.coeff(0, 2), reg_double(3, 1, Rule::shuffle));
  EXPECT_THROW(build_d(1), DomainError);
}

TEST(GenFun, BuildQ) {
  BiPoly q = build_q(4);
  EXPECT_EQ(q.coeff(1, 1), product_singles(2, 2, Rule::stuffle));
  EXPECT_EQ(q.coeff(0, 2), product_singles(1, 3, Rule::stuffle));
  EXPECT_EQ(q.coeff(2, 0), product_singles(3, 1, Rule::stuffle));
  BiPoly qs = build_q(4, Rule::shuffle);
  EXPECT_EQ(qs.coeff(1, 1), product_singles(2, 2, Rule::shuffle));
  EXPECT_THROW(build_q(1), DomainError);
}

TEST(GenFun, FunctionalEquationResidualsVanish) {
  for (int k = 3; k <= 12; ++k) {
    std::vector<FormalValue> res = check_gkz(k);
    ASSERT_EQ(res.size(), static_cast<std::size_t>(k - 1)) << "k=" << k;
    for (std::size_t i = 0; i < res.size(); ++i)
      EXPECT_TRUE(res[i].is_zero()) << "k=" << k << " coeff " << i << ": "
                                    << to_string(res[i]);
  }
  EXPECT_THROW(check_gkz(2), DomainError);
}

TEST(GenFun, ClosedFormAtWeightFour) {
  FormalValue p = build_p(2, 2);
  FormalValue expect = BigRat(3) * double_zeta(2, 2) -
                       BigRat(2) * double_zeta(1, 3) - single(4);
  EXPECT_EQ(p, expect);
}

TEST(GenFun, ClosedFormIsTFreeAndHomogeneous) {
  for (int m = 2; m <= 5; ++m)
    for (int n = 2; n <= 5; ++n) {
      FormalValue p = build_p(m, n);
      EXPECT_TRUE(p.t_free()) << "m=" << m << " n=" << n;
      EXPECT_EQ(p.weight(), m + n) << "m=" << m << " n=" << n;
      EXPECT_FALSE(p.is_zero());
    }
  EXPECT_THROW(build_p(1, 2), DomainError);
  EXPECT_THROW(build_p(2, 1), DomainError);
}
