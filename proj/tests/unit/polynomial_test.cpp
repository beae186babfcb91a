#include <gtest/gtest.h>

#include "kostant/polynomial.hpp"
#include "kostant/rational.hpp"

using kostant::IntPolynomial;
using kostant::LaurentPolynomial;
using kostant::Rational;

TEST(Rational, NormalizesAndCompares) {
  EXPECT_EQ(Rational(2, -4), Rational(-1, 2));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(3, 4) * Rational(8, 3), Rational(2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_THROW(Rational(1, 0), kostant::DomainError);
  EXPECT_THROW(Rational(1, 2).to_integer(), kostant::ConsistencyError);
}

TEST(Rational, OverflowIsDetected) {
  const Rational big(std::int64_t{1} << 62);
  EXPECT_THROW(big * Rational(4), kostant::ConsistencyError);
}

TEST(IntPolynomial, TrimsAndMultiplies) {
  IntPolynomial p{1, 1, 0, 0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p * p, (IntPolynomial{1, 2, 1}));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_EQ((IntPolynomial{1, 1, 2, 1}).str(), "1+t+2t^2+t^3");
  EXPECT_EQ(IntPolynomial{}.str(), "0");
}

TEST(IntPolynomial, Palindromicity) {
  EXPECT_TRUE(IntPolynomial{1}.is_palindromic());
  EXPECT_FALSE((IntPolynomial{1, 1, 2, 1}).is_palindromic());
  EXPECT_TRUE((IntPolynomial{1, 1, 1, 1}).is_palindromic());
  EXPECT_TRUE((IntPolynomial{1, 2, 3, 2, 1}).is_palindromic());
}

TEST(LaurentPolynomial, BarAndArithmetic) {
  LaurentPolynomial v = LaurentPolynomial::monomial(1);
  LaurentPolynomial vinv = LaurentPolynomial::monomial(-1);
  LaurentPolynomial s = v + vinv;
  EXPECT_TRUE(s.is_bar_invariant());
  EXPECT_FALSE(v.is_bar_invariant());
  EXPECT_EQ(v.bar(), vinv);
  EXPECT_EQ((s * s).coeff(0), 2);
  EXPECT_EQ((s * s).coeff(2), 1);
  EXPECT_TRUE((s - s).is_zero());
  EXPECT_EQ(s.shifted(2).low_degree(), 1);
  EXPECT_EQ(s.str(), "v^-1+v");
}
