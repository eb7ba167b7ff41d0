#include <gtest/gtest.h>

#include <set>

#include "uchain/error.hpp"
#include "uchain/local_scalar.hpp"
#include "uchain/polynomial.hpp"
#include "uchain/random.hpp"

using namespace uchain;

namespace {

// Reference model: a polynomial over F2 as its set of exponents.
using ExpSet = std::set<int>;

ExpSet to_set(const Polynomial& p) {
  auto e = p.exponents();
  return {e.begin(), e.end()};
}

ExpSet set_add(ExpSet a, const ExpSet& b) {
  for (int e : b) {
    if (!a.erase(e)) a.insert(e);
  }
  return a;
}

ExpSet set_mul(const ExpSet& a, const ExpSet& b) {
  ExpSet out;
  for (int x : a) {
    for (int y : b) out = set_add(out, {x + y});
  }
  return out;
}

// Derivative by evaluating at U + ε with ε² = 0 (Horner): p(U + ε) = p + ε p'.
ExpSet dual_number_derivative(const ExpSet& p) {
  ExpSet value, slope;  // value + ε slope
  int top = p.empty() ? -1 : *p.rbegin();
  for (int k = top; k >= 0; --k) {
    ExpSet shifted_value, shifted_slope;
    for (int e : value) shifted_value.insert(e + 1);
    for (int e : slope) shifted_slope.insert(e + 1);
    // (value + ε slope)(U + ε) = U value + ε (value + U slope)
    slope = set_add(value, shifted_slope);
    value = shifted_value;
    if (p.count(k)) value = set_add(value, {0});
  }
  return slope;
}

Polynomial P(const char* text) { return Polynomial::parse(text); }

}  // namespace

TEST(Polynomial, AdditionCancelsInCharacteristicTwo) {
  EXPECT_EQ(P("U^2+U^3") + P("U^3+U^5"), P("U^2+U^5"));
  Polynomial p = P("1+U+U^7");
  EXPECT_TRUE((p + p).is_zero());
  EXPECT_EQ(p + Polynomial(), p);
}

TEST(Polynomial, Multiplication) {
  EXPECT_EQ(P("1+U") * P("1+U"), P("1+U^2"));
  EXPECT_EQ(P("U^2") * P("U^3"), P("U^5"));
  EXPECT_TRUE((P("1+U^9") * Polynomial()).is_zero());
}

TEST(Polynomial, Valuation) {
  EXPECT_EQ(P("U^2+U^5").valuation(), 2);
  EXPECT_EQ(P("1+U").valuation(), 0);
  EXPECT_EQ(Polynomial().valuation(), kInfiniteValuation);
}

TEST(Polynomial, FormalDerivative) {
  EXPECT_EQ(P("U^3").derivative(), P("U^2"));
  EXPECT_TRUE(P("U^2").derivative().is_zero());
  EXPECT_EQ(P("1+U+U^4").derivative(), P("1"));
}

TEST(Polynomial, GcdExamples) {
  EXPECT_EQ(gcd(P("U^2+U^3"), P("U^2")), P("U^2"));
  EXPECT_EQ(gcd(P("1+U"), P("U")), P("1"));
  EXPECT_EQ(gcd(P("U+U^4"), Polynomial()), P("U+U^4"));
  try {
    gcd(Polynomial(), Polynomial());
    FAIL() << "expected BothZero";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BothZero);
  }
}

TEST(Polynomial, TextRoundTrip) {
  EXPECT_EQ(P("0").to_string(), "0");
  EXPECT_EQ(P("1 + U").to_string(), "1+U");
  EXPECT_EQ(P("U^5+U^2").to_string(), "U^2+U^5");
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Polynomial p = rng.polynomial(90);
    EXPECT_EQ(Polynomial::parse(p.to_string()), p);
  }
}

TEST(Polynomial, ParseErrorsCarryPosition) {
  for (const char* bad : {"", "U^", "2U", "1+", "U^2 U"}) {
    try {
      Polynomial::parse(bad);
      FAIL() << "accepted '" << bad << "'";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), 1);
      EXPECT_GE(e.column(), 1);
    }
  }
}

TEST(Polynomial, ExponentOverflowIsRejected) {
  EXPECT_THROW(Polynomial::parse("U^2000000"), Error);
  EXPECT_THROW(Polynomial::monomial(kMaxExponent + 1), Error);
  EXPECT_THROW(Polynomial::monomial(kMaxExponent).shifted_up(1), Error);
}

TEST(Polynomial, AgreesWithExponentSetModel) {
  Rng rng(2024);
  for (int i = 0; i < 300; ++i) {
    Polynomial p = rng.polynomial(rng.uniform(0, 140));
    Polynomial q = rng.polynomial(rng.uniform(0, 140));
    EXPECT_EQ(to_set(p + q), set_add(to_set(p), to_set(q)));
    EXPECT_EQ(to_set(p * q), set_mul(to_set(p), to_set(q)));
    EXPECT_EQ(to_set(p.derivative()), dual_number_derivative(to_set(p)));
  }
}

TEST(Polynomial, LeibnizRule) {
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    Polynomial p = rng.polynomial(70), q = rng.polynomial(70);
    EXPECT_EQ((p * q).derivative(), p * q.derivative() + q * p.derivative());
  }
}

TEST(Polynomial, ValuationAndDegreeAreAdditive) {
  Rng rng(6);
  for (int i = 0; i < 300; ++i) {
    Polynomial p = rng.polynomial(40).shifted_up(rng.uniform(0, 30));
    Polynomial q = rng.polynomial(40).shifted_up(rng.uniform(0, 30));
    EXPECT_EQ((p * q).valuation(), add_valuations(p.valuation(), q.valuation()));
    if (!p.is_zero() && !q.is_zero()) EXPECT_EQ((p * q).degree(), p.degree() + q.degree());
  }
}

TEST(Polynomial, DivisionAndGcdProperties) {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Polynomial a = rng.polynomial(50), b = rng.nonzero_polynomial(20), r = rng.nonzero_polynomial(6);
    auto [quot, rem] = divmod(a, b);
    EXPECT_EQ(quot * b + rem, a);
    EXPECT_LT(rem.degree(), b.degree());

    Polynomial g = gcd(a * r, b * r);
    EXPECT_TRUE(divmod(a * r, g).second.is_zero());
    EXPECT_TRUE(divmod(b * r, g).second.is_zero());
    // r is a common divisor, so it divides the gcd.
    EXPECT_TRUE(divmod(g, r).second.is_zero());
  }
}

TEST(LocalScalar, InverseExamples) {
  LocalScalar one_plus_u(P("1+U"));
  LocalScalar inv = one_plus_u.inverse();
  EXPECT_EQ(inv, LocalScalar::fraction(P("1"), P("1+U")));
  EXPECT_EQ(inv * one_plus_u, LocalScalar(P("1")));
  EXPECT_EQ(LocalScalar(P("1")).inverse(), LocalScalar(P("1")));
  for (const char* bad : {"U", "0", "U^2+U^3"}) {
    try {
      LocalScalar(P(bad)).inverse();
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NotAUnit);
    }
  }
  EXPECT_THROW(LocalScalar::fraction(P("1"), P("U")), Error);
}

TEST(LocalScalar, CanonicalReducedForm) {
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    Polynomial n = rng.polynomial(12);
    Polynomial d = Polynomial::one() + rng.polynomial(10).shifted_up(1);
    Polynomial common = Polynomial::one() + rng.polynomial(5).shifted_up(1);
    LocalScalar a = LocalScalar::fraction(n, d);
    EXPECT_EQ(LocalScalar::fraction(n * common, d * common), a);
    if (!a.is_zero()) EXPECT_EQ(gcd(a.numerator(), a.denominator()), Polynomial::one());
    EXPECT_TRUE(a.denominator().coefficient(0));
  }
  EXPECT_EQ(LocalScalar(Polynomial()).denominator(), Polynomial::one());
}

TEST(LocalScalar, RingAxiomsAndInverses) {
  Rng rng(9);
  auto random_scalar = [&] {
    return LocalScalar::fraction(rng.polynomial(6), Polynomial::one() + rng.polynomial(4).shifted_up(1));
  };
  for (int i = 0; i < 200; ++i) {
    LocalScalar a = random_scalar(), b = random_scalar(), c = random_scalar();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a + a).is_zero());
    EXPECT_EQ((a * b).valuation(), add_valuations(a.valuation(), b.valuation()));
    if (a.is_unit()) {
      EXPECT_EQ(a.inverse().inverse(), a);
      EXPECT_EQ(a * a.inverse(), LocalScalar(Polynomial::one()));
    }
    if (!b.is_zero() && a.valuation() >= b.valuation()) EXPECT_EQ(a.divided_by(b) * b, a);
  }
}

TEST(LocalScalar, DivisionOutsideRing) {
  try {
    LocalScalar(P("U")).divided_by(LocalScalar(P("U^2")));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInRing);
  }
}

TEST(LocalScalar, PowerSeriesExpansion) {
  Rng rng(10);
  for (int i = 0; i < 100; ++i) {
    Polynomial n = rng.polynomial(8);
    Polynomial d = Polynomial::one() + rng.polynomial(6).shifted_up(1);
    LocalScalar s = LocalScalar::fraction(n, d);
    const int precision = rng.uniform(1, 40);
    // series · d ≡ n (mod U^precision)
    EXPECT_EQ((s.series(precision) * s.denominator()).truncated(precision), s.numerator().truncated(precision));
    EXPECT_LE(s.series(precision).degree(), precision - 1);
  }
  EXPECT_EQ(series_inverse(P("1+U"), 5), P("1+U+U^2+U^3+U^4"));
}

TEST(LaurentPoly, PartsAndShifts) {
  LaurentPoly x = LaurentPoly::monomial(-3) + LaurentPoly::monomial(-1) + LaurentPoly::monomial(0) +
                  LaurentPoly::monomial(4);
  EXPECT_EQ(x.min_exponent(), -3);
  EXPECT_EQ(x.max_exponent(), 4);
  EXPECT_EQ(x.negative_part(), LaurentPoly::monomial(-3) + LaurentPoly::monomial(-1));
  EXPECT_EQ(x.nonnegative_part(), P("1+U^4"));
  EXPECT_EQ(x.negative_part() + LaurentPoly(0, x.nonnegative_part()), x);
  EXPECT_EQ(x.shifted(3).min_exponent(), 0);
  EXPECT_EQ((x * P("U")).exponents(), (std::vector<int>{-2, 0, 1, 5}));
  EXPECT_EQ(x.restricted(-1, 1).exponents(), (std::vector<int>{-1, 0}));
  EXPECT_TRUE((x + x).is_zero());
}

TEST(LaurentPoly, ProductMatchesModel) {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    int oa = rng.uniform(-70, 10), ob = rng.uniform(-70, 10);
    Polynomial a = rng.polynomial(80), b = rng.polynomial(80);
    LaurentPoly prod = LaurentPoly(oa, a) * LaurentPoly(ob, b);
    ExpSet expected;
    for (int e : (a * b).exponents()) expected.insert(e + oa + ob);
    auto got = prod.exponents();
    EXPECT_EQ(ExpSet(got.begin(), got.end()), expected);
  }
}
