#include <gtest/gtest.h>

#include "egs/rings.hpp"
#include "identities.hpp"
#include "test_support.hpp"

using namespace egs;
using namespace egs::testing;

TEST(RingDescriptorTest, RejectsBadVariableLists) {
  EXPECT_THROW(RingDescriptor::polynomial({}, BaseRing::integers), RingError);
  EXPECT_THROW(RingDescriptor::polynomial({"x", "x"}, BaseRing::integers), RingError);
  EXPECT_THROW(RingDescriptor::polynomial({"1x"}, BaseRing::integers), RingError);
  EXPECT_NO_THROW(RingDescriptor::polynomial({"x_1", "Y2"}, BaseRing::rationals));
}

TEST(RingDescriptorTest, PidFlags) {
  EXPECT_TRUE(zz().is_pid());
  EXPECT_TRUE(qq_x().is_pid());
  EXPECT_FALSE(zz_x().is_pid());
  EXPECT_FALSE(qq_xy().is_pid());
  EXPECT_EQ(zz_xy().to_string(), "ZZ[x,y]");
}

TEST(ParseTest, Examples) {
  const auto r = zz_xy();
  const auto x = RingElement::variable(r, 0), y = RingElement::variable(r, 1);
  EXPECT_EQ(P("x^2+y", r), x * x + y);
  EXPECT_TRUE(P("0", zz()).is_zero());
  EXPECT_EQ(P(" ( x + y ) ^ 2 ", r), x * x + RingElement::integer(r, 2) * x * y + y * y);
  EXPECT_EQ(P("-x^2", r), -(x * x));
  EXPECT_EQ(P("x--y", r), x + y);
  EXPECT_EQ(P("1/2*x", qq_x()) * RingElement::integer(qq_x(), 2), RingElement::variable(qq_x(), 0));
  EXPECT_EQ(P("2/4", qq_x()), P("1/2", qq_x()));
}

TEST(ParseTest, Errors) {
  EXPECT_THROW(P("x^(-1)", qq_x()), ParseError);
  EXPECT_THROW(P("x^-1", qq_x()), ParseError);
  EXPECT_THROW(P("z", zz_xy()), ParseError);
  EXPECT_THROW(P("1/2", zz_xy()), ParseError);
  EXPECT_THROW(P("2x", zz_xy()), ParseError);
  EXPECT_THROW(P("x+", zz_xy()), ParseError);
  EXPECT_THROW(P("(x", zz_xy()), ParseError);
  EXPECT_THROW(P("1/0", qq_x()), ParseError);
  EXPECT_THROW(P("+x", zz_xy()), ParseError);
  try {
    P("x + 2y", zz_xy());
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  try {
    P("x^(-1)", qq_x());
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("negative exponent"), std::string::npos);
  }
}

TEST(FormatTest, Examples) {
  EXPECT_EQ(format_element(RingElement::zero(zz_xy())), "0");
  EXPECT_EQ(format_element(P("y + x^2", zz_xy())), "x^2+y");
  EXPECT_EQ(format_element(Z(-24)), "-24");
  EXPECT_EQ(format_element(P("y^2*x - x^2*y + 3", zz_xy())), "-x^2*y+x*y^2+3");
  EXPECT_EQ(format_element(P("-1/2*x+2/3", qq_x())), "-1/2*x+2/3");
}

TEST(FormatTest, RoundTripProperty) {
  std::mt19937_64 rng(7);
  for (const auto& ring : {zz(), zz_xy(), qq_xy(), qq_x()}) {
    for (int i = 0; i < 200; ++i) {
      auto p = random_poly(rng, ring, 5, 3, 20);
      if (ring.base() == BaseRing::rationals)
        p *= RingElement::constant(ring, mpq_class(1, static_cast<unsigned>(uniform(rng, 1, 7))));
      EXPECT_EQ(P(format_element(p), ring), p) << format_element(p);
    }
  }
}

TEST(ArithmeticTest, Examples) {
  const auto r = zz_xy();
  EXPECT_EQ(P("x", r) + P("y", r), P("x+y", r));
  EXPECT_EQ(P("x*(x^2+y)", r) * RingElement::one(r), P("x^3+x*y", r));
  EXPECT_EQ(pow(P("x+y", r), 0), RingElement::one(r));
  EXPECT_THROW(P("x", r) + P("x", zz_x()), RingError);
  EXPECT_THROW((void)RingElement::constant(zz(), mpq_class(1, 2)), RingError);
}

TEST(ExactDivTest, Examples) {
  const auto r = zz_xy();
  const auto a = P("x^3+x*y", r);
  const auto q = exact_div(a, P("x", r));
  EXPECT_EQ(q, P("x^2+y", r));
  EXPECT_EQ(q * P("x", r), a);
  EXPECT_THROW(exact_div(Z(6), Z(4)), NotDivisible);
  EXPECT_EQ(exact_div(a, RingElement::one(r)), a);
  EXPECT_THROW(exact_div(a, RingElement::zero(r)), RingError);
  EXPECT_FALSE(try_exact_div(P("x^2+1", r), P("x+1", r)));
  EXPECT_FALSE(try_exact_div(P("2*x", r), P("4", r)));
  EXPECT_TRUE(try_exact_div(P("2*x", qq_xy()), P("4", qq_xy())));
}

TEST(GcdTest, Examples) {
  EXPECT_EQ(gcd(Z(12), Z(18)), Z(6));
  EXPECT_EQ(gcd(Z(-12), Z(0)), Z(12));
  const auto q = qq_xy();
  EXPECT_EQ(gcd(P("x^2*y+x*y^2", q), P("x*y", q)), P("x*y", q));
  EXPECT_EQ(gcd(P("-3*x+6", q), RingElement::zero(q)), P("x-2", q));
  const auto z = zz_xy();
  EXPECT_EQ(gcd(P("-2*x-2", z), RingElement::zero(z)), P("2*x+2", z));
  EXPECT_EQ(gcd(P("2*x", zz_x()), P("4", zz_x())), P("2", zz_x()));
  EXPECT_EQ(gcd(P("6*x^2-6", zz_x()), P("4*x+4", zz_x())), P("2*x+2", zz_x()));
  EXPECT_EQ(gcd(P("x^2-y^2", z), P("x^2+2*x*y+y^2", z)), P("x+y", z));
  EXPECT_EQ(gcd(P("x^3+x*y", z), P("x^2*y^2+x^2*y", z)), P("x", z));
  EXPECT_TRUE(gcd(RingElement::zero(z), RingElement::zero(z)).is_zero());
}

TEST(GcdTest, EmptyListConventions) {
  EXPECT_TRUE(gcd_many({}, zz()).is_zero());
  EXPECT_EQ(lcm_many({}, zz()), Z(1));
}

TEST(LcmTest, Examples) {
  EXPECT_EQ(lcm(Z(4), Z(6)), Z(12));
  const auto q = qq_xy();
  EXPECT_EQ(lcm(P("x", q), P("x+y", q)), P("x^2+x*y", q));
  EXPECT_EQ(lcm(P("-3*x", q), RingElement::one(q)), P("x", q));
  EXPECT_TRUE(lcm(Z(5), Z(0)).is_zero());
}

TEST(UnitTest, AssociatesAndUnits) {
  auto u = associate_unit(P("2*x+2", qq_x()), P("x+1", qq_x()));
  ASSERT_TRUE(u);
  EXPECT_EQ(*u, P("2", qq_x()));
  EXPECT_FALSE(is_associate(P("2*x+2", zz_x()), P("x+1", zz_x())));
  auto self = associate_unit(P("x-y", zz_xy()), P("x-y", zz_xy()));
  ASSERT_TRUE(self);
  EXPECT_EQ(*self, RingElement::one(zz_xy()));
  EXPECT_TRUE(is_associate(RingElement::zero(zz()), RingElement::zero(zz())));
  EXPECT_FALSE(is_associate(RingElement::zero(zz()), Z(1)));
  EXPECT_TRUE(is_unit(Z(-1)));
  EXPECT_FALSE(is_unit(Z(2)));
  EXPECT_TRUE(is_unit(P("2/3", qq_xy())));
  EXPECT_FALSE(is_unit(P("2", zz_xy())));
  EXPECT_FALSE(is_unit(P("x", qq_x())));
}

TEST(ContentTest, Examples) {
  auto [c, p] = content_and_primitive(P("2*x+4", zz_x()));
  EXPECT_EQ(c, P("2", zz_x()));
  EXPECT_EQ(p, P("x+2", zz_x()));
  auto [c1, p1] = content_and_primitive(P("x", qq_xy()));
  EXPECT_EQ(c1, RingElement::one(qq_xy()));
  EXPECT_EQ(p1, P("x", qq_xy()));
  auto [c2, p2] = recursive_content_and_primitive(P("x^2*y^2+x^2*y", zz_xy()));
  EXPECT_EQ(c2, P("x^2", zz_xy()));
  EXPECT_EQ(p2, P("y^2+y", zz_xy()));
  auto [c3, p3] = content_and_primitive(RingElement::zero(zz_x()));
  EXPECT_TRUE(c3.is_zero());
  EXPECT_TRUE(p3.is_zero());
  auto [c4, p4] = content_and_primitive(P("2/3*x^2+4/3", qq_x()));
  EXPECT_EQ(p4, P("x^2+2", qq_x()));
}

TEST(ContentTest, ReconstructionProperty) {
  std::mt19937_64 rng(11);
  for (const auto& ring : {zz_x(), zz_xy(), qq_xy()}) {
    for (int i = 0; i < 100; ++i) {
      auto p = random_poly(rng, ring, 4, 3, 30) * RingElement::integer(ring, uniform(rng, -6, 6));
      auto [c, prim] = content_and_primitive(p);
      EXPECT_EQ(c * prim, p);
      auto [rc, rprim] = recursive_content_and_primitive(p);
      EXPECT_EQ(rc * rprim, p);
    }
  }
}

TEST(GcdTest, DivisibilityProperty) {
  std::mt19937_64 rng(3);
  for (const auto& ring : {zz(), zz_x(), zz_xy(), qq_xy()}) {
    for (int i = 0; i < 60; ++i) {
      auto d = random_nonzero_poly(rng, ring, 2, 2, 5);
      auto a = d * random_nonzero_poly(rng, ring, 3, 2, 5);
      auto b = d * random_nonzero_poly(rng, ring, 3, 2, 5);
      auto g = gcd(a, b);
      ASSERT_TRUE(divides(g, a));
      ASSERT_TRUE(divides(g, b));
      ASSERT_TRUE(divides(d, g)) << format_element(a) << " , " << format_element(b);
      EXPECT_TRUE(is_associate(g * lcm(a, b), a * b));
      EXPECT_EQ(normalize(g), g);
    }
  }
}

TEST(EuclidTest, DivModAndExtendedGcd) {
  auto [q, r] = euclid_divmod(Z(-7), Z(3));
  EXPECT_EQ(q, Z(-3));
  EXPECT_EQ(r, Z(2));
  auto [q2, r2] = euclid_divmod(Z(7), Z(-3));
  EXPECT_EQ(q2 * Z(-3) + r2, Z(7));
  EXPECT_EQ(r2, Z(1));
  const auto R = qq_x();
  auto dm = euclid_divmod(P("x^3+2*x+1", R), P("2*x^2+1", R));
  EXPECT_EQ(dm.quotient * P("2*x^2+1", R) + dm.remainder, P("x^3+2*x+1", R));
  EXPECT_LT(dm.remainder.main_degree(), 2);
  auto eg = extended_gcd(P("x^2-1", R), P("x^2+2*x+1", R));
  EXPECT_EQ(eg.gcd, P("x+1", R));
  EXPECT_EQ(eg.s * P("x^2-1", R) + eg.t * P("x^2+2*x+1", R), eg.gcd);
  EXPECT_THROW(euclid_divmod(P("x", zz_x()), P("x", zz_x())), RingError);
}

TEST(CrtTest, Examples) {
  std::vector<Congruence> sys{{Z(1), Z(4)}, {Z(3), Z(6)}};
  auto res = crt(sys);
  ASSERT_TRUE(res.solvable());
  // Oracle: enumerate 0..11.
  long expected = -1;
  for (long x = 0; x < 12; ++x)
    if (x % 4 == 1 && x % 6 == 3) expected = x;
  EXPECT_EQ(res.solution->solution, Z(expected));
  EXPECT_EQ(res.solution->modulus, Z(12));

  std::vector<Congruence> trivial{{Z(0), Z(7)}};
  EXPECT_EQ(crt(trivial).solution->solution, Z(0));

  std::vector<Congruence> bad{{Z(1), Z(4)}, {Z(2), Z(6)}};
  auto fail = crt(bad);
  ASSERT_FALSE(fail.solvable());
  EXPECT_EQ(fail.conflict->first, 0u);
  EXPECT_EQ(fail.conflict->second, 1u);

  std::vector<Congruence> multivariate{{P("x", zz_xy()), P("y", zz_xy())}};
  EXPECT_THROW(crt(multivariate), RingError);
}

TEST(CrtTest, UnivariateRational) {
  const auto R = qq_x();
  std::vector<Congruence> sys{{P("1", R), P("x", R)}, {P("2", R), P("x-1", R)}};
  auto res = crt(sys);
  ASSERT_TRUE(res.solvable());
  const auto& x = res.solution->solution;
  EXPECT_TRUE(divides(P("x", R), x - P("1", R)));
  EXPECT_TRUE(divides(P("x-1", R), x - P("2", R)));
  EXPECT_EQ(res.solution->modulus, P("x^2-x", R));
  EXPECT_EQ(x, P("x+1", R));
}

TEST(IdentityTest, LcmGcdIdentities) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<RingElement> a;
    const long n = uniform(rng, 1, 5);
    for (long k = 0; k < n; ++k) a.push_back(random_nonzero_int(rng, 300));
    EXPECT_EQ(lcm_gcd_identities(a, random_nonzero_int(rng, 300)), "") << "trial " << trial;
  }
  for (const auto& ring : {zz_xy(), qq_x()})
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<RingElement> a;
      for (int k = 0; k < 3; ++k) a.push_back(random_nonzero_poly(rng, ring, 2, 2, 3));
      EXPECT_EQ(lcm_gcd_identities(a, random_nonzero_poly(rng, ring, 2, 2, 3)), "");
    }
}

TEST(CrtTest, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<long> r, m;
    long prod = 1;
    for (int k = 0; k < 3; ++k) {
      const long mk = uniform(rng, 1, 20);
      if (prod * mk > 10000) break;
      prod *= mk;
      m.push_back(mk);
      r.push_back(uniform(rng, -30, 30));
    }
    EXPECT_EQ(crt_matches_search(r, m), "") << "trial " << trial;
  }
}
