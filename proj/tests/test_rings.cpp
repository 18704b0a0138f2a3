#include <gtest/gtest.h>

#include "printers.hpp"

#include <random>

#include "wittlab/arith.hpp"
#include "wittlab/errors.hpp"
#include "wittlab/nest.hpp"
#include "wittlab/poly.hpp"
#include "wittlab/ring.hpp"

using namespace wittlab;

namespace {

long brute_mobius(long n) {
  int k = 0;
  for (long p = 2; p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    ++k;
  }
  return k % 2 ? -1 : 1;
}

RingElem random_elem(std::mt19937_64& rng, const RingSpecPtr& r) {
  std::uniform_int_distribution<int> d(-6, 6);
  if (!r->is_polynomial()) {
    if (r->kind() == RingSpec::Kind::Rationals) return RingElem::from_rat(r, Rat(d(rng), 1 + (d(rng) + 6) % 4));
    if (r->kind() == RingSpec::Kind::PLocal) return RingElem::from_rat(r, Rat(d(rng), 1 + 3 * ((d(rng) + 6) % 2) + 1));
    return RingElem::from_int(r, d(rng));
  }
  RingElem acc = RingElem::zero(r);
  for (std::size_t v = 0; v < r->vars().size(); ++v)
    for (unsigned e = 0; e < 3; ++e) acc += RingElem::from_int(r, d(rng)) * RingElem::var(r, v).pow(e);
  return acc;
}

}  // namespace

TEST(Arith, MobiusAndDivisorsMatchBruteForce) {
  for (long n = 1; n <= 200; ++n) {
    EXPECT_EQ(mobius(n), brute_mobius(n)) << n;
    std::vector<long> ds;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) ds.push_back(d);
    EXPECT_EQ(divisors(n), ds);
  }
}

TEST(Arith, RationalFormatting) {
  EXPECT_EQ(to_string(Rat(-3, 2)), "-3/2");
  EXPECT_EQ(to_string(Rat(2)), "2");
  EXPECT_EQ(parse_rat("-3/6"), Rat(-1, 2));
  EXPECT_EQ(binomial(Int(-2), 3), Int(-4));
}

TEST(Ring, ParseAndPrintRoundTrip) {
  for (const char* s : {"ZZ", "QQ", "ZZ/12", "ZZ_(3)", "ZZ[x,y]", "ZZ/5[t]", "QQ[u,v,w]"})
    EXPECT_EQ(RingSpec::parse(s)->to_string(), s);
  EXPECT_THROW(RingSpec::parse("RR"), std::invalid_argument);
}

TEST(Ring, ModularArithmeticMatchesMachineIntegers) {
  auto r = RingSpec::mod(12);
  for (long a = -13; a <= 13; ++a)
    for (long b = -13; b <= 13; ++b) {
      auto x = RingElem::from_int(r, a), y = RingElem::from_int(r, b);
      auto red = [](long v) { return ((v % 12) + 12) % 12; };
      EXPECT_EQ((x + y).scalar(), Rat(red(a + b)));
      EXPECT_EQ((x * y).scalar(), Rat(red(a * b)));
      EXPECT_EQ((-x).scalar(), Rat(red(-a)));
    }
  // 1/5 = 5 mod 12; 1/2 does not exist
  EXPECT_EQ(RingElem::from_rat(r, Rat(1, 5)).scalar(), Rat(5));
  EXPECT_ANY_THROW(RingElem::from_rat(r, Rat(1, 2)));
}

TEST(Ring, LocalizationMembership) {
  auto r = RingSpec::plocal(3);
  EXPECT_TRUE(r->contains(Rat(1, 2)));
  EXPECT_FALSE(r->contains(Rat(1, 3)));
  EXPECT_TRUE(r->is_unit(5));
  EXPECT_FALSE(r->is_unit(6));
  EXPECT_THROW(RingElem::from_rat(r, Rat(2, 9)), IntegralityError);
}

TEST(Ring, CharacteristicAndTorsion) {
  EXPECT_EQ(RingSpec::parse("ZZ/7[x]")->char_p(), 7);
  EXPECT_FALSE(RingSpec::parse("ZZ/6")->char_p().has_value());
  EXPECT_TRUE(RingSpec::parse("ZZ_(2)[x]")->torsion_free());
  EXPECT_FALSE(RingSpec::parse("ZZ/4")->torsion_free());
}

TEST(RingProperty, CommutativeRingAxiomsOnSamples) {
  std::mt19937_64 rng(7);
  for (const char* s : {"ZZ", "QQ", "ZZ/12", "ZZ/7", "ZZ_(3)", "ZZ[x,y]", "ZZ/4[t]"}) {
    auto r = RingSpec::parse(s);
    auto zero = RingElem::zero(r), one = RingElem::one(r);
    for (int i = 0; i < 25; ++i) {
      auto a = random_elem(rng, r), b = random_elem(rng, r), c = random_elem(rng, r);
      EXPECT_EQ(a + b, b + a) << s;
      EXPECT_EQ(a * b, b * a) << s;
      EXPECT_EQ((a + b) + c, a + (b + c)) << s;
      EXPECT_EQ((a * b) * c, a * (b * c)) << s;
      EXPECT_EQ(a * (b + c), a * b + a * c) << s;
      EXPECT_EQ(a + zero, a) << s;
      EXPECT_EQ(a * one, a) << s;
      EXPECT_TRUE((a + (-a)).is_zero()) << s;
    }
  }
}

TEST(RingProperty, CanonicalFormIsIdempotent) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (const char* s : {"ZZ/12", "ZZ/9", "ZZ_(5)", "QQ"}) {
    auto r = RingSpec::parse(s);
    for (int i = 0; i < 200; ++i) {
      long den = d(rng);
      if (den == 0) continue;
      Rat q(d(rng), den);
      q.canonicalize();
      if (!r->contains(q)) continue;
      Rat c = r->canon(q);
      EXPECT_EQ(r->canon(c), c) << s << " " << to_string(q);
    }
  }
}

TEST(RingProperty, IntegralRationalsRoundTripThroughIntegers) {
  auto Q = RingSpec::rationals(), Z = RingSpec::integers();
  for (long n = -20; n <= 20; ++n)
    for (long d = 1; d <= 6; ++d) {
      auto x = RingElem::from_rat(Q, Rat(n, d));
      auto v = rational_integrality(x);
      EXPECT_EQ(v.integral, n % d == 0);
      if (v.integral) {
        auto back = RingElem::from_rat(Z, x.scalar());
        EXPECT_EQ(back.scalar(), x.scalar());
      }
    }
}

TEST(RingProperty, PolynomialRingEvaluationIsAHomomorphism) {
  std::mt19937_64 rng(3);
  auto r = RingSpec::parse("ZZ[x,y]");
  auto Z = RingSpec::integers();
  for (int i = 0; i < 30; ++i) {
    auto a = random_elem(rng, r), b = random_elem(rng, r);
    std::map<std::string, RingElem> at{{"x", RingElem::from_int(Z, i - 15)}, {"y", RingElem::from_int(Z, 2 - i)}};
    EXPECT_EQ(poly_eval(a * b, at), poly_eval(a, at) * poly_eval(b, at));
    EXPECT_EQ(poly_eval(a + b, at), poly_eval(a, at) + poly_eval(b, at));
  }
}

TEST(Ring, ParseElements) {
  auto r = RingSpec::parse("ZZ[x,y]");
  auto e = RingElem::parse(r, "(x+y)^2 - 2*x*y");
  EXPECT_EQ(e, RingElem::var(r, "x").pow(2) + RingElem::var(r, "y").pow(2));
  EXPECT_EQ(RingElem::parse(RingSpec::mod(12), "-1").to_string(), "11");
  EXPECT_TRUE(RingElem::parse(r, "6*x").divisible_by(3));
  EXPECT_EQ(RingElem::parse(r, "6*x").exact_div(3), RingElem::parse(r, "2*x"));
}

TEST(Ring, FrobeniusFamilyOnPolynomials) {
  auto r = RingSpec::parse("ZZ[x]");
  auto F = FrobeniusFamily::power_on_vars(r);
  std::vector<RingElem> samples{RingElem::parse(r, "x+1"), RingElem::parse(r, "3*x^2-x")};
  EXPECT_TRUE(frobenius_family_check(F, samples, 8).ok());
}

TEST(Poly, PrintOrderIsGradedLexDescending) {
  Poly p = Poly::var(var::make('X', 1), 2) + Poly::var(var::make('X', 2)) * Rat(2);
  EXPECT_EQ(p.to_string(), "X1^2 + 2*X2");
  Poly q = Poly::var(var::make('X', 6)) * Rat(6) + Poly::var(var::make('X', 1), 6) +
           Poly::var(var::make('X', 3), 2) * Rat(3) + Poly::var(var::make('X', 2), 3) * Rat(2);
  EXPECT_EQ(q.to_string(), "X1^6 + 2*X2^3 + 3*X3^2 + 6*X6");
}

TEST(Poly, ArithmeticAgainstEvaluation) {
  auto x = Poly::var(var::make('x', 1)), y = Poly::var(var::make('x', 2));
  Poly p = (x + y).pow(5) - x.pow(5) - y.pow(5);
  EXPECT_TRUE(p.divisible_by(5));
  EXPECT_FALSE(p.divisible_by(25));
  auto at = [](const Poly& f, long a, long b) {
    return evaluate<Rat>(
        f, [&](VarId v) { return Rat(var::index(v) == 1 ? a : b); }, [](const Rat& c) { return c; }, Rat(0));
  };
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) EXPECT_EQ(at(p, a, b), rpow(Rat(a + b), 5) - rpow(Rat(a), 5) - rpow(Rat(b), 5));
  Poly half = x * Rat(1, 2);
  ASSERT_TRUE(half.non_integral_term().has_value());
  EXPECT_EQ(half.non_integral_term()->second, Rat(1, 2));
}

TEST(Nest, ClosureParseAndDivision) {
  EXPECT_EQ(Nest::parse("4").indices(), (std::vector<long>{1, 2, 3, 4}));
  EXPECT_EQ(Nest::closure({6}).indices(), (std::vector<long>{1, 2, 3, 6}));
  EXPECT_EQ(Nest::ppow(3, 3).indices(), (std::vector<long>{1, 3, 9}));
  EXPECT_THROW(Nest(std::vector<long>{1, 4}), std::invalid_argument);
  Nest n = Nest::range(12);
  EXPECT_EQ(n.divided(4), (std::vector<long>{1, 2, 3}));
  EXPECT_TRUE(n.divided(13).empty());
  EXPECT_EQ(Nest::range(3).dilated(2).indices(), (std::vector<long>{1, 2, 3, 4, 6}));
}
