#include <gtest/gtest.h>

#include "printers.hpp"

#include <random>

#include "wittlab/arith.hpp"
#include "wittlab/errors.hpp"
#include "wittlab/nest.hpp"
#include "wittlab/universal.hpp"

using namespace wittlab;

namespace {

// Ghost component n of integer big Witt coordinates x (x[d] for d | n).
Int ghost_big(const std::map<long, Int>& x, long n) {
  Int s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) s += Int(d) * ipow(x.at(d), static_cast<unsigned long>(n / d));
  return s;
}

Int eval_xy(const Poly& p, const std::map<long, Int>& x, const std::map<long, Int>& y) {
  Rat r = evaluate<Rat>(
      p,
      [&](VarId v) {
        long i = var::index(v);
        return Rat(var::letter(v) == 'X' ? x.at(i) : y.at(i));
      },
      [](const Rat& c) { return c; }, Rat(0));
  EXPECT_EQ(r.get_den(), 1);
  return r.get_num();
}

std::map<long, Int> random_coords(std::mt19937_64& rng, long N) {
  std::uniform_int_distribution<int> d(-4, 4);
  std::map<long, Int> x;
  for (long i = 1; i <= N; ++i) x[i] = d(rng);
  return x;
}

Poly P(char letter, long i, unsigned e = 1) { return Poly::var(var::make(letter, static_cast<std::uint32_t>(i)), e); }

}  // namespace

TEST(WittPolynomial, BigAndPadicForms) {
  EXPECT_EQ(witt_polynomial(6, Flavor::big()).to_string(), "X1^6 + 2*X2^3 + 3*X3^2 + 6*X6");
  EXPECT_EQ(witt_polynomial(2, Flavor::p_adic(3)).to_string(), "X0^9 + 3*X1^3 + 9*X2");
  EXPECT_EQ(witt_polynomial(1, Flavor::big()).to_string(), "X1");
}

TEST(StructurePolys, AdditionOnSmallNest) {
  // w_2: (X1+Y1)^2 + 2 S_2 = X1^2 + 2 X2 + Y1^2 + 2 Y2
  auto fam = structure_polys(StructKind::parse("add"), Flavor::big(), Nest::parse("1,2"));
  ASSERT_EQ(fam->polys.size(), 2u);
  EXPECT_EQ(fam->polys[0], P('X', 1) + P('Y', 1));
  EXPECT_EQ(fam->polys[1], P('X', 2) + P('Y', 2) - P('X', 1) * P('Y', 1));
}

TEST(StructurePolys, NegationAndPadicAddition) {
  // -X1 squared plus 2 N_2 equals -(X1^2 + 2 X2)
  auto neg = structure_polys(StructKind::parse("neg"), Flavor::big(), Nest::range(2));
  EXPECT_EQ(neg->at(2), -P('X', 2) - P('X', 1, 2));
  // p = 2: (X0 + Y0)^2 + 2 S_1 = X0^2 + 2 X1 + Y0^2 + 2 Y1
  auto add = structure_polys(StructKind::parse("add"), Flavor::p_adic(2), Nest::range(2));
  EXPECT_EQ(add->at(1), P('X', 1) + P('Y', 1) - P('X', 0) * P('Y', 0));
}

TEST(StructurePolysProperty, GhostIdentityOnIntegerSamples) {
  std::mt19937_64 rng(5);
  const long N = 8;
  auto add = structure_polys(StructKind::parse("add"), Flavor::big(), Nest::range(N));
  auto mul = structure_polys(StructKind::parse("mul"), Flavor::big(), Nest::range(N));
  for (int t = 0; t < 20; ++t) {
    auto x = random_coords(rng, N), y = random_coords(rng, N);
    std::map<long, Int> s, m;
    for (long n = 1; n <= N; ++n) {
      s[n] = eval_xy(add->at(n), x, y);
      m[n] = eval_xy(mul->at(n), x, y);
    }
    for (long n = 1; n <= N; ++n) {
      EXPECT_EQ(ghost_big(s, n), ghost_big(x, n) + ghost_big(y, n));
      EXPECT_EQ(ghost_big(m, n), ghost_big(x, n) * ghost_big(y, n));
    }
  }
}

TEST(StructurePolysProperty, FrobeniusGhostShift) {
  std::mt19937_64 rng(9);
  auto fam = structure_polys(StructKind::parse("frobenius(2)"), Flavor::big(), Nest::range(4));
  for (int t = 0; t < 10; ++t) {
    auto x = random_coords(rng, 8);
    std::map<long, Int> f;
    for (long n = 1; n <= 4; ++n) f[n] = eval_xy(fam->at(n), x, x);
    for (long n = 1; n <= 4; ++n) EXPECT_EQ(ghost_big(f, n), ghost_big(x, 2 * n));
  }
}

TEST(StructurePolysProperty, DivisorSupport) {
  for (const char* k : {"add", "mul", "neg", "frobenius(2)", "frobenius(3)", "nmult(2)"}) {
    auto kind = StructKind::parse(k);
    long scale = kind.tag == StructKind::Frobenius ? kind.param : 1;
    auto fam = structure_polys(kind, Flavor::big(), Nest::range(6));
    for (std::size_t i = 0; i < fam->indices.size(); ++i) {
      long n = fam->indices[i];
      for (VarId v : fam->polys[i].variables())
        EXPECT_EQ((scale * n) % static_cast<long>(var::index(v)), 0) << k << " member " << n << " uses " << var::name(v);
    }
  }
}

TEST(StructurePolysProperty, SolveIsDeterministicAndCacheRoundTrips) {
  auto kind = StructKind::parse("mul");
  auto a = compute_structure_polys(kind, Flavor::big(), Nest::range(6));
  auto b = compute_structure_polys(kind, Flavor::big(), Nest::range(6));
  EXPECT_EQ(a.polys, b.polys);
  auto c = UnivFamily::from_json(a.to_json());
  EXPECT_EQ(c.polys, a.polys);
  EXPECT_EQ(c.indices, a.indices);
  EXPECT_EQ(structure_polys(kind, Flavor::big(), Nest::range(6))->polys, a.polys);
}

TEST(SolveGhost, NonIntegralFamilyNamesWitness) {
  // s_1 = X1, s_1^2 + 2 s_2 = X1^2 + 1 forces s_2 = 1/2
  std::vector<Poly> targets{P('X', 1), P('X', 1, 2) + Poly(1)};
  auto fam = solve_ghost(targets, Nest::range(2), Flavor::big());
  EXPECT_EQ(fam.polys[1], Poly(Rat(1, 2)));
  EXPECT_FALSE(fam.integral);
  EXPECT_THROW(solve_ghost(targets, Nest::range(2), Flavor::big(), true), IntegralityError);
}

TEST(TeichmullerSum, PowerSumIdentityAndSigns) {
  auto r = teichmuller_sum_polys(6);
  Poly x = Poly::var(var::make('X')), y = Poly::var(var::make('Y'));
  EXPECT_EQ(r[0], x + y);
  for (long n = 1; n <= 6; ++n) {
    Poly s;
    for (long d : divisors(n)) s += r[static_cast<std::size_t>(d - 1)].pow(static_cast<unsigned long>(n / d)) * Rat(d);
    EXPECT_EQ(s, x.pow(static_cast<unsigned long>(n)) + y.pow(static_cast<unsigned long>(n))) << n;
  }
  for (long d = 2; d <= 6; ++d)
    for (const auto& [m, c] : r[static_cast<std::size_t>(d - 1)].terms()) EXPECT_LE(c, 0) << "r_" << d;
}

TEST(Congruences, FrobeniusFamiliesPass) {
  auto f2 = structure_polys(StructKind::parse("frobenius(2)"), Flavor::p_adic(2), Nest::range(3));
  EXPECT_TRUE(congruence_suite(*f2, "frobenius-pth-power", 2).ok());
  auto f3 = structure_polys(StructKind::parse("frobenius(3)"), Flavor::big(), Nest::range(4));
  EXPECT_TRUE(congruence_suite(*f3, "frobenius-pth-power", 3).ok());
  EXPECT_TRUE(congruence_suite(*f3, "frobenius-leading", 3).ok());
  EXPECT_THROW(congruence_suite(*f3, "no-such-set", 3), std::invalid_argument);
}

TEST(FunctionalEquation, PTypicalLogarithm) {
  // f = g + (1/p) f(X^p) with g = X: coefficient of X^{p^k} is p^{-k}, others vanish
  FEIngredients ing;
  ing.p = 2;
  ing.q = 2;
  ing.s = {Rat(1, 2)};
  ing.subring = RingSpec::plocal(2);
  std::vector<Rat> g{0, 1};
  auto f = fe_series(ing, g, 16);
  for (long n = 1; n <= 16; ++n) {
    bool ppow = (n & (n - 1)) == 0;
    EXPECT_EQ(f[static_cast<std::size_t>(n)], ppow ? Rat(1, n) : Rat(0)) << n;
  }
}

TEST(FunctionalEquation, MultiplicativeFormalGroup) {
  // log(1+X) gives X + Y + XY
  std::vector<Rat> f(9);
  for (long n = 1; n <= 8; ++n) f[static_cast<std::size_t>(n)] = Rat(n % 2 ? 1 : -1, n);
  auto G = fe_formal_group(f, 8, RingSpec::integers());
  EXPECT_TRUE(G.integral);
  Poly x = Poly::var(var::make('X')), y = Poly::var(var::make('Y'));
  EXPECT_EQ(G.F, x + y + x * y);
}

TEST(FunctionalEquation, SeriesReversion) {
  std::vector<Rat> f{0, 1, 1};  // X + X^2
  auto g = series_reversion(f, 5);
  // inverse of X + X^2 has Catalan coefficients with alternating signs
  EXPECT_EQ(g[1], 1);
  EXPECT_EQ(g[2], -1);
  EXPECT_EQ(g[3], 2);
  EXPECT_EQ(g[4], -5);
  EXPECT_EQ(g[5], 14);
}
