#include <gtest/gtest.h>

#include "printers.hpp"

#include <random>

#include "wittlab/arith.hpp"
#include "wittlab/errors.hpp"
#include "wittlab/lambda.hpp"

using namespace wittlab;

namespace {

const RingSpecPtr ZZ = RingSpec::integers();

Series random_series(std::mt19937_64& rng, long order) {
  std::uniform_int_distribution<int> d(-4, 4);
  std::vector<Int> c(static_cast<std::size_t>(order));
  for (auto& x : c) x = d(rng);
  return Series::from_ints(ZZ, c);
}

Int coeff(const Series& s, long k) { return s.coeff(k).scalar().get_num(); }

// Coefficients of (1 - u t^d)^{-e} up to t^order.
Series binomial_power(const Int& u, long d, long e, long order) {
  std::vector<Int> c(static_cast<std::size_t>(order), 0);
  for (long k = 1; k * d <= order; ++k)
    c[static_cast<std::size_t>(k * d - 1)] = binomial(Int(e + k - 1), static_cast<unsigned long>(k)) *
                                             ipow(u, static_cast<unsigned long>(k));
  return Series::from_ints(ZZ, c);
}

// Aperiodic words of length n over an alphabet of size a, divided by n.
long aperiodic_necklaces(long a, long n) {
  long total = 1;
  for (long i = 0; i < n; ++i) total *= a;
  long count = 0;
  for (long w = 0; w < total; ++w) {
    std::vector<long> word;
    for (long i = 0, x = w; i < n; ++i, x /= a) word.push_back(x % a);
    bool aperiodic = true;
    for (long s = 1; s < n && aperiodic; ++s) {
      if (n % s) continue;
      bool periodic = true;
      for (long i = 0; i < n && periodic; ++i) periodic = word[static_cast<std::size_t>(i)] == word[static_cast<std::size_t>((i + s) % n)];
      aperiodic = !periodic;
    }
    count += aperiodic;
  }
  return count / n;
}

}  // namespace

TEST(Series, PrintFormat) {
  EXPECT_EQ(Series::from_ints(ZZ, {1, 2, 0, -1}).to_string(), "1 + t + 2 t^2 - t^4 + O(t^5)");
  EXPECT_EQ(Series::one(ZZ, 2).to_string(), "1 + O(t^3)");
}

TEST(SeriesProperty, AdditionIsTruncatedProduct) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    auto a = random_series(rng, 8), b = random_series(rng, 6);
    auto s = series_add(a, b);
    ASSERT_EQ(s.order(), 6);
    for (long k = 1; k <= 6; ++k) {
      Int c = 0;
      for (long i = 0; i <= k; ++i) c += coeff(a, i) * coeff(b, k - i);
      EXPECT_EQ(coeff(s, k), c);
    }
    EXPECT_EQ(series_add(a, series_neg(a)), Series::one(ZZ, 8));
  }
}

TEST(Series, GeometricProductsMultiply) {
  for (long x = -3; x <= 3; ++x)
    for (long y = -3; y <= 3; ++y) {
      auto p = witt_product(Series::geometric(RingElem::from_int(ZZ, x), 8),
                            Series::geometric(RingElem::from_int(ZZ, y), 8));
      EXPECT_EQ(p, Series::geometric(RingElem::from_int(ZZ, x * y), 8));
    }
}

TEST(Series, ExplicitProductEqualDegrees) {
  // r = s = 2: m = 2 and the exponent is -rs/m = -2
  auto a = Series::geometric(RingElem::from_int(ZZ, 2), 10, 2);
  auto b = Series::geometric(RingElem::from_int(ZZ, 3), 10, 2);
  EXPECT_EQ(witt_product(a, b), binomial_power(6, 2, 2, 10));
}

TEST(SeriesProperty, GhostMapIsRingHomomorphism) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 15; ++t) {
    auto a = random_series(rng, 7), b = random_series(rng, 7);
    auto ga = series_ghost(a), gb = series_ghost(b);
    auto gs = series_ghost(series_add(a, b)), gm = series_ghost(witt_product(a, b));
    for (std::size_t i = 0; i < 7; ++i) {
      EXPECT_EQ(gs[i], ga[i] + gb[i]);
      EXPECT_EQ(gm[i], ga[i] * gb[i]);
    }
    EXPECT_EQ(series_from_ghost(ZZ, ga), a);
  }
}

TEST(Series, GhostOfGeometricIsPowers) {
  auto g = series_ghost(Series::geometric(RingElem::from_int(ZZ, 3), 6));
  for (long n = 1; n <= 6; ++n) EXPECT_EQ(g[static_cast<std::size_t>(n - 1)].scalar(), Rat(ipow(Int(3), n)));
  std::vector<RingElem> p{RingElem::from_int(ZZ, 1), RingElem::from_int(ZZ, 0)};
  EXPECT_THROW(series_from_ghost(ZZ, p), IntegralityError);
}

TEST(SeriesProperty, WittCoordinatesRoundTrip) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    auto a = random_series(rng, 9);
    EXPECT_EQ(from_witt(to_witt(a)), a);
  }
  // prod (1 - x_d t^d)^{-1} with x = (1, 0, ...) is the geometric series
  auto one = WittVec::one(ZZ, Nest::range(5));
  EXPECT_EQ(from_witt(one), Series::geometric(RingElem::one(ZZ), 5));
}

TEST(Series, NecklaceCoordinatesOfGeometricSeries) {
  for (long a = 2; a <= 3; ++a) {
    auto nc = to_necklace(Series::geometric(RingElem::from_int(ZZ, a), 7));
    ASSERT_TRUE(nc.integral);
    for (long n = 1; n <= 7; ++n)
      EXPECT_EQ(nc.c[static_cast<std::size_t>(n - 1)].scalar(), Rat(aperiodic_necklaces(a, n))) << a << " " << n;
    std::vector<RingElem> back;
    for (const auto& c : nc.c) back.push_back(change_ring(ZZ, c));
    EXPECT_EQ(from_necklace(ZZ, back), Series::geometric(RingElem::from_int(ZZ, a), 7));
  }
}

TEST(Series, OperatorsOnGeometricSeries) {
  auto r = RingSpec::parse("ZZ[x]");
  auto x = RingElem::var(r, "x");
  auto g = Series::geometric(x, 8);
  EXPECT_EQ(adams(2, g), Series::geometric(x.pow(2), 4));
  EXPECT_EQ(series_frobenius(3, g), Series::geometric(x.pow(3), 2));
  EXPECT_EQ(series_verschiebung(2, g), Series::geometric(x, 8, 2));
  EXPECT_EQ(series_homothety(RingElem::from_int(r, 5), g), Series::geometric(x * RingElem::from_int(r, 5), 8));
}

TEST(SeriesProperty, AdamsAgreesWithFrobenius) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 5; ++t) {
    auto a = random_series(rng, 6);
    EXPECT_EQ(adams(2, a), series_frobenius(2, a));
    EXPECT_EQ(adams(3, a), series_frobenius(3, a));
  }
}

TEST(Series, SigmaOfIdentityFamilyIsBinomial) {
  for (long x = -3; x <= 4; ++x) {
    auto s = sigma_from_adams(FrobeniusFamily::identity(ZZ), RingElem::from_int(ZZ, x), 8);
    for (long k = 1; k <= 8; ++k) EXPECT_EQ(coeff(s, k), binomial(Int(x + k - 1), static_cast<unsigned long>(k))) << x;
  }
}

TEST(ArtinHasse, FirstOuterCoordinateIsInput) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<Int> xs(12);
  for (auto& v : xs) v = d(rng);
  auto x = WittVec::from_ints(ZZ, Nest::range(12), xs);
  auto ah = artin_hasse(x, 3, 4);
  ASSERT_EQ(ah.outer.size(), 3u);
  EXPECT_EQ(ah.outer[0], x.restrict_to(Nest::range(4)));
}

TEST(Cartier, SingleTermsActAsOperators) {
  auto r = RingSpec::parse("ZZ[T]");
  auto T = RingElem::var(r, "T");
  auto a = Series::geometric(T, 8);
  auto c = RingElem::from_int(r, 2);
  EXPECT_EQ(cartier_apply(CartierOp::term(1, c, 1, 8), a), series_homothety(c, a));
  EXPECT_EQ(cartier_apply(CartierOp::term(2, RingElem::one(r), 1, 8), a), series_verschiebung(2, a));
}

TEST(Cartier, DEMatrixRoundTrip) {
  auto r = RingSpec::integers();
  auto op = cartier_add(CartierOp::term(1, RingElem::from_int(r, 3), 1, 6), CartierOp::term(2, RingElem::from_int(r, -1), 3, 6));
  op = cartier_normalize(op);
  auto d = de_matrix(op, 6);
  EXPECT_EQ(d.entries.at({1, 1}), RingElem::from_int(r, 3));
  EXPECT_EQ(d.entries.at({2, 3}), RingElem::from_int(r, -1));
  EXPECT_EQ(d.entries.size(), 2u);
  EXPECT_EQ(cartier_normalize(reconstruct(d, 6)).to_string(), op.to_string());
}

TEST(Cartier, TeichmullerScalarIsHomothety) {
  auto r = RingSpec::parse("ZZ[u]");
  auto u = RingElem::var(r, "u");
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<RingElem> c;
  for (int i = 0; i < 6; ++i) c.push_back(RingElem::from_int(r, d(rng)));
  Series a(r, c);
  EXPECT_EQ(witt_scalar_action(teichmuller(u, Nest::range(6)), a), series_homothety(u, a));
}
