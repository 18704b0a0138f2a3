#include <gtest/gtest.h>

#include "printers.hpp"

#include <random>

#include "wittlab/arith.hpp"
#include "wittlab/lambda.hpp"
#include "wittlab/necklace.hpp"

using namespace wittlab;

namespace {

const RingSpecPtr ZZ = RingSpec::integers();

// Primitive words of length n over a letters, up to rotation.
Int brute_necklaces(long a, long n) {
  long total = 1;
  for (long i = 0; i < n; ++i) total *= a;
  long primitive = 0;
  for (long w = 0; w < total; ++w) {
    std::vector<long> word;
    for (long i = 0, x = w; i < n; ++i, x /= a) word.push_back(x % a);
    bool prim = true;
    for (long s = 1; s < n && prim; ++s) {
      if (n % s) continue;
      bool per = true;
      for (long i = 0; i < n && per; ++i) per = word[static_cast<std::size_t>(i)] == word[static_cast<std::size_t>((i + s) % n)];
      prim = !per;
    }
    primitive += prim;
  }
  return Int(primitive / n);
}

// Points of sum b_r C_r fixed by nZ: C_r is fixed pointwise exactly when r | n.
Int fixed_points(const CyclicSet& x, long n) {
  Int s = 0;
  for (long r = 1; r <= x.bound(); ++r)
    if (n % r == 0) s += Int(r) * x[r];
  return s;
}

CyclicSet random_set(std::mt19937_64& rng, long N) {
  std::uniform_int_distribution<int> d(-3, 3);
  CyclicSet x = CyclicSet::zero(N);
  for (auto& b : x.b) b = d(rng);
  return x;
}

WittVec random_vec(std::mt19937_64& rng, long N) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<Int> xs(static_cast<std::size_t>(N));
  for (auto& v : xs) v = d(rng);
  return WittVec::from_ints(ZZ, Nest::range(N), xs);
}

}  // namespace

TEST(Necklace, NumbersMatchEnumeration) {
  for (long a = 1; a <= 3; ++a)
    for (long n = 1; n <= 7; ++n) {
      EXPECT_EQ(necklace_number(a, n), brute_necklaces(a, n)) << a << " " << n;
      Rat v = evaluate<Rat>(
          necklace_poly(n), [&](VarId) { return Rat(a); }, [](const Rat& c) { return c; }, Rat(0));
      EXPECT_EQ(v, Rat(necklace_number(a, n)));
    }
  EXPECT_EQ(necklace_number(4, 6), Int(670));
}

TEST(Necklace, IdentitiesHold) {
  EXPECT_TRUE(necklace_identity_check(NecklaceIdentity::Product, {2, 3}, 12).ok());
  EXPECT_TRUE(necklace_identity_check(NecklaceIdentity::Power, {2, 3}, 12).ok());
  EXPECT_TRUE(necklace_identity_check(NecklaceIdentity::Cyclotomic, {3}, 10).ok());
  EXPECT_TRUE(necklace_identity_check(NecklaceIdentity::Strehl, {2, 3}, 8).ok());
  EXPECT_EQ(parse_necklace_identity("strehl"), NecklaceIdentity::Strehl);
}

TEST(NecklaceRingProperty, GhostIsMultiplicative) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int t = 0; t < 20; ++t) {
    std::vector<Int> a(10), b(10);
    for (auto& v : a) v = d(rng);
    for (auto& v : b) v = d(rng);
    auto x = NecklaceVec::from_ints(ZZ, a), y = NecklaceVec::from_ints(ZZ, b);
    auto gx = nr_ghost(x), gy = nr_ghost(y), gm = nr_ghost(nr_mul(x, y)), gs = nr_ghost(nr_add(x, y));
    for (std::size_t i = 0; i < 10; ++i) {
      EXPECT_EQ(gm[i], gx[i] * gy[i]);
      EXPECT_EQ(gs[i], gx[i] + gy[i]);
    }
    EXPECT_EQ(nr_to_lambda(x), from_necklace(ZZ, x.c));
    EXPECT_EQ(itp_inverse(itp(x)), x);
  }
}

TEST(Burnside, OrbitProductsAndMarks) {
  auto c4 = CyclicSet::orbit(4, 12), c6 = CyclicSet::orbit(6, 12);
  auto p = burnside_product(c4, c6);
  CyclicSet want = CyclicSet::zero(12);
  want.b[11] = 2;  // C_4 C_6 = 2 C_12
  EXPECT_EQ(p, want);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    auto x = random_set(rng, 12), y = random_set(rng, 12);
    auto xy = burnside_product(x, y);
    for (long n = 1; n <= 12; ++n) {
      EXPECT_EQ(burnside_phi(n, x), fixed_points(x, n));
      EXPECT_EQ(burnside_phi(n, xy), fixed_points(x, n) * fixed_points(y, n));
    }
  }
}

TEST(BurnsideProperty, TIsARingMapCompatibleWithOperators) {
  std::mt19937_64 rng(3);
  const long N = 12;
  for (int t = 0; t < 10; ++t) {
    auto x = random_vec(rng, N), y = random_vec(rng, N);
    EXPECT_EQ(T_map(witt_add(x, y), N), burnside_add(T_map(x, N), T_map(y, N)));
    EXPECT_EQ(T_map(witt_mul(x, y), N), burnside_product(T_map(x, N), T_map(y, N)));
    for (long n : {2L, 3L}) {
      EXPECT_EQ(T_map(verschiebung(n, x), N), burnside_ind(n, T_map(x, N)));
      auto f = frobenius(n, x);
      long M = N / n;
      auto res = burnside_res(n, T_map(x, N));
      res.b.resize(static_cast<std::size_t>(M));
      EXPECT_EQ(T_map(f, M), res);
    }
  }
}

TEST(Burnside, SymmetricPowers) {
  // S^2(C_2): {0,0} and {1,1} swap, {0,1} is fixed
  auto s2 = sym_power(2, CyclicSet::orbit(2, 4));
  CyclicSet want = CyclicSet::zero(s2.bound());
  want.b[0] = 1;
  want.b[1] = 1;
  EXPECT_EQ(s2, want);
}

TEST(BurnsideProperty, SymmetricPowerOfDisjointUnion) {
  const long N = 6;
  CyclicSet X = burnside_add(CyclicSet::orbit(1, N), CyclicSet::orbit(2, N));
  CyclicSet Y = CyclicSet::orbit(2, N);
  auto S = [&](long n, const CyclicSet& Z) { return n == 0 ? CyclicSet::orbit(1, N) : sym_power(n, Z); };
  for (long n = 1; n <= 3; ++n) {
    CyclicSet acc = CyclicSet::zero(N);
    for (long i = 0; i <= n; ++i) {
      auto a = S(i, X), b = S(n - i, Y);
      a.b.resize(static_cast<std::size_t>(N));
      b.b.resize(static_cast<std::size_t>(N));
      acc = burnside_add(acc, burnside_product(a, b));
    }
    auto lhs = sym_power(n, burnside_add(X, Y));
    lhs.b.resize(static_cast<std::size_t>(N));
    EXPECT_EQ(lhs, acc) << n;
  }
}

TEST(Burnside, SyPIsTheCycleProduct) {
  CyclicSet x = CyclicSet::zero(3);
  x.b = {2, 1, 0};
  // (1 - t)^{-2} (1 - t^2)^{-1}
  EXPECT_EQ(syP(x, 5).to_string(), "1 + 2 t + 4 t^2 + 6 t^3 + 9 t^4 + 12 t^5 + O(t^6)");
}

TEST(Burnside, ImageCriterionAndQHat) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 10; ++t) EXPECT_TRUE(image_test(burnside_ghost(random_set(rng, 10))).pass);
  auto bad = image_test({1, 2});
  EXPECT_FALSE(bad.pass);
  EXPECT_EQ(bad.first_failure, 2);
  auto q = q_hat(3, 6);
  for (long d = 1; d <= 6; ++d) EXPECT_EQ(q[d], necklace_number(3, d));
}

TEST(Burnside, DiagramCommutes) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 5; ++t) EXPECT_TRUE(diagram_check(random_vec(rng, 8), 8).ok());
}
