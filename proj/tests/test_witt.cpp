#include <gtest/gtest.h>

#include "printers.hpp"

#include <random>

#include "wittlab/arith.hpp"
#include "wittlab/errors.hpp"
#include "wittlab/witt.hpp"

using namespace wittlab;

namespace {

const RingSpecPtr ZZ = RingSpec::integers();

std::vector<Int> random_ints(std::mt19937_64& rng, std::size_t n, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<Int> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

// Ghost components over ZZ computed straight from the definition.
std::vector<Int> ghost_oracle(const WittVec& a) {
  std::vector<Int> out;
  for (long n : a.nest().indices()) {
    Int s = 0;
    for (long d : a.nest().indices())
      if (n % d == 0) s += Int(d) * ipow(a[d].scalar().get_num(), static_cast<unsigned long>(n / d));
    out.push_back(s);
  }
  return out;
}

Int ghost_at(const WittVec& a, long n) {
  Int s = 0;
  for (long d : divisors(n)) s += Int(d) * ipow(a[d].scalar().get_num(), static_cast<unsigned long>(n / d));
  return s;
}

// W_n(F_p) -> Z/p^n, (a_0, ..., a_{n-1}) -> sum t(a_i) p^i with t the
// Teichmuller representative a^(p^n) mod p^n.
Int to_zpn(const std::vector<long>& a, long p) {
  long n = static_cast<long>(a.size());
  Int mod = ipow(Int(p), static_cast<unsigned long>(n)), s = 0;
  for (long i = 0; i < n; ++i) {
    Int t;
    mpz_powm(t.get_mpz_t(), Int(a[static_cast<std::size_t>(i)]).get_mpz_t(), mod.get_mpz_t(), mod.get_mpz_t());
    s += t * ipow(Int(p), static_cast<unsigned long>(i));
  }
  return Int(((s % mod) + mod) % mod);
}

std::vector<long> digits_of(long code, long p, long n) {
  std::vector<long> a;
  for (long i = 0; i < n; ++i, code /= p) a.push_back(code % p);
  return a;
}

WittVec fp_vec(const RingSpecPtr& Fp, long p, const std::vector<long>& a) {
  std::vector<RingElem> c;
  for (long x : a) c.push_back(RingElem::from_int(Fp, x));
  return WittVec::padic(Fp, p, c);
}

std::vector<long> coords_long(const WittVec& w) {
  std::vector<long> out;
  for (const auto& c : w.coords()) out.push_back(c.scalar().get_num().get_si());
  return out;
}

}  // namespace

TEST(WittVec, SmallSums) {
  auto a = WittVec::from_ints(ZZ, Nest::range(2), {1, 0});
  // (1,0) + (1,0) = (2,-1): ghost (2, 2)
  EXPECT_EQ(witt_add(a, a), WittVec::from_ints(ZZ, Nest::range(2), {2, -1}));
  EXPECT_EQ(WittVec::one(ZZ, Nest::range(3)), WittVec::from_ints(ZZ, Nest::range(3), {1, 0, 0}));
  EXPECT_THROW(witt_add(a, WittVec::from_ints(ZZ, Nest::range(3), {1, 0, 0})), MismatchError);
}

TEST(WittVecProperty, RingOperationsMatchGhostOracle) {
  std::mt19937_64 rng(1);
  Nest nest = Nest::parse("1,2,3,4,6,12");
  for (int t = 0; t < 30; ++t) {
    auto a = WittVec::from_ints(ZZ, nest, random_ints(rng, nest.size()));
    auto b = WittVec::from_ints(ZZ, nest, random_ints(rng, nest.size()));
    auto ga = ghost_oracle(a), gb = ghost_oracle(b);
    auto gs = ghost_oracle(witt_add(a, b)), gm = ghost_oracle(witt_mul(a, b)), gn = ghost_oracle(witt_neg(a));
    for (std::size_t i = 0; i < nest.size(); ++i) {
      EXPECT_EQ(gs[i], ga[i] + gb[i]);
      EXPECT_EQ(gm[i], ga[i] * gb[i]);
      EXPECT_EQ(gn[i], -ga[i]);
    }
    auto g = ghost(a);
    for (std::size_t i = 0; i < nest.size(); ++i) EXPECT_EQ(g.values[i].scalar(), Rat(ga[i]));
    EXPECT_EQ(from_ghost(g), a);
  }
}

TEST(WittVecProperty, OperatorsOnGhostComponents) {
  std::mt19937_64 rng(2);
  Nest nest = Nest::range(12);
  auto u = RingElem::from_int(ZZ, 3);
  for (int t = 0; t < 10; ++t) {
    auto a = WittVec::from_ints(ZZ, nest, random_ints(rng, 12));
    for (long m : {2L, 3L}) {
      auto V = verschiebung(m, a), F = frobenius(m, a), N = nmult(m, a);
      for (long n = 1; n <= 12; ++n) {
        EXPECT_EQ(ghost_at(V, n), n % m ? Int(0) : Int(m) * ghost_at(a, n / m));
        EXPECT_EQ(ghost_at(N, n), Int(m) * ghost_at(a, n));
      }
      for (long n : F.nest().indices()) EXPECT_EQ(ghost_at(F, n), ghost_at(a, m * n));
    }
    auto H = homothety(u, a);
    for (long n = 1; n <= 12; ++n) EXPECT_EQ(ghost_at(H, n), ipow(Int(3), static_cast<unsigned long>(n)) * ghost_at(a, n));
  }
}

TEST(WittVec, TeichmullerGhostsArePowers) {
  auto r = RingSpec::parse("ZZ[x]");
  auto x = RingElem::var(r, "x");
  auto t = teichmuller(x, Nest::range(6));
  auto g = ghost(t);
  for (long n = 1; n <= 6; ++n) EXPECT_EQ(g[n], x.pow(static_cast<unsigned long>(n)));
  EXPECT_EQ(t, witt_mul(t, teichmuller(RingElem::one(r), Nest::range(6))));
}

TEST(WittVecProperty, DisjointSupportsAddCoordinatewise) {
  std::mt19937_64 rng(4);
  Nest nest = Nest::range(10);
  for (int t = 0; t < 20; ++t) {
    auto xs = random_ints(rng, 10), ys = random_ints(rng, 10);
    for (std::size_t i = 0; i < 10; ++i) (i % 2 == static_cast<std::size_t>(t % 2) ? xs[i] : ys[i]) = 0;
    std::vector<Int> sum(10);
    for (std::size_t i = 0; i < 10; ++i) sum[i] = xs[i] + ys[i];
    EXPECT_EQ(witt_add(WittVec::from_ints(ZZ, nest, xs), WittVec::from_ints(ZZ, nest, ys)),
              WittVec::from_ints(ZZ, nest, sum));
  }
}

TEST(WittVecProperty, SumOfShiftedTeichmullers) {
  std::mt19937_64 rng(6);
  Nest nest = Nest::range(8);
  for (int t = 0; t < 10; ++t) {
    auto xs = random_ints(rng, 8);
    auto a = WittVec::from_ints(ZZ, nest, xs);
    auto acc = WittVec::zero(ZZ, nest);
    for (long n = 1; n <= 8; ++n) {
      auto tn = teichmuller(RingElem::from_int(ZZ, xs[static_cast<std::size_t>(n - 1)]), nest);
      acc = witt_add(acc, verschiebung(n, tn));
    }
    EXPECT_EQ(acc, a);
  }
}

TEST(PadicWitt, FiniteFieldVectorsAreIntegersModPn) {
  for (long p : {2L, 3L}) {
    auto Fp = RingSpec::mod(p);
    const long n = 3, size = p * p * p;
    Int mod = ipow(Int(p), n);
    for (long i = 0; i < size; ++i)
      for (long j = 0; j < size; ++j) {
        auto a = digits_of(i, p, n), b = digits_of(j, p, n);
        auto s = coords_long(witt_add(fp_vec(Fp, p, a), fp_vec(Fp, p, b)));
        auto m = coords_long(witt_mul(fp_vec(Fp, p, a), fp_vec(Fp, p, b)));
        EXPECT_EQ(to_zpn(s, p), (to_zpn(a, p) + to_zpn(b, p)) % mod) << p << " " << i << " " << j;
        EXPECT_EQ(to_zpn(m, p), (to_zpn(a, p) * to_zpn(b, p)) % mod) << p << " " << i << " " << j;
      }
  }
}

TEST(PadicWitt, CharacteristicPIdentities) {
  for (long p : {2L, 3L, 5L}) {
    auto Fp = RingSpec::mod(p);
    auto one = WittVec::padic_one(Fp, p, 4);
    auto s = one;
    for (long k = 1; k < p; ++k) s = witt_add(s, one);
    EXPECT_EQ(coords_long(s), (std::vector<long>{0, 1, 0, 0})) << p;
  }
}

TEST(PadicWittProperty, ValuationIsAdditiveOverFp) {
  std::mt19937_64 rng(8);
  for (long p : {2L, 3L}) {
    auto Fp = RingSpec::mod(p);
    std::uniform_int_distribution<long> d(0, p - 1);
    auto val = [](const WittVec& w) {
      for (std::size_t i = 0; i < w.size(); ++i)
        if (!w.coords()[i].is_zero()) return static_cast<long>(i);
      return static_cast<long>(w.size());
    };
    const std::size_t len = p == 2 ? 5 : 3;
    for (int t = 0; t < 40; ++t) {
      std::vector<long> a(len), b(len);
      for (auto& x : a) x = d(rng);
      for (auto& x : b) x = d(rng);
      auto wa = fp_vec(Fp, p, a), wb = fp_vec(Fp, p, b);
      long va = val(wa), vb = val(wb);
      if (va + vb >= static_cast<long>(len)) continue;
      EXPECT_EQ(val(witt_mul(wa, wb)), va + vb);
    }
  }
}

TEST(WittVecProperty, RingMapsCommuteWithOperations) {
  std::mt19937_64 rng(10);
  auto F5 = RingSpec::mod(5);
  auto reduce = [&](const RingElem& x) { return RingElem::from_rat(F5, x.scalar()); };
  Nest nest = Nest::range(6);
  for (int t = 0; t < 10; ++t) {
    auto a = WittVec::from_ints(ZZ, nest, random_ints(rng, 6)), b = WittVec::from_ints(ZZ, nest, random_ints(rng, 6));
    EXPECT_EQ(witt_add(a, b).map(F5, reduce), witt_add(a.map(F5, reduce), b.map(F5, reduce)));
    EXPECT_EQ(witt_mul(a, b).map(F5, reduce), witt_mul(a.map(F5, reduce), b.map(F5, reduce)));
    EXPECT_EQ(verschiebung(2, a).map(F5, reduce), verschiebung(2, a.map(F5, reduce)));
  }
}

TEST(WittVec, PTypificationMasksGhosts) {
  std::mt19937_64 rng(12);
  auto Q = RingSpec::rationals();
  Nest nest = Nest::range(12);
  auto a = WittVec::from_ints(Q, nest, random_ints(rng, 12));
  auto e = p_typify(a, 2);
  auto ga = ghost(a), ge = ghost(e);
  for (long n = 1; n <= 12; ++n) {
    bool ppow = (n & (n - 1)) == 0;
    EXPECT_EQ(ge[n], ppow ? ga[n] : RingElem::zero(Q)) << n;
  }
  EXPECT_EQ(p_typify(e, 2), e);
}

TEST(Dold, KnownSequences) {
  auto r = dold_test({1, 3, 4, 7, 11}, 5);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.gcd_form_agrees);
  auto bad = dold_test({1, 2}, 2);
  EXPECT_FALSE(bad.pass);
  EXPECT_EQ(bad.first_failure, 2);
}

TEST(DoldProperty, GhostsOfIntegerVectorsPassAndMatchMobiusSums) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 30; ++t) {
    auto a = WittVec::from_ints(ZZ, Nest::range(10), random_ints(rng, 10));
    auto b = ghost_oracle(a);
    auto r = dold_test(b, 10);
    EXPECT_TRUE(r.pass);
    for (long n = 1; n <= 10; ++n) {
      Int c = 0;
      for (long d : divisors(n)) c += mobius(d) * b[static_cast<std::size_t>(n / d - 1)];
      EXPECT_EQ(r.c[static_cast<std::size_t>(n - 1)], c);
    }
  }
}

TEST(Teichmuller, LiftsAndDigitSums) {
  EXPECT_EQ(teichmuller_lift_mod(2, 5, 3), Int(57));
  for (long p : {3L, 5L, 7L})
    for (int k = 1; k <= 4; ++k) {
      Int mod = ipow(Int(p), static_cast<unsigned long>(k));
      for (long a = 0; a < p; ++a) {
        Int t = teichmuller_lift_mod(a, p, k), tp;
        mpz_powm_ui(tp.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(p), mod.get_mpz_t());
        EXPECT_EQ(tp, t);
        EXPECT_EQ(Int(t % p), Int(a));
      }
      for (long a = 1; a < p; ++a)
        for (long b = 1; b < p; ++b) EXPECT_TRUE(teich_digit_sum(a, b, p, k).verified);
    }
}

TEST(GhostWitt, IntegerFrobeniusFamily) {
  auto F = FrobeniusFamily::identity(ZZ);
  std::vector<RingElem> good, bad;
  for (long n = 1; n <= 8; ++n) {
    good.push_back(RingElem::from_int(ZZ, ipow(Int(2), static_cast<unsigned long>(n)) + 1));
    bad.push_back(RingElem::from_int(ZZ, n));
  }
  EXPECT_TRUE(is_ghost_witt(good, F, 8).ok);
  auto v = is_ghost_witt(bad, F, 8);
  EXPECT_FALSE(v.ok);
  EXPECT_EQ(v.p, 2);
}
