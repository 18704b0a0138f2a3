#include <gtest/gtest.h>

#include "printers.hpp"

#include <algorithm>
#include <functional>

#include "wittlab/arith.hpp"
#include "wittlab/errors.hpp"
#include "wittlab/necklace.hpp"
#include "wittlab/symm.hpp"

using namespace wittlab;

namespace {

Poly xv(int i, unsigned e = 1) { return Poly::var(var::make('x', static_cast<std::uint32_t>(i)), e); }

// Symmetric polynomials in x1..xN straight from their definitions.
Poly power_sum(int k, int N) {
  Poly s;
  for (int i = 1; i <= N; ++i) s += xv(i, static_cast<unsigned>(k));
  return s;
}

Poly elementary(int k, int N) {
  Poly s;
  std::function<void(int, int, Poly)> rec = [&](int start, int left, Poly acc) {
    if (left == 0) {
      s += acc;
      return;
    }
    for (int i = start; i <= N; ++i) rec(i + 1, left - 1, acc * xv(i));
  };
  rec(1, k, Poly(1));
  return s;
}

Poly complete(int k, int N) {
  Poly s;
  std::function<void(int, int, Poly)> rec = [&](int start, int left, Poly acc) {
    if (left == 0) {
      s += acc;
      return;
    }
    for (int i = start; i <= N; ++i) rec(i, left - 1, acc * xv(i));
  };
  rec(1, k, Poly(1));
  return s;
}

Poly monomial_sym(const Partition& l, int N) {
  std::vector<int> exps(static_cast<std::size_t>(N), 0);
  if (static_cast<int>(l.size()) > N) return Poly();
  std::copy(l.begin(), l.end(), exps.begin());
  std::sort(exps.begin(), exps.end());
  Poly s;
  do {
    Poly m(1);
    for (int i = 0; i < N; ++i)
      if (exps[static_cast<std::size_t>(i)]) m *= xv(i + 1, static_cast<unsigned>(exps[static_cast<std::size_t>(i)]));
    s += m;
  } while (std::next_permutation(exps.begin(), exps.end()));
  return s;
}

Poly product_of(const Partition& l, const std::function<Poly(int)>& f) {
  Poly s(1);
  for (int k : l) s *= f(k);
  return s;
}

// Semistandard tableaux of shape lambda and content mu.
long kostka(const Partition& lambda, const Partition& mu) {
  int n = part::weight(lambda);
  std::vector<int> filling;
  for (std::size_t v = 0; v < mu.size(); ++v) filling.insert(filling.end(), static_cast<std::size_t>(mu[v]), static_cast<int>(v));
  std::vector<std::vector<int>> rows(lambda.size());
  long count = 0;
  std::vector<int> left(mu.begin(), mu.end());
  std::function<void(int)> place = [&](int cell) {
    if (cell == n) {
      ++count;
      return;
    }
    std::size_t r = 0;
    int seen = 0;
    while (seen + lambda[r] <= cell) seen += lambda[r++];
    std::size_t c = static_cast<std::size_t>(cell - seen);
    for (int v = 0; v < static_cast<int>(mu.size()); ++v) {
      if (!left[static_cast<std::size_t>(v)]) continue;
      if (c > 0 && rows[r][c - 1] > v) continue;
      if (r > 0 && rows[r - 1][c] >= v) continue;
      --left[static_cast<std::size_t>(v)];
      rows[r].push_back(v);
      place(cell + 1);
      rows[r].pop_back();
      ++left[static_cast<std::size_t>(v)];
    }
  };
  place(0);
  return count;
}

Rat det(std::vector<std::vector<Rat>> a) {
  std::size_t n = a.size();
  Rat d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rat f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

Int z_oracle(const Partition& l) {
  Int z = 1;
  for (int k = 1; k <= 12; ++k) {
    auto m = static_cast<unsigned long>(std::count(l.begin(), l.end(), k));
    z *= ipow(Int(k), m) * factorial(m);
  }
  return z;
}

Poly adams_vars(const Poly& g, int k) {
  return g.substitute([&](VarId v) -> std::optional<Poly> { return Poly::var(v, static_cast<std::uint32_t>(k)); });
}

}  // namespace

TEST(Partitions, OrderAndHelpers) {
  const auto& ps = part::of_weight(4);
  std::vector<Partition> want{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  EXPECT_EQ(ps, want);
  EXPECT_EQ(part::conjugate({3, 1}), (Partition{2, 1, 1}));
  EXPECT_EQ(part::parse("(2,1)"), (Partition{2, 1}));
  for (int n = 1; n <= 8; ++n)
    for (const auto& l : part::of_weight(n)) EXPECT_EQ(part::z(l), z_oracle(l));
}

TEST(SymmProperty, BasesExpandToTheirDefinitions) {
  const int N = 4;
  for (int n = 1; n <= 4; ++n)
    for (const auto& l : part::of_weight(n)) {
      EXPECT_EQ(expand_in_variables(SymFn::of(Basis::H, l), N), product_of(l, [](int k) { return complete(k, N); }));
      EXPECT_EQ(expand_in_variables(SymFn::of(Basis::E, l), N), product_of(l, [](int k) { return elementary(k, N); }));
      EXPECT_EQ(expand_in_variables(SymFn::of(Basis::P, l), N), product_of(l, [](int k) { return power_sum(k, N); }));
      EXPECT_EQ(expand_in_variables(SymFn::of(Basis::M, l), N), monomial_sym(l, N));
    }
}

TEST(SymmProperty, SchurExpansionsAreKostkaNumbers) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& l : part::of_weight(n)) {
      SymFn m = convert(schur(l), Basis::M);
      for (const auto& mu : part::of_weight(n)) EXPECT_EQ(m.coeff(mu), Rat(kostka(l, mu))) << part::to_string(l);
    }
}

TEST(SymmProperty, TransitionMatricesBetweenIntegralBasesAreUnimodular) {
  const std::vector<Basis> integral{Basis::M, Basis::H, Basis::E, Basis::S, Basis::F, Basis::X, Basis::R};
  for (int d = 1; d <= 6; ++d)
    for (Basis a : integral)
      for (Basis b : integral) {
        Rat D = det(transition_matrix(a, b, d));
        EXPECT_TRUE(D == 1 || D == -1) << basis_name(a) << "->" << basis_name(b) << " d=" << d;
      }
}

TEST(SymmProperty, HallInnerProductOrthogonality) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& l : part::of_weight(n))
      for (const auto& m : part::of_weight(n)) {
        EXPECT_EQ(hall_inner(schur(l), schur(m)), Rat(l == m ? 1 : 0));
        EXPECT_EQ(hall_inner(SymFn::of(Basis::P, l), SymFn::of(Basis::P, m)), l == m ? Rat(z_oracle(l)) : Rat(0));
        EXPECT_EQ(hall_inner(SymFn::of(Basis::H, l), SymFn::of(Basis::M, m)), Rat(l == m ? 1 : 0));
      }
}

TEST(Symm, SmallConversions) {
  EXPECT_EQ(convert(SymFn::of(Basis::S, {2, 1}), Basis::M).to_string(), "m(2,1) + 2*m(1,1,1)");
  EXPECT_EQ(convert(SymFn::of(Basis::E, {2}), Basis::P), SymFn::of(Basis::P, {1, 1}, Rat(1, 2)) - SymFn::of(Basis::P, {2}, Rat(1, 2)));
  // p2 = 2 h2 - h1^2 is integral, p2 / 2 is not
  EXPECT_EQ(convert(SymFn::of(Basis::P, {2}), Basis::H), SymFn::of(Basis::H, {2}, 2) - SymFn::of(Basis::H, {1, 1}));
  EXPECT_THROW(convert(SymFn::of(Basis::P, {2}, Rat(1, 2)), Basis::H), IntegralityError);
  EXPECT_EQ(multiply(SymFn::of(Basis::H, {2}), SymFn::of(Basis::E, {1}), Basis::S).to_string(), "s(3) + s(2,1)");
}

TEST(Symm, ModifiedNecklaceFunction) {
  // (p1^3 - p3) / 3 with p1^3 = m3 + 3 m21 + 6 m111 and p3 = m3
  SymFn want = SymFn::of(Basis::M, {2, 1}) + SymFn::of(Basis::M, {1, 1, 1}, 2);
  EXPECT_EQ(convert(modified_necklace_symm(3), Basis::M), want);
}

TEST(SymmProperty, AntipodeAndPrimitives) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_TRUE(equal(antipode(SymFn::of(Basis::H, {n})), SymFn::of(Basis::E, {n}, n % 2 ? -1 : 1))) << n;
    SymTensor t = comul_sum(SymFn::of(Basis::P, {n})).convert(Basis::P, Basis::P);
    SymTensor want;
    want.left = want.right = Basis::P;
    want.add({n}, {}, 1);
    want.add({}, {n}, 1);
    EXPECT_EQ(t, want) << n;
  }
}

TEST(SymmProperty, AdamsOperatorsOnPowerSums) {
  for (int k = 1; k <= 4; ++k)
    for (long n = 1; n * k <= weight_cap(); ++n) {
      EXPECT_TRUE(equal(frobenius_symm(n, SymFn::of(Basis::P, {k})), SymFn::of(Basis::P, {static_cast<int>(n) * k})));
      SymFn v = verschiebung_symm(n, SymFn::of(Basis::P, {k}));
      if (k % n)
        EXPECT_TRUE(v.is_zero() || convert(v, Basis::P).is_zero());
      else
        EXPECT_TRUE(equal(v, SymFn::of(Basis::P, {k / static_cast<int>(n)}, n)));
    }
}

TEST(SymmProperty, PlethysmAgainstFiniteVariableOracle) {
  const int N = 4;
  std::vector<SymFn> fs{SymFn::of(Basis::H, {2}), SymFn::of(Basis::E, {2}), SymFn::of(Basis::S, {2, 1}), SymFn::of(Basis::P, {1, 1})};
  std::vector<SymFn> gs{SymFn::of(Basis::H, {2}), SymFn::of(Basis::E, {1}), SymFn::of(Basis::S, {1, 1})};
  for (const auto& f : fs)
    for (const auto& g : gs) {
      if (f.max_weight() * g.max_weight() > 4) continue;
      Poly gx = expand_in_variables(g, N), want;
      SymFn fp = convert(f, Basis::P);
      for (const auto& [l, c] : fp.terms()) {
        Poly term(c);
        for (int k : l) term *= adams_vars(gx, k);
        want += term;
      }
      EXPECT_EQ(expand_in_variables(plethysm(f, g), N), want) << f.to_string() << " o " << g.to_string();
    }
  EXPECT_EQ(plethysm(SymFn::of(Basis::H, {2}), SymFn::of(Basis::H, {2}), Basis::S).to_string(), "s(4) + s(2,2)");
}

TEST(Symm, WittBasisGeneratesCompleteFunctions) {
  // prod_d (1 - x_d t^d)^{-1} = sum h_n t^n
  for (int n = 1; n <= 6; ++n) {
    SymFn acc(Basis::H);
    for (const auto& l : part::of_weight(n)) {
      SymFn term = SymFn::scalar(1);
      for (int k : l) term = multiply(term, witt_symm(k), Basis::H);
      acc += term;
    }
    EXPECT_TRUE(equal(acc, SymFn::of(Basis::H, {n}))) << n;
  }
}

TEST(Symm, SchurSignSmallCases) {
  EXPECT_EQ(schur_sign_check(1).expansion, SymFn::of(Basis::S, {1}));
  auto two = schur_sign_check(2);
  EXPECT_TRUE(two.positive);
  EXPECT_EQ(two.expansion, SymFn::of(Basis::S, {1, 1}));
}

TEST(Symm, KleinGroupTable) {
  const std::vector<Klein> all{Klein::Id, Klein::Alt, Klein::Inv, Klein::AltInv};
  for (Klein a : all) {
    EXPECT_EQ(klein_compose(a, a), Klein::Id);
    EXPECT_EQ(parse_klein(klein_name(a)), a);
    SymFn f = SymFn::of(Basis::H, {2, 1});
    EXPECT_TRUE(equal(klein_automorphism(a, klein_automorphism(a, f)), f));
  }
}

TEST(Symm, HirzebruchTodd) {
  auto q = todd_coefficients(2);
  EXPECT_EQ(hirzebruch_sequence(q, 1, HirzebruchMode::Multiplicative), SymFn::of(Basis::E, {1}, Rat(1, 2)));
  EXPECT_EQ(hirzebruch_sequence(q, 2, HirzebruchMode::Multiplicative),
            SymFn::of(Basis::E, {2}, Rat(1, 12)) + SymFn::of(Basis::E, {1, 1}, Rat(1, 12)));
}

TEST(GaleRyserProperty, VerdictMatchesBruteForce) {
  auto brute = [](const std::vector<int>& rows, const std::vector<int>& cols) {
    std::size_t R = rows.size(), C = cols.size(), cells = R * C;
    for (unsigned long mask = 0; mask < (1UL << cells); ++mask) {
      bool ok = true;
      for (std::size_t r = 0; r < R && ok; ++r) {
        int s = 0;
        for (std::size_t c = 0; c < C; ++c) s += (mask >> (r * C + c)) & 1;
        ok = s == rows[r];
      }
      for (std::size_t c = 0; c < C && ok; ++c) {
        int s = 0;
        for (std::size_t r = 0; r < R; ++r) s += (mask >> (r * C + c)) & 1;
        ok = s == cols[c];
      }
      if (ok) return true;
    }
    return false;
  };
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : part::of_weight(n))
      for (const auto& b : part::of_weight(n)) {
        if (a.size() * b.size() > 16) continue;
        auto g = gale_ryser(a, b);
        EXPECT_EQ(g.verdict, brute(a, b)) << part::to_string(a) << " " << part::to_string(b);
        ASSERT_TRUE(g.search.has_value());
        EXPECT_EQ(*g.search, g.verdict);
        EXPECT_EQ(g.witness.has_value(), g.verdict);
      }
}

TEST(Symm, WeightCap) {
  int old = weight_cap();
  set_weight_cap(4);
  EXPECT_THROW(convert(SymFn::of(Basis::H, {5}), Basis::M), CapError);
  set_weight_cap(old);
}
