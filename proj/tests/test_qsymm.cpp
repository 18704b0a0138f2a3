#include <gtest/gtest.h>

#include "printers.hpp"

#include <functional>

#include "wittlab/errors.hpp"
#include "wittlab/qsymm.hpp"

using namespace wittlab;

namespace {

Poly xv(int i, int e) { return Poly::var(var::make('x', static_cast<std::uint32_t>(i)), static_cast<std::uint32_t>(e)); }

// M_a(x1..xN) = sum over i1 < ... < ik of x_i1^a1 ... x_ik^ak.
Poly monomial_qsym(const Composition& a, int N) {
  Poly s;
  std::function<void(std::size_t, int, Poly)> rec = [&](std::size_t pos, int start, Poly acc) {
    if (pos == a.size()) {
      s += acc;
      return;
    }
    for (int i = start; i <= N; ++i) rec(pos + 1, i + 1, acc * xv(i, a[pos]));
  };
  rec(0, 1, Poly(1));
  return s;
}

std::vector<Composition> up_to(int w) {
  std::vector<Composition> out{{}};
  for (int n = 1; n <= w; ++n)
    for (const auto& c : comp::of_weight(n)) out.push_back(c);
  return out;
}

bool lyndon_oracle(const Composition& w) {
  if (w.empty()) return false;
  for (std::size_t k = 1; k < w.size(); ++k) {
    Composition rot(w.begin() + static_cast<long>(k), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(k));
    if (!(w < rot)) return false;
  }
  return true;
}

}  // namespace

TEST(Compositions, EnumerationAndParsing) {
  EXPECT_EQ(comp::of_weight(3), (std::vector<Composition>{{1, 1, 1}, {1, 2}, {2, 1}, {3}}));
  EXPECT_EQ(comp::parse("[1,2]"), (Composition{1, 2}));
  EXPECT_EQ(comp::to_string({2, 1}), "[2,1]");
  EXPECT_THROW(comp::make({1, 0}), std::invalid_argument);
}

TEST(QsymmProperty, ExpansionMatchesDefinition) {
  for (const auto& a : up_to(4)) EXPECT_EQ(qsym_expand_in_variables(QSymFn::of(a), 4), monomial_qsym(a, 4)) << comp::to_string(a);
}

TEST(QsymmProperty, OverlappingShuffleIsPolynomialProduct) {
  const int N = 5;
  for (const auto& a : up_to(3))
    for (const auto& b : up_to(2)) {
      auto prod = overlapping_shuffle(a, b);
      EXPECT_EQ(qsym_expand_in_variables(prod, N), monomial_qsym(a, N) * monomial_qsym(b, N))
          << comp::to_string(a) << " * " << comp::to_string(b);
    }
  EXPECT_EQ(overlapping_shuffle({1}, {2}).to_string(), "[1,2] + [2,1] + [3]");
}

TEST(Qsymm, CutCoproductAndCounit) {
  EXPECT_EQ(cut_comul(QSymFn::of({1, 2})).to_string(), "1(x)[1,2] + [1](x)[2] + [1,2](x)1");
  EXPECT_EQ(qsym_counit(QSymFn::of({})), 1);
  EXPECT_EQ(qsym_counit(QSymFn::of({1})), 0);
  for (int n = 1; n <= 5; ++n) {
    WordTensor want;
    want.add({}, {n}, 1);
    want.add({n}, {}, 1);
    EXPECT_EQ(cut_comul(QSymFn::of({n})), want);
  }
}

TEST(QsymmProperty, PairingDualityWithNsymm) {
  const auto words = up_to(3);
  for (const auto& a : words)
    for (const auto& b : words) {
      EXPECT_EQ(pair(NSymFn::of(a), QSymFn::of(b)), a == b ? 1 : 0);
      if (comp::weight(a) + comp::weight(b) > 4) continue;
      auto FG = nsym_multiply(NSymFn::of(a), NSymFn::of(b));
      for (const auto& g : up_to(4)) {
        if (comp::weight(g) != comp::weight(a) + comp::weight(b)) continue;
        WordTensor ab;
        ab.add(a, b, 1);
        EXPECT_EQ(pair(FG, QSymFn::of(g)), pair(ab, cut_comul(QSymFn::of(g))));
        EXPECT_EQ(pair(NSymFn::of(g), overlapping_shuffle(a, b)), pair(nsym_comul(NSymFn::of(g)), ab));
      }
    }
}

TEST(QsymmProperty, SymmetricEmbeddingRoundTrip) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& l : part::of_weight(n)) {
      QSymFn e = embed_symm(SymFn::of(Basis::M, l));
      Int count = 0;
      for (const auto& [a, c] : e.terms()) {
        EXPECT_EQ(c, 1);
        EXPECT_EQ(comp::partition_of(a), l);
        ++count;
      }
      EXPECT_EQ(count, Int(static_cast<long>(comp::rearrangements(l).size())));
      auto back = qsym_to_symm(e);
      ASSERT_TRUE(back.has_value());
      EXPECT_EQ(*back, SymFn::of(Basis::M, l));
    }
  EXPECT_FALSE(qsym_to_symm(QSymFn::of({1, 2})).has_value());
}

TEST(Qsymm, LyndonWordsMatchRotationOracle) {
  for (const auto& w : up_to(6)) EXPECT_EQ(is_lyndon(w), lyndon_oracle(w)) << comp::to_string(w);
}

TEST(Qsymm, LambdaOperations) {
  EXPECT_EQ(lambda_qsym(2, QSymFn::of({1})), QSymFn::of({1, 1}));
  EXPECT_EQ(lambda_qsym(1, QSymFn::of({1, 2})), QSymFn::of({1, 2}));
  // lambda^2 of M_[2] is e_2 of the squares, i.e. M_[2,2]
  EXPECT_EQ(lambda_qsym(2, QSymFn::of({2})), QSymFn::of({2, 2}));
}

TEST(Qsymm, FrobeniusPthPowerCongruence) {
  for (long p : {2L, 3L})
    for (const auto& a : up_to(2)) {
      if (a.empty() || comp::weight(a) * p > 6) continue;
      EXPECT_TRUE(ppower_congruence(a, p).pass) << comp::to_string(a) << " p=" << p;
    }
}

TEST(Qsymm, ZeroAlphaMatricesHaveConsistentMargins) {
  Composition a{1, 2, 1};
  auto ms = zero_alpha_matrices(a);
  ASSERT_FALSE(ms.empty());
  for (const auto& m : ms) {
    Composition read;
    for (const auto& row : m)
      for (int x : row)
        if (x) read.push_back(x);
    EXPECT_EQ(read, a);
    EXPECT_EQ(comp::weight(row_sums(m)), 4);
    EXPECT_EQ(comp::weight(column_sums(m)), 4);
  }
}

TEST(Qsymm, WeightCap) {
  int old = qsym_weight_cap();
  set_qsym_weight_cap(3);
  EXPECT_THROW(overlapping_shuffle({2}, {2}), CapError);
  set_qsym_weight_cap(old);
}
