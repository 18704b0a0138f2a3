#pragma once

#include <functional>
#include <memory>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "wittlab/nest.hpp"
#include "wittlab/poly.hpp"
#include "wittlab/report.hpp"
#include "wittlab/ring.hpp"

namespace wittlab {

// Variables of the universal families: X_n, Y_n (big: n is a nest index;
// p-adic: n is the exponent i of p^i).
inline VarId X(std::uint32_t n) { return var::make('X', n); }
inline VarId Y(std::uint32_t n) { return var::make('Y', n); }

struct Flavor {
  bool padic = false;
  long p = 0;

  static Flavor big() { return {}; }
  static Flavor p_adic(long p) { return {true, p}; }
  std::string to_string() const { return padic ? "p-adic(" + std::to_string(p) + ")" : "big"; }
  bool operator==(const Flavor& o) const { return padic == o.padic && (!padic || p == o.p); }
};

// w_n: big flavor sum_{d|n} d X_d^{n/d}; p-adic sum_{i<=n} p^i X_i^{p^(n-i)}.
Poly witt_polynomial(long n, const Flavor& flavor, char letter = 'X');

struct StructKind {
  enum Tag { Add, Mul, Neg, Frobenius, NMult, PPower, Unit, Zero };
  Tag tag = Add;
  long param = 0;

  static StructKind parse(const std::string& s);  // "add", "frobenius(2)", "nmult(3)", ...
  std::string to_string() const;
  int arity() const;  // number of input alphabets
};

// A family of universal polynomials, one per output index.  For the p-adic
// flavor the indices are 0..len-1 and variables are relabeled accordingly.
struct UnivFamily {
  std::string kind;
  Flavor flavor;
  std::vector<long> indices;        // output indices (p-adic: 0..len-1)
  std::vector<long> input_indices;  // indices of the input alphabet(s)
  std::vector<Poly> polys;
  bool integral = true;

  const Poly& at(long index) const;
  nlohmann::json to_json() const;
  static UnivFamily from_json(const nlohmann::json& j);
};

using UnivFamilyPtr = std::shared_ptr<const UnivFamily>;

// Triangular solve of w_n(s) = target_n over QQ in increasing index order.
// `nest` holds big-style indices; for the p-adic flavor it must be a p-power
// chain and the result is relabeled.  With require_integral a non-integral
// family throws IntegralityError naming the first witness.
UnivFamily solve_ghost(const std::vector<Poly>& targets, const Nest& nest, const Flavor& flavor,
                       bool require_integral = false, const std::string& kind = "custom");

// p-adic length len means indices 0..len-1.  For big flavor `nest` is the
// output nest; for p-adic flavor nest.size() is taken as the length.
UnivFamilyPtr structure_polys(const StructKind& kind, const Flavor& flavor, const Nest& nest);
// Same, but bypassing both caches.
UnivFamily compute_structure_polys(const StructKind& kind, const Flavor& flavor, const Nest& nest);

// Directory of the on-disk cache (WITTLAB_CACHE, else ~/.cache/wittlab).
std::string cache_dir();
// Path of the cache file for a family key, whether or not it exists.
std::string cache_path(const StructKind& kind, const Flavor& flavor, const Nest& nest);
void clear_memory_cache();

// r_1..r_maxd in plain X, Y with X^n + Y^n = sum_{d|n} d r_d^{n/d}.
std::vector<Poly> teichmuller_sum_polys(long maxd);
// r_{p^i}(X, Y) for i = 0..len-1.
std::vector<Poly> teichmuller_sum_polys_ppow(long p, int len);

// Named congruence sets:
//   frobenius-pth-power     f_n == X_n^p mod p (p-adic) or at p-power indices (big)
//   nmult-shift             P_n == X_{n-1}^p mod p, P_0 == 0 mod p
//   frobenius-leading       F_r - m X_{mr} lies in (X_1, ..., X_{mr-1})
//   pth-power-substitution  psi(X^p) == psi(X)^p mod p for every member
//   ppower-low-terms        M_0 = X_0^p, M_1 == p X_0^{p^2-p} X_1 mod p^2, M_2 == X_0^{p^3-p^2} X_1^p mod p
//                           (p = 2 adds 2 X_1^2 and X_1^4 respectively)
Report congruence_suite(const UnivFamily& family, const std::string& which, long p);
std::vector<std::string> congruence_names();

// Functional-equation lemma ingredients over K = QQ.
struct FEIngredients {
  long p = 2;
  long q = 2;                           // a power of p
  std::vector<Rat> s;                   // s_1, s_2, ...
  std::function<Rat(const Rat&)> sigma;  // defaults to the identity
  RingSpecPtr subring;                  // A: ZZ or ZZ_(p)
};

// f_g = g + sum_i s_i sigma^i f_g(X^{q^i}); coefficients 1..order of a series
// with zero constant term (index 0 of the result is the constant term).
std::vector<Rat> fe_series(const FEIngredients& ing, const std::vector<Rat>& g, long order);

struct FormalGroup {
  Poly F;  // in X, Y, truncated at total degree `order`
  bool integral = true;
  std::string witness;
};
// F = f^{-1}(f(X) + f(Y)); f[0] must be 0 and f[1] a unit of A.
FormalGroup fe_formal_group(const std::vector<Rat>& f, long order, const RingSpecPtr& subring);

// Compositional inverse of a one-variable series with f[0] = 0, f[1] != 0.
std::vector<Rat> series_reversion(const std::vector<Rat>& f, long order);

}  // namespace wittlab
