#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "wittlab/lambda.hpp"
#include "wittlab/report.hpp"
#include "wittlab/ring.hpp"
#include "wittlab/symm.hpp"
#include "wittlab/witt.hpp"

namespace wittlab {

// M(a; n) = n^-1 sum_{d|n} mu(d) a^{n/d}.
Int necklace_number(const Int& alpha, long n);
// M(X; n) as a polynomial in the plain variable X.
Poly necklace_poly(long n);

enum class NecklaceIdentity { Product, Power, Cyclotomic, Strehl };
NecklaceIdentity parse_necklace_identity(const std::string& name);
std::string necklace_identity_name(NecklaceIdentity id);
// Product (alpha, beta) and Power (beta, r) check n = 1..bound; Cyclotomic
// (alpha) and Strehl (alpha, beta) compare series to order `bound`.
Report necklace_identity_check(NecklaceIdentity id, const std::vector<Int>& params, long bound);

// Element of Nr(A) with coordinates c_1..c_N.
struct NecklaceVec {
  RingSpecPtr ring;
  std::vector<RingElem> c;

  static NecklaceVec zero(const RingSpecPtr& ring, long N);
  static NecklaceVec from_ints(const RingSpecPtr& ring, const std::vector<Int>& c);
  long bound() const { return static_cast<long>(c.size()); }
  const RingElem& operator[](long n) const { return c.at(static_cast<std::size_t>(n - 1)); }
  bool operator==(const NecklaceVec& o) const { return *ring == *o.ring && c == o.c; }
  bool operator!=(const NecklaceVec& o) const { return !(*this == o); }
  std::string to_string() const;
  nlohmann::json to_json() const;
};

NecklaceVec nr_add(const NecklaceVec& a, const NecklaceVec& b);
NecklaceVec nr_neg(const NecklaceVec& a);
// c_n = sum_{[i,j]=n} (i,j) a_i b_j.
NecklaceVec nr_mul(const NecklaceVec& a, const NecklaceVec& b);
// u_n = sum_{d|n} d a_d.
std::vector<RingElem> nr_ghost(const NecklaceVec& a);
// f_r maps bound N to floor(N/r); V_r keeps the bound.
NecklaceVec nr_frobenius(long r, const NecklaceVec& a);
NecklaceVec nr_verschiebung(long r, const NecklaceVec& a);
Series nr_to_lambda(const NecklaceVec& a);
// (M(a;1), ..., M(a;N)).
NecklaceVec necklace_teichmuller(const RingSpecPtr& ring, const Int& alpha, long N);

// M(X;n) = n^-1 sum_{d|n} mu(d) p_d^{n/d}, in the m basis.
SymFn modified_necklace_symm(long n);

// Virtual cyclic set sum b_r C_r, truncated at orbit length N.
struct CyclicSet {
  std::vector<Int> b;  // b_1..b_N

  static CyclicSet zero(long N) { return CyclicSet{std::vector<Int>(static_cast<std::size_t>(N), 0)}; }
  static CyclicSet orbit(long r, long N);  // C_r
  long bound() const { return static_cast<long>(b.size()); }
  Int operator[](long r) const { return b.at(static_cast<std::size_t>(r - 1)); }
  bool is_actual() const;
  Int size() const;  // number of points, sum r b_r
  bool operator==(const CyclicSet& o) const { return b == o.b; }
  bool operator!=(const CyclicSet& o) const { return b != o.b; }
  // "2C1 + C2 - C3"
  std::string to_string() const;
  nlohmann::json to_json() const;
  static CyclicSet from_json(const nlohmann::json& j);
};

CyclicSet burnside_add(const CyclicSet& x, const CyclicSet& y);
CyclicSet burnside_neg(const CyclicSet& x);
// C_r C_s = (r,s) C_[r,s]; orbits beyond the bound are dropped.
CyclicSet burnside_product(const CyclicSet& x, const CyclicSet& y);
CyclicSet burnside_ind(long n, const CyclicSet& x);
// res_n(C_r) = (n,r) C_{r/(n,r)}; the result is known up to floor(N/n).
CyclicSet burnside_res(long n, const CyclicSet& x);
// Number of points fixed by nZ.
Int burnside_phi(long n, const CyclicSet& x);
std::vector<Int> burnside_ghost(const CyclicSet& x);

// b_d = M(q; d).
CyclicSet q_hat(const Int& q, long N);
// T(x) = sum_{nd <= N} M(x_n; d) C_{nd}; x over ZZ on a nest containing 1..N.
CyclicSet T_map(const WittVec& x, long N);
CyclicSet itp(const NecklaceVec& a);
NecklaceVec itp_inverse(const CyclicSet& x);

struct ImageVerdict {
  bool pass = true;
  long first_failure = 0;
};
// sum_{d|n} mu(n/d) chi(d) = 0 mod n for n <= chi.size().
ImageVerdict image_test(const std::vector<Int>& chi);

// Orbit decomposition of S^n X by enumeration; X actual with at most
// `max_points` points.
CyclicSet sym_power(long n, const CyclicSet& x, long max_points = 8);
// prod_r (1 - t^r)^{-b_r} to the given order.
Series syP(const CyclicSet& x, long order);

// The three legs of the Witt / Burnside / necklace / power-series square.
Report diagram_check(const WittVec& x, long N);

}  // namespace wittlab
