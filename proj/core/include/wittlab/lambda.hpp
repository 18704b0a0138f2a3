#pragma once

#include <functional>
#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "wittlab/ring.hpp"
#include "wittlab/witt.hpp"

namespace wittlab {

// An element 1 + a_1 t + ... + a_D t^D of Lambda(A), known modulo t^{D+1}.
class Series {
 public:
  Series() = default;
  Series(RingSpecPtr ring, std::vector<RingElem> coeffs);  // a_1..a_D
  static Series one(const RingSpecPtr& ring, long order);
  // (1 - x t^d)^{-1}
  static Series geometric(const RingElem& x, long order, long d = 1);
  static Series from_ints(const RingSpecPtr& ring, const std::vector<Int>& coeffs);

  const RingSpecPtr& ring() const { return ring_; }
  long order() const { return static_cast<long>(a_.size()); }
  // coeff(0) is 1.
  RingElem coeff(long k) const;
  const std::vector<RingElem>& coeffs() const { return a_; }
  Series truncated(long order) const;

  bool operator==(const Series& o) const;
  bool operator!=(const Series& o) const { return !(*this == o); }

  // "1 + a1 t + a2 t^2 + ..."
  std::string to_string() const;
  nlohmann::json to_json() const;
  static Series from_json(const RingSpecPtr& ring, const nlohmann::json& j);

 private:
  RingSpecPtr ring_;
  std::vector<RingElem> a_;
};

// Group law: truncated product and inverse.  Output order is the minimum.
Series series_add(const Series& a, const Series& b);
Series series_neg(const Series& a);
Series series_sub(const Series& a, const Series& b);
// Multiplication in Lambda(A), coefficientwise through the universal
// polynomials of the second comultiplication.
Series witt_product(const Series& a, const Series& b);
Series witt_power(const Series& a, unsigned long e);

// prod_d (1 - x_d t^d)^{-1} over the nest {1..D} and its triangular inverse.
Series from_witt(const WittVec& x);
WittVec to_witt(const Series& a);

struct NecklaceCoords {
  std::vector<RingElem> c;  // c_1..c_D, over the rationalized ring
  bool integral = true;     // every c_n lies in the original ring
  long first_non_integral = 0;
};
// a = prod_n (1 - t^n)^{-c_n}.
NecklaceCoords to_necklace(const Series& a);
Series from_necklace(const RingSpecPtr& ring, const std::vector<RingElem>& c);

// Ghost components p_1..p_D by the Newton recursion.
std::vector<RingElem> series_ghost(const Series& a);
// Inverse; division by n must be exact in the ring (IntegralityError otherwise).
Series series_from_ghost(const RingSpecPtr& ring, const std::vector<RingElem>& p);

// V_n keeps the order; f_n maps order D to floor(D/n).
Series series_verschiebung(long n, const Series& a);
Series series_frobenius(long n, const Series& a);
Series series_homothety(const RingElem& u, const Series& a);
Series series_nmult(long n, const Series& a);

// Coefficient k is (h_k o e_m) (resp. h_k o h_m) in a; order floor(D/m).
Series lambda_power(long m, const Series& a);
Series sigma_power(long m, const Series& a);
// Through ghost components (torsion-free rings), checked against f_n.
Series adams(long n, const Series& a);

// sigma_t(x) with ghost components phi_n(x).
Series sigma_from_adams(const FrobeniusFamily& F, const RingElem& x, long order);
// alpha~(x) = alpha applied coefficientwise to sigma_t(x).
Series cofree_lift(const FrobeniusFamily& F, const RingSpecPtr& target,
                   const std::function<RingElem(const RingElem&)>& alpha, const RingElem& x, long order);

// Outer Witt coordinates y_1..y_outer, each on the inner nest {1..inner},
// with outer ghost component n equal to f_n(x).  x needs the nest
// {1..outer*inner}.
struct ArtinHasse {
  std::vector<WittVec> outer;
};
ArtinHasse artin_hasse(const WittVec& x, long outer, long inner);

// sum of V_m <c> f_n terms, truncated at m <= bound.
struct CartierTerm {
  long m = 1;
  RingElem c;
  long n = 1;
};
struct CartierOp {
  RingSpecPtr ring;
  long bound = 8;
  std::vector<CartierTerm> terms;  // sorted by (m, n), distinct keys

  static CartierOp zero(const RingSpecPtr& ring, long bound);
  static CartierOp term(long m, const RingElem& c, long n, long bound);
  std::string to_string() const;
  nlohmann::json to_json() const;
};

// Normal form: merges equal (m, n) through the homothety-sum rule.
CartierOp cartier_normalize(const CartierOp& op);
Series cartier_apply(const CartierOp& op, const Series& a);
CartierOp cartier_add(const CartierOp& a, const CartierOp& b);
// (a o b)(x) = a(b(x)).
CartierOp cartier_compose(const CartierOp& a, const CartierOp& b);
// [d] as a normal form.
CartierOp cartier_nmult(long d, const RingSpecPtr& ring, long bound);

struct DEMatrix {
  RingSpecPtr ring;
  std::map<std::pair<long, long>, RingElem> entries;  // (m, n) -> c_mn, nonzero only
  std::string to_string() const;
  bool operator==(const DEMatrix& o) const;
};
// Factor op((1 - T t)^{-1}) = prod (1 - c_mn T^n t^m)^{-1} for m <= order.
DEMatrix de_matrix(const CartierOp& op, long order);
CartierOp reconstruct(const DEMatrix& d, long bound);

// sum_n V_n <x_n> f_n as an operator, and its action on a.
CartierOp witt_operator(const WittVec& x);
Series witt_scalar_action(const WittVec& x, const Series& a);

// The rationalization of a ring: ZZ, ZZ_(p) -> QQ, and likewise for
// polynomial rings; other rings are returned unchanged.
RingSpecPtr rationalize(const RingSpecPtr& ring);
RingElem change_ring(const RingSpecPtr& target, const RingElem& x);

}  // namespace wittlab
