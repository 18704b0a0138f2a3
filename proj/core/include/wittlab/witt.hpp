#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "wittlab/nest.hpp"
#include "wittlab/ring.hpp"
#include "wittlab/universal.hpp"

namespace wittlab {

// A truncated Witt vector.  Big vectors are indexed by a nest; p-adic vectors
// by 0..len-1, which corresponds to the nest {1, p, ..., p^(len-1)}.
class WittVec {
 public:
  WittVec() = default;
  WittVec(RingSpecPtr ring, Nest nest, std::vector<RingElem> coords);
  static WittVec padic(RingSpecPtr ring, long p, std::vector<RingElem> coords);

  static WittVec zero(const RingSpecPtr& ring, const Nest& nest);
  static WittVec one(const RingSpecPtr& ring, const Nest& nest);
  static WittVec padic_zero(const RingSpecPtr& ring, long p, int len);
  static WittVec padic_one(const RingSpecPtr& ring, long p, int len);
  static WittVec from_ints(const RingSpecPtr& ring, const Nest& nest, const std::vector<Int>& xs);

  const RingSpecPtr& ring() const { return ring_; }
  // Big-style nest (for p-adic vectors, the p-power chain).
  const Nest& nest() const { return nest_; }
  bool is_padic() const { return padic_; }
  long p() const { return p_; }
  std::size_t size() const { return coords_.size(); }
  // Index labels: nest entries, or 0..len-1 when p-adic.
  std::vector<long> labels() const;
  const std::vector<RingElem>& coords() const { return coords_; }
  // Coordinate by label.
  const RingElem& operator[](long label) const;
  RingElem& at(long label);

  bool operator==(const WittVec& o) const;
  bool operator!=(const WittVec& o) const { return !(*this == o); }

  // The same vector viewed as a big vector on its p-power nest, and back.
  WittVec as_big() const;
  WittVec as_padic(long p) const;
  // Keep only the coordinates whose index lies in `smaller`.
  WittVec restrict_to(const Nest& smaller) const;
  // Apply a ring map coordinatewise.
  WittVec map(const RingSpecPtr& target, const std::function<RingElem(const RingElem&)>& f) const;

  std::string to_string() const;
  nlohmann::json to_json() const;
  static WittVec from_json(const nlohmann::json& j);

 private:
  RingSpecPtr ring_;
  Nest nest_;
  bool padic_ = false;
  long p_ = 0;
  std::vector<RingElem> coords_;
};

struct GhostVec {
  RingSpecPtr ring;
  Nest nest;
  bool padic = false;
  long p = 0;
  std::vector<RingElem> values;  // aligned with nest (or 0..len-1)

  const RingElem& operator[](long label) const;
  std::string to_string() const;
};

WittVec witt_add(const WittVec& a, const WittVec& b);
WittVec witt_sub(const WittVec& a, const WittVec& b);
WittVec witt_mul(const WittVec& a, const WittVec& b);
WittVec witt_neg(const WittVec& a);

// Evaluate a cached universal family on one or two input vectors.
WittVec apply_family(const UnivFamily& fam, const WittVec& a, const WittVec* b, const RingSpecPtr& ring,
                     const Nest& out_nest, bool padic, long p);

GhostVec ghost(const WittVec& a);
// Triangular inversion of the ghost map; IntegralityError names the first
// index whose coordinate is not in the ring.
WittVec from_ghost(const GhostVec& g);

WittVec teichmuller(const RingElem& x, const Nest& nest);
WittVec teichmuller_padic(const RingElem& x, long p, int len);

WittVec verschiebung(long n, const WittVec& a);
// Big: output nest {d : n*d in input nest}.  p-adic (n = p^k): length drops by
// k, except in characteristic p where coordinates are raised to the p^k-th
// power and the nest is kept.
WittVec frobenius(long n, const WittVec& a);
// Always through the universal polynomials (no characteristic-p shortcut).
WittVec frobenius_universal(long n, const WittVec& a);
WittVec homothety(const RingElem& u, const WittVec& a);
WittVec nmult(long n, const WittVec& a);

WittVec p_typify(const WittVec& a, long p);

struct GhostWittVerdict {
  bool ok = true;
  long p = 0, n = 0;
  std::string residue;  // phi_p(b_n) - b_{np} when ok is false
};
// Bounded check of phi_p(b_n) == b_{np} mod p^{v_p(n)+1}; b is indexed 1..len.
GhostWittVerdict is_ghost_witt(const std::vector<RingElem>& b, const FrobeniusFamily& f, long bound);

struct DoldResult {
  std::vector<Int> c;         // c[n-1] = sum_{d|n} mu(d) b_{n/d}
  std::vector<bool> divides;  // n | c_n
  bool pass = true;
  long first_failure = 0;
  bool exact = true;          // pass and every c_n >= 0
  bool gcd_form_agrees = true;
};
DoldResult dold_test(const std::vector<Int>& b, long N);

WittVec artin_schreier(const WittVec& a);

Int teichmuller_lift_mod(const Int& a, long p, int k);

struct DigitSum {
  std::vector<Int> digits;
  bool verified = false;
};
DigitSum teich_digit_sum(const Int& a, const Int& b, long p, int k);

}  // namespace wittlab
