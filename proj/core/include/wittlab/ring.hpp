#pragma once

#include <functional>
#include <map>
#include <memory>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "wittlab/arith.hpp"
#include "wittlab/errors.hpp"
#include "wittlab/poly.hpp"
#include "wittlab/report.hpp"

namespace wittlab {

class RingSpec;
using RingSpecPtr = std::shared_ptr<const RingSpec>;

// Exact commutative coefficient rings.  A polynomial ring over a polynomial
// ring is flattened into one ring over the scalar base.
class RingSpec : public std::enable_shared_from_this<RingSpec> {
 public:
  enum class Kind { Integers, Rationals, ModM, PLocal, Polynomial };

  static RingSpecPtr integers();
  static RingSpecPtr rationals();
  static RingSpecPtr mod(const Int& m);
  static RingSpecPtr plocal(long p);
  static RingSpecPtr polynomial(const RingSpecPtr& base, const std::vector<std::string>& vars);

  Kind kind() const { return kind_; }
  bool is_polynomial() const { return kind_ == Kind::Polynomial; }
  // The scalar coefficient ring (itself when not polynomial).
  RingSpecPtr scalar() const { return kind_ == Kind::Polynomial ? scalar_ : shared_from_this(); }
  const Int& modulus() const { return modulus_; }
  long prime() const { return modulus_.get_si(); }
  const std::vector<std::string>& vars() const { return vars_; }
  std::optional<std::size_t> var_index(const std::string& name) const;

  // Canonical scalar for a rational, or IntegralityError if it is not in the ring.
  Rat canon(const Rat& q) const;
  bool contains(const Rat& q) const;
  bool is_unit(const Int& n) const;
  // p with p*1 = 0 for a prime p, if any.
  std::optional<long> char_p() const;
  bool torsion_free() const;
  bool is_field_of_fractions() const { return scalar()->kind_ == Kind::Rationals; }
  // Finite scalar ring size, if the ring is finite.
  std::optional<Int> size() const;

  bool operator==(const RingSpec& o) const;
  bool operator!=(const RingSpec& o) const { return !(*this == o); }

  std::string to_string() const;
  nlohmann::json to_json() const;
  static RingSpecPtr from_json(const nlohmann::json& j);
  // "ZZ", "QQ", "ZZ/8", "ZZ_(3)", "ZZ[X,Y]", "ZZ/5[T]".
  static RingSpecPtr parse(const std::string& s);

 private:
  Kind kind_ = Kind::Integers;
  Int modulus_ = 0;
  RingSpecPtr scalar_;
  std::vector<std::string> vars_;
};

// An element of a RingSpec in canonical form.  Scalars are held as a Rat,
// polynomial elements as a Poly whose variable ids are positions in vars().
class RingElem {
 public:
  RingElem() = default;
  static RingElem zero(const RingSpecPtr& spec);
  static RingElem one(const RingSpecPtr& spec);
  static RingElem from_int(const RingSpecPtr& spec, const Int& n);
  static RingElem from_rat(const RingSpecPtr& spec, const Rat& q);
  static RingElem from_poly(const RingSpecPtr& spec, const Poly& p);
  static RingElem var(const RingSpecPtr& spec, const std::string& name);
  static RingElem var(const RingSpecPtr& spec, std::size_t index);
  static RingElem parse(const RingSpecPtr& spec, const std::string& text);

  const RingSpecPtr& spec() const { return spec_; }
  bool is_poly() const { return spec_ && spec_->is_polynomial(); }
  const Rat& scalar() const { return s_; }
  const Poly& poly() const { return p_; }
  bool is_zero() const;
  bool is_one() const;
  // Scalar value when the element is a constant.
  std::optional<Rat> as_constant() const;

  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o);
  RingElem& operator*=(const RingElem& o);
  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(RingElem a, const RingElem& b) { return a *= b; }
  RingElem operator-() const;
  RingElem pow(unsigned long e) const;
  RingElem scaled(const Int& n) const;
  bool operator==(const RingElem& o) const;
  bool operator!=(const RingElem& o) const { return !(*this == o); }

  // True when x = d*y for some y in the ring.
  bool divisible_by(const Int& d) const;
  // Some y with d*y = x; IntegralityError when none exists.
  RingElem exact_div(const Int& d) const;

  std::string to_string() const;
  nlohmann::json to_json() const;
  static RingElem from_json(const RingSpecPtr& spec, const nlohmann::json& j);

 private:
  void check_same(const RingElem& o) const;
  void normalize();

  RingSpecPtr spec_;
  Rat s_;
  Poly p_;
};

// Evaluate p (rational coefficients, variables looked up by `value`) in a
// ring; coefficients must lie in the ring.
RingElem eval_in(const RingSpecPtr& spec, const Poly& p,
                 const std::function<RingElem(VarId)>& value);
// Evaluate a polynomial element of a polynomial ring at an assignment.
RingElem poly_eval(const RingElem& p, const std::map<std::string, RingElem>& assignment);

struct IntegralityVerdict {
  bool integral = true;
  std::string witness;  // offending monomial, "1" for a constant
  Int denominator = 1;
};
// For elements over QQ (or polynomials over QQ): are all coefficients integers?
IntegralityVerdict rational_integrality(const RingElem& x);
IntegralityVerdict rational_integrality(const Poly& p, const NameFn& name = var::name);

// A family of ring endomorphisms phi_n.
struct FrobeniusFamily {
  RingSpecPtr spec;
  std::function<RingElem(long, const RingElem&)> phi;

  static FrobeniusFamily identity(const RingSpecPtr& spec);
  // phi_n(v) = v^n on every variable of a polynomial ring.
  static FrobeniusFamily power_on_vars(const RingSpecPtr& spec);
};

Report frobenius_family_check(const FrobeniusFamily& f, const std::vector<RingElem>& samples,
                              long bound);

}  // namespace wittlab
