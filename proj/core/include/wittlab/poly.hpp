#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wittlab/arith.hpp"

namespace wittlab {

// A variable is a letter plus an optional index, packed into 32 bits so that
// the natural integer order is "letter, then index".
using VarId = std::uint32_t;

namespace var {
constexpr std::uint32_t kNoIndex = 0xFFFFF;
inline VarId make(char letter, std::uint32_t index = kNoIndex) {
  return (VarId(static_cast<unsigned char>(letter)) << 20) | (index & 0xFFFFF);
}
inline char letter(VarId v) { return static_cast<char>(v >> 20); }
inline std::uint32_t index(VarId v) { return v & 0xFFFFF; }
std::string name(VarId v);
}  // namespace var

using VarExp = std::pair<VarId, std::uint32_t>;

class Monomial {
 public:
  using Storage = boost::container::small_vector<VarExp, 4>;

  Monomial() = default;
  static Monomial of(VarId v, std::uint32_t e = 1);
  // Factors may be unsorted and repeated; zero exponents are dropped.
  static Monomial from_factors(std::vector<VarExp> factors);

  const Storage& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t exponent(VarId v) const;

  Monomial operator*(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return f_ == o.f_; }
  bool operator!=(const Monomial& o) const { return !(f_ == o.f_); }
  std::size_t hash() const;

  // True when this should be printed before o (degree descending, then lex).
  bool grlex_before(const Monomial& o) const;

 private:
  Storage f_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

using NameFn = std::function<std::string(VarId)>;

class Poly {
 public:
  using Terms = std::unordered_map<Monomial, Rat, MonomialHash>;

  Poly() = default;
  Poly(const Rat& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  static Poly var(VarId v, std::uint32_t e = 1);
  static Poly term(const Monomial& m, const Rat& c);

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  Rat coeff(const Monomial& m) const;
  Rat constant_term() const { return coeff(Monomial()); }
  bool is_constant() const;
  std::uint32_t degree() const;
  std::vector<VarId> variables() const;

  void add_term(const Monomial& m, const Rat& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  Poly operator-() const;
  bool operator==(const Poly& o) const { return t_ == o.t_; }
  bool operator!=(const Poly& o) const { return !(t_ == o.t_); }

  Poly pow(unsigned long e) const;

  // First monomial (in print order) whose coefficient is not an integer.
  std::optional<std::pair<Monomial, Rat>> non_integral_term() const;
  bool is_integral() const { return !non_integral_term().has_value(); }
  // True when every coefficient is an integer divisible by d.
  bool divisible_by(const Int& d) const;

  Poly map_vars(const std::function<VarId(VarId)>& f) const;
  Poly map_coeffs(const std::function<Rat(const Rat&)>& f) const;
  // Substitute polynomials for some variables; others are left alone.
  Poly substitute(const std::function<std::optional<Poly>(VarId)>& f) const;

  // Terms in print order: total degree descending, then lex in variable order.
  std::vector<std::pair<Monomial, Rat>> sorted_terms() const;
  std::string to_string(const NameFn& name = var::name) const;

 private:
  Terms t_;
};

std::string monomial_to_string(const Monomial& m, const NameFn& name = var::name);

// Generic evaluation of a polynomial in a commutative ring T.  `value` maps a
// variable to its value and `constant` embeds a rational coefficient.
template <class T, class Value, class Constant>
T evaluate(const Poly& p, Value&& value, Constant&& constant, const T& zero) {
  std::unordered_map<VarId, std::vector<T>> powers;
  auto power = [&](VarId v, std::uint32_t e) -> const T& {
    auto it = powers.find(v);
    if (it == powers.end()) {
      it = powers.emplace(v, std::vector<T>{}).first;
      it->second.push_back(value(v));
    }
    auto& pw = it->second;
    while (pw.size() < e) pw.push_back(pw.back() * pw.front());
    return pw[e - 1];
  };
  T acc = zero;
  for (const auto& [m, c] : p.terms()) {
    T t = constant(c);
    for (const auto& [v, e] : m.factors()) t = t * power(v, e);
    acc = acc + t;
  }
  return acc;
}

}  // namespace wittlab
