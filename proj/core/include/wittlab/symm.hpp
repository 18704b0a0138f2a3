#pragma once

#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wittlab/arith.hpp"
#include "wittlab/poly.hpp"

namespace wittlab {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

namespace part {
// Sorts, drops zeros; rejects negative entries.
Partition make(std::vector<int> parts);
int weight(const Partition& l);
// All partitions of n, reverse-lexicographic: (n), (n-1,1), ..., (1^n).
const std::vector<Partition>& of_weight(int n);
// m[i] = number of parts equal to i (index 0 unused).
std::vector<int> multiplicities(const Partition& l);
Int z(const Partition& l);
Partition conjugate(const Partition& l);
Partition scaled(const Partition& l, int n);
Partition join(const Partition& a, const Partition& b);
std::string to_string(const Partition& l);
Partition parse(const std::string& text);  // "2,1" or "(2,1)"
// Prefix sums of the decreasingly sorted a dominate those of b (equal totals).
bool majorizes(std::vector<int> a, std::vector<int> b);
}  // namespace part

enum class Basis { M, H, E, P, S, F, X, R };
Basis parse_basis(const std::string& name);  // m h e p s f x r (also "forgotten", "wittx", "rbasis")
std::string basis_name(Basis b);

// Default 10.  Public operations throw CapError above it.
void set_weight_cap(int cap);
int weight_cap();

class SymFn {
 public:
  using Terms = std::map<Partition, Rat>;

  explicit SymFn(Basis b = Basis::H) : basis_(b) {}
  static SymFn of(Basis b, const Partition& l, const Rat& c = 1);
  static SymFn scalar(const Rat& c, Basis b = Basis::H) { return of(b, {}, c); }

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  Rat coeff(const Partition& l) const;
  void add(const Partition& l, const Rat& c);
  bool is_zero() const { return terms_.empty(); }
  int max_weight() const;
  bool is_integral() const;

  SymFn& operator+=(const SymFn& o);
  SymFn& operator-=(const SymFn& o);
  SymFn& operator*=(const Rat& c);
  friend SymFn operator+(SymFn a, const SymFn& b) { return a += b; }
  friend SymFn operator-(SymFn a, const SymFn& b) { return a -= b; }
  friend SymFn operator*(SymFn a, const Rat& c) { return a *= c; }
  friend SymFn operator*(const Rat& c, SymFn a) { return a *= c; }
  SymFn operator-() const { return *this * Rat(-1); }
  // Same basis and same terms (no conversion).
  bool operator==(const SymFn& o) const { return basis_ == o.basis_ && terms_ == o.terms_; }
  bool operator!=(const SymFn& o) const { return !(*this == o); }

  // Terms by weight, then reverse-lexicographic: "h(4) - h(3,1) + 2*h(2,1,1)".
  std::string to_string() const;
  nlohmann::json to_json() const;
  static SymFn from_json(const nlohmann::json& j);

 private:
  Basis basis_;
  Terms terms_;
};

// Conversion through cached per-weight transition matrices.  Results in an
// integral basis (everything except P) must be integral or IntegralityError.
SymFn convert(const SymFn& f, Basis target);
bool equal(const SymFn& a, const SymFn& b);  // after conversion to h
SymFn multiply(const SymFn& f, const SymFn& g, std::optional<Basis> out = std::nullopt);
Rat hall_inner(const SymFn& f, const SymFn& g);

// Row lambda = basis element lambda expanded in `to`, partitions of d in
// reverse-lexicographic order.
std::vector<std::vector<Rat>> transition_matrix(Basis from, Basis to, int d);

// Image in Q[x1..xN] with x_{>N} = 0 (variables x1, x2, ...).
Poly expand_in_variables(const SymFn& f, int N);
// Inverse on symmetric polynomials in N >= degree variables, m basis.
SymFn from_variables(const Poly& p);

SymFn schur(const Partition& l);
SymFn skew_schur(const Partition& outer, const Partition& inner);

// Tensor in Symm (x) Symm; each side carries a basis tag.
struct SymTensor {
  Basis left = Basis::H, right = Basis::H;
  std::map<std::pair<Partition, Partition>, Rat> terms;

  void add(const Partition& a, const Partition& b, const Rat& c);
  SymTensor convert(Basis l, Basis r) const;
  bool operator==(const SymTensor& o) const { return left == o.left && right == o.right && terms == o.terms; }
  std::string to_string() const;
  nlohmann::json to_json() const;
};

SymTensor comul_sum(const SymFn& f);
SymTensor comul_prod(const SymFn& f);
SymFn antipode(const SymFn& f);
Rat counit_sum(const SymFn& f);   // constant term
Rat counit_prod(const SymFn& f);  // h_n -> 1
// m(t): multiply the two tensor factors, result in h.
SymFn multiply_out(const SymTensor& t);
// (eps (x) id) and (id (x) eps) for either counit.
SymFn apply_counit_left(const SymTensor& t, bool product);
SymFn apply_counit_right(const SymTensor& t, bool product);

SymFn frobenius_symm(long n, const SymFn& f);
SymFn verschiebung_symm(long n, const SymFn& f);
SymFn plethysm(const SymFn& f, const SymFn& g, std::optional<Basis> out = std::nullopt);

// Variables of the universal lambda formulas: a_i = lambda^i(x), b_j = lambda^j(y).
std::string lambda_var_name(VarId v);
Poly lambda_sum_formula(int n);
Poly lambda_product_formula(int n);
Poly lambda_iterate_formula(int m, int n);

// psi_from_lambda: psi^n in lambda1..lambdan (variables a_i);
// lambda_from_psi: n! lambda^n in psi1..psin (variables q_i).
enum class NewtonDirection { PsiFromLambda, LambdaFromPsi };
Poly newton_determinant(int n, NewtonDirection dir);
std::string newton_var_name(VarId v);

// Determinant of a square matrix of polynomials (Laplace with memo).
Poly det_poly(const std::vector<std::vector<Poly>>& a);

enum class HirzebruchMode { Multiplicative, Additive };
// q[k] = coefficient of z^k in Q.  Result in the e basis.
SymFn hirzebruch_sequence(const std::vector<Rat>& q, int n, HirzebruchMode mode);
std::vector<Rat> todd_coefficients(int n);

SymFn witt_symm(int d);               // x_d in h
SymFn r_symm(const Partition& l);     // r_lambda in h

struct SchurSign {
  SymFn expansion;  // -x_n (x_1 for n = 1) in the s basis
  bool positive = true;
};
SchurSign schur_sign_check(int n);

enum class Klein { Id, Alt, Inv, AltInv };
Klein parse_klein(const std::string& s);
std::string klein_name(Klein k);
SymFn klein_automorphism(Klein k, const SymFn& f);
Klein klein_compose(Klein a, Klein b);  // group table

using Matrix01 = std::vector<std::vector<int>>;
struct GaleRyser {
  bool verdict = false;             // conj(alpha) majorizes beta
  std::optional<bool> search;       // exhaustive result (weight <= 12)
  std::optional<Matrix01> witness;  // rows alpha, columns beta
};
GaleRyser gale_ryser(const std::vector<int>& alpha, const std::vector<int>& beta, bool do_search = true);
std::optional<Matrix01> search_01_matrix(const std::vector<int>& rows, const std::vector<int>& cols);

// Symmetric function as a polynomial in h_1, h_2, ... (variables h1, h2, ...).
Poly to_h_poly(const SymFn& f);
SymFn from_h_poly(const Poly& p);

}  // namespace wittlab
