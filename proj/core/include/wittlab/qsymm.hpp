#pragma once

#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wittlab/arith.hpp"
#include "wittlab/poly.hpp"
#include "wittlab/report.hpp"
#include "wittlab/symm.hpp"

namespace wittlab {

// Ordered positive entries; [] is the unit.
using Composition = std::vector<int>;

namespace comp {
Composition make(std::vector<int> entries);  // rejects entries < 1
int weight(const Composition& a);
Partition partition_of(const Composition& a);
// All compositions of n: by length descending, then lexicographic.
std::vector<Composition> of_weight(int n);
std::string to_string(const Composition& a);  // "[1,2]"
Composition parse(const std::string& text);    // "1,2" or "[1,2]"
Composition scaled(const Composition& a, int n);
// Distinct rearrangements of a partition.
std::vector<Composition> rearrangements(const Partition& l);
}  // namespace comp

// Default 8.  Operations whose output weight exceeds it throw CapError.
void set_qsym_weight_cap(int cap);
int qsym_weight_cap();
// Maximal length for (0,alpha)-matrix enumeration, default 7.
void set_matrix_length_cap(int cap);
int matrix_length_cap();

// Integer combination of words indexed by compositions.  QSymFn reads a key
// as the monomial quasi-symmetric function, NSymFn as Z_a1 ... Z_am.
template <int Tag>
class WordFn {
 public:
  using Terms = std::map<Composition, Int>;

  WordFn() = default;
  static WordFn of(const Composition& a, const Int& c = 1) {
    WordFn f;
    f.add(a, c);
    return f;
  }

  const Terms& terms() const { return terms_; }
  Int coeff(const Composition& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Int(0) : it->second;
  }
  void add(const Composition& a, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(a, c);
    if (!fresh && (it->second += c) == 0) terms_.erase(it);
  }
  bool is_zero() const { return terms_.empty(); }
  int max_weight() const {
    int w = 0;
    for (const auto& [a, c] : terms_) w = std::max(w, comp::weight(a));
    return w;
  }

  WordFn& operator+=(const WordFn& o) {
    for (const auto& [a, c] : o.terms_) add(a, c);
    return *this;
  }
  WordFn& operator-=(const WordFn& o) {
    for (const auto& [a, c] : o.terms_) add(a, -c);
    return *this;
  }
  WordFn& operator*=(const Int& k) {
    if (k == 0) terms_.clear();
    for (auto& [a, c] : terms_) c *= k;
    return *this;
  }
  friend WordFn operator+(WordFn a, const WordFn& b) { return a += b; }
  friend WordFn operator-(WordFn a, const WordFn& b) { return a -= b; }
  friend WordFn operator*(WordFn a, const Int& k) { return a *= k; }
  friend WordFn operator*(const Int& k, WordFn a) { return a *= k; }
  bool operator==(const WordFn& o) const { return terms_ == o.terms_; }
  bool operator!=(const WordFn& o) const { return terms_ != o.terms_; }

  // "6[1,1,1] + 3[1,2] + [3]" (NSymm words print as "Z[1,2]").
  std::string to_string() const;
  nlohmann::json to_json() const;
  static WordFn from_json(const nlohmann::json& j);

 private:
  Terms terms_;
};

using QSymFn = WordFn<0>;
using NSymFn = WordFn<1>;
extern template class WordFn<0>;
extern template class WordFn<1>;

// Sum over (left, right) words; "[1](x)[2]" with [] printed as 1.
struct WordTensor {
  std::map<std::pair<Composition, Composition>, Int> terms;
  void add(const Composition& a, const Composition& b, const Int& c);
  bool operator==(const WordTensor& o) const { return terms == o.terms; }
  std::string to_string() const;
  nlohmann::json to_json() const;
};

QSymFn overlapping_shuffle(const Composition& a, const Composition& b);
QSymFn qsym_multiply(const QSymFn& f, const QSymFn& g);
QSymFn qsym_power(const QSymFn& f, unsigned long e);
WordTensor cut_comul(const QSymFn& f);
Int qsym_counit(const QSymFn& f);
// m(t) in QSymm.
QSymFn qsym_multiply_out(const WordTensor& t);

NSymFn nsym_multiply(const NSymFn& f, const NSymFn& g);
WordTensor nsym_comul(const NSymFn& f);
Int nsym_counit(const NSymFn& f);

Int pair(const NSymFn& F, const QSymFn& g);
Int pair(const WordTensor& F, const WordTensor& g);

// m_lambda -> sum of distinct rearrangements (integral SymFn only).
QSymFn embed_symm(const SymFn& f);
// Inverse on symmetric elements (m basis); nullopt when f is not symmetric.
std::optional<SymFn> qsym_to_symm(const QSymFn& f);
// Z_a -> h_{sort a}.
SymFn nsym_to_symm(const NSymFn& F);
// Image of M_a in Q[x1..xN] (variables x1, x2, ...).
Poly qsym_expand_in_variables(const QSymFn& f, int N);

// A (0,a)-matrix: rows x cols, entries 0 or the a_i in reading order.
using EntryMatrix = std::vector<std::vector<int>>;
std::vector<EntryMatrix> zero_alpha_matrices(const Composition& a);
Composition row_sums(const EntryMatrix& m);
Composition column_sums(const EntryMatrix& m);
WordTensor comul_prod_qsym(const QSymFn& f);
Int counit_p(const QSymFn& f);
WordTensor embed_tensor(const SymTensor& t);

QSymFn frobenius_qsym(long n, const QSymFn& f);

struct PPowerVerdict {
  bool pass = true;
  QSymFn difference;  // a^p - f_p(a)
};
PPowerVerdict ppower_congruence(const Composition& a, long p);

bool is_lyndon(const Composition& w);
bool is_primitive(const Composition& w);

// lambda^n through the Newton determinant with psi^k = f_k.
QSymFn lambda_qsym(long n, const QSymFn& f);

struct GridRow {
  int weight = 0;
  std::vector<std::string> monomials;  // e.g. "lambda2[1]*[1]"
  long rank = 0;                       // expected 2^(weight-1)
  Int determinant;
};
struct GridResult {
  std::vector<GridRow> rows;
  Report report;
};
// maxwt <= 5.
GridResult generator_grid_check(int maxwt);

}  // namespace wittlab
