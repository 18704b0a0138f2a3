#include "wittlab/qsymm.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "wittlab/errors.hpp"

namespace wittlab {

// ------------------------------------------------------------ compositions

namespace comp {

Composition make(std::vector<int> entries) {
  for (int x : entries)
    if (x < 1) throw std::invalid_argument("composition entries must be positive");
  return entries;
}

int weight(const Composition& a) { return std::accumulate(a.begin(), a.end(), 0); }

Partition partition_of(const Composition& a) { return part::make(a); }

namespace {
void compositions(int n, Composition& cur, std::vector<Composition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = 1; k <= n; ++k) {
    cur.push_back(k);
    compositions(n - k, cur, out);
    cur.pop_back();
  }
}
bool print_before(const Composition& a, const Composition& b) {
  int wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb;
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}
}  // namespace

std::vector<Composition> of_weight(int n) {
  if (n < 0) throw std::invalid_argument("negative weight");
  std::vector<Composition> out;
  Composition cur;
  compositions(n, cur, out);
  std::sort(out.begin(), out.end(), print_before);
  return out;
}

std::string to_string(const Composition& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + "]";
}

Composition parse(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (ch != '[' && ch != ']' && ch != '(' && ch != ')' && ch != ' ') t += ch;
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < t.size()) {
    std::size_t next = t.find(',', pos);
    if (next == std::string::npos) next = t.size();
    std::string item = t.substr(pos, next - pos);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad composition: " + text);
    out.push_back(std::stoi(item));
    pos = next + 1;
  }
  return make(out);
}

Composition scaled(const Composition& a, int n) {
  Composition out = a;
  for (int& x : out) x *= n;
  return out;
}

std::vector<Composition> rearrangements(const Partition& l) {
  std::vector<int> v(l.begin(), l.end());
  std::sort(v.begin(), v.end());
  std::vector<Composition> out;
  do out.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace comp

namespace {
std::atomic<int> g_cap{8};
std::atomic<int> g_len_cap{7};

void check_cap(int w, const char* what) {
  if (w > g_cap.load())
    throw CapError(std::string(what) + ": weight " + std::to_string(w) + " exceeds the QSymm cap " +
                   std::to_string(g_cap.load()));
}

std::vector<std::pair<Composition, Int>> print_order(const std::map<Composition, Int>& t) {
  std::vector<std::pair<Composition, Int>> v(t.begin(), t.end());
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    int wa = comp::weight(x.first), wb = comp::weight(y.first);
    if (wa != wb) return wa < wb;
    if (x.first.size() != y.first.size()) return x.first.size() > y.first.size();
    return x.first < y.first;
  });
  return v;
}

std::string signed_term(bool first, const Int& c, const std::string& body) {
  std::string s;
  if (first)
    s = c < 0 ? "-" : "";
  else
    s = c < 0 ? " - " : " + ";
  Int a = abs(c);
  if (a != 1 || body.empty()) s += a.get_str();
  return s + body;
}
}  // namespace

void set_qsym_weight_cap(int cap) {
  if (cap < 1) throw std::invalid_argument("cap must be positive");
  g_cap = cap;
}
int qsym_weight_cap() { return g_cap.load(); }
void set_matrix_length_cap(int cap) {
  if (cap < 1) throw std::invalid_argument("cap must be positive");
  g_len_cap = cap;
}
int matrix_length_cap() { return g_len_cap.load(); }

template <int Tag>
std::string WordFn<Tag>::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [a, c] : print_order(terms_)) {
    std::string body = a.empty() ? "" : (Tag == 1 ? "Z" : "") + comp::to_string(a);
    s += signed_term(first, c, body);
    first = false;
  }
  return s;
}

template <int Tag>
nlohmann::json WordFn<Tag>::to_json() const {
  nlohmann::json t = nlohmann::json::array();
  for (const auto& [a, c] : print_order(terms_)) t.push_back({{"composition", a}, {"coeff", c.get_str()}});
  return {{"basis", Tag == 1 ? "Z" : "M"}, {"terms", t}};
}

template <int Tag>
WordFn<Tag> WordFn<Tag>::from_json(const nlohmann::json& j) {
  WordFn f;
  for (const auto& t : j.at("terms")) {
    const auto& c = t.at("coeff");
    Int v = c.is_string() ? Int(c.get<std::string>()) : Int(c.get<long>());
    f.add(comp::make(t.at("composition").get<std::vector<int>>()), v);
  }
  return f;
}

template class WordFn<0>;
template class WordFn<1>;

void WordTensor::add(const Composition& a, const Composition& b, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms.try_emplace({a, b}, c);
  if (!fresh && (it->second += c) == 0) terms.erase(it);
}

std::string WordTensor::to_string() const {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : terms) {
    std::string l = k.first.empty() ? "1" : comp::to_string(k.first);
    std::string r = k.second.empty() ? "1" : comp::to_string(k.second);
    s += signed_term(first, c, l + "(x)" + r);
    first = false;
  }
  return s;
}

nlohmann::json WordTensor::to_json() const {
  nlohmann::json t = nlohmann::json::array();
  for (const auto& [k, c] : terms) t.push_back({{"left", k.first}, {"right", k.second}, {"coeff", c.get_str()}});
  return {{"terms", t}};
}

// ------------------------------------------------------- Hopf structures

namespace {
void shuffle_into(const Composition& a, std::size_t i, const Composition& b, std::size_t j, Composition& cur,
                  const Int& c, QSymFn& out) {
  if (i == a.size() || j == b.size()) {
    Composition w = cur;
    w.insert(w.end(), a.begin() + static_cast<long>(i), a.end());
    w.insert(w.end(), b.begin() + static_cast<long>(j), b.end());
    out.add(w, c);
    return;
  }
  cur.push_back(a[i]);
  shuffle_into(a, i + 1, b, j, cur, c, out);
  cur.back() = b[j];
  shuffle_into(a, i, b, j + 1, cur, c, out);
  cur.back() = a[i] + b[j];
  shuffle_into(a, i + 1, b, j + 1, cur, c, out);
  cur.pop_back();
}
}  // namespace

QSymFn overlapping_shuffle(const Composition& a, const Composition& b) {
  check_cap(comp::weight(a) + comp::weight(b), "overlapping_shuffle");
  QSymFn out;
  Composition cur;
  shuffle_into(a, 0, b, 0, cur, 1, out);
  return out;
}

QSymFn qsym_multiply(const QSymFn& f, const QSymFn& g) {
  check_cap(f.max_weight() + g.max_weight(), "qsym_multiply");
  QSymFn out;
  for (const auto& [a, c] : f.terms())
    for (const auto& [b, d] : g.terms()) {
      Composition cur;
      shuffle_into(a, 0, b, 0, cur, c * d, out);
    }
  return out;
}

QSymFn qsym_power(const QSymFn& f, unsigned long e) {
  QSymFn r = QSymFn::of({});
  for (unsigned long i = 0; i < e; ++i) r = qsym_multiply(r, f);
  return r;
}

WordTensor cut_comul(const QSymFn& f) {
  WordTensor t;
  for (const auto& [a, c] : f.terms())
    for (std::size_t i = 0; i <= a.size(); ++i)
      t.add(Composition(a.begin(), a.begin() + static_cast<long>(i)), Composition(a.begin() + static_cast<long>(i), a.end()), c);
  return t;
}

Int qsym_counit(const QSymFn& f) { return f.coeff({}); }

QSymFn qsym_multiply_out(const WordTensor& t) {
  QSymFn out;
  for (const auto& [k, c] : t.terms) {
    Composition cur;
    shuffle_into(k.first, 0, k.second, 0, cur, c, out);
  }
  return out;
}

NSymFn nsym_multiply(const NSymFn& f, const NSymFn& g) {
  NSymFn out;
  for (const auto& [a, c] : f.terms())
    for (const auto& [b, d] : g.terms()) {
      Composition w = a;
      w.insert(w.end(), b.begin(), b.end());
      out.add(w, c * d);
    }
  return out;
}

namespace {
// Each letter Z_n splits as sum_{i+j=n} Z_i (x) Z_j, with Z_0 = 1.
void split_word(const Composition& a, std::size_t k, Composition& l, Composition& r, const Int& c, WordTensor& out) {
  if (k == a.size()) {
    out.add(l, r, c);
    return;
  }
  for (int i = 0; i <= a[k]; ++i) {
    int j = a[k] - i;
    if (i) l.push_back(i);
    if (j) r.push_back(j);
    split_word(a, k + 1, l, r, c, out);
    if (i) l.pop_back();
    if (j) r.pop_back();
  }
}
}  // namespace

WordTensor nsym_comul(const NSymFn& f) {
  WordTensor t;
  for (const auto& [a, c] : f.terms()) {
    Composition l, r;
    split_word(a, 0, l, r, c, t);
  }
  return t;
}

Int nsym_counit(const NSymFn& f) { return f.coeff({}); }

Int pair(const NSymFn& F, const QSymFn& g) {
  Int s = 0;
  for (const auto& [a, c] : F.terms()) s += c * g.coeff(a);
  return s;
}

Int pair(const WordTensor& F, const WordTensor& g) {
  Int s = 0;
  for (const auto& [k, c] : F.terms) {
    auto it = g.terms.find(k);
    if (it != g.terms.end()) s += c * it->second;
  }
  return s;
}

// ------------------------------------------------------------ with Symm

QSymFn embed_symm(const SymFn& f) {
  SymFn m = convert(f, Basis::M);
  QSymFn out;
  for (const auto& [l, c] : m.terms()) {
    if (c.get_den() != 1)
      throw IntegralityError("embed_symm: coefficient " + to_string(c) + " of m" + part::to_string(l) +
                             " is not an integer");
    for (const auto& a : comp::rearrangements(l)) out.add(a, c.get_num());
  }
  return out;
}

std::optional<SymFn> qsym_to_symm(const QSymFn& f) {
  SymFn out(Basis::M);
  for (const auto& [a, c] : f.terms()) {
    Partition l = comp::partition_of(a);
    for (const auto& b : comp::rearrangements(l))
      if (f.coeff(b) != c) return std::nullopt;
    if (a == Composition(l.begin(), l.end())) out.add(l, Rat(c));
  }
  return out;
}

SymFn nsym_to_symm(const NSymFn& F) {
  SymFn out(Basis::H);
  for (const auto& [a, c] : F.terms()) out.add(comp::partition_of(a), Rat(c));
  return out;
}

Poly qsym_expand_in_variables(const QSymFn& f, int N) {
  if (N < 1) throw std::invalid_argument("need at least one variable");
  Poly acc;
  for (const auto& [a, c] : f.terms()) {
    auto m = a.size();
    if (m > static_cast<std::size_t>(N)) continue;
    // Increasing index tuples i_1 < ... < i_m.
    std::vector<bool> pick(static_cast<std::size_t>(N), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(m), true);
    do {
      std::vector<VarExp> fs;
      std::size_t k = 0;
      for (std::size_t i = 0; i < pick.size(); ++i)
        if (pick[i]) fs.emplace_back(var::make('x', static_cast<std::uint32_t>(i + 1)), static_cast<std::uint32_t>(a[k++]));
      acc.add_term(Monomial::from_factors(fs), Rat(c));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return acc;
}

// ------------------------------------------------- second comultiplication

namespace {
// Rows are consecutive nonempty blocks of a; within a row the columns
// increase strictly; every column must be used.
void enumerate_matrices(const Composition& a, std::size_t k, int cols, std::vector<std::vector<std::pair<int, int>>>& rows,
                        std::vector<int>& used, std::vector<EntryMatrix>& out) {
  if (k == a.size()) {
    for (int u : used)
      if (u == 0) return;
    EntryMatrix m(rows.size(), std::vector<int>(static_cast<std::size_t>(cols), 0));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [c, v] : rows[r]) m[r][static_cast<std::size_t>(c)] = v;
    out.push_back(std::move(m));
    return;
  }
  // Continue the current row to a column right of its last entry.
  if (!rows.empty()) {
    int last = rows.back().back().first;
    for (int c = last + 1; c < cols; ++c) {
      rows.back().emplace_back(c, a[k]);
      ++used[static_cast<std::size_t>(c)];
      enumerate_matrices(a, k + 1, cols, rows, used, out);
      --used[static_cast<std::size_t>(c)];
      rows.back().pop_back();
    }
  }
  // Start a new row.
  for (int c = 0; c < cols; ++c) {
    rows.push_back({{c, a[k]}});
    ++used[static_cast<std::size_t>(c)];
    enumerate_matrices(a, k + 1, cols, rows, used, out);
    --used[static_cast<std::size_t>(c)];
    rows.pop_back();
  }
}
}  // namespace

std::vector<EntryMatrix> zero_alpha_matrices(const Composition& a) {
  if (static_cast<int>(a.size()) > g_len_cap.load())
    throw CapError("(0,a)-matrix enumeration: length " + std::to_string(a.size()) + " exceeds the cap " +
                   std::to_string(g_len_cap.load()));
  std::vector<EntryMatrix> out;
  if (a.empty()) return out;
  for (int cols = 1; cols <= static_cast<int>(a.size()); ++cols) {
    std::vector<std::vector<std::pair<int, int>>> rows;
    std::vector<int> used(static_cast<std::size_t>(cols), 0);
    enumerate_matrices(a, 0, cols, rows, used, out);
  }
  return out;
}

Composition row_sums(const EntryMatrix& m) {
  Composition r;
  for (const auto& row : m) r.push_back(std::accumulate(row.begin(), row.end(), 0));
  return r;
}

Composition column_sums(const EntryMatrix& m) {
  Composition c(m.empty() ? 0 : m[0].size(), 0);
  for (const auto& row : m)
    for (std::size_t j = 0; j < row.size(); ++j) c[j] += row[j];
  return c;
}

WordTensor comul_prod_qsym(const QSymFn& f) {
  WordTensor t;
  for (const auto& [a, c] : f.terms()) {
    if (a.empty()) throw std::invalid_argument("the second comultiplication is not defined on the unit");
    for (const auto& m : zero_alpha_matrices(a)) t.add(row_sums(m), column_sums(m), c);
  }
  return t;
}

Int counit_p(const QSymFn& f) {
  Int s = 0;
  for (const auto& [a, c] : f.terms())
    if (a.size() == 1) s += c;
  return s;
}

WordTensor embed_tensor(const SymTensor& t) {
  SymTensor m = t.convert(Basis::M, Basis::M);
  WordTensor out;
  for (const auto& [k, c] : m.terms) {
    if (c.get_den() != 1) throw IntegralityError("embed_tensor: non-integral coefficient " + to_string(c));
    for (const auto& a : comp::rearrangements(k.first))
      for (const auto& b : comp::rearrangements(k.second)) out.add(a, b, c.get_num());
  }
  return out;
}

// -------------------------------------------------------------- Frobenius

QSymFn frobenius_qsym(long n, const QSymFn& f) {
  if (n < 1) throw std::invalid_argument("Frobenius index must be positive");
  check_cap(static_cast<int>(n) * f.max_weight(), "frobenius_qsym");
  QSymFn out;
  for (const auto& [a, c] : f.terms()) out.add(comp::scaled(a, static_cast<int>(n)), c);
  return out;
}

PPowerVerdict ppower_congruence(const Composition& a, long p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  QSymFn x = QSymFn::of(a);
  PPowerVerdict v;
  v.difference = qsym_power(x, static_cast<unsigned long>(p)) - frobenius_qsym(p, x);
  for (const auto& [b, c] : v.difference.terms())
    if (c % p != 0) v.pass = false;
  return v;
}

bool is_lyndon(const Composition& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!(w < Composition(w.begin() + static_cast<long>(i), w.end()))) return false;
  return true;
}

bool is_primitive(const Composition& w) {
  int g = 0;
  for (int x : w) g = std::gcd(g, x);
  return g == 1;
}

// ------------------------------------------------------------- lambda ops

QSymFn lambda_qsym(long n, const QSymFn& f) {
  if (n < 1) throw std::invalid_argument("lambda index must be positive");
  check_cap(static_cast<int>(n) * f.max_weight(), "lambda_qsym");
  if (n == 1) return f;
  Poly det = newton_determinant(static_cast<int>(n), NewtonDirection::LambdaFromPsi);
  std::vector<QSymFn> psi(static_cast<std::size_t>(n) + 1);
  for (long k = 1; k <= n; ++k) psi[static_cast<std::size_t>(k)] = frobenius_qsym(k, f);
  QSymFn acc;
  for (const auto& [mono, c] : det.terms()) {
    if (c.get_den() != 1) throw std::logic_error("Newton determinant with a fractional coefficient");
    QSymFn t = QSymFn::of({}, c.get_num());
    for (const auto& [v, e] : mono.factors())
      for (std::uint32_t i = 0; i < e; ++i) t = qsym_multiply(t, psi[var::index(v)]);
    acc += t;
  }
  Int nf = factorial(static_cast<unsigned long>(n));
  QSymFn out;
  for (const auto& [a, c] : acc.terms()) {
    if (c % nf != 0)
      throw IntegralityError("lambda_qsym: coefficient of " + comp::to_string(a) + " is not divisible by " +
                             nf.get_str());
    out.add(a, c / nf);
  }
  return out;
}

namespace {

struct Generator {
  long n;
  Composition a;
  int weight;
  std::string name() const {
    return (n == 1 ? std::string() : "lambda" + std::to_string(n)) + comp::to_string(a);
  }
};

void monomials(const std::vector<Generator>& gens, std::size_t from, int left, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < gens.size(); ++i) {
    if (gens[i].weight > left) continue;
    cur.push_back(i);
    monomials(gens, i, left - gens[i].weight, cur, out);
    cur.pop_back();
  }
}

// Exact integer determinant (fraction-free Bareiss).
Int bareiss(std::vector<std::vector<Int>> a) {
  std::size_t n = a.size();
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return n == 0 ? Int(1) : Int(sign * a[n - 1][n - 1]);
}

}  // namespace

GridResult generator_grid_check(int maxwt) {
  if (maxwt < 1 || maxwt > 5) throw CapError("generator_grid_check needs 1 <= maxwt <= 5");
  std::vector<Generator> gens;
  for (int w = 1; w <= maxwt; ++w)
    for (const auto& a : comp::of_weight(w))
      if (is_lyndon(a) && is_primitive(a))
        for (long n = 1; n * w <= maxwt; ++n) gens.push_back({n, a, static_cast<int>(n) * w});
  std::vector<QSymFn> values;
  for (const auto& g : gens) values.push_back(lambda_qsym(g.n, QSymFn::of(g.a)));

  GridResult res;
  for (int d = 1; d <= maxwt; ++d) {
    std::vector<std::vector<std::size_t>> monos;
    std::vector<std::size_t> cur;
    monomials(gens, 0, d, cur, monos);
    auto basis = comp::of_weight(d);
    GridRow row;
    row.weight = d;
    row.rank = static_cast<long>(monos.size());
    std::vector<std::vector<Int>> mat;
    for (const auto& mono : monos) {
      QSymFn v = QSymFn::of({});
      std::string name;
      for (std::size_t i : mono) {
        v = qsym_multiply(v, values[i]);
        name += (name.empty() ? "" : "*") + gens[i].name();
      }
      row.monomials.push_back(name);
      std::vector<Int> r;
      for (const auto& a : basis) r.push_back(v.coeff(a));
      mat.push_back(std::move(r));
    }
    long expected = 1L << (d - 1);
    row.determinant = row.rank == expected ? bareiss(mat) : Int(0);
    res.report.add("weight " + std::to_string(d) + " count", row.rank == expected,
                   std::to_string(row.rank) + " monomials, rank " + std::to_string(expected));
    res.report.add("weight " + std::to_string(d) + " unimodular", abs(row.determinant) == 1,
                   "determinant " + row.determinant.get_str());
    res.rows.push_back(std::move(row));
  }
  return res;
}

}  // namespace wittlab
