#include "wittlab/symm.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "wittlab/errors.hpp"

namespace wittlab {

// ------------------------------------------------------------- partitions

namespace part {

Partition make(std::vector<int> parts) {
  for (int x : parts)
    if (x < 0) throw std::invalid_argument("partition parts must be non-negative");
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

int weight(const Partition& l) { return std::accumulate(l.begin(), l.end(), 0); }

namespace {
void gen(int n, int max, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max); k >= 1; --k) {
    cur.push_back(k);
    gen(n - k, k, cur, out);
    cur.pop_back();
  }
}
}  // namespace

const std::vector<Partition>& of_weight(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Partition>> memo;
  if (n < 0) throw std::invalid_argument("negative weight");
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(n);
  if (it == memo.end()) {
    std::vector<Partition> out;
    Partition cur;
    gen(n, n, cur, out);
    it = memo.emplace(n, std::move(out)).first;
  }
  return it->second;
}

std::vector<int> multiplicities(const Partition& l) {
  std::vector<int> m(l.empty() ? 1 : static_cast<std::size_t>(l.front()) + 1, 0);
  for (int x : l) ++m[static_cast<std::size_t>(x)];
  return m;
}

Int z(const Partition& l) {
  auto m = multiplicities(l);
  Int r = 1;
  for (std::size_t i = 1; i < m.size(); ++i)
    r *= ipow(static_cast<long>(i), static_cast<unsigned long>(m[i])) * factorial(static_cast<unsigned long>(m[i]));
  return r;
}

Partition conjugate(const Partition& l) {
  Partition c;
  if (l.empty()) return c;
  for (int k = 1; k <= l.front(); ++k)
    c.push_back(static_cast<int>(std::count_if(l.begin(), l.end(), [k](int x) { return x >= k; })));
  return c;
}

Partition scaled(const Partition& l, int n) {
  Partition r = l;
  for (int& x : r) x *= n;
  return r;
}

Partition join(const Partition& a, const Partition& b) {
  Partition r = a;
  r.insert(r.end(), b.begin(), b.end());
  std::sort(r.begin(), r.end(), std::greater<>());
  return r;
}

std::string to_string(const Partition& l) {
  std::string s = "(";
  for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
  return s + ")";
}

Partition parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != '(' && c != ')' && c != '[' && c != ']' && c != ' ') t += c;
  std::vector<int> v;
  std::stringstream ss(t);
  for (std::string tok; std::getline(ss, tok, ',');)
    if (!tok.empty()) v.push_back(std::stoi(tok));
  return make(v);
}

bool majorizes(std::vector<int> a, std::vector<int> b) {
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  std::size_t n = std::max(a.size(), b.size());
  a.resize(n, 0);
  b.resize(n, 0);
  long sa = 0, sb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa < sb) return false;
  }
  return sa == sb;
}

}  // namespace part

// ------------------------------------------------------------------ bases

Basis parse_basis(const std::string& name) {
  static const std::map<std::string, Basis> names = {
      {"m", Basis::M}, {"h", Basis::H}, {"e", Basis::E},         {"p", Basis::P},     {"s", Basis::S},
      {"f", Basis::F}, {"forgotten", Basis::F}, {"x", Basis::X}, {"wittx", Basis::X}, {"r", Basis::R},
      {"rbasis", Basis::R}};
  auto it = names.find(name);
  if (it == names.end()) throw std::invalid_argument("unknown basis '" + name + "'");
  return it->second;
}

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::M: return "m";
    case Basis::H: return "h";
    case Basis::E: return "e";
    case Basis::P: return "p";
    case Basis::S: return "s";
    case Basis::F: return "f";
    case Basis::X: return "x";
    case Basis::R: return "r";
  }
  return "?";
}

namespace {
std::atomic<int> g_cap{10};

void check_cap(int w, const char* what) {
  if (w > g_cap.load())
    throw CapError(std::string(what) + ": weight " + std::to_string(w) + " exceeds cap " + std::to_string(g_cap.load()));
}
}  // namespace

void set_weight_cap(int cap) {
  if (cap < 1) throw std::invalid_argument("weight cap must be positive");
  g_cap = cap;
}
int weight_cap() { return g_cap.load(); }

// ------------------------------------------------------------------ SymFn

SymFn SymFn::of(Basis b, const Partition& l, const Rat& c) {
  SymFn f(b);
  f.add(l, c);
  return f;
}

Rat SymFn::coeff(const Partition& l) const {
  auto it = terms_.find(l);
  return it == terms_.end() ? Rat(0) : it->second;
}

void SymFn::add(const Partition& l, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(l, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int SymFn::max_weight() const {
  int w = 0;
  for (const auto& [l, c] : terms_) w = std::max(w, part::weight(l));
  return w;
}

bool SymFn::is_integral() const {
  for (const auto& [l, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

SymFn& SymFn::operator+=(const SymFn& o) {
  if (o.basis_ != basis_) throw MismatchError("adding symmetric functions in different bases");
  for (const auto& [l, c] : o.terms_) add(l, c);
  return *this;
}

SymFn& SymFn::operator-=(const SymFn& o) {
  if (o.basis_ != basis_) throw MismatchError("subtracting symmetric functions in different bases");
  for (const auto& [l, c] : o.terms_) add(l, -c);
  return *this;
}

SymFn& SymFn::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [l, v] : terms_) v *= c;
  return *this;
}

namespace {

std::vector<std::pair<Partition, Rat>> print_order(const std::map<Partition, Rat>& terms) {
  std::vector<std::pair<Partition, Rat>> v(terms.begin(), terms.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    int wa = part::weight(a.first), wb = part::weight(b.first);
    if (wa != wb) return wa < wb;
    return a.first > b.first;
  });
  return v;
}

void append_term(std::string& s, const Rat& c, const std::string& body) {
  bool neg = c < 0;
  Rat a = neg ? Rat(-c) : c;
  if (s.empty())
    s += neg ? "-" : "";
  else
    s += neg ? " - " : " + ";
  if (body.empty())
    s += to_string(a);
  else if (a == 1)
    s += body;
  else
    s += to_string(a) + "*" + body;
}

}  // namespace

std::string SymFn::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [l, c] : print_order(terms_))
    append_term(s, c, l.empty() ? "" : basis_name(basis_) + part::to_string(l));
  return s;
}

nlohmann::json SymFn::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [l, c] : print_order(terms_)) terms.push_back({{"partition", l}, {"coeff", wittlab::to_string(c)}});
  return {{"basis", basis_name(basis_)}, {"terms", terms}};
}

SymFn SymFn::from_json(const nlohmann::json& j) {
  SymFn f(parse_basis(j.at("basis").get<std::string>()));
  for (const auto& t : j.at("terms")) {
    const auto& c = t.at("coeff");
    Rat q = c.is_string() ? parse_rat(c.get<std::string>()) : Rat(c.get<long>());
    f.add(part::make(t.at("partition").get<std::vector<int>>()), q);
  }
  return f;
}

// -------------------------------------------------------- transition data

namespace {

using Mat = std::vector<std::vector<Rat>>;

Mat invert(const Mat& a) {
  std::size_t n = a.size();
  Mat m = a, inv(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular transition matrix");
    std::swap(m[piv], m[c]);
    std::swap(inv[piv], inv[c]);
    Rat d = m[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      m[c][k] /= d;
      inv[c][k] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rat f = m[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        m[r][k] -= f * m[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

// Number of non-negative integer matrices with row sums `rows` and column
// sums `cols`: the coefficient of m_cols in h_rows.  With zero_one, entries
// are 0/1 (e basis); with whole_rows, each row sits in a single column (p).
enum class Fill { Any, ZeroOne, WholeRow };

Int count_fillings(const Partition& rows, const Partition& cols, Fill mode) {
  std::map<std::pair<std::size_t, std::vector<int>>, Int> memo;
  std::function<Int(std::size_t, std::vector<int>)> rec = [&](std::size_t i, std::vector<int> rem) -> Int {
    if (i == rows.size()) return std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; }) ? 1 : 0;
    std::sort(rem.begin(), rem.end(), std::greater<>());
    auto key = std::make_pair(i, rem);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Int total = 0;
    int r = rows[i];
    if (mode == Fill::WholeRow) {
      for (std::size_t j = 0; j < rem.size(); ++j)
        if (rem[j] >= r) {
          auto next = rem;
          next[j] -= r;
          total += rec(i + 1, next);
        }
    } else {
      int cap = mode == Fill::ZeroOne ? 1 : r;
      std::function<void(std::size_t, int, std::vector<int>&)> place = [&](std::size_t j, int left,
                                                                           std::vector<int>& cur) {
        if (left == 0) {
          total += rec(i + 1, cur);
          return;
        }
        if (j == cur.size()) return;
        int hi = std::min({left, cur[j], cap});
        for (int k = hi; k >= 0; --k) {
          cur[j] -= k;
          place(j + 1, left - k, cur);
          cur[j] += k;
        }
      };
      auto cur = rem;
      place(0, r, cur);
    }
    memo.emplace(key, total);
    return total;
  };
  std::vector<int> c(cols.begin(), cols.end());
  return rec(0, c);
}

VarId hv(int i) { return var::make('h', static_cast<std::uint32_t>(i)); }
Poly hpoly(int i) { return i == 0 ? Poly(1) : Poly::var(hv(i)); }

Poly h_monomial(const Partition& l) {
  std::vector<VarExp> f;
  for (int x : l) f.emplace_back(hv(x), 1);
  return Poly::term(Monomial::from_factors(f), 1);
}

Partition monomial_partition(const Monomial& m, char letter) {
  Partition l;
  for (const auto& [v, e] : m.factors()) {
    if (var::letter(v) != letter) throw std::invalid_argument("unexpected variable " + var::name(v));
    for (std::uint32_t k = 0; k < e; ++k) l.push_back(static_cast<int>(var::index(v)));
  }
  return part::make(l);
}

class Tables {
 public:
  static Tables& get() {
    static Tables t;
    return t;
  }

  const Poly& elem(Basis b, const Partition& l) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto key = std::make_pair(b, l);
    if (auto it = elem_.find(key); it != elem_.end()) return it->second;
    Poly p = compute_elem(b, l);
    return elem_.emplace(key, std::move(p)).first->second;
  }

  // Row lambda: coefficients of h_mu in C_lambda, and the inverse.
  const Mat& to_h(Basis b, int d) { return weight_data(b, d).first; }
  const Mat& from_h(Basis b, int d) { return weight_data(b, d).second; }

  const Poly& x_gen(int d) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (auto it = x_.find(d); it != x_.end()) return it->second;
    Poly acc = hpoly(d);
    for (const auto& l : part::of_weight(d)) {
      if (l.size() == 1) continue;
      Poly t(1);
      for (int x : l) t = t * x_gen(x);
      acc -= t;
    }
    return x_.emplace(d, std::move(acc)).first->second;
  }

  const Poly& antipode_gen(int n) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (auto it = iota_.find(n); it != iota_.end()) return it->second;
    Poly acc;
    if (n == 0)
      acc = Poly(1);
    else
      for (int i = 0; i < n; ++i) acc -= antipode_gen(i) * hpoly(n - i);
    return iota_.emplace(n, std::move(acc)).first->second;
  }

 private:
  Poly compute_elem(Basis b, const Partition& l) {
    if (l.empty()) return Poly(1);
    switch (b) {
      case Basis::H: return h_monomial(l);
      case Basis::M: {
        int d = part::weight(l);
        const auto& ps = part::of_weight(d);
        const Mat& inv = m_inverse(d);
        auto row = static_cast<std::size_t>(std::find(ps.begin(), ps.end(), l) - ps.begin());
        Poly acc;
        for (std::size_t j = 0; j < ps.size(); ++j)
          if (inv[row][j] != 0) acc += h_monomial(ps[j]) * inv[row][j];
        return acc;
      }
      case Basis::E: return product(l, [&](int k) { return elem(Basis::M, Partition(static_cast<std::size_t>(k), 1)); });
      case Basis::P: return product(l, [&](int k) { return elem(Basis::M, Partition{k}); });
      case Basis::X: return product(l, [&](int k) { return x_gen(k); });
      case Basis::S: {
        std::size_t n = l.size();
        std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            int k = l[i] - static_cast<int>(i) + static_cast<int>(j);
            if (k >= 0) a[i][j] = hpoly(k);
          }
        return det_poly(a);
      }
      case Basis::F: {
        Poly m = elem(Basis::M, l);
        return m.substitute([&](VarId v) -> std::optional<Poly> {
          return elem(Basis::E, Partition{static_cast<int>(var::index(v))});
        });
      }
      case Basis::R: {
        auto mult = part::multiplicities(l);
        Poly acc(1);
        for (std::size_t i = 1; i < mult.size(); ++i) {
          if (mult[i] == 0) continue;
          Poly t;
          for (const auto& mu : part::of_weight(mult[i])) t += elem(Basis::M, part::scaled(mu, static_cast<int>(i)));
          acc = acc * t;
        }
        return acc;
      }
    }
    throw std::logic_error("unknown basis");
  }

  template <class F>
  Poly product(const Partition& l, F&& gen) {
    Poly acc(1);
    for (int x : l) acc = acc * gen(x);
    return acc;
  }

  const Mat& m_inverse(int d) {
    if (auto it = minv_.find(d); it != minv_.end()) return it->second;
    const auto& ps = part::of_weight(d);
    Mat a(ps.size(), std::vector<Rat>(ps.size()));
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = 0; j < ps.size(); ++j) a[i][j] = Rat(count_fillings(ps[i], ps[j], Fill::Any));
    return minv_.emplace(d, invert(a)).first->second;
  }

  const std::pair<Mat, Mat>& weight_data(Basis b, int d) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto key = std::make_pair(b, d);
    if (auto it = mats_.find(key); it != mats_.end()) return it->second;
    const auto& ps = part::of_weight(d);
    std::map<Partition, std::size_t> pos;
    for (std::size_t j = 0; j < ps.size(); ++j) pos[ps[j]] = j;
    Mat a(ps.size(), std::vector<Rat>(ps.size(), Rat(0)));
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (const auto& [m, c] : elem(b, ps[i]).terms()) a[i][pos.at(monomial_partition(m, 'h'))] = c;
    Mat inv = invert(a);
    return mats_.emplace(key, std::make_pair(std::move(a), std::move(inv))).first->second;
  }

  std::recursive_mutex mu_;
  std::map<std::pair<Basis, Partition>, Poly> elem_;
  std::map<std::pair<Basis, int>, std::pair<Mat, Mat>> mats_;
  std::map<int, Mat> minv_;
  std::map<int, Poly> x_, iota_;
};

SymFn from_h_coeffs(const std::map<Partition, Rat>& h, Basis target) {
  SymFn out(target);
  if (target == Basis::H) {
    for (const auto& [l, c] : h) out.add(l, c);
    return out;
  }
  std::map<int, std::vector<std::pair<Partition, Rat>>> by_weight;
  for (const auto& [l, c] : h) by_weight[part::weight(l)].emplace_back(l, c);
  for (const auto& [d, terms] : by_weight) {
    const auto& ps = part::of_weight(d);
    const Mat& inv = Tables::get().from_h(target, d);
    std::map<Partition, std::size_t> pos;
    for (std::size_t j = 0; j < ps.size(); ++j) pos[ps[j]] = j;
    for (const auto& [l, c] : terms) {
      const auto& row = inv[pos.at(l)];
      for (std::size_t j = 0; j < ps.size(); ++j)
        if (row[j] != 0) out.add(ps[j], c * row[j]);
    }
  }
  return out;
}

std::map<Partition, Rat> h_coeffs(const Poly& p) {
  std::map<Partition, Rat> out;
  for (const auto& [m, c] : p.terms()) out[monomial_partition(m, 'h')] += c;
  return out;
}

}  // namespace

Poly to_h_poly(const SymFn& f) {
  Poly acc;
  for (const auto& [l, c] : f.terms()) acc += Tables::get().elem(f.basis(), l) * c;
  return acc;
}

SymFn from_h_poly(const Poly& p) {
  SymFn f(Basis::H);
  for (const auto& [m, c] : p.terms()) f.add(monomial_partition(m, 'h'), c);
  return f;
}

SymFn convert(const SymFn& f, Basis target) {
  if (f.basis() == target) return f;
  check_cap(f.max_weight(), "convert");
  SymFn out = from_h_coeffs(h_coeffs(to_h_poly(f)), target);
  if (target != Basis::P && !out.is_integral() && (f.is_integral() || f.basis() == Basis::P)) {
    for (const auto& [l, c] : out.terms())
      if (c.get_den() != 1)
        throw IntegralityError("coefficient " + to_string(c) + " of " + basis_name(target) + part::to_string(l) +
                               " is not an integer");
  }
  return out;
}

bool equal(const SymFn& a, const SymFn& b) { return convert(a, Basis::H) == convert(b, Basis::H); }

SymFn multiply(const SymFn& f, const SymFn& g, std::optional<Basis> out) {
  check_cap(f.max_weight() + g.max_weight(), "multiply");
  return convert(from_h_poly(to_h_poly(f) * to_h_poly(g)), out.value_or(f.basis()));
}

Rat hall_inner(const SymFn& f, const SymFn& g) {
  SymFn a = convert(f, Basis::H), b = convert(g, Basis::M);
  Rat acc = 0;
  for (const auto& [l, c] : a.terms()) acc += c * b.coeff(l);
  return acc;
}

std::vector<std::vector<Rat>> transition_matrix(Basis from, Basis to, int d) {
  check_cap(d, "transition_matrix");
  const auto& ps = part::of_weight(d);
  std::vector<std::vector<Rat>> out;
  for (const auto& l : ps) {
    SymFn c = convert(SymFn::of(from, l), to);
    std::vector<Rat> row;
    for (const auto& mu : ps) row.push_back(c.coeff(mu));
    out.push_back(std::move(row));
  }
  return out;
}

Poly expand_in_variables(const SymFn& f, int N) {
  if (N < 1) throw std::invalid_argument("need at least one variable");
  SymFn m = convert(f, Basis::M);
  Poly acc;
  for (const auto& [l, c] : m.terms()) {
    if (static_cast<int>(l.size()) > N) continue;
    std::vector<int> v(l.begin(), l.end());
    v.resize(static_cast<std::size_t>(N), 0);
    std::sort(v.begin(), v.end());
    do {
      std::vector<VarExp> fs;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) fs.emplace_back(var::make('x', static_cast<std::uint32_t>(i + 1)), static_cast<std::uint32_t>(v[i]));
      acc.add_term(Monomial::from_factors(fs), c);
    } while (std::next_permutation(v.begin(), v.end()));
  }
  return acc;
}

SymFn from_variables(const Poly& p) {
  SymFn out(Basis::M);
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e;
    bool dominant = true;
    for (const auto& [v, k] : m.factors()) {
      auto i = var::index(v);
      if (i != e.size() + 1) {
        dominant = false;
        break;
      }
      e.push_back(static_cast<int>(k));
    }
    if (!dominant || !std::is_sorted(e.begin(), e.end(), std::greater<>())) continue;
    out.add(e, c);
  }
  return out;
}

SymFn schur(const Partition& l) {
  check_cap(part::weight(l), "schur");
  return from_h_poly(Tables::get().elem(Basis::S, l));
}

SymFn skew_schur(const Partition& outer, const Partition& inner) {
  check_cap(part::weight(outer), "skew_schur");
  if (inner.size() > outer.size()) return SymFn(Basis::H);
  for (std::size_t i = 0; i < inner.size(); ++i)
    if (inner[i] > outer[i]) return SymFn(Basis::H);
  std::size_t n = outer.size();
  std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int lj = j < inner.size() ? inner[j] : 0;
      int k = outer[i] - lj - static_cast<int>(i) + static_cast<int>(j);
      if (k >= 0) a[i][j] = hpoly(k);
    }
  return from_h_poly(det_poly(a));
}

Poly det_poly(const std::vector<std::vector<Poly>>& a) {
  std::size_t n = a.size();
  if (n == 0) return Poly(1);
  if (n > 20) throw std::invalid_argument("determinant too large");
  std::unordered_map<std::uint32_t, Poly> memo;
  std::function<Poly(std::size_t, std::uint32_t)> rec = [&](std::size_t row, std::uint32_t used) -> Poly {
    if (row == n) return Poly(1);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    Poly acc;
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (used & (1u << j)) continue;
      if (!a[row][j].is_zero()) {
        Poly minor = rec(row + 1, used | (1u << j));
        if (!minor.is_zero()) acc += (sign > 0 ? a[row][j] : -a[row][j]) * minor;
      }
      sign = -sign;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return rec(0, 0);
}

// ----------------------------------------------------------------- tensors

void SymTensor::add(const Partition& a, const Partition& b, const Rat& c) {
  if (c == 0) return;
  auto key = std::make_pair(a, b);
  auto [it, fresh] = terms.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

SymTensor SymTensor::convert(Basis l, Basis r) const {
  SymTensor out{l, r, {}};
  for (const auto& [k, c] : terms) {
    SymFn a = wittlab::convert(SymFn::of(left, k.first), l);
    SymFn b = wittlab::convert(SymFn::of(right, k.second), r);
    for (const auto& [la, ca] : a.terms())
      for (const auto& [lb, cb] : b.terms()) out.add(la, lb, c * ca * cb);
  }
  return out;
}

std::string SymTensor::to_string() const {
  if (terms.empty()) return "0";
  std::vector<std::pair<std::pair<Partition, Partition>, Rat>> v(terms.begin(), terms.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    if (x.first.first != y.first.first) {
      int wx = part::weight(x.first.first), wy = part::weight(y.first.first);
      if (wx != wy) return wx < wy;
      return x.first.first > y.first.first;
    }
    return x.first.second > y.first.second;
  });
  auto side = [](Basis b, const Partition& l) { return l.empty() ? std::string("1") : basis_name(b) + part::to_string(l); };
  std::string s;
  for (const auto& [k, c] : v) append_term(s, c, side(left, k.first) + "(x)" + side(right, k.second));
  return s;
}

nlohmann::json SymTensor::to_json() const {
  nlohmann::json t = nlohmann::json::array();
  for (const auto& [k, c] : terms) t.push_back({{"left", k.first}, {"right", k.second}, {"coeff", wittlab::to_string(c)}});
  return {{"left_basis", basis_name(left)}, {"right_basis", basis_name(right)}, {"terms", t}};
}

namespace {

VarId gv(int i) { return var::make('g', static_cast<std::uint32_t>(i)); }

Poly to_right(const Poly& p) {
  return p.map_vars([](VarId v) { return gv(static_cast<int>(var::index(v))); });
}

SymTensor tensor_from_poly(const Poly& p) {
  SymTensor t;
  for (const auto& [m, c] : p.terms()) {
    Partition a, b;
    for (const auto& [v, e] : m.factors())
      for (std::uint32_t k = 0; k < e; ++k) (var::letter(v) == 'h' ? a : b).push_back(static_cast<int>(var::index(v)));
    t.add(part::make(a), part::make(b), c);
  }
  return t;
}

}  // namespace

SymTensor comul_sum(const SymFn& f) {
  check_cap(f.max_weight(), "comul_sum");
  Poly p = to_h_poly(f).substitute([](VarId v) -> std::optional<Poly> {
    int n = static_cast<int>(var::index(v));
    Poly acc;
    for (int i = 0; i <= n; ++i) acc += hpoly(i) * to_right(hpoly(n - i));
    return acc;
  });
  return tensor_from_poly(p);
}

SymTensor comul_prod(const SymFn& f) {
  check_cap(f.max_weight(), "comul_prod");
  Poly p = to_h_poly(f).substitute([](VarId v) -> std::optional<Poly> {
    int n = static_cast<int>(var::index(v));
    Poly acc;
    for (const auto& l : part::of_weight(n)) acc += h_monomial(l) * to_right(Tables::get().elem(Basis::M, l));
    return acc;
  });
  return tensor_from_poly(p);
}

SymFn antipode(const SymFn& f) {
  check_cap(f.max_weight(), "antipode");
  Poly p = to_h_poly(f).substitute([](VarId v) -> std::optional<Poly> {
    return Tables::get().antipode_gen(static_cast<int>(var::index(v)));
  });
  return convert(from_h_poly(p), f.basis());
}

Rat counit_sum(const SymFn& f) { return convert(f, Basis::H).coeff({}); }

Rat counit_prod(const SymFn& f) {
  Rat acc = 0;
  for (const auto& [l, c] : convert(f, Basis::H).terms()) acc += c;
  return acc;
}

SymFn multiply_out(const SymTensor& t) {
  Poly acc;
  for (const auto& [k, c] : t.terms)
    acc += Tables::get().elem(t.left, k.first) * Tables::get().elem(t.right, k.second) * c;
  return from_h_poly(acc);
}

SymFn apply_counit_left(const SymTensor& t, bool product) {
  SymFn out(t.right);
  for (const auto& [k, c] : t.terms) {
    SymFn a = SymFn::of(t.left, k.first);
    Rat e = product ? counit_prod(a) : counit_sum(a);
    out.add(k.second, c * e);
  }
  return out;
}

SymFn apply_counit_right(const SymTensor& t, bool product) {
  SymFn out(t.left);
  for (const auto& [k, c] : t.terms) {
    SymFn b = SymFn::of(t.right, k.second);
    Rat e = product ? counit_prod(b) : counit_sum(b);
    out.add(k.first, c * e);
  }
  return out;
}

// --------------------------------------------------------------- operators

SymFn frobenius_symm(long n, const SymFn& f) {
  if (n < 1) throw std::invalid_argument("Frobenius index must be positive");
  check_cap(static_cast<int>(n) * f.max_weight(), "frobenius_symm");
  SymFn m = convert(f, Basis::M), out(Basis::M);
  for (const auto& [l, c] : m.terms()) out.add(part::scaled(l, static_cast<int>(n)), c);
  return convert(out, f.basis());
}

SymFn verschiebung_symm(long n, const SymFn& f) {
  if (n < 1) throw std::invalid_argument("Verschiebung index must be positive");
  check_cap(f.max_weight(), "verschiebung_symm");
  Poly p = to_h_poly(f).substitute([n](VarId v) -> std::optional<Poly> {
    long r = static_cast<long>(var::index(v));
    return r % n == 0 ? hpoly(static_cast<int>(r / n)) : Poly();
  });
  return convert(from_h_poly(p), f.basis());
}

SymFn plethysm(const SymFn& f, const SymFn& g, std::optional<Basis> out) {
  check_cap(f.max_weight() * std::max(1, g.max_weight()), "plethysm");
  SymFn fp = convert(f, Basis::P), gm = convert(g, Basis::M);
  std::map<int, Poly> frob;
  auto F = [&](int n) -> const Poly& {
    auto it = frob.find(n);
    if (it == frob.end()) {
      SymFn s(Basis::M);
      for (const auto& [l, c] : gm.terms()) s.add(part::scaled(l, n), c);
      it = frob.emplace(n, to_h_poly(s)).first;
    }
    return it->second;
  };
  Poly acc;
  for (const auto& [l, c] : fp.terms()) {
    Poly t(c);
    for (int x : l) t = t * F(x);
    acc += t;
  }
  SymFn h = from_h_poly(acc);
  if (f.is_integral() && g.is_integral() && !h.is_integral())
    throw IntegralityError("plethysm of integral functions produced " + h.to_string());
  return convert(h, out.value_or(f.basis()));
}

// ------------------------------------------------------ lambda-ring formulas

std::string lambda_var_name(VarId v) {
  return "lambda^" + std::to_string(var::index(v)) + (var::letter(v) == 'a' ? "(x)" : "(y)");
}

namespace {
Poly lam(char letter, int i) { return i == 0 ? Poly(1) : Poly::var(var::make(letter, static_cast<std::uint32_t>(i))); }
}  // namespace

Poly lambda_sum_formula(int n) {
  Poly acc;
  for (int i = 0; i <= n; ++i) acc += lam('a', i) * lam('b', n - i);
  return acc;
}

Poly lambda_product_formula(int n) {
  SymTensor t = comul_prod(SymFn::of(Basis::E, Partition{n})).convert(Basis::E, Basis::E);
  Poly acc;
  for (const auto& [k, c] : t.terms) {
    Poly m(c);
    for (int x : k.first) m = m * lam('a', x);
    for (int x : k.second) m = m * lam('b', x);
    acc += m;
  }
  return acc;
}

Poly lambda_iterate_formula(int m, int n) {
  SymFn r = plethysm(SymFn::of(Basis::E, Partition{m}),
                     SymFn::of(Basis::E, Partition{n}), Basis::E);
  Poly acc;
  for (const auto& [l, c] : r.terms()) {
    Poly t(c);
    for (int x : l) t = t * lam('a', x);
    acc += t;
  }
  return acc;
}

std::string newton_var_name(VarId v) {
  return (var::letter(v) == 'a' ? "lambda" : "psi") + std::to_string(var::index(v));
}

Poly newton_determinant(int n, NewtonDirection dir) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  check_cap(n, "newton_determinant");
  auto N = static_cast<std::size_t>(n);
  std::vector<std::vector<Poly>> a(N, std::vector<Poly>(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      int k = static_cast<int>(i) - static_cast<int>(j) + 1;
      if (dir == NewtonDirection::PsiFromLambda) {
        if (j == i + 1) a[i][j] = Poly(1);
        if (j <= i) a[i][j] = j == 0 ? lam('a', k) * Rat(k) : lam('a', k);
      } else {
        if (j == i + 1) a[i][j] = Poly(static_cast<long>(j));
        if (j <= i) a[i][j] = lam('q', k);
      }
    }
  return det_poly(a);
}

// -------------------------------------------------------------- Hirzebruch

SymFn hirzebruch_sequence(const std::vector<Rat>& q, int n, HirzebruchMode mode) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  check_cap(n, "hirzebruch_sequence");
  if (static_cast<int>(q.size()) <= n) throw std::invalid_argument("characteristic series too short");
  if (mode == HirzebruchMode::Multiplicative && q[0] != 1)
    throw std::invalid_argument("multiplicative sequence needs Q(0) = 1");
  if (mode == HirzebruchMode::Additive && q[0] != 0) throw std::invalid_argument("additive sequence needs Q(0) = 0");
  SymFn m(Basis::M);
  if (mode == HirzebruchMode::Additive) {
    m.add({n}, q[static_cast<std::size_t>(n)]);
  } else {
    for (const auto& l : part::of_weight(n)) {
      Rat c = 1;
      for (int x : l) c *= q[static_cast<std::size_t>(x)];
      m.add(l, c);
    }
  }
  return convert(m, Basis::E);
}

std::vector<Rat> todd_coefficients(int n) {
  // z / (1 - e^{-z}) = 1 / sum_k (-1)^k z^k / (k+1)!
  std::vector<Rat> d(static_cast<std::size_t>(n) + 1), q(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    d[static_cast<std::size_t>(k)] = Rat(k % 2 ? -1 : 1, 1) / Rat(factorial(static_cast<unsigned long>(k + 1)));
  q[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rat s = 0;
    for (int j = 1; j <= k; ++j) s += d[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(k - j)];
    q[static_cast<std::size_t>(k)] = -s;
  }
  return q;
}

// ---------------------------------------------------------- Witt, r bases

SymFn witt_symm(int d) {
  check_cap(d, "witt_symm");
  return from_h_poly(Tables::get().x_gen(d));
}

SymFn r_symm(const Partition& l) {
  check_cap(part::weight(l), "r_symm");
  return from_h_poly(Tables::get().elem(Basis::R, l));
}

SchurSign schur_sign_check(int n) {
  SymFn x = convert(SymFn::of(Basis::X, {n}), Basis::S);
  if (n >= 2) x = -x;
  SchurSign r{x, !x.is_zero()};
  for (const auto& [l, c] : x.terms())
    if (c < 0) r.positive = false;
  return r;
}

// ------------------------------------------------------------------- Klein

Klein parse_klein(const std::string& s) {
  if (s == "id") return Klein::Id;
  if (s == "alt") return Klein::Alt;
  if (s == "inv") return Klein::Inv;
  if (s == "altinv") return Klein::AltInv;
  throw std::invalid_argument("unknown automorphism '" + s + "'");
}

std::string klein_name(Klein k) {
  switch (k) {
    case Klein::Id: return "id";
    case Klein::Alt: return "alt";
    case Klein::Inv: return "inv";
    case Klein::AltInv: return "altinv";
  }
  return "?";
}

SymFn klein_automorphism(Klein k, const SymFn& f) {
  if (k == Klein::Id) return f;
  check_cap(f.max_weight(), "klein_automorphism");
  Poly p = to_h_poly(f).substitute([k](VarId v) -> std::optional<Poly> {
    int n = static_cast<int>(var::index(v));
    Rat sign = n % 2 ? -1 : 1;
    if (k == Klein::Alt) return hpoly(n) * sign;
    const Poly& e = Tables::get().elem(Basis::E, Partition{n});
    return k == Klein::Inv ? e * sign : e;
  });
  return convert(from_h_poly(p), f.basis());
}

Klein klein_compose(Klein a, Klein b) { return static_cast<Klein>(static_cast<int>(a) ^ static_cast<int>(b)); }

// ------------------------------------------------------------- Gale-Ryser

std::optional<Matrix01> search_01_matrix(const std::vector<int>& rows, const std::vector<int>& cols) {
  std::size_t R = rows.size(), C = cols.size();
  Matrix01 m(R, std::vector<int>(C, 0));
  std::vector<int> rem(cols.begin(), cols.end());
  std::function<bool(std::size_t)> row_step;
  std::function<bool(std::size_t, std::size_t, int)> place = [&](std::size_t i, std::size_t j, int left) -> bool {
    if (left == 0) return row_step(i + 1);
    if (static_cast<int>(C - j) < left) return false;
    if (rem[j] > 0) {
      m[i][j] = 1;
      --rem[j];
      if (place(i, j + 1, left - 1)) return true;
      ++rem[j];
      m[i][j] = 0;
    }
    return place(i, j + 1, left);
  };
  row_step = [&](std::size_t i) -> bool {
    int rows_left = static_cast<int>(R - i);
    for (int r : rem)
      if (r > rows_left) return false;
    if (i == R) return std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; });
    return place(i, 0, rows[i]);
  };
  for (int r : rows)
    if (r < 0 || r > static_cast<int>(C)) return std::nullopt;
  if (row_step(0)) return m;
  return std::nullopt;
}

GaleRyser gale_ryser(const std::vector<int>& alpha, const std::vector<int>& beta, bool do_search) {
  int wa = std::accumulate(alpha.begin(), alpha.end(), 0), wb = std::accumulate(beta.begin(), beta.end(), 0);
  if (wa != wb) throw MismatchError("row and column sums have different totals");
  GaleRyser g;
  g.verdict = part::majorizes(part::conjugate(part::make(alpha)), beta);
  if (do_search && wa <= 12) {
    g.witness = search_01_matrix(alpha, beta);
    g.search = g.witness.has_value();
  }
  return g;
}

}  // namespace wittlab
