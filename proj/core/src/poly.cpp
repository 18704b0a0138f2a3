#include "wittlab/poly.hpp"

#include <algorithm>

namespace wittlab {

std::string var::name(VarId v) {
  std::string s(1, letter(v));
  if (index(v) != kNoIndex) s += std::to_string(index(v));
  return s;
}

Monomial Monomial::of(VarId v, std::uint32_t e) {
  Monomial m;
  if (e > 0) m.f_.emplace_back(v, e);
  return m;
}

Monomial Monomial::from_factors(std::vector<VarExp> factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!m.f_.empty() && m.f_.back().first == v)
      m.f_.back().second += e;
    else
      m.f_.emplace_back(v, e);
  }
  return m;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& f : f_) d += f.second;
  return d;
}

std::uint32_t Monomial::exponent(VarId v) const {
  for (const auto& f : f_)
    if (f.first == v) return f.second;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  auto a = f_.begin(), ae = f_.end();
  auto b = o.f_.begin(), be = o.f_.end();
  while (a != ae && b != be) {
    if (a->first < b->first) {
      r.f_.push_back(*a++);
    } else if (b->first < a->first) {
      r.f_.push_back(*b++);
    } else {
      r.f_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  r.f_.insert(r.f_.end(), a, ae);
  r.f_.insert(r.f_.end(), b, be);
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& [v, e] : f_) {
    h ^= (std::size_t(v) * 0x100000001b3ULL + e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool Monomial::grlex_before(const Monomial& o) const {
  auto da = degree(), db = o.degree();
  if (da != db) return da > db;
  std::size_t n = std::min(f_.size(), o.f_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (f_[i].first != o.f_[i].first) return f_[i].first < o.f_[i].first;
    if (f_[i].second != o.f_[i].second) return f_[i].second > o.f_[i].second;
  }
  return f_.size() > o.f_.size();
}

Poly::Poly(const Rat& c) {
  if (c != 0) t_.emplace(Monomial(), c);
}

Poly Poly::var(VarId v, std::uint32_t e) { return term(Monomial::of(v, e), 1); }

Poly Poly::term(const Monomial& m, const Rat& c) {
  Poly p;
  if (c != 0) p.t_.emplace(m, c);
  return p;
}

Rat Poly::coeff(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Rat(0) : it->second;
}

bool Poly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one());
}

std::uint32_t Poly::degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : t_) d = std::max(d, m.degree());
  return d;
}

std::vector<VarId> Poly::variables() const {
  std::vector<VarId> vs;
  for (const auto& [m, c] : t_)
    for (const auto& f : m.factors()) vs.push_back(f.first);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = t_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [m, v] : t_) v *= c;
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.t_.empty() || b.t_.empty()) return Poly();
  const Poly& big = a.t_.size() >= b.t_.size() ? a : b;
  const Poly& small = a.t_.size() >= b.t_.size() ? b : a;
  if (small.t_.size() == 1 && small.t_.begin()->first.is_one()) return big * small.t_.begin()->second;
  Poly r;
  r.t_.reserve(a.t_.size() * b.t_.size() / 2 + 1);
  Rat prod;
  for (const auto& [ma, ca] : small.t_) {
    for (const auto& [mb, cb] : big.t_) {
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      auto [it, inserted] = r.t_.try_emplace(ma * mb, prod);
      if (!inserted) it->second += prod;
    }
  }
  for (auto it = r.t_.begin(); it != r.t_.end();) {
    if (it->second == 0)
      it = r.t_.erase(it);
    else
      ++it;
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

Poly Poly::pow(unsigned long e) const {
  Poly result(1);
  if (e == 0) return result;
  Poly base = *this;
  bool first = true;
  while (true) {
    if (e & 1) {
      if (first) {
        result = base;
        first = false;
      } else {
        result = result * base;
      }
    }
    e >>= 1;
    if (e == 0) break;
    base = base * base;
  }
  return result;
}

std::optional<std::pair<Monomial, Rat>> Poly::non_integral_term() const {
  for (const auto& [m, c] : sorted_terms())
    if (c.get_den() != 1) return std::make_pair(m, c);
  return std::nullopt;
}

bool Poly::divisible_by(const Int& d) const {
  for (const auto& [m, c] : t_) {
    if (c.get_den() != 1) return false;
    if (!mpz_divisible_p(c.get_num_mpz_t(), d.get_mpz_t())) return false;
  }
  return true;
}

Poly Poly::map_vars(const std::function<VarId(VarId)>& f) const {
  Poly r;
  for (const auto& [m, c] : t_) {
    std::vector<VarExp> fs;
    for (const auto& [v, e] : m.factors()) fs.emplace_back(f(v), e);
    r.add_term(Monomial::from_factors(std::move(fs)), c);
  }
  return r;
}

Poly Poly::map_coeffs(const std::function<Rat(const Rat&)>& f) const {
  Poly r;
  for (const auto& [m, c] : t_) r.add_term(m, f(c));
  return r;
}

Poly Poly::substitute(const std::function<std::optional<Poly>(VarId)>& f) const {
  std::unordered_map<VarId, std::optional<Poly>> images;
  auto value = [&](VarId v) -> Poly {
    auto it = images.find(v);
    if (it == images.end()) it = images.emplace(v, f(v)).first;
    return it->second ? *it->second : Poly::var(v);
  };
  return evaluate<Poly>(*this, value, [](const Rat& c) { return Poly(c); }, Poly());
}

std::vector<std::pair<Monomial, Rat>> Poly::sorted_terms() const {
  std::vector<std::pair<Monomial, Rat>> v(t_.begin(), t_.end());
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first.grlex_before(b.first); });
  return v;
}

std::string monomial_to_string(const Monomial& m, const NameFn& name) {
  std::string s;
  for (const auto& [v, e] : m.factors()) {
    if (!s.empty()) s += "*";
    s += name(v);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string Poly::to_string(const NameFn& name) const {
  if (t_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : sorted_terms()) {
    Rat a = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += wittlab::to_string(a);
    } else {
      if (a != 1) out += wittlab::to_string(a) + "*";
      out += monomial_to_string(m, name);
    }
  }
  return out;
}

}  // namespace wittlab
