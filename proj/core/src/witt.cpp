#include "wittlab/witt.hpp"

#include <map>
#include <mutex>

namespace wittlab {

namespace {

void require_same(const WittVec& a, const WittVec& b) {
  if (*a.ring() != *b.ring()) throw MismatchError("Witt vectors over different rings");
  if (a.is_padic() != b.is_padic() || a.nest() != b.nest() || (a.is_padic() && a.p() != b.p()))
    throw MismatchError("Witt vectors with different truncations");
}

Nest chain_nest(long p, std::size_t len) { return Nest::ppow(p, static_cast<int>(len)); }

long ppow_exponent(long n, long p) {
  long k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) throw std::invalid_argument("p-adic operators need a power of p");
  return k;
}

}  // namespace

WittVec::WittVec(RingSpecPtr ring, Nest nest, std::vector<RingElem> coords)
    : ring_(std::move(ring)), nest_(std::move(nest)), coords_(std::move(coords)) {
  if (coords_.size() != nest_.size()) throw MismatchError("one coordinate per nest index required");
  for (const auto& c : coords_)
    if (*c.spec() != *ring_) throw MismatchError("coordinate outside the declared ring");
}

WittVec WittVec::padic(RingSpecPtr ring, long p, std::vector<RingElem> coords) {
  if (coords.empty()) throw std::invalid_argument("p-adic length must be positive");
  Nest nest = chain_nest(p, coords.size());
  WittVec v(std::move(ring), std::move(nest), std::move(coords));
  v.padic_ = true;
  v.p_ = p;
  return v;
}

WittVec WittVec::zero(const RingSpecPtr& ring, const Nest& nest) {
  return WittVec(ring, nest, std::vector<RingElem>(nest.size(), RingElem::zero(ring)));
}

WittVec WittVec::one(const RingSpecPtr& ring, const Nest& nest) {
  WittVec v = zero(ring, nest);
  v.coords_[0] = RingElem::one(ring);
  return v;
}

WittVec WittVec::padic_zero(const RingSpecPtr& ring, long p, int len) {
  return padic(ring, p, std::vector<RingElem>(static_cast<std::size_t>(len), RingElem::zero(ring)));
}

WittVec WittVec::padic_one(const RingSpecPtr& ring, long p, int len) {
  WittVec v = padic_zero(ring, p, len);
  v.coords_[0] = RingElem::one(ring);
  return v;
}

WittVec WittVec::from_ints(const RingSpecPtr& ring, const Nest& nest, const std::vector<Int>& xs) {
  std::vector<RingElem> c;
  for (const auto& x : xs) c.push_back(RingElem::from_int(ring, x));
  return WittVec(ring, nest, std::move(c));
}

std::vector<long> WittVec::labels() const {
  if (!padic_) return nest_.indices();
  std::vector<long> l;
  for (std::size_t i = 0; i < coords_.size(); ++i) l.push_back(static_cast<long>(i));
  return l;
}

const RingElem& WittVec::operator[](long label) const {
  if (padic_) return coords_.at(static_cast<std::size_t>(label));
  long pos = nest_.position(label);
  if (pos < 0) throw std::out_of_range("index " + std::to_string(label) + " not in nest");
  return coords_[static_cast<std::size_t>(pos)];
}

RingElem& WittVec::at(long label) { return const_cast<RingElem&>(static_cast<const WittVec&>(*this)[label]); }

bool WittVec::operator==(const WittVec& o) const {
  return padic_ == o.padic_ && p_ == o.p_ && nest_ == o.nest_ && *ring_ == *o.ring_ && coords_ == o.coords_;
}

WittVec WittVec::as_big() const {
  WittVec v = *this;
  v.padic_ = false;
  v.p_ = 0;
  return v;
}

WittVec WittVec::as_padic(long p) const {
  if (padic_) return *this;
  Nest chain = chain_nest(p, nest_.size());
  if (chain != nest_) throw MismatchError("nest " + nest_.to_string() + " is not a " + std::to_string(p) + "-power chain");
  return padic(ring_, p, coords_);
}

WittVec WittVec::restrict_to(const Nest& smaller) const {
  if (padic_) {
    if (smaller.size() > coords_.size()) throw MismatchError("cannot restrict to a longer vector");
    return padic(ring_, p_, std::vector<RingElem>(coords_.begin(), coords_.begin() + static_cast<long>(smaller.size())));
  }
  std::vector<RingElem> c;
  for (long n : smaller.indices()) c.push_back((*this)[n]);
  return WittVec(ring_, smaller, std::move(c));
}

WittVec WittVec::map(const RingSpecPtr& target, const std::function<RingElem(const RingElem&)>& f) const {
  WittVec v = *this;
  v.ring_ = target;
  for (auto& c : v.coords_) c = f(c);
  return v;
}

std::string WittVec::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? ", " : "") + coords_[i].to_string();
  return s + ")";
}

nlohmann::json WittVec::to_json() const {
  nlohmann::json j;
  j["ring"] = ring_->to_json();
  j["nest"] = nest_.indices();
  if (padic_) j["p"] = p_;
  nlohmann::json coords = nlohmann::json::object();
  auto labs = labels();
  for (std::size_t i = 0; i < coords_.size(); ++i) coords[std::to_string(labs[i])] = coords_[i].to_string();
  j["coords"] = coords;
  return j;
}

WittVec WittVec::from_json(const nlohmann::json& j) {
  auto ring = RingSpec::from_json(j.at("ring"));
  Nest nest(j.at("nest").get<std::vector<long>>());
  const auto& cj = j.at("coords");
  std::vector<RingElem> coords;
  if (j.contains("p")) {
    long p = j.at("p").get<long>();
    for (std::size_t i = 0; i < nest.size(); ++i) coords.push_back(RingElem::from_json(ring, cj.at(std::to_string(i))));
    return padic(ring, p, std::move(coords));
  }
  for (long n : nest.indices()) coords.push_back(RingElem::from_json(ring, cj.at(std::to_string(n))));
  return WittVec(ring, nest, std::move(coords));
}

const RingElem& GhostVec::operator[](long label) const {
  if (padic) return values.at(static_cast<std::size_t>(label));
  long pos = nest.position(label);
  if (pos < 0) throw std::out_of_range("index " + std::to_string(label) + " not in nest");
  return values[static_cast<std::size_t>(pos)];
}

std::string GhostVec::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + values[i].to_string();
  return s + ")";
}

// ------------------------------------------------------------- ring ops

WittVec apply_family(const UnivFamily& fam, const WittVec& a, const WittVec* b, const RingSpecPtr& ring,
                     const Nest& out_nest, bool padic, long p) {
  auto lookup = [&](VarId v) -> RingElem {
    long label = static_cast<long>(var::index(v));
    char letter = var::letter(v);
    if (letter == 'X') return a[label];
    if (letter == 'Y' && b) return (*b)[label];
    throw std::logic_error("unexpected variable in universal family");
  };
  std::vector<RingElem> out;
  out.reserve(fam.polys.size());
  for (const auto& poly : fam.polys) out.push_back(eval_in(ring, poly, lookup));
  if (padic) return WittVec::padic(ring, p, std::move(out));
  return WittVec(ring, out_nest, std::move(out));
}

namespace {

UnivFamilyPtr family_for(const StructKind& k, const WittVec& a) {
  if (a.is_padic()) return structure_polys(k, Flavor::p_adic(a.p()), chain_nest(a.p(), a.size()));
  return structure_polys(k, Flavor::big(), a.nest());
}

WittVec binary(StructKind::Tag tag, const WittVec& a, const WittVec& b) {
  require_same(a, b);
  auto fam = family_for({tag, 0}, a);
  return apply_family(*fam, a, &b, a.ring(), a.nest(), a.is_padic(), a.p());
}

}  // namespace

WittVec witt_add(const WittVec& a, const WittVec& b) { return binary(StructKind::Add, a, b); }
WittVec witt_mul(const WittVec& a, const WittVec& b) { return binary(StructKind::Mul, a, b); }

WittVec witt_neg(const WittVec& a) {
  auto fam = family_for({StructKind::Neg, 0}, a);
  return apply_family(*fam, a, nullptr, a.ring(), a.nest(), a.is_padic(), a.p());
}

WittVec witt_sub(const WittVec& a, const WittVec& b) { return witt_add(a, witt_neg(b)); }

GhostVec ghost(const WittVec& a) {
  GhostVec g{a.ring(), a.nest(), a.is_padic(), a.p(), {}};
  if (a.is_padic()) {
    for (std::size_t n = 0; n < a.size(); ++n) {
      RingElem acc = RingElem::zero(a.ring());
      Int pj = 1;
      for (std::size_t j = 0; j <= n; ++j, pj *= a.p())
        acc += a.coords()[j].pow(ipow(a.p(), n - j).get_ui()).scaled(pj);
      g.values.push_back(acc);
    }
    return g;
  }
  for (long n : a.nest().indices()) {
    RingElem acc = RingElem::zero(a.ring());
    for (long d : divisors(n)) acc += a[d].pow(static_cast<unsigned long>(n / d)).scaled(d);
    g.values.push_back(acc);
  }
  return g;
}

namespace {

RingElem divide_index(const RingElem& x, const Int& n, long label) {
  const auto& ring = x.spec();
  if (!ring->torsion_free() && !ring->is_unit(n))
    throw IntegralityError("index " + std::to_string(label) + ": " + n.get_str() + " is not invertible in " +
                           ring->to_string());
  if (!x.divisible_by(n))
    throw IntegralityError("index " + std::to_string(label) + ": coordinate " + x.to_string() + "/" + n.get_str() +
                           " is not in " + ring->to_string());
  return x.exact_div(n);
}

}  // namespace

WittVec from_ghost(const GhostVec& g) {
  std::vector<RingElem> x;
  if (g.padic) {
    for (std::size_t n = 0; n < g.values.size(); ++n) {
      RingElem rest = g.values[n];
      Int pj = 1;
      for (std::size_t j = 0; j < n; ++j, pj *= g.p) rest -= x[j].pow(ipow(g.p, n - j).get_ui()).scaled(pj);
      x.push_back(divide_index(rest, pj, static_cast<long>(n)));
    }
    return WittVec::padic(g.ring, g.p, std::move(x));
  }
  const auto& idx = g.nest.indices();
  for (std::size_t k = 0; k < idx.size(); ++k) {
    long n = idx[k];
    RingElem rest = g.values[k];
    for (long d : divisors(n)) {
      if (d == n) break;
      rest -= x[static_cast<std::size_t>(g.nest.position(d))].pow(static_cast<unsigned long>(n / d)).scaled(d);
    }
    x.push_back(divide_index(rest, n, n));
  }
  return WittVec(g.ring, g.nest, std::move(x));
}

WittVec teichmuller(const RingElem& x, const Nest& nest) {
  WittVec v = WittVec::zero(x.spec(), nest);
  v.at(1) = x;
  return v;
}

WittVec teichmuller_padic(const RingElem& x, long p, int len) {
  WittVec v = WittVec::padic_zero(x.spec(), p, len);
  v.at(0) = x;
  return v;
}

// -------------------------------------------------------------- operators

WittVec verschiebung(long n, const WittVec& a) {
  if (n < 1) throw std::invalid_argument("Verschiebung index must be positive");
  WittVec out = a;
  auto z = RingElem::zero(a.ring());
  if (a.is_padic()) {
    auto k = static_cast<std::size_t>(ppow_exponent(n, a.p()));
    for (std::size_t i = 0; i < a.size(); ++i) out.at(static_cast<long>(i)) = i >= k ? a.coords()[i - k] : z;
    return out;
  }
  for (long m : a.nest().indices()) out.at(m) = (m % n == 0) ? a[m / n] : z;
  return out;
}

WittVec frobenius_universal(long n, const WittVec& a) {
  if (n < 1) throw std::invalid_argument("Frobenius index must be positive");
  if (n == 1) return a;
  StructKind k{StructKind::Frobenius, n};
  if (a.is_padic()) {
    long e = ppow_exponent(n, a.p());
    long out_len = static_cast<long>(a.size()) - e;
    if (out_len < 1)
      throw CapError("f_" + std::to_string(n) + " needs a p-adic length above " + std::to_string(e));
    auto fam = structure_polys(k, Flavor::p_adic(a.p()), chain_nest(a.p(), static_cast<std::size_t>(out_len)));
    return apply_family(*fam, a, nullptr, a.ring(), chain_nest(a.p(), static_cast<std::size_t>(out_len)), true,
                        a.p());
  }
  auto out_idx = a.nest().divided(n);
  if (out_idx.empty())
    throw CapError("nest " + a.nest().to_string() + " has no multiples of " + std::to_string(n));
  Nest out(out_idx);
  auto fam = structure_polys(k, Flavor::big(), out);
  return apply_family(*fam, a, nullptr, a.ring(), out, false, 0);
}

WittVec frobenius(long n, const WittVec& a) {
  if (auto q = a.ring()->char_p(); q && n > 1) {
    long m = n, e = 0;
    while (m % *q == 0) {
      m /= *q;
      ++e;
    }
    if (m == 1) {
      auto power = static_cast<unsigned long>(n);
      return a.map(a.ring(), [&](const RingElem& x) { return x.pow(power); });
    }
  }
  return frobenius_universal(n, a);
}

WittVec homothety(const RingElem& u, const WittVec& a) {
  if (*u.spec() != *a.ring()) throw MismatchError("homothety scalar in a different ring");
  WittVec out = a;
  auto labs = a.labels();
  for (std::size_t i = 0; i < labs.size(); ++i) {
    unsigned long e = a.is_padic() ? ipow(a.p(), static_cast<unsigned long>(labs[i])).get_ui()
                                   : static_cast<unsigned long>(labs[i]);
    out.at(labs[i]) = a.coords()[i] * u.pow(e);
  }
  return out;
}

WittVec nmult(long n, const WittVec& a) {
  if (n < 1) throw std::invalid_argument("multiplier must be positive");
  auto fam = family_for({StructKind::NMult, n}, a);
  return apply_family(*fam, a, nullptr, a.ring(), a.nest(), a.is_padic(), a.p());
}

WittVec p_typify(const WittVec& a, long p) {
  if (!is_prime(p)) throw std::invalid_argument("p_typify needs a prime");
  for (long n : a.nest().indices())
    if (gcd(n, p) == 1 && !a.ring()->is_unit(n))
      throw std::invalid_argument(std::to_string(n) + " is not invertible in " + a.ring()->to_string());
  GhostVec g = ghost(a);
  if (!a.is_padic()) {
    const auto& idx = a.nest().indices();
    for (std::size_t k = 0; k < idx.size(); ++k) {
      long m = idx[k];
      while (m % p == 0) m /= p;
      if (m != 1) g.values[k] = RingElem::zero(a.ring());
    }
  }
  return from_ghost(g);
}

GhostWittVerdict is_ghost_witt(const std::vector<RingElem>& b, const FrobeniusFamily& f, long bound) {
  GhostWittVerdict v;
  const long len = static_cast<long>(b.size());
  for (long p = 2; p <= bound; ++p) {
    if (!is_prime(p)) continue;
    for (long n = 1; n * p <= bound && n * p <= len; ++n) {
      RingElem diff = f.phi(p, b[static_cast<std::size_t>(n - 1)]) - b[static_cast<std::size_t>(n * p - 1)];
      Int mod = ipow(p, static_cast<unsigned long>(valuation(n, p) + 1));
      if (!diff.divisible_by(mod)) {
        v.ok = false;
        v.p = p;
        v.n = n;
        v.residue = diff.to_string();
        return v;
      }
    }
  }
  return v;
}

DoldResult dold_test(const std::vector<Int>& b, long N) {
  if (static_cast<long>(b.size()) < N) throw std::invalid_argument("sequence shorter than N");
  DoldResult r;
  bool c_prefix = true, g_prefix = true;
  for (long n = 1; n <= N; ++n) {
    Int c = 0, s = 0;
    for (long d : divisors(n)) c += mobius(d) * b[static_cast<std::size_t>(n / d - 1)];
    for (long i = 1; i <= n; ++i) s += b[static_cast<std::size_t>(gcd(i, n) - 1)];
    bool div = mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(n)) != 0;
    bool gdiv = mpz_divisible_ui_p(s.get_mpz_t(), static_cast<unsigned long>(n)) != 0;
    r.c.push_back(c);
    r.divides.push_back(div);
    c_prefix = c_prefix && div;
    g_prefix = g_prefix && gdiv;
    if (c_prefix != g_prefix) r.gcd_form_agrees = false;
    if (!div && r.pass) {
      r.pass = false;
      r.first_failure = n;
    }
    if (c < 0) r.exact = false;
  }
  r.exact = r.exact && r.pass;
  return r;
}

WittVec artin_schreier(const WittVec& a) {
  auto q = a.ring()->char_p();
  if (!q || !a.is_padic() || *q != a.p())
    throw std::invalid_argument("Artin-Schreier operator needs p-adic vectors over a ring of characteristic p");
  return witt_sub(frobenius(a.p(), a), a);
}

Int teichmuller_lift_mod(const Int& a, long p, int k) {
  if (!is_prime(p) || k < 1) throw std::invalid_argument("need a prime p and k >= 1");
  Int mod = ipow(p, static_cast<unsigned long>(k));
  Int x;
  mpz_fdiv_r(x.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t());
  for (int i = 0; i < k; ++i) mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p), mod.get_mpz_t());
  return x;
}

namespace {

const std::vector<Poly>& chain_sum_polys(long p, int k) {
  static std::mutex mu;
  static std::map<std::pair<long, int>, std::vector<Poly>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, k);
  auto it = memo.find(key);
  if (it == memo.end()) it = memo.emplace(key, teichmuller_sum_polys_ppow(p, k)).first;
  return it->second;
}

}  // namespace

DigitSum teich_digit_sum(const Int& a, const Int& b, long p, int k) {
  const auto& rs = chain_sum_polys(p, k);
  auto fp = RingSpec::mod(p);
  RingElem ea = RingElem::from_int(fp, a), eb = RingElem::from_int(fp, b);
  DigitSum out;
  for (const auto& r : rs) {
    RingElem c = eval_in(fp, r, [&](VarId v) { return var::letter(v) == 'X' ? ea : eb; });
    out.digits.push_back(Int(c.scalar().get_num()));
  }
  Int mod = ipow(p, static_cast<unsigned long>(k)), lhs = 0, pi = 1;
  for (const auto& c : out.digits) {
    lhs += teichmuller_lift_mod(c, p, k) * pi;
    pi *= p;
  }
  Int rhs = teichmuller_lift_mod(a, p, k) + teichmuller_lift_mod(b, p, k);
  mpz_fdiv_r(lhs.get_mpz_t(), lhs.get_mpz_t(), mod.get_mpz_t());
  mpz_fdiv_r(rhs.get_mpz_t(), rhs.get_mpz_t(), mod.get_mpz_t());
  out.verified = lhs == rhs;
  return out;
}

}  // namespace wittlab
