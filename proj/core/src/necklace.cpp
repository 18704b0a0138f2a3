#include "wittlab/necklace.hpp"

#include <algorithm>
#include <set>

#include "wittlab/errors.hpp"

namespace wittlab {

// ------------------------------------------------------ necklace numbers

Int necklace_number(const Int& alpha, long n) {
  if (n < 1) throw std::invalid_argument("necklace length must be positive");
  Int s = 0;
  for (long d : divisors(n)) {
    int mu = mobius(d);
    if (!mu) continue;
    Int p;
    mpz_pow_ui(p.get_mpz_t(), alpha.get_mpz_t(), static_cast<unsigned long>(n / d));
    s += mu * p;
  }
  if (s % n != 0) throw std::logic_error("necklace sum not divisible by " + std::to_string(n));
  return s / n;
}

Poly necklace_poly(long n) {
  if (n < 1) throw std::invalid_argument("necklace length must be positive");
  Poly p;
  for (long d : divisors(n)) {
    int mu = mobius(d);
    if (mu) p += Poly::var(var::make('X'), static_cast<std::uint32_t>(n / d)) * Rat(mu, n);
  }
  return p;
}

NecklaceIdentity parse_necklace_identity(const std::string& name) {
  if (name == "product") return NecklaceIdentity::Product;
  if (name == "power") return NecklaceIdentity::Power;
  if (name == "cyclotomic") return NecklaceIdentity::Cyclotomic;
  if (name == "strehl") return NecklaceIdentity::Strehl;
  throw std::invalid_argument("unknown necklace identity: " + name);
}

std::string necklace_identity_name(NecklaceIdentity id) {
  switch (id) {
    case NecklaceIdentity::Product: return "product";
    case NecklaceIdentity::Power: return "power";
    case NecklaceIdentity::Cyclotomic: return "cyclotomic";
    case NecklaceIdentity::Strehl: return "strehl";
  }
  return "?";
}

namespace {

// prod_n (1 - a t^n)^{-k_n} over ZZ to the given order.
Series necklace_product(const Int& a, const std::vector<Int>& k, long order) {
  auto Z = RingSpec::integers();
  Series acc = Series::one(Z, order);
  for (long n = 1; n <= order; ++n) {
    const Int& e = k[static_cast<std::size_t>(n - 1)];
    if (e == 0) continue;
    std::vector<RingElem> f(static_cast<std::size_t>(order), RingElem::zero(Z));
    Int ap = 1;
    for (long j = 1; n * j <= order; ++j) {
      ap *= a;
      f[static_cast<std::size_t>(n * j - 1)] = RingElem::from_int(Z, binomial(e + j - 1, static_cast<unsigned long>(j)) * ap);
    }
    acc = series_add(acc, Series(Z, std::move(f)));
  }
  return acc;
}

std::vector<Int> numbers(const Int& a, long N) {
  std::vector<Int> out;
  for (long n = 1; n <= N; ++n) out.push_back(necklace_number(a, n));
  return out;
}

void need(const std::vector<Int>& params, std::size_t k, const std::string& what) {
  if (params.size() != k) throw std::invalid_argument(what + " takes " + std::to_string(k) + (k == 1 ? " parameter" : " parameters"));
}

}  // namespace

Report necklace_identity_check(NecklaceIdentity id, const std::vector<Int>& params, long bound) {
  if (bound < 1) throw std::invalid_argument("bound must be positive");
  Report rep;
  switch (id) {
    case NecklaceIdentity::Product: {
      need(params, 2, "product identity");
      const Int &a = params[0], &b = params[1];
      for (long n = 1; n <= bound; ++n) {
        Int rhs = 0;
        for (long i : divisors(n))
          for (long j : divisors(n))
            if (lcm(i, j) == n) rhs += gcd(i, j) * necklace_number(a, i) * necklace_number(b, j);
        Int lhs = necklace_number(a * b, n);
        rep.add("n=" + std::to_string(n), lhs == rhs, lhs.get_str() + " vs " + rhs.get_str());
      }
      break;
    }
    case NecklaceIdentity::Power: {
      need(params, 2, "power identity");
      const Int& b = params[0];
      long r = params[1].get_si();
      if (r < 1) throw std::invalid_argument("power identity needs r >= 1");
      Int br;
      mpz_pow_ui(br.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(r));
      for (long n = 1; n <= bound; ++n) {
        Int rhs = 0;
        for (long j : divisors(n * r))
          if (lcm(j, r) == n * r) rhs += (j / n) * necklace_number(b, j);
        Int lhs = necklace_number(br, n);
        rep.add("n=" + std::to_string(n), lhs == rhs, lhs.get_str() + " vs " + rhs.get_str());
      }
      break;
    }
    case NecklaceIdentity::Cyclotomic: {
      need(params, 1, "cyclotomic identity");
      auto Z = RingSpec::integers();
      Series lhs = Series::geometric(RingElem::from_int(Z, params[0]), bound);
      Series rhs = necklace_product(1, numbers(params[0], bound), bound);
      rep.add("order " + std::to_string(bound), lhs == rhs, lhs.to_string() + " vs " + rhs.to_string());
      break;
    }
    case NecklaceIdentity::Strehl: {
      need(params, 2, "Strehl identity");
      Series lhs = necklace_product(params[0], numbers(params[1], bound), bound);
      Series rhs = necklace_product(params[1], numbers(params[0], bound), bound);
      rep.add("order " + std::to_string(bound), lhs == rhs, lhs.to_string() + " vs " + rhs.to_string());
      break;
    }
  }
  return rep;
}

// ---------------------------------------------------------- necklace ring

NecklaceVec NecklaceVec::zero(const RingSpecPtr& ring, long N) {
  return NecklaceVec{ring, std::vector<RingElem>(static_cast<std::size_t>(N), RingElem::zero(ring))};
}

NecklaceVec NecklaceVec::from_ints(const RingSpecPtr& ring, const std::vector<Int>& c) {
  NecklaceVec v{ring, {}};
  for (const auto& x : c) v.c.push_back(RingElem::from_int(ring, x));
  return v;
}

std::string NecklaceVec::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + c[i].to_string();
  return s + ")";
}

nlohmann::json NecklaceVec::to_json() const {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& x : c) v.push_back(x.to_string());
  return {{"ring", ring->to_string()}, {"bound", bound()}, {"coords", v}};
}

namespace {
void same(const NecklaceVec& a, const NecklaceVec& b) {
  if (*a.ring != *b.ring || a.bound() != b.bound()) throw MismatchError("necklace vectors differ in ring or bound");
}
}  // namespace

NecklaceVec nr_add(const NecklaceVec& a, const NecklaceVec& b) {
  same(a, b);
  NecklaceVec r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

NecklaceVec nr_neg(const NecklaceVec& a) {
  NecklaceVec r = a;
  for (auto& x : r.c) x = -x;
  return r;
}

NecklaceVec nr_mul(const NecklaceVec& a, const NecklaceVec& b) {
  same(a, b);
  long N = a.bound();
  NecklaceVec r = NecklaceVec::zero(a.ring, N);
  for (long i = 1; i <= N; ++i) {
    if (a[i].is_zero()) continue;
    for (long j = 1; j <= N; ++j) {
      long n = lcm(i, j);
      if (n > N || b[j].is_zero()) continue;
      r.c[static_cast<std::size_t>(n - 1)] += (a[i] * b[j]).scaled(gcd(i, j));
    }
  }
  return r;
}

std::vector<RingElem> nr_ghost(const NecklaceVec& a) {
  std::vector<RingElem> u;
  for (long n = 1; n <= a.bound(); ++n) {
    RingElem s = RingElem::zero(a.ring);
    for (long d : divisors(n)) s += a[d].scaled(d);
    u.push_back(s);
  }
  return u;
}

NecklaceVec nr_frobenius(long r, const NecklaceVec& a) {
  if (r < 1) throw std::invalid_argument("Frobenius index must be positive");
  long N = a.bound() / r;
  NecklaceVec out = NecklaceVec::zero(a.ring, N);
  for (long n = 1; n <= N; ++n)
    for (long j : divisors(n * r))
      if (lcm(j, r) == n * r) out.c[static_cast<std::size_t>(n - 1)] += a[j].scaled(j / n);
  return out;
}

NecklaceVec nr_verschiebung(long r, const NecklaceVec& a) {
  if (r < 1) throw std::invalid_argument("Verschiebung index must be positive");
  NecklaceVec out = NecklaceVec::zero(a.ring, a.bound());
  for (long n = r; n <= a.bound(); n += r) out.c[static_cast<std::size_t>(n - 1)] = a[n / r];
  return out;
}

Series nr_to_lambda(const NecklaceVec& a) { return from_necklace(a.ring, a.c); }

NecklaceVec necklace_teichmuller(const RingSpecPtr& ring, const Int& alpha, long N) {
  return NecklaceVec::from_ints(ring, numbers(alpha, N));
}

SymFn modified_necklace_symm(long n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  SymFn p(Basis::P);
  for (long d : divisors(n)) {
    int mu = mobius(d);
    if (mu) p.add(Partition(static_cast<std::size_t>(n / d), static_cast<int>(d)), Rat(mu, n));
  }
  SymFn m = convert(p, Basis::M);
  if (!m.is_integral()) throw IntegralityError("modified necklace function " + std::to_string(n) + " is not integral");
  return m;
}

// ------------------------------------------------------------ cyclic sets

CyclicSet CyclicSet::orbit(long r, long N) {
  if (r < 1 || r > N) throw std::invalid_argument("orbit length outside 1.." + std::to_string(N));
  CyclicSet x = zero(N);
  x.b[static_cast<std::size_t>(r - 1)] = 1;
  return x;
}

bool CyclicSet::is_actual() const {
  return std::all_of(b.begin(), b.end(), [](const Int& v) { return v >= 0; });
}

Int CyclicSet::size() const {
  Int s = 0;
  for (long r = 1; r <= bound(); ++r) s += r * (*this)[r];
  return s;
}

std::string CyclicSet::to_string() const {
  std::string s;
  for (long r = 1; r <= bound(); ++r) {
    Int v = (*this)[r];
    if (v == 0) continue;
    if (s.empty())
      s = v < 0 ? "-" : "";
    else
      s += v < 0 ? " - " : " + ";
    Int a = abs(v);
    s += (a == 1 ? "" : a.get_str()) + "C" + std::to_string(r);
  }
  return s.empty() ? "0" : s;
}

nlohmann::json CyclicSet::to_json() const {
  nlohmann::json m = nlohmann::json::object();
  for (long r = 1; r <= bound(); ++r)
    if ((*this)[r] != 0) m[std::to_string(r)] = (*this)[r].get_str();
  return {{"bound", bound()}, {"mult", m}};
}

CyclicSet CyclicSet::from_json(const nlohmann::json& j) {
  CyclicSet x = zero(j.at("bound").get<long>());
  for (const auto& [k, v] : j.at("mult").items()) {
    long r = std::stol(k);
    if (r < 1 || r > x.bound()) throw std::invalid_argument("orbit length " + k + " outside the bound");
    x.b[static_cast<std::size_t>(r - 1)] = v.is_string() ? Int(v.get<std::string>()) : Int(v.get<long>());
  }
  return x;
}

namespace {
void same(const CyclicSet& x, const CyclicSet& y) {
  if (x.bound() != y.bound()) throw MismatchError("cyclic sets with different bounds");
}
}  // namespace

CyclicSet burnside_add(const CyclicSet& x, const CyclicSet& y) {
  same(x, y);
  CyclicSet r = x;
  for (std::size_t i = 0; i < r.b.size(); ++i) r.b[i] += y.b[i];
  return r;
}

CyclicSet burnside_neg(const CyclicSet& x) {
  CyclicSet r = x;
  for (auto& v : r.b) v = -v;
  return r;
}

CyclicSet burnside_product(const CyclicSet& x, const CyclicSet& y) {
  same(x, y);
  long N = x.bound();
  CyclicSet out = CyclicSet::zero(N);
  for (long r = 1; r <= N; ++r) {
    if (x[r] == 0) continue;
    for (long s = 1; s <= N; ++s) {
      long l = lcm(r, s);
      if (l <= N && y[s] != 0) out.b[static_cast<std::size_t>(l - 1)] += gcd(r, s) * x[r] * y[s];
    }
  }
  return out;
}

CyclicSet burnside_ind(long n, const CyclicSet& x) {
  if (n < 1) throw std::invalid_argument("induction index must be positive");
  CyclicSet out = CyclicSet::zero(x.bound());
  for (long r = 1; n * r <= x.bound(); ++r) out.b[static_cast<std::size_t>(n * r - 1)] = x[r];
  return out;
}

CyclicSet burnside_res(long n, const CyclicSet& x) {
  if (n < 1) throw std::invalid_argument("restriction index must be positive");
  long N = x.bound() / n;
  CyclicSet out = CyclicSet::zero(N);
  for (long r = 1; r <= x.bound(); ++r) {
    long g = gcd(n, r);
    if (r / g <= N) out.b[static_cast<std::size_t>(r / g - 1)] += g * x[r];
  }
  return out;
}

Int burnside_phi(long n, const CyclicSet& x) {
  if (n < 1 || n > x.bound()) throw std::invalid_argument("phi index outside 1.." + std::to_string(x.bound()));
  Int s = 0;
  for (long r : divisors(n))
    if (r <= x.bound()) s += r * x[r];
  return s;
}

std::vector<Int> burnside_ghost(const CyclicSet& x) {
  std::vector<Int> g;
  for (long n = 1; n <= x.bound(); ++n) g.push_back(burnside_phi(n, x));
  return g;
}

CyclicSet q_hat(const Int& q, long N) { return CyclicSet{numbers(q, N)}; }

CyclicSet T_map(const WittVec& x, long N) {
  if (x.is_padic()) throw std::invalid_argument("T needs a big Witt vector");
  if (x.ring()->kind() != RingSpec::Kind::Integers) throw std::invalid_argument("T needs a Witt vector over ZZ");
  CyclicSet out = CyclicSet::zero(N);
  for (long n = 1; n <= N; ++n) {
    if (!x.nest().contains(n)) throw CapError("T at bound " + std::to_string(N) + " needs coordinate " + std::to_string(n));
    Int xn = x[n].scalar().get_num();
    if (xn == 0) continue;
    for (long d = 1; n * d <= N; ++d) out.b[static_cast<std::size_t>(n * d - 1)] += necklace_number(xn, d);
  }
  return out;
}

CyclicSet itp(const NecklaceVec& a) {
  if (a.ring->kind() != RingSpec::Kind::Integers) throw std::invalid_argument("itp needs a necklace vector over ZZ");
  CyclicSet x = CyclicSet::zero(a.bound());
  for (long n = 1; n <= a.bound(); ++n) x.b[static_cast<std::size_t>(n - 1)] = a[n].scalar().get_num();
  return x;
}

NecklaceVec itp_inverse(const CyclicSet& x) { return NecklaceVec::from_ints(RingSpec::integers(), x.b); }

ImageVerdict image_test(const std::vector<Int>& chi) {
  ImageVerdict v;
  for (long n = 1; n <= static_cast<long>(chi.size()); ++n) {
    Int s = 0;
    for (long d : divisors(n)) s += mobius(n / d) * chi[static_cast<std::size_t>(d - 1)];
    if (s % n != 0) {
      v.pass = false;
      v.first_failure = n;
      return v;
    }
  }
  return v;
}

CyclicSet sym_power(long n, const CyclicSet& x, long max_points) {
  if (n < 0) throw std::invalid_argument("negative symmetric power");
  if (!x.is_actual()) throw std::invalid_argument("sym_power needs an actual cyclic set");
  if (x.size() > max_points)
    throw CapError("sym_power enumerates at most " + std::to_string(max_points) + " points, got " + x.size().get_str());
  // Points as (orbit start, length, position); shift maps position p to p+1 mod length.
  std::vector<long> start, len;
  long P = 0;
  for (long r = 1; r <= x.bound(); ++r)
    for (Int k = 0; k < x[r]; ++k) {
      for (long i = 0; i < r; ++i) {
        start.push_back(P);
        len.push_back(r);
      }
      P += r;
    }
  auto shift = [&](long p) { return start[static_cast<std::size_t>(p)] + (p - start[static_cast<std::size_t>(p)] + 1) % len[static_cast<std::size_t>(p)]; };

  CyclicSet out = CyclicSet::zero(x.bound());
  if (n == 0) {
    out.b[0] = 1;
    return out;
  }
  if (P == 0) return out;
  std::set<std::vector<long>> seen;
  std::vector<long> ms(static_cast<std::size_t>(n), 0);
  while (true) {
    if (!seen.count(ms)) {
      long orbit = 0;
      std::vector<long> cur = ms;
      do {
        seen.insert(cur);
        ++orbit;
        for (auto& p : cur) p = shift(p);
        std::sort(cur.begin(), cur.end());
      } while (cur != ms);
      if (orbit > out.bound()) throw std::logic_error("orbit longer than the bound");
      out.b[static_cast<std::size_t>(orbit - 1)] += 1;
    }
    // Next nondecreasing sequence over 0..P-1.
    long i = n - 1;
    while (i >= 0 && ms[static_cast<std::size_t>(i)] == P - 1) --i;
    if (i < 0) break;
    long v = ms[static_cast<std::size_t>(i)] + 1;
    for (long j = i; j < n; ++j) ms[static_cast<std::size_t>(j)] = v;
  }
  return out;
}

Series syP(const CyclicSet& x, long order) {
  std::vector<Int> b(static_cast<std::size_t>(order), 0);
  for (long r = 1; r <= std::min(order, x.bound()); ++r) b[static_cast<std::size_t>(r - 1)] = x[r];
  return necklace_product(1, b, order);
}

Report diagram_check(const WittVec& x, long N) {
  Report rep;
  CyclicSet t = T_map(x, N);
  WittVec xr = x.restrict_to(Nest::range(N));
  GhostVec w = ghost(xr);
  auto phi = burnside_ghost(t);
  bool ghost_ok = true;
  for (long n = 1; n <= N; ++n)
    if (RingElem::from_int(x.ring(), phi[static_cast<std::size_t>(n - 1)]) != w[n]) ghost_ok = false;
  rep.add("ghost of T(x) equals w(x)", ghost_ok);

  Series a = from_witt(xr);
  Series s = syP(t, N);
  rep.add("syP(T(x)) equals the power series of x", s == a, s.to_string() + " vs " + a.to_string());

  NecklaceCoords nc = to_necklace(a);
  NecklaceVec back = itp_inverse(t);
  bool neck_ok = nc.integral;
  for (long n = 1; neck_ok && n <= N; ++n)
    if (change_ring(nc.c[0].spec(), back[n]) != nc.c[static_cast<std::size_t>(n - 1)]) neck_ok = false;
  rep.add("itp^-1(T(x)) equals the necklace coordinates", neck_ok, back.to_string());
  return rep;
}

}  // namespace wittlab
