#include "wittlab/lambda.hpp"

#include <map>
#include <mutex>

#include "wittlab/errors.hpp"
#include "wittlab/symm.hpp"
#include "wittlab/universal.hpp"

namespace wittlab {

// ------------------------------------------------------------------ Series

Series::Series(RingSpecPtr ring, std::vector<RingElem> coeffs) : ring_(std::move(ring)), a_(std::move(coeffs)) {
  for (const auto& c : a_)
    if (*c.spec() != *ring_) throw MismatchError("series coefficient outside the declared ring");
}

Series Series::one(const RingSpecPtr& ring, long order) {
  if (order < 0) throw std::invalid_argument("negative order");
  return Series(ring, std::vector<RingElem>(static_cast<std::size_t>(order), RingElem::zero(ring)));
}

Series Series::geometric(const RingElem& x, long order, long d) {
  Series s = one(x.spec(), order);
  RingElem p = RingElem::one(x.spec());
  for (long k = d; k <= order; k += d) {
    p *= x;
    s.a_[static_cast<std::size_t>(k - 1)] = p;
  }
  return s;
}

Series Series::from_ints(const RingSpecPtr& ring, const std::vector<Int>& coeffs) {
  std::vector<RingElem> a;
  for (const auto& c : coeffs) a.push_back(RingElem::from_int(ring, c));
  return Series(ring, std::move(a));
}

RingElem Series::coeff(long k) const {
  if (k == 0) return RingElem::one(ring_);
  if (k < 0 || k > order()) throw std::out_of_range("series coefficient " + std::to_string(k) + " beyond order");
  return a_[static_cast<std::size_t>(k - 1)];
}

Series Series::truncated(long order) const {
  if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
  return Series(ring_, std::vector<RingElem>(a_.begin(), a_.begin() + order));
}

bool Series::operator==(const Series& o) const { return *ring_ == *o.ring_ && a_ == o.a_; }

std::string Series::to_string() const {
  std::string s = "1";
  for (long k = 1; k <= order(); ++k) {
    const RingElem& c = a_[static_cast<std::size_t>(k - 1)];
    if (c.is_zero()) continue;
    std::string tp = k == 1 ? "t" : "t^" + std::to_string(k);
    auto q = c.as_constant();
    if (q) {
      s += *q < 0 ? " - " : " + ";
      Rat a = *q < 0 ? Rat(-*q) : *q;
      s += (a == 1 ? "" : wittlab::to_string(a) + " ") + tp;
    } else {
      s += " + (" + c.to_string() + ") " + tp;
    }
  }
  return s + " + O(t^" + std::to_string(order() + 1) + ")";
}

nlohmann::json Series::to_json() const {
  nlohmann::json c = nlohmann::json::array();
  for (const auto& x : a_) c.push_back(x.to_string());
  return {{"order", order()}, {"coeffs", c}};
}

Series Series::from_json(const RingSpecPtr& ring, const nlohmann::json& j) {
  std::vector<RingElem> a;
  for (const auto& c : j.at("coeffs")) a.push_back(RingElem::from_json(ring, c));
  if (j.contains("order") && j.at("order").get<long>() != static_cast<long>(a.size()))
    throw std::invalid_argument("series order does not match the number of coefficients");
  return Series(ring, std::move(a));
}

// --------------------------------------------------------------- group law

namespace {

void require_ring(const Series& a, const Series& b) {
  if (*a.ring() != *b.ring()) throw MismatchError("series over different rings");
}

// Full coefficient vector c_0..c_D.
std::vector<RingElem> full(const Series& a) {
  std::vector<RingElem> v{RingElem::one(a.ring())};
  v.insert(v.end(), a.coeffs().begin(), a.coeffs().end());
  return v;
}

Series product(const Series& a, const Series& b) {
  long D = std::min(a.order(), b.order());
  std::vector<RingElem> out(static_cast<std::size_t>(D), RingElem::zero(a.ring()));
  auto fa = full(a), fb = full(b);
  for (long k = 1; k <= D; ++k) {
    RingElem acc = RingElem::zero(a.ring());
    for (long i = 0; i <= k; ++i) {
      const auto& x = fa[static_cast<std::size_t>(i)];
      const auto& y = fb[static_cast<std::size_t>(k - i)];
      if (!x.is_zero() && !y.is_zero()) acc += x * y;
    }
    out[static_cast<std::size_t>(k - 1)] = acc;
  }
  return Series(a.ring(), std::move(out));
}

}  // namespace

Series series_add(const Series& a, const Series& b) {
  require_ring(a, b);
  return product(a, b);
}

Series series_neg(const Series& a) {
  long D = a.order();
  auto fa = full(a);
  std::vector<RingElem> inv{RingElem::one(a.ring())};
  for (long k = 1; k <= D; ++k) {
    RingElem acc = RingElem::zero(a.ring());
    for (long i = 1; i <= k; ++i) acc -= fa[static_cast<std::size_t>(i)] * inv[static_cast<std::size_t>(k - i)];
    inv.push_back(acc);
  }
  return Series(a.ring(), std::vector<RingElem>(inv.begin() + 1, inv.end()));
}

Series series_sub(const Series& a, const Series& b) { return series_add(a, series_neg(b)); }

// ------------------------------------------------------ universal families

namespace {

Poly hvars_to(const Poly& p, char letter) {
  return p.map_vars([letter](VarId v) { return var::make(letter, var::index(v)); });
}

class LambdaPolys {
 public:
  static LambdaPolys& get() {
    static LambdaPolys t;
    return t;
  }

  // Coefficient k of a *_W b.
  const Poly& product(long k) {
    return memo(prod_, {k, 0}, [&] {
      Poly acc;
      for (const auto& l : part::of_weight(static_cast<int>(k))) {
        std::vector<VarExp> f;
        for (int x : l) f.emplace_back(var::make('a', static_cast<std::uint32_t>(x)), 1);
        acc += Poly::term(Monomial::from_factors(f), 1) * hvars_to(to_h_poly(SymFn::of(Basis::M, l)), 'b');
      }
      return acc;
    });
  }

  // Coefficient k of f_n a: (h_k o p_n) in h, evaluated at a.
  const Poly& frobenius(long n, long k) {
    return memo(frob_, {n, k}, [&] {
      SymFn s(Basis::M);
      for (const auto& mu : part::of_weight(static_cast<int>(k))) s.add(part::scaled(mu, static_cast<int>(n)), 1);
      return hvars_to(to_h_poly(s), 'a');
    });
  }

  const Poly& plethysm_coeff(bool exterior, long m, long k) {
    return memo(exterior ? lam_ : sig_, {m, k}, [&] {
      SymFn inner = SymFn::of(exterior ? Basis::E : Basis::H, {static_cast<int>(m)});
      return hvars_to(to_h_poly(plethysm(SymFn::of(Basis::H, {static_cast<int>(k)}), inner, Basis::H)), 'a');
    });
  }

  const std::vector<Poly>& r_polys(long bound) {
    std::lock_guard<std::mutex> lock(mu_);
    if (static_cast<long>(r_.size()) < bound) r_ = teichmuller_sum_polys(bound);
    return r_;
  }

 private:
  using Key = std::pair<long, long>;
  template <class F>
  const Poly& memo(std::map<Key, Poly>& m, Key k, F&& compute) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = m.find(k); it != m.end()) return it->second;
    }
    Poly p = compute();
    std::lock_guard<std::mutex> lock(mu_);
    return m.emplace(k, std::move(p)).first->second;
  }

  std::mutex mu_;
  std::map<Key, Poly> prod_, frob_, lam_, sig_;
  std::vector<Poly> r_;
};

RingElem eval_ab(const Poly& p, const Series& a, const Series* b) {
  return eval_in(a.ring(), p, [&](VarId v) {
    long i = static_cast<long>(var::index(v));
    return var::letter(v) == 'a' ? a.coeff(i) : b->coeff(i);
  });
}

}  // namespace

Series witt_product(const Series& a, const Series& b) {
  require_ring(a, b);
  long D = std::min(a.order(), b.order());
  std::vector<RingElem> out;
  for (long k = 1; k <= D; ++k) out.push_back(eval_ab(LambdaPolys::get().product(k), a, &b));
  return Series(a.ring(), std::move(out));
}

Series witt_power(const Series& a, unsigned long e) {
  Series r = Series::geometric(RingElem::one(a.ring()), a.order());
  for (unsigned long i = 0; i < e; ++i) r = witt_product(r, a);
  return r;
}

// ------------------------------------------------------ coordinate changes

Series from_witt(const WittVec& x) {
  long D = x.nest().max();
  if (x.is_padic() || x.nest() != Nest::range(D))
    throw MismatchError("from_witt needs a vector on a nest {1..D}");
  Series acc = Series::one(x.ring(), D);
  for (long d = 1; d <= D; ++d)
    if (!x[d].is_zero()) acc = product(acc, Series::geometric(x[d], D, d));
  return acc;
}

WittVec to_witt(const Series& a) {
  long D = a.order();
  if (D < 1) throw std::invalid_argument("to_witt needs order at least 1");
  Series cur = a;
  std::vector<RingElem> x;
  for (long d = 1; d <= D; ++d) {
    RingElem xd = cur.coeff(d);
    x.push_back(xd);
    if (xd.is_zero()) continue;
    std::vector<RingElem> f(static_cast<std::size_t>(D), RingElem::zero(a.ring()));
    f[static_cast<std::size_t>(d - 1)] = -xd;
    cur = product(cur, Series(a.ring(), std::move(f)));
  }
  return WittVec(a.ring(), Nest::range(D), std::move(x));
}

RingSpecPtr rationalize(const RingSpecPtr& ring) {
  auto s = ring->scalar();
  if (s->kind() != RingSpec::Kind::Integers && s->kind() != RingSpec::Kind::PLocal) return ring;
  if (!ring->is_polynomial()) return RingSpec::rationals();
  return RingSpec::polynomial(RingSpec::rationals(), ring->vars());
}

RingElem change_ring(const RingSpecPtr& target, const RingElem& x) {
  if (x.is_poly()) return RingElem::from_poly(target, x.poly());
  return RingElem::from_rat(target, x.scalar());
}

namespace {

bool in_ring(const RingSpecPtr& ring, const RingElem& x) {
  if (!x.is_poly()) return ring->contains(x.scalar());
  for (const auto& [m, c] : x.poly().terms())
    if (!ring->scalar()->contains(c)) return false;
  return true;
}

}  // namespace

std::vector<RingElem> series_ghost(const Series& a) {
  std::vector<RingElem> p;
  for (long n = 1; n <= a.order(); ++n) {
    RingElem acc = a.coeff(n).scaled(n);
    for (long i = 1; i < n; ++i) acc -= a.coeff(n - i) * p[static_cast<std::size_t>(i - 1)];
    p.push_back(acc);
  }
  return p;
}

Series series_from_ghost(const RingSpecPtr& ring, const std::vector<RingElem>& p) {
  std::vector<RingElem> a;
  for (long n = 1; n <= static_cast<long>(p.size()); ++n) {
    RingElem acc = p[static_cast<std::size_t>(n - 1)];
    for (long i = 1; i < n; ++i) acc += a[static_cast<std::size_t>(n - i - 1)] * p[static_cast<std::size_t>(i - 1)];
    if (!acc.divisible_by(n))
      throw IntegralityError("coefficient " + std::to_string(n) + ": " + acc.to_string() + " is not divisible by " +
                             std::to_string(n) + " in " + ring->to_string());
    a.push_back(acc.exact_div(n));
  }
  return Series(ring, std::move(a));
}

NecklaceCoords to_necklace(const Series& a) {
  auto rq = rationalize(a.ring());
  std::vector<RingElem> coeffs;
  for (const auto& c : a.coeffs()) coeffs.push_back(change_ring(rq, c));
  auto p = series_ghost(Series(rq, std::move(coeffs)));
  NecklaceCoords out;
  for (long n = 1; n <= a.order(); ++n) {
    RingElem s = RingElem::zero(rq);
    for (long d : divisors(n)) {
      int mu = mobius(n / d);
      if (mu) s += p[static_cast<std::size_t>(d - 1)].scaled(mu);
    }
    if (!s.divisible_by(n))
      throw IntegralityError("necklace coordinate " + std::to_string(n) + " needs division by " + std::to_string(n) +
                             " in " + rq->to_string());
    RingElem c = s.exact_div(n);
    if (out.integral && !in_ring(a.ring(), c)) {
      out.integral = false;
      out.first_non_integral = n;
    }
    out.c.push_back(c);
  }
  return out;
}

Series from_necklace(const RingSpecPtr& ring, const std::vector<RingElem>& c) {
  long D = static_cast<long>(c.size());
  Series acc = Series::one(ring, D);
  for (long n = 1; n <= D; ++n) {
    const RingElem& cn = c[static_cast<std::size_t>(n - 1)];
    if (cn.is_zero()) continue;
    std::vector<RingElem> f(static_cast<std::size_t>(D), RingElem::zero(ring));
    auto q = cn.as_constant();
    RingElem run = RingElem::one(ring);
    for (long k = 1; n * k <= D; ++k) {
      RingElem coeff;
      if (q && q->get_den() == 1) {
        coeff = RingElem::from_int(ring, binomial(q->get_num() + k - 1, static_cast<unsigned long>(k)));
      } else {
        run *= cn + RingElem::from_int(ring, k - 1);
        Int fk = factorial(static_cast<unsigned long>(k));
        if (!run.divisible_by(fk))
          throw IntegralityError("binomial coefficient of " + cn.to_string() + " needs division by " + fk.get_str());
        coeff = run.exact_div(fk);
      }
      f[static_cast<std::size_t>(n * k - 1)] = coeff;
    }
    acc = product(acc, Series(ring, std::move(f)));
  }
  return acc;
}

// --------------------------------------------------------------- operators

Series series_verschiebung(long n, const Series& a) {
  if (n < 1) throw std::invalid_argument("Verschiebung index must be positive");
  Series out = Series::one(a.ring(), a.order());
  std::vector<RingElem> c = out.coeffs();
  for (long k = n; k <= a.order(); k += n) c[static_cast<std::size_t>(k - 1)] = a.coeff(k / n);
  return Series(a.ring(), std::move(c));
}

Series series_frobenius(long n, const Series& a) {
  if (n < 1) throw std::invalid_argument("Frobenius index must be positive");
  if (n == 1) return a;
  std::vector<RingElem> out;
  for (long k = 1; n * k <= a.order(); ++k) out.push_back(eval_ab(LambdaPolys::get().frobenius(n, k), a, nullptr));
  return Series(a.ring(), std::move(out));
}

Series series_homothety(const RingElem& u, const Series& a) {
  if (*u.spec() != *a.ring()) throw MismatchError("homothety scalar in a different ring");
  std::vector<RingElem> c;
  RingElem p = RingElem::one(a.ring());
  for (long k = 1; k <= a.order(); ++k) {
    p *= u;
    c.push_back(a.coeff(k) * p);
  }
  return Series(a.ring(), std::move(c));
}

Series series_nmult(long n, const Series& a) {
  if (n < 0) throw std::invalid_argument("multiplier must be non-negative");
  Series r = Series::one(a.ring(), a.order());
  for (long i = 0; i < n; ++i) r = product(r, a);
  return r;
}

namespace {
Series plethystic_power(bool exterior, long m, const Series& a) {
  if (m < 1) throw std::invalid_argument("power must be positive");
  std::vector<RingElem> out;
  for (long k = 1; m * k <= a.order(); ++k)
    out.push_back(eval_ab(LambdaPolys::get().plethysm_coeff(exterior, m, k), a, nullptr));
  return Series(a.ring(), std::move(out));
}
}  // namespace

Series lambda_power(long m, const Series& a) { return plethystic_power(true, m, a); }
Series sigma_power(long m, const Series& a) { return plethystic_power(false, m, a); }

Series adams(long n, const Series& a) {
  Series f = series_frobenius(n, a);
  if (!a.ring()->torsion_free()) return f;
  auto p = series_ghost(a);
  std::vector<RingElem> q;
  for (long k = 1; n * k <= a.order(); ++k) q.push_back(p[static_cast<std::size_t>(n * k - 1)]);
  Series g = series_from_ghost(a.ring(), q);
  if (g != f) throw std::logic_error("Adams operation differs from Frobenius: " + g.to_string() + " vs " + f.to_string());
  return g;
}

Series sigma_from_adams(const FrobeniusFamily& F, const RingElem& x, long order) {
  if (!x.spec()->torsion_free()) throw std::invalid_argument("sigma_from_adams needs a torsion-free ring");
  std::vector<RingElem> p;
  for (long n = 1; n <= order; ++n) p.push_back(F.phi(n, x));
  return series_from_ghost(x.spec(), p);
}

Series cofree_lift(const FrobeniusFamily& F, const RingSpecPtr& target,
                   const std::function<RingElem(const RingElem&)>& alpha, const RingElem& x, long order) {
  Series s = sigma_from_adams(F, x, order);
  std::vector<RingElem> c;
  for (const auto& a : s.coeffs()) c.push_back(alpha(a));
  return Series(target, std::move(c));
}

// ----------------------------------------------------------- Artin-Hasse

namespace {

ArtinHasse artin_hasse_direct(const WittVec& x, long outer, long inner) {
  const auto& ring = x.ring();
  GhostVec gx = ghost(x);
  Nest in = Nest::range(inner);
  std::vector<std::vector<RingElem>> G(static_cast<std::size_t>(outer) + 1);
  ArtinHasse out;
  for (long n = 1; n <= outer; ++n) {
    auto& row = G[static_cast<std::size_t>(n)];
    for (long k = 1; k <= inner; ++k) {
      RingElem acc = gx[n * k];
      for (long d : divisors(n)) {
        if (d == n) break;
        acc -= G[static_cast<std::size_t>(d)][static_cast<std::size_t>(k - 1)].pow(static_cast<unsigned long>(n / d)).scaled(d);
      }
      if (!acc.divisible_by(n))
        throw IntegralityError("Artin-Hasse outer " + std::to_string(n) + ", inner ghost " + std::to_string(k) +
                               " is not divisible by " + std::to_string(n));
      row.push_back(acc.exact_div(n));
    }
    out.outer.push_back(from_ghost(GhostVec{ring, in, false, 0, row}));
  }
  return out;
}

}  // namespace

ArtinHasse artin_hasse(const WittVec& x, long outer, long inner) {
  if (outer < 1 || inner < 1) throw std::invalid_argument("truncations must be positive");
  if (x.is_padic()) throw std::invalid_argument("Artin-Hasse needs a big Witt vector");
  for (long n = 1; n <= outer * inner; ++n)
    if (!x.nest().contains(n))
      throw CapError("Artin-Hasse at " + std::to_string(outer) + "x" + std::to_string(inner) + " needs index " +
                     std::to_string(n) + " in the input nest");
  WittVec xr = x.restrict_to(Nest::range(outer * inner));
  if (x.ring()->torsion_free()) return artin_hasse_direct(xr, outer, inner);
  // Universal coordinates over ZZ[X1..XM], then evaluated.
  long M = outer * inner;
  std::vector<std::string> names;
  for (long i = 1; i <= M; ++i) names.push_back("X" + std::to_string(i));
  auto zx = RingSpec::polynomial(RingSpec::integers(), names);
  std::vector<RingElem> gen;
  for (long i = 0; i < M; ++i) gen.push_back(RingElem::var(zx, static_cast<std::size_t>(i)));
  ArtinHasse uni = artin_hasse_direct(WittVec(zx, Nest::range(M), gen), outer, inner);
  ArtinHasse out;
  for (const auto& y : uni.outer)
    out.outer.push_back(y.map(x.ring(), [&](const RingElem& c) {
      return eval_in(x.ring(), c.poly(), [&](VarId v) { return xr[static_cast<long>(v) + 1]; });
    }));
  return out;
}

// -------------------------------------------------------- Cartier calculus

CartierOp CartierOp::zero(const RingSpecPtr& ring, long bound) { return CartierOp{ring, bound, {}}; }

CartierOp CartierOp::term(long m, const RingElem& c, long n, long bound) {
  return cartier_normalize(CartierOp{c.spec(), bound, {{m, c, n}}});
}

std::string CartierOp::to_string() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& t : terms) {
    if (!s.empty()) s += " + ";
    s += "V" + std::to_string(t.m) + "<" + t.c.to_string() + ">f" + std::to_string(t.n);
  }
  return s;
}

nlohmann::json CartierOp::to_json() const {
  nlohmann::json t = nlohmann::json::array();
  for (const auto& x : terms) t.push_back({{"m", x.m}, {"c", x.c.to_string()}, {"n", x.n}});
  return {{"ring", ring->to_json()}, {"bound", bound}, {"terms", t}};
}

namespace {

class NormalForm {
 public:
  NormalForm(RingSpecPtr ring, long bound) : ring_(std::move(ring)), bound_(bound) {
    r_ = &LambdaPolys::get().r_polys(std::max(bound, 1L));
  }

  void insert(long m, const RingElem& c, long n) {
    if (m < 1 || n < 1) throw std::invalid_argument("Cartier indices must be positive");
    if (m > bound_ || c.is_zero()) return;
    auto key = std::make_pair(m, n);
    auto it = t_.find(key);
    if (it == t_.end()) {
      t_.emplace(key, c);
      return;
    }
    RingElem c0 = it->second;
    RingElem s = c0 + c;
    if (s.is_zero())
      t_.erase(it);
    else
      it->second = s;
    for (long k = 2; m * k <= bound_; ++k) {
      RingElem rk = eval_in(ring_, (*r_)[static_cast<std::size_t>(k - 1)],
                            [&](VarId v) { return var::letter(v) == 'X' ? c0 : c; });
      insert(m * k, rk, n * k);
    }
  }

  CartierOp result() const {
    CartierOp op{ring_, bound_, {}};
    for (const auto& [k, c] : t_) op.terms.push_back({k.first, c, k.second});
    return op;
  }

 private:
  RingSpecPtr ring_;
  long bound_;
  const std::vector<Poly>* r_;
  std::map<std::pair<long, long>, RingElem> t_;
};

}  // namespace

CartierOp cartier_normalize(const CartierOp& op) {
  NormalForm nf(op.ring, op.bound);
  for (const auto& t : op.terms) nf.insert(t.m, t.c, t.n);
  return nf.result();
}

namespace {

// f_n through ghost components when the ring is torsion-free.
Series frobenius_for_apply(long n, const Series& a) {
  if (n == 1 || !a.ring()->torsion_free()) return series_frobenius(n, a);
  auto g = series_ghost(a);
  std::vector<RingElem> h;
  for (long k = 1; n * k <= a.order(); ++k) h.push_back(g[static_cast<std::size_t>(n * k - 1)]);
  return series_from_ghost(a.ring(), h);
}

}  // namespace

Series cartier_apply(const CartierOp& op, const Series& a) {
  long D = a.order();
  long out = D;
  for (const auto& t : op.terms) out = std::min(out, t.m * (D / t.n + 1) - 1);
  Series acc = Series::one(a.ring(), out);
  for (const auto& t : op.terms) {
    if (t.m > out) continue;
    RingElem c = change_ring(a.ring(), t.c);
    Series b = series_homothety(c, frobenius_for_apply(t.n, a));
    std::vector<RingElem> v(static_cast<std::size_t>(out), RingElem::zero(a.ring()));
    for (long j = 1; j * t.m <= out; ++j) v[static_cast<std::size_t>(j * t.m - 1)] = b.coeff(j);
    acc = product(acc, Series(a.ring(), std::move(v)));
  }
  return acc;
}

CartierOp cartier_add(const CartierOp& a, const CartierOp& b) {
  if (*a.ring != *b.ring) throw MismatchError("Cartier operators over different rings");
  NormalForm nf(a.ring, std::min(a.bound, b.bound));
  for (const auto& t : a.terms) nf.insert(t.m, t.c, t.n);
  for (const auto& t : b.terms) nf.insert(t.m, t.c, t.n);
  return nf.result();
}

CartierOp cartier_compose(const CartierOp& a, const CartierOp& b) {
  if (*a.ring != *b.ring) throw MismatchError("Cartier operators over different rings");
  long bound = std::min(a.bound, b.bound);
  CartierOp acc = CartierOp::zero(a.ring, bound);
  for (const auto& x : a.terms)
    for (const auto& y : b.terms) {
      // (V_m <b> f_n)(V_r <c> f_s) = [d] V_{mr/d} <b^{r/d} c^{n/d}> f_{sn/d}
      long d = gcd(x.n, y.m);
      long m = x.m * y.m / d;
      if (m > bound) continue;
      RingElem c = x.c.pow(static_cast<unsigned long>(y.m / d)) * y.c.pow(static_cast<unsigned long>(x.n / d));
      CartierOp t = CartierOp::term(m, c, y.n * x.n / d, bound);
      for (long i = 0; i < d; ++i) acc = cartier_add(acc, t);
    }
  return acc;
}

CartierOp cartier_nmult(long d, const RingSpecPtr& ring, long bound) {
  CartierOp one = CartierOp::term(1, RingElem::one(ring), 1, bound);
  CartierOp acc = CartierOp::zero(ring, bound);
  for (long i = 0; i < d; ++i) acc = cartier_add(acc, one);
  return acc;
}

std::string DEMatrix::to_string() const {
  if (entries.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : entries) {
    if (!s.empty()) s += ", ";
    s += "c(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")=" + c.to_string();
  }
  return s;
}

bool DEMatrix::operator==(const DEMatrix& o) const { return *ring == *o.ring && entries == o.entries; }

DEMatrix de_matrix(const CartierOp& op, long order) {
  const auto& R = op.ring;
  std::string tname = "T";
  while (R->var_index(tname)) tname += "_";
  auto RT = RingSpec::polynomial(R, {tname});
  auto tpos = static_cast<VarId>(RT->vars().size() - 1);
  // V_m <c> f_n sends (1 - Tt)^{-1} to (1 - c T^n t^m)^{-1}.
  RingElem T = RingElem::var(RT, tpos);
  Series b = Series::one(RT, order);
  for (const auto& t : op.terms)
    if (t.m <= order) b = product(b, Series::geometric(change_ring(RT, t.c) * T.pow(static_cast<unsigned long>(t.n)), order, t.m));
  DEMatrix out{R, {}};
  for (long m = 1; m <= b.order(); ++m) {
    RingElem cm = b.coeff(m);
    std::vector<RingElem> f(static_cast<std::size_t>(b.order()), RingElem::zero(RT));
    std::map<std::uint32_t, Poly> by_t;
    for (const auto& [mono, c] : cm.poly().terms()) {
      std::vector<VarExp> rest;
      std::uint32_t e = 0;
      for (const auto& [v, k] : mono.factors()) {
        if (v == tpos)
          e = k;
        else
          rest.emplace_back(v, k);
      }
      by_t[e].add_term(Monomial::from_factors(rest), c);
    }
    for (const auto& [e, p] : by_t) {
      if (e == 0) throw std::logic_error("constant T-term in the determining series");
      RingElem c = RingElem::from_poly(R, p);
      if (c.is_zero()) continue;
      out.entries.emplace(std::make_pair(m, static_cast<long>(e)), c);
      f[static_cast<std::size_t>(m - 1)] = -(RingElem::from_poly(RT, p) * RingElem::var(RT, tpos).pow(e));
      // Divide out (1 - c T^e t^m)^{-1} by multiplying with (1 - c T^e t^m).
      b = product(b, Series(RT, f));
      f[static_cast<std::size_t>(m - 1)] = RingElem::zero(RT);
    }
  }
  return out;
}

CartierOp reconstruct(const DEMatrix& d, long bound) {
  CartierOp op{d.ring, bound, {}};
  for (const auto& [k, c] : d.entries) op.terms.push_back({k.first, c, k.second});
  return cartier_normalize(op);
}

CartierOp witt_operator(const WittVec& x) {
  if (x.is_padic()) throw std::invalid_argument("witt_operator needs a big Witt vector");
  CartierOp op{x.ring(), x.nest().max(), {}};
  for (long n : x.nest().indices()) op.terms.push_back({n, x[n], n});
  return cartier_normalize(op);
}

Series witt_scalar_action(const WittVec& x, const Series& a) {
  if (*x.ring() != *a.ring()) throw MismatchError("Witt vector and series over different rings");
  long bound = 0;
  while (bound < a.order() && x.nest().contains(bound + 1)) ++bound;
  CartierOp op = witt_operator(x.restrict_to(Nest::range(std::max(bound, 1L))));
  return cartier_apply(op, a).truncated(std::min(bound, a.order()));
}

}  // namespace wittlab
