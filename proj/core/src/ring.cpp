#include "wittlab/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace wittlab {

namespace {

Int mod_inverse(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw IntegralityError("denominator " + a.get_str() + " is not invertible mod " + m.get_str());
  return r;
}

Int mod_reduce(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

RingSpecPtr RingSpec::integers() {
  static const RingSpecPtr z = [] {
    auto s = std::make_shared<RingSpec>();
    s->kind_ = Kind::Integers;
    return RingSpecPtr(s);
  }();
  return z;
}

RingSpecPtr RingSpec::rationals() {
  static const RingSpecPtr q = [] {
    auto s = std::make_shared<RingSpec>();
    s->kind_ = Kind::Rationals;
    return RingSpecPtr(s);
  }();
  return q;
}

RingSpecPtr RingSpec::mod(const Int& m) {
  if (m < 2) throw std::invalid_argument("modulus must be at least 2");
  auto s = std::make_shared<RingSpec>();
  s->kind_ = Kind::ModM;
  s->modulus_ = m;
  return s;
}

RingSpecPtr RingSpec::plocal(long p) {
  if (!is_prime(p)) throw std::invalid_argument("p-local rationals need a prime, got " + std::to_string(p));
  auto s = std::make_shared<RingSpec>();
  s->kind_ = Kind::PLocal;
  s->modulus_ = p;
  return s;
}

RingSpecPtr RingSpec::polynomial(const RingSpecPtr& base, const std::vector<std::string>& vars) {
  auto s = std::make_shared<RingSpec>();
  s->kind_ = Kind::Polynomial;
  if (base->is_polynomial()) {
    s->scalar_ = base->scalar();
    s->vars_ = base->vars();
  } else {
    s->scalar_ = base;
  }
  for (const auto& v : vars) {
    if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0])))
      throw std::invalid_argument("bad variable name '" + v + "'");
    s->vars_.push_back(v);
  }
  std::set<std::string> seen(s->vars_.begin(), s->vars_.end());
  if (seen.size() != s->vars_.size()) throw std::invalid_argument("variable names must be distinct");
  if (s->vars_.size() > 0xFFFFF) throw std::invalid_argument("too many variables");
  return s;
}

std::optional<std::size_t> RingSpec::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

Rat RingSpec::canon(const Rat& in) const {
  Rat q = in;
  q.canonicalize();
  switch (kind_) {
    case Kind::Integers:
      if (q.get_den() != 1) throw IntegralityError("not an integer: " + wittlab::to_string(q));
      return q;
    case Kind::Rationals:
      return q;
    case Kind::ModM: {
      Int num = mod_reduce(q.get_num(), modulus_);
      if (q.get_den() != 1) num = mod_reduce(num * mod_inverse(q.get_den(), modulus_), modulus_);
      return Rat(num);
    }
    case Kind::PLocal:
      if (mpz_divisible_ui_p(q.get_den_mpz_t(), modulus_.get_ui()))
        throw IntegralityError("denominator divisible by " + modulus_.get_str() + ": " +
                               wittlab::to_string(q));
      return q;
    case Kind::Polynomial:
      return scalar_->canon(q);
  }
  return q;
}

bool RingSpec::contains(const Rat& in) const {
  Rat q = in;
  q.canonicalize();
  switch (kind_) {
    case Kind::Integers:
      return q.get_den() == 1;
    case Kind::Rationals:
      return true;
    case Kind::ModM:
      return gcd(Int(q.get_den()), modulus_) == 1;
    case Kind::PLocal:
      return !mpz_divisible_ui_p(q.get_den_mpz_t(), modulus_.get_ui());
    case Kind::Polynomial:
      return scalar_->contains(q);
  }
  return false;
}

bool RingSpec::is_unit(const Int& n) const {
  switch (kind_) {
    case Kind::Integers:
      return n == 1 || n == -1;
    case Kind::Rationals:
      return n != 0;
    case Kind::ModM:
      return gcd(n, modulus_) == 1;
    case Kind::PLocal:
      return n != 0 && !mpz_divisible_ui_p(n.get_mpz_t(), modulus_.get_ui());
    case Kind::Polynomial:
      return scalar_->is_unit(n);
  }
  return false;
}

std::optional<long> RingSpec::char_p() const {
  if (kind_ == Kind::Polynomial) return scalar_->char_p();
  if (kind_ == Kind::ModM && modulus_.fits_slong_p() && is_prime(modulus_.get_si())) return modulus_.get_si();
  return std::nullopt;
}

bool RingSpec::torsion_free() const {
  if (kind_ == Kind::Polynomial) return scalar_->torsion_free();
  return kind_ != Kind::ModM;
}

std::optional<Int> RingSpec::size() const {
  if (kind_ == Kind::ModM) return modulus_;
  return std::nullopt;
}

bool RingSpec::operator==(const RingSpec& o) const {
  if (this == &o) return true;
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::Integers:
    case Kind::Rationals:
      return true;
    case Kind::ModM:
    case Kind::PLocal:
      return modulus_ == o.modulus_;
    case Kind::Polynomial:
      return vars_ == o.vars_ && *scalar_ == *o.scalar_;
  }
  return false;
}

std::string RingSpec::to_string() const {
  switch (kind_) {
    case Kind::Integers:
      return "ZZ";
    case Kind::Rationals:
      return "QQ";
    case Kind::ModM:
      return "ZZ/" + modulus_.get_str();
    case Kind::PLocal:
      return "ZZ_(" + modulus_.get_str() + ")";
    case Kind::Polynomial: {
      std::string s = scalar_->to_string() + "[";
      for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
      return s + "]";
    }
  }
  return "?";
}

nlohmann::json RingSpec::to_json() const {
  switch (kind_) {
    case Kind::Integers:
      return {{"kind", "integers"}};
    case Kind::Rationals:
      return {{"kind", "rationals"}};
    case Kind::ModM:
      return {{"kind", "mod-m"}, {"m", modulus_.get_str()}};
    case Kind::PLocal:
      return {{"kind", "p-local-rationals"}, {"p", modulus_.get_si()}};
    case Kind::Polynomial:
      return {{"kind", "polynomial"}, {"base", scalar_->to_json()}, {"vars", vars_}};
  }
  return {};
}

RingSpecPtr RingSpec::from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "integers") return integers();
  if (kind == "rationals") return rationals();
  if (kind == "mod-m") {
    const auto& m = j.at("m");
    return mod(m.is_string() ? Int(m.get<std::string>()) : Int(m.get<long>()));
  }
  if (kind == "p-local-rationals") return plocal(j.at("p").get<long>());
  if (kind == "polynomial")
    return polynomial(from_json(j.at("base")), j.at("vars").get<std::vector<std::string>>());
  throw std::invalid_argument("unknown ring kind '" + kind + "'");
}

RingSpecPtr RingSpec::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto bracket = s.find('[');
  if (bracket != std::string::npos) {
    if (s.back() != ']') throw std::invalid_argument("bad ring '" + text + "'");
    auto base = parse(s.substr(0, bracket));
    std::vector<std::string> vars;
    std::stringstream ss(s.substr(bracket + 1, s.size() - bracket - 2));
    for (std::string v; std::getline(ss, v, ',');) vars.push_back(v);
    return polynomial(base, vars);
  }
  if (s == "ZZ" || s == "Z") return integers();
  if (s == "QQ" || s == "Q") return rationals();
  for (const char* pre : {"ZZ/", "Z/"}) {
    std::string p(pre);
    if (s.rfind(p, 0) == 0) return mod(Int(s.substr(p.size())));
  }
  for (const char* pre : {"ZZ_(", "Z_("}) {
    std::string p(pre);
    if (s.rfind(p, 0) == 0 && s.back() == ')') return plocal(std::stol(s.substr(p.size(), s.size() - p.size() - 1)));
  }
  if (s.rfind("GF", 0) == 0) return mod(Int(s.substr(2)));
  throw std::invalid_argument("unknown ring '" + text + "'");
}

// ---------------------------------------------------------------- RingElem

RingElem RingElem::zero(const RingSpecPtr& spec) {
  RingElem e;
  e.spec_ = spec;
  return e;
}

RingElem RingElem::one(const RingSpecPtr& spec) { return from_int(spec, 1); }

RingElem RingElem::from_int(const RingSpecPtr& spec, const Int& n) { return from_rat(spec, Rat(n)); }

RingElem RingElem::from_rat(const RingSpecPtr& spec, const Rat& q) {
  RingElem e;
  e.spec_ = spec;
  Rat c = spec->canon(q);
  if (spec->is_polynomial())
    e.p_ = Poly(c);
  else
    e.s_ = c;
  return e;
}

RingElem RingElem::from_poly(const RingSpecPtr& spec, const Poly& p) {
  if (!spec->is_polynomial()) {
    if (!p.is_constant()) throw MismatchError("non-constant polynomial in scalar ring " + spec->to_string());
    return from_rat(spec, p.constant_term());
  }
  RingElem e;
  e.spec_ = spec;
  e.p_ = p;
  for (VarId v : p.variables())
    if (v >= spec->vars().size()) throw MismatchError("variable id out of range for " + spec->to_string());
  e.normalize();
  return e;
}

RingElem RingElem::var(const RingSpecPtr& spec, std::size_t index) {
  if (!spec->is_polynomial() || index >= spec->vars().size())
    throw MismatchError("no variable #" + std::to_string(index) + " in " + spec->to_string());
  RingElem e;
  e.spec_ = spec;
  e.p_ = Poly::var(static_cast<VarId>(index));
  return e;
}

RingElem RingElem::var(const RingSpecPtr& spec, const std::string& name) {
  auto i = spec->var_index(name);
  if (!i) throw MismatchError("no variable " + name + " in " + spec->to_string());
  return var(spec, *i);
}

void RingElem::normalize() {
  if (spec_->is_polynomial()) {
    auto k = spec_->scalar()->kind();
    if (k == RingSpec::Kind::Rationals) return;
    if (k == RingSpec::Kind::Integers) {
      if (auto bad = p_.non_integral_term())
        throw IntegralityError("non-integral coefficient " + wittlab::to_string(bad->second));
      return;
    }
    const auto& sc = spec_->scalar();
    p_ = p_.map_coeffs([&](const Rat& c) { return sc->canon(c); });
  } else if (spec_->kind() == RingSpec::Kind::ModM) {
    s_ = spec_->canon(s_);
  }
}

bool RingElem::is_zero() const { return is_poly() ? p_.is_zero() : s_ == 0; }

bool RingElem::is_one() const {
  if (is_poly()) return p_.is_constant() && p_.constant_term() == 1;
  return s_ == 1;
}

std::optional<Rat> RingElem::as_constant() const {
  if (!is_poly()) return s_;
  if (p_.is_constant()) return p_.constant_term();
  return std::nullopt;
}

void RingElem::check_same(const RingElem& o) const {
  if (spec_ != o.spec_ && !(spec_ && o.spec_ && *spec_ == *o.spec_))
    throw MismatchError("ring mismatch: " + (spec_ ? spec_->to_string() : "<none>") + " vs " +
                        (o.spec_ ? o.spec_->to_string() : "<none>"));
}

RingElem& RingElem::operator+=(const RingElem& o) {
  check_same(o);
  if (is_poly()) {
    p_ += o.p_;
    if (spec_->scalar()->kind() == RingSpec::Kind::ModM) normalize();
  } else {
    s_ += o.s_;
    if (spec_->kind() == RingSpec::Kind::ModM && s_ >= spec_->modulus()) s_ -= spec_->modulus();
  }
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
  check_same(o);
  if (is_poly()) {
    p_ -= o.p_;
    if (spec_->scalar()->kind() == RingSpec::Kind::ModM) normalize();
  } else {
    s_ -= o.s_;
    if (spec_->kind() == RingSpec::Kind::ModM && s_ < 0) s_ += spec_->modulus();
  }
  return *this;
}

RingElem& RingElem::operator*=(const RingElem& o) {
  check_same(o);
  if (is_poly()) {
    p_ = p_ * o.p_;
    if (spec_->scalar()->kind() == RingSpec::Kind::ModM) normalize();
  } else {
    s_ *= o.s_;
    if (spec_->kind() == RingSpec::Kind::ModM) normalize();
  }
  return *this;
}

RingElem RingElem::operator-() const { return zero(spec_) - *this; }

RingElem RingElem::pow(unsigned long e) const {
  if (!is_poly()) {
    if (spec_->kind() == RingSpec::Kind::ModM) {
      Int r;
      Int base = s_.get_num();
      mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), e, spec_->modulus().get_mpz_t());
      return from_int(spec_, r);
    }
    RingElem out = *this;
    out.s_ = rpow(s_, e);
    return out;
  }
  RingElem result = one(spec_), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

RingElem RingElem::scaled(const Int& n) const { return *this * from_int(spec_, n); }

bool RingElem::operator==(const RingElem& o) const {
  if (spec_ != o.spec_ && !(spec_ && o.spec_ && *spec_ == *o.spec_)) return false;
  return is_poly() ? p_ == o.p_ : s_ == o.s_;
}

namespace {

bool scalar_divisible(const RingSpec& sc, const Rat& s, const Int& d) {
  if (d == 0) return s == 0;
  switch (sc.kind()) {
    case RingSpec::Kind::Integers:
      return mpz_divisible_p(s.get_num_mpz_t(), d.get_mpz_t()) != 0;
    case RingSpec::Kind::Rationals:
      return true;
    case RingSpec::Kind::ModM: {
      Int g = gcd(d, sc.modulus());
      return mpz_divisible_p(s.get_num_mpz_t(), g.get_mpz_t()) != 0;
    }
    case RingSpec::Kind::PLocal: {
      if (s == 0) return true;
      long p = sc.prime();
      long vd = 0;
      Int dd = abs(d);
      while (mpz_divisible_ui_p(dd.get_mpz_t(), p)) {
        dd /= p;
        ++vd;
      }
      Int num = abs(s.get_num());
      for (long i = 0; i < vd; ++i) {
        if (!mpz_divisible_ui_p(num.get_mpz_t(), p)) return false;
        num /= p;
      }
      return true;
    }
    case RingSpec::Kind::Polynomial:
      break;
  }
  return false;
}

Rat scalar_div(const RingSpec& sc, const Rat& s, const Int& d) {
  if (!scalar_divisible(sc, s, d))
    throw IntegralityError(wittlab::to_string(s) + " is not divisible by " + d.get_str() + " in " + sc.to_string());
  if (sc.kind() == RingSpec::Kind::ModM) {
    Int g = gcd(d, sc.modulus());
    Int mg = sc.modulus() / g;
    Int q = Int(s.get_num()) / g;
    if (mg == 1) return Rat(0);
    return Rat(mod_reduce(q * mod_inverse(mod_reduce(d / g, mg), mg), mg));
  }
  Rat r = s / Rat(d);
  r.canonicalize();
  return r;
}

}  // namespace

bool RingElem::divisible_by(const Int& d) const {
  const RingSpec& sc = *(is_poly() ? spec_->scalar() : spec_);
  if (!is_poly()) return scalar_divisible(sc, s_, d);
  for (const auto& [m, c] : p_.terms())
    if (!scalar_divisible(sc, c, d)) return false;
  return true;
}

RingElem RingElem::exact_div(const Int& d) const {
  const RingSpec& sc = *(is_poly() ? spec_->scalar() : spec_);
  RingElem out = zero(spec_);
  if (!is_poly()) {
    out.s_ = scalar_div(sc, s_, d);
    return out;
  }
  for (const auto& [m, c] : p_.terms()) out.p_.add_term(m, scalar_div(sc, c, d));
  return out;
}

std::string RingElem::to_string() const {
  if (!spec_) return "<unset>";
  if (!is_poly()) return wittlab::to_string(s_);
  const auto& names = spec_->vars();
  return p_.to_string([&](VarId v) { return names.at(v); });
}

nlohmann::json RingElem::to_json() const {
  if (!is_poly()) return wittlab::to_string(s_);
  nlohmann::json terms = nlohmann::json::array();
  const std::size_t nv = spec_->vars().size();
  for (const auto& [m, c] : p_.sorted_terms()) {
    std::vector<std::uint32_t> exps(nv, 0);
    for (const auto& [v, e] : m.factors()) exps[v] = e;
    terms.push_back({{"exps", exps}, {"coeff", wittlab::to_string(c)}});
  }
  return terms;
}

RingElem RingElem::from_json(const RingSpecPtr& spec, const nlohmann::json& j) {
  if (j.is_string()) return parse(spec, j.get<std::string>());
  if (j.is_number_integer()) return from_int(spec, Int(j.get<long>()));
  if (j.is_array()) {
    Poly p;
    for (const auto& t : j) {
      auto exps = t.at("exps").get<std::vector<std::uint32_t>>();
      std::vector<VarExp> fs;
      for (std::size_t i = 0; i < exps.size(); ++i) fs.emplace_back(static_cast<VarId>(i), exps[i]);
      p.add_term(Monomial::from_factors(fs), parse_rat(t.at("coeff").get<std::string>()));
    }
    return from_poly(spec, p);
  }
  throw std::invalid_argument("cannot read ring element from JSON " + j.dump());
}

// Recursive-descent parser for ring element expressions.
namespace {

class ExprParser {
 public:
  ExprParser(const RingSpecPtr& spec, const std::string& text) : spec_(spec), s_(text) {}

  RingElem run() {
    RingElem r = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("cannot parse '" + s_ + "': " + why);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  RingElem expr() {
    RingElem acc = term();
    while (true) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }
  RingElem term() {
    RingElem acc = unary();
    while (eat('*')) acc *= unary();
    return acc;
  }
  RingElem unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  RingElem power() {
    RingElem base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) fail("exponent expected");
      return base.pow(std::stoul(s_.substr(start, i_ - start)));
    }
    return base;
  }
  RingElem atom() {
    skip();
    if (eat('(')) {
      RingElem r = expr();
      if (!eat(')')) fail("')' expected");
      return r;
    }
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      Int num(s_.substr(start, i_ - start));
      if (i_ < s_.size() && s_[i_] == '/') {
        ++i_;
        std::size_t ds = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (ds == i_) fail("denominator expected");
        Rat q(num, Int(s_.substr(ds, i_ - ds)));
        q.canonicalize();
        return RingElem::from_rat(spec_, q);
      }
      return RingElem::from_int(spec_, num);
    }
    if (i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
      std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      std::string name = s_.substr(start, i_ - start);
      if (!spec_->is_polynomial() || !spec_->var_index(name)) fail("unknown variable " + name);
      return RingElem::var(spec_, name);
    }
    fail("operand expected");
  }

  RingSpecPtr spec_;
  std::string s_;
  std::size_t i_ = 0;
};

}  // namespace

RingElem RingElem::parse(const RingSpecPtr& spec, const std::string& text) { return ExprParser(spec, text).run(); }

RingElem eval_in(const RingSpecPtr& spec, const Poly& p, const std::function<RingElem(VarId)>& value) {
  return evaluate<RingElem>(
      p, value, [&](const Rat& c) { return RingElem::from_rat(spec, c); }, RingElem::zero(spec));
}

RingElem poly_eval(const RingElem& p, const std::map<std::string, RingElem>& assignment) {
  RingSpecPtr target = assignment.empty() ? p.spec()->scalar() : assignment.begin()->second.spec();
  for (const auto& [name, v] : assignment)
    if (*v.spec() != *target) throw MismatchError("assignment values live in different rings");
  if (!p.is_poly()) return RingElem::from_rat(target ? target : p.spec(), p.scalar());
  const auto& names = p.spec()->vars();
  return eval_in(target, p.poly(), [&](VarId v) {
    auto it = assignment.find(names.at(v));
    if (it == assignment.end()) throw std::invalid_argument("no value assigned to " + names.at(v));
    return it->second;
  });
}

IntegralityVerdict rational_integrality(const Poly& p, const NameFn& name) {
  IntegralityVerdict v;
  if (auto bad = p.non_integral_term()) {
    v.integral = false;
    v.witness = bad->first.is_one() ? "1" : monomial_to_string(bad->first, name);
    v.denominator = bad->second.get_den();
  }
  return v;
}

IntegralityVerdict rational_integrality(const RingElem& x) {
  if (!x.is_poly()) return rational_integrality(Poly(x.scalar()));
  const auto& names = x.spec()->vars();
  return rational_integrality(x.poly(), [&](VarId v) { return names.at(v); });
}

FrobeniusFamily FrobeniusFamily::identity(const RingSpecPtr& spec) {
  return {spec, [](long, const RingElem& x) { return x; }};
}

FrobeniusFamily FrobeniusFamily::power_on_vars(const RingSpecPtr& spec) {
  return {spec, [spec](long n, const RingElem& x) {
            if (!x.is_poly()) return x;
            Poly out;
            for (const auto& [m, c] : x.poly().terms()) {
              std::vector<VarExp> fs;
              for (const auto& [v, e] : m.factors()) fs.emplace_back(v, e * static_cast<std::uint32_t>(n));
              out.add_term(Monomial::from_factors(fs), c);
            }
            return RingElem::from_poly(spec, out);
          }};
}

Report frobenius_family_check(const FrobeniusFamily& f, const std::vector<RingElem>& samples, long bound) {
  Report rep;
  bool id_ok = true;
  for (const auto& a : samples)
    if (f.phi(1, a) != a) {
      rep.add("phi_1 = id", false, "phi_1(" + a.to_string() + ") = " + f.phi(1, a).to_string());
      id_ok = false;
      break;
    }
  if (id_ok) rep.add("phi_1 = id", true);
  for (long m = 1; m <= bound; ++m) {
    for (long n = 1; n <= bound; ++n) {
      for (const auto& a : samples) {
        RingElem lhs = f.phi(m, f.phi(n, a)), rhs = f.phi(m * n, a);
        if (lhs != rhs) {
          rep.add("phi_m phi_n = phi_mn", false,
                  "phi_" + std::to_string(m) + " phi_" + std::to_string(n) + " != phi_" + std::to_string(m * n) +
                      " at " + a.to_string());
          return rep;
        }
      }
    }
  }
  rep.add("phi_m phi_n = phi_mn", true);
  for (long p = 2; p <= bound; ++p) {
    if (!is_prime(p)) continue;
    for (const auto& a : samples) {
      RingElem d = f.phi(p, a) - a.pow(static_cast<unsigned long>(p));
      if (!d.divisible_by(p)) {
        rep.add("phi_p(a) = a^p mod p", false,
                "p=" + std::to_string(p) + " a=" + a.to_string() + ": " + d.to_string());
        return rep;
      }
    }
  }
  rep.add("phi_p(a) = a^p mod p", true);
  return rep;
}

}  // namespace wittlab
