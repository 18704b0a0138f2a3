#include "wittlab/universal.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

namespace wittlab {

namespace fs = std::filesystem;

Poly witt_polynomial(long n, const Flavor& flavor, char letter) {
  Poly w;
  if (flavor.padic) {
    Int pi = 1;
    for (long i = 0; i <= n; ++i, pi *= flavor.p) {
      auto e = static_cast<std::uint32_t>(ipow(flavor.p, static_cast<unsigned long>(n - i)).get_ui());
      w.add_term(Monomial::of(var::make(letter, static_cast<std::uint32_t>(i)), e), Rat(pi));
    }
    return w;
  }
  for (long d : divisors(n))
    w.add_term(Monomial::of(var::make(letter, static_cast<std::uint32_t>(d)), static_cast<std::uint32_t>(n / d)),
               Rat(d));
  return w;
}

StructKind StructKind::parse(const std::string& s) {
  static const std::map<std::string, Tag> names = {
      {"add", Add},     {"mul", Mul},     {"neg", Neg},   {"frobenius", Frobenius},
      {"nmult", NMult}, {"ppower", PPower}, {"unit", Unit}, {"zero", Zero}};
  std::string head = s;
  long param = 0;
  auto open = s.find('(');
  if (open != std::string::npos) {
    if (s.back() != ')') throw std::invalid_argument("bad kind '" + s + "'");
    head = s.substr(0, open);
    param = std::stol(s.substr(open + 1, s.size() - open - 2));
  }
  auto it = names.find(head);
  if (it == names.end()) throw std::invalid_argument("unknown kind '" + s + "'");
  StructKind k{it->second, param};
  bool needs = k.tag == Frobenius || k.tag == NMult || k.tag == PPower;
  if (needs && param < 1) throw std::invalid_argument("kind '" + head + "' needs a positive parameter, e.g. " + head + "(2)");
  if (!needs && open != std::string::npos) throw std::invalid_argument("kind '" + head + "' takes no parameter");
  return k;
}

std::string StructKind::to_string() const {
  switch (tag) {
    case Add: return "add";
    case Mul: return "mul";
    case Neg: return "neg";
    case Frobenius: return "frobenius(" + std::to_string(param) + ")";
    case NMult: return "nmult(" + std::to_string(param) + ")";
    case PPower: return "ppower(" + std::to_string(param) + ")";
    case Unit: return "unit";
    case Zero: return "zero";
  }
  return "?";
}

int StructKind::arity() const {
  switch (tag) {
    case Add:
    case Mul:
      return 2;
    case Unit:
    case Zero:
      return 0;
    default:
      return 1;
  }
}

const Poly& UnivFamily::at(long index) const {
  for (std::size_t i = 0; i < indices.size(); ++i)
    if (indices[i] == index) return polys[i];
  throw std::out_of_range("family " + kind + " has no index " + std::to_string(index));
}

namespace {

nlohmann::json poly_terms_json(const Poly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.sorted_terms()) {
    nlohmann::json mono = nlohmann::json::array();
    for (const auto& [v, e] : m.factors()) mono.push_back({var::name(v), e});
    terms.push_back({{"m", mono}, {"c", to_string(c)}});
  }
  return terms;
}

VarId parse_var_name(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  if (name.size() == 1) return var::make(name[0]);
  return var::make(name[0], static_cast<std::uint32_t>(std::stoul(name.substr(1))));
}

Poly poly_from_terms_json(const nlohmann::json& terms) {
  Poly p;
  for (const auto& t : terms) {
    std::vector<VarExp> fs;
    for (const auto& f : t.at("m")) fs.emplace_back(parse_var_name(f.at(0).get<std::string>()), f.at(1).get<std::uint32_t>());
    p.add_term(Monomial::from_factors(fs), parse_rat(t.at("c").get<std::string>()));
  }
  return p;
}

}  // namespace

nlohmann::json UnivFamily::to_json() const {
  nlohmann::json j;
  j["kind"] = kind;
  j["flavor"] = flavor.padic ? "p-adic" : "big";
  if (flavor.padic) {
    j["p"] = flavor.p;
    j["length"] = indices.size();
  }
  j["nest"] = indices;
  j["input_nest"] = input_indices;
  j["integral"] = integral;
  nlohmann::json ps = nlohmann::json::array();
  for (std::size_t i = 0; i < polys.size(); ++i)
    ps.push_back({{"index", indices[i]}, {"text", polys[i].to_string()}, {"terms", poly_terms_json(polys[i])}});
  j["polys"] = ps;
  return j;
}

UnivFamily UnivFamily::from_json(const nlohmann::json& j) {
  UnivFamily f;
  f.kind = j.at("kind").get<std::string>();
  if (j.at("flavor").get<std::string>() == "p-adic") f.flavor = Flavor::p_adic(j.at("p").get<long>());
  f.indices = j.at("nest").get<std::vector<long>>();
  f.input_indices = j.at("input_nest").get<std::vector<long>>();
  f.integral = j.at("integral").get<bool>();
  for (const auto& p : j.at("polys")) f.polys.push_back(poly_from_terms_json(p.at("terms")));
  if (f.polys.size() != f.indices.size()) throw std::invalid_argument("family JSON has mismatched index and poly counts");
  return f;
}

namespace {

// Memoized powers of already-solved coordinates.
class PowerTable {
 public:
  const Poly& get(std::size_t slot, const Poly& base, unsigned long e) {
    auto& row = table_[slot];
    auto it = row.find(e);
    if (it != row.end()) return it->second;
    Poly r;
    if (e == 1) {
      r = base;
    } else if (e % 2 == 0) {
      const Poly& h = get(slot, base, e / 2);
      r = h * h;
    } else {
      r = get(slot, base, e - 1) * base;
    }
    return row.emplace(e, std::move(r)).first->second;
  }

 private:
  std::map<std::size_t, std::map<unsigned long, Poly>> table_;
};

}  // namespace

UnivFamily solve_ghost(const std::vector<Poly>& targets, const Nest& nest, const Flavor& flavor,
                       bool require_integral, const std::string& kind) {
  const std::size_t len = nest.size();
  if (targets.size() != len) throw std::invalid_argument("solve_ghost: one target per nest index required");
  UnivFamily fam;
  fam.kind = kind;
  fam.flavor = flavor;
  fam.polys.resize(len);
  PowerTable powers;
  std::vector<Poly> lower(len);  // sum of the already known terms of w_n(s)
  for (std::size_t k = 0; k < len; ++k) {
    Poly acc;
    Int scale;
    if (flavor.padic) {
      fam.indices.push_back(static_cast<long>(k));
      Int pj = 1;
      for (std::size_t j = 0; j < k; ++j, pj *= flavor.p) {
        auto e = ipow(flavor.p, k - j).get_ui();
        acc += powers.get(j, fam.polys[j], e) * Rat(pj);
      }
      scale = pj;
    } else {
      long n = nest.indices()[k];
      fam.indices.push_back(n);
      for (long d : divisors(n)) {
        if (d == n) break;
        auto slot = static_cast<std::size_t>(nest.position(d));
        acc += powers.get(slot, fam.polys[slot], static_cast<unsigned long>(n / d)) * Rat(d);
      }
      scale = n;
    }
    fam.polys[k] = (targets[k] - acc) * Rat(1, scale);
    lower[k] = std::move(acc);
    // Ghost identity: the recombined w_n must reproduce the target exactly.
    if (lower[k] + fam.polys[k] * Rat(scale) != targets[k])
      throw std::logic_error("ghost identity failed at index " + std::to_string(fam.indices[k]));
  }
  fam.integral = true;
  for (std::size_t k = 0; k < len; ++k) {
    if (auto bad = fam.polys[k].non_integral_term()) {
      fam.integral = false;
      if (require_integral)
        throw IntegralityError(kind + " family not integral at index " + std::to_string(fam.indices[k]) + ": coefficient " +
                               to_string(bad->second) + " of " + monomial_to_string(bad->first));
      break;
    }
  }
  return fam;
}

namespace {

std::vector<Poly> ghost_targets(const StructKind& kind, const Flavor& flavor, const std::vector<long>& idx) {
  std::vector<Poly> t;
  for (long n : idx) {
    Poly wx = witt_polynomial(n, flavor, 'X');
    switch (kind.tag) {
      case StructKind::Add:
        t.push_back(wx + witt_polynomial(n, flavor, 'Y'));
        break;
      case StructKind::Mul:
        t.push_back(wx * witt_polynomial(n, flavor, 'Y'));
        break;
      case StructKind::Neg:
        t.push_back(-wx);
        break;
      case StructKind::Unit:
        t.push_back(Poly(1));
        break;
      case StructKind::Zero:
        t.push_back(Poly());
        break;
      case StructKind::NMult:
        t.push_back(wx * Rat(kind.param));
        break;
      case StructKind::PPower:
        t.push_back(wx.pow(static_cast<unsigned long>(kind.param)));
        break;
      case StructKind::Frobenius:
        if (flavor.padic) {
          long k = valuation(kind.param, flavor.p);
          t.push_back(witt_polynomial(n + k, flavor, 'X'));
        } else {
          t.push_back(witt_polynomial(kind.param * n, flavor, 'X'));
        }
        break;
    }
  }
  return t;
}

}  // namespace

UnivFamily compute_structure_polys(const StructKind& kind, const Flavor& flavor, const Nest& nest) {
  std::vector<long> out_idx, in_idx;
  Nest solve_nest = nest;
  if (flavor.padic) {
    if (!is_prime(flavor.p)) throw std::invalid_argument("p-adic flavor needs a prime");
    long len = static_cast<long>(nest.size());
    for (long i = 0; i < len; ++i) out_idx.push_back(i);
    long in_len = len;
    if (kind.tag == StructKind::Frobenius) {
      long m = kind.param, k = valuation(m, flavor.p);
      if (ipow(flavor.p, static_cast<unsigned long>(k)) != m)
        throw std::invalid_argument("p-adic Frobenius needs a power of p");
      in_len += k;
    }
    for (long i = 0; i < in_len; ++i) in_idx.push_back(i);
    solve_nest = Nest::ppow(flavor.p, static_cast<int>(len));
  } else {
    out_idx = nest.indices();
    in_idx = kind.tag == StructKind::Frobenius ? nest.dilated(kind.param).indices() : nest.indices();
  }
  if ((kind.tag == StructKind::NMult || kind.tag == StructKind::PPower || kind.tag == StructKind::Frobenius) &&
      kind.param < 1)
    throw std::invalid_argument("kind parameter must be positive");
  UnivFamily fam = solve_ghost(ghost_targets(kind, flavor, out_idx), solve_nest, flavor, true, kind.to_string());
  fam.input_indices = kind.arity() == 0 ? std::vector<long>{} : in_idx;
  return fam;
}

std::string cache_dir() {
  if (const char* env = std::getenv("WITTLAB_CACHE"); env && *env) return env;
  if (const char* home = std::getenv("HOME"); home && *home) return std::string(home) + "/.cache/wittlab";
  return {};
}

std::string cache_path(const StructKind& kind, const Flavor& flavor, const Nest& nest) {
  std::string name = kind.to_string() + "_" + (flavor.padic ? "padic" + std::to_string(flavor.p) : "big") + "_";
  if (flavor.padic)
    name += "len" + std::to_string(nest.size());
  else
    name += nest.to_string();
  for (char& c : name)
    if (c == ',')
      c = '-';
    else if (c == '(' || c == ')')
      c = '_';
  std::string dir = cache_dir();
  return dir.empty() ? std::string() : dir + "/" + name + ".json";
}

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, UnivFamilyPtr>& memory_cache() {
  static std::map<std::string, UnivFamilyPtr> c;
  return c;
}

std::string memory_key(const StructKind& kind, const Flavor& flavor, const Nest& nest) {
  return kind.to_string() + "|" + flavor.to_string() + "|" +
         (flavor.padic ? std::to_string(nest.size()) : nest.to_string());
}

}  // namespace

void clear_memory_cache() {
  std::lock_guard<std::mutex> lock(cache_mutex());
  memory_cache().clear();
}

UnivFamilyPtr structure_polys(const StructKind& kind, const Flavor& flavor, const Nest& nest) {
  const std::string key = memory_key(kind, flavor, nest);
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = memory_cache().find(key);
    if (it != memory_cache().end()) return it->second;
  }
  std::shared_ptr<UnivFamily> fam;
  const std::string path = cache_path(kind, flavor, nest);
  if (!path.empty() && fs::exists(path)) {
    try {
      std::ifstream in(path);
      fam = std::make_shared<UnivFamily>(UnivFamily::from_json(nlohmann::json::parse(in)));
    } catch (const std::exception&) {
      fam.reset();  // unreadable cache entry: recompute and overwrite
    }
  }
  if (!fam) {
    fam = std::make_shared<UnivFamily>(compute_structure_polys(kind, flavor, nest));
    if (!path.empty()) {
      std::error_code ec;
      fs::create_directories(fs::path(path).parent_path(), ec);
      if (!ec) {
        const std::string tmp = path + ".tmp";
        {
          std::ofstream out(tmp);
          out << fam->to_json().dump();
        }
        fs::rename(tmp, path, ec);
      }
    }
  }
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto [it, inserted] = memory_cache().emplace(key, fam);
  return it->second;
}

std::vector<Poly> teichmuller_sum_polys(long maxd) {
  if (maxd < 1) throw std::invalid_argument("maxd must be at least 1");
  std::vector<Poly> targets;
  for (long n = 1; n <= maxd; ++n)
    targets.push_back(Poly::var(var::make('X'), static_cast<std::uint32_t>(n)) +
                      Poly::var(var::make('Y'), static_cast<std::uint32_t>(n)));
  return solve_ghost(targets, Nest::range(maxd), Flavor::big(), true, "teichmuller-sum").polys;
}

std::vector<Poly> teichmuller_sum_polys_ppow(long p, int len) {
  Nest nest = Nest::ppow(p, len);
  std::vector<Poly> targets;
  for (long n : nest.indices())
    targets.push_back(Poly::var(var::make('X'), static_cast<std::uint32_t>(n)) +
                      Poly::var(var::make('Y'), static_cast<std::uint32_t>(n)));
  return solve_ghost(targets, nest, Flavor::big(), true, "teichmuller-sum").polys;
}

// ------------------------------------------------------------ congruences

std::vector<std::string> congruence_names() {
  return {"frobenius-pth-power", "nmult-shift", "frobenius-leading", "pth-power-substitution", "ppower-low-terms"};
}

namespace {

bool is_ppow(long n, long p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

// Every monomial of q involves some X_d with d < bound.
bool in_lower_ideal(const Poly& q, long bound) {
  for (const auto& [m, c] : q.terms()) {
    bool hit = false;
    for (const auto& [v, e] : m.factors())
      if (var::letter(v) == 'X' && static_cast<long>(var::index(v)) < bound) hit = true;
    if (!hit) return false;
  }
  return true;
}

std::string witness_of(const Poly& diff, const Int& mod) {
  for (const auto& [m, c] : diff.sorted_terms())
    if (c.get_den() != 1 || !mpz_divisible_p(c.get_num_mpz_t(), mod.get_mpz_t()))
      return "coefficient " + to_string(c) + " of " + (m.is_one() ? std::string("1") : monomial_to_string(m));
  return {};
}

void check_divisible(Report& rep, const std::string& name, const Poly& diff, const Int& mod) {
  bool ok = diff.divisible_by(mod);
  rep.add(name, ok, ok ? std::string() : witness_of(diff, mod));
}

}  // namespace

Report congruence_suite(const UnivFamily& fam, const std::string& which, long p) {
  Report rep;
  const bool padic = fam.flavor.padic;
  auto X_ = [](long n) { return Poly::var(X(static_cast<std::uint32_t>(n))); };
  auto sp = [](long x) { return std::to_string(x); };
  if (which == "frobenius-pth-power") {
    for (std::size_t k = 0; k < fam.indices.size(); ++k) {
      long n = fam.indices[k];
      if (!padic && !is_ppow(n, p)) continue;
      check_divisible(rep, "f_" + sp(n) + " == X_" + sp(n) + "^" + sp(p) + " mod " + sp(p),
                      fam.polys[k] - X_(n).pow(static_cast<unsigned long>(p)), p);
    }
  } else if (which == "nmult-shift") {
    for (std::size_t k = 0; k < fam.indices.size(); ++k) {
      long n = fam.indices[k];
      if (!padic && !is_ppow(n, p)) continue;
      bool first = padic ? n == 0 : n == 1;
      if (first) {
        check_divisible(rep, "P_" + sp(n) + " == 0 mod " + sp(p), fam.polys[k], p);
      } else {
        long prev = padic ? n - 1 : n / p;
        check_divisible(rep, "P_" + sp(n) + " == X_" + sp(prev) + "^" + sp(p) + " mod " + sp(p),
                        fam.polys[k] - X_(prev).pow(static_cast<unsigned long>(p)), p);
      }
    }
  } else if (which == "frobenius-leading") {
    StructKind k = StructKind::parse(fam.kind);
    if (k.tag != StructKind::Frobenius) throw std::invalid_argument("frobenius-leading needs a Frobenius family");
    long m = k.param;
    for (std::size_t i = 0; i < fam.indices.size(); ++i) {
      long r = fam.indices[i];
      long top = padic ? r + valuation(m, fam.flavor.p) : m * r;
      Poly diff = fam.polys[i] - X_(top) * Rat(m);
      bool ok = in_lower_ideal(diff, top);
      rep.add("F_" + sp(r) + " == " + sp(m) + "*X_" + sp(top) + " mod lower", ok, ok ? "" : diff.to_string());
    }
  } else if (which == "pth-power-substitution") {
    constexpr std::size_t kMaxTerms = 300;
    for (std::size_t k = 0; k < fam.indices.size(); ++k) {
      const Poly& psi = fam.polys[k];
      if (psi.size() > kMaxTerms) continue;
      Poly sub;
      for (const auto& [m, c] : psi.terms()) {
        std::vector<VarExp> fs;
        for (const auto& [v, e] : m.factors()) fs.emplace_back(v, e * static_cast<std::uint32_t>(p));
        sub.add_term(Monomial::from_factors(fs), c);
      }
      check_divisible(rep, "psi_" + sp(fam.indices[k]) + "(X^p) == psi(X)^p mod " + sp(p),
                      sub - psi.pow(static_cast<unsigned long>(p)), p);
    }
  } else if (which == "ppower-low-terms") {
    if (!padic) throw std::invalid_argument("ppower-low-terms applies to p-adic families");
    if (!fam.polys.empty()) {
      Poly d0 = fam.polys[0] - X_(0).pow(static_cast<unsigned long>(p));
      rep.add("M_0 = X_0^" + sp(p), d0.is_zero(), d0.is_zero() ? "" : d0.to_string());
    }
    // Isobaric forms; for p = 2 the k = p binomial term survives as well.
    const auto up = static_cast<std::uint32_t>(p);
    if (fam.polys.size() > 1) {
      Poly want = X_(0).pow(up * up - up) * X_(1) * Rat(p);
      if (p == 2) want += X_(1).pow(2) * Rat(2);
      check_divisible(rep, "M_1 == p X_0^{p^2-p} X_1 mod p^2", fam.polys[1] - want, Int(p * p));
    }
    if (fam.polys.size() > 2) {
      Poly want = X_(0).pow(up * up * up - up * up) * X_(1).pow(up);
      if (p == 2) want += X_(1).pow(4);
      check_divisible(rep, "M_2 == X_0^{p^3-p^2} X_1^p mod p", fam.polys[2] - want, p);
    }
  } else {
    throw std::invalid_argument("unknown congruence set '" + which + "'");
  }
  return rep;
}

// ----------------------------------------------------- functional equation

std::vector<Rat> fe_series(const FEIngredients& ing, const std::vector<Rat>& g, long order) {
  if (order < 1) throw std::invalid_argument("order must be at least 1");
  if (!g.empty() && g[0] != 0) throw std::invalid_argument("g must have zero constant term");
  std::vector<Rat> a(static_cast<std::size_t>(order + 1), Rat(0));
  auto sigma_pow = [&](Rat x, long i) {
    if (!ing.sigma) return x;
    for (long k = 0; k < i; ++k) x = ing.sigma(x);
    return x;
  };
  for (long n = 1; n <= order; ++n) {
    Rat v = static_cast<std::size_t>(n) < g.size() ? g[static_cast<std::size_t>(n)] : Rat(0);
    long qi = ing.q;
    for (long i = 1; static_cast<std::size_t>(i) <= ing.s.size() && qi <= n; ++i, qi *= ing.q) {
      if (n % qi != 0 || ing.s[static_cast<std::size_t>(i - 1)] == 0) continue;
      v += ing.s[static_cast<std::size_t>(i - 1)] * sigma_pow(a[static_cast<std::size_t>(n / qi)], i);
    }
    a[static_cast<std::size_t>(n)] = v;
  }
  return a;
}

std::vector<Rat> series_reversion(const std::vector<Rat>& f, long order) {
  if (f.size() < 2 || f[0] != 0 || f[1] == 0) throw std::invalid_argument("series needs f(0) = 0 and f'(0) != 0");
  const auto N = static_cast<std::size_t>(order);
  auto coef = [&](std::size_t i) { return i < f.size() ? f[i] : Rat(0); };
  std::vector<Rat> b(N + 1, Rat(0));
  b[1] = 1 / f[1];
  for (std::size_t n = 2; n <= N; ++n) {
    // coefficient of Z^n in f(b(Z)) with b_n = 0
    std::vector<Rat> pw(N + 1, Rat(0)), cur(N + 1, Rat(0));
    for (std::size_t i = 1; i <= N; ++i) pw[i] = b[i];
    Rat total = coef(1) * pw[n];
    for (std::size_t k = 2; k <= n; ++k) {
      std::fill(cur.begin(), cur.end(), Rat(0));
      for (std::size_t i = 1; i <= N; ++i) {
        if (pw[i] == 0) continue;
        for (std::size_t j = 1; i + j <= N; ++j)
          if (b[j] != 0) cur[i + j] += pw[i] * b[j];
      }
      pw.swap(cur);
      total += coef(k) * pw[n];
    }
    b[n] = -total / f[1];
  }
  return b;
}

namespace {

Poly truncate_degree(const Poly& p, long order) {
  Poly out;
  for (const auto& [m, c] : p.terms())
    if (static_cast<long>(m.degree()) <= order) out.add_term(m, c);
  return out;
}

}  // namespace

FormalGroup fe_formal_group(const std::vector<Rat>& f, long order, const RingSpecPtr& subring) {
  if (f.size() < 2 || f[0] != 0) throw std::invalid_argument("f must have zero constant term");
  if (!subring->is_unit(Int(f[1].get_num())) || !subring->is_unit(Int(f[1].get_den())))
    throw std::invalid_argument("linear coefficient of f is not a unit of " + subring->to_string());
  std::vector<Rat> inv = series_reversion(f, order);
  const VarId x = var::make('X'), y = var::make('Y');
  Poly z;
  for (std::size_t n = 1; n < f.size() && static_cast<long>(n) <= order; ++n) {
    z.add_term(Monomial::of(x, static_cast<std::uint32_t>(n)), f[n]);
    z.add_term(Monomial::of(y, static_cast<std::uint32_t>(n)), f[n]);
  }
  FormalGroup out;
  Poly zk(1);
  for (long k = 1; k <= order; ++k) {
    zk = truncate_degree(zk * z, order);
    if (inv[static_cast<std::size_t>(k)] != 0) out.F += zk * inv[static_cast<std::size_t>(k)];
  }
  for (const auto& [m, c] : out.F.sorted_terms()) {
    if (!subring->contains(c)) {
      out.integral = false;
      out.witness = "coefficient " + to_string(c) + " of " + monomial_to_string(m);
      break;
    }
  }
  return out;
}

}  // namespace wittlab
