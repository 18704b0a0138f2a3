#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <iostream>
#include <iterator>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "suites.hpp"
#include "wittlab/arith.hpp"
#include "wittlab/errors.hpp"
#include "wittlab/lambda.hpp"
#include "wittlab/necklace.hpp"
#include "wittlab/qsymm.hpp"
#include "wittlab/ring.hpp"
#include "wittlab/symm.hpp"
#include "wittlab/universal.hpp"
#include "wittlab/witt.hpp"

namespace wittlab::cli {
namespace {

using json = nlohmann::json;

// ---------------------------------------------------------------- parsing

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    cur = trim(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

// "-" reads the list from stdin, separated by commas or whitespace.
std::vector<std::string> read_list(const std::string& arg) {
  if (arg != "-") return split(arg, ',');
  std::string all{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::replace_if(all.begin(), all.end(), [](unsigned char c) { return std::isspace(c); }, ',');
  return split(all, ',');
}

std::vector<RingElem> parse_elems(const RingSpecPtr& ring, const std::string& arg) {
  std::vector<RingElem> out;
  for (const auto& s : read_list(arg)) out.push_back(RingElem::parse(ring, s));
  return out;
}

std::vector<Int> parse_ints(const std::string& arg) {
  std::vector<Int> out;
  for (const auto& s : read_list(arg)) {
    Int z;
    if (z.set_str(s, 10) != 0) throw std::invalid_argument("not an integer: " + s);
    out.push_back(z);
  }
  return out;
}

std::vector<Rat> parse_rats(const std::string& arg) {
  std::vector<Rat> out;
  for (const auto& s : read_list(arg)) out.push_back(parse_rat(s));
  return out;
}

WittVec make_vec(const RingSpecPtr& ring, std::vector<RingElem> coords, const std::string& nest, long p) {
  if (coords.empty()) throw std::invalid_argument("empty coordinate list");
  if (p > 0) return WittVec::padic(ring, p, std::move(coords));
  Nest n = nest.empty() ? Nest::range(static_cast<long>(coords.size())) : Nest::parse(nest);
  if (n.size() != coords.size())
    throw std::invalid_argument("nest " + n.to_string() + " needs " + std::to_string(n.size()) + " coordinates");
  return WittVec(ring, n, std::move(coords));
}

// One term of a symmetric function expression: [coeff*]name(parts), a bare
// number, or a bare partition in the default basis.
SymFn parse_sym_term(const std::string& term, Basis dflt) {
  auto open = term.find('(');
  if (open == std::string::npos) {
    if (term.find(',') == std::string::npos && term.find('/') != std::string::npos)
      return SymFn::scalar(parse_rat(term), dflt);
    return SymFn::of(dflt, part::parse(term));
  }
  if (term.back() != ')') throw std::invalid_argument("malformed term: " + term);
  std::string head = term.substr(0, open);
  Rat c = 1;
  if (auto star = head.rfind('*'); star != std::string::npos) {
    c = parse_rat(head.substr(0, star));
    head = head.substr(star + 1);
  }
  Basis b = head.empty() ? dflt : parse_basis(head);
  std::string inner = term.substr(open + 1, term.size() - open - 2);
  return SymFn::of(b, inner.empty() ? Partition{} : part::parse(inner), c);
}

// "2*s(2,1) - p(3) + 1/2*h(1,1)" or a bare partition "2,1" in `dflt`.
SymFn parse_symfn(const std::string& text, Basis dflt) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty symmetric function");
  std::vector<std::pair<int, std::string>> terms;
  int depth = 0, sign = 1;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (ch == '+' || ch == '-')) {
      if (!cur.empty()) terms.emplace_back(sign, cur);
      cur.clear();
      sign = ch == '-' ? -1 : 1;
      continue;
    }
    cur += ch;
  }
  if (!cur.empty()) terms.emplace_back(sign, cur);
  std::optional<SymFn> sum;
  for (const auto& [sg, t] : terms) {
    bool number = std::all_of(t.begin(), t.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) || ch == '/'; });
    SymFn f = (number && terms.size() > 1) ? SymFn::scalar(parse_rat(t), dflt) : parse_sym_term(t, dflt);
    f *= Rat(sg);
    if (!sum) {
      sum = f;
    } else {
      *sum += convert(f, sum->basis());
    }
  }
  return *sum;
}

// ---------------------------------------------------------------- output

struct Out {
  std::ostream& os;
  bool json_mode = false;
  void emit(const json& j) const { os << j.dump(2) << "\n"; }
  void line(const std::string& s) const { os << s << "\n"; }
};

json report_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return {{"ok", r.ok()}, {"checks", checks}};
}

std::size_t failures(const Report& r) {
  return static_cast<std::size_t>(std::count_if(r.checks.begin(), r.checks.end(), [](const Check& c) { return !c.ok; }));
}

int print_report(const Out& out, const Report& r, const std::string& ok_summary, json extra = json::object()) {
  if (out.json_mode) {
    json j = report_json(r);
    j["summary"] = ok_summary;
    for (auto& [k, v] : extra.items()) j[k] = v;
    out.emit(j);
  } else {
    for (const auto& c : r.checks)
      out.line(c.ok ? "PASS " + c.name : "FAIL " + c.name + (c.detail.empty() ? "" : ": " + c.detail));
    if (r.ok())
      out.line("OK: " + ok_summary);
    else
      out.line("FAILED: " + std::to_string(failures(r)) + " of " + std::to_string(r.checks.size()) +
               " checks failed (first: " + r.first_failure()->name + ")");
  }
  return r.ok() ? kOk : kVerifyFailed;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

template <class T>
std::vector<std::string> strings(const std::vector<T>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) {
    if constexpr (std::is_same_v<T, RingElem>)
      out.push_back(x.to_string());
    else
      out.push_back(wittlab::to_string(x));
  }
  return out;
}

json ghost_json(const GhostVec& g) {
  json values = json::object();
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    long label = g.padic ? static_cast<long>(i) : g.nest.indices()[i];
    values[std::to_string(label)] = g.values[i].to_string();
  }
  json j = {{"ring", g.ring->to_json()}, {"nest", g.nest.indices()}, {"values", values}};
  if (g.padic) j["p"] = g.p;
  return j;
}

// ---------------------------------------------------------------- commands

struct Common {
  std::string ring = "ZZ";
  std::string nest;
  long p = 0;
};

void add_vector_options(CLI::App* sub, Common& c) {
  sub->add_option("--ring", c.ring, "coefficient ring: ZZ, QQ, ZZ/n, ZZ_(p), ZZ[x,y], ...")->capture_default_str();
  sub->add_option("--nest", c.nest, "index nest, e.g. 1,2,3,4,6 (default 1..len)");
  sub->add_option("--p", c.p, "use p-adic vectors of this prime");
}

int cmd_witt_poly(const Out& out, long n, const std::string& flavor, long p) {
  Flavor f = flavor == "big" ? Flavor::big() : Flavor::p_adic(p);
  if (f.padic && !is_prime(p)) throw std::invalid_argument("--p must be prime for the p-adic flavor");
  Poly w = witt_polynomial(n, f);
  if (out.json_mode)
    out.emit({{"n", n}, {"flavor", f.to_string()}, {"poly", w.to_string()}});
  else
    out.line(w.to_string());
  return kOk;
}

int cmd_struct_poly(const Out& out, const std::string& kind, const std::string& flavor, long p,
                    const std::string& nest) {
  Flavor f = flavor == "big" ? Flavor::big() : Flavor::p_adic(p);
  if (f.padic && !is_prime(p)) throw std::invalid_argument("--p must be prime for the p-adic flavor");
  Nest n = Nest::parse(nest);
  auto fam = structure_polys(StructKind::parse(kind), f, n);
  if (out.json_mode) {
    out.emit(fam->to_json());
  } else {
    for (std::size_t i = 0; i < fam->indices.size(); ++i)
      out.line(std::to_string(fam->indices[i]) + ": " + fam->polys[i].to_string());
  }
  return kOk;
}

struct CalcArgs {
  Common c;
  std::string op, a, b, u;
  long n = 0;
};

int cmd_witt_calc(const Out& out, const CalcArgs& args) {
  auto ring = RingSpec::parse(args.c.ring);
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("--op ") + args.op + " needs " + what);
  };
  WittVec r;
  if (args.op == "teichmuller") {
    need(!args.u.empty(), "--u");
    RingElem x = RingElem::parse(ring, args.u);
    need(args.n > 0, "--n (length)");
    r = args.c.p > 0 ? teichmuller_padic(x, args.c.p, static_cast<int>(args.n))
                     : teichmuller(x, args.c.nest.empty() ? Nest::range(args.n) : Nest::parse(args.c.nest));
  } else {
    need(!args.a.empty(), "--a");
    WittVec a = make_vec(ring, parse_elems(ring, args.a), args.c.nest, args.c.p);
    auto second = [&] {
      need(!args.b.empty(), "--b");
      return make_vec(ring, parse_elems(ring, args.b), args.c.nest, args.c.p);
    };
    if (args.op == "add") {
      r = witt_add(a, second());
    } else if (args.op == "sub") {
      r = witt_sub(a, second());
    } else if (args.op == "mul") {
      r = witt_mul(a, second());
    } else if (args.op == "neg") {
      r = witt_neg(a);
    } else if (args.op == "frobenius" || args.op == "verschiebung" || args.op == "nmult" || args.op == "p-typify") {
      need(args.n > 0, "--n");
      if (args.op == "frobenius") r = frobenius(args.n, a);
      if (args.op == "verschiebung") r = verschiebung(args.n, a);
      if (args.op == "nmult") r = nmult(args.n, a);
      if (args.op == "p-typify") r = p_typify(a, args.n);
    } else if (args.op == "homothety") {
      need(!args.u.empty(), "--u");
      r = homothety(RingElem::parse(ring, args.u), a);
    } else if (args.op == "artin-schreier") {
      r = artin_schreier(a);
    } else {
      throw std::invalid_argument("unknown --op " + args.op);
    }
  }
  if (out.json_mode)
    out.emit(r.to_json());
  else
    out.line(r.to_string());
  return kOk;
}

int cmd_ghost(const Out& out, const Common& c, const std::string& coords) {
  auto ring = RingSpec::parse(c.ring);
  GhostVec g = ghost(make_vec(ring, parse_elems(ring, coords), c.nest, c.p));
  if (out.json_mode)
    out.emit(ghost_json(g));
  else
    out.line(g.to_string());
  return kOk;
}

int cmd_unghost(const Out& out, const Common& c, const std::string& values) {
  auto ring = RingSpec::parse(c.ring);
  GhostVec g;
  g.ring = ring;
  g.values = parse_elems(ring, values);
  if (g.values.empty()) throw std::invalid_argument("empty ghost vector");
  if (c.p > 0) {
    g.padic = true;
    g.p = c.p;
    g.nest = Nest::ppow(c.p, static_cast<int>(g.values.size()));
  } else {
    g.nest = c.nest.empty() ? Nest::range(static_cast<long>(g.values.size())) : Nest::parse(c.nest);
    if (g.nest.size() != g.values.size()) throw std::invalid_argument("nest size does not match the value count");
  }
  WittVec w = from_ghost(g);
  if (out.json_mode)
    out.emit(w.to_json());
  else
    out.line(w.to_string());
  return kOk;
}

int cmd_coords(const Out& out, const std::string& from, const std::string& to, const std::string& ring_s,
               const std::string& list) {
  auto ring = RingSpec::parse(ring_s);
  auto xs = parse_elems(ring, list);
  if (xs.empty()) throw std::invalid_argument("empty coordinate list");
  Series s;
  if (from == "series")
    s = Series(ring, xs);
  else if (from == "witt")
    s = from_witt(WittVec(ring, Nest::range(static_cast<long>(xs.size())), xs));
  else if (from == "necklace")
    s = from_necklace(ring, xs);
  else
    throw std::invalid_argument("--from must be series, witt or necklace");

  if (to == "series") {
    out.json_mode ? out.emit(s.to_json()) : out.line(s.to_string());
  } else if (to == "witt") {
    WittVec w = to_witt(s);
    out.json_mode ? out.emit(w.to_json()) : out.line(w.to_string());
  } else if (to == "necklace") {
    NecklaceCoords nc = to_necklace(s);
    if (!nc.integral)
      throw IntegralityError("necklace coordinate c_" + std::to_string(nc.first_non_integral) + " = " +
                             nc.c[static_cast<std::size_t>(nc.first_non_integral - 1)].to_string() + " is not in " +
                             ring->to_string());
    NecklaceVec v{ring, {}};
    for (const auto& c : nc.c) v.c.push_back(change_ring(ring, c));
    out.json_mode ? out.emit(v.to_json()) : out.line(v.to_string());
  } else if (to == "ghost") {
    auto g = series_ghost(s);
    out.json_mode ? out.emit({{"ghost", strings(g)}}) : out.line("(" + join(strings(g), ", ") + ")");
  } else {
    throw std::invalid_argument("--to must be series, witt, necklace or ghost");
  }
  return kOk;
}

int cmd_teich(const Out& out, long p, int k, std::optional<long> a) {
  if (!is_prime(p)) throw std::invalid_argument("--p must be prime");
  if (k < 1) throw std::invalid_argument("--k must be positive");
  Int mod = ipow(Int(p), static_cast<unsigned long>(k));
  if (a) {
    Int t = teichmuller_lift_mod(Int(*a), p, k);
    out.json_mode ? out.emit({{"p", p}, {"k", k}, {"a", *a}, {"lift", t.get_str()}})
                  : out.line(t.get_str());
    return kOk;
  }
  json lifts = json::array(), sums = json::array();
  std::vector<std::string> lines;
  lines.push_back("Teichmuller lifts mod " + mod.get_str() + ":");
  for (long x = 0; x < p; ++x) {
    Int t = teichmuller_lift_mod(Int(x), p, k);
    lifts.push_back({{"a", x}, {"lift", t.get_str()}});
    lines.push_back("  t(" + std::to_string(x) + ") = " + t.get_str());
  }
  lines.push_back("digit sums t(a) + t(b) = sum_i t(d_i) p^i:");
  bool all_ok = true;
  for (long x = 1; x < p; ++x)
    for (long y = x; y < p; ++y) {
      DigitSum d = teich_digit_sum(Int(x), Int(y), p, k);
      all_ok = all_ok && d.verified;
      auto ds = strings(d.digits);
      sums.push_back({{"a", x}, {"b", y}, {"digits", ds}, {"verified", d.verified}});
      lines.push_back("  " + std::to_string(x) + " + " + std::to_string(y) + ": (" + join(ds, ", ") + ")" +
                      (d.verified ? "" : "  FAIL"));
    }
  if (out.json_mode)
    out.emit({{"p", p}, {"k", k}, {"modulus", mod.get_str()}, {"lifts", lifts}, {"digit_sums", sums}});
  else
    for (const auto& l : lines) out.line(l);
  return all_ok ? kOk : kVerifyFailed;
}

int cmd_dold(const Out& out, const std::string& seq) {
  auto b = parse_ints(seq);
  if (b.empty()) throw std::invalid_argument("empty sequence");
  long N = static_cast<long>(b.size());
  DoldResult r = dold_test(b, N);
  std::string verdict;
  if (r.pass) {
    verdict = "PASS (ghost-realizable over Z up to n=" + std::to_string(N) + ")";
  } else {
    const Int& c = r.c[static_cast<std::size_t>(r.first_failure - 1)];
    verdict = "FAIL (n=" + std::to_string(r.first_failure) + " does not divide c_" + std::to_string(r.first_failure) +
              " = " + c.get_str() + ")";
  }
  if (out.json_mode)
    out.emit({{"pass", r.pass}, {"n", N}, {"c", strings(r.c)}, {"first_failure", r.first_failure},
              {"exact", r.exact}, {"verdict", verdict}});
  else
    out.line(verdict);
  return r.pass ? kOk : kVerifyFailed;
}

void emit_symfn(const Out& out, const SymFn& f) { out.json_mode ? out.emit(f.to_json()) : out.line(f.to_string()); }

std::optional<Basis> opt_basis(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return parse_basis(s);
}

int cmd_necklace_number(const Out& out, const std::string& alpha, long n, bool upto) {
  Int a(alpha);
  if (n < 1) throw std::invalid_argument("--n must be positive");
  if (!upto) {
    Int v = necklace_number(a, n);
    out.json_mode ? out.emit({{"alpha", alpha}, {"n", n}, {"value", v.get_str()}}) : out.line(v.get_str());
    return kOk;
  }
  std::vector<Int> vs;
  for (long k = 1; k <= n; ++k) vs.push_back(necklace_number(a, k));
  out.json_mode ? out.emit({{"alpha", alpha}, {"values", strings(vs)}}) : out.line(join(strings(vs), ", "));
  return kOk;
}

CartierOp parse_cartier(const RingSpecPtr& ring, const std::vector<std::string>& terms, long bound) {
  CartierOp op = CartierOp::zero(ring, bound);
  for (const auto& t : terms) {
    auto parts = split(t, ':');
    if (parts.size() != 3) throw std::invalid_argument("cartier term must be m:c:n, got " + t);
    op = cartier_add(op, CartierOp::term(std::stol(parts[0]), RingElem::parse(ring, parts[1]), std::stol(parts[2]), bound));
  }
  return cartier_normalize(op);
}

int cmd_verify(const Out& out, const std::string& name, const suites::Options& opts) {
  if (name == "list") {
    json arr = json::array();
    for (const auto& s : suites::all()) {
      arr.push_back({{"name", s.name}, {"criterion", s.criterion}});
      if (!out.json_mode) out.line(s.name);
    }
    if (out.json_mode) out.emit(arr);
    return kOk;
  }
  std::vector<std::string> names;
  if (name == "all") {
    for (const auto& s : suites::all()) names.push_back(s.name);
  } else {
    const auto* info = suites::find(name);
    if (!info) throw std::invalid_argument("unknown suite " + name + " (try: verify list)");
    names.push_back(info->name);
  }
  int code = kOk;
  json results = json::array();
  for (const auto& n : names) {
    auto res = suites::run(n, opts);
    if (!res.report.ok()) code = kVerifyFailed;
    if (out.json_mode) {
      json j = report_json(res.report);
      j["suite"] = n;
      j["summary"] = res.summary;
      results.push_back(j);
    } else if (names.size() > 1) {
      std::size_t f = failures(res.report);
      out.line((f ? "FAIL " : "PASS ") + n + ": " +
               (f ? std::to_string(f) + " of " + std::to_string(res.report.checks.size()) + " checks failed (first: " +
                        res.report.first_failure()->name + ")"
                  : res.summary));
    } else {
      print_report(out, res.report, res.summary);
    }
  }
  if (out.json_mode) out.emit(names.size() == 1 ? results[0] : results);
  return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& os, std::ostream& err) {
  CLI::App app{"Exact arithmetic for Witt vectors, lambda-rings and symmetric functions", "wittlab"};
  app.require_subcommand(1);
  app.fallthrough();
  Out out{os};
  app.add_flag("--json", out.json_mode, "emit JSON instead of text");
  std::function<int()> action;

  // witt-poly
  long wp_n = 1, wp_p = 2;
  std::string wp_flavor = "big";
  auto* wp = app.add_subcommand("witt-poly", "print the Witt polynomial w_n");
  wp->add_option("n", wp_n, "index")->required();
  wp->add_option("--flavor", wp_flavor)->check(CLI::IsMember({"big", "p-adic"}))->capture_default_str();
  wp->add_option("--p", wp_p, "prime for the p-adic flavor")->capture_default_str();
  wp->callback([&] { action = [&] { return cmd_witt_poly(out, wp_n, wp_flavor, wp_p); }; });

  // struct-poly
  std::string sp_kind, sp_flavor = "big", sp_nest;
  long sp_p = 2;
  auto* sp = app.add_subcommand("struct-poly", "universal structure polynomials of an operation");
  sp->add_option("--kind", sp_kind, "add, mul, neg, frobenius(n), nmult(n), ppower(p), unit, zero")->required();
  sp->add_option("--flavor", sp_flavor)->check(CLI::IsMember({"big", "p-adic"}))->capture_default_str();
  sp->add_option("--nest", sp_nest, "output nest (big) or length (p-adic)")->required();
  sp->add_option("--p", sp_p, "prime for the p-adic flavor")->capture_default_str();
  sp->callback([&] { action = [&] { return cmd_struct_poly(out, sp_kind, sp_flavor, sp_p, sp_nest); }; });

  // witt-calc
  CalcArgs wc;
  auto* wcs = app.add_subcommand("witt-calc", "arithmetic on Witt vectors given by coordinates");
  wcs->add_option("--op", wc.op,
                  "add, sub, mul, neg, frobenius, verschiebung, nmult, homothety, teichmuller, p-typify, "
                  "artin-schreier")
      ->required();
  add_vector_options(wcs, wc.c);
  wcs->add_option("--a", wc.a, "first operand coordinates ('-' reads stdin)");
  wcs->add_option("--b", wc.b, "second operand coordinates");
  wcs->add_option("--n", wc.n, "operator index, prime for p-typify, or length for teichmuller");
  wcs->add_option("--u", wc.u, "ring element for homothety and teichmuller");
  wcs->callback([&] { action = [&] { return cmd_witt_calc(out, wc); }; });

  // ghost / unghost
  Common gh;
  std::string gh_coords;
  auto* ghs = app.add_subcommand("ghost", "ghost components of a Witt vector");
  add_vector_options(ghs, gh);
  ghs->add_option("coords", gh_coords, "coordinates ('-' reads stdin)")->required();
  ghs->callback([&] { action = [&] { return cmd_ghost(out, gh, gh_coords); }; });
  Common ug;
  std::string ug_values;
  auto* ugs = app.add_subcommand("unghost", "Witt coordinates from ghost components");
  add_vector_options(ugs, ug);
  ugs->add_option("values", ug_values, "ghost components ('-' reads stdin)")->required();
  ugs->callback([&] { action = [&] { return cmd_unghost(out, ug, ug_values); }; });

  // coords
  std::string co_from, co_to, co_ring = "ZZ", co_list;
  auto* cos = app.add_subcommand("coords", "convert between series, Witt and necklace coordinates");
  cos->add_option("--from", co_from)->required()->check(CLI::IsMember({"series", "witt", "necklace"}));
  cos->add_option("--to", co_to)->required()->check(CLI::IsMember({"series", "witt", "necklace", "ghost"}));
  cos->add_option("--ring", co_ring)->capture_default_str();
  cos->add_option("values", co_list, "a_1..a_D, x_1..x_D or c_1..c_D ('-' reads stdin)")->required();
  cos->callback([&] { action = [&] { return cmd_coords(out, co_from, co_to, co_ring, co_list); }; });

  // teich
  long te_p = 2;
  int te_k = 1;
  std::optional<long> te_a;
  auto* tes = app.add_subcommand("teich", "Teichmuller lifts and digit sums mod p^k");
  tes->add_option("--p", te_p)->required();
  tes->add_option("--k", te_k)->required();
  tes->add_option("--a", te_a, "print only the lift of a");
  tes->callback([&] { action = [&] { return cmd_teich(out, te_p, te_k, te_a); }; });

  // dold
  std::string dold_seq;
  auto* ds = app.add_subcommand("dold", "test whether b_1..b_N is a ghost vector over Z");
  ds->add_option("sequence", dold_seq, "b_1,...,b_N ('-' reads stdin)")->required();
  ds->callback([&] { action = [&] { return cmd_dold(out, dold_seq); }; });

  // symm
  auto* sy = app.add_subcommand("symm", "symmetric functions");
  sy->require_subcommand(1);
  int sy_cap = 0;
  sy->add_option("--cap", sy_cap, "weight cap (default 10)");
  std::string sy_f, sy_g, sy_to, sy_basis = "h";
  auto set_cap = [&] {
    if (sy_cap > 0) set_weight_cap(sy_cap);
  };
  auto* syc = sy->add_subcommand("convert", "express in another basis");
  syc->add_option("f", sy_f, "expression such as \"2*s(2,1) - p(3)\" or a partition")->required();
  syc->add_option("--to", sy_to)->required();
  syc->add_option("--basis", sy_basis, "basis of a bare partition")->capture_default_str();
  syc->callback([&] {
    action = [&] {
      set_cap();
      emit_symfn(out, convert(parse_symfn(sy_f, parse_basis(sy_basis)), parse_basis(sy_to)));
      return kOk;
    };
  });
  auto* sym = sy->add_subcommand("mul", "product");
  sym->add_option("f", sy_f)->required();
  sym->add_option("g", sy_g)->required();
  sym->add_option("--to", sy_to);
  sym->add_option("--basis", sy_basis)->capture_default_str();
  sym->callback([&] {
    action = [&] {
      set_cap();
      Basis b = parse_basis(sy_basis);
      emit_symfn(out, multiply(parse_symfn(sy_f, b), parse_symfn(sy_g, b), opt_basis(sy_to)));
      return kOk;
    };
  });
  auto* syi = sy->add_subcommand("inner", "Hall inner product");
  syi->add_option("f", sy_f)->required();
  syi->add_option("g", sy_g)->required();
  syi->add_option("--basis", sy_basis)->capture_default_str();
  syi->callback([&] {
    action = [&] {
      set_cap();
      Basis b = parse_basis(sy_basis);
      Rat v = hall_inner(parse_symfn(sy_f, b), parse_symfn(sy_g, b));
      out.json_mode ? out.emit({{"inner", wittlab::to_string(v)}}) : out.line(wittlab::to_string(v));
      return kOk;
    };
  });
  auto* syp = sy->add_subcommand("plethysm", "plethysm f o g");
  syp->add_option("f", sy_f)->required();
  syp->add_option("g", sy_g)->required();
  syp->add_option("--to", sy_to);
  syp->add_option("--basis", sy_basis)->capture_default_str();
  syp->callback([&] {
    action = [&] {
      set_cap();
      Basis b = parse_basis(sy_basis);
      emit_symfn(out, plethysm(parse_symfn(sy_f, b), parse_symfn(sy_g, b), opt_basis(sy_to)));
      return kOk;
    };
  });
  std::string sy_shape;
  auto* sys = sy->add_subcommand("schur", "Schur or skew Schur function");
  sys->add_option("shape", sy_shape, "partition, or outer/inner for a skew shape")->required();
  sys->add_option("--to", sy_to, "output basis (default s for straight shapes, h for skew)");
  sys->callback([&] {
    action = [&] {
      set_cap();
      auto slash = sy_shape.find('/');
      SymFn f = slash == std::string::npos
                    ? schur(part::parse(sy_shape))
                    : skew_schur(part::parse(sy_shape.substr(0, slash)), part::parse(sy_shape.substr(slash + 1)));
      emit_symfn(out, sy_to.empty() ? f : convert(f, parse_basis(sy_to)));
      return kOk;
    };
  });
  std::string hz_q;
  int hz_n = 1;
  bool hz_add = false, hz_todd = false;
  auto* syh = sy->add_subcommand("hirzebruch", "multiplicative or additive sequence K_1..K_n");
  syh->add_option("--q", hz_q, "coefficients q_0,q_1,... of Q(z); missing ones are 0");
  syh->add_flag("--todd", hz_todd, "use Q(z) = z/(1-e^-z)");
  syh->add_flag("--additive", hz_add, "additive sequence");
  syh->add_option("--n", hz_n)->required();
  syh->add_option("--to", sy_to, "output basis (default e)");
  syh->callback([&] {
    action = [&] {
      set_cap();
      if (hz_todd == !hz_q.empty()) throw std::invalid_argument("give exactly one of --q and --todd");
      std::vector<Rat> q = hz_todd ? todd_coefficients(hz_n) : parse_rats(hz_q);
      q.resize(std::max(q.size(), static_cast<std::size_t>(hz_n) + 1), Rat(0));
      auto mode = hz_add ? HirzebruchMode::Additive : HirzebruchMode::Multiplicative;
      json arr = json::array();
      for (int k = 1; k <= hz_n; ++k) {
        SymFn K = hirzebruch_sequence(q, k, mode);
        if (!sy_to.empty()) K = convert(K, parse_basis(sy_to));
        if (out.json_mode)
          arr.push_back(K.to_json());
        else
          out.line("K_" + std::to_string(k) + " = " + K.to_string());
      }
      if (out.json_mode) out.emit(arr);
      return kOk;
    };
  });

  // qsymm
  auto* qs = app.add_subcommand("qsymm", "quasi-symmetric functions");
  qs->require_subcommand(1);
  int qs_cap = 0;
  qs->add_option("--cap", qs_cap, "weight cap (default 8)");
  auto set_qcap = [&] {
    if (qs_cap > 0) set_qsym_weight_cap(qs_cap);
  };
  std::string qs_a, qs_b;
  auto emit_q = [&](const auto& x) { out.json_mode ? out.emit(x.to_json()) : out.line(x.to_string()); };
  auto* qsh = qs->add_subcommand("shuffle", "overlapping shuffle product of M_a and M_b");
  qsh->add_option("a", qs_a)->required();
  qsh->add_option("b", qs_b)->required();
  qsh->callback([&] {
    action = [&] {
      set_qcap();
      emit_q(overlapping_shuffle(comp::parse(qs_a), comp::parse(qs_b)));
      return kOk;
    };
  });
  bool qs_prod = false;
  auto* qsc = qs->add_subcommand("comul", "coproduct of M_a");
  qsc->add_option("a", qs_a)->required();
  qsc->add_flag("--product", qs_prod, "second coproduct instead of cutting");
  qsc->callback([&] {
    action = [&] {
      set_qcap();
      auto f = QSymFn::of(comp::parse(qs_a));
      emit_q(qs_prod ? comul_prod_qsym(f) : cut_comul(f));
      return kOk;
    };
  });
  long qs_n = 1;
  auto* qsl = qs->add_subcommand("lambda", "lambda^n of M_a");
  qsl->add_option("a", qs_a)->required();
  qsl->add_option("--n", qs_n)->required();
  qsl->callback([&] {
    action = [&] {
      set_qcap();
      emit_q(lambda_qsym(qs_n, QSymFn::of(comp::parse(qs_a))));
      return kOk;
    };
  });

  // necklace
  auto* nk = app.add_subcommand("necklace", "necklace numbers and identities");
  nk->require_subcommand(1);
  std::string nk_alpha = "2";
  long nk_n = 1;
  bool nk_upto = false;
  auto* nkn = nk->add_subcommand("number", "M(alpha; n)");
  nkn->add_option("--alpha", nk_alpha)->capture_default_str();
  nkn->add_option("--n", nk_n)->required();
  nkn->add_flag("--upto", nk_upto, "list M(alpha; 1..n)");
  nkn->callback([&] { action = [&] { return cmd_necklace_number(out, nk_alpha, nk_n, nk_upto); }; });
  std::string nk_id, nk_params;
  long nk_bound = 12;
  auto* nki = nk->add_subcommand("identity", "check a necklace identity");
  nki->add_option("name", nk_id, "product, power, cyclotomic or strehl")->required();
  nki->add_option("--params", nk_params, "alpha,beta (product, strehl), beta,r (power), alpha (cyclotomic)")
      ->required();
  nki->add_option("--bound", nk_bound)->capture_default_str();
  nki->callback([&] {
    action = [&] {
      auto id = parse_necklace_identity(nk_id);
      Report r = necklace_identity_check(id, parse_ints(nk_params), nk_bound);
      return print_report(out, r, necklace_identity_name(id) + " identity holds to " + std::to_string(nk_bound));
    };
  });

  // burnside
  auto* bu = app.add_subcommand("burnside", "cyclic Burnside ring");
  bu->require_subcommand(1);
  std::string bu_list;
  long bu_n = 0;
  auto int_vec = [&] {
    auto xs = parse_ints(bu_list);
    if (xs.empty()) throw std::invalid_argument("empty coordinate list");
    return WittVec::from_ints(RingSpec::integers(), Nest::range(static_cast<long>(xs.size())), xs);
  };
  auto* bud = bu->add_subcommand("diagram", "check the Witt/Burnside/necklace/series square on x");
  bud->add_option("coords", bu_list, "integer Witt coordinates x_1..x_N")->required();
  bud->add_option("--n", bu_n, "truncation (default N)");
  bud->callback([&] {
    action = [&] {
      WittVec x = int_vec();
      long N = bu_n > 0 ? bu_n : static_cast<long>(x.size());
      return print_report(out, diagram_check(x, N), "diagram commutes to " + std::to_string(N));
    };
  });
  long bu_order = 8;
  auto* bus = bu->add_subcommand("syp", "prod_r (1 - t^r)^{-b_r} of the cyclic set sum b_r C_r");
  bus->add_option("multiplicities", bu_list, "b_1,...,b_N")->required();
  bus->add_option("--order", bu_order)->capture_default_str();
  bus->callback([&] {
    action = [&] {
      Series s = syP(CyclicSet{parse_ints(bu_list)}, bu_order);
      out.json_mode ? out.emit(s.to_json()) : out.line(s.to_string());
      return kOk;
    };
  });
  auto* but = bu->add_subcommand("T", "the map T from Witt vectors to the Burnside ring");
  but->add_option("coords", bu_list, "integer Witt coordinates x_1..x_N")->required();
  but->add_option("--n", bu_n, "truncation (default N)");
  but->callback([&] {
    action = [&] {
      WittVec x = int_vec();
      CyclicSet c = T_map(x, bu_n > 0 ? bu_n : static_cast<long>(x.size()));
      out.json_mode ? out.emit(c.to_json()) : out.line(c.to_string());
      return kOk;
    };
  });

  // lambda
  auto* la = app.add_subcommand("lambda", "lambda-ring operations");
  la->require_subcommand(1);
  std::string la_ring = "ZZ", la_list;
  long la_outer = 4, la_inner = 4, la_n = 1, la_m = 0;
  auto* lah = la->add_subcommand("ah", "Artin-Hasse map W(A) -> W(W(A))");
  lah->add_option("coords", la_list, "x_1..x_{outer*inner} ('-' reads stdin)")->required();
  lah->add_option("--ring", la_ring)->capture_default_str();
  lah->add_option("--outer", la_outer)->capture_default_str();
  lah->add_option("--inner", la_inner)->capture_default_str();
  lah->callback([&] {
    action = [&] {
      auto ring = RingSpec::parse(la_ring);
      auto xs = parse_elems(ring, la_list);
      if (static_cast<long>(xs.size()) != la_outer * la_inner)
        throw std::invalid_argument("need outer*inner = " + std::to_string(la_outer * la_inner) + " coordinates");
      auto ah = artin_hasse(WittVec(ring, Nest::range(la_outer * la_inner), xs), la_outer, la_inner);
      json arr = json::array();
      for (std::size_t i = 0; i < ah.outer.size(); ++i) {
        if (out.json_mode)
          arr.push_back(ah.outer[i].to_json());
        else
          out.line("y_" + std::to_string(i + 1) + " = " + ah.outer[i].to_string());
      }
      if (out.json_mode) out.emit(arr);
      return kOk;
    };
  });
  auto* laa = la->add_subcommand("adams", "Adams operation psi^n on 1 + a_1 t + ...");
  laa->add_option("series", la_list, "a_1..a_D ('-' reads stdin)")->required();
  laa->add_option("--n", la_n)->required();
  laa->add_option("--ring", la_ring)->capture_default_str();
  laa->callback([&] {
    action = [&] {
      auto ring = RingSpec::parse(la_ring);
      Series s = adams(la_n, Series(ring, parse_elems(ring, la_list)));
      out.json_mode ? out.emit(s.to_json()) : out.line(s.to_string());
      return kOk;
    };
  });
  std::string la_kind;
  auto* lau = la->add_subcommand("universal-formula", "universal lambda-ring polynomials in a_i = lambda^i(x), b_j");
  lau->add_option("--kind", la_kind)->required()->check(CLI::IsMember({"sum", "product", "iterate"}));
  lau->add_option("--n", la_n)->required();
  lau->add_option("--m", la_m, "outer index for iterate");
  lau->callback([&] {
    action = [&] {
      int n = static_cast<int>(la_n);
      Poly p = la_kind == "sum"       ? lambda_sum_formula(n)
               : la_kind == "product" ? lambda_product_formula(n)
                                      : lambda_iterate_formula(static_cast<int>(la_m > 0 ? la_m : 1), n);
      std::string s = p.to_string(lambda_var_name);
      out.json_mode ? out.emit({{"kind", la_kind}, {"n", la_n}, {"m", la_m}, {"poly", s}}) : out.line(s);
      return kOk;
    };
  });
  std::vector<std::string> ca_terms;
  long ca_bound = 8, ca_order = 0;
  std::string ca_apply;
  auto* lac = la->add_subcommand("cartier", "Cartier operators sum V_m <c> f_n");
  lac->add_option("terms", ca_terms, "terms m:c:n")->required();
  lac->add_option("--ring", la_ring)->capture_default_str();
  lac->add_option("--bound", ca_bound, "truncation m <= bound")->capture_default_str();
  lac->add_option("--order", ca_order, "order of the DE matrix (default bound)");
  lac->add_option("--apply", ca_apply, "also apply to the series with these coefficients");
  lac->callback([&] {
    action = [&] {
      auto ring = RingSpec::parse(la_ring);
      CartierOp op = parse_cartier(ring, ca_terms, ca_bound);
      DEMatrix d = de_matrix(op, ca_order > 0 ? ca_order : ca_bound);
      std::optional<Series> applied;
      if (!ca_apply.empty()) applied = cartier_apply(op, Series(ring, parse_elems(ring, ca_apply)));
      if (out.json_mode) {
        json j = {{"operator", op.to_json()}, {"de_matrix", d.to_string()}};
        if (applied) j["applied"] = applied->to_json();
        out.emit(j);
      } else {
        out.line("op = " + op.to_string());
        out.line("DE = " + d.to_string());
        if (applied) out.line("op(a) = " + applied->to_string());
      }
      return kOk;
    };
  });

  // verify
  std::string ve_name;
  suites::Options ve_opts;
  auto* ve = app.add_subcommand("verify", "run a named verification suite");
  ve->add_option("suite", ve_name, "suite name, 'all', or 'list'")->required();
  ve->add_option("--max", ve_opts.max, "suite-specific size bound");
  ve->add_option("--cap", ve_opts.cap, "weight/order cap for heavy suites")->capture_default_str();
  ve->add_option("--seed", ve_opts.seed, "seed for sampled checks")->capture_default_str();
  ve->callback([&] { action = [&] { return cmd_verify(out, ve_name, ve_opts); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, os, err);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action ? action() : kUsage;
  } catch (const IntegralityError& e) {
    err << "integrality failure: " << e.what() << "\n";
    return kIntegrality;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace wittlab::cli
