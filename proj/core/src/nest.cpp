#include "wittlab/nest.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "wittlab/arith.hpp"

namespace wittlab {

Nest::Nest(std::vector<long> indices) : idx_(std::move(indices)) {
  std::sort(idx_.begin(), idx_.end());
  idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
  if (idx_.empty() || idx_.front() != 1) throw std::invalid_argument("a nest must contain 1");
  for (long n : idx_)
    for (long d : divisors(n))
      if (!contains(d))
        throw std::invalid_argument("nest not divisor closed: " + std::to_string(d) + " | " + std::to_string(n));
}

Nest Nest::range(long n) {
  if (n < 1) throw std::invalid_argument("nest bound must be positive");
  std::vector<long> v(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return Nest(std::move(v));
}

Nest Nest::divisors_of(long n) { return Nest(divisors(n)); }

Nest Nest::ppow(long p, int len) {
  if (len < 1) throw std::invalid_argument("p-adic length must be positive");
  std::vector<long> v;
  long q = 1;
  for (int i = 0; i < len; ++i, q *= p) v.push_back(q);
  return Nest(std::move(v));
}

Nest Nest::closure(const std::vector<long>& generators) {
  std::set<long> s{1};
  for (long g : generators) {
    if (g < 1) throw std::invalid_argument("nest entries must be positive");
    for (long d : divisors(g)) s.insert(d);
  }
  return Nest(std::vector<long>(s.begin(), s.end()));
}

Nest Nest::parse(const std::string& text) {
  std::vector<long> v;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (tok.find_first_not_of(" \t") == std::string::npos) continue;
    v.push_back(std::stol(tok));
  }
  if (v.size() == 1) return range(v[0]);
  return Nest(std::move(v));
}

bool Nest::contains(long n) const { return std::binary_search(idx_.begin(), idx_.end(), n); }

long Nest::position(long n) const {
  auto it = std::lower_bound(idx_.begin(), idx_.end(), n);
  if (it == idx_.end() || *it != n) return -1;
  return static_cast<long>(it - idx_.begin());
}

Nest Nest::dilated(long m) const {
  std::vector<long> g;
  for (long n : idx_) g.push_back(m * n);
  return closure(g);
}

std::vector<long> Nest::divided(long m) const {
  std::vector<long> out;
  for (long n : idx_)
    if (n % m == 0) out.push_back(n / m);
  return out;
}

std::string Nest::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < idx_.size(); ++i) s += (i ? "," : "") + std::to_string(idx_[i]);
  return s;
}

}  // namespace wittlab
