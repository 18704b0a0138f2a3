#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace wittlab {

using Int = mpz_class;
using Rat = mpq_class;

// Number-theoretic helpers on machine integers.
std::vector<long> divisors(long n);
int mobius(long n);
bool is_prime(long n);
long gcd(long a, long b);
Int gcd(const Int& a, const Int& b);
long lcm(long a, long b);
// Largest k with p^k | n (n != 0).
int valuation(long n, long p);
std::vector<long> prime_factors(long n);

Int ipow(const Int& base, unsigned long e);
Rat rpow(const Rat& base, unsigned long e);
Int factorial(unsigned long n);
Int binomial(const Int& x, unsigned long k);

// Canonical decimal form "n" or "n/d".
std::string to_string(const Rat& q);
std::string to_string(const Int& z);
Rat parse_rat(const std::string& s);

}  // namespace wittlab
