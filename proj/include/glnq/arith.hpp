#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace glnq {

using Int = mpz_class;
using Rational = mpq_class;
using u64 = std::uint64_t;

// Prime factorization by trial division; fine for the word-sized moduli used here.
std::vector<std::pair<u64, int>> factorize(u64 n);
std::vector<u64> divisors(u64 n);
int mobius(u64 n);
u64 euler_phi(u64 n);
bool is_prime(u64 n);

// Returns (p, e) with n = p^e, or nullopt if n is not a prime power (n >= 2).
std::optional<std::pair<u64, int>> prime_power_split(u64 n);

u64 gcd_u64(u64 a, u64 b);
u64 lcm_u64(u64 a, u64 b);
u64 pow_u64(u64 base, unsigned exp);            // throws TooLarge on overflow
u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);
u64 invmod(u64 a, u64 m);                       // a must be a unit mod m

Int pow_int(const Int& base, unsigned exp);
Int lcm_int(const Int& a, const Int& b);
Int binomial(long n, long k);                   // generalized: n may be negative
Int factorial(unsigned n);

// q-analogues, valid for any integer q (including q = 1).
Int q_integer(unsigned m, const Int& q);       // [m]_q = 1 + q + ... + q^{m-1}
Int q_factorial(unsigned m, const Int& q);
Int q_binomial(unsigned m, unsigned k, const Int& q);
Rational rational_pow(const Rational& base, long exp);

// Exact conversion helpers; throw InexactResult when the rational is not an integer.
Int to_integer(const Rational& r, const std::string& context);
std::string to_decimal(const Int& x);
std::string to_decimal(const Rational& x);

}  // namespace glnq
