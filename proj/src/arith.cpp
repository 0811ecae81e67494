#include "glnq/arith.hpp"

#include <algorithm>
#include <numeric>

#include "glnq/error.hpp"

namespace glnq {

std::vector<std::pair<u64, int>> factorize(u64 n) {
    std::vector<std::pair<u64, int>> out;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<u64> divisors(u64 n) {
    std::vector<u64> ds{1};
    for (auto [p, e] : factorize(n)) {
        const std::size_t base = ds.size();
        u64 pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

int mobius(u64 n) {
    int sign = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

u64 euler_phi(u64 n) {
    u64 r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    auto f = factorize(n);
    return f.size() == 1 && f[0].second == 1;
}

std::optional<std::pair<u64, int>> prime_power_split(u64 n) {
    if (n < 2) return std::nullopt;
    auto f = factorize(n);
    if (f.size() != 1) return std::nullopt;
    return f[0];
}

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

u64 lcm_u64(u64 a, u64 b) { return a / std::gcd(a, b) * b; }

u64 pow_u64(u64 base, unsigned exp) {
    u64 r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) fail(ErrorKind::TooLarge, "integer power overflows 64 bits");
        r *= base;
    }
    return r;
}

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 m) {
    Int r;
    Int aa(static_cast<unsigned long>(a)), mm(static_cast<unsigned long>(m));
    if (mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), mm.get_mpz_t()) == 0)
        fail(ErrorKind::InvalidInput, "no modular inverse");
    return r.get_ui();
}

Int pow_int(const Int& base, unsigned exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Int lcm_int(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int binomial(long n, long k) {
    if (k < 0) return 0;
    if (n >= 0) {
        if (k > n) return 0;
        Int r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return r;
    }
    // binom(-m, k) = (-1)^k binom(m + k - 1, k)
    Int r = binomial(-n + k - 1, k);
    return (k % 2 == 0) ? r : Int(-r);
}

Int factorial(unsigned n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int q_integer(unsigned m, const Int& q) {
    Int r = 0, pw = 1;
    for (unsigned i = 0; i < m; ++i) {
        r += pw;
        pw *= q;
    }
    return r;
}

Int q_factorial(unsigned m, const Int& q) {
    Int r = 1;
    for (unsigned i = 1; i <= m; ++i) r *= q_integer(i, q);
    return r;
}

Int q_binomial(unsigned m, unsigned k, const Int& q) {
    if (k > m) return 0;
    Int num = q_factorial(m, q);
    Int den = q_factorial(k, q) * q_factorial(m - k, q);
    return num / den;
}

Rational rational_pow(const Rational& base, long exp) {
    if (exp < 0) {
        if (base == 0) fail(ErrorKind::InvalidInput, "zero to a negative power");
        Rational inv = 1 / base;
        return rational_pow(inv, -exp);
    }
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exp));
    r.canonicalize();
    return r;
}

Int to_integer(const Rational& r, const std::string& context) {
    Rational c = r;
    c.canonicalize();
    if (c.get_den() != 1) fail(ErrorKind::InexactResult, context + " is not an integer: " + c.get_str());
    return c.get_num();
}

std::string to_decimal(const Int& x) { return x.get_str(); }

std::string to_decimal(const Rational& x) {
    Rational c = x;
    c.canonicalize();
    return c.get_str();
}

}  // namespace glnq
