#include "glnq/fq.hpp"

#include "glnq/error.hpp"

namespace glnq {

PrimePower PrimePower::of(u64 q) {
    auto split = prime_power_split(q);
    if (!split) fail(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
    return PrimePower{split->first, split->second, q};
}

namespace prime_poly {
namespace {

using Poly = std::vector<u64>;

// a * b mod (monic) m over F_p; a, b have degree < deg m.
Poly mulmod_poly(const Poly& a, const Poly& b, const std::vector<int>& m, u64 p) {
    const std::size_t deg = m.size() - 1;
    std::vector<u64> prod(2 * deg, 0);
    for (std::size_t i = 0; i < deg; ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < deg; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    for (std::size_t k = prod.size(); k-- > deg;) {
        u64 c = prod[k];
        if (!c) continue;
        prod[k] = 0;
        // x^k = x^{k-deg} * x^deg and x^deg = -sum m_i x^i
        for (std::size_t i = 0; i < deg; ++i)
            prod[k - deg + i] = (prod[k - deg + i] + c * (p - static_cast<u64>(m[i]) % p)) % p;
    }
    prod.resize(deg);
    return prod;
}

Poly x_pow(u64 k, const std::vector<int>& m, u64 p) {
    const std::size_t deg = m.size() - 1;
    Poly result(deg, 0), base(deg, 0);
    result[0] = 1;
    if (deg == 1) {
        base[0] = (p - static_cast<u64>(m[0])) % p;
    } else {
        base[1] = 1;
    }
    while (k) {
        if (k & 1) result = mulmod_poly(result, base, m, p);
        base = mulmod_poly(base, base, m, p);
        k >>= 1;
    }
    return result;
}

bool is_one(const Poly& a) {
    if (a.empty() || a[0] != 1) return false;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i]) return false;
    return true;
}

}  // namespace

bool is_primitive(u64 p, const std::vector<int>& modulus) {
    const int deg = static_cast<int>(modulus.size()) - 1;
    if (deg < 1 || modulus.back() != 1 || modulus[0] == 0) return false;
    const u64 order = pow_u64(p, static_cast<unsigned>(deg)) - 1;
    if (!is_one(x_pow(order, modulus, p))) return false;
    for (auto [r, e] : factorize(order)) {
        (void)e;
        if (is_one(x_pow(order / r, modulus, p))) return false;
    }
    return true;
}

std::vector<int> least_primitive(u64 p, int deg) {
    require(deg >= 1, ErrorKind::DegreeOutOfRange, "primitive polynomial degree must be positive");
    const u64 total = pow_u64(p, static_cast<unsigned>(deg));
    std::vector<int> m(static_cast<std::size_t>(deg) + 1, 0);
    m[deg] = 1;
    // c_0 is the most significant digit of the counter.
    for (u64 idx = 0; idx < total; ++idx) {
        u64 rest = idx;
        for (int i = deg - 1; i >= 0; --i) {
            m[i] = static_cast<int>(rest % p);
            rest /= p;
        }
        if (is_primitive(p, m)) return m;
    }
    fail(ErrorKind::InvalidInput, "no primitive polynomial found");
}

}  // namespace prime_poly

Fq::Fq(PrimePower pp) : pp_(pp) {
    require(pp_.q < (1ULL << 26), ErrorKind::FieldTooLarge, "base field too large for tables");
    defining_ = prime_poly::least_primitive(pp_.p, pp_.e);
    const u64 q = pp_.q, p = pp_.p;
    exp_.assign(q - 1, 0);
    log_.assign(q, 0);
    // Multiply-by-y on digit vectors.
    std::vector<u64> cur(static_cast<std::size_t>(pp_.e), 0);
    cur[0] = 1;
    auto encode = [&](const std::vector<u64>& v) {
        u64 code = 0;
        for (std::size_t i = v.size(); i-- > 0;) code = code * p + v[i];
        return code;
    };
    for (u64 k = 0; k + 1 < q; ++k) {
        u64 code = encode(cur);
        exp_[k] = static_cast<std::uint32_t>(code);
        log_[code] = static_cast<std::uint32_t>(k);
        if (pp_.e == 1) {
            cur[0] = cur[0] * (p - static_cast<u64>(defining_[0])) % p;
        } else {
            u64 top = cur.back();
            for (std::size_t i = cur.size() - 1; i > 0; --i) cur[i] = cur[i - 1];
            cur[0] = 0;
            for (std::size_t i = 0; i < cur.size(); ++i)
                cur[i] = (cur[i] + top * (p - static_cast<u64>(defining_[i]))) % p;
        }
    }
    if (pp_.e > 1 && q <= 1024) {
        add_table_.resize(q * q);
        for (u64 a = 0; a < q; ++a)
            for (u64 b = 0; b < q; ++b) {
                auto da = digits(static_cast<int>(a)), db = digits(static_cast<int>(b));
                for (std::size_t i = 0; i < da.size(); ++i) da[i] = static_cast<int>((da[i] + db[i]) % p);
                add_table_[a * q + b] = static_cast<std::uint16_t>(from_digits(da));
            }
    }
}

std::vector<int> Fq::digits(int a) const {
    std::vector<int> d(static_cast<std::size_t>(pp_.e));
    u64 v = static_cast<u64>(a);
    for (auto& x : d) {
        x = static_cast<int>(v % pp_.p);
        v /= pp_.p;
    }
    return d;
}

int Fq::from_digits(const std::vector<int>& d) const {
    u64 code = 0;
    for (std::size_t i = d.size(); i-- > 0;) code = code * pp_.p + static_cast<u64>(d[i]);
    return static_cast<int>(code);
}

int Fq::add(int a, int b) const {
    if (pp_.e == 1) return static_cast<int>((static_cast<u64>(a) + static_cast<u64>(b)) % pp_.p);
    if (!add_table_.empty()) return add_table_[static_cast<u64>(a) * pp_.q + static_cast<u64>(b)];
    auto da = digits(a), db = digits(b);
    for (std::size_t i = 0; i < da.size(); ++i) da[i] = static_cast<int>((da[i] + db[i]) % pp_.p);
    return from_digits(da);
}

int Fq::neg(int a) const {
    if (pp_.e == 1) return a == 0 ? 0 : static_cast<int>(pp_.p - static_cast<u64>(a));
    auto d = digits(a);
    for (auto& x : d) x = x == 0 ? 0 : static_cast<int>(pp_.p - static_cast<u64>(x));
    return from_digits(d);
}

int Fq::sub(int a, int b) const { return add(a, neg(b)); }

int Fq::mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    if (pp_.e == 1) return static_cast<int>(static_cast<u64>(a) * static_cast<u64>(b) % pp_.p);
    return exp(static_cast<u64>(log_[a]) + log_[b]);
}

u64 Fq::log(int a) const {
    require(a != 0, ErrorKind::ZeroInput, "log of zero");
    return log_[a];
}

int Fq::inv(int a) const {
    require(a != 0, ErrorKind::ZeroInput, "inverse of zero");
    return exp((pp_.q - 1 - log_[a]) % (pp_.q - 1));
}

int Fq::pow(int a, u64 k) const {
    if (k == 0) return 1;
    if (a == 0) return 0;
    return exp(static_cast<u64>(log_[a]) * (k % (pp_.q - 1)));
}

}  // namespace glnq
