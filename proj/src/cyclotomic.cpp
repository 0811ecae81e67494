#include "glnq/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "glnq/error.hpp"

namespace glnq {

CyclotomicSum::CyclotomicSum(u64 modulus, const Int& constant) : modulus_(modulus) { add_term(0, constant); }

CyclotomicSum CyclotomicSum::root_of_unity(u64 modulus, u64 exponent, const Int& coeff) {
    CyclotomicSum s(modulus);
    s.add_term(exponent, coeff);
    return s;
}

void CyclotomicSum::add_term(u64 exponent, const Int& coeff) {
    if (coeff == 0) return;
    exponent %= modulus_;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

CyclotomicSum CyclotomicSum::lifted(u64 new_modulus) const {
    if (new_modulus == modulus_) return *this;
    require(new_modulus % modulus_ == 0, ErrorKind::InvalidInput, "lift target must be a multiple of the modulus");
    const u64 factor = new_modulus / modulus_;
    CyclotomicSum out(new_modulus);
    for (const auto& [a, c] : terms_) out.terms_.emplace(a * factor, c);
    return out;
}

CyclotomicSum& CyclotomicSum::operator+=(const CyclotomicSum& other) {
    if (other.modulus_ != modulus_) {
        const u64 m = lcm_u64(modulus_, other.modulus_);
        *this = lifted(m);
        CyclotomicSum o = other.lifted(m);
        for (const auto& [a, c] : o.terms_) add_term(a, c);
        return *this;
    }
    for (const auto& [a, c] : other.terms_) add_term(a, c);
    return *this;
}

CyclotomicSum& CyclotomicSum::operator-=(const CyclotomicSum& other) { return *this += -other; }

CyclotomicSum& CyclotomicSum::operator*=(const Int& k) {
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [a, c] : terms_) c *= k;
    return *this;
}

CyclotomicSum operator*(const CyclotomicSum& a, const CyclotomicSum& b) {
    const u64 m = lcm_u64(a.modulus_, b.modulus_);
    CyclotomicSum x = a.lifted(m), y = b.lifted(m);
    CyclotomicSum out(m);
    for (const auto& [ea, ca] : x.terms_)
        for (const auto& [eb, cb] : y.terms_) out.add_term((ea + eb) % m, ca * cb);
    return out;
}

CyclotomicSum CyclotomicSum::operator-() const {
    CyclotomicSum out = *this;
    for (auto& [a, c] : out.terms_) c = -c;
    return out;
}

CyclotomicSum CyclotomicSum::conj() const {
    CyclotomicSum out(modulus_);
    for (const auto& [a, c] : terms_) out.add_term((modulus_ - a) % modulus_, c);
    return out;
}

CyclotomicSum CyclotomicSum::pow(unsigned k) const {
    CyclotomicSum result(modulus_, Int(1));
    CyclotomicSum base = *this;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

CyclotomicSum CyclotomicSum::galois(u64 t) const {
    require(gcd_u64(t % modulus_, modulus_) == 1 || modulus_ == 1, ErrorKind::InvalidInput,
            "Galois exponent must be coprime to the modulus");
    CyclotomicSum out(modulus_);
    for (const auto& [a, c] : terms_) out.add_term(mulmod(a, t, modulus_), c);
    return out;
}

CyclotomicSum CyclotomicSum::canonical() const {
    if (terms_.empty()) return CyclotomicSum(1);
    u64 g = modulus_;
    for (const auto& [a, c] : terms_) g = gcd_u64(g, a);
    const u64 m = modulus_ / g;
    if (m == 1) {
        CyclotomicSum out(1);
        for (const auto& [a, c] : terms_) out.add_term(0, c);
        return out;
    }

    struct Factor {
        u64 p, P, cofactor, inv;
    };
    std::vector<Factor> fs;
    for (auto [p, e] : factorize(m)) {
        u64 P = pow_u64(p, static_cast<unsigned>(e));
        u64 cof = m / P;
        fs.push_back({p, P, cof, invmod(cof % P, P)});
    }

    using Coords = std::vector<u64>;
    std::map<Coords, Int> work;
    for (const auto& [a, c] : terms_) {
        const u64 x = a / g;
        Coords t(fs.size());
        for (std::size_t i = 0; i < fs.size(); ++i) t[i] = mulmod(x % fs[i].P, fs[i].inv, fs[i].P);
        work[t] += c;
    }

    for (std::size_t i = 0; i < fs.size(); ++i) {
        const auto& f = fs[i];
        const u64 s = f.P / f.p;
        std::map<Coords, Int> next;
        for (auto& [t, c] : work) {
            if (c == 0) continue;
            const u64 u = t[i] % s, b = t[i] / s;
            if (f.p == 2) {
                if (b == 1) {
                    Coords t2 = t;
                    t2[i] = u;
                    next[t2] -= c;
                } else {
                    next[t] += c;
                }
            } else if (b == 0) {
                for (u64 bb = 1; bb < f.p; ++bb) {
                    Coords t2 = t;
                    t2[i] = u + s * bb;
                    next[t2] -= c;
                }
            } else {
                next[t] += c;
            }
        }
        work = std::move(next);
    }

    CyclotomicSum out(m);
    for (const auto& [t, c] : work) {
        if (c == 0) continue;
        u64 a = 0;
        for (std::size_t i = 0; i < fs.size(); ++i) a = (a + mulmod(fs[i].cofactor, t[i], m)) % m;
        out.add_term(a, c);
    }
    if (out.terms_.empty()) return CyclotomicSum(1);
    return out;
}

CyclotomicSum CyclotomicSum::divide_exact(const Int& k) const {
    require(k != 0, ErrorKind::InexactDivision, "division by zero");
    auto try_divide = [&](const CyclotomicSum& s) -> std::optional<CyclotomicSum> {
        CyclotomicSum out(s.modulus_);
        for (const auto& [a, c] : s.terms_) {
            if (!mpz_divisible_p(c.get_mpz_t(), k.get_mpz_t())) return std::nullopt;
            Int qt = c / k;
            out.terms_.emplace(a, qt);
        }
        return out;
    };
    if (auto direct = try_divide(*this)) return *direct;
    if (auto reduced = try_divide(canonical())) return *reduced;
    fail(ErrorKind::InexactDivision, "cyclotomic sum not divisible by " + k.get_str());
}

std::optional<Rational> CyclotomicSum::rational_value() const {
    CyclotomicSum c = canonical();
    if (c.terms_.empty()) return Rational(0);
    const u64 m = c.modulus_;
    // (1/phi(m)) * trace; the sum is rational iff it equals this average.
    Rational r = 0;
    for (const auto& [a, coeff] : c.terms_) {
        const u64 order = m / gcd_u64(a, m);
        int mu = mobius(order);
        if (mu == 0) continue;
        r += Rational(coeff * mu) / Rational(Int(static_cast<unsigned long>(euler_phi(order))));
    }
    // Rational algebraic integers are integers.
    if (r.get_den() != 1) return std::nullopt;
    CyclotomicSum diff = c - CyclotomicSum(m, r.get_num());
    if (!diff.is_zero()) return std::nullopt;
    return r;
}

Int CyclotomicSum::integer_value(const std::string& context) const {
    auto r = rational_value();
    if (!r) fail(ErrorKind::InexactResult, context + " is not rational: " + to_string());
    return to_integer(*r, context);
}

std::complex<long double> CyclotomicSum::to_complex() const {
    std::complex<long double> z = 0;
    const long double tau = 2.0L * std::numbers::pi_v<long double>;
    for (const auto& [a, c] : terms_) {
        long double angle = tau * static_cast<long double>(a) / static_cast<long double>(modulus_);
        z += static_cast<long double>(c.get_d()) * std::polar(1.0L, angle);
    }
    return z;
}

long double CyclotomicSum::error_bound() const {
    long double l1 = 0;
    for (const auto& [a, c] : terms_) l1 += std::fabs(static_cast<long double>(c.get_d()));
    return l1 * std::ldexp(1.0L, -40);
}

std::string CyclotomicSum::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, c] : terms_) {
        Int mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (a == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << 'z' << modulus_ << '^' << a;
    }
    return os.str();
}

}  // namespace glnq
