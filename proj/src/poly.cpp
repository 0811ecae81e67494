#include "glnq/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

#include "glnq/error.hpp"

namespace glnq {

PolyQ::PolyQ(std::vector<int> c) : coeffs(std::move(c)) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

bool poly_less(const PolyQ& a, const PolyQ& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs < b.coeffs;
}

PolyQ poly_add(const Fq& F, const PolyQ& a, const PolyQ& b) {
    std::vector<int> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(a[i], b[i]);
    return PolyQ(std::move(c));
}

PolyQ poly_sub(const Fq& F, const PolyQ& a, const PolyQ& b) {
    std::vector<int> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a[i], b[i]);
    return PolyQ(std::move(c));
}

PolyQ poly_mul(const Fq& F, const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return PolyQ();
    std::vector<int> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (!a.coeffs[i]) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a.coeffs[i], b.coeffs[j]));
    }
    return PolyQ(std::move(c));
}

PolyQ poly_scale(const Fq& F, const PolyQ& a, int c) {
    std::vector<int> out(a.coeffs.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.mul(a.coeffs[i], c);
    return PolyQ(std::move(out));
}

std::pair<PolyQ, PolyQ> poly_divmod(const Fq& F, const PolyQ& a, const PolyQ& b) {
    require(!b.is_zero(), ErrorKind::InvalidInput, "polynomial division by zero");
    if (a.degree() < b.degree()) return {PolyQ(), a};
    std::vector<int> rem = a.coeffs;
    std::vector<int> quot(a.coeffs.size() - b.coeffs.size() + 1, 0);
    const int lead_inv = F.inv(b.coeffs.back());
    for (std::size_t k = quot.size(); k-- > 0;) {
        int c = F.mul(rem[k + b.coeffs.size() - 1], lead_inv);
        quot[k] = c;
        if (!c) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) rem[k + j] = F.sub(rem[k + j], F.mul(c, b.coeffs[j]));
    }
    return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

PolyQ poly_mod(const Fq& F, const PolyQ& a, const PolyQ& b) { return poly_divmod(F, a, b).second; }

PolyQ poly_gcd(const Fq& F, PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        PolyQ r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return poly_scale(F, a, F.inv(a.coeffs.back()));
}

PolyQ poly_derivative(const Fq& F, const PolyQ& a) {
    if (a.degree() < 1) return PolyQ();
    std::vector<int> d(a.coeffs.size() - 1);
    for (std::size_t i = 1; i < a.coeffs.size(); ++i) {
        int k = static_cast<int>(i % F.p());
        d[i - 1] = F.mul(a.coeffs[i], k);
    }
    return PolyQ(std::move(d));
}

PolyQ poly_pow(const Fq& F, const PolyQ& a, unsigned k) {
    PolyQ r = PolyQ::one();
    for (unsigned i = 0; i < k; ++i) r = poly_mul(F, r, a);
    return r;
}

std::string poly_to_string(const Fq& F, const PolyQ& f) {
    (void)F;
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        int c = f.coeffs[static_cast<std::size_t>(i)];
        if (!c) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c;
        os << 'z';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

PolyQ parse_poly(const Fq& F, const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '*') s.push_back(ch);
    auto bad = [&] { fail(ErrorKind::InvalidInput, "cannot parse polynomial '" + text + "'"); };
    if (s.empty()) bad();
    auto check_code = [&](long c) {
        if (c < 0 || static_cast<u64>(c) >= F.q()) bad();
        return static_cast<int>(c);
    };
    if (s.find('z') == std::string::npos && s.find('x') == std::string::npos) {
        std::vector<int> coeffs;
        std::string tok;
        for (char ch : s) {
            if (ch == '[' || ch == ']') continue;
            if (ch == ',') {
                if (tok.empty()) bad();
                coeffs.push_back(check_code(std::stol(tok)));
                tok.clear();
            } else if (std::isdigit(static_cast<unsigned char>(ch))) {
                tok.push_back(ch);
            } else {
                bad();
            }
        }
        if (!tok.empty()) coeffs.push_back(check_code(std::stol(tok)));
        return PolyQ(std::move(coeffs));
    }
    std::map<int, int> terms;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == '+') {
            ++i;
            continue;
        }
        long coeff = 1;
        bool have_coeff = false;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) {
            coeff = std::stol(s.substr(i, j - i));
            have_coeff = true;
        }
        int power = 0;
        if (j < s.size() && (s[j] == 'z' || s[j] == 'x')) {
            ++j;
            power = 1;
            if (j < s.size() && s[j] == '^') {
                std::size_t k = ++j;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                if (j == k) bad();
                power = std::stoi(s.substr(k, j - k));
            }
        } else if (!have_coeff) {
            bad();
        }
        if (j < s.size() && s[j] != '+') bad();
        terms[power] = F.add(terms[power], check_code(coeff));
        i = j;
    }
    std::vector<int> coeffs(static_cast<std::size_t>(terms.rbegin()->first) + 1, 0);
    for (auto [pw, c] : terms) coeffs[static_cast<std::size_t>(pw)] = c;
    return PolyQ(std::move(coeffs));
}

namespace {

std::mutex irr_mutex;
std::map<std::pair<u64, int>, std::vector<PolyQ>>& irr_memo() {
    static std::map<std::pair<u64, int>, std::vector<PolyQ>> memo;
    return memo;
}

bool divides(const Fq& F, const PolyQ& g, const PolyQ& f) { return poly_mod(F, f, g).is_zero(); }

}  // namespace

std::vector<PolyQ> enumerate_irreducibles(const Fq& F, int d, u64 budget) {
    require(d >= 1, ErrorKind::DegreeOutOfRange, "degree must be positive");
    const auto key = std::make_pair(F.q(), d);
    {
        std::lock_guard lock(irr_mutex);
        auto it = irr_memo().find(key);
        if (it != irr_memo().end()) return it->second;
    }
    Int count = pow_int(Int(static_cast<unsigned long>(F.q())), static_cast<unsigned>(d));
    require(count <= Int(static_cast<unsigned long>(budget)), ErrorKind::EnumerationTooLarge,
            "q^d = " + count.get_str() + " exceeds the enumeration budget");
    std::vector<PolyQ> smaller;
    for (int e = 1; 2 * e <= d; ++e) {
        auto part = enumerate_irreducibles(F, e, budget);
        smaller.insert(smaller.end(), part.begin(), part.end());
    }
    const u64 q = F.q();
    const u64 total = count.get_ui();
    std::vector<PolyQ> out;
    std::vector<int> c(static_cast<std::size_t>(d) + 1, 0);
    c[d] = 1;
    for (u64 idx = 0; idx < total; ++idx) {
        // idx enumerates (c_0, ..., c_{d-1}) with c_0 most significant, i.e. in output order.
        u64 rest = idx;
        for (int i = d - 1; i >= 0; --i) {
            c[i] = static_cast<int>(rest % q);
            rest /= q;
        }
        if (c[0] == 0) continue;
        PolyQ f(c);
        bool irreducible = true;
        for (const auto& g : smaller) {
            if (divides(F, g, f)) {
                irreducible = false;
                break;
            }
        }
        if (irreducible) out.push_back(std::move(f));
    }
    std::lock_guard lock(irr_mutex);
    irr_memo().emplace(key, out);
    return out;
}

Int count_irreducibles(u64 q, int m) {
    require(m >= 1, ErrorKind::DegreeOutOfRange, "degree must be positive");
    Int total = 0;
    const Int Q(static_cast<unsigned long>(q));
    for (u64 s : divisors(static_cast<u64>(m))) total += mobius(static_cast<u64>(m) / s) * (pow_int(Q, static_cast<unsigned>(s)) - 1);
    return total / m;
}

bool is_irreducible(const Fq& F, const PolyQ& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    if (f[0] == 0) return false;
    for (int e = 1; 2 * e <= f.degree(); ++e)
        for (const auto& g : enumerate_irreducibles(F, e))
            if (divides(F, g, f)) return false;
    return true;
}

std::vector<std::pair<PolyQ, int>> factor_poly(const Fq& F, const PolyQ& f) {
    require(f.is_monic(), ErrorKind::NotMonic, "factor_poly needs a monic polynomial");
    require(f[0] != 0, ErrorKind::ZeroConstantTerm, "factor_poly needs a nonzero constant term");
    std::vector<std::pair<PolyQ, int>> out;
    PolyQ rest = f;
    for (int e = 1; 2 * e <= rest.degree(); ++e) {
        for (const auto& g : enumerate_irreducibles(F, e)) {
            int mult = 0;
            while (rest.degree() >= e) {
                auto [quot, rem] = poly_divmod(F, rest, g);
                if (!rem.is_zero()) break;
                rest = std::move(quot);
                ++mult;
            }
            if (mult) out.emplace_back(g, mult);
        }
    }
    if (rest.degree() >= 1) {
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& pr) { return pr.first == rest; });
        if (it != out.end())
            ++it->second;
        else
            out.emplace_back(rest, 1);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

bool is_squarefree(const Fq& F, const PolyQ& f) {
    require(f.is_monic(), ErrorKind::NotMonic, "is_squarefree needs a monic polynomial");
    if (f.degree() < 1) return true;
    return poly_gcd(F, f, poly_derivative(F, f)).degree() == 0;
}

}  // namespace glnq
