#include "glnq/counting.hpp"

#include <algorithm>
#include <functional>

#include "glnq/error.hpp"
#include "glnq/green.hpp"
#include "glnq/matrix.hpp"

namespace glnq {

std::string to_string(Method m) {
    switch (m) {
        case Method::closed_re_main: return "closed_re_main";
        case Method::closed_n_minus_1: return "closed_n_minus_1";
        case Method::closed_nu_n: return "closed_nu_n";
        case Method::frobenius: return "frobenius";
        case Method::brute: return "brute";
    }
    return "?";
}

Method parse_method(const std::string& s) {
    std::string t = s;
    std::replace(t.begin(), t.end(), '-', '_');
    for (Method m : {Method::closed_re_main, Method::closed_n_minus_1, Method::closed_nu_n, Method::frobenius, Method::brute})
        if (to_string(m) == t) return m;
    fail(ErrorKind::InvalidInput, "unknown method '" + s + "'");
}

namespace {

Int ipow(const Int& q, long e) { return pow_int(q, static_cast<unsigned>(e)); }

Int binom_int(const Int& n, int k) {
    if (k < 0 || n < k) return 0;
    Int out = 1;
    for (int j = 0; j < k; ++j) out = out * (n - j) / (j + 1);
    return out;
}

Int exact_div(const Int& a, const Int& b, const std::string& ctx) {
    require(b != 0 && mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0, ErrorKind::InexactDivision, ctx);
    return a / b;
}

void check_divides(int d, int n, const std::string& what) {
    require(d >= 1 && n >= 1 && n % d == 0, ErrorKind::DivisibilityViolation, what);
}

Int sign_of(long e) { return e % 2 == 0 ? Int(1) : Int(-1); }

}  // namespace

Int gamma_q(const Int& q, int n) {
    Int out = 1;
    const Int qn = ipow(q, n);
    for (int i = 0; i < n; ++i) out *= qn - ipow(q, i);
    return out;
}

Rational P_nk(const Int& q, int n, int k) {
    const Int g = gamma_q(q, n);
    Rational inner(sign_of(n) * g, Int(n) * (ipow(q, n) - 1));
    inner.canonicalize();
    Rational out = rational_pow(inner, k) / Rational(g);
    out.canonicalize();
    return out;
}

Rational D_nkd(const Int& q, int n, int k, int d) {
    check_divides(d, n, "D_{n,k,d} needs d | n");
    Rational out = 0;
    for (int r = 0; r < n / d; ++r) out += Rational(sign_of(static_cast<long>(r) * k)) * rational_pow(Rational(deg_ndr(q, n, d, r)), 2 - k);
    out.canonicalize();
    return out;
}

Rational C_nkc(const Int& q, int n, int k, int c) {
    check_divides(c, n, "C_{n,k,c} needs c | n");
    std::vector<u64> divs;
    for (u64 s : divisors(static_cast<u64>(n)))
        if (mobius(static_cast<u64>(n) / s) != 0) divs.push_back(s);
    const Int qn1 = ipow(q, n) - 1;
    const Int base_l = qn1 / (ipow(q, c) - 1);
    Rational total = 0;
    std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
    while (true) {
        Int num = qn1, l = base_l;
        for (std::size_t i = 0; i < pick.size(); ++i) {
            const u64 s = divs[pick[i]];
            const Int qs1 = ipow(q, static_cast<long>(s)) - 1;
            num *= qs1 * mobius(static_cast<u64>(n) / s);
            l = lcm_int(l, qs1);
        }
        total += Rational(num, l);
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < divs.size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }
    total.canonicalize();
    return total;
}

Int count_irreducibles_q(const Int& q, int m) {
    require(m >= 1, ErrorKind::RangeError, "degree must be positive");
    Int s = 0;
    for (u64 d : divisors(static_cast<u64>(m))) s += mobius(static_cast<u64>(m) / d) * (ipow(q, static_cast<long>(d)) - 1);
    return exact_div(s, Int(m), "Gauss count");
}

Int ct_box_size_q(const Int& q, const Partition& mu) {
    Int out = gamma_q(q, mu.size());
    Int den = 1;
    for (int part : mu.parts()) den *= ipow(q, part) - 1;
    out = exact_div(out, den, "regular semisimple class size");
    for (const auto& [i, m] : mu.multiplicities()) out *= binom_int(count_irreducibles_q(q, i), m);
    return out;
}

Table1Row table1(const Int& q, int n, int k, int d, int c, int r) {
    check_divides(d, n, "table1 needs d | n");
    check_divides(c, d, "table1 needs c | d");
    Table1Row row;
    row.gamma = gamma_q(q, n);
    row.P_nk = P_nk(q, n, k);
    row.deg_ndr = deg_ndr(q, n, d, r);
    row.D_nkd = D_nkd(q, n, k, d);
    row.C_nkc = C_nkc(q, n, k, c);
    return row;
}

bool re_main_eligible(int n, const Partition& mu) {
    const int l = mu.length();
    return n > 2 && mu.size() == n && l > 1 && mu[static_cast<std::size_t>(l - 1)] == 1 &&
           mu[static_cast<std::size_t>(l - 2)] > 1;
}

Rational re_main_normalized(const Int& q, int n, int k, const Partition& mu) {
    require(mu.size() == n, ErrorKind::SizeMismatch, "mu must partition n");
    Rational total = 0;
    for (int r = 0; r < n; ++r) {
        const long chi = mn_character(hook(n, r), mu);
        if (chi == 0) continue;
        const Int den = ipow(q, r * (r + 1) / 2) * q_binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(r), q);
        total += Rational(sign_of(static_cast<long>(r) * k) * chi) / rational_pow(Rational(den), k - 1);
    }
    total.canonicalize();
    return total;
}

CountResult closed_re_main(const Int& q, int n, int k, const Partition& mu, bool box) {
    require(re_main_eligible(n, mu), ErrorKind::HypothesisViolation,
            "needs n > 2 and mu = (mu_1, ..., mu_l) with l > 1 and mu_{l-1} > mu_l = 1");
    require(k >= 1, ErrorKind::HypothesisViolation, "k must be positive");
    require(box || mu.distinct_parts(), ErrorKind::HypothesisViolation,
            "the formula counts regular semisimple products only; repeated parts need --box");
    Rational v = Rational(pow_int(ct_box_size_q(q, Partition{n}), static_cast<unsigned>(k)) * ct_box_size_q(q, mu)) /
                 Rational(gamma_q(q, n)) * re_main_normalized(q, n, k, mu);
    v.canonicalize();
    return {n, k, mu, q, to_integer(v, "closed_re_main"), Method::closed_re_main, box};
}

CountResult closed_n_minus_1(const Int& q, int n, int k) {
    require(n > 2, ErrorKind::HypothesisViolation, "needs n > 2");
    require(k >= 1, ErrorKind::HypothesisViolation, "k must be positive");
    const Partition mu{n - 1, 1};
    const long e = static_cast<long>(n) * k - n - k;
    Rational factor = 1 + Rational(sign_of(e < 0 ? -e : e)) / Rational(ipow(q, static_cast<long>(n) * (n - 1) / 2 * (k - 1)));
    Rational v = Rational(pow_int(ct_box_size_q(q, Partition{n}), static_cast<unsigned>(k)) * ct_box_size_q(q, mu)) /
                 Rational(gamma_q(q, n)) * factor;
    v.canonicalize();
    return {n, k, mu, q, to_integer(v, "closed_n_minus_1"), Method::closed_n_minus_1, false};
}

CountResult closed_nu_n(const Int& q, int n, int k) {
    require(n >= 1 && k >= 1, ErrorKind::HypothesisViolation, "n and k must be positive");
    Rational sum = 0;
    for (u64 du : divisors(static_cast<u64>(n))) {
        const int d = static_cast<int>(du);
        Rational inner = 0;
        for (u64 c : divisors(du)) {
            const int mu = mobius(du / c);
            if (mu) inner += Rational(mu) * C_nkc(q, n, k + 1, static_cast<int>(c));
        }
        sum += Rational(sign_of(static_cast<long>(n) * (k + 1) / d) * pow_int(Int(d), static_cast<unsigned>(k))) *
               D_nkd(q, n, k + 1, d) * inner;
    }
    Rational v = P_nk(q, n, k + 1) * sum;
    v.canonicalize();
    return {n, k, Partition{n}, q, to_integer(v, "closed_nu_n"), Method::closed_nu_n, false};
}

Int count_irr_div(const Int& q, int n, int d, const Int& b) {
    check_divides(d, n, "count_irr_div needs d | n");
    const Int qn1 = ipow(q, n) - 1;
    require(b >= 1 && mpz_divisible_p(qn1.get_mpz_t(), b.get_mpz_t()) != 0, ErrorKind::DivisibilityViolation,
            "b must divide q^n - 1");
    Int s = 0;
    for (u64 c : divisors(static_cast<u64>(d))) {
        const int mu = mobius(static_cast<u64>(d) / c);
        if (!mu) continue;
        const Int qc = ipow(q, static_cast<long>(c));
        s += mu * (qn1 / lcm_int(q_integer(static_cast<unsigned>(n / static_cast<int>(c)), qc), b));
    }
    return exact_div(s, Int(d), "count_irr_div");
}

Rational char_sum_power_identity(const Int& q, int n, int d, int k) {
    check_divides(d, n, "needs d | n");
    Rational s = 0;
    for (u64 c : divisors(static_cast<u64>(d))) {
        const int mu = mobius(static_cast<u64>(d) / c);
        if (mu) s += Rational(mu) * C_nkc(q, n, k, static_cast<int>(c));
    }
    s /= d;
    s.canonicalize();
    return s;
}

Int char_sum_power_direct(const FieldCtx& ctx, int d, int k) {
    const int n = ctx.n();
    check_divides(d, n, "needs d | n");
    const u64 qn1 = ctx.subfield_order(n);
    const u64 M = ctx.unit_order();
    const u64 qd = pow_u64(ctx.q(), static_cast<unsigned>(d));
    u64 qint = 0;  // [n/d]_{q^d}
    for (int j = 0; j < n / d; ++j) qint = (qint + pow_u64(qd, static_cast<unsigned>(j))) % qn1;
    Int total = 0;
    for (const auto& f : ctx.irreducibles(d)) {
        const u64 e = mulmod(f.ell % qn1, qint, qn1);
        CyclotomicSum inner(M);
        for (const auto& p : ctx.irreducibles(n))
            for (u64 root : ctx.ell_orbit(p.poly)) {
                // theta(eps_n^root)^e
                inner += ctx.theta(ctx.pow(ctx.subfield_generator(n), mulmod(root, e, qn1)));
            }
        total += pow_int(inner.integer_value("root sum"), static_cast<unsigned>(k));
    }
    return total;
}

std::vector<u64> ell_representatives(u64 q, int d) {
    const u64 m = pow_u64(q, static_cast<unsigned>(d)) - 1;
    std::vector<u64> out;
    for (u64 x = 0; x < m; ++x) {
        u64 y = x;
        bool minimal = true;
        int size = 0;
        do {
            ++size;
            y = mulmod(y, q, m);
            if (y < x) {
                minimal = false;
                break;
            }
        } while (y != x);
        if (minimal && size == d) out.push_back(x);
    }
    return out;
}

Int char_sum_reg_elliptic(u64 q, int n, int d, u64 ell, int r) {
    check_divides(d, n, "needs d | n");
    require(r >= 0 && r < n / d, ErrorKind::RangeError, "r must lie in 0..n/d-1");
    const Int Q(static_cast<unsigned long>(q));
    const Int qn1 = ipow(Q, n) - 1;
    const Int e = Int(static_cast<unsigned long>(ell)) * q_integer(static_cast<unsigned>(n / d), ipow(Q, d));
    Int s = 0;
    for (u64 sd : divisors(static_cast<u64>(n))) {
        const int mu = mobius(static_cast<u64>(n) / sd);
        if (!mu) continue;
        const Int qs1 = ipow(Q, static_cast<long>(sd)) - 1;
        const Int er = e % qn1;
        if (mpz_divisible_p(er.get_mpz_t(), qs1.get_mpz_t())) s += mu * qs1;
    }
    Rational v = Rational(gamma_q(Q, n)) / Rational(qn1) * Rational(sign_of(static_cast<long>(n / d) * (d - 1) + r)) *
                 Rational(d, n) * Rational(s);
    v.canonicalize();
    return to_integer(v, "regular elliptic character sum");
}

Int char_sum_reg_elliptic(const FieldCtx& ctx, const PolyQ& f, int r) {
    return char_sum_reg_elliptic(ctx.q(), ctx.n(), f.degree(), ctx.ell_of(f), r);
}

namespace {

using EllSource = std::function<std::vector<u64>(int)>;

CyclotomicSum ct_box_sum(u64 q, int d, u64 ell, int r, const Partition& mu, const EllSource& ells) {
    const int n = mu.size();
    check_divides(d, n, "needs d | n");
    require(r >= 0 && r < n / d, ErrorKind::RangeError, "r must lie in 0..n/d-1");
    const u64 m = pow_u64(q, static_cast<unsigned>(d)) - 1;
    std::vector<int> tilde;
    for (int part : mu.parts()) {
        if (part % d) return CyclotomicSum(1);
        tilde.push_back(part / d);
    }
    const long chi = mn_character(hook(n / d, r), Partition(tilde));
    if (chi == 0) return CyclotomicSum(1);

    const Int Q(static_cast<unsigned long>(q));
    Int scale = gamma_q(Q, n);
    for (int part : mu.parts()) scale /= ipow(Q, part) - 1;
    scale *= sign_of(static_cast<long>(n / d) * (d - 1)) * chi;

    CyclotomicSum value(m, scale);
    for (const auto& [s, mult] : mu.multiplicities()) {
        // elementary symmetric polynomial e_mult of the root sums over F_s
        std::vector<CyclotomicSum> e(static_cast<std::size_t>(mult + 1), CyclotomicSum(m));
        e[0] = CyclotomicSum(m, Int(1));
        for (u64 lh : ells(s)) {
            CyclotomicSum t(m);
            u64 x = mulmod(lh % m, ell % m, m);
            for (int j = 0; j < d; ++j) {
                t.add_term(x, 1);
                x = mulmod(x, q, m);
            }
            for (int j = mult; j >= 1; --j) e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * t;
        }
        value = value * e[static_cast<std::size_t>(mult)];
        if (value.structurally_zero()) break;
    }
    return value;
}

CountResult frobenius_impl(u64 q, int n, int k, const Partition& mu, bool box, GreenEngine* engine, const EllSource& ells) {
    require(k >= 1 && mu.size() == n, ErrorKind::InvalidInput, "needs k >= 1 and mu |- n");
    const bool rss_target = box || mu.distinct_parts();
    require(rss_target || engine != nullptr, ErrorKind::UnsupportedTarget,
            "g for cycle type " + mu.to_string() + " needs character values off regular semisimple classes");
    const Int Q(static_cast<unsigned long>(q));
    Rational total = 0;
    for (u64 du : divisors(static_cast<u64>(n))) {
        const int d = static_cast<int>(du);
        const auto fs = ells(d);
        for (int r = 0; r < n / d; ++r) {
            CyclotomicSum acc(1);
            for (std::size_t i = 0; i < fs.size(); ++i) {
                const u64 ell = fs[i];
                const Int s_ct = char_sum_reg_elliptic(q, n, d, ell, r);
                if (s_ct == 0) continue;
                CyclotomicSum target;
                if (rss_target) {
                    target = ct_box_sum(q, d, ell, r, mu, ells);
                } else {
                    const FieldCtx& ctx = engine->ctx();
                    const auto& irr = ctx.irreducibles(d);
                    const auto it = std::find_if(irr.begin(), irr.end(), [&](const IrreducibleEntry& e) { return e.ell == ell; });
                    require(it != irr.end(), ErrorKind::InvalidInput, "discrete log not found in the field context");
                    const ClassFunction chi = engine->chi(primary_index(it->poly, hook(n / d, r)));
                    const TinyGroup& G = engine->group(n);
                    target = CyclotomicSum(ctx.unit_order());
                    for (std::size_t c = 0; c < G.class_count(); ++c)
                        if (G.class_at(c).cycle_type() == mu)
                            target += chi[c] * Int(static_cast<unsigned long>(G.class_size_at(c)));
                }
                acc += target * pow_int(s_ct, static_cast<unsigned>(k));
            }
            if (acc.structurally_zero()) continue;
            const Int sum = acc.integer_value("character sum over F_d");
            total += Rational(sum) * rational_pow(Rational(deg_ndr(Q, n, d, r)), 1 - k);
        }
    }
    total /= Rational(gamma_q(Q, n));
    total.canonicalize();
    require(total.get_den() == 1, ErrorKind::InexactDivision, "Frobenius sum not divisible by |GL_n|");
    return {n, k, mu, Q, total.get_num(), Method::frobenius, box};
}

}  // namespace

CyclotomicSum char_sum_ct_box(u64 q, int d, u64 ell, int r, const Partition& mu) {
    return ct_box_sum(q, d, ell, r, mu, [q](int s) { return ell_representatives(q, s); });
}

CyclotomicSum char_sum_ct_box(const FieldCtx& ctx, const PolyQ& f, int r, const Partition& mu) {
    auto ells = [&ctx](int s) {
        std::vector<u64> out;
        for (const auto& e : ctx.irreducibles(s)) out.push_back(e.ell);
        return out;
    };
    return ct_box_sum(ctx.q(), f.degree(), ctx.ell_of(f), r, mu, ells);
}

CountResult frobenius_count(u64 q, int n, int k, const Partition& mu, bool box, GreenEngine* engine) {
    std::map<int, std::vector<u64>> cache;
    auto ells = [&](int s) -> std::vector<u64> {
        auto it = cache.find(s);
        if (it == cache.end()) it = cache.emplace(s, ell_representatives(q, s)).first;
        return it->second;
    };
    return frobenius_impl(q, n, k, mu, box, engine, ells);
}

CountResult frobenius_count(const FieldCtx& ctx, int k, const Partition& mu, bool box, GreenEngine* engine) {
    auto ells = [&ctx](int s) {
        std::vector<u64> out;
        for (const auto& e : ctx.irreducibles(s)) out.push_back(e.ell);
        return out;
    };
    return frobenius_impl(ctx.q(), ctx.n(), k, mu, box, engine, ells);
}

CountResult count_auto(const Int& q, int n, int k, const Partition& mu, bool box) {
    require(mu.size() == n, ErrorKind::SizeMismatch, "mu must partition n");
    if (mu == Partition{n}) {
        auto r = closed_nu_n(q, n, k);
        r.box = box;
        return r;
    }
    if (re_main_eligible(n, mu) && (box || mu.distinct_parts())) return closed_re_main(q, n, k, mu, box);
    require(q.fits_ulong_p(), ErrorKind::TooLarge, "q too large for the Frobenius evaluation");
    const u64 qq = q.get_ui();
    if (box || mu.distinct_parts()) return frobenius_count(qq, n, k, mu, box);
    FieldCtx ctx(qq, n);
    GreenEngine engine(ctx);
    return frobenius_count(ctx, k, mu, box, &engine);
}

Rational prob(const Int& q, int k, const Partition& mu, bool box) {
    const int n = mu.size();
    Rational p(count_auto(q, n, k, mu, box).value, pow_int(ct_box_size_q(q, Partition{n}), static_cast<unsigned>(k)));
    p.canonicalize();
    return p;
}

std::vector<LimitRow> limit_report(int n, int k, const Partition& mu, const std::vector<Int>& qs) {
    require(mu.size() == n, ErrorKind::SizeMismatch, "mu must partition n");
    const bool exact = mu == Partition{n} || mu.distinct_parts();
    std::vector<LimitRow> rows;
    for (const Int& q : qs) {
        const bool box = !exact;
        auto res = count_auto(q, n, k, mu, box);
        LimitRow row;
        row.q = q;
        row.p = Rational(res.value, pow_int(ct_box_size_q(q, Partition{n}), static_cast<unsigned>(k)));
        row.p.canonicalize();
        row.target = Rational(Int(1), z_of(mu));
        row.gap = abs(row.p - row.target);
        row.method = res.method;
        row.box = box;
        rows.push_back(row);
    }
    return rows;
}

long e_exponent(int n, int d, int r) {
    require(d >= 1 && n % d == 0, ErrorKind::RangeError, "d must divide n");
    require(r >= 0 && r <= n / d - 1, ErrorKind::RangeError, "r must lie in 0..n/d-1");
    const long m = n / d;
    return static_cast<long>(d) * r * (r + 1) / 2 + static_cast<long>(n) * (n + 1) / 2 - d * m * (m + 1) / 2 +
           static_cast<long>(d) * r * (m - 1 - r);
}

std::vector<Int> prime_powers_in_residue(int n, int residue, std::size_t count, const Int& start) {
    require(n >= 1, ErrorKind::InvalidInput, "n must be positive");
    const long res = ((residue % n) + n) % n;
    std::vector<Int> out;
    const u64 g = gcd_u64(static_cast<u64>(res), static_cast<u64>(n));
    if (g == 1 || n == 1) {
        u64 q = start < 2 ? 2 : start.get_ui();
        while (out.size() < count) {
            if (q % static_cast<u64>(n) == static_cast<u64>(res) && prime_power_split(q)) out.emplace_back(static_cast<unsigned long>(q));
            ++q;
        }
        return out;
    }
    // only powers of primes dividing gcd(residue, n) can land here
    const std::size_t horizon = count * static_cast<std::size_t>(n) + 64;
    for (auto [p, e] : factorize(g)) {
        Int x = static_cast<unsigned long>(p);
        for (std::size_t j = 1; j <= horizon; ++j, x *= static_cast<unsigned long>(p)) {
            Int r = x % n;
            if (r == res && x >= start) out.push_back(x);
        }
    }
    std::sort(out.begin(), out.end());
    if (out.size() > count) out.resize(count);
    return out;
}

int default_degree_bound(int n, int k) { return n * n * (k + 1); }

std::vector<Rational> lagrange_interpolate(const std::vector<Int>& xs, const std::vector<Rational>& ys) {
    require(xs.size() == ys.size() && !xs.empty(), ErrorKind::InvalidInput, "need matching nonempty samples");
    const std::size_t m = xs.size();
    // Newton divided differences, then expand to monomials
    std::vector<Rational> dd = ys;
    for (std::size_t j = 1; j < m; ++j)
        for (std::size_t i = m - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - j]);
            if (i == j) break;
        }
    std::vector<Rational> coeffs(1, dd[m - 1]);
    for (std::size_t j = m - 1; j-- > 0;) {
        // coeffs = coeffs * (x - xs[j]) + dd[j]
        std::vector<Rational> next(coeffs.size() + 1, Rational(0));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] += coeffs[i];
            next[i] -= coeffs[i] * Rational(xs[j]);
        }
        next[0] += dd[j];
        coeffs = std::move(next);
    }
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    for (auto& c : coeffs) c.canonicalize();
    return coeffs;
}

Rational poly_eval(const std::vector<Rational>& coeffs, const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    acc.canonicalize();
    return acc;
}

FitResult quasipoly_fit(int n, int k, int residue, const std::vector<Int>& samples, int degree_bound) {
    require(n >= 1 && k >= 1, ErrorKind::InvalidInput, "n and k must be positive");
    if (degree_bound < 0) degree_bound = default_degree_bound(n, k);
    const long res = ((residue % n) + n) % n;
    for (const Int& q : samples)
        require(Int(q % n) == res, ErrorKind::InvalidInput, "sample " + q.get_str() + " is not in the residue class");
    require(samples.size() >= static_cast<std::size_t>(degree_bound) + 2, ErrorKind::InsufficientSamples,
            "residue " + std::to_string(res) + " mod " + std::to_string(n) + ": " + std::to_string(samples.size()) +
                " prime powers available, " + std::to_string(degree_bound + 2) + " needed");
    FitResult fit;
    fit.n = n;
    fit.k = k;
    fit.residue = static_cast<int>(res);
    fit.samples = samples;
    std::vector<Int> xs(samples.begin(), samples.begin() + degree_bound + 1);
    std::vector<Rational> ys;
    for (const Int& q : xs) ys.emplace_back(closed_nu_n(q, n, k).value);
    fit.coefficients = lagrange_interpolate(xs, ys);
    for (std::size_t i = static_cast<std::size_t>(degree_bound) + 1; i < samples.size(); ++i) {
        const Rational want(closed_nu_n(samples[i], n, k).value);
        if (poly_eval(fit.coefficients, Rational(samples[i])) != want) {
            fit.verdict = Verdict::NonPolynomial;
            fit.witness = samples[i];
            break;
        }
    }
    return fit;
}

FitResult quasipoly_fit(int n, int k, int residue, int degree_bound) {
    if (degree_bound < 0) degree_bound = default_degree_bound(n, k);
    const auto samples = prime_powers_in_residue(n, residue, static_cast<std::size_t>(degree_bound) + 2);
    return quasipoly_fit(n, k, residue, samples, degree_bound);
}

bool q_to_1_check(int n, int k, const Partition& mu) {
    require(re_main_eligible(n, mu), ErrorKind::HypothesisViolation,
            "needs n > 2 and mu = (mu_1, ..., mu_l) with l > 1 and mu_{l-1} > mu_l = 1");
    const Rational lhs = re_main_normalized(Int(1), n, k, mu);
    Rational rhs = Rational(stanley_count(n, k, mu)) /
                   Rational(pow_int(factorial(static_cast<unsigned>(n - 1)), static_cast<unsigned>(k))) /
                   (Rational(factorial(static_cast<unsigned>(n)) / z_of(mu)) / Rational(factorial(static_cast<unsigned>(n))));
    rhs.canonicalize();
    return lhs == rhs;
}

}  // namespace glnq
