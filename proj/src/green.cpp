#include "glnq/green.hpp"

#include "glnq/error.hpp"

namespace glnq {

namespace {

Int parabolic_order(u64 q, const std::vector<int>& comp) {
    Int out = 1;
    int before = 0;
    for (int c : comp) {
        out *= gamma_n(q, c);
        out *= pow_int(Int(static_cast<unsigned long>(q)), static_cast<unsigned>(before * c));
        before += c;
    }
    return out;
}

// sum_{i=1}^{m} theta(eps_m^{ell})^{q^i b} as a sum over zeta_M
CyclotomicSum frobenius_orbit_sum(const FieldCtx& ctx, int m, u64 ell, u64 b) {
    const u64 M = ctx.unit_order();
    const u64 om = ctx.subfield_order(m);
    const u64 step = M / om;
    CyclotomicSum s(M);
    u64 e = mulmod(ell % om, b % om, om);
    for (int i = 1; i <= m; ++i) {
        e = mulmod(e, ctx.q() % om, om);
        s.add_term(mulmod(step, e, M), 1);
    }
    return s;
}

CyclotomicSum p_char_on_index(const FieldCtx& ctx, const ClassIndex& idx, u64 b) {
    if (!idx.is_primary()) return CyclotomicSum(ctx.unit_order());
    const auto& [h, mu] = idx.parts.front();
    const int m = h.degree();
    const Int Q = pow_int(Int(static_cast<unsigned long>(ctx.q())), static_cast<unsigned>(m));
    return frobenius_orbit_sum(ctx, m, ctx.ell_of(h), b) * kappa(mu, Q);
}

u64 q_integer_mod(unsigned k, u64 base, u64 mod) {
    u64 s = 0, t = 1 % mod;
    for (unsigned j = 0; j < k; ++j) {
        s = (s + t) % mod;
        t = mulmod(t, base % mod, mod);
    }
    return s;
}

}  // namespace

Int kappa(const Partition& mu, const Int& t) {
    Int out = 1;
    for (int i = 1; i < mu.length(); ++i) out *= 1 - pow_int(t, static_cast<unsigned>(i));
    return out;
}

CyclotomicSum p_char(const FieldCtx& ctx, int d, u64 b, const MatrixQ& g) {
    require(g.n == d, ErrorKind::SizeMismatch, "P_d needs a d x d matrix");
    return p_char_on_index(ctx, class_index(ctx.base(), g), b);
}

CyclotomicSum parabolic_induct(const FieldCtx& ctx, const std::vector<int>& nu, const std::vector<CharEvaluator>& factors,
                               const MatrixQ& g, u64 budget) {
    require(nu.size() == factors.size(), ErrorKind::SizeMismatch, "one factor per block");
    int n = 0;
    for (int c : nu) n += c;
    require(n == g.n, ErrorKind::SizeMismatch, "blocks must fill the matrix");
    const Fq& F = ctx.base();
    std::vector<int> start;
    for (int s = 0, i = 0; i < static_cast<int>(nu.size()); s += nu[static_cast<std::size_t>(i)], ++i) start.push_back(s);

    CyclotomicSum total(ctx.unit_order());
    enumerate_group(F, n, budget, [&](const MatrixQ& x) {
        const MatrixQ y = mat_mul(F, mat_mul(F, x, g), mat_inverse(F, x));
        for (std::size_t bi = 0; bi < nu.size(); ++bi)
            for (std::size_t bj = 0; bj < bi; ++bj)
                for (int r = 0; r < nu[bi]; ++r)
                    for (int c = 0; c < nu[bj]; ++c)
                        if (y.at(start[bi] + r, start[bj] + c)) return;
        CyclotomicSum prod(ctx.unit_order(), Int(1));
        for (std::size_t i = 0; i < nu.size(); ++i) {
            prod = prod * factors[i](submatrix(y, start[i], start[i], nu[i]));
            if (prod.structurally_zero()) return;
        }
        total += prod;
    });
    return total.divide_exact(parabolic_order(F.q(), nu));
}

GreenEngine::GreenEngine(const FieldCtx& ctx, u64 budget) : ctx_(ctx), budget_(budget) {}

const TinyGroup& GreenEngine::group(int m) {
    require(m >= 1 && m <= ctx_.n(), ErrorKind::DegreeOutOfRange, "group size must lie in 1..n");
    auto& slot = groups_[m];
    if (!slot) slot = std::make_unique<TinyGroup>(ctx_.base(), m, budget_);
    return *slot;
}

ClassFunction GreenEngine::p_char(int d, u64 b) {
    const TinyGroup& G = group(d);
    ClassFunction out;
    out.reserve(G.class_count());
    for (const auto& idx : G.classes()) out.push_back(p_char_on_index(ctx_, idx, b));
    return out;
}

const GreenEngine::Histogram& GreenEngine::histogram(const std::vector<int>& comp) {
    if (auto it = hist_.find(comp); it != hist_.end()) return it->second;
    const Fq& F = ctx_.base();
    const u64 q = F.q();
    int n = 0;
    for (int c : comp) n += c;
    const TinyGroup& G = group(n);
    std::vector<const TinyGroup*> blocks;
    for (int c : comp) blocks.push_back(&group(c));

    Histogram h;
    h.parabolic_order = parabolic_order(q, comp);
    require(h.parabolic_order <= Int(static_cast<unsigned long>(budget_)), ErrorKind::GroupTooLarge,
            "parabolic subgroup of order " + h.parabolic_order.get_str() + " exceeds budget");

    std::vector<int> start;
    std::vector<std::pair<int, int>> upper;  // free entries above the diagonal blocks
    for (int s = 0; int c : comp) {
        start.push_back(s);
        for (int r = 0; r < s; ++r)
            for (int col = s; col < s + c; ++col) upper.emplace_back(r, col);
        s += c;
    }
    const u64 upper_count = pow_u64(q, static_cast<unsigned>(upper.size()));

    std::vector<std::size_t> pick(comp.size(), 0);
    std::vector<std::size_t> key(comp.size() + 1);
    MatrixQ m(n);
    while (true) {
        std::fill(m.a.begin(), m.a.end(), 0);
        for (std::size_t i = 0; i < comp.size(); ++i) {
            const MatrixQ& blk = blocks[i]->elements()[pick[i]];
            for (int r = 0; r < comp[i]; ++r)
                for (int c = 0; c < comp[i]; ++c) m.at(start[i] + r, start[i] + c) = blk.at(r, c);
            key[i + 1] = blocks[i]->class_of_element(pick[i]);
        }
        for (u64 u = 0; u < upper_count; ++u) {
            u64 x = u;
            for (auto [r, c] : upper) {
                m.at(r, c) = static_cast<int>(x % q);
                x /= q;
            }
            key[0] = G.class_of(m);
            ++h.counts[key];
        }
        std::size_t i = 0;
        for (; i < comp.size(); ++i) {
            if (++pick[i] < blocks[i]->order()) break;
            pick[i] = 0;
        }
        if (i == comp.size()) break;
    }
    return hist_.emplace(comp, std::move(h)).first->second;
}

ClassFunction GreenEngine::induce(const std::vector<int>& comp, const std::vector<ClassFunction>& factors) {
    require(comp.size() == factors.size() && !comp.empty(), ErrorKind::SizeMismatch, "one factor per block");
    if (comp.size() == 1) return factors.front();
    int n = 0;
    for (int c : comp) n += c;
    const Histogram& h = histogram(comp);
    const TinyGroup& G = group(n);
    const u64 M = ctx_.unit_order();
    ClassFunction sums(G.class_count(), CyclotomicSum(M));
    for (const auto& [key, count] : h.counts) {
        CyclotomicSum prod(M, Int(static_cast<unsigned long>(count)));
        for (std::size_t i = 0; i < comp.size() && !prod.structurally_zero(); ++i) prod = prod * factors[i][key[i + 1]];
        sums[key[0]] += prod;
    }
    const Int gamma = gamma_n(ctx_.q(), n);
    ClassFunction out;
    out.reserve(sums.size());
    for (std::size_t c = 0; c < sums.size(); ++c) {
        const Int centralizer = gamma / Int(static_cast<unsigned long>(G.class_size_at(c)));
        out.push_back((sums[c] * centralizer).divide_exact(h.parabolic_order));
    }
    return out;
}

ClassFunction GreenEngine::j_char(const PolyQ& f, const Partition& lambda) {
    const auto key = std::make_pair(f, lambda);
    if (auto it = j_cache_.find(key); it != j_cache_.end()) return it->second;
    const int d = f.degree();
    const int m = lambda.size();
    const u64 ell = ctx_.ell_of(f);
    const u64 qd = pow_u64(ctx_.q(), static_cast<unsigned>(d));
    const TinyGroup& G = group(d * m);
    const Int L = factorial(static_cast<unsigned>(m));
    ClassFunction acc(G.class_count(), CyclotomicSum(ctx_.unit_order()));
    for (const auto& nu : partitions_of(m)) {
        const long chi = mn_character(lambda, nu);
        if (chi == 0) continue;
        std::vector<int> comp;
        std::vector<ClassFunction> factors;
        for (int part : nu.parts()) {
            const u64 order = ctx_.subfield_order(d * part);
            const u64 b = mulmod(ell % order, q_integer_mod(static_cast<unsigned>(part), qd, order), order);
            comp.push_back(d * part);
            factors.push_back(p_char(d * part, b));
        }
        const ClassFunction B = induce(comp, factors);
        const Int weight = Int(chi) * (L / z_of(nu));
        for (std::size_t c = 0; c < acc.size(); ++c) acc[c] += B[c] * weight;
    }
    const bool negate = (static_cast<long>(m) * (d - 1)) % 2 != 0;
    for (auto& v : acc) {
        v = v.divide_exact(L);
        if (negate) v = -v;
    }
    j_cache_.emplace(key, acc);
    return acc;
}

std::vector<int> GreenEngine::composition_of(const ClassIndex& idx) {
    std::vector<int> comp;
    for (const auto& [f, lam] : idx.parts) comp.push_back(f.degree() * lam.size());
    return comp;
}

ClassFunction GreenEngine::chi(const ClassIndex& idx) {
    require(!idx.parts.empty(), ErrorKind::InvalidInput, "empty index");
    if (idx.is_primary()) return j_char(idx.parts.front().first, idx.parts.front().second);
    std::vector<ClassFunction> factors;
    for (const auto& [f, lam] : idx.parts) factors.push_back(j_char(f, lam));
    return induce(composition_of(idx), factors);
}

CharacterTable character_table(GreenEngine& engine, int n) {
    const TinyGroup& G = engine.group(n);
    CharacterTable t;
    t.q = engine.ctx().q();
    t.n = n;
    t.classes = G.classes();
    for (std::size_t c = 0; c < G.class_count(); ++c) t.class_sizes.emplace_back(static_cast<unsigned long>(G.class_size_at(c)));
    t.rows = enumerate_class_indices(engine.ctx().base(), n);
    for (const auto& idx : t.rows) t.values.push_back(engine.chi(idx));
    return t;
}

namespace {

Int psi(int m, const Int& q) {
    Int out = 1;
    for (int i = 1; i <= m; ++i) out *= pow_int(q, static_cast<unsigned>(i)) - 1;
    return out;
}

// [lambda : Q]
Rational bracket(const Partition& lam, const Int& Q) {
    const int l = lam.length();
    long b = 0;
    for (int i = 0; i < l; ++i) b += static_cast<long>(i) * lam[static_cast<std::size_t>(i)];
    Int num = pow_int(Q, static_cast<unsigned>(b));
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
            num *= pow_int(Q, static_cast<unsigned>(lam[static_cast<std::size_t>(i)] - lam[static_cast<std::size_t>(j)] + j - i)) - 1;
    Int den = 1;
    for (int i = 0; i < l; ++i) den *= psi(lam[static_cast<std::size_t>(i)] + l - 1 - i, Q);
    return Rational(num, den);
}

}  // namespace

Int char_degree(u64 q, const ClassIndex& idx) {
    const Int Q(static_cast<unsigned long>(q));
    Rational deg = psi(idx.norm(), Q);
    for (const auto& [f, lam] : idx.parts) deg *= bracket(lam, pow_int(Q, static_cast<unsigned>(f.degree())));
    deg.canonicalize();
    return to_integer(deg, "character degree");
}

Int deg_ndr(const Int& q, int n, int d, int r) {
    require(d >= 1 && n % d == 0, ErrorKind::RangeError, "d must divide n");
    require(r >= 0 && r <= n / d - 1, ErrorKind::RangeError, "r must lie in 0..n/d-1");
    const Int qd = pow_int(q, static_cast<unsigned>(d));
    Int num = pow_int(q, static_cast<unsigned>(d * r * (r + 1) / 2));
    for (int i = 1; i <= n; ++i) num *= pow_int(q, static_cast<unsigned>(i)) - 1;
    num *= q_binomial(static_cast<unsigned>(n / d - 1), static_cast<unsigned>(r), qd);
    Int den = 1;
    for (int j = 1; j <= n / d; ++j) den *= pow_int(qd, static_cast<unsigned>(j)) - 1;
    Rational v(num, den);
    v.canonicalize();
    return to_integer(v, "deg_{n,d,r}");
}

CyclotomicSum primary_on_rss(const FieldCtx& ctx, const PolyQ& f, const Partition& lambda, const ClassIndex& target) {
    require(target.regular_semisimple(), ErrorKind::NotRegularSemisimple, "target class is not regular semisimple");
    const int n = target.norm();
    const int d = f.degree();
    require(d >= 1 && d * lambda.size() == n, ErrorKind::SizeMismatch, "character and class sizes differ");
    const u64 M = ctx.unit_order();
    std::vector<int> tilde;
    for (const auto& [h, part] : target.parts) {
        if (h.degree() % d != 0) return CyclotomicSum(M);
        tilde.push_back(h.degree() / d);
    }
    const long chi = mn_character(lambda, Partition(tilde));
    if (chi == 0) return CyclotomicSum(M);
    const long sign = (static_cast<long>(n / d) * (d - 1)) % 2 ? -1 : 1;

    const u64 ell_f = ctx.ell_of(f);
    const u64 qd = pow_u64(ctx.q(), static_cast<unsigned>(d));
    CyclotomicSum value(M, Int(sign * chi));
    for (std::size_t i = 0; i < target.parts.size(); ++i) {
        const PolyQ& h = target.parts[i].first;
        const int m = h.degree();
        const u64 om = ctx.subfield_order(m);
        const u64 step = M / om;
        const u64 power = mulmod(ell_f % om, q_integer_mod(static_cast<unsigned>(tilde[i]), qd, om), om);
        // roots of h are eps_m^{ell_h q^j}
        CyclotomicSum roots(M);
        u64 e = ctx.ell_of(h) % om;
        for (int j = 0; j < m; ++j) {
            roots.add_term(mulmod(step, mulmod(e, power, om), M), 1);
            e = mulmod(e, ctx.q() % om, om);
        }
        value = value * roots.divide_exact(Int(tilde[i]));
    }
    return value;
}

OrthogonalityReport check_orthogonality(const CharacterTable& t) {
    OrthogonalityReport rep;
    const Int gamma = gamma_n(t.q, t.n);
    const std::size_t k = t.classes.size();
    if (t.rows.size() != k) {
        rep.ok = false;
        rep.witness = "table is not square";
        return rep;
    }
    for (std::size_t r = 0; r < k && rep.ok; ++r)
        for (std::size_t s = r; s < k; ++s) {
            CyclotomicSum acc(1);
            for (std::size_t c = 0; c < k; ++c) acc += t.values[r][c] * t.values[s][c].conj() * t.class_sizes[c];
            acc -= CyclotomicSum(1, r == s ? gamma : Int(0));
            if (!acc.is_zero()) {
                rep.ok = false;
                rep.witness = "rows " + std::to_string(r) + ", " + std::to_string(s);
                break;
            }
        }
    for (std::size_t c = 0; c < k && rep.ok; ++c)
        for (std::size_t e = c; e < k; ++e) {
            CyclotomicSum acc(1);
            for (std::size_t r = 0; r < k; ++r) acc += t.values[r][c] * t.values[r][e].conj();
            acc -= CyclotomicSum(1, c == e ? gamma / t.class_sizes[c] : Int(0));
            if (!acc.is_zero()) {
                rep.ok = false;
                rep.witness = "columns " + std::to_string(c) + ", " + std::to_string(e);
                break;
            }
        }
    return rep;
}

void verify_orthogonality(const CharacterTable& table) {
    auto rep = check_orthogonality(table);
    if (!rep.ok) fail(ErrorKind::OrthogonalityFailure, rep.witness);
}

}  // namespace glnq
