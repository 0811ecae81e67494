#include "glnq/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "glnq/error.hpp"

namespace glnq {

ClassAlgebra::ClassAlgebra(const Fq& F, int n, u64 budget) : group_(F, n, budget), k_(group_.class_count()) {
    a_.assign(k_ * k_ * k_, 0);
    const auto& els = group_.elements();
    std::vector<MatrixQ> inverses;
    inverses.reserve(els.size());
    for (const auto& g : els) inverses.push_back(mat_inverse(F, g));
    for (std::size_t e = 0; e < k_; ++e) {
        const MatrixQ& rep = group_.representative(e);
        for (std::size_t i = 0; i < els.size(); ++i) {
            const std::size_t c = group_.class_of_element(i);
            const std::size_t d = group_.class_of(mat_mul(F, inverses[i], rep));
            ++a_[(c * k_ + d) * k_ + e];
        }
    }
}

std::vector<bool> ClassAlgebra::cycle_type_mask(const Partition& mu, bool box) const {
    std::vector<bool> mask(k_);
    for (std::size_t c = 0; c < k_; ++c) {
        const auto& idx = group_.class_at(c);
        mask[c] = idx.cycle_type() == mu && (!box || idx.regular_semisimple());
    }
    return mask;
}

Int brute_g(const ClassAlgebra& A, int k, const Partition& mu, bool box) {
    require(k >= 1, ErrorKind::InvalidInput, "k must be positive");
    const TinyGroup& G = A.group();
    const std::size_t K = A.class_count();
    require(mu.size() == G.n(), ErrorKind::SizeMismatch, "mu must partition n");
    const auto ct = A.cycle_type_mask(Partition{G.n()}, false);
    const auto target = A.cycle_type_mask(mu, box);

    // N[E] = number of j-tuples with product equal to the representative of E
    std::vector<Int> N(K);
    for (std::size_t c = 0; c < K; ++c) N[c] = ct[c] ? 1 : 0;
    for (int j = 1; j < k; ++j) {
        std::vector<Int> next(K, 0);
        for (std::size_t e = 0; e < K; ++e)
            for (std::size_t c = 0; c < K; ++c) {
                if (N[c] == 0) continue;
                for (std::size_t d = 0; d < K; ++d)
                    if (ct[d] && A.constant(c, d, e)) next[e] += N[c] * static_cast<unsigned long>(A.constant(c, d, e));
            }
        N = std::move(next);
    }
    Int g = 0;
    for (std::size_t e = 0; e < K; ++e)
        if (target[e]) g += N[e] * static_cast<unsigned long>(G.class_size_at(e));
    return g;
}

Int brute_g_literal(const TinyGroup& G, const Partition& mu, bool box) {
    const Fq& F = G.field();
    std::vector<std::size_t> re;
    for (std::size_t i = 0; i < G.order(); ++i)
        if (G.class_at(G.class_of_element(i)).cycle_type() == Partition{G.n()}) re.push_back(i);
    Int g = 0;
    for (std::size_t a : re)
        for (std::size_t b : re) {
            const auto& idx = G.class_at(G.class_of(mat_mul(F, G.elements()[a], G.elements()[b])));
            if (idx.cycle_type() == mu && (!box || idx.regular_semisimple())) ++g;
        }
    return g;
}

namespace {

// Column of the identity: z - 1 with partition (1^n).
std::size_t identity_column(const CharacterTable& t) {
    const Fq F(PrimePower::of(t.q));
    const ClassIndex id = primary_index(PolyQ({F.neg(1), 1}), Partition(std::vector<int>(static_cast<std::size_t>(t.n), 1)));
    for (std::size_t c = 0; c < t.classes.size(); ++c)
        if (t.classes[c] == id) return c;
    return t.classes.size();
}

Partition perm_cycle_type(const std::vector<int>& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> parts;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            seen[j] = true;
            ++len;
        }
        parts.push_back(len);
    }
    return Partition(parts);
}

}  // namespace

Int brute_sn_g(int n, int k, const Partition& mu) {
    require(n >= 1 && n <= 6, ErrorKind::TooLarge, "brute force over S_n needs n <= 6");
    require(k >= 1 && mu.size() == n, ErrorKind::InvalidInput, "needs k >= 1 and mu |- n");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, std::size_t> rank;
    for (std::size_t i = 0; i < perms.size(); ++i) rank[perms[i]] = i;

    std::vector<std::size_t> cycles;
    for (std::size_t i = 0; i < perms.size(); ++i)
        if (perm_cycle_type(perms[i]) == Partition{n}) cycles.push_back(i);

    std::vector<Int> dist(perms.size(), 0);
    for (std::size_t c : cycles) dist[c] = 1;
    std::vector<int> prod(static_cast<std::size_t>(n));
    for (int j = 1; j < k; ++j) {
        std::vector<Int> next(perms.size(), 0);
        for (std::size_t x = 0; x < perms.size(); ++x) {
            if (dist[x] == 0) continue;
            for (std::size_t c : cycles) {
                for (int i = 0; i < n; ++i) prod[static_cast<std::size_t>(i)] = perms[x][static_cast<std::size_t>(perms[c][static_cast<std::size_t>(i)])];
                next[rank[prod]] += dist[x];
            }
        }
        dist = std::move(next);
    }
    Int g = 0;
    for (std::size_t x = 0; x < perms.size(); ++x)
        if (dist[x] != 0 && perm_cycle_type(perms[x]) == mu) g += dist[x];
    return g;
}

Int frobenius_from_table(const CharacterTable& t, int k, const Partition& mu, bool box) {
    require(k >= 1, ErrorKind::InvalidInput, "k must be positive");
    const std::size_t K = t.classes.size();
    const std::size_t id = identity_column(t);
    require(id < K, ErrorKind::InvalidInput, "identity class not found");

    std::vector<Int> degrees;
    Int L = 1;
    for (const auto& row : t.values) {
        degrees.push_back(row[id].integer_value("degree"));
        L = lcm_int(L, pow_int(degrees.back(), static_cast<unsigned>(k - 1)));
    }
    CyclotomicSum total(1);
    for (std::size_t r = 0; r < t.values.size(); ++r) {
        CyclotomicSum s_ct(1), s_target(1);
        for (std::size_t c = 0; c < K; ++c) {
            const Partition ct = t.classes[c].cycle_type();
            if (ct == Partition{t.n}) s_ct += t.values[r][c] * t.class_sizes[c];
            if (ct == mu && (!box || t.classes[c].regular_semisimple())) s_target += t.values[r][c].conj() * t.class_sizes[c];
        }
        if (s_ct.structurally_zero() || s_target.structurally_zero()) continue;
        total += s_ct.pow(static_cast<unsigned>(k)) * s_target * (L / pow_int(degrees[r], static_cast<unsigned>(k - 1)));
    }
    const Int num = total.integer_value("Frobenius sum");
    const Int den = L * gamma_n(t.q, t.n);
    require(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0, ErrorKind::InexactDivision, "Frobenius sum not integral");
    return num / den;
}

TableReport verify_character_table(const CharacterTable& t) {
    TableReport rep;
    auto orth = check_orthogonality(t);
    if (!orth.ok) rep.failures.push_back("orthogonality: " + orth.witness);
    const std::size_t K = t.classes.size();
    const std::size_t id = identity_column(t);
    if (id == K) {
        rep.failures.push_back("identity class missing");
    } else {
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            auto v = t.values[r][id].rational_value();
            if (!v || *v != Rational(char_degree(t.q, t.rows[r])))
                rep.failures.push_back("degree of row " + std::to_string(r));
        }
    }
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        for (std::size_t s = r + 1; s < t.rows.size(); ++s) {
            bool same = true;
            for (std::size_t c = 0; c < K && same; ++c) same = t.values[r][c] == t.values[s][c];
            if (same) rep.failures.push_back("rows " + std::to_string(r) + " and " + std::to_string(s) + " coincide");
        }
    rep.ok = rep.failures.empty();
    return rep;
}

}  // namespace glnq
