#include <doctest.h>

#include "glnq/error.hpp"
#include "glnq/green.hpp"
#include "glnq/oracle.hpp"
#include "support.hpp"

using namespace glnq;

namespace {

PolyQ P(const Fq& F, const char* s) { return parse_poly(F, s); }

CyclotomicSum num(long v) { return CyclotomicSum(1, Int(v)); }
CyclotomicSum z7(std::initializer_list<u64> es) {
    CyclotomicSum s(7);
    for (u64 e : es) s.add_term(e, 1);
    return s;
}

FieldOptions pinned(u64 q, const char* f) {
    FieldOptions o;
    o.pin = parse_poly(testing::field(q), f);
    return o;
}

const std::vector<std::pair<u64, int>> tiny = {{2, 2}, {3, 2}, {2, 3}};

}  // namespace

TEST_CASE("character table of GL_3(F_2)") {
    const FieldCtx ctx(2, 3, pinned(2, "z^3+z^2+1"));
    const Fq& F = ctx.base();
    GreenEngine engine(ctx);
    const TinyGroup& G = engine.group(3);
    const PolyQ f1 = P(F, "z+1"), f2 = P(F, "z^2+z+1"), f3 = P(F, "z^3+z^2+1"), g3 = P(F, "z^3+z+1");
    ClassIndex c0{{{f1, {1}}, {f2, {1}}}};
    c0.normalize();
    const std::vector<ClassIndex> cols = {primary_index(f1, {1, 1, 1}), primary_index(f1, {2, 1}), primary_index(f1, {3}),
                                          primary_index(f3, {1}),       primary_index(g3, {1}),    c0};
    struct Row {
        ClassIndex label;
        std::vector<CyclotomicSum> values;
    };
    const CyclotomicSum a = z7({1, 2, 4}), b = z7({3, 5, 6});
    const std::vector<Row> rows = {
        {primary_index(f1, {1, 1, 1}), {num(8), num(0), num(0), num(1), num(1), num(-1)}},
        {primary_index(f1, {2, 1}), {num(6), num(2), num(0), num(-1), num(-1), num(0)}},
        {primary_index(f1, {3}), {num(1), num(1), num(1), num(1), num(1), num(1)}},
        {primary_index(f3, {1}), {num(3), num(-1), num(1), a, b, num(0)}},
        {primary_index(g3, {1}), {num(3), num(-1), num(1), b, a, num(0)}},
        {c0, {num(7), num(-1), num(-1), num(0), num(0), num(1)}},
    };
    for (const auto& row : rows) {
        const ClassFunction chi = engine.chi(row.label);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            CAPTURE(row.label.to_string(F));
            CAPTURE(cols[c].to_string(F));
            CHECK(chi[G.find_class(cols[c])] == row.values[c]);
        }
    }
}

TEST_CASE("primary support characters") {
    const FieldCtx ctx(2, 3);
    const Fq& F = ctx.base();
    const MatrixQ c0 = block_diagonal({companion_matrix(F, P(F, "z^2+z+1")), MatrixQ(1, {1})});
    CHECK(p_char(ctx, 3, 5, c0).is_zero());
    CHECK(p_char(ctx, 3, 0, companion_matrix(F, P(F, "z^3+z+1"))) == num(3));
    CHECK(p_char(ctx, 2, 0, companion_matrix(F, P(F, "z^2+z+1"))) == num(2));
    const FieldCtx ctx3(3, 2);
    // a 1x1 matrix [a]: a single root of unity
    const MatrixQ m(1, {2});
    const CyclotomicSum v = p_char(ctx3, 1, 1, m);
    CHECK(v.pow(2) == num(1));
    CHECK_THROWS_AS(p_char(ctx, 2, 0, MatrixQ::identity(3)), Error);
}

TEST_CASE("literal parabolic induction agrees with class histograms") {
    for (auto [q, n] : tiny) {
        const FieldCtx ctx(q, n);
        GreenEngine engine(ctx);
        const TinyGroup& G = engine.group(n);
        for (const auto& idx : enumerate_class_indices(ctx.base(), n)) {
            if (idx.is_primary()) continue;
            std::vector<CharEvaluator> factors;
            for (const auto& [f, lam] : idx.parts) {
                const int m = f.degree() * lam.size();
                const ClassFunction j = engine.j_char(f, lam);
                const TinyGroup* H = &engine.group(m);
                factors.push_back([j, H](const MatrixQ& g) { return j[H->class_of(g)]; });
            }
            const ClassFunction fast = engine.chi(idx);
            for (std::size_t c = 0; c < G.class_count(); ++c)
                CHECK(parabolic_induct(ctx, GreenEngine::composition_of(idx), factors, G.representative(c)) == fast[c]);
        }
        // a single block is the character itself; trivial factors give a permutation character
        const ClassFunction triv = engine.chi(primary_index(PolyQ({ctx.base().neg(1), 1}), Partition{n}));
        const CharEvaluator one = [](const MatrixQ&) { return num(1); };
        for (std::size_t c = 0; c < G.class_count(); ++c) {
            const MatrixQ& g = G.representative(c);
            CHECK(parabolic_induct(ctx, {n}, {one}, g) == triv[c]);
            const CyclotomicSum perm = parabolic_induct(ctx, std::vector<int>(static_cast<std::size_t>(n), 1),
                                                        std::vector<CharEvaluator>(static_cast<std::size_t>(n), one), g);
            // number of complete flags fixed by g
            REQUIRE(perm.rational_value().has_value());
            CHECK(*perm.rational_value() >= 0);
            if (c == G.identity_class()) CHECK(*perm.rational_value() == Rational(q_factorial(static_cast<unsigned>(n), q)));
            if (G.class_at(c).cycle_type() == Partition{n}) CHECK(perm.is_zero());
        }
    }
}

TEST_CASE("Green characters on GL_3(F_2)") {
    const FieldCtx ctx(2, 3, pinned(2, "z^3+z^2+1"));
    const Fq& F = ctx.base();
    GreenEngine engine(ctx);
    const TinyGroup& G = engine.group(3);
    const auto e = G.find_class(primary_index(P(F, "z^3+z^2+1"), {1}));
    const auto u2 = G.find_class(primary_index(P(F, "z+1"), {2, 1}));
    const auto u1 = G.identity_class();
    for (std::size_t c = 0; c < G.class_count(); ++c) CHECK(engine.chi(primary_index(P(F, "z+1"), {3}))[c] == num(1));
    CHECK(engine.chi(primary_index(P(F, "z^3+z^2+1"), {1}))[e] == z7({1, 2, 4}));
    CHECK(engine.chi(primary_index(P(F, "z+1"), {1, 1, 1}))[u2] == num(0));
    ClassIndex c0{{{P(F, "z+1"), {1}}, {P(F, "z^2+z+1"), {1}}}};
    c0.normalize();
    CHECK(engine.chi(c0)[u1] == num(7));
    CHECK_THROWS_AS(GreenEngine(FieldCtx(5, 3)).group(3), Error);
}

TEST_CASE("degrees") {
    const Fq F = testing::field(2);
    CHECK(char_degree(2, primary_index(P(F, "z+1"), {2, 1})) == 6);
    CHECK(char_degree(2, primary_index(P(F, "z+1"), {3})) == 1);
    CHECK(char_degree(2, primary_index(P(F, "z^3+z^2+1"), {1})) == 3);
    CHECK(deg_ndr(2, 3, 1, 0) == 1);
    CHECK(deg_ndr(2, 3, 1, 1) == 6);
    CHECK(deg_ndr(2, 3, 3, 0) == 3);
    CHECK_THROWS_AS(deg_ndr(2, 3, 2, 0), Error);
    CHECK_THROWS_AS(deg_ndr(2, 4, 2, 2), Error);
    for (u64 q : {2, 3, 4}) {
        const Fq G = testing::field(q);
        for (int n = 1; n <= 4; ++n)
            for (int d = 1; d <= n; ++d) {
                if (n % d) continue;
                const PolyQ f = enumerate_irreducibles(G, d).front();
                for (int r = 0; r < n / d; ++r) CHECK(deg_ndr(q, n, d, r) == char_degree(q, primary_index(f, hook(n / d, r))));
            }
    }
}

TEST_CASE("tables: degrees, orthogonality, Steinberg, hook support") {
    for (auto [q, n] : std::vector<std::pair<u64, int>>{{2, 2}, {3, 2}, {2, 3}, {4, 2}}) {
        const FieldCtx ctx(q, n);
        GreenEngine engine(ctx);
        const TinyGroup& G = engine.group(n);
        const CharacterTable t = character_table(engine, n);
        CHECK(t.rows.size() == G.class_count());
        const auto rep = check_orthogonality(t);
        CHECK_MESSAGE(rep.ok, rep.witness);
        CHECK_NOTHROW(verify_orthogonality(t));
        const std::size_t id = G.identity_class();
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            CHECK(t.values[r][id] == CyclotomicSum(1, char_degree(q, t.rows[r])));
            const auto& row = t.rows[r];
            for (std::size_t c = 0; c < G.class_count(); ++c) {
                const ClassIndex& cls = G.class_at(c);
                if (!cls.regular_semisimple()) continue;
                // Steinberg: z - 1 primary characters restrict to S_n characters
                if (row.is_primary() && row.parts[0].first.degree() == 1 && row.parts[0].first[0] == ctx.base().neg(1))
                    CHECK(t.values[r][c] == CyclotomicSum(1, Int(mn_character(row.parts[0].second, cls.cycle_type()))));
                if (cls.cycle_type() == Partition{n} && !(row.is_primary() && row.parts[0].second.is_hook()))
                    CHECK(t.values[r][c].is_zero());
            }
        }
    }
}

TEST_CASE("fast primary values on regular semisimple classes") {
    for (auto [q, n] : tiny) {
        const FieldCtx ctx(q, n);
        GreenEngine engine(ctx);
        const TinyGroup& G = engine.group(n);
        for (int d = 1; d <= n; ++d) {
            if (n % d) continue;
            for (const auto& e : ctx.irreducibles(d))
                for (const auto& lam : partitions_of(n / d)) {
                    const ClassFunction pbj = engine.j_char(e.poly, lam);
                    for (std::size_t c = 0; c < G.class_count(); ++c) {
                        if (!G.class_at(c).regular_semisimple()) continue;
                        CAPTURE(G.class_at(c).to_string(ctx.base()));
                        CHECK(primary_on_rss(ctx, e.poly, lam, G.class_at(c)) == pbj[c]);
                    }
                }
        }
        const auto u = enumerate_class_indices(ctx.base(), n);
        for (const auto& c : u)
            if (!c.regular_semisimple())
                CHECK_THROWS_AS(primary_on_rss(ctx, ctx.irreducibles(1).front().poly, Partition{n}, c), Error);
    }
    // d = 2 against cycle type (2,1)
    const FieldCtx ctx(2, 4);
    const Fq& F = ctx.base();
    ClassIndex c{{{P(F, "z+1"), {1}}, {P(F, "z^3+z+1"), {1}}}};
    c.normalize();
    CHECK(primary_on_rss(ctx, P(F, "z^2+z+1"), {2}, c).is_zero());
}

TEST_CASE("ell representative invariance") {
    const FieldCtx ctx(3, 2);
    GreenEngine engine(ctx);
    for (int d = 1; d <= 2; ++d) {
        const u64 ord = ctx.subfield_order(d);
        for (u64 b = 0; b < ord; ++b) {
            const ClassFunction base = engine.p_char(d, b);
            u64 bq = b;
            for (int i = 0; i < d; ++i) {
                bq = bq * 3 % ord;
                CHECK(engine.p_char(d, bq) == base);
            }
        }
    }
}

TEST_CASE("characters are class functions") {
    const FieldCtx ctx(3, 2);
    const Fq& F = ctx.base();
    for (int i = 0; i < 100; ++i) {
        const MatrixQ g = testing::random_invertible(F, 2), x = testing::random_invertible(F, 2);
        const MatrixQ h = mat_mul(F, mat_mul(F, x, g), mat_inverse(F, x));
        const u64 b = static_cast<u64>(testing::uniform(0, 7));
        CHECK(p_char(ctx, 2, b, g) == p_char(ctx, 2, b, h));
    }
}

TEST_CASE("negative controls") {
    const FieldCtx ctx(2, 3);
    GreenEngine engine(ctx);
    CharacterTable t = character_table(engine, 3);
    CHECK(verify_character_table(t).ok);
    CharacterTable perturbed = t;
    perturbed.values[1][2] += CyclotomicSum(1, 1);
    CHECK_FALSE(check_orthogonality(perturbed).ok);
    CHECK_THROWS_AS(verify_orthogonality(perturbed), Error);
    CharacterTable swapped = t;
    std::swap(swapped.values[0][0], swapped.values[0][1]);
    CHECK_FALSE(verify_character_table(swapped).ok);
}
