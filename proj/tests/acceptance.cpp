// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "glnq/counting.hpp"
#include "glnq/error.hpp"
#include "glnq/green.hpp"
#include "glnq/oracle.hpp"
#include "glnq/partition.hpp"
#include "reference_values.hpp"

using namespace glnq;

namespace {

using Failures = std::vector<std::string>;

const std::vector<std::pair<u64, int>> tiny = {{2, 2}, {3, 2}, {2, 3}};

std::string tag(u64 q, int n) { return "(q=" + std::to_string(q) + ",n=" + std::to_string(n) + ")"; }

void expect(Failures& out, bool ok, const std::string& what) {
    if (!ok) out.push_back(what);
}

FieldOptions pinned(u64 q, const char* f) {
    FieldOptions o;
    o.pin = parse_poly(Fq(PrimePower::of(q)), f);
    return o;
}

CyclotomicSum num(long v) { return CyclotomicSum(1, Int(v)); }
CyclotomicSum z7(std::initializer_list<u64> es) {
    CyclotomicSum s(7);
    for (u64 e : es) s.add_term(e, 1);
    return s;
}

constexpr double table3_seconds = 60.0;
constexpr double triple_seconds = 300.0;

Failures table3() {
    Failures out;
    const auto start = std::chrono::steady_clock::now();
    const FieldCtx ctx(2, 3, pinned(2, "z^3+z^2+1"));
    const Fq& F = ctx.base();
    GreenEngine engine(ctx);
    const CharacterTable t = character_table(engine, 3);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const PolyQ f1 = parse_poly(F, "z+1"), f2 = parse_poly(F, "z^2+z+1"), f3 = parse_poly(F, "z^3+z^2+1"),
                g3 = parse_poly(F, "z^3+z+1");
    ClassIndex c0{{{f1, {1}}, {f2, {1}}}};
    c0.normalize();
    const std::vector<ClassIndex> cols = {primary_index(f1, {1, 1, 1}), primary_index(f1, {2, 1}), primary_index(f1, {3}),
                                          primary_index(f3, {1}),       primary_index(g3, {1}),    c0};
    const CyclotomicSum a = z7({1, 2, 4}), b = z7({3, 5, 6});
    const std::vector<std::pair<ClassIndex, std::vector<CyclotomicSum>>> rows = {
        {primary_index(f1, {1, 1, 1}), {num(8), num(0), num(0), num(1), num(1), num(-1)}},
        {primary_index(f1, {2, 1}), {num(6), num(2), num(0), num(-1), num(-1), num(0)}},
        {primary_index(f1, {3}), {num(1), num(1), num(1), num(1), num(1), num(1)}},
        {primary_index(f3, {1}), {num(3), num(-1), num(1), a, b, num(0)}},
        {primary_index(g3, {1}), {num(3), num(-1), num(1), b, a, num(0)}},
        {c0, {num(7), num(-1), num(-1), num(0), num(0), num(1)}},
    };
    expect(out, t.rows.size() == 6 && t.classes.size() == 6, "table is not 6 x 6");
    int matched = 0;
    for (const auto& [label, want] : rows) {
        std::size_t r = 0;
        while (r < t.rows.size() && !(t.rows[r] == label)) ++r;
        if (r == t.rows.size()) {
            out.push_back("missing row " + label.to_string(F));
            continue;
        }
        for (std::size_t j = 0; j < cols.size(); ++j) {
            std::size_t c = 0;
            while (c < t.classes.size() && !(t.classes[c] == cols[j])) ++c;
            if (c == t.classes.size()) {
                out.push_back("missing column " + cols[j].to_string(F));
                continue;
            }
            if (t.values[r][c] == want[j])
                ++matched;
            else
                out.push_back("entry " + label.to_string(F) + " at " + cols[j].to_string(F));
        }
    }
    expect(out, matched == 36, std::to_string(matched) + "/36 entries");
    expect(out, secs < table3_seconds, "took " + std::to_string(secs) + " s");
    return out;
}

Failures class_sizes() {
    Failures out;
    const Fq F2(PrimePower::of(2));
    expect(out, class_size(2, primary_index(parse_poly(F2, "z+1"), {2, 1}), 3) == 21, "class_size(2, f1 -> (2,1)) != 21");
    for (auto [q, n] : tiny) {
        const Fq F(PrimePower::of(q));
        const TinyGroup G(F, n);
        expect(out, G.class_count() == enumerate_class_indices(F, n).size(), "class count " + tag(q, n));
        std::vector<MatrixQ> inverses;
        for (const auto& x : G.elements()) inverses.push_back(mat_inverse(F, x));
        for (std::size_t c = 0; c < G.class_count(); ++c) {
            // orbit of the representative under conjugation
            std::set<std::vector<int>> orbit;
            const MatrixQ& g = G.representative(c);
            for (std::size_t i = 0; i < G.order(); ++i) orbit.insert(mat_mul(F, mat_mul(F, G.elements()[i], g), inverses[i]).a);
            expect(out, Int(static_cast<unsigned long>(orbit.size())) == class_size(q, G.class_at(c), n),
                   "size of " + G.class_at(c).to_string(F) + " " + tag(q, n));
        }
    }
    return out;
}

Failures degrees() {
    Failures out;
    const Fq F2(PrimePower::of(2));
    expect(out, char_degree(2, primary_index(parse_poly(F2, "z+1"), {2, 1})) == 6, "char_degree(2, f1 -> (2,1)) != 6");
    for (auto [q, n] : tiny) {
        const FieldCtx ctx(q, n);
        GreenEngine engine(ctx);
        const TinyGroup& G = engine.group(n);
        const std::size_t id = G.identity_class();
        for (const auto& idx : enumerate_class_indices(ctx.base(), n))
            expect(out, engine.chi(idx)[id] == CyclotomicSum(1, char_degree(q, idx)), "degree of " + idx.to_string(ctx.base()) + " " + tag(q, n));
    }
    return out;
}

Failures main_tool() {
    Failures out;
    int pairs = 0;
    for (auto [q, n] : tiny) {
        const FieldCtx ctx(q, n);
        GreenEngine engine(ctx);
        const TinyGroup& G = engine.group(n);
        for (int d = 1; d <= n; ++d) {
            if (n % d) continue;
            for (const auto& e : ctx.irreducibles(d))
                for (const auto& lam : partitions_of(n / d)) {
                    if (!lam.is_hook()) continue;
                    const ClassFunction pbj = engine.j_char(e.poly, lam);
                    for (std::size_t c = 0; c < G.class_count(); ++c) {
                        if (!G.class_at(c).regular_semisimple()) continue;
                        ++pairs;
                        expect(out, primary_on_rss(ctx, e.poly, lam, G.class_at(c)) == pbj[c],
                               poly_to_string(ctx.base(), e.poly) + " -> " + lam.to_string() + " on " + G.class_at(c).to_string(ctx.base()));
                    }
                }
        }
    }
    expect(out, pairs > 0, "no pairs checked");
    return out;
}

Failures triple_agreement() {
    Failures out;
    const auto start = std::chrono::steady_clock::now();
    expect(out, closed_nu_n(2, 3, 2).value == 576, "g_{2,(3)}(2) != 576");
    expect(out, closed_nu_n(2, 2, 2).value == 2, "g_{2,(2)}(2) != 2");
    expect(out, closed_re_main(2, 3, 2, {2, 1}).value == 672, "box g_{2,(2,1)}(2) != 672");
    for (auto [q, n] : tiny) {
        const FieldCtx ctx(q, n);
        GreenEngine engine(ctx);
        const ClassAlgebra A(ctx.base(), n);
        for (int k : {2, 3}) {
            const std::string at = tag(q, n) + " k=" + std::to_string(k);
            Int total = 0;
            for (const auto& mu : partitions_of(n)) {
                const Int b = brute_g(A, k, mu, false);
                const Int bb = brute_g(A, k, mu, true);
                total += b;
                expect(out, frobenius_count(ctx, k, mu, false, &engine).value == b, "frobenius " + mu.to_string() + " " + at);
                expect(out, frobenius_count(ctx, k, mu, true).value == bb, "frobenius box " + mu.to_string() + " " + at);
                if (mu == Partition{n}) expect(out, closed_nu_n(q, n, k).value == b, "closed_nu_n " + at);
                if (re_main_eligible(n, mu))
                    expect(out, closed_re_main(q, n, k, mu).value == bb, "closed_re_main " + mu.to_string() + " " + at);
                if (n > 2 && mu == Partition({n - 1, 1})) {
                    expect(out, closed_n_minus_1(q, n, k).value == bb, "closed_n_minus_1 " + at);
                }
            }
            expect(out, total == pow_int(ct_box_size(q, Partition{n}), static_cast<unsigned>(k)), "conservation " + at);
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(out, secs < triple_seconds, "took " + std::to_string(secs) + " s");
    return out;
}

Failures explicit_polynomials() {
    Failures out;
    for (u64 q : {2, 3, 4, 5, 7, 8, 9, 11, 13})
        expect(out, Rational(closed_nu_n(q, 2, 2).value) == reference::g22(q), "g_{2,(2)} at q=" + std::to_string(q));
    for (u64 q : {2, 3, 4, 5, 7})
        expect(out, Rational(closed_nu_n(q, 3, 2).value) == reference::g23(q), "g_{3,(2)} at q=" + std::to_string(q));
    return out;
}

Failures quasipolynomiality() {
    Failures out;
    const std::vector<Rational (*)(const Int&)> want = {reference::f0, reference::f1, reference::f2};
    for (int r = 0; r < 3; ++r) {
        const FitResult fit = quasipoly_fit(3, 2, r);
        // reference coefficients by interpolating the closed form through 19 points
        std::vector<Int> xs;
        std::vector<Rational> ys;
        for (int x = 1; x <= 19; ++x) {
            xs.emplace_back(x);
            ys.push_back(want[static_cast<std::size_t>(r)](x));
        }
        expect(out, fit.verdict == Verdict::Polynomial, "n=3 residue " + std::to_string(r) + " not polynomial");
        expect(out, fit.coefficients == lagrange_interpolate(xs, ys), "f" + std::to_string(r) + " coefficients");
    }
    try {
        const FitResult fit = quasipoly_fit(4, 2, 2);
        expect(out, fit.verdict == Verdict::NonPolynomial && fit.witness.has_value(), "n=4 residue 2: no NonPolynomial witness");
    } catch (const Error& e) {
        out.push_back(std::string("n=4 residue 2: ") + e.what());
    }
    return out;
}

Failures limit_theorem() {
    Failures out;
    const std::vector<Int> qs = {4, 5, 7, 8, 9, 11, 13};
    for (const auto& mu : partitions_of(3)) {
        const auto rows = limit_report(3, 2, mu, qs);
        expect(out, rows.size() == qs.size(), "rows for " + mu.to_string());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const std::string at = mu.to_string() + " q=" + rows[i].q.get_str();
            expect(out, rows[i].target == Rational(1) / Rational(z_of(mu)), "target " + at);
            expect(out, rows[i].gap < Rational(3) / Rational(rows[i].q), "gap >= 3/q at " + at);
            if (i > 0) expect(out, rows[i].gap <= rows[i - 1].gap, "gap increases at " + at);
        }
    }
    return out;
}

Failures sn_baseline() {
    Failures out;
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= 3; ++k)
            for (const auto& mu : partitions_of(n)) {
                const std::string at = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " " + mu.to_string();
                expect(out, stanley_count(n, k, mu) == brute_sn_g(n, k, mu), "stanley " + at);
                if (re_main_eligible(n, mu)) expect(out, q_to_1_check(n, k, mu), "q -> 1 " + at);
            }
    return out;
}

Failures root_structure() {
    Failures out;
    for (auto [q, n] : std::vector<std::pair<u64, int>>{{2, 3}, {3, 4}, {2, 4}}) {
        const FieldCtx ctx(q, n);
        for (int d = 1; d <= n; ++d) {
            const std::string at = tag(q, n) + " d=" + std::to_string(d);
            const u64 ord = ctx.subfield_order(d);
            std::multiset<u64> hit;
            for (u64 c : divisors(static_cast<u64>(d)))
                for (const auto& e : ctx.irreducibles(static_cast<int>(c)))
                    for (u64 l : ctx.ell_orbit(e.poly)) {
                        const FieldElem x = ctx.pow(ctx.subfield_generator(static_cast<int>(c)), l);
                        expect(out, ctx.evaluate(e.poly, x).zero, "root of " + poly_to_string(ctx.base(), e.poly));
                        hit.insert(x.exponent);
                    }
            // every (q^d - 1)-th root of unity exactly once
            expect(out, hit.size() == ord && std::set<u64>(hit.begin(), hit.end()).size() == ord, "root union " + at);
            for (u64 a : hit) expect(out, a % (ctx.unit_order() / ord) == 0, "root outside F_{q^d} " + at);
            if (n % d) continue;
            const u64 step = ctx.subfield_order(n) / ord;
            std::set<u64> img, want;
            for (u64 c : divisors(static_cast<u64>(d)))
                for (const auto& e : ctx.irreducibles(static_cast<int>(c)))
                    for (u64 l : ctx.ell_orbit(e.poly)) img.insert(ctx.theta_n(ctx.pow(ctx.subfield_generator(static_cast<int>(c)), l)));
            for (u64 j = 0; j < ord; ++j) want.insert(j * step);
            expect(out, img == want, "theta_n image " + at);
        }
    }
    const FieldCtx ctx(3, 4, pinned(3, "z^4+2z^3+2"));
    std::set<u64> seen;
    for (int d : {1, 2})
        for (const auto& e : ctx.irreducibles(d))
            for (u64 l : ctx.ell_orbit(e.poly)) seen.insert(ctx.theta_n(ctx.pow(ctx.subfield_generator(d), l)));
    expect(out, seen == std::set<u64>{0, 40, 10, 30, 20, 60, 50, 70}, "theta_n columns for q=3, n=4, d <= 2");
    return out;
}

struct Criterion {
    const char* id;
    const char* what;
    std::function<Failures()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"C1", "GL_3(F_2) character table, 36 exact entries, < 60 s", table3},
        {"C2", "class sizes vs orbit counting, exact", class_sizes},
        {"C3", "character degrees vs values at the identity, exact", degrees},
        {"C4", "primary_on_rss vs PBJ on hook x regular semisimple, exact", main_tool},
        {"C5", "brute / Frobenius / closed counts and conservation, exact, < 300 s", triple_agreement},
        {"C6", "closed forms of g_{2,(2)} and g_{2,(3)}, exact", explicit_polynomials},
        {"C7", "quasipolynomial fits for n = 3 and n = 4 residue 2, exact", quasipolynomiality},
        {"C8", "limit gaps < 3/q and non-increasing, mu |- 3, k = 2", limit_theorem},
        {"C9", "S_n counts and q -> 1 specialization, n <= 5, k <= 3, exact", sn_baseline},
        {"C10", "root unions and theta_n images, exact", root_structure},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Failures f;
        try {
            f = c.run();
        } catch (const std::exception& e) {
            f.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%-4s %s  %s  (%.2f s)", c.id, f.empty() ? "PASS" : "FAIL", c.what, secs);
        if (!f.empty()) std::printf("  -- %s%s", f.front().c_str(), f.size() > 1 ? (" [+" + std::to_string(f.size() - 1) + " more]").c_str() : "");
        std::printf("\n");
        std::fflush(stdout);
        if (!f.empty()) ++failed;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
