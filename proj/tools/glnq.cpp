// glnq: characters of GL_n(F_q) and factorization counts from the command line.
//
// Exit codes: 0 success, 2 verification mismatch, 3 budget refusal, 4 invalid input.

#include <CLI11.hpp>

#include <algorithm>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "glnq/counting.hpp"
#include "glnq/error.hpp"
#include "glnq/field.hpp"
#include "glnq/green.hpp"
#include "glnq/matrix.hpp"
#include "glnq/oracle.hpp"
#include "glnq/serialize.hpp"

using namespace glnq;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 2;
constexpr int exit_budget = 3;
constexpr int exit_invalid = 4;

struct RunConfig {
    std::string subcommand;
    u64 q = 2;
    int n = 2;
    int k = 2;
    std::string mu_text;
    Partition mu;
    bool box = false;
    std::string method = "auto";
    std::string format = "pretty";
    std::string cache;
    std::string pin;
    std::string suite = "tiny-groups";
    std::string order = "lex";
    int residue = 0;
    int degree = -1;
    u64 qmax = 13;
    unsigned width = 1;
    u64 budget = TinyGroup::default_budget;

    void validate() {
        require(prime_power_split(q).has_value(), ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
        require(n >= 1, ErrorKind::InvalidInput, "--n must be positive");
        require(k >= 1, ErrorKind::InvalidInput, "--k must be positive");
        require(width >= 1, ErrorKind::InvalidInput, "--width must be at least 1");
        require(format == "json" || format == "csv" || format == "pretty", ErrorKind::InvalidInput,
                "--format must be json, csv or pretty");
        require(order == "lex" || order == "ell", ErrorKind::InvalidInput, "--order must be lex or ell");
        mu = mu_text.empty() ? Partition{n} : parse_partition(mu_text);
        require(mu.size() == n, ErrorKind::SizeMismatch, "mu " + mu.to_string() + " does not partition n = " + std::to_string(n));
    }

    FieldOptions field_options() const {
        FieldOptions o = FieldOptions::from_env();
        if (!cache.empty()) o.cache_dir = cache;
        if (!pin.empty()) o.pin = parse_poly(Fq(PrimePower::of(q)), pin);
        return o;
    }
};

void emit(const RunConfig& cfg, const json& j, const std::string& csv, const std::string& pretty) {
    if (cfg.format == "json")
        std::cout << j.dump(2) << '\n';
    else if (cfg.format == "csv")
        std::cout << csv;
    else
        std::cout << pretty;
}

int cmd_chartable(const RunConfig& cfg) {
    const Int order = gamma_n(cfg.q, cfg.n);
    if (order > cfg.budget)
        fail(ErrorKind::GroupTooLarge, "GL_" + std::to_string(cfg.n) + "(F_" + std::to_string(cfg.q) + ") has " + order.get_str() +
                                           " elements, over the budget of " + std::to_string(cfg.budget) +
                                           "; raise --budget or pick a smaller group");
    FieldCtx ctx(cfg.q, cfg.n, cfg.field_options());
    GreenEngine engine(ctx, cfg.budget);
    const CharacterTable t = character_table(engine, cfg.n);
    const auto report = check_orthogonality(t);
    const Fq& F = ctx.base();
    json j = to_json(F, t);
    j["orthogonality"] = {{"ok", report.ok}, {"witness", report.witness}};
    std::string pretty = to_pretty(F, t);
    pretty += std::string("orthogonality: ") + (report.ok ? "ok" : "FAILED " + report.witness) + '\n';
    emit(cfg, j, to_csv(F, t), pretty);
    return report.ok ? exit_ok : exit_mismatch;
}

CountResult run_count(const RunConfig& cfg) {
    if (cfg.method == "auto") return count_auto(Int(static_cast<unsigned long>(cfg.q)), cfg.n, cfg.k, cfg.mu, cfg.box);
    const Method m = parse_method(cfg.method);
    const Int q(static_cast<unsigned long>(cfg.q));
    switch (m) {
        case Method::closed_re_main: return closed_re_main(q, cfg.n, cfg.k, cfg.mu, cfg.box);
        case Method::closed_n_minus_1:
            require(cfg.mu == Partition({cfg.n - 1, 1}), ErrorKind::HypothesisViolation, "closed-n-minus-1 counts mu = (n-1,1) only");
            return closed_n_minus_1(q, cfg.n, cfg.k);
        case Method::closed_nu_n:
            require(cfg.mu == Partition{cfg.n}, ErrorKind::HypothesisViolation, "closed-nu-n counts mu = (n) only");
            return closed_nu_n(q, cfg.n, cfg.k);
        case Method::frobenius: {
            FieldCtx ctx(cfg.q, cfg.n, cfg.field_options());
            std::optional<GreenEngine> engine;
            if (!cfg.box && !cfg.mu.distinct_parts() && gamma_n(cfg.q, cfg.n) <= cfg.budget) engine.emplace(ctx, cfg.budget);
            return frobenius_count(ctx, cfg.k, cfg.mu, cfg.box, engine ? &*engine : nullptr);
        }
        case Method::brute: {
            ClassAlgebra algebra(Fq(PrimePower::of(cfg.q)), cfg.n, cfg.budget);
            CountResult r;
            r.n = cfg.n;
            r.k = cfg.k;
            r.mu = cfg.mu;
            r.q = q;
            r.value = brute_g(algebra, cfg.k, cfg.mu, cfg.box);
            r.method = Method::brute;
            r.box = cfg.box;
            return r;
        }
    }
    fail(ErrorKind::InvalidInput, "unknown method");
}

int cmd_count(const RunConfig& cfg) {
    const CountResult r = run_count(cfg);
    std::ostringstream csv, pretty;
    csv << "n,k,mu,q,value,method,box\n"
        << r.n << ',' << r.k << ",\"" << r.mu.to_string() << "\"," << r.q << ',' << r.value << ',' << to_string(r.method) << ','
        << (r.box ? "true" : "false") << '\n';
    pretty << "g" << (r.box ? "^box" : "") << "_{" << r.k << "," << r.mu.to_string() << "}(" << r.q << ") = " << r.value << "  ["
           << to_string(r.method) << "]\n";
    emit(cfg, to_json(r), csv.str(), pretty.str());
    return exit_ok;
}

int cmd_sweep(const RunConfig& cfg) {
    if (cfg.k == 1) std::cerr << "warning: the limit 1/z_mu is only claimed for k >= 2\n";
    std::vector<Int> qs;
    for (u64 q = 2; q <= cfg.qmax; ++q)
        if (prime_power_split(q)) qs.emplace_back(static_cast<unsigned long>(q));
    // contiguous chunks, concatenated in order
    const std::size_t chunks = std::min<std::size_t>(cfg.width, std::max<std::size_t>(qs.size(), 1));
    std::vector<std::future<std::vector<LimitRow>>> jobs;
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t lo = qs.size() * c / chunks, hi = qs.size() * (c + 1) / chunks;
        std::vector<Int> part(qs.begin() + static_cast<long>(lo), qs.begin() + static_cast<long>(hi));
        jobs.push_back(std::async(std::launch::async, [&cfg, part] { return limit_report(cfg.n, cfg.k, cfg.mu, part); }));
    }
    std::vector<LimitRow> rows;
    for (auto& j : jobs) {
        auto part = j.get();
        rows.insert(rows.end(), part.begin(), part.end());
    }
    std::ostringstream csv, pretty;
    csv << "q,p,target,gap,method,box\n";
    pretty << "q      p                target   |p - 1/z_mu|\n";
    for (const auto& r : rows) {
        csv << r.q << ',' << to_decimal(r.p) << ',' << to_decimal(r.target) << ',' << to_decimal(r.gap) << ',' << to_string(r.method)
            << ',' << (r.box ? "true" : "false") << '\n';
        pretty << std::left << std::setw(6) << r.q.get_str() << ' ' << std::setw(16) << r.p.get_d() << ' ' << std::setw(8)
               << to_decimal(r.target) << ' ' << r.gap.get_d() << '\n';
    }
    emit(cfg, to_json(rows), csv.str(), pretty.str());
    return exit_ok;
}

int cmd_quasipoly(const RunConfig& cfg) {
    const FitResult fit = quasipoly_fit(cfg.n, cfg.k, cfg.residue, cfg.degree);
    std::ostringstream csv, pretty;
    csv << "degree,coefficient\n";
    for (std::size_t i = 0; i < fit.coefficients.size(); ++i) csv << i << ',' << to_decimal(fit.coefficients[i]) << '\n';
    pretty << "g_{" << fit.k << ",(" << fit.n << ")}(q), q = " << fit.residue << " mod " << fit.n << ": " << to_string(fit.verdict);
    if (fit.witness) pretty << " (witness q = " << *fit.witness << ")";
    pretty << "\n";
    for (std::size_t i = fit.coefficients.size(); i-- > 0;)
        if (fit.coefficients[i] != 0) pretty << "  q^" << i << ": " << to_decimal(fit.coefficients[i]) << '\n';
    emit(cfg, to_json(fit), csv.str(), pretty.str());
    return exit_ok;
}

int cmd_irreducibles(const RunConfig& cfg) {
    FieldCtx ctx(cfg.q, cfg.n, cfg.field_options());
    const Fq& F = ctx.base();
    json j = json::array();
    std::ostringstream csv, pretty;
    csv << "degree,poly,ell,theta_n\n";
    for (int d = 1; d <= cfg.n; ++d) {
        auto entries = ctx.irreducibles(d);
        if (cfg.order == "ell")
            std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.ell < b.ell; });
        pretty << "degree " << d << " (" << entries.size() << ")\n";
        for (const auto& e : entries) {
            json row = {{"degree", d}, {"poly", e.poly.coeffs}, {"text", poly_to_string(F, e.poly)}, {"ell", e.ell}};
            pretty << "  " << std::left << std::setw(24) << poly_to_string(F, e.poly) << " ell = " << std::setw(8) << e.ell;
            csv << d << ',' << poly_to_string(F, e.poly) << ',' << e.ell << ',';
            // theta_n only makes sense for roots inside F_{q^n}
            if (cfg.n % d == 0) {
                const u64 tn = ctx.theta_n(ctx.pow(ctx.subfield_generator(d), e.ell));
                row["theta_n"] = tn;
                pretty << " theta_n = " << tn;
                csv << tn;
            }
            j.push_back(row);
            csv << '\n';
            pretty << '\n';
        }
    }
    emit(cfg, j, csv.str(), pretty.str());
    return exit_ok;
}

int cmd_classinfo(const RunConfig& cfg) {
    const Fq F(PrimePower::of(cfg.q));
    const auto classes = enumerate_class_indices(F, cfg.n);
    json j = json::array();
    std::ostringstream csv, pretty;
    csv << "class,size,cycle_type,regular_semisimple,degree\n";
    for (const auto& idx : classes) {
        if (!cfg.mu_text.empty() && idx.cycle_type() != cfg.mu) continue;
        const Int size = class_size(cfg.q, idx, cfg.n);
        const Int deg = char_degree(cfg.q, idx);
        j.push_back({{"index", to_json(F, idx)},
                     {"label", idx.to_string(F)},
                     {"size", size.get_str()},
                     {"cycle_type", to_json(idx.cycle_type())},
                     {"regular_semisimple", idx.regular_semisimple()},
                     {"character_degree", deg.get_str()}});
        csv << '"' << idx.to_string(F) << "\"," << size << ",\"" << idx.cycle_type().to_string() << "\","
            << (idx.regular_semisimple() ? "true" : "false") << ',' << deg << '\n';
        pretty << std::left << std::setw(36) << idx.to_string(F) << " size " << std::setw(12) << size.get_str() << " type "
               << std::setw(10) << idx.cycle_type().to_string() << (idx.regular_semisimple() ? " rss" : "    ") << "  chi(1) = " << deg
               << '\n';
    }
    emit(cfg, j, csv.str(), pretty.str());
    return exit_ok;
}

// Verification suites. Each check prints one line; the first failing check is the witness.
struct Suite {
    std::vector<std::pair<std::string, bool>> checks;
    void check(const std::string& name, bool ok) { checks.emplace_back(name, ok); }
    bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
    }
};

void suite_tiny_groups(Suite& s) {
    for (auto [q, n] : {std::pair<u64, int>{2, 2}, {3, 2}, {2, 3}}) {
        const std::string tag = "GL_" + std::to_string(n) + "(" + std::to_string(q) + ")";
        const Fq F(PrimePower::of(q));
        ClassAlgebra algebra(F, n);
        const TinyGroup& G = algebra.group();
        bool sizes = true;
        for (std::size_t c = 0; c < G.class_count(); ++c) sizes = sizes && Int(static_cast<unsigned long>(G.class_size_at(c))) == class_size(q, G.class_at(c), n);
        s.check(tag + " class sizes", sizes);

        FieldCtx ctx(q, n);
        GreenEngine engine(ctx);
        const CharacterTable t = character_table(engine, n);
        const auto rep = verify_character_table(t);
        s.check(tag + " character table" + (rep.ok ? "" : ": " + rep.failures.front()), rep.ok);

        for (int k : {2, 3}) {
            Int total = 0;
            for (const auto& mu : partitions_of(n)) {
                const Int b = brute_g(algebra, k, mu, false);
                total += b;
                const Int f = frobenius_count(ctx, k, mu, false, &engine).value;
                s.check(tag + " k=" + std::to_string(k) + " mu=" + mu.to_string() + " brute " + b.get_str() + " frobenius " + f.get_str(),
                        b == f);
            }
            const Int expect = pow_int(ct_box_size(q, Partition{n}), static_cast<unsigned>(k));
            s.check(tag + " k=" + std::to_string(k) + " conservation", total == expect);
        }
    }
}

void suite_quasipoly(Suite& s, int n, int k) {
    for (int r = 0; r < n; ++r) {
        try {
            const FitResult fit = quasipoly_fit(n, k, r);
            s.check("n=" + std::to_string(n) + " k=" + std::to_string(k) + " residue " + std::to_string(r) + ": " + to_string(fit.verdict),
                    fit.verdict == Verdict::Polynomial);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::InsufficientSamples) throw;
            std::cout << "skip  residue " << r << ": " << e.what() << '\n';
        }
    }
}

void suite_nonpoly(Suite& s, int n, int k, int residue) {
    const std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " residue " + std::to_string(residue);
    try {
        const FitResult fit = quasipoly_fit(n, k, residue);
        s.check(tag + ": " + to_string(fit.verdict) + (fit.witness ? " witness " + fit.witness->get_str() : ""),
                fit.verdict == Verdict::NonPolynomial && fit.witness.has_value());
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::InsufficientSamples) throw;
        s.check(tag + ": no verdict, " + std::string(e.what()), false);
    }
}

int cmd_verify(const RunConfig& cfg) {
    Suite s;
    if (cfg.suite == "tiny-groups")
        suite_tiny_groups(s);
    else if (cfg.suite == "quasipoly")
        suite_quasipoly(s, cfg.n, cfg.k);
    else if (cfg.suite == "nonpoly")
        suite_nonpoly(s, cfg.n, cfg.k, cfg.residue);
    else
        fail(ErrorKind::InvalidInput, "unknown suite '" + cfg.suite + "' (tiny-groups, quasipoly, nonpoly)");
    json j = json::array();
    std::ostringstream csv, pretty;
    csv << "check,ok\n";
    for (const auto& [name, ok] : s.checks) {
        j.push_back({{"check", name}, {"ok", ok}});
        csv << '"' << name << "\"," << (ok ? "true" : "false") << '\n';
        pretty << (ok ? "pass  " : "FAIL  ") << name << '\n';
    }
    emit(cfg, {{"suite", cfg.suite}, {"ok", s.ok()}, {"checks", j}}, csv.str(), pretty.str());
    return s.ok() ? exit_ok : exit_mismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Characters of GL_n(F_q) and counts of factorizations into regular elliptic elements"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&cfg](CLI::App* sub, bool with_k) {
        sub->add_option("--q", cfg.q, "field size, a prime power");
        sub->add_option("--n", cfg.n, "matrix size");
        if (with_k) sub->add_option("--k", cfg.k, "number of regular elliptic factors");
        sub->add_option("--format", cfg.format, "json, csv or pretty")->capture_default_str();
        sub->add_option("--budget", cfg.budget, "largest group order enumerated")->capture_default_str();
        sub->add_option("--width", cfg.width, "worker threads")->capture_default_str();
        sub->add_option("--cache", cfg.cache, "field table cache directory (default: $GLNQ_CACHE)");
    };

    auto* chartable = app.add_subcommand("chartable", "full character table with an orthogonality report");
    common(chartable, false);
    chartable->add_option("--pin", cfg.pin, "irreducible that must vanish at eps_d, e.g. \"z^3+z^2+1\"");

    auto* count = app.add_subcommand("count", "number of k-tuples of regular elliptic elements with product of type mu");
    common(count, true);
    count->add_option("--mu", cfg.mu_text, "cycle type, e.g. \"2,1\" (default: (n))");
    count->add_flag("--box", cfg.box, "only count products that are regular semisimple");
    count->add_option("--method", cfg.method, "auto, closed-re-main, closed-n-minus-1, closed-nu-n, frobenius, brute")
        ->capture_default_str();
    count->add_option("--pin", cfg.pin, "irreducible that must vanish at eps_d");

    auto* verify = app.add_subcommand("verify", "run a cross-verification suite");
    common(verify, true);
    verify->add_option("--suite", cfg.suite, "tiny-groups, quasipoly or nonpoly")->capture_default_str();
    verify->add_option("--residue", cfg.residue, "residue class of q for nonpoly");

    auto* sweep = app.add_subcommand("sweep", "probability of type mu against 1/z_mu over prime powers q <= qmax");
    common(sweep, true);
    sweep->add_option("--mu", cfg.mu_text, "cycle type (default: (n))");
    sweep->add_option("--qmax", cfg.qmax, "largest q")->capture_default_str();

    auto* quasi = app.add_subcommand("quasipoly",
                                     "interpolate g_{k,(n)} on one residue class of q mod n; samples are the ascending prime "
                                     "powers in that class, and classes holding too few of them are refused");
    common(quasi, true);
    quasi->add_option("--residue", cfg.residue, "residue of q mod n")->capture_default_str();
    quasi->add_option("--degree", cfg.degree, "degree bound (default n^2 (k+1))");

    auto* irr = app.add_subcommand("irreducibles", "monic irreducibles of degree <= n with their ell values");
    common(irr, false);
    irr->add_option("--pin", cfg.pin, "irreducible that must vanish at eps_d");
    irr->add_option("--order", cfg.order, "lex or ell")->capture_default_str();

    auto* classinfo = app.add_subcommand("classinfo", "conjugacy classes of GL_n(F_q) with sizes and cycle types");
    common(classinfo, false);
    classinfo->add_option("--mu", cfg.mu_text, "only classes of this cycle type");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_invalid;
    }

    try {
        cfg.subcommand = app.get_subcommands().front()->get_name();
        cfg.validate();
        if (cfg.subcommand == "chartable") return cmd_chartable(cfg);
        if (cfg.subcommand == "count") return cmd_count(cfg);
        if (cfg.subcommand == "verify") return cmd_verify(cfg);
        if (cfg.subcommand == "sweep") return cmd_sweep(cfg);
        if (cfg.subcommand == "quasipoly") return cmd_quasipoly(cfg);
        if (cfg.subcommand == "irreducibles") return cmd_irreducibles(cfg);
        if (cfg.subcommand == "classinfo") return cmd_classinfo(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        if (is_budget_error(e.kind())) return exit_budget;
        switch (e.kind()) {
            case ErrorKind::OrthogonalityFailure:
            case ErrorKind::InexactResult:
            case ErrorKind::InexactDivision:
                return exit_mismatch;
            default:
                return exit_invalid;
        }
    }
    return exit_invalid;
}
