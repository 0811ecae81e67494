#include "glnq/field.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "glnq/error.hpp"

namespace glnq {

FieldOptions FieldOptions::from_env() {
    FieldOptions o;
    if (const char* dir = std::getenv("GLNQ_CACHE"); dir && *dir) o.cache_dir = std::filesystem::path(dir);
    return o;
}

std::filesystem::path field_cache_file(const std::filesystem::path& dir, u64 p, int e, int N) {
    return dir / ("field_p" + std::to_string(p) + "_e" + std::to_string(e) + "_N" + std::to_string(N) + ".json");
}

namespace {

std::optional<std::vector<int>> load_cached_modulus(const std::filesystem::path& file, u64 p, int e, int N) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    try {
        auto j = nlohmann::json::parse(in);
        if (j.at("p").get<u64>() != p || j.at("e").get<int>() != e || j.at("N").get<int>() != N) return std::nullopt;
        auto m = j.at("modulus").get<std::vector<int>>();
        if (static_cast<int>(m.size()) != e * N + 1) return std::nullopt;
        return m;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void store_cached_modulus(const std::filesystem::path& dir, u64 p, int e, int n, int N, const std::vector<int>& m) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::ofstream out(field_cache_file(dir, p, e, N));
    if (!out) return;
    nlohmann::json j{{"p", p}, {"e", e}, {"n", n}, {"N", N}, {"modulus", m}};
    out << j.dump() << '\n';
}

}  // namespace

FieldCtx::FieldCtx(u64 q, int n, const FieldOptions& options) : pp_(PrimePower::of(q)), base_(pp_), n_(n) {
    require(n >= 1, ErrorKind::DegreeOutOfRange, "n must be positive");
    u64 N = 1;
    for (int d = 2; d <= n; ++d) N = lcm_u64(N, static_cast<u64>(d));
    N_ = static_cast<int>(N);
    const Int big_m = pow_int(Int(static_cast<unsigned long>(q)), static_cast<unsigned>(N_)) - 1;
    require(big_m <= Int(static_cast<unsigned long>(options.budget)), ErrorKind::FieldTooLarge,
            "q^N - 1 = " + big_m.get_str() + " exceeds the table budget " + std::to_string(options.budget));
    M_ = big_m.get_ui();

    const int D = pp_.e * N_;
    std::optional<std::vector<int>> cached;
    if (options.cache_dir) {
        cached = load_cached_modulus(field_cache_file(*options.cache_dir, pp_.p, pp_.e, N_), pp_.p, pp_.e, N_);
        if (cached && !prime_poly::is_primitive(pp_.p, *cached)) cached.reset();
    }
    if (cached) {
        modulus_ = *cached;
    } else {
        modulus_ = prime_poly::least_primitive(pp_.p, D);
        if (options.cache_dir) store_cached_modulus(*options.cache_dir, pp_.p, pp_.e, n_, N_, modulus_);
    }

    build_tables(1);
    if (options.pin) {
        const PolyQ& f = *options.pin;
        const int d = f.degree();
        require(d >= 1 && d <= n_, ErrorKind::DegreeOutOfRange, "pin polynomial degree must lie in 1..n");
        require(f.is_monic() && is_irreducible(base_, f) && !(f == PolyQ::z()), ErrorKind::NotIrreducible,
                "pin polynomial must be monic irreducible and different from z");
        const u64 step = M_ / subfield_order(d);
        u64 chosen = 0;
        for (u64 a = 1; a < M_ || (M_ == 1 && a == 1); ++a) {
            if (gcd_u64(a, M_) != 1) continue;
            if (evaluate(f, FieldElem::unit(mulmod(a, step, M_))).zero) {
                chosen = a;
                break;
            }
        }
        require(chosen != 0, ErrorKind::NotIrreducible, "pin polynomial has no root of the required form");
        if (chosen != 1) build_tables(chosen);
    }
    build_irreducible_tables();
}

u64 FieldCtx::packed_add(u64 a, u64 b) const {
    const u64 p = pp_.p;
    if (p == 2) return a ^ b;
    u64 out = 0, scale = 1;
    while (a || b) {
        out += ((a % p + b % p) % p) * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    return out;
}

void FieldCtx::build_tables(u64 generator_power) {
    generator_power_ = generator_power;
    const u64 p = pp_.p;
    const int D = static_cast<int>(modulus_.size()) - 1;
    std::vector<std::uint32_t> xpow(M_);
    std::vector<u64> cur(static_cast<std::size_t>(D), 0);
    cur[0] = 1;
    for (u64 i = 0; i < M_; ++i) {
        u64 code = 0;
        for (int k = D - 1; k >= 0; --k) code = code * p + cur[static_cast<std::size_t>(k)];
        xpow[i] = static_cast<std::uint32_t>(code);
        // multiply by x modulo the defining polynomial
        u64 top = cur[static_cast<std::size_t>(D - 1)];
        for (int k = D - 1; k > 0; --k) cur[static_cast<std::size_t>(k)] = cur[static_cast<std::size_t>(k - 1)];
        cur[0] = 0;
        if (top)
            for (int k = 0; k < D; ++k)
                cur[static_cast<std::size_t>(k)] =
                    (cur[static_cast<std::size_t>(k)] + top * (p - static_cast<u64>(modulus_[static_cast<std::size_t>(k)]) % p)) % p;
    }
    exp_.assign(M_, 0);
    log_.assign(M_ + 1, 0);
    for (u64 i = 0; i < M_; ++i) {
        exp_[i] = xpow[mulmod(i, generator_power, M_)];
        log_[exp_[i]] = static_cast<std::uint32_t>(i);
    }
    zech_.assign(M_, 0);
    for (u64 i = 0; i < M_; ++i) {
        u64 v = packed_add(exp_[i], 1);
        zech_[i] = v == 0 ? static_cast<std::uint32_t>(M_) : log_[v];
    }

    // Embed F_q: the root y of the base field's defining polynomial goes to eps_1^j, least j.
    const u64 q1 = pp_.q - 1;
    const u64 step = M_ / q1;
    const auto& g = base_.defining_polynomial();
    base_embed_ = 0;
    for (u64 j = 1; j <= q1; ++j) {
        if (gcd_u64(j, q1) != 1) continue;
        FieldElem x = FieldElem::unit(mulmod(j % q1, step, M_));
        FieldElem acc = FieldElem::zero_elem();
        for (std::size_t k = g.size(); k-- > 0;) {
            acc = mul(acc, x);
            if (g[k]) acc = add(acc, FieldElem::unit(log_[static_cast<u64>(g[k])]));
        }
        if (acc.zero) {
            base_embed_ = j % q1 == 0 ? q1 : j;
            break;
        }
    }
    require(base_embed_ != 0, ErrorKind::InvalidInput, "failed to embed the base field");
}

void FieldCtx::build_irreducible_tables() {
    irr_.assign(static_cast<std::size_t>(n_) + 1, {});
    ell_index_.clear();
    const u64 q = pp_.q;
    for (int d = 1; d <= n_; ++d) {
        const u64 Q = subfield_order(d);
        auto& entries = irr_[static_cast<std::size_t>(d)];
        for (u64 ell = 0; ell < Q; ++ell) {
            u64 x = ell, least = ell;
            int size = 0;
            bool smaller = false;
            do {
                ++size;
                x = mulmod(x, q, Q);
                if (x < least) {
                    smaller = true;
                    break;
                }
            } while (x != ell);
            if (smaller || size != d) continue;
            PolyQ f = minimal_polynomial(d, ell);
            ell_index_.emplace(f.coeffs, std::make_pair(d, ell));
            entries.push_back({std::move(f), ell});
        }
        std::sort(entries.begin(), entries.end(),
                  [](const IrreducibleEntry& a, const IrreducibleEntry& b) { return poly_less(a.poly, b.poly); });
    }
}

u64 FieldCtx::subfield_order(int d) const {
    require(d >= 1 && d <= n_, ErrorKind::DegreeOutOfRange, "subfield degree must lie in 1..n");
    return pow_u64(pp_.q, static_cast<unsigned>(d)) - 1;
}

FieldElem FieldCtx::subfield_generator(int d) const { return FieldElem::unit((M_ / subfield_order(d)) % M_); }

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
    if (a.zero || b.zero) return FieldElem::zero_elem();
    return FieldElem::unit((a.exponent + b.exponent) % M_);
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const {
    if (a.zero) return b;
    if (b.zero) return a;
    // eps^a + eps^b = eps^a (1 + eps^{b-a})
    const u64 diff = (b.exponent + M_ - a.exponent) % M_;
    const u64 z = zech_[diff];
    if (z == M_) return FieldElem::zero_elem();
    return FieldElem::unit((a.exponent + z) % M_);
}

FieldElem FieldCtx::neg(FieldElem a) const {
    if (a.zero || pp_.p == 2) return a;
    return FieldElem::unit((a.exponent + M_ / 2) % M_);
}

FieldElem FieldCtx::pow(FieldElem a, u64 k) const {
    if (a.zero) return k == 0 ? one() : a;
    return FieldElem::unit(mulmod(a.exponent, k % M_, M_));
}

FieldElem FieldCtx::embed(int code) const {
    if (code == 0) return FieldElem::zero_elem();
    const u64 q1 = pp_.q - 1;
    const u64 t = base_.log(code);
    return FieldElem::unit(mulmod(mulmod(t, base_embed_, q1 == 1 ? 1 : q1), M_ / q1, M_));
}

std::optional<int> FieldCtx::restrict(FieldElem x) const {
    if (x.zero) return 0;
    const u64 q1 = pp_.q - 1;
    const u64 step = M_ / q1;
    if (x.exponent % step != 0) return std::nullopt;
    if (q1 == 1) return 1;
    const u64 s = x.exponent / step;
    const u64 t = mulmod(s, invmod(base_embed_ % q1, q1), q1);
    return base_.exp(t);
}

FieldElem FieldCtx::evaluate(const PolyQ& f, FieldElem x) const {
    FieldElem acc = FieldElem::zero_elem();
    for (std::size_t k = f.coeffs.size(); k-- > 0;) acc = add(mul(acc, x), embed(f.coeffs[k]));
    return acc;
}

CyclotomicSum FieldCtx::theta(FieldElem x) const {
    require(!x.zero, ErrorKind::ZeroInput, "theta is defined on units only");
    return CyclotomicSum::root_of_unity(M_, x.exponent);
}

u64 FieldCtx::theta_n(FieldElem x) const {
    require(!x.zero, ErrorKind::ZeroInput, "theta_n is defined on units only");
    const u64 step = M_ / subfield_order(n_);
    require(x.exponent % step == 0, ErrorKind::NotInSubfield, "element does not lie in F_{q^n}");
    return x.exponent / step;
}

u64 FieldCtx::dlog(FieldElem x) const {
    require(!x.zero, ErrorKind::ZeroInput, "discrete log of zero");
    return x.exponent;
}

u64 FieldCtx::packed(FieldElem x) const { return x.zero ? 0 : exp_[x.exponent]; }

PolyQ FieldCtx::minimal_polynomial(int d, u64 ell) const {
    const u64 Q = subfield_order(d);
    const u64 step = M_ / Q;
    std::vector<u64> orbit;
    u64 x = ell % Q;
    do {
        orbit.push_back(x);
        x = mulmod(x, pp_.q, Q);
    } while (x != ell % Q);
    // coefficients low first, starting from the constant polynomial 1
    std::vector<FieldElem> poly{one()};
    for (u64 o : orbit) {
        FieldElem root = FieldElem::unit(mulmod(o, step, M_));
        FieldElem minus_root = neg(root);
        std::vector<FieldElem> next(poly.size() + 1, FieldElem::zero_elem());
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = add(next[i + 1], poly[i]);
            next[i] = add(next[i], mul(poly[i], minus_root));
        }
        poly = std::move(next);
    }
    std::vector<int> coeffs;
    for (const auto& c : poly) {
        auto code = restrict(c);
        require(code.has_value(), ErrorKind::InvalidInput, "minimal polynomial coefficient outside F_q");
        coeffs.push_back(*code);
    }
    return PolyQ(std::move(coeffs));
}

u64 FieldCtx::ell_of(const PolyQ& f) const {
    auto it = ell_index_.find(f.coeffs);
    if (it != ell_index_.end()) return it->second.second;
    require(f.degree() >= 1 && f.degree() <= n_, ErrorKind::DegreeOutOfRange, "degree of f must lie in 1..n");
    fail(ErrorKind::NotIrreducible, "not a monic irreducible polynomial other than z");
}

std::vector<u64> FieldCtx::ell_orbit(const PolyQ& f) const {
    const u64 ell = ell_of(f);
    const u64 Q = subfield_order(f.degree());
    std::vector<u64> out;
    u64 x = ell;
    do {
        out.push_back(x);
        x = mulmod(x, pp_.q, Q);
    } while (x != ell);
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<IrreducibleEntry>& FieldCtx::irreducibles(int d) const {
    require(d >= 1 && d <= n_, ErrorKind::DegreeOutOfRange, "degree must lie in 1..n");
    return irr_[static_cast<std::size_t>(d)];
}

}  // namespace glnq
