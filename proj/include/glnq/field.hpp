#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "glnq/cyclotomic.hpp"
#include "glnq/fq.hpp"
#include "glnq/poly.hpp"

namespace glnq {

// Element of the ambient field F_{q^N}: zero or eps^exponent.
struct FieldElem {
    bool zero = false;
    u64 exponent = 0;

    static FieldElem zero_elem() { return {true, 0}; }
    static FieldElem unit(u64 e) { return {false, e}; }
    bool operator==(const FieldElem&) const = default;
};

struct IrreducibleEntry {
    PolyQ poly;
    u64 ell;  // canonical: least element of the Frobenius orbit mod q^d - 1
};

struct FieldOptions {
    u64 budget = 1ULL << 24;
    std::optional<PolyQ> pin;                       // irreducible that must vanish at eps_d
    std::optional<std::filesystem::path> cache_dir;

    // cache_dir from GLNQ_CACHE when set.
    static FieldOptions from_env();
};

// F_{q^N} with N = lcm(1, ..., n), a fixed generator eps of its unit group, and the subfield
// generators eps_d = eps^{M/(q^d-1)} for d <= n. Immutable after construction.
class FieldCtx {
public:
    FieldCtx(u64 q, int n, const FieldOptions& options = {});

    const PrimePower& prime_power() const { return pp_; }
    const Fq& base() const { return base_; }
    u64 q() const { return pp_.q; }
    int n() const { return n_; }
    int ambient_degree() const { return N_; }
    u64 unit_order() const { return M_; }
    const std::vector<int>& modulus() const { return modulus_; }
    // eps = x^generator_power in F_p[x]/(modulus).
    u64 generator_power() const { return generator_power_; }

    FieldElem one() const { return FieldElem::unit(0); }
    FieldElem generator() const { return FieldElem::unit(1 % M_); }
    FieldElem subfield_generator(int d) const;
    u64 subfield_order(int d) const;  // q^d - 1

    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem pow(FieldElem a, u64 k) const;
    FieldElem embed(int code) const;            // F_q -> F_{q^N}
    std::optional<int> restrict(FieldElem x) const;  // inverse of embed on F_q
    FieldElem evaluate(const PolyQ& f, FieldElem x) const;

    CyclotomicSum theta(FieldElem x) const;
    u64 theta_n(FieldElem x) const;
    u64 dlog(FieldElem x) const;

    // Minimal polynomial over F_q of eps_d^ell, with the orbit size as degree.
    PolyQ minimal_polynomial(int d, u64 ell) const;

    u64 ell_of(const PolyQ& f) const;
    std::vector<u64> ell_orbit(const PolyQ& f) const;  // all valid representatives
    const std::vector<IrreducibleEntry>& irreducibles(int d) const;

    // Packed F_p coordinates of a field element (base-p digits, low first).
    u64 packed(FieldElem x) const;

private:
    void build_tables(u64 generator_power);
    void build_irreducible_tables();
    u64 packed_add(u64 a, u64 b) const;

    PrimePower pp_;
    Fq base_;
    int n_;
    int N_;
    u64 M_;
    std::vector<int> modulus_;
    u64 generator_power_ = 1;
    u64 base_embed_ = 1;  // y -> eps_1^base_embed_
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> zech_;  // zech_[a] = log(1 + eps^a), or M for zero
    std::vector<std::vector<IrreducibleEntry>> irr_;
    std::map<std::vector<int>, std::pair<int, u64>> ell_index_;
};

// Cache files hold {p, e, n, N, modulus}; keyed by (p, e, N).
std::filesystem::path field_cache_file(const std::filesystem::path& dir, u64 p, int e, int N);

}  // namespace glnq
