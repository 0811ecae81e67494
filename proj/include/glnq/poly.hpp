#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "glnq/fq.hpp"

namespace glnq {

// Polynomial over F_q, coefficient codes low degree first. Trailing zeros are trimmed, so the
// zero polynomial has no coefficients.
struct PolyQ {
    std::vector<int> coeffs;

    PolyQ() = default;
    explicit PolyQ(std::vector<int> c);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }
    int operator[](std::size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }

    static PolyQ one() { return PolyQ({1}); }
    static PolyQ z() { return PolyQ({0, 1}); }

    auto operator<=>(const PolyQ&) const = default;
};

// Degree first, then coefficients constant term first.
bool poly_less(const PolyQ& a, const PolyQ& b);

PolyQ poly_add(const Fq& F, const PolyQ& a, const PolyQ& b);
PolyQ poly_sub(const Fq& F, const PolyQ& a, const PolyQ& b);
PolyQ poly_mul(const Fq& F, const PolyQ& a, const PolyQ& b);
PolyQ poly_scale(const Fq& F, const PolyQ& a, int c);
std::pair<PolyQ, PolyQ> poly_divmod(const Fq& F, const PolyQ& a, const PolyQ& b);
PolyQ poly_mod(const Fq& F, const PolyQ& a, const PolyQ& b);
PolyQ poly_gcd(const Fq& F, PolyQ a, PolyQ b);  // monic gcd
PolyQ poly_derivative(const Fq& F, const PolyQ& a);
PolyQ poly_pow(const Fq& F, const PolyQ& a, unsigned k);

// "z^3+z^2+1"; non-prime-field coefficients are written as their integer codes.
std::string poly_to_string(const Fq& F, const PolyQ& f);
// Accepts "z^2+2z+1", "z^2 + 2*z + 1", or a coefficient list "1,2,1" / "[1,2,1]" (low first).
PolyQ parse_poly(const Fq& F, const std::string& text);

// Monic irreducibles of degree d other than z, sorted by poly_less. Memoized per (q, d).
std::vector<PolyQ> enumerate_irreducibles(const Fq& F, int d, u64 budget = 1ULL << 22);
Int count_irreducibles(u64 q, int m);

bool is_irreducible(const Fq& F, const PolyQ& f);

// Multiset of monic irreducible factors with multiplicities, sorted by poly_less.
std::vector<std::pair<PolyQ, int>> factor_poly(const Fq& F, const PolyQ& f);
bool is_squarefree(const Fq& F, const PolyQ& f);

}  // namespace glnq
