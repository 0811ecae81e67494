#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>

#include "glnq/arith.hpp"

namespace glnq {

// Element of Z[zeta_M] written as sum c_a zeta_M^a over a sparse exponent map.
//
// Two sums can represent the same number; canonical() rewrites a sum over the smallest
// modulus that carries it, in a fixed integral basis of Z[zeta_m] built from the prime-power
// factors of m. Equality and rational extraction go through that form.
class CyclotomicSum {
public:
    CyclotomicSum() = default;
    explicit CyclotomicSum(u64 modulus) : modulus_(modulus) {}
    CyclotomicSum(u64 modulus, const Int& constant);

    static CyclotomicSum root_of_unity(u64 modulus, u64 exponent, const Int& coeff = 1);

    u64 modulus() const { return modulus_; }
    const std::map<u64, Int>& terms() const { return terms_; }
    bool structurally_zero() const { return terms_.empty(); }

    void add_term(u64 exponent, const Int& coeff);
    CyclotomicSum lifted(u64 new_modulus) const;  // new_modulus must be a multiple

    CyclotomicSum& operator+=(const CyclotomicSum& other);
    CyclotomicSum& operator-=(const CyclotomicSum& other);
    CyclotomicSum& operator*=(const Int& k);
    friend CyclotomicSum operator+(CyclotomicSum a, const CyclotomicSum& b) { return a += b; }
    friend CyclotomicSum operator-(CyclotomicSum a, const CyclotomicSum& b) { return a -= b; }
    friend CyclotomicSum operator*(CyclotomicSum a, const Int& k) { return a *= k; }
    friend CyclotomicSum operator*(const CyclotomicSum& a, const CyclotomicSum& b);
    CyclotomicSum operator-() const;

    CyclotomicSum conj() const;
    CyclotomicSum pow(unsigned k) const;
    // Galois action zeta -> zeta^t, t coprime to the modulus.
    CyclotomicSum galois(u64 t) const;

    CyclotomicSum canonical() const;
    bool is_zero() const { return canonical().terms_.empty(); }
    friend bool operator==(const CyclotomicSum& a, const CyclotomicSum& b) { return (a - b).is_zero(); }

    // Exact division by an integer; throws InexactDivision if the quotient is not integral.
    CyclotomicSum divide_exact(const Int& k) const;

    std::optional<Rational> rational_value() const;
    Int integer_value(const std::string& context) const;  // throws InexactResult

    std::complex<long double> to_complex() const;
    long double error_bound() const;  // L1 norm of coefficients times 2^-40

    std::string to_string() const;  // "3 + 2*z63^9 - z63^18"

private:
    u64 modulus_ = 1;
    std::map<u64, Int> terms_;
};

}  // namespace glnq
