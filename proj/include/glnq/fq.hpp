#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "glnq/arith.hpp"

namespace glnq {

struct PrimePower {
    u64 p = 2;
    int e = 1;
    u64 q = 2;

    static PrimePower of(u64 q);  // throws NotPrimePower
    bool operator==(const PrimePower&) const = default;
};

// Monic polynomial over F_p given low degree first; helpers used to build field tables.
namespace prime_poly {

// Lexicographically least monic primitive polynomial of degree deg over F_p,
// comparing coefficient sequences constant term first. The leading 1 is included.
std::vector<int> least_primitive(u64 p, int deg);
bool is_primitive(u64 p, const std::vector<int>& modulus);

}  // namespace prime_poly

// F_q with q = p^e. Elements are integer codes 0..q-1: the base-p digits of a code are the
// coordinates in the power basis of a fixed root y of the least primitive degree-e polynomial
// over F_p. Codes 0..p-1 are the prime subfield.
class Fq {
public:
    explicit Fq(PrimePower pp);

    const PrimePower& prime_power() const { return pp_; }
    u64 p() const { return pp_.p; }
    u64 q() const { return pp_.q; }
    int e() const { return pp_.e; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;  // throws ZeroInput
    int pow(int a, u64 k) const;

    // y^k and its inverse map; log of 0 is undefined.
    int exp(u64 k) const { return static_cast<int>(exp_[k % (pp_.q - 1)]); }
    u64 log(int a) const;

    // Digits of the code over F_p, low first (length e).
    std::vector<int> digits(int a) const;
    int from_digits(const std::vector<int>& d) const;
    const std::vector<int>& defining_polynomial() const { return defining_; }

private:
    PrimePower pp_;
    std::vector<int> defining_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint16_t> add_table_;  // only for small q with e > 1
};

}  // namespace glnq
