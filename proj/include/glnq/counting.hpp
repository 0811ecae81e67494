#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glnq/cyclotomic.hpp"
#include "glnq/field.hpp"
#include "glnq/partition.hpp"

namespace glnq {

class GreenEngine;

enum class Method { closed_re_main, closed_n_minus_1, closed_nu_n, frobenius, brute };

std::string to_string(Method m);
Method parse_method(const std::string& s);  // accepts "closed-nu-n" and "closed_nu_n" spellings

struct CountResult {
    int n = 0;
    int k = 0;
    Partition mu;
    Int q;
    Int value;
    Method method = Method::frobenius;
    bool box = false;
};

// Closed formulas accept any integer q >= 2; the counting interpretation needs a prime power.
Int gamma_q(const Int& q, int n);
Rational P_nk(const Int& q, int n, int k);
Rational D_nkd(const Int& q, int n, int k, int d);
Rational C_nkc(const Int& q, int n, int k, int c);
Int count_irreducibles_q(const Int& q, int m);
Int ct_box_size_q(const Int& q, const Partition& mu);

struct Table1Row {
    Int gamma;
    Rational P_nk;
    Int deg_ndr;
    Rational D_nkd;
    Rational C_nkc;
};
Table1Row table1(const Int& q, int n, int k, int d, int c, int r = 0);

CountResult closed_re_main(const Int& q, int n, int k, const Partition& mu, bool box = true);
CountResult closed_n_minus_1(const Int& q, int n, int k);
CountResult closed_nu_n(const Int& q, int n, int k);

// sum_r (-1)^{rk} chi^{(n-r,1^r)}_mu / (q^{C(r+1,2)} [n-1 choose r]_q)^{k-1}; defined at q = 1 too.
Rational re_main_normalized(const Int& q, int n, int k, const Partition& mu);
bool re_main_eligible(int n, const Partition& mu);

Int count_irr_div(const Int& q, int n, int d, const Int& b);

// (1/d) sum_{c|d} mu(d/c) C_{n,k,c}(q)
Rational char_sum_power_identity(const Int& q, int n, int d, int k);
// The same quantity by summing theta over the roots of every degree-n irreducible.
Int char_sum_power_direct(const FieldCtx& ctx, int d, int k);

// Frobenius orbit minima of size d in Z/(q^d - 1): the canonical ell values of F_d(q).
std::vector<u64> ell_representatives(u64 q, int d);

// Sum of chi^{f,r} over CT_(n)(q), f of degree d with discrete log ell.
Int char_sum_reg_elliptic(u64 q, int n, int d, u64 ell, int r);
Int char_sum_reg_elliptic(const FieldCtx& ctx, const PolyQ& f, int r);

// Sum of chi^{f,r} over CT^box_mu(q).
CyclotomicSum char_sum_ct_box(u64 q, int d, u64 ell, int r, const Partition& mu);
CyclotomicSum char_sum_ct_box(const FieldCtx& ctx, const PolyQ& f, int r, const Partition& mu);

// Frobenius formula over hook primary characters. Non-box targets with repeated parts need
// full character values; they go through `engine` when given, otherwise UnsupportedTarget.
CountResult frobenius_count(u64 q, int n, int k, const Partition& mu, bool box, GreenEngine* engine = nullptr);
CountResult frobenius_count(const FieldCtx& ctx, int k, const Partition& mu, bool box, GreenEngine* engine = nullptr);

// Picks the cheapest exact method for g (or g^box).
CountResult count_auto(const Int& q, int n, int k, const Partition& mu, bool box);

Rational prob(const Int& q, int k, const Partition& mu, bool box);

struct LimitRow {
    Int q;
    Rational p;
    Rational target;  // 1/z_mu
    Rational gap;     // |p - 1/z_mu|
    Method method;
    bool box;
};
std::vector<LimitRow> limit_report(int n, int k, const Partition& mu, const std::vector<Int>& qs);

long e_exponent(int n, int d, int r);

// Ascending prime powers q >= start with q = residue (mod n). Residue classes that hold only
// finitely many prime powers come back short.
std::vector<Int> prime_powers_in_residue(int n, int residue, std::size_t count, const Int& start = 2);

enum class Verdict { Polynomial, NonPolynomial };

struct FitResult {
    int n = 0;
    int k = 0;
    int residue = 0;
    std::vector<Rational> coefficients;  // low degree first
    Verdict verdict = Verdict::Polynomial;
    std::optional<Int> witness;
    std::vector<Int> samples;
};

int default_degree_bound(int n, int k);
// Interpolates g_{k,(n)} on the first degree_bound + 1 samples, checks the rest.
FitResult quasipoly_fit(int n, int k, int residue, const std::vector<Int>& samples, int degree_bound);
FitResult quasipoly_fit(int n, int k, int residue, int degree_bound = -1);

std::vector<Rational> lagrange_interpolate(const std::vector<Int>& xs, const std::vector<Rational>& ys);
Rational poly_eval(const std::vector<Rational>& coeffs, const Rational& x);

bool q_to_1_check(int n, int k, const Partition& mu);

}  // namespace glnq
