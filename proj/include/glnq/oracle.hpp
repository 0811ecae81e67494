#pragma once

#include <string>
#include <vector>

#include "glnq/green.hpp"
#include "glnq/matrix.hpp"

namespace glnq {

// Structure constants of the class algebra of a tiny GL_n(F_q):
// a(C, D, E) = #{c in C : c^-1 e in D} for the fixed representative e of E.
class ClassAlgebra {
public:
    static constexpr u64 default_budget = 10000;

    ClassAlgebra(const Fq& F, int n, u64 budget = default_budget);

    const TinyGroup& group() const { return group_; }
    std::size_t class_count() const { return group_.class_count(); }
    u64 constant(std::size_t c, std::size_t d, std::size_t e) const { return a_[(c * k_ + d) * k_ + e]; }

    // Classes inside CT_mu (or CT^box_mu).
    std::vector<bool> cycle_type_mask(const Partition& mu, bool box) const;

private:
    TinyGroup group_;
    std::size_t k_;
    std::vector<u64> a_;
};

// Number of k-tuples of regular elliptic elements whose product lies in CT_mu (CT^box_mu).
Int brute_g(const ClassAlgebra& algebra, int k, const Partition& mu, bool box);
// Same count by a literal loop over pairs, k = 2 only.
Int brute_g_literal(const TinyGroup& group, const Partition& mu, bool box);
// Stanley's count of k-tuples of n-cycles in S_n with product of type mu.
Int brute_sn_g(int n, int k, const Partition& mu);

// Frobenius formula evaluated with a full character table.
Int frobenius_from_table(const CharacterTable& table, int k, const Partition& mu, bool box);

struct TableReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// Orthogonality, degrees at the identity, and class-function consistency against brute force.
TableReport verify_character_table(const CharacterTable& table);

}  // namespace glnq
