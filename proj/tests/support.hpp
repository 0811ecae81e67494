#pragma once

#include <random>
#include <vector>

#include "glnq/fq.hpp"
#include "glnq/matrix.hpp"
#include "glnq/partition.hpp"

namespace glnq::testing {

// Fixed seeds keep every property run reproducible.
inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240611);
    return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

// Random partition of n by repeatedly cutting a random part.
inline Partition random_partition(int n) {
    std::vector<int> parts;
    int left = n;
    while (left > 0) {
        const int p = uniform(1, left);
        parts.push_back(p);
        left -= p;
    }
    return Partition(parts);
}

inline MatrixQ random_matrix(const Fq& F, int n) {
    MatrixQ m(n);
    for (auto& x : m.a) x = uniform(0, static_cast<int>(F.q()) - 1);
    return m;
}

inline MatrixQ random_invertible(const Fq& F, int n) {
    for (;;) {
        MatrixQ m = random_matrix(F, n);
        if (mat_rank(F, m) == n) return m;
    }
}

inline Fq field(u64 q) { return Fq(PrimePower::of(q)); }

}  // namespace glnq::testing
