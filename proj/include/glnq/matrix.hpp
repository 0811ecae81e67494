#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "glnq/fq.hpp"
#include "glnq/partition.hpp"
#include "glnq/poly.hpp"

namespace glnq {

// n x n matrix over F_q, row-major coefficient codes.
struct MatrixQ {
    int n = 0;
    std::vector<int> a;

    MatrixQ() = default;
    explicit MatrixQ(int dim) : n(dim), a(static_cast<std::size_t>(dim * dim), 0) {}
    MatrixQ(int dim, std::vector<int> entries);

    static MatrixQ identity(int dim);

    int& at(int i, int j) { return a[static_cast<std::size_t>(i * n + j)]; }
    int at(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }

    // Base-q integer with entry (0,0) least significant.
    u64 code(u64 q) const;
    static MatrixQ from_code(u64 code, int dim, u64 q);

    bool operator==(const MatrixQ&) const = default;
};

MatrixQ mat_mul(const Fq& F, const MatrixQ& x, const MatrixQ& y);
MatrixQ mat_add(const Fq& F, const MatrixQ& x, const MatrixQ& y);
MatrixQ mat_scale(const Fq& F, const MatrixQ& x, int c);
int mat_rank(const Fq& F, MatrixQ x);
int mat_det(const Fq& F, MatrixQ x);
MatrixQ mat_inverse(const Fq& F, const MatrixQ& x);  // throws Singular
MatrixQ mat_poly_eval(const Fq& F, const PolyQ& f, const MatrixQ& x);
MatrixQ block_diagonal(const std::vector<MatrixQ>& blocks);
MatrixQ submatrix(const MatrixQ& x, int row, int col, int size);

PolyQ char_poly(const Fq& F, const MatrixQ& x);  // Hessenberg reduction

// Companion matrix: ones on the subdiagonal, last column (-h_0, ..., -h_{m-1}).
MatrixQ companion_matrix(const Fq& F, const PolyQ& h);

// Finitely supported map irreducible -> nonempty partition, sorted by poly_less.
struct ClassIndex {
    std::vector<std::pair<PolyQ, Partition>> parts;

    int norm() const;
    bool is_primary() const { return parts.size() == 1; }
    bool operator==(const ClassIndex&) const = default;
    bool operator<(const ClassIndex& other) const;

    void normalize();  // sort and drop empty partitions
    Partition cycle_type() const;
    bool regular_semisimple() const;
    std::string to_string(const Fq& F) const;  // "{z+1:(2,1), z^2+z+1:(1)}"
};

ClassIndex primary_index(const PolyQ& f, const Partition& lambda);

ClassIndex class_index(const Fq& F, const MatrixQ& g);
Partition cycle_type(const Fq& F, const MatrixQ& g);
bool is_regular_semisimple(const Fq& F, const MatrixQ& g);
bool is_regular_elliptic(const Fq& F, const MatrixQ& g);

MatrixQ rcf_from_index(const Fq& F, const ClassIndex& idx, int n);

Int gamma_n(u64 q, int n);
Int class_size(u64 q, const ClassIndex& idx, int n);
Int ct_box_size(u64 q, const Partition& mu);
Int ct_size(const Fq& F, const Partition& mu);  // sums class sizes over class indices of type mu

std::vector<ClassIndex> enumerate_class_indices(const Fq& F, int n);

// Calls visit(g) for every element of GL_n(F_q) in a fixed order. Refuses when
// gamma_n(q) exceeds the budget.
void enumerate_group(const Fq& F, int n, u64 budget, const std::function<void(const MatrixQ&)>& visit);

// Elements and conjugacy classes of GL_n(F_q) at brute-force scale.
class TinyGroup {
public:
    static constexpr u64 default_budget = 1000000;

    TinyGroup(const Fq& F, int n, u64 budget = default_budget);

    const Fq& field() const { return F_; }
    int n() const { return n_; }
    u64 order() const { return elements_.size(); }
    const std::vector<MatrixQ>& elements() const { return elements_; }

    std::size_t class_count() const { return classes_.size(); }
    const ClassIndex& class_at(std::size_t c) const { return classes_[c]; }
    const std::vector<ClassIndex>& classes() const { return classes_; }
    u64 class_size_at(std::size_t c) const { return sizes_[c]; }
    const MatrixQ& representative(std::size_t c) const { return elements_[reps_[c]]; }

    std::size_t class_of_element(std::size_t i) const { return element_class_[i]; }
    std::size_t class_of(const MatrixQ& g) const;     // by lookup
    std::size_t element_index(const MatrixQ& g) const;
    std::size_t find_class(const ClassIndex& idx) const;  // throws InvalidInput if absent
    std::size_t identity_class() const;

private:
    Fq F_;
    int n_;
    std::vector<MatrixQ> elements_;
    std::vector<std::size_t> element_class_;
    std::vector<ClassIndex> classes_;
    std::vector<u64> sizes_;
    std::vector<std::size_t> reps_;
    std::vector<std::uint32_t> code_to_element_;  // dense when q^{n^2} is small
    std::unordered_map<u64, std::uint32_t> sparse_code_to_element_;
};

}  // namespace glnq
