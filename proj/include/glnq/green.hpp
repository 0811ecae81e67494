#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "glnq/cyclotomic.hpp"
#include "glnq/field.hpp"
#include "glnq/matrix.hpp"

namespace glnq {

// Values of a class function, indexed like TinyGroup::classes().
using ClassFunction = std::vector<CyclotomicSum>;
using CharEvaluator = std::function<CyclotomicSum(const MatrixQ&)>;

// kappa(mu, t) = prod_{i=1}^{l(mu)-1} (1 - t^i)
Int kappa(const Partition& mu, const Int& t);

// Primary-support character P_d^b evaluated directly on a matrix of GL_d.
CyclotomicSum p_char(const FieldCtx& ctx, int d, u64 b, const MatrixQ& g);

// Literal parabolic induction: sums over every x in GL_n with x g x^-1 block upper triangular.
CyclotomicSum parabolic_induct(const FieldCtx& ctx, const std::vector<int>& nu, const std::vector<CharEvaluator>& factors,
                               const MatrixQ& g, u64 budget = TinyGroup::default_budget);

// Green's characters of GL_m(F_q), m <= ctx.n(), built class by class.
//
// Induction works on class histograms: for a composition c of n, every element p of the parabolic
// subgroup is tallied by (class of p in GL_n, classes of its diagonal blocks). A product of class
// functions then costs one pass over the histogram.
class GreenEngine {
public:
    explicit GreenEngine(const FieldCtx& ctx, u64 budget = TinyGroup::default_budget);

    const FieldCtx& ctx() const { return ctx_; }
    const TinyGroup& group(int m);

    ClassFunction p_char(int d, u64 b);
    ClassFunction induce(const std::vector<int>& composition, const std::vector<ClassFunction>& factors);
    ClassFunction j_char(const PolyQ& f, const Partition& lambda);
    ClassFunction chi(const ClassIndex& idx);

    // Block sizes, in order, of the product defining chi(idx).
    static std::vector<int> composition_of(const ClassIndex& idx);

private:
    struct Histogram {
        Int parabolic_order;
        // (class in GL_n, block classes...) -> number of parabolic elements
        std::map<std::vector<std::size_t>, u64> counts;
    };
    const Histogram& histogram(const std::vector<int>& composition);

    const FieldCtx& ctx_;
    u64 budget_;
    std::map<int, std::unique_ptr<TinyGroup>> groups_;
    std::map<std::vector<int>, Histogram> hist_;
    std::map<std::pair<PolyQ, Partition>, ClassFunction> j_cache_;
};

struct CharacterTable {
    u64 q = 0;
    int n = 0;
    std::vector<ClassIndex> classes;  // columns
    std::vector<Int> class_sizes;
    std::vector<ClassIndex> rows;     // character labels
    std::vector<ClassFunction> values;  // values[row][column]
};

CharacterTable character_table(GreenEngine& engine, int n);

Int char_degree(u64 q, const ClassIndex& idx);
Int deg_ndr(const Int& q, int n, int d, int r);

// chi^{f -> lambda} on a regular semisimple class, without induction.
CyclotomicSum primary_on_rss(const FieldCtx& ctx, const PolyQ& f, const Partition& lambda, const ClassIndex& target);

struct OrthogonalityReport {
    bool ok = true;
    std::string witness;  // first offending pair
};

// Row and column orthogonality, decided exactly.
OrthogonalityReport check_orthogonality(const CharacterTable& table);
// Throws OrthogonalityFailure naming the offending pair.
void verify_orthogonality(const CharacterTable& table);

}  // namespace glnq
