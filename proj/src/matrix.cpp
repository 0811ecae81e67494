#include "glnq/matrix.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "glnq/error.hpp"

namespace glnq {

MatrixQ::MatrixQ(int dim, std::vector<int> entries) : n(dim), a(std::move(entries)) {
    require(static_cast<int>(a.size()) == dim * dim, ErrorKind::SizeMismatch, "matrix needs n^2 entries");
}

MatrixQ MatrixQ::identity(int dim) {
    MatrixQ m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

u64 MatrixQ::code(u64 q) const {
    u64 c = 0;
    for (std::size_t i = a.size(); i-- > 0;) c = c * q + static_cast<u64>(a[i]);
    return c;
}

MatrixQ MatrixQ::from_code(u64 code, int dim, u64 q) {
    MatrixQ m(dim);
    for (auto& x : m.a) {
        x = static_cast<int>(code % q);
        code /= q;
    }
    return m;
}

MatrixQ mat_mul(const Fq& F, const MatrixQ& x, const MatrixQ& y) {
    require(x.n == y.n, ErrorKind::SizeMismatch, "matrix sizes differ");
    const int n = x.n;
    MatrixQ out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const int xik = x.at(i, k);
            if (!xik) continue;
            for (int j = 0; j < n; ++j) {
                const int ykj = y.at(k, j);
                if (ykj) out.at(i, j) = F.add(out.at(i, j), F.mul(xik, ykj));
            }
        }
    return out;
}

MatrixQ mat_add(const Fq& F, const MatrixQ& x, const MatrixQ& y) {
    require(x.n == y.n, ErrorKind::SizeMismatch, "matrix sizes differ");
    MatrixQ out(x.n);
    for (std::size_t i = 0; i < x.a.size(); ++i) out.a[i] = F.add(x.a[i], y.a[i]);
    return out;
}

MatrixQ mat_scale(const Fq& F, const MatrixQ& x, int c) {
    MatrixQ out(x.n);
    for (std::size_t i = 0; i < x.a.size(); ++i) out.a[i] = F.mul(x.a[i], c);
    return out;
}

namespace {

// Row reduction in place; returns rank and the determinant of the square matrix.
std::pair<int, int> eliminate(const Fq& F, MatrixQ& x) {
    const int n = x.n;
    int rank = 0, det = 1;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (x.at(r, col)) {
                piv = r;
                break;
            }
        if (piv < 0) {
            det = 0;
            continue;
        }
        if (piv != rank) {
            for (int j = 0; j < n; ++j) std::swap(x.at(piv, j), x.at(rank, j));
            det = F.neg(det);
        }
        const int pv = x.at(rank, col);
        det = F.mul(det, pv);
        const int inv = F.inv(pv);
        for (int r = rank + 1; r < n; ++r) {
            const int f = x.at(r, col);
            if (!f) continue;
            const int u = F.mul(f, inv);
            for (int j = col; j < n; ++j) x.at(r, j) = F.sub(x.at(r, j), F.mul(u, x.at(rank, j)));
        }
        ++rank;
    }
    if (rank < n) det = 0;
    return {rank, det};
}

}  // namespace

int mat_rank(const Fq& F, MatrixQ x) { return eliminate(F, x).first; }

int mat_det(const Fq& F, MatrixQ x) { return eliminate(F, x).second; }

MatrixQ mat_inverse(const Fq& F, const MatrixQ& x) {
    const int n = x.n;
    MatrixQ a = x, b = MatrixQ::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a.at(r, col)) {
                piv = r;
                break;
            }
        if (piv < 0) fail(ErrorKind::Singular, "matrix is not invertible");
        for (int j = 0; j < n; ++j) {
            std::swap(a.at(piv, j), a.at(col, j));
            std::swap(b.at(piv, j), b.at(col, j));
        }
        const int inv = F.inv(a.at(col, col));
        for (int j = 0; j < n; ++j) {
            a.at(col, j) = F.mul(a.at(col, j), inv);
            b.at(col, j) = F.mul(b.at(col, j), inv);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || !a.at(r, col)) continue;
            const int u = a.at(r, col);
            for (int j = 0; j < n; ++j) {
                a.at(r, j) = F.sub(a.at(r, j), F.mul(u, a.at(col, j)));
                b.at(r, j) = F.sub(b.at(r, j), F.mul(u, b.at(col, j)));
            }
        }
    }
    return b;
}

MatrixQ mat_poly_eval(const Fq& F, const PolyQ& f, const MatrixQ& x) {
    MatrixQ acc(x.n);
    for (std::size_t i = f.coeffs.size(); i-- > 0;) {
        acc = mat_mul(F, acc, x);
        for (int k = 0; k < x.n; ++k) acc.at(k, k) = F.add(acc.at(k, k), f.coeffs[i]);
    }
    return acc;
}

MatrixQ block_diagonal(const std::vector<MatrixQ>& blocks) {
    int n = 0;
    for (const auto& b : blocks) n += b.n;
    MatrixQ out(n);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.n; ++i)
            for (int j = 0; j < b.n; ++j) out.at(off + i, off + j) = b.at(i, j);
        off += b.n;
    }
    return out;
}

MatrixQ submatrix(const MatrixQ& x, int row, int col, int size) {
    require(row >= 0 && col >= 0 && row + size <= x.n && col + size <= x.n, ErrorKind::SizeMismatch,
            "submatrix out of range");
    MatrixQ out(size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) out.at(i, j) = x.at(row + i, col + j);
    return out;
}

PolyQ char_poly(const Fq& F, const MatrixQ& x) {
    const int n = x.n;
    MatrixQ h = x;
    // similarity transform to upper Hessenberg form
    for (int j = 0; j + 2 < n; ++j) {
        int piv = -1;
        for (int i = j + 1; i < n; ++i)
            if (h.at(i, j)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != j + 1) {
            for (int k = 0; k < n; ++k) std::swap(h.at(piv, k), h.at(j + 1, k));
            for (int k = 0; k < n; ++k) std::swap(h.at(k, piv), h.at(k, j + 1));
        }
        const int inv = F.inv(h.at(j + 1, j));
        for (int i = j + 2; i < n; ++i) {
            const int u = F.mul(h.at(i, j), inv);
            if (!u) continue;
            for (int k = 0; k < n; ++k) h.at(i, k) = F.sub(h.at(i, k), F.mul(u, h.at(j + 1, k)));
            for (int k = 0; k < n; ++k) h.at(k, j + 1) = F.add(h.at(k, j + 1), F.mul(u, h.at(k, i)));
        }
    }
    std::vector<PolyQ> p(static_cast<std::size_t>(n + 1));
    p[0] = PolyQ::one();
    for (int m = 1; m <= n; ++m) {
        PolyQ lin({F.neg(h.at(m - 1, m - 1)), 1});
        PolyQ cur = poly_mul(F, lin, p[static_cast<std::size_t>(m - 1)]);
        int t = 1;
        for (int i = 1; i < m; ++i) {
            t = F.mul(t, h.at(m - i, m - i - 1));
            if (!t) break;
            const int c = F.mul(t, h.at(m - i - 1, m - 1));
            if (c) cur = poly_sub(F, cur, poly_scale(F, p[static_cast<std::size_t>(m - i - 1)], c));
        }
        p[static_cast<std::size_t>(m)] = cur;
    }
    return p[static_cast<std::size_t>(n)];
}

MatrixQ companion_matrix(const Fq& F, const PolyQ& h) {
    require(h.is_monic(), ErrorKind::NotMonic, "companion matrix needs a monic polynomial");
    const int m = h.degree();
    MatrixQ c(m);
    for (int i = 1; i < m; ++i) c.at(i, i - 1) = 1;
    for (int i = 0; i < m; ++i) c.at(i, m - 1) = F.neg(h[static_cast<std::size_t>(i)]);
    return c;
}

int ClassIndex::norm() const {
    int s = 0;
    for (const auto& [f, lam] : parts) s += f.degree() * lam.size();
    return s;
}

bool ClassIndex::operator<(const ClassIndex& other) const {
    const std::size_t k = std::min(parts.size(), other.parts.size());
    for (std::size_t i = 0; i < k; ++i) {
        const auto& [f, a] = parts[i];
        const auto& [g, b] = other.parts[i];
        if (f != g) return poly_less(f, g);
        if (a != b) return a < b;
    }
    return parts.size() < other.parts.size();
}

void ClassIndex::normalize() {
    std::erase_if(parts, [](const auto& pr) { return pr.second.empty(); });
    std::sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
}

Partition ClassIndex::cycle_type() const {
    std::vector<int> out;
    for (const auto& [f, lam] : parts)
        for (int i = 0; i < lam.size(); ++i) out.push_back(f.degree());
    return Partition(out);
}

bool ClassIndex::regular_semisimple() const {
    return std::all_of(parts.begin(), parts.end(), [](const auto& pr) { return pr.second == Partition{1}; });
}

std::string ClassIndex::to_string(const Fq& F) const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ", ";
        os << poly_to_string(F, parts[i].first) << ':' << parts[i].second.to_string();
    }
    os << '}';
    return os.str();
}

ClassIndex primary_index(const PolyQ& f, const Partition& lambda) {
    ClassIndex idx;
    idx.parts.emplace_back(f, lambda);
    return idx;
}

ClassIndex class_index(const Fq& F, const MatrixQ& g) {
    require(mat_det(F, g) != 0, ErrorKind::Singular, "class index needs an invertible matrix");
    const int n = g.n;
    ClassIndex idx;
    for (const auto& [f, mult] : factor_poly(F, char_poly(F, g))) {
        const int d = f.degree();
        const MatrixQ a = mat_poly_eval(F, f, g);
        MatrixQ pw = a;
        std::vector<int> conj;
        int prev = 0;
        while (prev < d * mult) {
            const int ker = n - mat_rank(F, pw);
            conj.push_back((ker - prev) / d);
            prev = ker;
            pw = mat_mul(F, pw, a);
        }
        idx.parts.emplace_back(f, Partition(conj).conjugate());
    }
    idx.normalize();
    return idx;
}

Partition cycle_type(const Fq& F, const MatrixQ& g) {
    require(mat_det(F, g) != 0, ErrorKind::Singular, "cycle type needs an invertible matrix");
    std::vector<int> out;
    for (const auto& [f, mult] : factor_poly(F, char_poly(F, g)))
        for (int i = 0; i < mult; ++i) out.push_back(f.degree());
    return Partition(out);
}

bool is_regular_semisimple(const Fq& F, const MatrixQ& g) { return class_index(F, g).regular_semisimple(); }

bool is_regular_elliptic(const Fq& F, const MatrixQ& g) {
    require(mat_det(F, g) != 0, ErrorKind::Singular, "needs an invertible matrix");
    return is_irreducible(F, char_poly(F, g));
}

MatrixQ rcf_from_index(const Fq& F, const ClassIndex& idx, int n) {
    require(idx.norm() == n, ErrorKind::NormMismatch, "index norm differs from n");
    std::vector<MatrixQ> blocks;
    for (const auto& [f, lam] : idx.parts)
        for (int part : lam.parts()) blocks.push_back(companion_matrix(F, poly_pow(F, f, static_cast<unsigned>(part))));
    std::stable_sort(blocks.begin(), blocks.end(), [](const MatrixQ& a, const MatrixQ& b) { return a.n > b.n; });
    return block_diagonal(blocks);
}

Int gamma_n(u64 q, int n) {
    const Int Q(static_cast<unsigned long>(q));
    const Int qn = pow_int(Q, static_cast<unsigned>(n));
    Int out = 1;
    for (int i = 0; i < n; ++i) out *= qn - pow_int(Q, static_cast<unsigned>(i));
    return out;
}

Int class_size(u64 q, const ClassIndex& idx, int n) {
    require(idx.norm() == n, ErrorKind::NormMismatch, "index norm differs from n");
    Int denom = 1;
    for (const auto& [f, lam] : idx.parts) {
        const Int Q = pow_int(Int(static_cast<unsigned long>(q)), static_cast<unsigned>(f.degree()));
        const auto s = lam.conjugate().partial_sums();
        for (const auto& [i, m] : lam.multiplicities()) {
            const int si = s[static_cast<std::size_t>(i - 1)];
            for (int j = 1; j <= m; ++j)
                denom *= pow_int(Q, static_cast<unsigned>(si)) - pow_int(Q, static_cast<unsigned>(si - j));
        }
    }
    Int out = gamma_n(q, n);
    require(mpz_divisible_p(out.get_mpz_t(), denom.get_mpz_t()) != 0, ErrorKind::InexactDivision,
            "class size is not integral");
    return out / denom;
}

Int ct_box_size(u64 q, const Partition& mu) {
    Int out = gamma_n(q, mu.size());
    Int denom = 1;
    const Int Q(static_cast<unsigned long>(q));
    for (int part : mu.parts()) denom *= pow_int(Q, static_cast<unsigned>(part)) - 1;
    out /= denom;
    for (const auto& [i, m] : mu.multiplicities()) {
        const Int avail = count_irreducibles(q, i);
        if (avail < m) return 0;
        out *= binomial(avail.get_si(), m);
    }
    return out;
}

std::vector<ClassIndex> enumerate_class_indices(const Fq& F, int n) {
    std::vector<PolyQ> polys;
    for (int d = 1; d <= n; ++d)
        for (auto& f : enumerate_irreducibles(F, d)) polys.push_back(f);
    std::sort(polys.begin(), polys.end(), poly_less);

    std::vector<ClassIndex> out;
    ClassIndex cur;
    auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        if (i == polys.size()) return;
        const int d = polys[i].degree();
        self(self, i + 1, remaining);
        for (int s = 1; s * d <= remaining; ++s)
            for (const auto& lam : partitions_of(s)) {
                cur.parts.emplace_back(polys[i], lam);
                self(self, i + 1, remaining - s * d);
                cur.parts.pop_back();
            }
    };
    rec(rec, 0, n);
    std::sort(out.begin(), out.end());
    return out;
}

Int ct_size(const Fq& F, const Partition& mu) {
    Int total = 0;
    for (const auto& idx : enumerate_class_indices(F, mu.size()))
        if (idx.cycle_type() == mu) total += class_size(F.q(), idx, mu.size());
    return total;
}

void enumerate_group(const Fq& F, int n, u64 budget, const std::function<void(const MatrixQ&)>& visit) {
    const u64 q = F.q();
    const Int order = gamma_n(q, n);
    require(order <= Int(static_cast<unsigned long>(budget)), ErrorKind::GroupTooLarge,
            "|GL_" + std::to_string(n) + "(F_" + std::to_string(q) + ")| = " + order.get_str() + " exceeds budget " +
                std::to_string(budget));
    if (n == 0) {
        visit(MatrixQ(0));
        return;
    }
    const u64 V = pow_u64(q, static_cast<unsigned>(n));
    std::vector<std::vector<int>> vec(V);
    for (u64 c = 0; c < V; ++c) {
        vec[c].resize(static_cast<std::size_t>(n));
        u64 x = c;
        for (int i = 0; i < n; ++i) {
            vec[c][static_cast<std::size_t>(i)] = static_cast<int>(x % q);
            x /= q;
        }
    }
    auto encode = [&](const std::vector<int>& v) {
        u64 c = 0;
        for (int i = n; i-- > 0;) c = c * q + static_cast<u64>(v[static_cast<std::size_t>(i)]);
        return c;
    };

    MatrixQ m(n);
    std::vector<u64> span{0};
    auto rec = [&](auto&& self, int row) -> void {
        if (row == n) {
            visit(m);
            return;
        }
        std::vector<char> in_span(V, 0);
        for (u64 s : span) in_span[s] = 1;
        for (u64 v = 1; v < V; ++v) {
            if (in_span[v]) continue;
            for (int j = 0; j < n; ++j) m.at(row, j) = vec[v][static_cast<std::size_t>(j)];
            const std::vector<u64> saved = span;
            std::vector<u64> next;
            next.reserve(span.size() * q);
            std::vector<int> w(static_cast<std::size_t>(n));
            for (u64 s : span)
                for (u64 c = 0; c < q; ++c) {
                    for (int j = 0; j < n; ++j)
                        w[static_cast<std::size_t>(j)] =
                            F.add(vec[s][static_cast<std::size_t>(j)], F.mul(static_cast<int>(c), vec[v][static_cast<std::size_t>(j)]));
                    next.push_back(encode(w));
                }
            span = std::move(next);
            self(self, row + 1);
            span = saved;
        }
    };
    rec(rec, 0);
}

TinyGroup::TinyGroup(const Fq& F, int n, u64 budget) : F_(F), n_(n) {
    enumerate_group(F_, n, budget, [&](const MatrixQ& g) { elements_.push_back(g); });

    std::map<ClassIndex, std::size_t> found;
    std::vector<ClassIndex> order;
    std::vector<std::size_t> raw(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        ClassIndex idx = class_index(F_, elements_[i]);
        auto [it, inserted] = found.try_emplace(idx, order.size());
        if (inserted) {
            order.push_back(idx);
            reps_.push_back(i);
        }
        raw[i] = it->second;
    }
    // sort classes by index order, keeping first-found representatives
    std::vector<std::size_t> perm(order.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return order[a] < order[b]; });
    std::vector<std::size_t> rank(order.size());
    std::vector<std::size_t> reps(order.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        rank[perm[i]] = i;
        classes_.push_back(order[perm[i]]);
        reps[i] = reps_[perm[i]];
    }
    reps_ = std::move(reps);
    sizes_.assign(classes_.size(), 0);
    element_class_.resize(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        element_class_[i] = rank[raw[i]];
        ++sizes_[element_class_[i]];
    }

    const u64 q = F_.q();
    const Int codes = pow_int(Int(static_cast<unsigned long>(q)), static_cast<unsigned>(n * n));
    if (codes <= Int(1UL << 24)) {
        code_to_element_.assign(codes.get_ui(), std::numeric_limits<std::uint32_t>::max());
        for (std::size_t i = 0; i < elements_.size(); ++i)
            code_to_element_[elements_[i].code(q)] = static_cast<std::uint32_t>(i);
    } else {
        for (std::size_t i = 0; i < elements_.size(); ++i)
            sparse_code_to_element_.emplace(elements_[i].code(q), static_cast<std::uint32_t>(i));
    }
}

std::size_t TinyGroup::element_index(const MatrixQ& g) const {
    require(g.n == n_, ErrorKind::SizeMismatch, "matrix size differs from the group");
    const u64 c = g.code(F_.q());
    if (!code_to_element_.empty()) {
        const auto i = code_to_element_[c];
        require(i != std::numeric_limits<std::uint32_t>::max(), ErrorKind::Singular, "matrix is not invertible");
        return i;
    }
    auto it = sparse_code_to_element_.find(c);
    require(it != sparse_code_to_element_.end(), ErrorKind::Singular, "matrix is not invertible");
    return it->second;
}

std::size_t TinyGroup::class_of(const MatrixQ& g) const { return element_class_[element_index(g)]; }

std::size_t TinyGroup::find_class(const ClassIndex& idx) const {
    auto it = std::lower_bound(classes_.begin(), classes_.end(), idx);
    require(it != classes_.end() && *it == idx, ErrorKind::InvalidInput, "no class with index " + idx.to_string(F_));
    return static_cast<std::size_t>(it - classes_.begin());
}

std::size_t TinyGroup::identity_class() const { return class_of(MatrixQ::identity(n_)); }

}  // namespace glnq
