// liealg.hpp -- Lie algebras given by sparse antisymmetric structure constant
// tables: bracket evaluation, Jacobi verification, characteristic subalgebras,
// the lower central series, central quotients, abelian-summand splitting,
// basis changes, and the isomorphism-invariant fingerprint.
//
// Only pairs i < j are stored and the diagonal is implicitly zero, so the
// alternating convention holds in characteristic 2 as well.

#pragma once

#include <optional>
#include <utility>

#include "nilcat/linalg.hpp"

namespace nilcat {

inline int pair_count(int n) { return n * (n - 1) / 2; }

// lexicographic index of (i,j), 0 <= i < j < n
inline int pair_index(int n, int i, int j) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline std::vector<std::pair<int, int>> pair_list(int n) {
    std::vector<std::pair<int, int>> ps;
    ps.reserve(std::size_t(pair_count(n)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) ps.emplace_back(i, j);
    return ps;
}

struct JacobiError : Error {
    int i, j, k; // 1-based triple
    JacobiError(int i_, int j_, int k_)
        : Error("Jacobi identity fails on triple (" + std::to_string(i_) + "," +
                std::to_string(j_) + "," + std::to_string(k_) + ")"),
          i(i_), j(j_), k(k_) {}
};

template <class F> struct JacobiViolation {
    int i, j, k; // 0-based, i < j < k
    Vec<F> residual;
};

template <class F> class LieAlgebra {
public:
    F field;
    int n = 0;
    // c[pair_index(i,j)*n + t] = coefficient of x_t in [x_i, x_j]
    std::vector<typename F::Elem> c;

    LieAlgebra() = default;
    LieAlgebra(F f, int dim)
        : field(std::move(f)), n(dim),
          c(std::size_t(pair_count(dim)) * std::size_t(dim), field.zero()) {}

    typename F::Elem coef(int i, int j, int t) const { // i < j
        return c[std::size_t(pair_index(n, i, j)) * n + t];
    }
    void set_coef(int i, int j, int t, typename F::Elem v) {
        c[std::size_t(pair_index(n, i, j)) * n + t] = std::move(v);
    }

    // [x_i, x_j] for arbitrary order of i, j
    Vec<F> bracket_basis(int i, int j) const {
        Vec<F> r(std::size_t(n), field.zero());
        if (i == j) return r;
        const bool flip = i > j;
        if (flip) std::swap(i, j);
        const std::size_t off = std::size_t(pair_index(n, i, j)) * n;
        for (int t = 0; t < n; ++t) r[std::size_t(t)] = flip ? field.neg(c[off + t]) : c[off + t];
        return r;
    }

    bool operator==(const LieAlgebra& o) const { return n == o.n && c == o.c; }
};

template <class F> Vec<F> bracket(const LieAlgebra<F>& L, const Vec<F>& u, const Vec<F>& v) {
    const auto& f = L.field;
    if (int(u.size()) != L.n || int(v.size()) != L.n) throw DomainError("bracket: dimension mismatch");
    Vec<F> r(std::size_t(L.n), f.zero());
    for (int i = 0; i < L.n; ++i)
        for (int j = i + 1; j < L.n; ++j) {
            const auto w = f.sub(f.mul(u[std::size_t(i)], v[std::size_t(j)]),
                                 f.mul(u[std::size_t(j)], v[std::size_t(i)]));
            if (f.is_zero(w)) continue;
            const std::size_t off = std::size_t(pair_index(L.n, i, j)) * L.n;
            for (int t = 0; t < L.n; ++t)
                if (!f.is_zero(L.c[off + t])) r[std::size_t(t)] = f.add(r[std::size_t(t)], f.mul(w, L.c[off + t]));
        }
    return r;
}

template <class F>
std::optional<JacobiViolation<F>> jacobi_violation(const LieAlgebra<F>& L) {
    const auto& f = L.field;
    for (int i = 0; i < L.n; ++i)
        for (int j = i + 1; j < L.n; ++j)
            for (int k = j + 1; k < L.n; ++k) {
                Vec<F> s(std::size_t(L.n), f.zero());
                auto acc = [&](int a, int b, int e) {
                    auto ab = L.bracket_basis(a, b);
                    Vec<F> eb(std::size_t(L.n), f.zero());
                    eb[std::size_t(e)] = f.one();
                    auto r = bracket(L, ab, eb);
                    for (int t = 0; t < L.n; ++t) s[std::size_t(t)] = f.add(s[std::size_t(t)], r[std::size_t(t)]);
                };
                acc(i, j, k);
                acc(k, i, j);
                acc(j, k, i);
                for (int t = 0; t < L.n; ++t)
                    if (!f.is_zero(s[std::size_t(t)])) return JacobiViolation<F>{i, j, k, s};
            }
    return std::nullopt;
}

struct TableEntry {
    int i, j, k; // 1-based, i < j
    long long c;
};

// build from a sparse 1-based table and verify the Jacobi identity
template <class F>
LieAlgebra<F> lie_from_table(const F& f, int n, const std::vector<TableEntry>& entries) {
    LieAlgebra<F> L(f, n);
    for (const auto& e : entries) {
        if (!(1 <= e.i && e.i < e.j && e.j <= n && 1 <= e.k && e.k <= n))
            throw DomainError("lie_from_table: bad index triple");
        L.set_coef(e.i - 1, e.j - 1, e.k - 1, f.add(L.coef(e.i - 1, e.j - 1, e.k - 1), f.from_int(e.c)));
    }
    if (auto v = jacobi_violation(L)) throw JacobiError(v->i + 1, v->j + 1, v->k + 1);
    return L;
}

template <class F>
LieAlgebra<F> lie_from_table_elems(const F& f, int n,
                                   const std::vector<std::tuple<int, int, int, typename F::Elem>>& entries) {
    LieAlgebra<F> L(f, n);
    for (const auto& [i, j, k, v] : entries) {
        if (!(1 <= i && i < j && j <= n && 1 <= k && k <= n))
            throw DomainError("lie_from_table: bad index triple");
        L.set_coef(i - 1, j - 1, k - 1, f.add(L.coef(i - 1, j - 1, k - 1), v));
    }
    if (auto v = jacobi_violation(L)) throw JacobiError(v->i + 1, v->j + 1, v->k + 1);
    return L;
}

// matrix of ad(v): w -> [v, w]
template <class F> Mat<F> ad_matrix(const LieAlgebra<F>& L, const Vec<F>& v) {
    Mat<F> m(L.n, L.n);
    for (int j = 0; j < L.n; ++j) {
        Vec<F> ej(std::size_t(L.n), L.field.zero());
        ej[std::size_t(j)] = L.field.one();
        auto col = bracket(L, v, ej);
        for (int t = 0; t < L.n; ++t) m.at(t, j) = col[std::size_t(t)];
    }
    return m;
}

template <class F> Subspace<F> derived(const LieAlgebra<F>& L) {
    std::vector<Vec<F>> vs;
    for (int i = 0; i < L.n; ++i)
        for (int j = i + 1; j < L.n; ++j) vs.push_back(L.bracket_basis(i, j));
    if (vs.empty()) return zero_subspace<F>(L.n);
    return span_vectors(L.field, vs, L.n);
}

template <class F> Subspace<F> center(const LieAlgebra<F>& L) {
    // kernel of the stacked adjoint maps of the basis vectors
    Mat<F> stacked(L.n * L.n, L.n);
    for (int i = 0; i < L.n; ++i) {
        Vec<F> ei(std::size_t(L.n), L.field.zero());
        ei[std::size_t(i)] = L.field.one();
        auto m = ad_matrix(L, ei);
        for (int r = 0; r < L.n; ++r)
            for (int cidx = 0; cidx < L.n; ++cidx) stacked.at(i * L.n + r, cidx) = m.at(r, cidx);
    }
    return kernel(L.field, stacked);
}

template <class F> Subspace<F> centralizer(const LieAlgebra<F>& L, const Subspace<F>& u) {
    if (u.ambient != L.n) throw DomainError("centralizer: ambient mismatch");
    if (u.dim() == 0) return full_space(L.field, L.n);
    Mat<F> stacked(u.dim() * L.n, L.n);
    for (int i = 0; i < u.dim(); ++i) {
        auto m = ad_matrix(L, u.basis.row(i));
        for (int r = 0; r < L.n; ++r)
            for (int cidx = 0; cidx < L.n; ++cidx) stacked.at(i * L.n + r, cidx) = m.at(r, cidx);
    }
    return kernel(L.field, stacked);
}

// L^1 = L, L^{i+1} = [L, L^i]; returned until the first repeat (0 for nilpotent)
template <class F> std::vector<Subspace<F>> lower_central_series(const LieAlgebra<F>& L) {
    std::vector<Subspace<F>> series{full_space(L.field, L.n)};
    for (;;) {
        const auto& prev = series.back();
        std::vector<Vec<F>> vs;
        for (int i = 0; i < L.n; ++i) {
            Vec<F> ei(std::size_t(L.n), L.field.zero());
            ei[std::size_t(i)] = L.field.one();
            for (int r = 0; r < prev.dim(); ++r) vs.push_back(bracket(L, ei, prev.basis.row(r)));
        }
        auto next = vs.empty() ? zero_subspace<F>(L.n) : span_vectors(L.field, vs, L.n);
        if (next == series.back()) break;
        series.push_back(std::move(next));
        if (series.back().dim() == 0) break;
    }
    return series;
}

template <class F> std::optional<int> nilpotency_class(const LieAlgebra<F>& L) {
    auto s = lower_central_series(L);
    if (s.back().dim() != 0) return std::nullopt;
    return int(s.size()) - 1; // L^{class+1} = 0 is the last term
}

template <class F> bool is_abelian(const LieAlgebra<F>& L) { return derived(L).dim() == 0; }

// change of basis: column i of p is the new basis vector y_i in old coordinates
template <class F> LieAlgebra<F> change_basis(const LieAlgebra<F>& L, const Mat<F>& p) {
    if (p.rows != L.n || p.cols != L.n) throw DomainError("change_basis: size mismatch");
    auto pinv = mat_inverse(L.field, p);
    if (!pinv) throw DomainError("change_basis: singular matrix");
    LieAlgebra<F> M(L.field, L.n);
    for (int i = 0; i < L.n; ++i)
        for (int j = i + 1; j < L.n; ++j) {
            Vec<F> yi(std::size_t(L.n), L.field.zero()), yj(std::size_t(L.n), L.field.zero());
            for (int t = 0; t < L.n; ++t) { yi[std::size_t(t)] = p.at(t, i); yj[std::size_t(t)] = p.at(t, j); }
            auto w = mat_vec(L.field, *pinv, bracket(L, yi, yj));
            for (int t = 0; t < L.n; ++t) M.set_coef(i, j, t, w[std::size_t(t)]);
        }
    if (auto v = jacobi_violation(M)) throw JacobiError(v->i + 1, v->j + 1, v->k + 1);
    return M;
}

// does p define an isomorphism L1 -> L2, i.e. p [x,y]_{L1} = [p x, p y]_{L2}
template <class F>
bool is_isomorphism(const LieAlgebra<F>& a, const LieAlgebra<F>& b, const Mat<F>& p) {
    if (a.n != b.n || p.rows != a.n || p.cols != a.n) return false;
    if (a.field.is_zero(mat_det(a.field, p))) return false;
    const auto& f = a.field;
    for (int i = 0; i < a.n; ++i)
        for (int j = i + 1; j < a.n; ++j) {
            Vec<F> pi(std::size_t(a.n), f.zero()), pj(std::size_t(a.n), f.zero());
            for (int t = 0; t < a.n; ++t) { pi[std::size_t(t)] = p.at(t, i); pj[std::size_t(t)] = p.at(t, j); }
            auto lhs = mat_vec(f, p, a.bracket_basis(i, j));
            auto rhs = bracket(b, pi, pj);
            if (lhs != rhs) return false;
        }
    return true;
}

template <class F> struct QuotientResult {
    LieAlgebra<F> q;
    Mat<F> proj;                 // (n - dim I) x n projection matrix
    std::vector<int> comp_cols;  // coordinates lifted by the section
};

// quotient by a central subspace; the section sends quotient basis vector a to
// e_{comp_cols[a]}
template <class F> QuotientResult<F> quotient(const LieAlgebra<F>& L, const Subspace<F>& ideal) {
    const auto& f = L.field;
    if (!subspace_leq(f, ideal, center(L))) throw DomainError("quotient: ideal is not central");
    const int m = L.n - ideal.dim();
    std::vector<bool> is_piv(std::size_t(L.n), false);
    for (int p : ideal.pivots) is_piv[std::size_t(p)] = true;
    QuotientResult<F> res;
    for (int j = 0; j < L.n; ++j)
        if (!is_piv[std::size_t(j)]) res.comp_cols.push_back(j);
    res.proj = Mat<F>(m, L.n);
    for (int t = 0; t < L.n; ++t) {
        Vec<F> e(std::size_t(L.n), f.zero());
        e[std::size_t(t)] = f.one();
        // reduce modulo the ideal, then read complement coordinates
        for (int i = 0; i < ideal.dim(); ++i) {
            const auto x = e[std::size_t(ideal.pivots[std::size_t(i)])];
            if (f.is_zero(x)) continue;
            for (int j = 0; j < L.n; ++j) e[std::size_t(j)] = f.sub(e[std::size_t(j)], f.mul(x, ideal.basis.at(i, j)));
        }
        for (int a = 0; a < m; ++a) res.proj.at(a, t) = e[std::size_t(res.comp_cols[std::size_t(a)])];
    }
    res.q = LieAlgebra<F>(f, m);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            auto w = mat_vec(f, res.proj,
                             L.bracket_basis(res.comp_cols[std::size_t(a)], res.comp_cols[std::size_t(b)]));
            for (int t = 0; t < m; ++t) res.q.set_coef(a, b, t, w[std::size_t(t)]);
        }
    if (auto v = jacobi_violation(res.q)) throw JacobiError(v->i + 1, v->j + 1, v->k + 1);
    // the projection must be a Lie homomorphism on basis pairs
    for (int i = 0; i < L.n; ++i)
        for (int j = i + 1; j < L.n; ++j) {
            auto lhs = mat_vec(f, res.proj, L.bracket_basis(i, j));
            Vec<F> pi(std::size_t(m), f.zero()), pj(std::size_t(m), f.zero());
            for (int t = 0; t < m; ++t) { pi[std::size_t(t)] = res.proj.at(t, i); pj[std::size_t(t)] = res.proj.at(t, j); }
            if (lhs != bracket(res.q, pi, pj)) throw Error("quotient: projection is not a homomorphism");
        }
    return res;
}

// restriction of the bracket to a subalgebra spanned by the rows of w
template <class F> LieAlgebra<F> subalgebra_on(const LieAlgebra<F>& L, const Subspace<F>& w) {
    const auto& f = L.field;
    LieAlgebra<F> S(f, w.dim());
    for (int a = 0; a < w.dim(); ++a)
        for (int b = a + 1; b < w.dim(); ++b) {
            auto v = bracket(L, w.basis.row(a), w.basis.row(b));
            auto coords = coords_in(f, w, v);
            if (!coords) throw DomainError("subalgebra_on: rows do not span a subalgebra");
            for (int t = 0; t < w.dim(); ++t) S.set_coef(a, b, t, (*coords)[std::size_t(t)]);
        }
    return S;
}

template <class F> struct SplitResult {
    LieAlgebra<F> core;  // C(core) <= core' (or the zero algebra)
    int summands = 0;
    Mat<F> basis;        // n x n; change_basis(K, basis) = core + F^summands
};

// strip central basis directions outside the derived subalgebra, one at a
// time, greedily taking the enumeration-least central basis row outside K'
template <class F> SplitResult<F> split_abelian_summand(const LieAlgebra<F>& K) {
    const auto& f = K.field;
    SplitResult<F> res;
    res.core = K;
    res.basis = Mat<F>::identity(f, K.n);
    for (;;) {
        const auto& cur = res.core;
        auto cen = center(cur);
        auto der = derived(cur);
        int zi = -1;
        for (int i = 0; i < cen.dim(); ++i)
            if (!contains(f, der, cen.basis.row(i))) { zi = i; break; }
        if (zi < 0) break; // C(core) <= core'
        auto z = cen.basis.row(zi);
        const int d = cur.n;
        // complement ideal: extend a basis of K' by coordinate vectors,
        // avoiding the span of the current rows plus z
        Mat<F> rows(der.dim(), d);
        for (int i = 0; i < der.dim(); ++i)
            for (int j = 0; j < d; ++j) rows.at(i, j) = der.basis.at(i, j);
        auto cur_span = der;
        auto with_z = [&](const Subspace<F>& s) {
            Mat<F> zrow(1, d);
            for (int j = 0; j < d; ++j) zrow.at(0, j) = z[std::size_t(j)];
            return sum(f, s, span(f, zrow));
        };
        std::vector<Vec<F>> wrows;
        for (int i = 0; i < der.dim(); ++i) wrows.push_back(der.basis.row(i));
        for (int j = 0; j < d && int(wrows.size()) < d - 1; ++j) {
            Vec<F> ej(std::size_t(d), f.zero());
            ej[std::size_t(j)] = f.one();
            if (!contains(f, with_z(cur_span), ej)) {
                wrows.push_back(ej);
                cur_span = sum(f, cur_span, span_vectors(f, {ej}, d));
            }
        }
        if (int(wrows.size()) != d - 1) throw Error("split: no complement found");
        // new basis: complement rows as columns, then z
        Mat<F> q(d, d);
        for (int a = 0; a < d - 1; ++a)
            for (int t = 0; t < d; ++t) q.at(t, a) = wrows[std::size_t(a)][std::size_t(t)];
        for (int t = 0; t < d; ++t) q.at(t, d - 1) = z[std::size_t(t)];
        auto changed = change_basis(cur, q);
        // update the global witness: new core columns, new summand, old summands
        const int n = K.n;
        Mat<F> nb(n, n);
        for (int a = 0; a < d; ++a) {
            // column a of (old core part) * q
            for (int t = 0; t < n; ++t) {
                auto s = f.zero();
                for (int r = 0; r < d; ++r) s = f.add(s, f.mul(res.basis.at(t, r), q.at(r, a)));
                nb.at(t, a) = s;
            }
        }
        for (int a = d; a < n; ++a)
            for (int t = 0; t < n; ++t) nb.at(t, a) = res.basis.at(t, a);
        res.basis = std::move(nb);
        // the last coordinate is now a central summand; drop it
        LieAlgebra<F> smaller(f, d - 1);
        for (int a = 0; a < d - 1; ++a)
            for (int b = a + 1; b < d - 1; ++b)
                for (int t = 0; t < d - 1; ++t) smaller.set_coef(a, b, t, changed.coef(a, b, t));
        // brackets may not leak into the stripped direction
        for (int a = 0; a < d - 1; ++a)
            for (int b = a + 1; b < d - 1; ++b)
                if (!f.is_zero(changed.coef(a, b, d - 1))) throw Error("split: complement is not an ideal");
        res.core = std::move(smaller);
        ++res.summands;
    }
    return res;
}

// L + abelian F^m on trailing coordinates
template <class F> LieAlgebra<F> direct_sum_abelian(const LieAlgebra<F>& L, int m) {
    LieAlgebra<F> r(L.field, L.n + m);
    for (int i = 0; i < L.n; ++i)
        for (int j = i + 1; j < L.n; ++j)
            for (int t = 0; t < L.n; ++t) r.set_coef(i, j, t, L.coef(i, j, t));
    return r;
}

struct Fingerprint {
    std::vector<int> lcs_dims;
    int dim_center = 0;
    int dim_derived = 0;
    bool center_eq_l3 = false;
    int dim_centralizer_derived = 0;
    bool derived_abelian = true;

    bool operator==(const Fingerprint&) const = default;
    std::string str() const {
        std::string s = "lcs=(";
        for (std::size_t i = 0; i < lcs_dims.size(); ++i)
            s += (i ? "," : "") + std::to_string(lcs_dims[i]);
        s += ") dimC=" + std::to_string(dim_center) + " dimL'=" + std::to_string(dim_derived);
        s += center_eq_l3 ? " C=L3" : " C!=L3";
        s += " dimCent(L')=" + std::to_string(dim_centralizer_derived);
        s += derived_abelian ? " L'abelian" : " L'nonabelian";
        return s;
    }
};

template <class F> Fingerprint fingerprint(const LieAlgebra<F>& L) {
    Fingerprint fp;
    auto series = lower_central_series(L);
    for (const auto& s : series) fp.lcs_dims.push_back(s.dim());
    if (fp.lcs_dims.back() != 0) fp.lcs_dims.push_back(-1); // not nilpotent marker
    auto cen = center(L);
    auto der = derived(L);
    fp.dim_center = cen.dim();
    fp.dim_derived = der.dim();
    auto l3 = series.size() > 2 ? series[2] : zero_subspace<F>(L.n);
    fp.center_eq_l3 = (cen == l3);
    fp.dim_centralizer_derived = centralizer(L, der).dim();
    fp.derived_abelian = is_abelian(subalgebra_on(L, der));
    return fp;
}

} // namespace nilcat
