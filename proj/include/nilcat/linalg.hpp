// linalg.hpp -- exact dense linear algebra over a field context: reduced
// row-echelon forms with transform records, kernels, canonical subspaces,
// deterministic enumeration of k-dimensional subspaces of F^n, and GL(n,q)
// order/generators.
//
// A Subspace is always stored by its RREF basis with zero rows dropped; two
// subspaces are equal iff their bases are entrywise equal.  That canonical
// form is the currency every other module trades in.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "nilcat/field.hpp"

namespace nilcat {

template <class F> using Vec = std::vector<typename F::Elem>;

template <class F> struct Mat {
    int rows = 0, cols = 0;
    std::vector<typename F::Elem> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * std::size_t(c)) {}

    typename F::Elem& at(int i, int j) { return a[std::size_t(i) * cols + j]; }
    const typename F::Elem& at(int i, int j) const { return a[std::size_t(i) * cols + j]; }

    static Mat identity(const F& f, int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    Vec<F> row(int i) const {
        return Vec<F>(a.begin() + std::size_t(i) * cols, a.begin() + std::size_t(i + 1) * cols);
    }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

template <class F> Mat<F> transpose(const Mat<F>& m) {
    Mat<F> t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

template <class F> Mat<F> mat_mul(const F& f, const Mat<F>& x, const Mat<F>& y) {
    if (x.cols != y.rows) throw DomainError("mat_mul: dimension mismatch");
    Mat<F> r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const auto& xv = x.at(i, k);
            if (f.is_zero(xv)) continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) = f.add(r.at(i, j), f.mul(xv, y.at(k, j)));
        }
    return r;
}

template <class F> Vec<F> mat_vec(const F& f, const Mat<F>& m, const Vec<F>& x) {
    if (int(x.size()) != m.cols) throw DomainError("mat_vec: dimension mismatch");
    Vec<F> r(std::size_t(m.rows), f.zero());
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (!f.is_zero(m.at(i, j))) r[std::size_t(i)] = f.add(r[std::size_t(i)], f.mul(m.at(i, j), x[std::size_t(j)]));
    return r;
}

// x^T * M (row vector times matrix)
template <class F> Vec<F> vec_mat(const F& f, const Vec<F>& x, const Mat<F>& m) {
    if (int(x.size()) != m.rows) throw DomainError("vec_mat: dimension mismatch");
    Vec<F> r(std::size_t(m.cols), f.zero());
    for (int i = 0; i < m.rows; ++i)
        if (!f.is_zero(x[std::size_t(i)]))
            for (int j = 0; j < m.cols; ++j)
                r[std::size_t(j)] = f.add(r[std::size_t(j)], f.mul(x[std::size_t(i)], m.at(i, j)));
    return r;
}

template <class F> struct RrefResult {
    Mat<F> r;                 // the reduced row-echelon form
    Mat<F> t;                 // invertible transform with t * m = r
    std::vector<int> pivots;  // pivot column per pivot row
    int rank = 0;
};

template <class F> RrefResult<F> rref(const F& f, Mat<F> m) {
    RrefResult<F> res;
    res.t = Mat<F>::identity(f, m.rows);
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (!f.is_zero(m.at(i, c))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
            for (int j = 0; j < res.t.cols; ++j) std::swap(res.t.at(piv, j), res.t.at(r, j));
        }
        const auto s = f.inv(m.at(r, c));
        for (int j = 0; j < m.cols; ++j) m.at(r, j) = f.mul(s, m.at(r, j));
        for (int j = 0; j < res.t.cols; ++j) res.t.at(r, j) = f.mul(s, res.t.at(r, j));
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || f.is_zero(m.at(i, c))) continue;
            const auto v = m.at(i, c);
            for (int j = 0; j < m.cols; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(v, m.at(r, j)));
            for (int j = 0; j < res.t.cols; ++j) res.t.at(i, j) = f.sub(res.t.at(i, j), f.mul(v, res.t.at(r, j)));
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    res.r = std::move(m);
    return res;
}

template <class F> int mat_rank(const F& f, const Mat<F>& m) { return rref(f, m).rank; }

template <class F> typename F::Elem mat_det(const F& f, Mat<F> m) {
    if (m.rows != m.cols) throw DomainError("det: square matrix required");
    auto det = f.one();
    for (int c = 0; c < m.cols; ++c) {
        int piv = -1;
        for (int i = c; i < m.rows; ++i)
            if (!f.is_zero(m.at(i, c))) { piv = i; break; }
        if (piv < 0) return f.zero();
        if (piv != c) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(c, j));
            det = f.neg(det);
        }
        det = f.mul(det, m.at(c, c));
        const auto s = f.inv(m.at(c, c));
        for (int i = c + 1; i < m.rows; ++i) {
            if (f.is_zero(m.at(i, c))) continue;
            const auto v = f.mul(s, m.at(i, c));
            for (int j = c; j < m.cols; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(v, m.at(c, j)));
        }
    }
    return det;
}

template <class F> std::optional<Mat<F>> mat_inverse(const F& f, const Mat<F>& m) {
    if (m.rows != m.cols) throw DomainError("inverse: square matrix required");
    auto res = rref(f, m);
    if (res.rank != m.rows) return std::nullopt;
    return res.t;
}

// canonical subspace of F^n: RREF basis, no zero rows
template <class F> struct Subspace {
    int ambient = 0;
    Mat<F> basis;             // dim x ambient, RREF
    std::vector<int> pivots;

    int dim() const { return basis.rows; }
    bool operator==(const Subspace& o) const { return ambient == o.ambient && basis == o.basis; }
};

template <class F> Subspace<F> span(const F& f, const Mat<F>& rows) {
    auto res = rref(f, rows);
    Subspace<F> s;
    s.ambient = rows.cols;
    s.pivots = res.pivots;
    s.basis = Mat<F>(res.rank, rows.cols);
    for (int i = 0; i < res.rank; ++i)
        for (int j = 0; j < rows.cols; ++j) s.basis.at(i, j) = res.r.at(i, j);
    return s;
}

template <class F> Subspace<F> span_vectors(const F& f, const std::vector<Vec<F>>& vs, int ambient) {
    Mat<F> m(int(vs.size()), ambient);
    for (int i = 0; i < int(vs.size()); ++i)
        for (int j = 0; j < ambient; ++j) m.at(i, j) = vs[std::size_t(i)][std::size_t(j)];
    return span(f, m);
}

template <class F> Subspace<F> zero_subspace(int ambient) {
    Subspace<F> s;
    s.ambient = ambient;
    s.basis = Mat<F>(0, ambient);
    return s;
}

template <class F> Subspace<F> full_space(const F& f, int ambient) {
    return span(f, Mat<F>::identity(f, ambient));
}

template <class F> bool contains(const F& f, const Subspace<F>& u, Vec<F> v) {
    if (int(v.size()) != u.ambient) throw DomainError("contains: ambient mismatch");
    for (int i = 0; i < u.dim(); ++i) {
        const auto c = v[std::size_t(u.pivots[std::size_t(i)])];
        if (f.is_zero(c)) continue;
        for (int j = 0; j < u.ambient; ++j) v[std::size_t(j)] = f.sub(v[std::size_t(j)], f.mul(c, u.basis.at(i, j)));
    }
    for (auto& x : v)
        if (!f.is_zero(x)) return false;
    return true;
}

// coordinates of v in the basis of u, if v lies in u
template <class F> std::optional<Vec<F>> coords_in(const F& f, const Subspace<F>& u, Vec<F> v) {
    Vec<F> c(std::size_t(u.dim()), f.zero());
    for (int i = 0; i < u.dim(); ++i) {
        const auto x = v[std::size_t(u.pivots[std::size_t(i)])];
        if (f.is_zero(x)) continue;
        c[std::size_t(i)] = x;
        for (int j = 0; j < u.ambient; ++j) v[std::size_t(j)] = f.sub(v[std::size_t(j)], f.mul(x, u.basis.at(i, j)));
    }
    for (auto& x : v)
        if (!f.is_zero(x)) return std::nullopt;
    return c;
}

template <class F> bool subspace_leq(const F& f, const Subspace<F>& u, const Subspace<F>& v) {
    for (int i = 0; i < u.dim(); ++i)
        if (!contains(f, v, u.basis.row(i))) return false;
    return true;
}

template <class F> Subspace<F> sum(const F& f, const Subspace<F>& u, const Subspace<F>& v) {
    if (u.ambient != v.ambient) throw DomainError("sum: ambient mismatch");
    Mat<F> m(u.dim() + v.dim(), u.ambient);
    for (int i = 0; i < u.dim(); ++i)
        for (int j = 0; j < u.ambient; ++j) m.at(i, j) = u.basis.at(i, j);
    for (int i = 0; i < v.dim(); ++i)
        for (int j = 0; j < u.ambient; ++j) m.at(u.dim() + i, j) = v.basis.at(i, j);
    return span(f, m);
}

// right null space {x : m x = 0}
template <class F> Subspace<F> kernel(const F& f, const Mat<F>& m) {
    auto res = rref(f, m);
    std::vector<bool> is_piv(std::size_t(m.cols), false);
    for (int p : res.pivots) is_piv[std::size_t(p)] = true;
    std::vector<Vec<F>> basis;
    for (int j = 0; j < m.cols; ++j) {
        if (is_piv[std::size_t(j)]) continue;
        Vec<F> x(std::size_t(m.cols), f.zero());
        x[std::size_t(j)] = f.one();
        for (int i = 0; i < res.rank; ++i)
            x[std::size_t(res.pivots[std::size_t(i)])] = f.neg(res.r.at(i, j));
        basis.push_back(std::move(x));
    }
    if (basis.empty()) return zero_subspace<F>(m.cols);
    return span_vectors(f, basis, m.cols);
}

// column space of m, as a subspace of F^rows
template <class F> Subspace<F> image(const F& f, const Mat<F>& m) { return span(f, transpose(m)); }

template <class F> Subspace<F> intersect(const F& f, const Subspace<F>& u, const Subspace<F>& v) {
    if (u.ambient != v.ambient) throw DomainError("intersect: ambient mismatch");
    if (u.dim() == 0 || v.dim() == 0) return zero_subspace<F>(u.ambient);
    // solve a^T U = b^T V: kernel of [U^T | -V^T]
    Mat<F> m(u.ambient, u.dim() + v.dim());
    for (int j = 0; j < u.ambient; ++j) {
        for (int i = 0; i < u.dim(); ++i) m.at(j, i) = u.basis.at(i, j);
        for (int i = 0; i < v.dim(); ++i) m.at(j, u.dim() + i) = f.neg(v.basis.at(i, j));
    }
    auto k = kernel(f, m);
    std::vector<Vec<F>> vecs;
    for (int i = 0; i < k.dim(); ++i) {
        Vec<F> x(std::size_t(u.ambient), f.zero());
        for (int t = 0; t < u.dim(); ++t) {
            const auto c = k.basis.at(i, t);
            if (f.is_zero(c)) continue;
            for (int j = 0; j < u.ambient; ++j) x[std::size_t(j)] = f.add(x[std::size_t(j)], f.mul(c, u.basis.at(t, j)));
        }
        vecs.push_back(std::move(x));
    }
    if (vecs.empty()) return zero_subspace<F>(u.ambient);
    return span_vectors(f, vecs, u.ambient);
}

// any solution of m x = b
template <class F> std::optional<Vec<F>> solve(const F& f, const Mat<F>& m, const Vec<F>& b) {
    if (int(b.size()) != m.rows) throw DomainError("solve: dimension mismatch");
    Mat<F> aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[std::size_t(i)];
    }
    auto res = rref(f, aug);
    for (int p : res.pivots)
        if (p == m.cols) return std::nullopt;
    Vec<F> x(std::size_t(m.cols), f.zero());
    for (int i = 0; i < res.rank; ++i) x[std::size_t(res.pivots[std::size_t(i)])] = res.r.at(i, m.cols);
    return x;
}

// lexicographic order on canonical bases (same shape assumed)
template <class F> bool subspace_lex_less(const Subspace<F>& a, const Subspace<F>& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.basis.a < b.basis.a;
}

inline std::uint64_t gauss_binomial(unsigned q, int n, int k, std::uint64_t budget = ~0ull) {
    if (k < 0 || k > n) return 0;
    mpz_class num = 1, den = 1, qz = q;
    for (int i = 0; i < k; ++i) {
        mpz_class qn, qk;
        mpz_pow_ui(qn.get_mpz_t(), qz.get_mpz_t(), unsigned(n - i));
        mpz_pow_ui(qk.get_mpz_t(), qz.get_mpz_t(), unsigned(i + 1));
        num *= qn - 1;
        den *= qk - 1;
    }
    mpz_class c = num / den;
    if (c > mpz_class(budget == ~0ull ? std::uint64_t(1) << 62 : budget))
        throw BudgetError("gauss_binomial: count exceeds budget");
    return c.get_ui();
}

// all k-dimensional subspaces of GF(q)^n, sorted lexicographically on the
// flattened canonical basis; Schubert-cell (pivot set) enumeration
inline std::vector<Subspace<GF>> enumerate_subspaces(const GF& f, int n, int k,
                                                     std::uint64_t budget = 10000000ull) {
    if (k < 0 || k > n) return {};
    const std::uint64_t total = gauss_binomial(f.q(), n, k, budget);
    if (k == 0) return {zero_subspace<GF>(n)};
    std::vector<Subspace<GF>> out;
    out.reserve(total);
    std::vector<int> piv(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) piv[std::size_t(i)] = i;
    auto next_comb = [&]() {
        int i = k - 1;
        while (i >= 0 && piv[std::size_t(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++piv[std::size_t(i)];
        for (int j = i + 1; j < k; ++j) piv[std::size_t(j)] = piv[std::size_t(j - 1)] + 1;
        return true;
    };
    do {
        std::vector<bool> is_piv(std::size_t(n), false);
        for (int p : piv) is_piv[std::size_t(p)] = true;
        std::vector<std::pair<int, int>> free_slots;
        for (int i = 0; i < k; ++i)
            for (int j = piv[std::size_t(i)] + 1; j < n; ++j)
                if (!is_piv[std::size_t(j)]) free_slots.emplace_back(i, j);
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < free_slots.size(); ++i) count *= f.q();
        for (std::uint64_t code = 0; code < count; ++code) {
            Subspace<GF> s;
            s.ambient = n;
            s.pivots = piv;
            s.basis = Mat<GF>(k, n);
            for (int i = 0; i < k; ++i) s.basis.at(i, piv[std::size_t(i)]) = 1;
            std::uint64_t c = code;
            for (auto [i, j] : free_slots) {
                s.basis.at(i, j) = GF::Elem(c % f.q());
                c /= f.q();
            }
            out.push_back(std::move(s));
        }
    } while (next_comb());
    std::sort(out.begin(), out.end(),
              [](const Subspace<GF>& a, const Subspace<GF>& b) { return subspace_lex_less(a, b); });
    if (out.size() != total) throw Error("enumerate_subspaces: count mismatch");
    return out;
}

inline std::uint64_t gl_order(const GF& f, int n) {
    mpz_class ord = 1, qz = f.q(), qn;
    mpz_pow_ui(qn.get_mpz_t(), qz.get_mpz_t(), unsigned(n));
    for (int i = 0; i < n; ++i) {
        mpz_class qi;
        mpz_pow_ui(qi.get_mpz_t(), qz.get_mpz_t(), unsigned(i));
        ord *= qn - qi;
    }
    if (!ord.fits_ulong_p()) throw BudgetError("gl_order: exceeds 64 bits");
    return ord.get_ui();
}

inline GF::Elem primitive_element(const GF& f) {
    for (unsigned g = 2; g < f.q(); ++g) {
        unsigned ord = 1;
        GF::Elem x = GF::Elem(g);
        while (x != 1) { x = f.mul(x, GF::Elem(g)); ++ord; }
        if (ord == f.q() - 1) return GF::Elem(g);
    }
    return 1; // q = 2
}

// Generating set of GL(n,q): diag(z,1,..,1) for a primitive z, the cyclic
// coordinate shift, and the transvection I + E12.  Transvections plus the
// shift generate SL(n,q); the diagonal matrix supplies the determinants.
// Generation is cross-checked by transitivity on the projective space.
inline std::vector<Mat<GF>> gl_generators(const GF& f, int n) {
    std::vector<Mat<GF>> gens;
    if (f.q() > 2 || n == 1) {
        auto d = Mat<GF>::identity(f, n);
        d.at(0, 0) = primitive_element(f);
        gens.push_back(d);
    }
    if (n >= 2) {
        Mat<GF> c(n, n);
        for (int i = 0; i < n; ++i) c.at((i + 1) % n, i) = 1;
        gens.push_back(c);
        auto t = Mat<GF>::identity(f, n);
        t.at(0, 1) = 1;
        gens.push_back(t);
    }
    // orbit of the e1-line must be the whole projective space
    std::uint64_t lines = 1, qp = 1;
    for (int i = 0; i < n; ++i) qp *= f.q();
    lines = (qp - 1) / (f.q() - 1);
    std::vector<Vec<GF>> frontier;
    Vec<GF> e1(std::size_t(n), 0);
    e1[0] = 1;
    std::vector<std::vector<GF::Elem>> seen_keys;
    auto norm_line = [&](Vec<GF> v) {
        for (auto& x : v)
            if (x != 0) {
                auto s = f.inv(x);
                for (auto& y : v) y = f.mul(s, y);
                break;
            }
        return v;
    };
    std::vector<Vec<GF>> seen{norm_line(e1)};
    std::sort(seen.begin(), seen.end());
    frontier.push_back(e1);
    while (!frontier.empty()) {
        auto v = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens) {
            auto w = norm_line(mat_vec(f, g, v));
            auto it = std::lower_bound(seen.begin(), seen.end(), w);
            if (it == seen.end() || *it != w) {
                seen.insert(it, w);
                frontier.push_back(w);
            }
        }
    }
    if (seen.size() != lines) throw Error("gl_generators: projective orbit check failed");
    return gens;
}

// packed hash key of a canonical subspace basis (4 bits per entry, at most
// 16 entries; enough for every orbit space in this project)
inline std::uint64_t pack_subspace_key(const Subspace<GF>& s) {
    const auto& a = s.basis.a;
    if (a.size() > 16) throw Error("pack_subspace_key: too many entries");
    std::uint64_t key = std::uint64_t(s.dim()) << 60;
    for (std::size_t i = 0; i < a.size(); ++i) key |= std::uint64_t(a[i] & 0xF) << (4 * i);
    return key;
}

// test helpers: deterministic random exact matrices
template <class Rng> Vec<GF> random_vec(const GF& f, int n, Rng& rng) {
    Vec<GF> v(static_cast<std::size_t>(n), 0);
    for (auto& x : v) x = GF::Elem(rng() % f.q());
    return v;
}

template <class Rng> Mat<GF> random_mat(const GF& f, int r, int c, Rng& rng) {
    Mat<GF> m(r, c);
    for (auto& x : m.a) x = GF::Elem(rng() % f.q());
    return m;
}

template <class Rng> Mat<GF> random_invertible(const GF& f, int n, Rng& rng) {
    for (;;) {
        auto m = random_mat(f, n, n, rng);
        if (!f.is_zero(mat_det(f, m))) return m;
    }
}

} // namespace nilcat
