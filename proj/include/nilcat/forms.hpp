// forms.hpp -- bilinear and quadratic form toolkit: alternating canonical
// forms, symplectic bases, Gram determinants, the Arf invariant, the Klein
// quadratic form on wedge^2(F^4), the analogous form on H^2 of the
// 4-dimensional algebra with one bracket, and the brute-force verification of
// the GL(4,F)-orbit classification of 2-subspaces of wedge^2(F^4).
//
// Quadratic forms are stored as upper-triangular coefficient matrices; never
// as half a symmetric matrix, which would be wrong in characteristic 2.

#pragma once

#include <unordered_map>

#include "nilcat/liealg.hpp"

namespace nilcat {

enum class FormKind : std::uint8_t { alternating, symmetric, general };

template <class F> struct BilinearForm {
    int n = 0;
    Mat<F> gram;
    FormKind kind = FormKind::general;

    typename F::Elem eval(const F& f, const Vec<F>& u, const Vec<F>& v) const {
        return vec_dot(f, u, mat_vec(f, gram, v));
    }

    static typename F::Elem vec_dot(const F& f, const Vec<F>& a, const Vec<F>& b) {
        auto s = f.zero();
        for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
        return s;
    }
};

template <class F> BilinearForm<F> alternating_form(const F& f, Mat<F> gram) {
    for (int i = 0; i < gram.rows; ++i) {
        if (!f.is_zero(gram.at(i, i))) throw DomainError("alternating_form: nonzero diagonal");
        for (int j = 0; j < gram.cols; ++j)
            if (!f.eq(gram.at(i, j), f.neg(gram.at(j, i))))
                throw DomainError("alternating_form: not skew");
    }
    return {gram.rows, std::move(gram), FormKind::alternating};
}

template <class F> struct QuadraticForm {
    int n = 0;
    Mat<F> upper; // Q(x) = sum_{i<=j} upper(i,j) x_i x_j

    typename F::Elem eval(const F& f, const Vec<F>& x) const {
        auto s = f.zero();
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                if (!f.is_zero(upper.at(i, j)))
                    s = f.add(s, f.mul(upper.at(i, j), f.mul(x[std::size_t(i)], x[std::size_t(j)])));
        return s;
    }
};

// f_Q(u,v) = Q(u+v) - Q(u) - Q(v); Gram matrix U + U^T (alternating in char 2)
template <class F> BilinearForm<F> associated_bilinear(const F& f, const QuadraticForm<F>& q) {
    Mat<F> g(q.n, q.n);
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j) g.at(i, j) = f.add(q.upper.at(i, j), q.upper.at(j, i));
    FormKind kind = f.characteristic() == 2 ? FormKind::alternating : FormKind::symmetric;
    return {q.n, std::move(g), kind};
}

template <class F> struct SymplecticDecomposition {
    // pairs (e_i, f_i) with f(e_i, f_j) = delta_{ij}; leftover spans the radical part
    std::vector<Vec<F>> e, fvecs;
    std::vector<Vec<F>> leftover;
};

namespace forms_detail {

// greedy symplectic reduction of the span of `vecs` under the form `g`:
// least unprocessed vector, then its least non-orthogonal partner, then
// orthogonalize the rest against the pair
template <class F>
SymplecticDecomposition<F> symplectic_reduce(const F& f, const Mat<F>& g, std::vector<Vec<F>> vecs) {
    SymplecticDecomposition<F> out;
    auto pairing = [&](const Vec<F>& a, const Vec<F>& b) {
        return BilinearForm<F>::vec_dot(f, a, mat_vec(f, g, b));
    };
    while (!vecs.empty()) {
        Vec<F> u = vecs.front();
        vecs.erase(vecs.begin());
        int partner = -1;
        for (std::size_t t = 0; t < vecs.size(); ++t)
            if (!f.is_zero(pairing(u, vecs[t]))) { partner = int(t); break; }
        if (partner < 0) {
            out.leftover.push_back(u);
            continue;
        }
        Vec<F> v = vecs[std::size_t(partner)];
        vecs.erase(vecs.begin() + partner);
        const auto c = f.inv(pairing(u, v));
        for (auto& x : v) x = f.mul(c, x);
        for (auto& w : vecs) {
            const auto a = pairing(u, w), b = pairing(v, w);
            // w <- w - a v + b u purges both pairings
            for (std::size_t t = 0; t < w.size(); ++t)
                w[t] = f.add(f.sub(w[t], f.mul(a, v[t])), f.mul(b, u[t]));
        }
        for (auto& w : out.leftover) { // keep earlier leftovers orthogonal too
            const auto a = pairing(u, w), b = pairing(v, w);
            for (std::size_t t = 0; t < w.size(); ++t)
                w[t] = f.add(f.sub(w[t], f.mul(a, v[t])), f.mul(b, u[t]));
        }
        out.e.push_back(std::move(u));
        out.fvecs.push_back(std::move(v));
    }
    return out;
}

} // namespace forms_detail

template <class F> struct AlternatingCanonical {
    int rank = 0;
    Mat<F> p; // P^T G P = Gram of D12 + D34 + ... exactly
};

template <class F> AlternatingCanonical<F> alternating_canonical(const F& f, const BilinearForm<F>& form) {
    if (form.kind != FormKind::alternating) throw DomainError("alternating_canonical: wrong form kind");
    std::vector<Vec<F>> basis;
    for (int i = 0; i < form.n; ++i) {
        Vec<F> e(std::size_t(form.n), f.zero());
        e[std::size_t(i)] = f.one();
        basis.push_back(std::move(e));
    }
    auto dec = forms_detail::symplectic_reduce(f, form.gram, std::move(basis));
    AlternatingCanonical<F> out;
    out.rank = 2 * int(dec.e.size());
    out.p = Mat<F>(form.n, form.n);
    int col = 0;
    auto put = [&](const Vec<F>& v) {
        for (int t = 0; t < form.n; ++t) out.p.at(t, col) = v[std::size_t(t)];
        ++col;
    };
    for (std::size_t i = 0; i < dec.e.size(); ++i) { put(dec.e[i]); put(dec.fvecs[i]); }
    for (const auto& v : dec.leftover) put(v);
    if (f.is_zero(mat_det(f, out.p))) throw Error("alternating_canonical: transform is singular");
    return out;
}

// symplectic basis of the restriction of the alternating form to w; throws
// when the restriction is singular
template <class F>
SymplecticDecomposition<F> symplectic_basis(const F& f, const BilinearForm<F>& form, const Subspace<F>& w) {
    if (form.kind != FormKind::alternating)
        throw DomainError("symplectic_basis: alternating form required");
    std::vector<Vec<F>> vecs;
    for (int i = 0; i < w.dim(); ++i) vecs.push_back(w.basis.row(i));
    auto dec = forms_detail::symplectic_reduce(f, form.gram, std::move(vecs));
    if (!dec.leftover.empty()) throw DomainError("symplectic_basis: singular restriction");
    return dec;
}

// determinant of the Gram matrix of the form restricted to the given basis rows
template <class F>
typename F::Elem gram_det(const F& f, const BilinearForm<F>& form, const Mat<F>& basis_rows) {
    if (basis_rows.rows == 0) throw DomainError("gram_det: empty basis");
    Mat<F> g(basis_rows.rows, basis_rows.rows);
    for (int i = 0; i < basis_rows.rows; ++i)
        for (int j = 0; j < basis_rows.rows; ++j)
            g.at(i, j) = form.eval(f, basis_rows.row(i), basis_rows.row(j));
    return mat_det(f, g);
}

// Arf invariant of Q restricted to w, reduced to the canonical coset
// representative in {0, omega}
inline GF::Elem arf(const GF& f, const QuadraticForm<GF>& q, const Subspace<GF>& w) {
    if (f.characteristic() != 2) throw DomainError("arf: characteristic 2 required");
    auto bil = associated_bilinear(f, q);
    auto dec = symplectic_basis(f, bil, w);
    auto val = f.zero();
    for (std::size_t i = 0; i < dec.e.size(); ++i)
        val = f.add(val, f.mul(q.eval(f, dec.e[i]), q.eval(f, dec.fvecs[i])));
    for (auto x : psi_image(f))
        if (x == val) return 0;
    return omega(f);
}

// ---------------------------------------------------------------------------
// the Klein quadric on wedge^2(F^4)
// ---------------------------------------------------------------------------

// coordinates ordered (D12, D13, D14, D23, D24, D34); Q = af - be + cd
template <class F> QuadraticForm<F> klein_quadratic(const F& f) {
    QuadraticForm<F> q{6, Mat<F>(6, 6)};
    q.upper.at(0, 5) = f.one();
    q.upper.at(1, 4) = f.neg(f.one());
    q.upper.at(2, 3) = f.one();
    return q;
}

template <class F> typename F::Elem klein_form(const F& f, const Vec<F>& theta) {
    if (theta.size() != 6) throw DomainError("klein_form: expected 6 coordinates");
    return klein_quadratic(f).eval(f, theta);
}

// Q = a1 a4 - a2 a3 on the coordinates (D13, D14, D23, D24) of H^2(L_{4,2})
template <class F> QuadraticForm<F> l42_quadratic(const F& f) {
    QuadraticForm<F> q{4, Mat<F>(4, 4)};
    q.upper.at(0, 3) = f.one();
    q.upper.at(1, 2) = f.neg(f.one());
    return q;
}

template <class F> typename F::Elem l42_form(const F& f, const Vec<F>& v) {
    if (v.size() != 4) throw DomainError("l42_form: expected 4 coordinates");
    return l42_quadratic(f).eval(f, v);
}

// induced action of a in GL(4) on wedge^2(F^4): column (i,j) holds the
// coordinates of (a e_i) wedge (a e_j)
template <class F> Mat<F> wedge_action(const F& f, const Mat<F>& a) {
    if (a.rows != 4 || a.cols != 4) throw DomainError("wedge_action: 4x4 matrix required");
    Mat<F> w(6, 6);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                for (int l = k + 1; l < 4; ++l)
                    w.at(pair_index(4, k, l), pair_index(4, i, j)) =
                        f.sub(f.mul(a.at(k, i), a.at(l, j)), f.mul(a.at(k, j), a.at(l, i)));
    return w;
}

// the published complete irredundant representative set P of GL(4,F)-orbits
// on 2-subspaces of wedge^2(F^4)
inline std::vector<Subspace<GF>> klein_representatives(const GF& f) {
    auto mk = [&](std::vector<std::vector<int>> rows, GF::Elem extra = 0, int extra_pos = -1) {
        Mat<GF> m(int(rows.size()), 6);
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < 6; ++j) m.at(i, j) = f.from_int(rows[std::size_t(i)][std::size_t(j)]);
        if (extra_pos >= 0) m.at(1, extra_pos) = f.add(m.at(1, extra_pos), extra);
        return span(f, m);
    };
    std::vector<Subspace<GF>> reps;
    reps.push_back(mk({{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}})); // <v12, v13>
    if (f.characteristic() != 2) {
        for (auto eps : square_class_transversal(f))
            reps.push_back(mk({{1, 0, 0, 0, 0, 1}, {0, 1, 0, 0, 0, 0}}, eps, 4)); // v13 + eps v24
    } else {
        reps.push_back(mk({{1, 0, 0, 0, 0, 1}, {0, 1, 0, 0, 0, 1}}));
        reps.push_back(mk({{1, 0, 0, 0, 0, 1}, {0, 1, 0, 0, 0, 1}}, omega(f), 4));
        for (auto eps : star_plus_transversal(f))
            reps.push_back(mk({{1, 0, 0, 0, 0, 1}, {0, 1, 0, 0, 0, 0}}, eps, 4));
    }
    return reps;
}

struct KleinOrbit {
    Subspace<GF> rep;   // lexicographically least member
    std::uint64_t size = 0;
    int matched = -1;   // index into klein_representatives
};

struct KleinReport {
    std::uint64_t total_subspaces = 0;
    std::vector<KleinOrbit> orbits;
    std::vector<Subspace<GF>> reps;
    bool ok = false;
};

// brute-force oracle: enumerate every 2-subspace of wedge^2(F^4), close under
// the GL(4,q) generators, and match the orbits bijectively against P
inline KleinReport verify_klein(const GF& f, std::uint64_t budget = 10000000ull) {
    KleinReport rep;
    auto subs = enumerate_subspaces(f, 6, 2, budget);
    rep.total_subspaces = subs.size();
    std::unordered_map<std::uint64_t, std::uint32_t> index;
    index.reserve(subs.size() * 2);
    for (std::uint32_t i = 0; i < subs.size(); ++i) index.emplace(pack_subspace_key(subs[i]), i);
    std::vector<Mat<GF>> wedges;
    for (const auto& g : gl_generators(f, 4)) wedges.push_back(wedge_action(f, g));
    std::vector<std::uint32_t> orbit_of(subs.size(), UINT32_MAX);
    std::vector<std::uint32_t> stack;
    for (std::uint32_t i = 0; i < subs.size(); ++i) {
        if (orbit_of[i] != UINT32_MAX) continue;
        const auto oid = std::uint32_t(rep.orbits.size());
        rep.orbits.push_back({subs[i], 0, -1});
        orbit_of[i] = oid;
        stack.assign(1, i);
        std::uint64_t size = 0;
        while (!stack.empty()) {
            auto cur = stack.back();
            stack.pop_back();
            ++size;
            for (const auto& w : wedges) {
                Mat<GF> moved(2, 6);
                for (int r = 0; r < 2; ++r) {
                    auto img = mat_vec(f, w, subs[cur].basis.row(r));
                    for (int cidx = 0; cidx < 6; ++cidx) moved.at(r, cidx) = img[std::size_t(cidx)];
                }
                auto key = pack_subspace_key(span(f, moved));
                auto it = index.find(key);
                if (it == index.end()) throw Error("verify_klein: image not in enumeration");
                if (orbit_of[it->second] == UINT32_MAX) {
                    orbit_of[it->second] = oid;
                    stack.push_back(it->second);
                }
            }
        }
        rep.orbits[oid].size = size;
    }
    rep.reps = klein_representatives(f);
    std::vector<int> hit(rep.orbits.size(), 0);
    bool ok = true;
    for (std::size_t r = 0; r < rep.reps.size(); ++r) {
        auto it = index.find(pack_subspace_key(rep.reps[r]));
        if (it == index.end()) { ok = false; continue; }
        auto oid = orbit_of[it->second];
        if (rep.orbits[oid].matched >= 0) ok = false; // two reps in one orbit
        rep.orbits[oid].matched = int(r);
        ++hit[oid];
    }
    for (auto h : hit) ok = ok && h == 1;
    std::uint64_t covered = 0;
    for (const auto& o : rep.orbits) covered += o.size;
    ok = ok && covered == rep.total_subspaces;
    rep.ok = ok;
    return rep;
}

} // namespace nilcat
