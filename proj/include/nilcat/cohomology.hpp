// cohomology.hpp -- second cohomology machinery: the cocycle space Z^2(L,F)
// and coboundary space B^2(L,F) in the Delta_{i,j} coordinate basis, a chosen
// complement representing H^2, radicals, allowable subspaces, and the Aut(L)
// action on cohomology classes.
//
// Coordinates: an alternating form theta = sum c_{(i,j)} Delta_{i,j} is the
// vector of the c_{(i,j)} over pairs i < j in lexicographic order, length
// n(n-1)/2.  The action convention is (A theta)(x,y) = theta(Ax, Ay), i.e.
// Gram matrix G -> A^T G A; composition therefore reverses: act(AB) applies
// B's map after A's.  Orbits are unaffected.

#pragma once

#include "nilcat/liealg.hpp"

namespace nilcat {

// Gram matrix of the alternating form with the given Delta coordinates
template <class F> Mat<F> gram_from_delta(const F& f, int n, const Vec<F>& delta) {
    Mat<F> g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto& v = delta[std::size_t(pair_index(n, i, j))];
            g.at(i, j) = v;
            g.at(j, i) = f.neg(v);
        }
    return g;
}

template <class F> Vec<F> delta_from_gram(const F& f, int n, const Mat<F>& g) {
    Vec<F> d(std::size_t(pair_count(n)), f.zero());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) d[std::size_t(pair_index(n, i, j))] = g.at(i, j);
    return d;
}

// evaluate theta(u, v) from Delta coordinates
template <class F>
typename F::Elem eval_cocycle(const F& f, int n, const Vec<F>& delta, const Vec<F>& u, const Vec<F>& v) {
    auto s = f.zero();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto& c = delta[std::size_t(pair_index(n, i, j))];
            if (f.is_zero(c)) continue;
            s = f.add(s, f.mul(c, f.sub(f.mul(u[std::size_t(i)], v[std::size_t(j)]),
                                        f.mul(u[std::size_t(j)], v[std::size_t(i)]))));
        }
    return s;
}

// Z^2(L,F): solutions of theta([x1,x2],x3) + theta([x3,x1],x2) + theta([x2,x3],x1) = 0
template <class F> Subspace<F> cocycle_space(const LieAlgebra<F>& L) {
    const auto& f = L.field;
    const int n = L.n, N = pair_count(n);
    std::vector<Vec<F>> rows;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int cc = b + 1; cc < n; ++cc) {
                Vec<F> row(std::size_t(N), f.zero());
                auto add_term = [&](int x, int y, int e) {
                    // theta([x_x, x_y], x_e) as a linear functional of the coordinates
                    auto w = L.bracket_basis(x, y);
                    for (int t = 0; t < n; ++t) {
                        if (f.is_zero(w[std::size_t(t)]) || t == e) continue;
                        const int i = std::min(t, e), j = std::max(t, e);
                        auto coefficient = w[std::size_t(t)];
                        if (t > e) coefficient = f.neg(coefficient);
                        const std::size_t idx = std::size_t(pair_index(n, i, j));
                        row[idx] = f.add(row[idx], coefficient);
                    }
                };
                add_term(a, b, cc);
                add_term(cc, a, b);
                add_term(b, cc, a);
                rows.push_back(std::move(row));
            }
    if (rows.empty()) return full_space(f, N);
    Mat<F> m(int(rows.size()), N);
    for (int i = 0; i < int(rows.size()); ++i)
        for (int j = 0; j < N; ++j) m.at(i, j) = rows[std::size_t(i)][std::size_t(j)];
    return kernel(f, m);
}

// B^2(L,F): spanned by eta_nu(x,y) = nu([x,y]) over a dual basis of L
template <class F> Subspace<F> coboundary_space(const LieAlgebra<F>& L) {
    const auto& f = L.field;
    const int n = L.n, N = pair_count(n);
    Mat<F> rows(n, N);
    for (int t = 0; t < n; ++t)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) rows.at(t, pair_index(n, i, j)) = L.coef(i, j, t);
    return span(f, rows);
}

// radical theta^perp = kernel of the Gram matrix
template <class F> Subspace<F> cocycle_radical(const LieAlgebra<F>& L, const Vec<F>& delta) {
    return kernel(L.field, gram_from_delta(L.field, L.n, delta));
}

template <class F> struct Cohomology {
    LieAlgebra<F> L;
    int n = 0, big_n = 0; // big_n = n(n-1)/2
    Subspace<F> z2, b2;
    Mat<F> hlift;         // dim_h x big_n, chosen representative cocycles
    int dim_h = 0;
    Subspace<F> cen;      // center of L, cached

    // internals for reduction Z -> H coordinates
    Mat<F> zt;                  // transform with zt * [B; H] = RREF
    std::vector<int> zpivots;   // pivots of that RREF

    Vec<F> reduce(const Vec<F>& delta, bool check = true) const {
        const auto& f = L.field;
        if (check && !contains(f, z2, delta)) throw DomainError("reduce: not a cocycle");
        const int dz = z2.dim();
        Vec<F> y(std::size_t(dz), f.zero());
        for (int i = 0; i < dz; ++i) y[std::size_t(i)] = delta[std::size_t(zpivots[std::size_t(i)])];
        auto x = vec_mat(f, y, zt);
        return Vec<F>(x.begin() + b2.dim(), x.end());
    }

    Vec<F> lift(const Vec<F>& h) const {
        const auto& f = L.field;
        if (int(h.size()) != dim_h) throw DomainError("lift: dimension mismatch");
        Vec<F> d(std::size_t(big_n), f.zero());
        for (int i = 0; i < dim_h; ++i) {
            if (f.is_zero(h[std::size_t(i)])) continue;
            for (int j = 0; j < big_n; ++j)
                d[std::size_t(j)] = f.add(d[std::size_t(j)], f.mul(h[std::size_t(i)], hlift.at(i, j)));
        }
        return d;
    }
};

// Choose the complement representing H^2.  When pinned_h (rows of cocycles in
// Delta coordinates) is supplied it is verified and pinned, so that published
// coordinate tuples transfer verbatim; otherwise a greedy RREF complement of
// B^2 inside Z^2 is used.
template <class F>
Cohomology<F> make_cohomology(const LieAlgebra<F>& L, std::optional<Mat<F>> pinned_h = std::nullopt) {
    const auto& f = L.field;
    Cohomology<F> ctx;
    ctx.L = L;
    ctx.n = L.n;
    ctx.big_n = pair_count(L.n);
    ctx.z2 = cocycle_space(L);
    ctx.b2 = coboundary_space(L);
    ctx.cen = center(L);
    if (!subspace_leq(f, ctx.b2, ctx.z2)) throw Error("cohomology: B^2 not contained in Z^2");
    ctx.dim_h = ctx.z2.dim() - ctx.b2.dim();
    if (pinned_h) {
        if (pinned_h->cols != ctx.big_n || pinned_h->rows != ctx.dim_h)
            throw DomainError("cohomology: pinned H basis has wrong shape");
        ctx.hlift = *pinned_h;
    } else {
        ctx.hlift = Mat<F>(ctx.dim_h, ctx.big_n);
        auto s = ctx.b2;
        int got = 0;
        for (int i = 0; i < ctx.z2.dim() && got < ctx.dim_h; ++i) {
            auto row = ctx.z2.basis.row(i);
            if (contains(f, s, row)) continue;
            for (int j = 0; j < ctx.big_n; ++j) ctx.hlift.at(got, j) = row[std::size_t(j)];
            s = sum(f, s, span_vectors(f, {row}, ctx.big_n));
            ++got;
        }
        if (got != ctx.dim_h) throw Error("cohomology: complement construction failed");
    }
    // stack [B; H]; must be a basis of Z
    Mat<F> w(ctx.b2.dim() + ctx.dim_h, ctx.big_n);
    for (int i = 0; i < ctx.b2.dim(); ++i)
        for (int j = 0; j < ctx.big_n; ++j) w.at(i, j) = ctx.b2.basis.at(i, j);
    for (int i = 0; i < ctx.dim_h; ++i) {
        if (!contains(f, ctx.z2, ctx.hlift.row(i)))
            throw DomainError("cohomology: pinned H row is not a cocycle");
        for (int j = 0; j < ctx.big_n; ++j) w.at(ctx.b2.dim() + i, j) = ctx.hlift.at(i, j);
    }
    auto res = rref(f, w);
    if (res.rank != ctx.z2.dim()) throw DomainError("cohomology: H rows dependent modulo B^2");
    ctx.zt = res.t;
    ctx.zpivots = res.pivots;
    return ctx;
}

// (A theta)(x,y) = theta(Ax, Ay) on Delta coordinates
template <class F> Vec<F> act_on_cocycle(const F& f, int n, const Mat<F>& a, const Vec<F>& delta) {
    auto g = gram_from_delta(f, n, delta);
    auto ag = mat_mul(f, transpose(a), mat_mul(f, g, a));
    return delta_from_gram(f, n, ag);
}

// action on H coordinates; a must be an automorphism of ctx.L
template <class F> Vec<F> act_on_h2(const Cohomology<F>& ctx, const Mat<F>& a, const Vec<F>& h) {
    auto moved = act_on_cocycle(ctx.L.field, ctx.n, a, ctx.lift(h));
    return ctx.reduce(moved); // the membership check rejects non-automorphisms
}

template <class F>
Subspace<F> act_on_subspace(const Cohomology<F>& ctx, const Mat<F>& a, const Subspace<F>& u) {
    std::vector<Vec<F>> rows;
    for (int i = 0; i < u.dim(); ++i) rows.push_back(act_on_h2(ctx, a, u.basis.row(i)));
    if (rows.empty()) return zero_subspace<F>(ctx.dim_h);
    return span_vectors(ctx.L.field, rows, ctx.dim_h);
}

// linear map on H coordinates induced by the automorphism a, as a matrix
// applied on the right to row vectors: h' = h * m
template <class F> Mat<F> h2_action_matrix(const Cohomology<F>& ctx, const Mat<F>& a) {
    Mat<F> m(ctx.dim_h, ctx.dim_h);
    for (int i = 0; i < ctx.dim_h; ++i) {
        Vec<F> e(std::size_t(ctx.dim_h), ctx.L.field.zero());
        e[std::size_t(i)] = ctx.L.field.one();
        auto img = act_on_h2(ctx, a, e);
        for (int j = 0; j < ctx.dim_h; ++j) m.at(i, j) = img[std::size_t(j)];
    }
    return m;
}

// a subspace U <= H^2 is allowable if the intersection of the radicals of the
// lifted basis cocycles meets C(L) trivially
template <class F> bool is_allowable(const Cohomology<F>& ctx, const Subspace<F>& u) {
    const auto& f = ctx.L.field;
    auto rad = full_space(f, ctx.n);
    for (int i = 0; i < u.dim(); ++i)
        rad = intersect(f, rad, cocycle_radical(ctx.L, ctx.lift(u.basis.row(i))));
    return intersect(f, rad, ctx.cen).dim() == 0;
}

template <class F> Cohomology<F> make_cohomology(const LieAlgebra<F>& L, const Mat<F>& pinned_h) {
    return make_cohomology(L, std::optional<Mat<F>>(pinned_h));
}

template <class F> std::string delta_to_string(const F& f, int n, const Vec<F>& delta) {
    std::string s;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto& c = delta[std::size_t(pair_index(n, i, j))];
            if (f.is_zero(c)) continue;
            if (!s.empty()) s += " + ";
            if (!f.eq(c, f.one())) s += f.to_string(c) + "*";
            s += "D" + std::to_string(i + 1) + std::to_string(j + 1);
        }
    return s.empty() ? "0" : s;
}

} // namespace nilcat
