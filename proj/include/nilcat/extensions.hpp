// extensions.hpp -- central extensions L_theta, the step-s descendant
// criterion, and the inverse construction extracting a defining cohomology
// subspace from a given algebra through a coordinate section.

#pragma once

#include "nilcat/cohomology.hpp"

namespace nilcat {

template <class F> struct ExtensionSpec {
    LieAlgebra<F> base;
    std::vector<Vec<F>> thetas; // component cocycles in Delta coordinates
    int s() const { return int(thetas.size()); }
};

// L_theta on L + F^s with [x+v, y+w] = [x,y]_L + theta(x,y)
template <class F> LieAlgebra<F> central_extension(const ExtensionSpec<F>& spec) {
    const auto& L = spec.base;
    const auto& f = L.field;
    const int n = L.n, s = spec.s();
    auto z2 = cocycle_space(L);
    for (const auto& th : spec.thetas)
        if (int(th.size()) != pair_count(n) || !contains(f, z2, th))
            throw DomainError("central_extension: component fails the cocycle identity");
    LieAlgebra<F> e(f, n + s);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            for (int t = 0; t < n; ++t) e.set_coef(i, j, t, L.coef(i, j, t));
            for (int t = 0; t < s; ++t)
                e.set_coef(i, j, n + t, spec.thetas[std::size_t(t)][std::size_t(pair_index(n, i, j))]);
        }
    if (auto v = jacobi_violation(e)) throw JacobiError(v->i + 1, v->j + 1, v->k + 1);
    return e;
}

// Theorem criterion: L_theta is a step-s descendant iff the common radical of
// the components meets C(L) trivially and the components span an s-dimensional
// image in H^2(L,F)
template <class F>
bool is_step_s_descendant(const ExtensionSpec<F>& spec, const Cohomology<F>& ctx) {
    const auto& f = spec.base.field;
    auto rad = full_space(f, spec.base.n);
    for (const auto& th : spec.thetas) rad = intersect(f, rad, cocycle_radical(spec.base, th));
    if (intersect(f, rad, ctx.cen).dim() != 0) return false;
    std::vector<Vec<F>> hs;
    for (const auto& th : spec.thetas) hs.push_back(ctx.reduce(th));
    return span_vectors(f, hs, ctx.dim_h).dim() == spec.s();
}

template <class F> bool is_step_s_descendant(const ExtensionSpec<F>& spec) {
    return is_step_s_descendant(spec, make_cohomology(spec.base));
}

template <class F> struct ExtractResult {
    LieAlgebra<F> parent;        // K / C(K) on the complement coordinates
    std::vector<Vec<F>> thetas;  // component cocycles of the section, Delta coords
    Subspace<F> cen;             // C(K)
    std::vector<int> comp_cols;  // section: parent basis vector a -> e_{comp_cols[a]}
    Mat<F> section_basis;        // n x n, columns: complement vectors then center basis
};

// K with C(K) <= K': write K as a central extension of K/C(K) through the
// coordinate section over the non-pivot columns of C(K)
template <class F> ExtractResult<F> extract_cocycle(const LieAlgebra<F>& K) {
    const auto& f = K.field;
    ExtractResult<F> res;
    res.cen = center(K);
    if (!subspace_leq(f, res.cen, derived(K)))
        throw DomainError("extract_cocycle: center not contained in the derived subalgebra");
    const int s = res.cen.dim();
    if (s == 0) throw DomainError("extract_cocycle: trivial center");
    auto q = quotient(K, res.cen);
    res.parent = q.q;
    res.comp_cols = q.comp_cols;
    const int d = res.parent.n;
    res.thetas.assign(std::size_t(s), Vec<F>(std::size_t(pair_count(d)), f.zero()));
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
            // theta(xa, xb) = [sigma xa, sigma xb] - sigma([xa, xb])
            auto w = K.bracket_basis(res.comp_cols[std::size_t(a)], res.comp_cols[std::size_t(b)]);
            auto pb = res.parent.bracket_basis(a, b);
            for (int t = 0; t < d; ++t)
                w[std::size_t(res.comp_cols[std::size_t(t)])] =
                    f.sub(w[std::size_t(res.comp_cols[std::size_t(t)])], pb[std::size_t(t)]);
            auto coords = coords_in(f, res.cen, w);
            if (!coords) throw Error("extract_cocycle: residual bracket not central");
            for (int t = 0; t < s; ++t)
                res.thetas[std::size_t(t)][std::size_t(pair_index(d, a, b))] = (*coords)[std::size_t(t)];
        }
    res.section_basis = Mat<F>(K.n, K.n);
    for (int a = 0; a < d; ++a) res.section_basis.at(res.comp_cols[std::size_t(a)], a) = f.one();
    for (int t = 0; t < s; ++t)
        for (int j = 0; j < K.n; ++j) res.section_basis.at(j, d + t) = res.cen.basis.at(t, j);
    // in the section basis, K literally carries the extension table
    ExtensionSpec<F> spec{res.parent, res.thetas};
    if (change_basis(K, res.section_basis) != central_extension(spec))
        throw Error("extract_cocycle: section reconstruction failed");
    return res;
}

} // namespace nilcat
