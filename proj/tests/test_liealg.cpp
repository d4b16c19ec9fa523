#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nilcat/liealg.hpp"

using namespace nilcat;

// hand-coded multiplication tables (independent of the catalog module)
namespace {
template <class F> LieAlgebra<F> mk(const F& f, int n, std::vector<TableEntry> t) {
    return lie_from_table(f, n, t);
}
template <class F> LieAlgebra<F> l52(const F& f) { return mk(f, 5, {{1, 2, 3, 1}}); }
template <class F> LieAlgebra<F> l58(const F& f) { return mk(f, 5, {{1, 2, 4, 1}, {1, 3, 5, 1}}); }
template <class F> LieAlgebra<F> l618(const F& f) {
    return mk(f, 6, {{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 5, 1}, {1, 5, 6, 1}});
}
template <class F> LieAlgebra<F> l610(const F& f) {
    return mk(f, 6, {{1, 2, 3, 1}, {1, 3, 6, 1}, {4, 5, 6, 1}});
}
template <class F> LieAlgebra<F> l611(const F& f) {
    return mk(f, 6, {{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 6, 1}, {2, 3, 6, 1}, {2, 5, 6, 1}});
}
template <class F> LieAlgebra<F> l612(const F& f) {
    return mk(f, 6, {{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 6, 1}, {2, 5, 6, 1}});
}
template <class F> LieAlgebra<F> l626(const F& f) {
    return mk(f, 6, {{1, 2, 4, 1}, {1, 3, 5, 1}, {2, 3, 6, 1}});
}
template <class F> LieAlgebra<F> l628(const F& f) {
    return mk(f, 6, {{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 5, 1}, {2, 3, 6, 1}});
}
template <class F> LieAlgebra<F> l614(const F& f) {
    return mk(f, 6, {{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 5, 1}, {2, 3, 5, 1}, {2, 5, 6, 1}, {3, 4, 6, -1}});
}
template <class F> LieAlgebra<F> l615(const F& f) {
    return mk(f, 6, {{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 5, 1}, {1, 5, 6, 1}, {2, 3, 5, 1}, {2, 4, 6, 1}});
}
template <class F> LieAlgebra<F> l624_0(const F& f) {
    return mk(f, 6, {{1, 2, 3, 1}, {1, 3, 5, 1}, {2, 3, 6, 1}, {2, 4, 5, 1}});
}
} // namespace

TEST_CASE("bracket evaluation") {
    auto f = gf(5);
    auto L = l52(f);
    Vec<GF> x1{1, 0, 0, 0, 0}, x2{0, 1, 0, 0, 0};
    CHECK(bracket(L, x1, x2) == Vec<GF>{0, 0, 1, 0, 0});

    auto L18 = l618(f);
    Vec<GF> y1{1, 0, 0, 0, 0, 0}, y4{0, 0, 0, 1, 0, 0};
    CHECK(bracket(L18, y1, y4) == Vec<GF>{0, 0, 0, 0, 1, 0});

    std::mt19937 rng(5);
    for (int t = 0; t < 100; ++t) {
        auto v = random_vec(f, 5, rng);
        auto z = bracket(L, v, v);
        for (auto& e : z) CHECK(f.is_zero(e));
    }
}

TEST_CASE("jacobi detection") {
    auto f = gf(7);
    // [e1,e2]=e1, [e1,e3]=e2 violates Jacobi on (1,2,3) with residual e2
    LieAlgebra<GF> bad(f, 3);
    bad.set_coef(0, 1, 0, 1);
    bad.set_coef(0, 2, 1, 1);
    auto v = jacobi_violation(bad);
    REQUIRE(v);
    CHECK(v->i == 0);
    CHECK(v->j == 1);
    CHECK(v->k == 2);
    CHECK(v->residual == Vec<GF>{0, 1, 0});
    CHECK_THROWS_AS(mk(f, 3, {{1, 2, 1, 1}, {1, 3, 2, 1}}), JacobiError);

    // abelian is fine, and all hand tables pass over several fields
    CHECK_FALSE(jacobi_violation(LieAlgebra<GF>(f, 4)));
    for (auto& fld : {gf(2), gf(3), gf(5), gf(2, 2)}) {
        CHECK_FALSE(jacobi_violation(l610(fld)));
        CHECK_FALSE(jacobi_violation(l626(fld)));
        CHECK_FALSE(jacobi_violation(l628(fld)));
    }
    QQ q;
    CHECK_FALSE(jacobi_violation(l614(q)));
}

TEST_CASE("lower central series and class") {
    auto f = gf(3);
    auto L = l618(f);
    std::vector<int> dims;
    for (auto& s : lower_central_series(L)) dims.push_back(s.dim());
    CHECK(dims == std::vector<int>{6, 4, 3, 2, 1, 0});
    CHECK(nilpotency_class(L) == 5);

    CHECK(nilpotency_class(LieAlgebra<GF>(f, 3)) == 1); // abelian

    auto L26 = l626(f);
    std::vector<int> d26;
    for (auto& s : lower_central_series(L26)) d26.push_back(s.dim());
    CHECK(d26 == std::vector<int>{6, 3, 0});
    CHECK(nilpotency_class(L26) == 2);

    // solvable non-nilpotent: [x1,x2] = x2
    auto bad = mk(f, 2, {{1, 2, 2, 1}});
    CHECK_FALSE(nilpotency_class(bad));
}

TEST_CASE("center, derived, centralizer") {
    auto f = gf(2);
    auto L11 = l611(f), L12 = l612(f);
    CHECK(derived(L11).dim() == 3);
    CHECK(derived(L12).dim() == 3);
    CHECK(centralizer(L11, derived(L11)).dim() == 4);
    CHECK(centralizer(L12, derived(L12)).dim() == 5);

    LieAlgebra<GF> ab(f, 4);
    CHECK(center(ab).dim() == 4);
    CHECK(centralizer(ab, zero_subspace<GF>(4)).dim() == 4);
}

TEST_CASE("central quotients") {
    auto f = gf(3);
    auto L = l610(f);
    Mat<GF> zr(1, 6);
    zr.at(0, 5) = 1;
    auto res = quotient(L, span(f, zr));
    CHECK(res.q.n == 5);
    CHECK(res.q == l52(f)); // exact table match on the complement coordinates

    auto L28 = l628(f);
    Mat<GF> zr2(2, 6);
    zr2.at(0, 4) = 1;
    zr2.at(1, 5) = 1;
    auto res2 = quotient(L28, span(f, zr2));
    CHECK(res2.q == mk(f, 4, {{1, 2, 3, 1}, {1, 3, 4, 1}})); // L_{4,3}

    // quotient by a non-central subspace is rejected
    Mat<GF> nc(1, 6);
    nc.at(0, 0) = 1;
    CHECK_THROWS_AS(quotient(L, span(f, nc)), DomainError);

    // abelian mod its center is the zero algebra
    LieAlgebra<GF> ab(f, 3);
    CHECK(quotient(ab, center(ab)).q.n == 0);
}

TEST_CASE("splitting abelian summands") {
    auto f = gf(3);

    // L_{5,4} + F: core of dim 5 with C(core) <= core', one summand
    auto k = mk(f, 6, {{1, 2, 5, 1}, {3, 4, 5, 1}});
    auto sp = split_abelian_summand(k);
    CHECK(sp.summands == 1);
    CHECK(sp.core.n == 5);
    CHECK(subspace_leq(f, center(sp.core), derived(sp.core)));
    auto moved = change_basis(k, sp.basis);
    CHECK(moved == direct_sum_abelian(sp.core, 1));

    // fully abelian splits to the zero algebra
    auto spa = split_abelian_summand(LieAlgebra<GF>(f, 6));
    CHECK(spa.summands == 6);
    CHECK(spa.core.n == 0);

    // no summand to strip: C(L_{6,10}) = <x6> <= L'
    auto sp10 = split_abelian_summand(l610(f));
    CHECK(sp10.summands == 0);
    CHECK(sp10.core == l610(f));
}

TEST_CASE("basis changes and isomorphism checking") {
    auto f = gf(3);
    auto L = l58(f);
    auto id = Mat<GF>::identity(f, 5);
    CHECK(change_basis(L, id) == L);
    CHECK(is_isomorphism(L, L, id));

    // swap x4 and x5
    Mat<GF> perm(5, 5);
    perm.at(0, 0) = perm.at(1, 1) = perm.at(2, 2) = 1;
    perm.at(4, 3) = perm.at(3, 4) = 1;
    auto M = change_basis(L, perm);
    CHECK(M == mk(f, 5, {{1, 2, 5, 1}, {1, 3, 4, 1}}));
    CHECK(is_isomorphism(M, L, perm));

    // scaling x1 by 2 in L_{3,2} over GF(3): [y1,y2] = 2 y3
    auto L32 = mk(f, 3, {{1, 2, 3, 1}});
    Mat<GF> scale = Mat<GF>::identity(f, 3);
    scale.at(0, 0) = 2;
    CHECK(change_basis(L32, scale) == mk(f, 3, {{1, 2, 3, 2}}));

    Mat<GF> sing(5, 5);
    CHECK_THROWS_AS(change_basis(L, sing), DomainError);
    CHECK_FALSE(is_isomorphism(L, L, sing));
}

TEST_CASE("fingerprints") {
    auto f = gf(3);
    CHECK_FALSE(fingerprint(l614(f)).derived_abelian);
    CHECK(fingerprint(l615(f)).derived_abelian);
    CHECK(fingerprint(l624_0(f)).center_eq_l3);
    // C(L) = L^3 separates L_{6,24}(e) from L_{6,25}
    auto l625 = mk(f, 6, {{1, 2, 3, 1}, {1, 3, 5, 1}, {1, 4, 6, 1}});
    CHECK_FALSE(fingerprint(l625).center_eq_l3);

    Fingerprint ab = fingerprint(LieAlgebra<GF>(f, 6));
    CHECK(ab.lcs_dims == std::vector<int>{6, 0});
    CHECK(ab.dim_derived == 0);
    CHECK(ab.derived_abelian);

    // invariance under random basis changes
    std::mt19937 rng(99);
    for (auto mkalg : {+[](const GF& fl) { return l610(fl); }, +[](const GF& fl) { return l614(fl); },
                       +[](const GF& fl) { return l626(fl); }}) {
        auto L = mkalg(f);
        auto fp = fingerprint(L);
        for (int t = 0; t < 200; ++t) {
            auto P = random_invertible(f, L.n, rng);
            CHECK(fingerprint(change_basis(L, P)) == fp);
        }
    }
}

TEST_CASE("lcs dims weakly decreasing for nilpotent algebras") {
    for (auto& f : {gf(2), gf(3)}) {
        for (auto L : {l610(f), l611(f), l618(f), l626(f), l628(f)}) {
            auto s = lower_central_series(L);
            for (std::size_t i = 1; i < s.size(); ++i) {
                CHECK(s[i].dim() < s[i - 1].dim());
                CHECK(subspace_leq(f, s[i], s[i - 1]));
            }
            CHECK(s.back().dim() == 0);
        }
    }
}
