#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "nilcat/linalg.hpp"

using namespace nilcat;

TEST_CASE("rref is idempotent and canonical") {
    auto f = gf(3);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        auto m = random_mat(f, 4, 6, rng);
        auto r1 = rref(f, m);
        auto r2 = rref(f, r1.r);
        CHECK(r1.r == r2.r);
        CHECK(mat_mul(f, r1.t, m) == r1.r);
        // respanning with a random invertible row mix gives the same subspace
        auto u = span(f, m);
        auto mix = random_invertible(f, 4, rng);
        auto u2 = span(f, mat_mul(f, mix, m));
        CHECK(u == u2);
    }
}

TEST_CASE("kernel, image, solve") {
    auto f3 = gf(3);
    CHECK(kernel(f3, Mat<GF>::identity(f3, 2)).dim() == 0);

    auto f2 = gf(2);
    Mat<GF> m(2, 2);
    m.at(0, 0) = m.at(0, 1) = m.at(1, 0) = m.at(1, 1) = 1;
    auto k = kernel(f2, m);
    REQUIRE(k.dim() == 1);
    CHECK(k.basis.row(0) == Vec<GF>{1, 1});

    Mat<GF> s(2, 2);
    s.at(0, 0) = 1; s.at(0, 1) = 2; s.at(1, 1) = 1;
    auto x = solve(f3, s, Vec<GF>{0, 1});
    REQUIRE(x);
    CHECK(*x == Vec<GF>{1, 1});
    CHECK(mat_vec(f3, s, *x) == Vec<GF>{0, 1});

    Mat<GF> bad(2, 1);
    bad.at(0, 0) = 1; bad.at(1, 0) = 0;
    CHECK_FALSE(solve(f3, bad, Vec<GF>{0, 1}));

    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto mm = random_mat(f3, 3 + int(rng() % 3), 4 + int(rng() % 3), rng);
        CHECK(mat_rank(f3, mm) + kernel(f3, mm).dim() == mm.cols);
        // kernel vectors annihilate
        auto kk = kernel(f3, mm);
        for (int i = 0; i < kk.dim(); ++i) {
            auto r = mat_vec(f3, mm, kk.basis.row(i));
            for (auto& v : r) CHECK(f3.is_zero(v));
        }
    }
}

TEST_CASE("subspace lattice operations") {
    auto f = gf(5);
    Mat<GF> e12(2, 3), e23(2, 3);
    e12.at(0, 0) = 1; e12.at(1, 1) = 1;
    e23.at(0, 1) = 1; e23.at(1, 2) = 1;
    auto u = span(f, e12), v = span(f, e23);
    auto w = intersect(f, u, v);
    REQUIRE(w.dim() == 1);
    CHECK(w.basis.row(0) == Vec<GF>{0, 1, 0});

    Mat<GF> l1(1, 2), l2(1, 2);
    l1.at(0, 0) = 1;
    l2.at(0, 1) = 1;
    CHECK(sum(f, span(f, l1), span(f, l2)).dim() == 2);

    std::mt19937 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        auto a = span(f, random_mat(f, 1 + int(rng() % 4), 5, rng));
        auto b = span(f, random_mat(f, 1 + int(rng() % 4), 5, rng));
        CHECK(a.dim() + b.dim() == sum(f, a, b).dim() + intersect(f, a, b).dim());
        CHECK(subspace_leq(f, intersect(f, a, b), a));
        CHECK(subspace_leq(f, a, sum(f, a, b)));
    }
}

TEST_CASE("rational exact linear algebra") {
    QQ q;
    Mat<QQ> m(2, 2);
    m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(1, 0) = 3; m.at(1, 1) = mpq_class(4);
    CHECK(mat_det(q, m) == mpq_class(-2));
    auto inv = mat_inverse(q, m);
    REQUIRE(inv);
    CHECK(mat_mul(q, *inv, m) == Mat<QQ>::identity(q, 2));
    Mat<QQ> frac(2, 2);
    frac.at(0, 0) = mpq_class(1, 3); frac.at(0, 1) = mpq_class(1, 7);
    frac.at(1, 0) = mpq_class(2, 5); frac.at(1, 1) = mpq_class(3, 11);
    auto r = rref(q, frac);
    CHECK(r.rank == 2);
    CHECK(mat_mul(q, r.t, frac) == r.r);
}

TEST_CASE("subspace enumeration matches Gaussian binomials") {
    CHECK(enumerate_subspaces(gf(2), 6, 2).size() == 651);
    CHECK(enumerate_subspaces(gf(3), 6, 2).size() == 11011);
    CHECK(enumerate_subspaces(gf(3), 5, 0).size() == 1);

    for (unsigned q : {2u, 3u}) {
        auto f = gf(q);
        for (int n = 1; n <= 6; ++n)
            for (int k = 0; k <= n; ++k) {
                if (gauss_binomial(q, n, k) > 200000) continue;
                auto subs = enumerate_subspaces(f, n, k);
                CHECK(subs.size() == gauss_binomial(q, n, k));
                CHECK(std::is_sorted(subs.begin(), subs.end(),
                                     [](const Subspace<GF>& a, const Subspace<GF>& b) {
                                         return subspace_lex_less(a, b);
                                     }));
                std::set<std::vector<GF::Elem>> keys;
                for (auto& s : subs) {
                    CHECK(s.dim() == k);
                    keys.insert(s.basis.a);
                }
                CHECK(keys.size() == subs.size());
            }
    }
    CHECK_THROWS_AS(enumerate_subspaces(gf(3), 12, 6), BudgetError);
}

TEST_CASE("GL order and generators") {
    CHECK(gl_order(gf(2), 4) == 20160);
    CHECK(gl_order(gf(2), 1) == 1);
    CHECK(gl_order(gf(3), 2) == 48);

    for (auto& f : {gf(2), gf(3), gf(5), gf(2, 2)}) {
        for (int n : {1, 2, 3, 4}) {
            auto gens = gl_generators(f, n); // throws if the projective orbit check fails
            for (auto& g : gens) CHECK_FALSE(f.is_zero(mat_det(f, g)));
        }
    }
}

TEST_CASE("gl_order overflow is reported") {
    CHECK_THROWS_AS(gl_order(gf(5), 6), BudgetError);
    CHECK(gl_order(gf(5), 4) == 116064000000ull); // (624)(620)(600)(500)
}
