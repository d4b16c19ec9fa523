#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nilcat/catalog.hpp"
#include "nilcat/forms.hpp"

using namespace nilcat;

namespace {
Vec<GF> v6(const GF& f, std::initializer_list<int> xs) {
    Vec<GF> v;
    for (int x : xs) v.push_back(f.from_int(x));
    return v;
}

template <class Rng> QuadraticForm<GF> random_quadratic(const GF& f, int n, Rng& rng) {
    QuadraticForm<GF> q{n, Mat<GF>(n, n)};
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) q.upper.at(i, j) = GF::Elem(rng() % f.q());
    return q;
}

// random symplectic basis of a non-singular alternating form on the full space
template <class Rng>
SymplecticDecomposition<GF> random_symplectic(const GF& f, const BilinearForm<GF>& bil, Rng& rng) {
    const int n = bil.n;
    auto pairing = [&](const Vec<GF>& a, const Vec<GF>& b) {
        return BilinearForm<GF>::vec_dot(f, a, mat_vec(f, bil.gram, b));
    };
    SymplecticDecomposition<GF> out;
    std::vector<Vec<GF>> rest;
    for (;;) {
        // random change of basis, then greedy reduction
        auto p = random_invertible(f, n, rng);
        std::vector<Vec<GF>> vecs;
        for (int i = 0; i < n; ++i) {
            Vec<GF> col(std::size_t(n), 0);
            for (int t = 0; t < n; ++t) col[std::size_t(t)] = p.at(t, i);
            vecs.push_back(std::move(col));
        }
        auto dec = forms_detail::symplectic_reduce(f, bil.gram, std::move(vecs));
        if (dec.leftover.empty() && int(dec.e.size()) * 2 == n) {
            // double check the relations
            bool good = true;
            for (std::size_t i = 0; i < dec.e.size(); ++i)
                for (std::size_t j = 0; j < dec.e.size(); ++j) {
                    good = good && f.is_zero(pairing(dec.e[i], dec.e[j]));
                    good = good && f.is_zero(pairing(dec.fvecs[i], dec.fvecs[j]));
                    good = good && f.eq(pairing(dec.e[i], dec.fvecs[j]), i == j ? f.one() : f.zero());
                }
            if (good) return dec;
        }
        (void)rest;
    }
}
} // namespace

TEST_CASE("associated bilinear forms") {
    auto f = gf(5);
    QuadraticForm<GF> q{2, Mat<GF>(2, 2)};
    q.upper.at(0, 1) = 1; // Q = x1 x2
    auto bil = associated_bilinear(f, q);
    CHECK(bil.gram.at(0, 1) == 1);
    CHECK(bil.gram.at(1, 0) == 1);
    CHECK(bil.gram.at(0, 0) == 0);

    // char 2: always alternating
    auto f2 = gf(2, 2);
    std::mt19937 rng(1);
    for (int t = 0; t < 100; ++t) {
        auto qq = random_quadratic(f2, 4, rng);
        auto b = associated_bilinear(f2, qq);
        CHECK(b.kind == FormKind::alternating);
        for (int i = 0; i < 4; ++i) CHECK(b.gram.at(i, i) == 0);
        // f_Q(u,v) = Q(u+v) - Q(u) - Q(v) pointwise
        auto u = random_vec(f2, 4, rng), v = random_vec(f2, 4, rng);
        Vec<GF> s(4, 0);
        for (int i = 0; i < 4; ++i) s[std::size_t(i)] = f2.add(u[std::size_t(i)], v[std::size_t(i)]);
        auto expect = f2.sub(f2.sub(qq.eval(f2, s), qq.eval(f2, u)), qq.eval(f2, v));
        CHECK(b.eval(f2, u, v) == expect);
    }

    // Klein form associated bilinear value over GF(3)
    auto f3 = gf(3);
    auto kb = associated_bilinear(f3, klein_quadratic(f3));
    // Q(u+v)-Q(u)-Q(v) = 0 - 1 - (-1) = 0 for these two vectors
    CHECK(kb.eval(f3, v6(f3, {1, 0, 0, 0, 0, 1}), v6(f3, {0, 1, 0, 0, 1, 0})) == f3.from_int(0));
}

TEST_CASE("alternating canonical forms") {
    auto f = gf(3);
    // D12 in dim 3 has rank 2
    Mat<GF> g(3, 3);
    g.at(0, 1) = 1;
    g.at(1, 0) = f.neg(1);
    auto c = alternating_canonical(f, alternating_form(f, g));
    CHECK(c.rank == 2);

    std::mt19937 rng(17);
    for (auto& fld : {gf(2), gf(3), gf(5)}) {
        for (int t = 0; t < 200; ++t) {
            const int n = 3 + int(rng() % 3);
            Mat<GF> gr(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    gr.at(i, j) = GF::Elem(rng() % fld.q());
                    gr.at(j, i) = fld.neg(gr.at(i, j));
                }
            auto form = alternating_form(fld, gr);
            auto can = alternating_canonical(fld, form);
            CHECK(can.rank % 2 == 0);
            CHECK(can.rank == mat_rank(fld, gr));
            if (n % 2 == 1) CHECK(can.rank < n); // no non-singular form in odd dimension
            // P^T G P is exactly D12 + D34 + ...
            auto moved = mat_mul(fld, transpose(can.p), mat_mul(fld, gr, can.p));
            Mat<GF> tpl(n, n);
            for (int i = 0; i + 1 < can.rank; i += 2) {
                tpl.at(i, i + 1) = 1;
                tpl.at(i + 1, i) = fld.neg(1);
            }
            CHECK(moved == tpl);
        }
    }
}

TEST_CASE("symplectic bases") {
    auto f = gf(2);
    // the standard hyperbolic plane is already symplectic
    Mat<GF> g(2, 2);
    g.at(0, 1) = 1;
    g.at(1, 0) = 1; // -1 = 1
    auto dec = symplectic_basis(f, alternating_form(f, g), full_space(f, 2));
    REQUIRE(dec.e.size() == 1);
    CHECK(dec.e[0] == Vec<GF>{1, 0});
    CHECK(dec.fvecs[0] == Vec<GF>{0, 1});

    // the published Klein-plane basis is symplectic as given
    auto kb = associated_bilinear(f, klein_quadratic(f));
    for (GF::Elem nu : {GF::Elem(0), GF::Elem(1)}) {
        Mat<GF> rows(2, 6);
        rows.at(0, 0) = 1; rows.at(0, 5) = 1;           // (1,0,0,0,0,1)
        rows.at(1, 1) = 1; rows.at(1, 4) = nu; rows.at(1, 5) = 1; // (0,1,0,0,nu,1)
        CHECK(kb.eval(f, rows.row(0), rows.row(1)) == 1);
        auto d = symplectic_basis(f, kb, span(f, rows));
        CHECK(d.e.size() == 1);
    }

    // singular restrictions are rejected
    Mat<GF> iso(2, 6);
    iso.at(0, 0) = 1;
    iso.at(1, 1) = 1;
    CHECK_THROWS_AS(symplectic_basis(f, kb, span(f, iso)), DomainError);

    // exact relations on random non-singular alternating forms over GF(3)
    auto f3 = gf(3);
    std::mt19937 rng(23);
    for (int t = 0; t < 100; ++t) {
        Mat<GF> gr(4, 4);
        do {
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) {
                    gr.at(i, j) = GF::Elem(rng() % 3);
                    gr.at(j, i) = f3.neg(gr.at(i, j));
                }
        } while (f3.is_zero(mat_det(f3, gr)));
        auto form = alternating_form(f3, gr);
        auto d = symplectic_basis(f3, form, full_space(f3, 4));
        REQUIRE(d.e.size() == 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                CHECK(f3.is_zero(form.eval(f3, d.e[i], d.e[j])));
                CHECK(f3.is_zero(form.eval(f3, d.fvecs[i], d.fvecs[j])));
                CHECK(form.eval(f3, d.e[i], d.fvecs[j]) == (i == j ? f3.one() : f3.zero()));
            }
    }
}

TEST_CASE("Gram determinants and Arf invariants") {
    auto f = gf(2);
    auto kq = klein_quadratic(f);
    // Arf of <(1,0,0,0,0,1),(0,1,0,0,nu,1)> is the class of nu
    for (GF::Elem nu : {GF::Elem(0), GF::Elem(1)}) {
        Mat<GF> rows(2, 6);
        rows.at(0, 0) = 1; rows.at(0, 5) = 1;
        rows.at(1, 1) = 1; rows.at(1, 4) = nu; rows.at(1, 5) = 1;
        CHECK(arf(f, kq, span(f, rows)) == nu); // psi(GF(2)) = {0}, omega = 1
    }

    // hyperbolic Q (zero on both basis vectors) has Arf 0
    QuadraticForm<GF> hyp{2, Mat<GF>(2, 2)};
    hyp.upper.at(0, 1) = 1;
    CHECK(arf(f, hyp, full_space(f, 2)) == 0);

    CHECK_THROWS_AS(arf(gf(3), klein_quadratic(gf(3)), full_space(gf(3), 6)), DomainError);

    // Lemma: Gram determinants under two bases differ by a nonzero square
    std::mt19937 rng(31);
    for (auto& fld : {gf(3), gf(5)}) {
        auto kb = associated_bilinear(fld, klein_quadratic(fld));
        int done = 0;
        while (done < 500) {
            auto b1 = random_mat(fld, 2, 6, rng);
            auto s = span(fld, b1);
            if (s.dim() != 2) continue;
            auto d1 = gram_det(fld, kb, b1);
            if (fld.is_zero(d1)) continue;
            auto mix = random_invertible(fld, 2, rng);
            auto b2 = mat_mul(fld, mix, b1);
            auto d2 = gram_det(fld, kb, b2);
            REQUIRE(same_class(fld, Rel::star, d1, d2));
            ++done;
        }
    }

    // Lemma: Arf values under two symplectic bases differ by psi(F)
    for (auto& fld : {gf(2), gf(2, 2)}) {
        auto img = psi_image(fld);
        int done = 0;
        std::mt19937 rng2(33);
        while (done < 500) {
            auto q = random_quadratic(fld, 4, rng2);
            auto bil = associated_bilinear(fld, q);
            if (fld.is_zero(mat_det(fld, bil.gram))) continue;
            auto d1 = symplectic_basis(fld, bil, full_space(fld, 4));
            auto d2 = random_symplectic(fld, bil, rng2);
            auto a1 = fld.zero(), a2 = fld.zero();
            for (std::size_t i = 0; i < d1.e.size(); ++i)
                a1 = fld.add(a1, fld.mul(q.eval(fld, d1.e[i]), q.eval(fld, d1.fvecs[i])));
            for (std::size_t i = 0; i < d2.e.size(); ++i)
                a2 = fld.add(a2, fld.mul(q.eval(fld, d2.e[i]), q.eval(fld, d2.fvecs[i])));
            auto diff = fld.add(a1, a2);
            CHECK(std::find(img.begin(), img.end(), diff) != img.end());
            ++done;
        }
    }
}

TEST_CASE("Klein and L42 quadratic forms") {
    auto f = gf(3);
    CHECK(klein_form(f, v6(f, {1, 0, 0, 0, 0, 1})) == 1);
    CHECK(klein_form(f, v6(f, {1, 0, 0, 0, 0, 0})) == 0);
    CHECK(l42_form(f, Vec<GF>{1, 0, 0, 1}) == 1);
    CHECK(l42_form(f, Vec<GF>{1, 0, 0, 0}) == 0);

    // Q(A theta) = det(A) Q(theta) for the wedge action
    std::mt19937 rng(41);
    for (auto& fld : {gf(2), gf(3), gf(5)}) {
        for (int t = 0; t < 300; ++t) {
            auto a = random_mat(fld, 4, 4, rng);
            auto w = wedge_action(fld, a);
            auto theta = random_vec(fld, 6, rng);
            auto moved = mat_vec(fld, w, theta);
            CHECK(klein_form(fld, moved) == fld.mul(mat_det(fld, a), klein_form(fld, theta)));
        }
    }

    // vanishing locus = decomposable wedges (rank <= 2 Gram), exhaustively
    for (auto& fld : {gf(2), gf(3)}) {
        const unsigned q = fld.q();
        std::uint64_t count = 1;
        for (int i = 0; i < 6; ++i) count *= q;
        for (std::uint64_t code = 0; code < count; ++code) {
            Vec<GF> theta(6, 0);
            auto c = code;
            for (int i = 0; i < 6; ++i) { theta[std::size_t(i)] = GF::Elem(c % q); c /= q; }
            auto g = gram_from_delta(fld, 4, theta);
            CHECK((fld.is_zero(klein_form(fld, theta))) == (mat_rank(fld, g) <= 2));
        }
    }
}

TEST_CASE("L42 tensor identity") {
    // automorphisms of the 4-dim algebra with [x1,x2]=x3 scale Q by det(g1) det(g2)
    std::mt19937 rng(47);
    for (auto& f : {gf(3), gf(5)}) {
        auto ctx = parent_cohomology(f, Family::L4_2);
        for (int t = 0; t < 200; ++t) {
            auto nz = [&] { return GF::Elem(1 + rng() % (f.q() - 1)); };
            auto any = [&] { return GF::Elem(rng() % f.q()); };
            GF::Elem a11 = any(), a12 = any(), a21 = any(), a22 = any();
            auto u = f.sub(f.mul(a11, a22), f.mul(a12, a21));
            if (f.is_zero(u)) continue;
            GF::Elem a44 = nz(), a34 = any();
            Mat<GF> A(4, 4);
            A.at(0, 0) = a11; A.at(0, 1) = a12;
            A.at(1, 0) = a21; A.at(1, 1) = a22;
            A.at(2, 0) = any(); A.at(2, 1) = any(); A.at(2, 2) = u; A.at(2, 3) = a34;
            A.at(3, 0) = any(); A.at(3, 1) = any(); A.at(3, 3) = a44;
            REQUIRE(is_isomorphism(ctx.L, ctx.L, A));
            auto theta = random_vec(f, 4, rng);
            auto moved = act_on_h2(ctx, A, theta);
            auto detg1 = u;
            auto detg2 = f.mul(u, a44);
            CHECK(l42_form(f, moved) == f.mul(f.mul(detg1, detg2), l42_form(f, theta)));
        }
    }
}

TEST_CASE("Klein orbit verification over GF(2) and GF(3)") {
    auto r2 = verify_klein(gf(2));
    CHECK(r2.total_subspaces == 651);
    CHECK(r2.orbits.size() == 4);
    CHECK(r2.ok);

    auto r3 = verify_klein(gf(3));
    CHECK(r3.total_subspaces == 11011);
    CHECK(r3.orbits.size() == 4);
    CHECK(r3.ok);
}
