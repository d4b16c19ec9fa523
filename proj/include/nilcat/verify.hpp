// verify.hpp -- the verification suites: each acceptance check runs a
// self-contained computation (catalog counting, irredundancy, descendant
// cross-validation, automorphism shape equality, Klein orbit enumeration,
// form lemma property trials, extension/orbit consistency, identification
// round trips) and reports one pass/fail line.

#pragma once

#include <chrono>
#include <random>

#include "nilcat/forms.hpp"
#include "nilcat/identify.hpp"

namespace nilcat {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

namespace verify_detail {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline const std::vector<Family>& parent_families() {
    static const std::vector<Family> v{Family::L5_1, Family::L5_2, Family::L5_3, Family::L5_4,
                                       Family::L5_5, Family::L5_6, Family::L5_7, Family::L5_8,
                                       Family::L5_9, Family::L4_1, Family::L4_2, Family::L4_3,
                                       Family::L3_1, Family::L3_2};
    return v;
}

} // namespace verify_detail

// criterion: catalog counting over GF(2), GF(3), GF(4), GF(5), GF(7), GF(8)
inline CheckResult check_counting() {
    verify_detail::Timer t;
    struct Row {
        unsigned p, k;
        std::uint64_t expect;
    };
    const std::vector<Row> rows{{2, 1, 36}, {3, 1, 34}, {2, 2, 36},
                                {5, 1, 34}, {7, 1, 34}, {2, 3, 36}};
    bool ok = true;
    std::string detail;
    for (auto [p, k, expect] : rows) {
        auto f = gf(p, k);
        verify_detail::Timer per;
        auto n1 = list_catalog(f, 6).size();
        auto n2 = count_formula(f).total.value;
        ok = ok && n1 == expect && n2 == expect && per.secs() < 5.0;
        detail += "GF(" + std::to_string(f.q()) + ")=" + std::to_string(n1) + " ";
    }
    return {"counting: dimension-6 catalog sizes and the closed formula", ok, detail, t.secs()};
}

// criterion: pairwise non-isomorphism of the full dimension-6 lists
inline CheckResult check_irredundancy() {
    verify_detail::Timer t;
    bool ok = true;
    std::string detail;
    for (auto& f : {gf(2), gf(3)}) {
        Workspace ws(f);
        auto entries = list_catalog(f, 6);
        std::size_t pairs = 0;
        for (std::size_t a = 0; a < entries.size() && ok; ++a)
            for (std::size_t b = a + 1; b < entries.size() && ok; ++b) {
                if (isomorphic(ws, entries[a].algebra, entries[b].algebra)) ok = false;
                ++pairs;
            }
        detail += "GF(" + std::to_string(f.q()) + "): " + std::to_string(pairs) + " pairs ";
    }
    return {"irredundancy: all catalog pairs non-isomorphic (fingerprint + orbit route)", ok, detail,
            t.secs()};
}

// criterion: descendant enumeration equals the published lists per parent
inline CheckResult check_descendants() {
    verify_detail::Timer t;
    struct Row {
        Family fam;
        std::size_t gf2, gf3;
    };
    const std::vector<Row> rows{
        {Family::L5_2, 1, 1}, {Family::L5_3, 2, 2}, {Family::L5_4, 0, 0}, {Family::L5_5, 2, 1},
        {Family::L5_6, 3, 2}, {Family::L5_7, 3, 3}, {Family::L5_8, 3, 3}, {Family::L5_9, 2, 2},
        {Family::L4_1, 3, 3}, {Family::L4_2, 6, 6}, {Family::L4_3, 1, 1}, {Family::L3_1, 1, 1},
        {Family::L3_2, 0, 0}};
    bool ok = true;
    std::string detail;
    for (auto& f : {gf(2), gf(3)}) {
        Workspace ws(f);
        std::size_t total = 0;
        for (const auto& r : rows) {
            auto rep = descendant_table(ws, r.fam, 6 - family_info(r.fam).dim);
            const auto expect = f.q() == 2 ? r.gf2 : r.gf3;
            ok = ok && rep.claimed.size() == expect && rep.counts_match && rep.reps_match;
            total += rep.claimed.size();
        }
        const std::size_t with_sums = total + 9;
        ok = ok && with_sums == (f.q() == 2 ? 36u : 34u);
        detail += "GF(" + std::to_string(f.q()) + "): " + std::to_string(total) + "+9 ";
    }
    return {"descendants: per-parent lists match the computed orbits, totals 36/34", ok, detail,
            t.secs()};
}

// criterion: the thirteen published H^2 dimensions
inline CheckResult check_cohomology_dims() {
    verify_detail::Timer t;
    const std::vector<std::pair<Family, int>> expected{
        {Family::L5_2, 7}, {Family::L5_3, 4}, {Family::L5_4, 5}, {Family::L5_5, 4},
        {Family::L5_6, 3}, {Family::L5_7, 3}, {Family::L5_8, 6}, {Family::L5_9, 3},
        {Family::L4_1, 6}, {Family::L4_2, 4}, {Family::L4_3, 2}, {Family::L3_1, 3},
        {Family::L3_2, 2}};
    bool ok = true;
    for (auto& f : {gf(2), gf(3), gf(5)})
        for (auto [fam, dim] : expected) ok = ok && parent_cohomology(f, fam).dim_h == dim;
    return {"cohomology: the 13 published H^2 dimensions (GF(2), GF(3), GF(5))", ok,
            "13 values x 3 fields", t.secs()};
}

// criterion: {invertible shape matrices} = Aut(L), both inclusions, exhaustively
inline CheckResult check_aut_shapes() {
    verify_detail::Timer t;
    const std::vector<Family> fams{Family::L5_2, Family::L5_3, Family::L5_5, Family::L5_6,
                                   Family::L5_7, Family::L5_8, Family::L5_9, Family::L4_2};
    bool ok = true;
    std::string detail;
    for (auto& f : {gf(2), gf(3)}) {
        for (auto fam : fams) {
            auto L = instantiate_family(f, fam);
            std::uint64_t shape_count = 0;
            bool shape_in_aut = true;
            enumerate_shape(f, fam, [&](const Mat<GF>& a) {
                if (!f.is_zero(mat_det(f, a))) {
                    ++shape_count;
                    shape_in_aut = shape_in_aut && is_isomorphism(L, L, a);
                }
                return true;
            });
            bool aut_in_shape = true;
            std::uint64_t auts = aut_stream(L, [&](const Mat<GF>& a) {
                aut_in_shape = aut_in_shape && matches_published_shape(f, fam, a);
                return true;
            });
            ok = ok && shape_in_aut && aut_in_shape && auts == shape_count;
            if (f.q() == 3 && fam == Family::L5_2)
                detail += "|Aut(L5_2,GF(3))|=" + std::to_string(auts) + " ";
        }
    }
    return {"automorphism shapes: published forms equal the computed groups (GF(2), GF(3))", ok,
            detail, t.secs()};
}

// criterion: GL(4,F)-orbit enumeration on 2-subspaces of wedge^2(F^4)
inline CheckResult check_klein() {
    verify_detail::Timer t;
    bool ok = true;
    std::string detail;
    for (auto& f : {gf(2), gf(3), gf(2, 2), gf(5)}) {
        verify_detail::Timer per;
        auto rep = verify_klein(f);
        ok = ok && rep.ok && rep.orbits.size() == 4 && per.secs() < 120.0;
        if (f.q() == 2) ok = ok && rep.total_subspaces == 651;
        if (f.q() == 3) ok = ok && rep.total_subspaces == 11011;
        detail += "GF(" + std::to_string(f.q()) + "): " + std::to_string(rep.total_subspaces) +
                  " subspaces/" + std::to_string(rep.orbits.size()) + " orbits ";
    }
    return {"Klein: 4 GL(4,F)-orbits matched to the published representatives", ok, detail, t.secs()};
}

// criterion, form lemma property suites (>= 500 trials each)
inline CheckResult check_form_lemmas(std::uint64_t seed) {
    verify_detail::Timer t;
    bool ok = true;
    std::mt19937_64 rng(seed);
    const int trials = 500;

    // Gram determinants under two bases differ by a nonzero square
    for (auto& f : {gf(2), gf(3), gf(5)}) {
        auto kb = associated_bilinear(f, klein_quadratic(f));
        int done = 0;
        while (done < trials) {
            auto b1 = random_mat(f, 2, 6, rng);
            if (span(f, b1).dim() != 2) continue;
            auto d1 = gram_det(f, kb, b1);
            if (f.is_zero(d1)) continue;
            auto b2 = mat_mul(f, random_invertible(f, 2, rng), b1);
            ok = ok && bool(same_class(f, Rel::star, d1, gram_det(f, kb, b2)));
            ++done;
        }
    }
    // Arf under two symplectic bases differs by psi(F)
    {
        auto f = gf(2);
        auto img = psi_image(f);
        int done = 0;
        while (done < trials) {
            QuadraticForm<GF> q{4, Mat<GF>(4, 4)};
            for (int i = 0; i < 4; ++i)
                for (int j = i; j < 4; ++j) q.upper.at(i, j) = GF::Elem(rng() % 2);
            auto bil = associated_bilinear(f, q);
            if (f.is_zero(mat_det(f, bil.gram))) continue;
            auto w = full_space(f, 4);
            auto base1 = symplectic_basis(f, bil, w);
            // random symplectic presentation via a random basis of the space
            auto p = random_invertible(f, 4, rng);
            std::vector<Vec<GF>> vecs;
            for (int i = 0; i < 4; ++i) {
                Vec<GF> col(4, 0);
                for (int r = 0; r < 4; ++r) col[std::size_t(r)] = p.at(r, i);
                vecs.push_back(std::move(col));
            }
            auto base2 = forms_detail::symplectic_reduce(f, bil.gram, std::move(vecs));
            if (!base2.leftover.empty()) continue;
            auto val = [&](const SymplecticDecomposition<GF>& b) {
                auto v = f.zero();
                for (std::size_t i = 0; i < b.e.size(); ++i)
                    v = f.add(v, f.mul(q.eval(f, b.e[i]), q.eval(f, b.fvecs[i])));
                return v;
            };
            auto diff = f.add(val(base1), val(base2));
            ok = ok && std::find(img.begin(), img.end(), diff) != img.end();
            ++done;
        }
    }
    // orbit lemma under the Klein action: (i) det ratio square, (ii) Arf
    // difference in psi, (iii) q2 = a^2 q1 + b^2 on totally isotropic planes
    for (auto& f : {gf(2), gf(3), gf(5)}) {
        auto kq = klein_quadratic(f);
        auto kb = associated_bilinear(f, kq);
        int done1 = 0, done2 = 0, done3 = 0;
        const bool char2 = f.characteristic() == 2;
        auto img = char2 ? psi_image(f) : std::vector<GF::Elem>{};
        int guard = 0;
        while ((done1 < trials || (char2 && (done2 < trials || done3 < trials))) &&
               ++guard < 200000) {
            auto a = random_invertible(f, 4, rng);
            auto w = wedge_action(f, a);
            auto b1 = random_mat(f, 2, 6, rng);
            if (span(f, b1).dim() != 2) continue;
            Mat<GF> b2(2, 6);
            for (int r = 0; r < 2; ++r) {
                auto img_row = mat_vec(f, w, b1.row(r));
                for (int c = 0; c < 6; ++c) b2.at(r, c) = img_row[std::size_t(c)];
            }
            auto d1 = gram_det(f, kb, b1), d2 = gram_det(f, kb, b2);
            if (done1 < trials && !f.is_zero(d1) && !f.is_zero(d2)) {
                ok = ok && bool(same_class(f, Rel::star, d1, d2));
                ++done1;
            }
            if (char2) {
                auto s1 = span(f, b1), s2 = span(f, b2);
                bool ns1 = true, ns2 = true;
                try {
                    auto q1v = arf(f, kq, s1);
                    (void)q1v;
                } catch (const DomainError&) { ns1 = false; }
                try {
                    auto q2v = arf(f, kq, s2);
                    (void)q2v;
                } catch (const DomainError&) { ns2 = false; }
                if (done2 < trials && ns1 && ns2) {
                    auto q1 = arf(f, kq, s1), q2 = arf(f, kq, s2);
                    // canonical representatives already reduced mod psi
                    ok = ok && q1 == q2;
                    ++done2;
                }
                // totally isotropic: f vanishes on the plane
                bool iso = true;
                for (int r = 0; r < 2; ++r)
                    for (int c = 0; c < 2; ++c)
                        iso = iso && f.is_zero(kb.eval(f, b1.row(r), b1.row(c)));
                if (done3 < trials && iso) {
                    auto q1 = f.mul(kq.eval(f, b1.row(0)), kq.eval(f, b1.row(1)));
                    auto q2 = f.mul(kq.eval(f, b2.row(0)), kq.eval(f, b2.row(1)));
                    bool solvable = false;
                    for (unsigned al = 1; al < f.q() && !solvable; ++al)
                        for (unsigned be = 0; be < f.q() && !solvable; ++be) {
                            auto lhs = f.add(f.mul(f.mul(GF::Elem(al), GF::Elem(al)), q1),
                                             f.mul(GF::Elem(be), GF::Elem(be)));
                            solvable = lhs == q2;
                        }
                    ok = ok && solvable;
                    ++done3;
                }
            }
        }
        ok = ok && done1 >= trials && (!char2 || (done2 >= trials && done3 >= trials));
    }
    return {"form lemmas: Gram/Arf well-definedness and orbit invariance, 500 trials each", ok, "",
            t.secs()};
}

// criterion: Theorem consistency -- brute extension isomorphism agrees with
// the orbit test on random allowable pairs over GF(2)
inline CheckResult check_extension_orbit_consistency(std::uint64_t seed, int pairs_per_parent = 100) {
    verify_detail::Timer t;
    auto f = gf(2);
    Workspace ws(f);
    std::mt19937_64 rng(seed);
    bool ok = true;
    std::string detail;
    std::uint64_t checked = 0, skipped_parents = 0;
    for (auto fam : verify_detail::parent_families()) {
        const int s = 6 - family_info(fam).dim;
        const auto& ctx = ws.ctx(fam);
        const auto& d = ws.orbit_data(fam, s);
        if (d.nodes.empty()) {
            ++skipped_parents; // no allowable subspaces, vacuously consistent
            continue;
        }
        for (int p = 0; p < pairs_per_parent; ++p) {
            const auto& u1 = d.nodes[rng() % d.nodes.size()];
            const auto& u2 = d.nodes[rng() % d.nodes.size()];
            auto mk = [&](const Subspace<GF>& u) {
                ExtensionSpec<GF> spec{ctx.L, {}};
                for (int i = 0; i < u.dim(); ++i) spec.thetas.push_back(ctx.lift(u.basis.row(i)));
                return central_extension(spec);
            };
            auto k1 = mk(u1), k2 = mk(u2);
            const bool orbit_same = bool(same_orbit(f, ctx, d, u1, u2));
            const bool brute_same = bool(brute_isomorphism(k1, k2, 2000000000ull));
            if (orbit_same != brute_same) ok = false;
            ++checked;
        }
    }
    detail = std::to_string(checked) + " pairs, " + std::to_string(skipped_parents) +
             " parents without allowable subspaces";
    return {"extension isomorphism agrees with the orbit test on random pairs (GF(2))", ok, detail,
            t.secs()};
}

// criterion: identification round trip for every catalog id
inline CheckResult check_round_trip(std::uint64_t seed, int basis_changes = 20) {
    verify_detail::Timer t;
    bool ok = true;
    std::string detail;
    std::mt19937_64 rng(seed);
    for (auto& f : {gf(2), gf(3), gf(5)}) {
        Workspace ws(f);
        std::uint64_t count = 0;
        for (const auto& e : list_catalog(f, 6)) {
            auto r = identify(ws, e.algebra);
            if (!(r.id == e.id)) ok = false;
            for (int b = 0; b < basis_changes && ok; ++b) {
                auto p = random_invertible(f, 6, rng);
                auto rr = identify(ws, change_basis(e.algebra, p));
                if (!(rr.id == e.id)) ok = false;
                ++count;
            }
            ++count;
        }
        detail += "GF(" + std::to_string(f.q()) + "): " + std::to_string(count) + " ";
    }
    return {"round trip: identify(instantiate(id)) = id over GF(2), GF(3), GF(5)", ok, detail,
            t.secs()};
}

inline std::vector<CheckResult> acceptance_criteria(std::uint64_t seed) {
    std::vector<CheckResult> out;
    out.push_back(check_counting());
    out.push_back(check_irredundancy());
    out.push_back(check_descendants());
    out.push_back(check_cohomology_dims());
    out.push_back(check_aut_shapes());
    out.push_back(check_klein());
    out.push_back(check_form_lemmas(seed));
    out.push_back(check_extension_orbit_consistency(seed));
    out.push_back(check_round_trip(seed));
    return out;
}

// field-scoped verification for the command line: the checks applicable to
// one field, at two effort levels
inline std::vector<CheckResult> verify_field(const GF& f, bool full, std::uint64_t seed) {
    std::vector<CheckResult> out;
    {
        verify_detail::Timer t;
        auto n1 = list_catalog(f, 6).size();
        auto n2 = count_formula(f).total.value;
        out.push_back({"catalog count equals the closed formula", n1 == n2,
                       std::to_string(n1) + " entries", t.secs()});
    }
    {
        verify_detail::Timer t;
        bool ok = true;
        for (int dim = 1; dim <= 6; ++dim)
            for (const auto& e : list_catalog(f, dim))
                ok = ok && !jacobi_violation(e.algebra) && nilpotency_class(e.algebra);
        out.push_back({"every catalog table is a nilpotent Lie algebra", ok, "dimensions 1..6",
                       t.secs()});
    }
    {
        verify_detail::Timer t;
        bool ok = true;
        for (const auto& info : all_families()) {
            if (info.dim > 5 || info.dim < 3 || info.h_basis.empty()) continue;
            auto ctx = parent_cohomology(f, info.fam);
            ok = ok && ctx.dim_h == int(info.h_basis.size());
        }
        out.push_back({"pinned H^2 bases verified against computed Z^2/B^2", ok, "", t.secs()});
    }
    if (f.q() <= 5) {
        verify_detail::Timer t;
        Workspace ws(f);
        bool ok = true;
        std::uint64_t total = 0;
        for (auto fam : verify_detail::parent_families()) {
            auto rep = descendant_table(ws, fam, 6 - family_info(fam).dim);
            ok = ok && rep.counts_match && rep.reps_match;
            total += rep.claimed.size();
        }
        ok = ok && total + 9 == count_formula(f).total.value;
        out.push_back({"descendant tables cross-validated against computed orbits", ok,
                       std::to_string(total) + " descendants + 9 direct sums", t.secs()});
    }
    if (full && f.q() <= 5) {
        verify_detail::Timer t;
        auto rep = verify_klein(f);
        out.push_back({"Klein orbit enumeration matches the representative set", rep.ok,
                       std::to_string(rep.total_subspaces) + " subspaces, " +
                           std::to_string(rep.orbits.size()) + " orbits",
                       t.secs()});
    }
    if (full && f.q() <= 5) {
        verify_detail::Timer t;
        Workspace ws(f);
        std::mt19937_64 rng(seed);
        bool ok = true;
        for (const auto& e : list_catalog(f, 6)) {
            auto r = identify(ws, e.algebra);
            ok = ok && r.id == e.id;
            auto p = random_invertible(f, 6, rng);
            ok = ok && identify(ws, change_basis(e.algebra, p)).id == e.id;
        }
        out.push_back({"identification round trip across the catalog", ok, "", t.secs()});
    }
    return out;
}

} // namespace nilcat
