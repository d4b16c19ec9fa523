// identify.hpp -- the identification engine: given a nilpotent Lie algebra of
// dimension <= 6 over a small finite field, find its classification label and
// an explicit basis-change witness onto the catalog table.
//
// Route: strip abelian summands; for the core, pass to K/C(K), identify the
// parent recursively, transport the extracted cohomology subspace onto the
// catalog parent through the parent witness, and locate its Aut-orbit among
// the defining subspaces of the catalog entries.  The witness is assembled
// from the section basis, the parent witness, coboundary shifts, a basis
// mixing step, and the orbit witness, and verified at the end.

#pragma once

#include <map>

#include "nilcat/autorbits.hpp"

namespace nilcat {

struct NotNilpotentError : Error {
    using Error::Error;
};

// per-field caches: cohomology contexts, orbit data per (parent, step), and
// the orbit -> catalog entry match
class Workspace {
public:
    explicit Workspace(GF f) : field_(std::move(f)) {}

    const GF& field() const { return field_; }

    const Cohomology<GF>& ctx(Family fam) {
        auto it = ctxs_.find(fam);
        if (it == ctxs_.end()) it = ctxs_.emplace(fam, parent_cohomology(field_, fam)).first;
        return it->second;
    }

    const OrbitData& orbit_data(Family fam, int step) {
        auto key = std::pair{fam, step};
        auto it = orbits_.find(key);
        if (it == orbits_.end())
            it = orbits_.emplace(key, orbits_on_allowable(field_, ctx(fam), step, fam)).first;
        return it->second;
    }

    // canonical defining subspaces of the catalog entries with this parent and
    // step; dimensions below 6 are computed from the catalog tables themselves
    struct EntryMatch {
        std::vector<std::pair<AlgebraId, Subspace<GF>>> entries;
        std::map<std::uint32_t, std::size_t> orbit_to_entry; // orbit id -> index
    };

    const EntryMatch& entry_match(Family parent, int step) {
        auto key = std::pair{parent, step};
        auto it = matches_.find(key);
        if (it != matches_.end()) return it->second;
        EntryMatch em;
        for (auto& [id, rows] : claimed_descendants(field_, parent, step))
            em.entries.push_back({id, span(field_, rows)});
        // lower-dimensional cores: defining data extracted from the tables
        for (const auto& info : all_families()) {
            if (info.dim >= 6 || info.dim <= 3) continue;
            if (info.split_m != 0 || info.fam == Family::L4_1) continue; // cores only
            auto K = instantiate_family(field_, info.fam);
            auto cen = center(K);
            if (!subspace_leq(field_, cen, derived(K))) continue;
            if (cen.dim() != step) continue;
            auto ex = extract_cocycle(K);
            Family pf = family_of_table(ex.parent);
            if (pf != parent) continue;
            const auto& pctx = ctx(parent);
            std::vector<Vec<GF>> hs;
            for (auto& th : ex.thetas) hs.push_back(pctx.reduce(th));
            em.entries.push_back({AlgebraId{info.fam, std::nullopt, 0},
                                  span_vectors(field_, hs, pctx.dim_h)});
        }
        const auto& d = orbit_data(parent, step);
        for (std::size_t i = 0; i < em.entries.size(); ++i) {
            auto idx = d.index_of(em.entries[i].second);
            if (!idx) throw Error("entry_match: defining subspace not allowable");
            auto oid = d.orbit_of[*idx];
            if (em.orbit_to_entry.count(oid))
                throw Error("entry_match: two catalog entries share an orbit");
            em.orbit_to_entry[oid] = i;
        }
        if (em.orbit_to_entry.size() != d.orbits.size())
            throw Error("entry_match: catalog does not cover every orbit");
        return matches_.emplace(key, std::move(em)).first->second;
    }

    // which catalog family carries exactly this table (used to recognize
    // quotients that land on catalog parents verbatim)
    Family family_of_table(const LieAlgebra<GF>& L) {
        for (const auto& info : all_families()) {
            if (info.dim != L.n || info.dom != ParamDomain::none) continue;
            if (!char_ok(field_, info.chr)) continue;
            if (instantiate_family(field_, info.fam) == L) return info.fam;
        }
        throw Error("family_of_table: not a catalog table");
    }

private:
    GF field_;
    std::map<Family, Cohomology<GF>> ctxs_;
    std::map<std::pair<Family, int>, OrbitData> orbits_;
    std::map<std::pair<Family, int>, EntryMatch> matches_;
};

struct IdentifyResult {
    AlgebraId id;
    Mat<GF> witness; // is_isomorphism(K, instantiate_id(field, id), witness)
};

namespace identify_detail {

inline Mat<GF> blockdiag(const GF& f, const Mat<GF>& a, int m) {
    Mat<GF> r(a.rows + m, a.cols + m);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < m; ++i) r.at(a.rows + i, a.cols + i) = f.one();
    return r;
}

// functional nu with eta_nu = c (a coboundary of L), as the row of values on
// the basis
inline Vec<GF> coboundary_functional(const GF& f, const LieAlgebra<GF>& L, const Vec<GF>& c) {
    const int n = L.n, bn = pair_count(n);
    Mat<GF> m(bn, n);
    for (int t = 0; t < n; ++t)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) m.at(pair_index(n, i, j), t) = L.coef(i, j, t);
    auto x = solve(f, m, c);
    if (!x) throw Error("coboundary_functional: not a coboundary");
    return *x;
}

// the parent family whose table instantiate_id reproduces for this id
inline Family parent_family_for(const AlgebraId& pid, int dim) {
    for (const auto& info : all_families())
        if (info.dim == dim && info.split_core == pid.fam && info.split_m == pid.summands)
            return info.fam;
    throw Error("parent_family_for: no catalog family for the parent");
}

} // namespace identify_detail

inline IdentifyResult identify(Workspace& ws, const LieAlgebra<GF>& K);

namespace identify_detail {

// identify a core (C(core) <= core', dim >= 3) and return a witness onto the
// catalog table
inline IdentifyResult identify_core(Workspace& ws, const LieAlgebra<GF>& core) {
    const auto& f = ws.field();
    if (core.n == 3) {
        // the unique non-abelian nilpotent algebra of dimension 3
        int bi = -1, bj = -1;
        for (int i = 0; i < 3 && bi < 0; ++i)
            for (int j = i + 1; j < 3 && bi < 0; ++j) {
                auto w = core.bracket_basis(i, j);
                for (auto x : w)
                    if (x != 0) { bi = i; bj = j; break; }
            }
        if (bi < 0) throw Error("identify_core: abelian core");
        Mat<GF> p(3, 3);
        p.at(bi, 0) = 1;
        p.at(bj, 1) = 1;
        auto w = core.bracket_basis(bi, bj);
        for (int t = 0; t < 3; ++t) p.at(t, 2) = w[std::size_t(t)];
        auto pinv = mat_inverse(f, p);
        if (!pinv) throw Error("identify_core: degenerate 3-dimensional core");
        IdentifyResult res{AlgebraId{Family::L3_2, std::nullopt, 0}, *pinv};
        if (!is_isomorphism(core, instantiate_family(f, Family::L3_2), res.witness))
            throw Error("identify_core: dimension-3 witness failed");
        return res;
    }

    auto ex = extract_cocycle(core);
    const int d = ex.parent.n, s = int(ex.thetas.size());

    // identify the parent and move onto the catalog parent table
    auto prec = identify(ws, ex.parent);
    Family parent_fam = parent_family_for(prec.id, d);
    const auto& pctx = ws.ctx(parent_fam);
    auto pinv = mat_inverse(f, prec.witness);
    if (!pinv) throw Error("identify_core: singular parent witness");

    // theta'_i(x, y) = theta_i(P^{-1} x, P^{-1} y)
    std::vector<Vec<GF>> moved;
    for (const auto& th : ex.thetas)
        moved.push_back(act_on_cocycle(f, d, *pinv, th));

    // split each into the pinned lift plus a coboundary
    std::vector<Vec<GF>> hrows;
    Mat<GF> nu(s, d); // nu[i] = functional of the coboundary part of moved[i]
    for (int i = 0; i < s; ++i) {
        auto h = pctx.reduce(moved[std::size_t(i)]);
        auto lifted = pctx.lift(h);
        Vec<GF> resid(moved[std::size_t(i)].size());
        for (std::size_t t = 0; t < resid.size(); ++t)
            resid[t] = f.sub(moved[std::size_t(i)][t], lifted[t]);
        auto fn = coboundary_functional(f, pctx.L, resid);
        for (int t = 0; t < d; ++t) nu.at(i, t) = fn[std::size_t(t)];
        hrows.push_back(std::move(h));
    }
    auto uprime = span_vectors(f, hrows, pctx.dim_h);
    if (uprime.dim() != s) throw Error("identify_core: extracted subspace has wrong dimension");

    // locate the catalog entry in the same orbit
    const auto& data = ws.orbit_data(parent_fam, s);
    const auto& em = ws.entry_match(parent_fam, s);
    auto uidx = data.index_of(uprime);
    if (!uidx) throw Error("identify_core: extracted subspace not allowable");
    auto eit = em.orbit_to_entry.find(data.orbit_of[*uidx]);
    if (eit == em.orbit_to_entry.end()) throw Error("identify_core: no catalog entry matches");
    const auto& [entry_id, u_def] = em.entries[eit->second];
    auto aw = same_orbit(f, pctx, data, u_def, uprime);
    if (!aw) throw Error("identify_core: orbit lookup inconsistent");

    // defining cocycles of the entry and their images under the witness
    std::vector<Vec<GF>> dlift;
    if (family_info(entry_id.fam).dim == 6) {
        auto def_rows = defining_rows(f, entry_id.fam, entry_id.param);
        for (int i = 0; i < def_rows.rows; ++i) dlift.push_back(pctx.lift(def_rows.row(i)));
    } else {
        // lower-dimensional core entry: its defining cocycles are extracted
        // from the catalog table itself
        auto exd = extract_cocycle(instantiate_family(f, entry_id.fam));
        dlift = exd.thetas;
    }
    // moved defining cocycles D'_j = A^T G A and their classes
    std::vector<Vec<GF>> dmoved, dclass;
    for (const auto& dl : dlift) {
        auto dm = act_on_cocycle(f, d, *aw, dl);
        dclass.push_back(pctx.reduce(dm));
        dmoved.push_back(std::move(dm));
    }
    // mixing matrix: dclass_j = sum_i mix(i,j) hrows_i
    Mat<GF> hmat(s, pctx.dim_h);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < pctx.dim_h; ++j) hmat.at(i, j) = hrows[std::size_t(i)][std::size_t(j)];
    Mat<GF> mix(s, s);
    for (int j = 0; j < s; ++j) {
        auto x = solve(f, transpose(hmat), dclass[std::size_t(j)]);
        if (!x) throw Error("identify_core: mixing solve failed");
        for (int i = 0; i < s; ++i) mix.at(i, j) = (*x)[std::size_t(i)];
    }
    // coboundary parts mu_j of D'_j - sum_i mix(i,j) theta_red_i
    Mat<GF> mu(s, d);
    for (int j = 0; j < s; ++j) {
        Vec<GF> resid = dmoved[std::size_t(j)];
        for (int i = 0; i < s; ++i) {
            const auto c = mix.at(i, j);
            if (f.is_zero(c)) continue;
            auto lifted = pctx.lift(hrows[std::size_t(i)]);
            for (std::size_t t = 0; t < resid.size(); ++t)
                resid[t] = f.sub(resid[t], f.mul(c, lifted[t]));
        }
        auto fn = coboundary_functional(f, pctx.L, resid);
        for (int t = 0; t < d; ++t) mu.at(j, t) = fn[std::size_t(t)];
    }

    // assemble: core --T^{-1}--> Ext(parent_alg, theta)
    //   --blockdiag(P_par, I)--> Ext(cat, theta')
    //   --[I,0;-nu,I]--> Ext(cat, theta_red)
    //   --blockdiag(I, mix^T)--> Ext(cat, eta)
    //   --[I,0;mu,I]--> Ext(cat, D')
    //   --blockdiag(A, I)--> Ext(cat, D) = the catalog table
    const int n = core.n;
    auto tinv = mat_inverse(f, ex.section_basis);
    if (!tinv) throw Error("identify_core: singular section basis");
    auto m3 = blockdiag(f, prec.witness, s);
    Mat<GF> m4 = Mat<GF>::identity(f, n);
    for (int i = 0; i < s; ++i)
        for (int t = 0; t < d; ++t) m4.at(d + i, t) = f.neg(nu.at(i, t));
    Mat<GF> m5a = Mat<GF>::identity(f, n);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) m5a.at(d + i, d + j) = mix.at(j, i); // mix^T
    Mat<GF> m5b = Mat<GF>::identity(f, n);
    for (int j = 0; j < s; ++j)
        for (int t = 0; t < d; ++t) m5b.at(d + j, t) = mu.at(j, t);
    auto m6 = blockdiag(f, *aw, s);
    auto w = mat_mul(f, m6, mat_mul(f, m5b, mat_mul(f, m5a, mat_mul(f, m4, mat_mul(f, m3, *tinv)))));

    IdentifyResult res{entry_id, std::move(w)};
    if (!is_isomorphism(core, instantiate_id(f, res.id), res.witness))
        throw Error("identify_core: assembled witness failed verification");
    return res;
}

} // namespace identify_detail

inline IdentifyResult identify(Workspace& ws, const LieAlgebra<GF>& K) {
    const auto& f = ws.field();
    if (f.q() > 5) throw UnsupportedFieldError("identify: full identification requires q <= 5");
    if (K.n > 6) throw DomainError("identify: dimension above 6");
    if (K.n < 1) throw DomainError("identify: empty algebra");
    if (!nilpotency_class(K)) throw NotNilpotentError("identify: not nilpotent");

    auto sp = split_abelian_summand(K);
    auto binv = mat_inverse(f, sp.basis);
    if (!binv) throw Error("identify: singular split basis");

    if (sp.core.n == 0) {
        // abelian: the 1-dimensional algebra plus summands
        IdentifyResult res{AlgebraId{Family::L1_1, std::nullopt, K.n - 1},
                           Mat<GF>::identity(f, K.n)};
        return res;
    }
    auto cres = identify_detail::identify_core(ws, sp.core);
    IdentifyResult res{AlgebraId{cres.id.fam, cres.id.param, cres.id.summands + sp.summands},
                       mat_mul(f, identify_detail::blockdiag(f, cres.witness, sp.summands), *binv)};
    if (!is_isomorphism(K, instantiate_id(f, res.id), res.witness))
        throw Error("identify: witness failed verification");
    return res;
}

// partial identification over the rationals: fingerprint plus the families
// whose fingerprints agree (parametric families sampled at 0 and 1)
struct PartialId {
    Fingerprint fp;
    std::vector<std::string> candidates;
};

template <class F> PartialId identify_partial(const F& q, const LieAlgebra<F>& K) {
    if (!nilpotency_class(K)) throw NotNilpotentError("identify: not nilpotent");
    PartialId out;
    out.fp = fingerprint(K);
    auto consider = [&](const std::string& name, const LieAlgebra<F>& L) {
        if (L.n == K.n && fingerprint(L) == out.fp) out.candidates.push_back(name);
    };
    for (const auto& info : all_families()) {
        if (!char_ok(q, info.chr)) continue;
        const int extra = K.n - info.dim;
        if (extra < 0) continue;
        if (info.split_m != 0) continue;
        std::string base = info.name;
        if (extra > 0) base += extra == 1 ? "+F" : "+F^" + std::to_string(extra);
        if (info.dom == ParamDomain::none) {
            consider(base, direct_sum_abelian(instantiate_family(q, info.fam), extra));
        } else {
            std::vector<typename F::Elem> samples{q.one()};
            if (info.dom != ParamDomain::star_units) samples.push_back(q.zero());
            for (auto& eps : samples)
                consider(base + "(" + (q.is_zero(eps) ? std::string("0") : std::string("e")) + ")",
                         direct_sum_abelian(instantiate_family(q, info.fam, eps), extra));
        }
    }
    return out;
}

// isomorphism test routed through identification
inline std::optional<Mat<GF>> isomorphic(Workspace& ws, const LieAlgebra<GF>& k1,
                                         const LieAlgebra<GF>& k2) {
    const auto& f = ws.field();
    if (k1.n != k2.n) return std::nullopt;
    if (fingerprint(k1) != fingerprint(k2)) return std::nullopt;
    auto r1 = identify(ws, k1);
    auto r2 = identify(ws, k2);
    if (!(r1.id == r2.id)) return std::nullopt;
    auto inv2 = mat_inverse(f, r2.witness);
    if (!inv2) throw Error("isomorphic: singular witness");
    auto w = mat_mul(f, *inv2, r1.witness);
    if (!is_isomorphism(k1, k2, w)) throw Error("isomorphic: composed witness failed");
    return w;
}

// the descendant table of one parent, cross-validated against the computed
// orbit partition
struct DescendantReport {
    Family parent{};
    int step = 0;
    std::vector<std::pair<AlgebraId, Subspace<GF>>> claimed;
    std::uint64_t allowable_count = 0;
    std::size_t orbit_count = 0;
    bool counts_match = false;
    bool reps_match = false;
};

inline DescendantReport descendant_table(Workspace& ws, Family parent, int step) {
    DescendantReport rep;
    rep.parent = parent;
    rep.step = step;
    const auto& f = ws.field();
    for (auto& [id, rows] : claimed_descendants(f, parent, step))
        rep.claimed.push_back({id, span(f, rows)});
    const auto& d = ws.orbit_data(parent, step);
    rep.allowable_count = d.nodes.size();
    rep.orbit_count = d.orbits.size();
    rep.counts_match = rep.claimed.size() == rep.orbit_count;
    rep.reps_match = true;
    std::vector<bool> hit(d.orbits.size(), false);
    for (auto& [id, u] : rep.claimed) {
        auto idx = d.index_of(u);
        if (!idx) { rep.reps_match = false; continue; }
        auto oid = d.orbit_of[*idx];
        if (hit[oid]) rep.reps_match = false;
        hit[oid] = true;
    }
    for (std::size_t i = 0; i < hit.size(); ++i) rep.reps_match = rep.reps_match && hit[i];
    return rep;
}

} // namespace nilcat
