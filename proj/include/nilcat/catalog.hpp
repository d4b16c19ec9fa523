// catalog.hpp -- the classification database: structure constant templates
// for every nilpotent Lie algebra family of dimension <= 6, parameter
// domains, parent/defining-subspace metadata for the 6-dimensional
// descendants, pinned H^2 bases for the parents, counting formulas, and
// instantiation.
//
// Family ids follow the L_{d,k} naming; "c2" suffixed families exist only in
// characteristic 2.  Classification labels (AlgebraId) are kept in fully
// split canonical form: an algebra with abelian direct summands is reported
// as core + F^m, e.g. the classical L_{5,2} is L3_2+F^2.

#pragma once

#include <array>
#include <map>

#include "nilcat/cohomology.hpp"

namespace nilcat {

enum class Family : std::uint8_t {
    L1_1, L2_1, L3_1, L3_2, L4_1, L4_2, L4_3,
    L5_1, L5_2, L5_3, L5_4, L5_5, L5_6, L5_7, L5_8, L5_9,
    L6_10, L6_11, L6_12, L6_13, L6_14, L6_15, L6_16, L6_17, L6_18,
    L6_19, L6_20, L6_21, L6_22, L6_23, L6_24, L6_25, L6_26, L6_27, L6_28,
    L6_1c2, L6_2c2, L6_3c2, L6_4c2, L6_5c2, L6_6c2, L6_7c2, L6_8c2,
};

enum class ParamDomain : std::uint8_t {
    none,
    star_units,    // F* / (~*)
    star_all,      // F / (~*)
    star_plus,     // F / (~*+), characteristic 2
    omega_pair,    // {0, omega}, characteristic 2
    star_all_char, // F/(~*) if char != 2, F/(~*+) if char = 2
};

enum class CharConstraint : std::uint8_t { any, not2, only2 };

struct Lin { // c0 + c1 * eps
    int c0 = 0, c1 = 0;
};

struct BracketTpl {
    int i, j, k; // 1-based, i < j
    Lin c;
};

struct FamilyInfo {
    Family fam{};
    const char* name = "";
    int dim = 0;
    CharConstraint chr = CharConstraint::any;
    ParamDomain dom = ParamDomain::none;
    std::vector<BracketTpl> brackets;
    // descendant metadata (dim-6 families only)
    std::optional<Family> parent;
    int step = 0;
    std::vector<std::vector<Lin>> defining; // rows in the parent's H^2 coordinates
    // parent metadata (dims 3..5): pinned H^2 basis rows over Delta coordinates
    std::vector<std::vector<int>> h_basis;
    // split normalization: this family equals split_core + F^split_m
    Family split_core{};
    int split_m = 0;
};

namespace catalog_detail {

inline std::vector<FamilyInfo> build_families() {
    using F = Family;
    std::vector<FamilyInfo> v;
    auto add = [&](FamilyInfo info) { v.push_back(std::move(info)); };
    auto B = [](int i, int j, int k, int c0 = 1, int c1 = 0) { return BracketTpl{i, j, k, {c0, c1}}; };

    // --- dimensions 1..5 -------------------------------------------------
    add({F::L1_1, "L1_1", 1, CharConstraint::any, ParamDomain::none, {}, {}, 0, {}, {}, F::L1_1, 0});
    add({F::L2_1, "L2_1", 2, CharConstraint::any, ParamDomain::none, {}, {}, 0, {}, {}, F::L1_1, 1});
    add({F::L3_1, "L3_1", 3, CharConstraint::any, ParamDomain::none, {}, {}, 0, {},
         {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, F::L1_1, 2});
    add({F::L3_2, "L3_2", 3, CharConstraint::any, ParamDomain::none, {B(1, 2, 3)}, {}, 0, {},
         {{0, 1, 0}, {0, 0, 1}}, F::L3_2, 0});
    add({F::L4_1, "L4_1", 4, CharConstraint::any, ParamDomain::none, {}, {}, 0, {},
         {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
          {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}},
         F::L1_1, 3});
    add({F::L4_2, "L4_2", 4, CharConstraint::any, ParamDomain::none, {B(1, 2, 3)}, {}, 0, {},
         {{0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}},
         F::L3_2, 1});
    add({F::L4_3, "L4_3", 4, CharConstraint::any, ParamDomain::none, {B(1, 2, 3), B(1, 3, 4)}, {}, 0, {},
         {{0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}}, F::L4_3, 0});
    add({F::L5_1, "L5_1", 5, CharConstraint::any, ParamDomain::none, {}, {}, 0, {}, {}, F::L1_1, 4});
    // Delta pair order for n=5: 12,13,14,15,23,24,25,34,35,45
    add({F::L5_2, "L5_2", 5, CharConstraint::any, ParamDomain::none, {B(1, 2, 3)}, {}, 0, {},
         {{0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
         F::L3_2, 2});
    add({F::L5_3, "L5_3", 5, CharConstraint::any, ParamDomain::none, {B(1, 2, 3), B(1, 3, 4)}, {}, 0, {},
         {{0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 1, 0, 0, 0}},
         F::L4_3, 1});
    add({F::L5_4, "L5_4", 5, CharConstraint::any, ParamDomain::none, {B(1, 2, 5), B(3, 4, 5)}, {}, 0, {},
         {{0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 1, 0, 0}},
         F::L5_4, 0});
    add({F::L5_5, "L5_5", 5, CharConstraint::any, ParamDomain::none,
         {B(1, 2, 3), B(1, 3, 5), B(2, 4, 5)}, {}, 0, {},
         {{0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 1, 0, 0, 0, 1, 0, 0},
          {0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 1, 0, 0, 0, 0}},
         F::L5_5, 0});
    add({F::L5_6, "L5_6", 5, CharConstraint::any, ParamDomain::none,
         {B(1, 2, 3), B(1, 3, 4), B(1, 4, 5), B(2, 3, 5)}, {}, 0, {},
         {{0, 0, 0, 1, 0, 1, 0, 0, 0, 0},
          {0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 1, -1, 0, 0}},
         F::L5_6, 0});
    add({F::L5_7, "L5_7", 5, CharConstraint::any, ParamDomain::none,
         {B(1, 2, 3), B(1, 3, 4), B(1, 4, 5)}, {}, 0, {},
         {{0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 1, -1, 0, 0}},
         F::L5_7, 0});
    add({F::L5_8, "L5_8", 5, CharConstraint::any, ParamDomain::none, {B(1, 2, 4), B(1, 3, 5)}, {}, 0, {},
         {{0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 1, 1, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 1, 0}},
         F::L5_8, 0});
    add({F::L5_9, "L5_9", 5, CharConstraint::any, ParamDomain::none,
         {B(1, 2, 3), B(1, 3, 4), B(2, 3, 5)}, {}, 0, {},
         {{0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 1, 0, 1, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 1, 0, 0, 0}},
         F::L5_9, 0});

    // --- dimension 6 descendants ----------------------------------------
    auto add6 = [&](Family fam, const char* name, CharConstraint chr, ParamDomain dom,
                    std::vector<BracketTpl> br, Family parent, int step,
                    std::vector<std::vector<Lin>> def) {
        FamilyInfo info;
        info.fam = fam;
        info.name = name;
        info.dim = 6;
        info.chr = chr;
        info.dom = dom;
        info.brackets = std::move(br);
        info.parent = parent;
        info.step = step;
        info.defining = std::move(def);
        info.split_core = fam;
        info.split_m = 0;
        v.push_back(std::move(info));
    };
    const Lin O{0, 0}, I{1, 0}, E{0, 1};

    add6(F::L6_10, "L6_10", CharConstraint::any, ParamDomain::none,
         {B(1, 2, 3), B(1, 3, 6), B(4, 5, 6)}, F::L5_2, 1, {{I, O, O, O, O, O, I}});
    add6(F::L6_11, "L6_11", CharConstraint::any, ParamDomain::none,
         {B(1, 2, 3), B(1, 3, 4), B(1, 4, 6), B(2, 3, 6), B(2, 5, 6)}, F::L5_3, 1,
         {{I, O, I, I}});
    add6(F::L6_12, "L6_12", CharConstraint::any, ParamDomain::none,
         {B(1, 2, 3), B(1, 3, 4), B(1, 4, 6), B(2, 5, 6)}, F::L5_3, 1, {{I, O, O, I}});
    add6(F::L6_13, "L6_13", CharConstraint::any, ParamDomain::none,
         {B(1, 2, 3), B(1, 3, 5), B(1, 5, 6), B(2, 4, 5), B(3, 4, 6)}, F::L5_5, 1,
         {{O, I, O, O}});
    add6(F::L6_14, "L6_14", CharConstraint::not2, ParamDomain::none,
         {B(1, 2, 3), B(1, 3, 4), B(1, 4, 5), B(2, 3, 5), B(2, 5, 6), B(3, 4, 6, -1)}, F::L5_6, 1,
         {{O, O, I}});
    add6(F::L6_15, "L6_15", CharConstraint::any, ParamDomain::none,
         {B(1, 2, 3), B(1, 3, 4), B(1, 4, 5), B(1, 5, 6), B(2, 3, 5), B(2, 4, 6)}, F::L5_6, 1,
         {{I, O, O}});
    add6(F::L6_16, "L6_16", CharConstraint::not2, ParamDomain::none,
         {B(1, 2, 3), B(1, 3, 4), B(1, 4, 5), B(2, 5, 6), B(3, 4, 6, -1)}, F::L5_7, 1,
         {{O, O, I}});
    add6(F::L6_17, "L6_17", CharConstraint::any, ParamDomain::none,
         {B(1, 2, 3), B(1, 3, 4), B(1, 4, 5), B(1, 5, 6), B(2, 3, 6)}, F::L5_7, 1, {{I, I, O}});
    add6(F::L6_18, "L6_18", CharConstraint::any, ParamDomain::none,
         {B(1, 2, 3), B(1, 3, 4), B(1, 4, 5), B(1, 5, 6)}, F::L5_7, 1, {{I, O, O}});
    add6(F::L6_19, "L6_19", CharConstraint::any, ParamDomain::star_units,
         {B(1, 2, 4), B(1, 3, 5), B(1, 5, 6), B(2, 4, 6), B(3, 5, 6, 0, 1)}, F::L5_8, 1,
         {{O, I, O, I, O, E}});
    add6(F::L6_20, "L6_20", CharConstraint::any, ParamDomain::none,
         {B(1, 2, 4), B(1, 3, 5), B(1, 5, 6), B(2, 4, 6)}, F::L5_8, 1, {{O, I, O, I, O, O}});
    add6(F::L6_21, "L6_21", CharConstraint::any, ParamDomain::star_units,
         {B(1, 2, 3), B(1, 3, 4), B(1, 4, 6), B(2, 3, 5), B(2, 5, 6, 0, 1)}, F::L5_9, 1,
         {{I, O, E}});
    add6(F::L6_22, "L6_22", CharConstraint::any, ParamDomain::star_all_char,
         {B(1, 2, 5), B(1, 3, 6), B(2, 4, 6, 0, 1), B(3, 4, 5)}, F::L4_1, 2,
         {{I, O, O, O, O, I}, {O, I, O, O, E, O}});
    add6(F::L6_23, "L6_23", CharConstraint::any, ParamDomain::none,
         {B(1, 2, 3), B(1, 3, 5), B(1, 4, 6), B(2, 4, 5)}, F::L4_2, 2,
         {{I, O, O, I}, {O, I, O, O}});
    add6(F::L6_24, "L6_24", CharConstraint::any, ParamDomain::star_all_char,
         {B(1, 2, 3), B(1, 3, 5), B(1, 4, 6, 0, 1), B(2, 3, 6), B(2, 4, 5)}, F::L4_2, 2,
         {{I, O, O, I}, {O, E, I, O}});
    add6(F::L6_25, "L6_25", CharConstraint::any, ParamDomain::none,
         {B(1, 2, 3), B(1, 3, 5), B(1, 4, 6)}, F::L4_2, 2, {{I, O, O, O}, {O, I, O, O}});
    add6(F::L6_26, "L6_26", CharConstraint::any, ParamDomain::none,
         {B(1, 2, 4), B(1, 3, 5), B(2, 3, 6)}, F::L3_1, 3,
         {{I, O, O}, {O, I, O}, {O, O, I}});
    add6(F::L6_27, "L6_27", CharConstraint::any, ParamDomain::none,
         {B(1, 2, 3), B(1, 3, 5), B(2, 4, 6)}, F::L4_2, 2, {{I, O, O, O}, {O, O, O, I}});
    add6(F::L6_28, "L6_28", CharConstraint::any, ParamDomain::none,
         {B(1, 2, 3), B(1, 3, 4), B(1, 4, 5), B(2, 3, 6)}, F::L4_3, 2, {{I, O}, {O, I}});

    add6(F::L6_1c2, "L6_1^2", CharConstraint::only2, ParamDomain::none,
         {B(1, 2, 3), B(1, 3, 5), B(1, 5, 6), B(2, 4, 5), B(2, 4, 6), B(3, 4, 6)}, F::L5_5, 1,
         {{O, I, O, I}});
    add6(F::L6_2c2, "L6_2^2", CharConstraint::only2, ParamDomain::none,
         {B(1, 2, 3), B(1, 3, 4), B(1, 4, 5), B(1, 5, 6), B(2, 3, 5), B(2, 3, 6), B(2, 4, 6)},
         F::L5_6, 1, {{I, I, O}});
    add6(F::L6_3c2, "L6_3^2", CharConstraint::only2, ParamDomain::star_plus,
         {B(1, 2, 3), B(1, 3, 4), B(1, 4, 5), B(2, 3, 5), B(2, 3, 6, 0, 1), B(2, 5, 6), B(3, 4, 6)},
         F::L5_6, 1, {{O, E, I}});
    add6(F::L6_4c2, "L6_4^2", CharConstraint::only2, ParamDomain::star_plus,
         {B(1, 2, 3), B(1, 3, 4), B(1, 4, 5), B(2, 3, 6, 0, 1), B(2, 5, 6), B(3, 4, 6)}, F::L5_7, 1,
         {{O, E, I}});
    add6(F::L6_5c2, "L6_5^2", CharConstraint::only2, ParamDomain::none,
         {B(1, 2, 4), B(1, 3, 5), B(2, 5, 6), B(3, 4, 6)}, F::L5_8, 1, {{O, O, O, O, I, O}});
    add6(F::L6_6c2, "L6_6^2", CharConstraint::only2, ParamDomain::none,
         {B(1, 2, 3), B(1, 3, 4), B(1, 5, 6), B(2, 3, 5), B(2, 4, 6)}, F::L5_9, 1, {{O, I, O}});
    add6(F::L6_7c2, "L6_7^2", CharConstraint::only2, ParamDomain::omega_pair,
         {B(1, 2, 5), B(1, 3, 6), B(2, 4, 6, 0, 1), B(3, 4, 5), B(3, 4, 6)}, F::L4_1, 2,
         {{I, O, O, O, O, I}, {O, I, O, O, E, I}});
    add6(F::L6_8c2, "L6_8^2", CharConstraint::only2, ParamDomain::omega_pair,
         {B(1, 2, 3), B(1, 3, 5), B(1, 4, 6, 0, 1), B(2, 3, 6), B(2, 4, 5), B(2, 4, 6)}, F::L4_2, 2,
         {{I, O, O, I}, {O, E, I, I}});

    return v;
}

} // namespace catalog_detail

inline const std::vector<FamilyInfo>& all_families() {
    static const std::vector<FamilyInfo> fams = catalog_detail::build_families();
    return fams;
}

inline const FamilyInfo& family_info(Family f) {
    for (const auto& info : all_families())
        if (info.fam == f) return info;
    throw Error("family_info: unknown family");
}

inline std::optional<Family> family_by_name(const std::string& name) {
    for (const auto& info : all_families())
        if (name == info.name) return info.fam;
    return std::nullopt;
}

template <class F> bool char_ok(const F& f, CharConstraint c) {
    switch (c) {
        case CharConstraint::any: return true;
        case CharConstraint::not2: return f.characteristic() != 2;
        case CharConstraint::only2: return f.characteristic() == 2;
    }
    return false;
}

// classification label: family, optional parameter, trailing + F^summands
struct AlgebraId {
    Family fam{};
    std::optional<GF::Elem> param;
    int summands = 0;
    bool operator==(const AlgebraId&) const = default;
};

inline int id_dim(const AlgebraId& id) { return family_info(id.fam).dim + id.summands; }

inline std::string id_to_string(const AlgebraId& id, const GF* field = nullptr) {
    std::string s = family_info(id.fam).name;
    if (id.param) {
        s += "(";
        s += field ? field->to_string(*id.param) : std::to_string(unsigned(*id.param));
        s += ")";
    }
    if (id.summands == 1) s += "+F";
    else if (id.summands > 1) s += "+F^" + std::to_string(id.summands);
    return s;
}

// classical name for split algebras (L_{5,2} = L3_2+F^2 etc.)
inline std::optional<std::string> classical_alias(const AlgebraId& id) {
    if (id.summands == 0 || id.param) return std::nullopt;
    const int d = id_dim(id);
    if (id.fam == Family::L1_1) {
        if (d >= 2 && d <= 5) return "L" + std::to_string(d) + "_1";
        if (d == 6) return "L6_1";
    }
    if (id.fam == Family::L3_2) {
        if (d == 4) return "L4_2";
        if (d == 5) return "L5_2";
        if (d == 6) return "L6_2";
    }
    if (id.fam == Family::L4_3) {
        if (d == 5) return "L5_3";
        if (d == 6) return "L6_3";
    }
    if (family_info(id.fam).dim == 5 && d == 6) {
        std::string n = family_info(id.fam).name; // L5_k + F = L6_k
        return "L6_" + n.substr(3);
    }
    return std::nullopt;
}

// fully split canonical form of (fam, param, summands)
inline AlgebraId canonical_id(Family fam, std::optional<GF::Elem> param, int summands) {
    const auto& info = family_info(fam);
    return AlgebraId{info.split_core, param, summands + info.split_m};
}

// parameter domain values over a finite field, in enumeration order
inline std::vector<GF::Elem> domain_values(const GF& f, ParamDomain dom) {
    switch (dom) {
        case ParamDomain::none: return {};
        case ParamDomain::star_units: {
            auto t = square_class_transversal(f);
            return {t.begin() + 1, t.end()};
        }
        case ParamDomain::star_all: return square_class_transversal(f);
        case ParamDomain::star_plus: return star_plus_transversal(f);
        case ParamDomain::omega_pair: return {0, omega(f)};
        case ParamDomain::star_all_char:
            return f.characteristic() == 2 ? star_plus_transversal(f) : square_class_transversal(f);
    }
    return {};
}

// is eps in the family's raw domain (not necessarily canonical)
inline bool param_in_domain(const GF& f, ParamDomain dom, GF::Elem eps) {
    switch (dom) {
        case ParamDomain::none: return false;
        case ParamDomain::star_units: return eps != 0;
        case ParamDomain::star_all:
        case ParamDomain::star_plus:
        case ParamDomain::star_all_char: return true;
        case ParamDomain::omega_pair: return eps == 0 || eps == omega(f);
    }
    return false;
}

// canonical transversal representative equivalent to eps under the family's relation
inline GF::Elem normalize_parameter(const GF& f, Family fam, GF::Elem eps) {
    const auto& info = family_info(fam);
    if (!param_in_domain(f, info.dom, eps)) throw DomainError("normalize_parameter: outside domain");
    ParamDomain dom = info.dom;
    if (dom == ParamDomain::star_all_char)
        dom = f.characteristic() == 2 ? ParamDomain::star_plus : ParamDomain::star_all;
    switch (dom) {
        case ParamDomain::star_units:
        case ParamDomain::star_all:
            for (auto r : domain_values(f, dom))
                if (same_class(f, Rel::star, eps, r)) return r;
            break;
        case ParamDomain::star_plus:
            for (auto r : domain_values(f, dom))
                if (same_class(f, Rel::star_plus, eps, r)) return r;
            break;
        case ParamDomain::omega_pair: {
            // classes of {0, omega} modulo psi(F)
            auto img = psi_image(f);
            for (auto x : img)
                if (x == eps) return 0;
            return omega(f);
        }
        default: break;
    }
    throw Error("normalize_parameter: no representative found");
}

// instantiate a family's structure constant template
template <class F>
LieAlgebra<F> instantiate_family(const F& f, Family fam,
                                 std::optional<typename F::Elem> param = std::nullopt) {
    const auto& info = family_info(fam);
    if (!char_ok(f, info.chr)) throw DomainError(std::string("family ") + info.name + ": characteristic constraint violated");
    if (info.dom == ParamDomain::none) {
        if (param) throw DomainError(std::string("family ") + info.name + " takes no parameter");
    } else {
        if (!param) throw DomainError(std::string("family ") + info.name + " requires a parameter");
        if constexpr (std::is_same_v<F, GF>) {
            if (!param_in_domain(f, info.dom, *param))
                throw DomainError(std::string("family ") + info.name + ": parameter outside domain");
        } else {
            if (info.dom == ParamDomain::star_units && f.is_zero(*param))
                throw DomainError(std::string("family ") + info.name + ": parameter outside domain");
        }
    }
    std::vector<std::tuple<int, int, int, typename F::Elem>> entries;
    for (const auto& b : info.brackets) {
        auto cval = f.from_int(b.c.c0);
        if (b.c.c1 != 0) {
            auto pv = f.mul(f.from_int(b.c.c1), *param);
            cval = f.add(cval, pv);
        }
        if (!f.is_zero(cval)) entries.push_back({b.i, b.j, b.k, cval});
    }
    return lie_from_table_elems(f, info.dim, entries);
}

// instantiate a classification label (family template + trailing abelian part)
template <class F> LieAlgebra<F> instantiate_id(const F& f, const AlgebraId& id) {
    std::optional<typename F::Elem> p;
    if (id.param) {
        if constexpr (std::is_same_v<F, GF>) p = *id.param;
        else throw DomainError("instantiate_id: parametric id over Q");
    }
    return direct_sum_abelian(instantiate_family(f, id.fam, p), id.summands);
}

struct CountFormula {
    Cardinal total;       // finite count when computable
    std::string symbolic; // e.g. "26+4s"
};

// Number of isomorphism types in dimension 6: 26+4s away from characteristic
// 2 and 30+2s+4t in characteristic 2.
template <class F> CountFormula count_formula(const F& f) {
    if constexpr (F::finite()) {
        auto s = s_param(f).value;
        if (f.characteristic() == 2) {
            auto t = t_param(f).value;
            return {{true, 30 + 2 * s + 4 * t}, "30+2s+4t"};
        }
        return {{true, 26 + 4 * s}, "26+4s"};
    } else {
        return {Cardinal::inf(), "26+4s (s infinite over Q)"};
    }
}

struct CatalogUnavailable : Error {
    std::vector<std::string> symbolic_families;
    explicit CatalogUnavailable(std::vector<std::string> fams)
        : Error("dimension-6 catalog over Q has infinite parametric families"),
          symbolic_families(std::move(fams)) {}
};

inline const std::array<Family, 9>& five_dim_order() {
    static const std::array<Family, 9> order{Family::L5_1, Family::L5_2, Family::L5_3,
                                             Family::L5_4, Family::L5_5, Family::L5_6,
                                             Family::L5_7, Family::L5_8, Family::L5_9};
    return order;
}

template <class F> struct CatalogEntry {
    AlgebraId id;
    LieAlgebra<F> algebra;
};

// the complete, irredundant list for one dimension over one field
template <class F> std::vector<CatalogEntry<F>> list_catalog(const F& f, int dim) {
    if (dim < 1 || dim > 6) throw DomainError("list_catalog: dimension must be 1..6");
    std::vector<CatalogEntry<F>> out;
    auto push = [&](AlgebraId id) { out.push_back({id, instantiate_id(f, id)}); };
    if (dim < 6) {
        std::vector<Family> base;
        switch (dim) {
            case 1: base = {Family::L1_1}; break;
            case 2: base = {Family::L2_1}; break;
            case 3: base = {Family::L3_1, Family::L3_2}; break;
            case 4: base = {Family::L4_1, Family::L4_2, Family::L4_3}; break;
            case 5: base.assign(five_dim_order().begin(), five_dim_order().end()); break;
        }
        for (auto fam : base) push(canonical_id(fam, std::nullopt, 0));
        return out;
    }
    if constexpr (!F::finite()) {
        std::vector<std::string> syms;
        for (const auto& info : all_families())
            if (info.dim == 6) syms.push_back(info.name);
        for (auto fam : five_dim_order()) syms.push_back(std::string(family_info(fam).name) + "+F");
        throw CatalogUnavailable(std::move(syms));
    } else {
        for (auto fam : five_dim_order()) push(canonical_id(fam, std::nullopt, 1));
        for (const auto& info : all_families()) {
            if (info.dim != 6 || !char_ok(f, info.chr)) continue;
            if (info.dom == ParamDomain::none) {
                push(AlgebraId{info.fam, std::nullopt, 0});
            } else {
                for (auto eps : domain_values(f, info.dom)) push(AlgebraId{info.fam, eps, 0});
            }
        }
        return out;
    }
}

// pinned cohomology context of a parent family (published H^2 basis)
template <class F> Cohomology<F> parent_cohomology(const F& f, Family fam) {
    const auto& info = family_info(fam);
    auto L = instantiate_family(f, fam);
    if (info.h_basis.empty()) return make_cohomology(L);
    Mat<F> h(int(info.h_basis.size()), pair_count(info.dim));
    for (int i = 0; i < h.rows; ++i)
        for (int j = 0; j < h.cols; ++j) h.at(i, j) = f.from_int(info.h_basis[std::size_t(i)][std::size_t(j)]);
    return make_cohomology(L, h);
}

// the defining subspace rows of a descendant entry at a parameter value
inline Mat<GF> defining_rows(const GF& f, Family fam, std::optional<GF::Elem> eps) {
    const auto& info = family_info(fam);
    if (!info.parent) throw DomainError("defining_rows: not a descendant family");
    const int dim_h = int(family_info(*info.parent).h_basis.size());
    Mat<GF> m(int(info.defining.size()), dim_h);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            const Lin& l = info.defining[std::size_t(i)][std::size_t(j)];
            auto v = f.from_int(l.c0);
            if (l.c1 != 0) v = f.add(v, f.mul(f.from_int(l.c1), *eps));
            m.at(i, j) = v;
        }
    return m;
}

// catalog-claimed descendant list of a parent over f, at the natural step
inline std::vector<std::pair<AlgebraId, Mat<GF>>> claimed_descendants(const GF& f, Family parent,
                                                                      int step) {
    std::vector<std::pair<AlgebraId, Mat<GF>>> out;
    for (const auto& info : all_families()) {
        if (info.dim != 6 || !info.parent || *info.parent != parent || info.step != step) continue;
        if (!char_ok(f, info.chr)) continue;
        if (info.dom == ParamDomain::none) {
            out.push_back({AlgebraId{info.fam, std::nullopt, 0}, defining_rows(f, info.fam, std::nullopt)});
        } else {
            for (auto eps : domain_values(f, info.dom))
                out.push_back({AlgebraId{info.fam, eps, 0}, defining_rows(f, info.fam, eps)});
        }
    }
    return out;
}

} // namespace nilcat
