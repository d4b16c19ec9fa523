#include <catch2/catch_amalgamated.hpp>

#include "nilcat/catalog.hpp"

using namespace nilcat;

TEST_CASE("catalog counts match the counting formula") {
    struct Row {
        unsigned p, k;
        std::size_t expect;
    };
    for (auto [p, k, expect] : {Row{2, 1, 36}, Row{3, 1, 34}, Row{2, 2, 36}, Row{5, 1, 34},
                                Row{7, 1, 34}, Row{2, 3, 36}, Row{3, 2, 34}}) {
        auto f = gf(p, k);
        CHECK(list_catalog(f, 6).size() == expect);
        CHECK(count_formula(f).total.value == expect);
    }
    CHECK_FALSE(count_formula(QQ{}).total.finite);

    auto f2 = gf(2);
    CHECK(list_catalog(f2, 1).size() == 1);
    CHECK(list_catalog(f2, 2).size() == 1);
    CHECK(list_catalog(f2, 3).size() == 2);
    CHECK(list_catalog(f2, 4).size() == 3);
    CHECK(list_catalog(f2, 5).size() == 9);
    QQ q;
    CHECK(list_catalog(q, 5).size() == 9);
    CHECK(list_catalog(q, 4).size() == 3);
    CHECK_THROWS_AS(list_catalog(q, 6), CatalogUnavailable);
}

TEST_CASE("every catalog algebra is nilpotent of the right dimension") {
    for (auto& f : {gf(2), gf(3), gf(2, 2), gf(5)}) {
        for (int dim = 1; dim <= 6; ++dim)
            for (const auto& e : list_catalog(f, dim)) {
                CHECK(e.algebra.n == dim);
                CHECK(id_dim(e.id) == dim);
                CHECK(nilpotency_class(e.algebra));
            }
    }
}

TEST_CASE("label formatting") {
    auto f2 = gf(2);
    CHECK(id_to_string(AlgebraId{Family::L6_19, GF::Elem(1), 0}, &f2) == "L6_19(1)");
    CHECK(id_to_string(AlgebraId{Family::L5_4, std::nullopt, 1}) == "L5_4+F");
    CHECK(id_to_string(AlgebraId{Family::L1_1, std::nullopt, 5}) == "L1_1+F^5");
    CHECK(id_to_string(AlgebraId{Family::L6_8c2, GF::Elem(1), 0}, &f2) == "L6_8^2(1)");
    CHECK(classical_alias(AlgebraId{Family::L3_2, std::nullopt, 3}) ==
          std::optional<std::string>("L6_2"));
    CHECK(family_by_name("L6_3^2") == Family::L6_3c2);
    CHECK_FALSE(family_by_name("L9_1"));
}

TEST_CASE("instantiation validates domains and characteristics") {
    auto f5 = gf(5);
    // the table of the step-1 descendant of L_{5,2}: three brackets
    auto k = instantiate_family(f5, Family::L6_10);
    CHECK(k.coef(0, 1, 2) == 1);
    CHECK(k.coef(0, 2, 5) == 1);
    CHECK(k.coef(3, 4, 5) == 1);

    CHECK_THROWS_AS(instantiate_family(f5, Family::L6_19, GF::Elem(0)), DomainError);
    CHECK_THROWS_AS(instantiate_family(f5, Family::L6_19), DomainError);
    CHECK_THROWS_AS(instantiate_family(f5, Family::L6_10, GF::Elem(1)), DomainError);
    CHECK_THROWS_AS(instantiate_family(f5, Family::L6_5c2), DomainError);  // char 2 only
    CHECK_THROWS_AS(instantiate_family(gf(2), Family::L6_14), DomainError); // char != 2 only

    // eta ranges over {0, omega} only
    auto f4 = gf(2, 2);
    CHECK_THROWS_AS(instantiate_family(f4, Family::L6_7c2, GF::Elem(1)), DomainError);
    CHECK(instantiate_family(f4, Family::L6_7c2, omega(f4)).n == 6);
}

TEST_CASE("parameter normalization") {
    auto f5 = gf(5);
    CHECK(normalize_parameter(f5, Family::L6_19, 4) == 1);
    CHECK(normalize_parameter(f5, Family::L6_22, 0) == 0);
    CHECK(normalize_parameter(f5, Family::L6_22, 3) == 2); // 3 = 2^2*2 mod 5
    auto f2 = gf(2);
    CHECK(normalize_parameter(f2, Family::L6_3c2, 1) == 0);
    CHECK(normalize_parameter(f2, Family::L6_7c2, 1) == 1); // omega over GF(2)
    auto f4 = gf(2, 2);
    CHECK(normalize_parameter(f4, Family::L6_7c2, omega(f4)) == omega(f4));
}

TEST_CASE("parameter laws hold exhaustively over small fields") {
    // instantiate(family, e) isomorphic to instantiate(family, v) iff the
    // family relation holds; checked here at the defining-subspace level and
    // at the algebra level in the identify suite
    for (auto& f : {gf(2), gf(3), gf(5)}) {
        for (const auto& info : all_families()) {
            if (info.dom == ParamDomain::none || !char_ok(f, info.chr)) continue;
            auto vals = domain_values(f, info.dom);
            for (std::size_t a = 0; a < vals.size(); ++a)
                for (std::size_t b = 0; b < vals.size(); ++b)
                    // transversal members are pairwise inequivalent
                    CHECK((normalize_parameter(f, info.fam, vals[a]) ==
                           normalize_parameter(f, info.fam, vals[b])) == (a == b));
        }
    }
}
