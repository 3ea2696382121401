#include <doctest.h>

#include "mcg/lefschetz.hpp"

using namespace mcg;

TEST_CASE("critical count formula") {
    CHECK(critical_count(2, 1, 0, 1) == 10);
    CHECK(critical_count(2, 1, -1, 1) == 50);
    CHECK(critical_count(3, 2, 0, 2) == 224);
    CHECK(critical_count(2, 2, 0, 1) == 100);
    CHECK_THROWS_AS(critical_count(2, 1, 1, 1), std::domain_error);
}

TEST_CASE("euler characteristic of closed fibrations") {
    LefschetzFibration f;
    f.fiber_genus = 2;
    f.base_genus = 1;
    f.vanishing_cycles.assign(10, VanishingCycle{"c1", std::nullopt});
    CHECK(euler_characteristic(f) == 10);

    LefschetzFibration bundle;
    bundle.fiber_genus = 2;
    bundle.base_genus = 2;
    CHECK(euler_characteristic(bundle) == 4);

    LefschetzFibration g3;
    g3.fiber_genus = 3;
    g3.base_genus = 1;
    g3.vanishing_cycles.assign(84, VanishingCycle{"c1", std::nullopt});
    CHECK(euler_characteristic(g3) == 84);

    LefschetzFibration open_base;
    open_base.fiber_genus = 2;
    open_base.base_genus = 1;
    open_base.base_boundary_components = 1;
    CHECK_THROWS_AS(euler_characteristic(open_base), std::domain_error);
}

TEST_CASE("hyperelliptic signature formula") {
    CHECK(endo_signature(2, 10, {}) == -6);
    CHECK(endo_signature(2, 0, {}) == 0);
    // -(4/7)*2 + (4*1*2/7 - 1)*1 = -1 exactly.
    CHECK(endo_signature(3, 2, {{1, 1}}) == -1);
    CHECK_THROWS_AS(endo_signature(3, 7, {{1, 2}}), IntegralityError);
    CHECK_THROWS_AS(endo_signature(2, 1, {{2, 1}}), std::domain_error);  // j > g/2
    CHECK_THROWS_AS(endo_signature(2, -1, {}), std::domain_error);
}

TEST_CASE("family invariants at genus 2") {
    auto r = family_invariants(2, 1, 0, 1);
    CHECK(r.M == 10);
    CHECK(r.euler == 10);
    CHECK(r.signature == -6);
    CHECK(r.c1_squared == 2);
    CHECK(r.c2 == 10);
    CHECK(r.hyperelliptic);

    auto r2 = family_invariants(2, 2, 0, 1);
    CHECK(r2.M == 100);
    CHECK(r2.euler == 104);
    CHECK(r2.signature == -60);
    CHECK(r2.c1_squared == 28);

    auto r0 = family_invariants(2, 1, 0, 0);
    CHECK(r0.M == 0);
    CHECK(r0.euler == 0);
    CHECK(r0.signature == 0);
    CHECK(r0.c1_squared == 0);
}

TEST_CASE("no signature is reported beyond genus 2") {
    auto r = family_invariants(3, 1, 0, 1);
    CHECK_FALSE(r.hyperelliptic);
    CHECK_FALSE(r.signature.has_value());
    CHECK_FALSE(r.c1_squared.has_value());
    CHECK_FALSE(r.c2.has_value());
}

TEST_CASE("identity chain and monotonicity over the grid") {
    for (long long h : {1LL, 2LL, 3LL}) {
        for (long long n : {2 * h - 2, 2 * h - 4}) {
            long long prev_e = -1, prev_sigma = 1;
            for (long long m = 0; m <= 5; ++m) {
                auto r = family_invariants(2, h, n, m);
                REQUIRE(r.signature.has_value());
                CHECK(*r.c1_squared == 2 * r.euler + 3 * *r.signature);
                CHECK(*r.c2 == r.euler);
                CHECK(*r.signature == endo_signature(2, r.M, {}));
                if (m > 0) {
                    CHECK(r.euler > prev_e);
                    CHECK(*r.signature < prev_sigma);
                }
                prev_e = r.euler;
                prev_sigma = *r.signature;
            }
        }
    }
}

TEST_CASE("family fibration record") {
    auto f = family_fibration(2, 1, 0, 1);
    CHECK(f.fiber_genus == 2);
    CHECK(f.base_genus == 1);
    CHECK(f.commutator_count == 1);
    CHECK(f.euler == 10);
    CHECK(f.signature == -6);
    CHECK(f.sections.size() == 1);
    CHECK(f.sections[0].self_intersection == 0);
    CHECK_FALSE(f.allowable());  // closed fiber and base
    CHECK(f.all_cycles_non_separating());
}

TEST_CASE("excision bookkeeping via both routes") {
    auto f = family_fibration(2, 1, 0, 1);
    auto result = excise_fiber_and_sections(f, {"S"});
    // e(F u S) = (2-2g) + (2-2h) - 1 = -3, so e drops by -3.
    CHECK(result.fibration.euler == 13);
    CHECK(result.fibration.euler == f.euler - 3 + 2 * (2 + 1));  // same identity, other route
    CHECK(result.fibration.signature == f.signature);
    CHECK(result.fibration.allowable());
    CHECK(result.fibration.fiber_boundary_components == 1);
    CHECK(result.fibration.base_boundary_components == 1);
    CHECK(result.fibration.sections.empty());

    const auto& book = result.boundary.underlying();
    CHECK(book.papers().size() == 1);
    CHECK(book.spines().size() == 1);
    CHECK(book.page() == Surface(2, 1));
    CHECK(book.vertebra() == Surface(1, 1));
    CHECK(book.papers()[0].monodromy == *f.monodromy);
    REQUIRE(result.boundary.framings().size() == 1);
    CHECK(result.boundary.framings()[0].section_self_intersection == 0);
}

TEST_CASE("multi-fiber excision") {
    auto f = family_fibration(2, 1, -2, 1);
    auto result = excise_fiber_and_sections(f, {"S"}, 2);
    // e(F_1 u F_2 u S) = 2(2-2g) + (2-2h) - 2 = -6.
    CHECK(result.fibration.euler == f.euler + 6);
    const auto& book = result.boundary.underlying();
    CHECK(book.papers().size() == 2);
    CHECK(book.spines().size() == 1);
    CHECK(book.vertebra() == Surface(1, 2));
    CHECK(book.page() == Surface(2, 1));
    CHECK(result.boundary.framings()[0].section_self_intersection == -2);
}

TEST_CASE("excision guards") {
    auto f = family_fibration(2, 1, 0, 1);
    CHECK_THROWS_AS(excise_fiber_and_sections(f, {}), std::domain_error);
    CHECK_THROWS_AS(excise_fiber_and_sections(f, {"missing"}), std::domain_error);
    LefschetzFibration separating = f;
    separating.vanishing_cycles.push_back(VanishingCycle{"", 1});
    CHECK_THROWS_AS(excise_fiber_and_sections(separating, {"S"}), std::domain_error);
    LefschetzFibration bounded = f;
    bounded.base_boundary_components = 1;
    CHECK_THROWS_AS(excise_fiber_and_sections(bounded, {"S"}), std::domain_error);
}

TEST_CASE("fiber sum") {
    auto f1 = family_fibration(2, 1, 0, 1);

    LefschetzFibration f2;
    f2.fiber_genus = 2;
    f2.base_genus = 0;
    f2.vanishing_cycles.assign(4, VanishingCycle{"c1", std::nullopt});
    f2.sections = {SectionRecord{"T", -1}};
    f2.euler = euler_characteristic(f2);  // (2-2g)*2 + 4 = 0

    auto sum = fiber_sum(f1, f2, {{"S", "T"}});
    CHECK(sum.base_genus == 1);
    CHECK(sum.vanishing_cycles.size() == 14);
    REQUIRE(sum.sections.size() == 1);
    CHECK(sum.sections[0].self_intersection == -1);
    CHECK(sum.euler == f1.euler + f2.euler + 4);
    // Handle-count oracle: e(F) e(base) + M_1 + M_2.
    CHECK(sum.euler == (2 - 2 * 2) * (2 - 2 * 1) + 10 + 4);
    CHECK_FALSE(sum.signature.has_value());  // f2's signature unknown

    LefschetzFibration wrong_genus = f2;
    wrong_genus.fiber_genus = 3;
    CHECK_THROWS_AS(fiber_sum(f1, wrong_genus, {{"S", "T"}}), std::domain_error);
    CHECK_THROWS_AS(fiber_sum(f1, f2, {{"S", "U"}}), std::domain_error);

    LefschetzFibration trivial_bundle;
    trivial_bundle.fiber_genus = 2;
    trivial_bundle.base_genus = 0;
    trivial_bundle.sections = {SectionRecord{"T", -1}};
    trivial_bundle.euler = -8;
    CHECK_THROWS_AS(fiber_sum(f1, trivial_bundle, {{"S", "T"}}), std::domain_error);
    trivial_bundle.sections = {SectionRecord{"T", 0}};
    CHECK_NOTHROW(fiber_sum(f1, trivial_bundle, {{"S", "T"}}));
}

TEST_CASE("signature adds under fiber sum when both are known") {
    auto f1 = family_fibration(2, 1, 0, 1);
    LefschetzFibration f2;
    f2.fiber_genus = 2;
    f2.base_genus = 0;
    f2.vanishing_cycles.assign(40, VanishingCycle{"c1", std::nullopt});
    f2.sections = {SectionRecord{"T", 0}};
    f2.euler = euler_characteristic(f2);
    f2.signature = endo_signature(2, 40, {});
    auto sum = fiber_sum(f1, f2, {{"S", "T"}});
    CHECK(sum.signature == -6 + -24);
}
