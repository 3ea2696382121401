#include <doctest.h>

#include <random>

#include "mcg/surface.hpp"

using namespace mcg;

namespace {

HomologyClass random_class(std::mt19937_64& rng, long long genus) {
    std::uniform_int_distribution<long long> d(-4, 4);
    std::vector<long long> v(2 * genus);
    for (auto& c : v) c = d(rng);
    return HomologyClass(std::move(v));
}

}  // namespace

TEST_CASE("surface euler characteristic") {
    CHECK(Surface(2, 1).euler_characteristic() == -3);
    CHECK(Surface(0, 1).euler_characteristic() == 1);
    CHECK(Surface(3, 0, 5).euler_characteristic() == -4);  // marked points do not count
    CHECK_THROWS_AS(Surface(-1, 0), std::domain_error);
}

TEST_CASE("intersection pairing on basis vectors") {
    auto x1 = HomologyClass::basis_x(2, 1);
    auto y1 = HomologyClass::basis_y(2, 1);
    auto y2 = HomologyClass::basis_y(2, 2);
    CHECK(intersection(x1, y1) == 1);
    CHECK(intersection(y1, x1) == -1);
    CHECK(intersection(x1, y2) == 0);
    auto u = x1 + y2;
    CHECK(intersection(u, u) == 0);
}

TEST_CASE("intersection of chain classes in the standard model") {
    auto model = standard_model(3);
    // c2 = y1 - y2 and c3 = x2 pair to +1.
    CHECK(intersection(model.curve("c2").homology, model.curve("c3").homology) == 1);
}

TEST_CASE("intersection rejects mismatched dimensions") {
    CHECK_THROWS_AS(intersection(HomologyClass::zero(2), HomologyClass::zero(3)),
                    std::invalid_argument);
}

TEST_CASE("pairing is antisymmetric") {
    std::mt19937_64 rng(7001);
    for (int i = 0; i < 200; ++i) {
        auto u = random_class(rng, 3);
        auto v = random_class(rng, 3);
        CHECK(intersection(u, v) == -intersection(v, u));
    }
}

TEST_CASE("transvection basics") {
    auto x1 = HomologyClass::basis_x(2, 1);
    auto y1 = HomologyClass::basis_y(2, 1);
    CHECK(transvect(x1, y1) == y1 - x1);
    CHECK(transvect(x1, x1) == x1);  // <c,c> = 0
    auto zero = HomologyClass::zero(2);
    auto v = x1 + y1;
    CHECK(transvect(zero, v) == v);  // twist along delta acts trivially
}

TEST_CASE("transvection preserves the pairing and inverts") {
    std::mt19937_64 rng(7002);
    for (int i = 0; i < 200; ++i) {
        auto c = random_class(rng, 2);
        auto u = random_class(rng, 2);
        auto v = random_class(rng, 2);
        CHECK(intersection(transvect(c, u), transvect(c, v)) == intersection(u, v));
        CHECK(transvect_inverse(c, transvect(c, v)) == v);
    }
}

TEST_CASE("standard model at genus 2") {
    auto model = standard_model(2);
    // b = c3 and r = c4; homology b -> x2, r -> y2.
    CHECK(model.curve("b").homology == HomologyClass::basis_x(2, 2));
    CHECK(model.curve("r").homology == HomologyClass::basis_y(2, 2));
    CHECK(model.curve("c3").name == "b");
    CHECK(model.curve("c4").name == "r");
    CHECK(intersection(model.curve("c1").homology, model.curve("c2").homology) == 1);
    CHECK(intersection(model.curve("c1").homology, model.curve("c3").homology) == 0);
    CHECK(model.curve("delta").homology.is_zero());
    CHECK(model.curve("delta").boundary_parallel);
    // a1 = x2 + y2 meets b and r once each.
    CHECK(intersection(model.curve("a1").homology, model.curve("b").homology) == -1);
    CHECK(intersection(model.curve("a1").homology, model.curve("r").homology) == 1);
}

TEST_CASE("standard model sizes at genus 3") {
    auto model = standard_model(3);
    for (int i = 1; i <= 6; ++i)
        CHECK(model.has("c" + std::to_string(i)));
    CHECK(model.curve("c1").homology.dimension() == 6);
    CHECK_THROWS_AS(standard_model(1), std::domain_error);
    CHECK_THROWS_AS((void)model.curve("c7"), UnknownCurveError);
}

TEST_CASE("chain intersection pattern holds for genus 2..10") {
    for (long long g = 2; g <= 10; ++g) {
        auto model = standard_model(g);
        std::vector<HomologyClass> chain;
        for (long long i = 1; i <= 2 * g; ++i)
            chain.push_back(model.curve("c" + std::to_string(i)).homology);
        for (std::size_t i = 0; i < chain.size(); ++i) {
            for (std::size_t j = i + 1; j < chain.size(); ++j) {
                long long expected = (j == i + 1) ? 1 : 0;
                CHECK(intersection(chain[i], chain[j]) == expected);
            }
            CHECK_FALSE(chain[i].is_zero());  // chain curves are non-separating
        }
        CHECK_FALSE(model.curve("a1").homology.is_zero());
    }
}

TEST_CASE("a1 class is configurable") {
    auto model = standard_model(2, HomologyClass::basis_x(2, 2));
    CHECK(model.curve("a1").homology == HomologyClass::basis_x(2, 2));
}

TEST_CASE("named curve metadata is validated") {
    // Nonzero class may not carry a split.
    CHECK_THROWS_AS(make_curve("bad", HomologyClass::basis_x(2, 1), 1), std::domain_error);
    // Zero class needs a split unless boundary-parallel.
    CHECK_THROWS_AS(make_curve("bad", HomologyClass::zero(2)), std::domain_error);
    CHECK_NOTHROW(make_curve("delta", HomologyClass::zero(2), std::nullopt, true));
    // Split normalizes to min(j, g - j).
    auto c = make_curve("s", HomologyClass::zero(3), 2);
    CHECK(c.separating_split == 1);
    CHECK_FALSE(c.non_separating());
    CHECK_THROWS_AS(make_curve("s", HomologyClass::zero(3), 3), std::domain_error);
}
