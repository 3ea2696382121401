#include <doctest.h>

#include "mcg/families.hpp"
#include "mcg/lefschetz.hpp"
#include "oracle.hpp"

using namespace mcg;

namespace {

// Every twist leaf must name a curve of the model.
void check_leaves_resolve(const TwistWord& w, const CurveModel& model) {
    const auto& n = w.node();
    if (auto* t = std::get_if<Twist>(&n)) {
        CHECK(model.has(t->curve));
        return;
    }
    if (auto* o = std::get_if<OpaqueBlock>(&n)) {
        if (o->image) check_leaves_resolve(*o->image, model);
        return;
    }
    if (auto* p = std::get_if<TwistWord::ProductNode>(&n)) {
        for (const auto& f : p->factors) check_leaves_resolve(f, model);
        return;
    }
    if (auto* p = std::get_if<TwistWord::PowerNode>(&n)) {
        check_leaves_resolve(p->base, model);
        return;
    }
    const auto& c = std::get<TwistWord::CommutatorNode>(n);
    check_leaves_resolve(c.lhs, model);
    check_leaves_resolve(c.rhs, model);
}

}  // namespace

TEST_CASE("chain word twist counts") {
    CHECK(twist_count(chain_word(2)) == TwistCount{40, 0, 0});
    CHECK(twist_count(chain_word(3)) == TwistCount{84, 0, 0});
    for (long long g = 2; g <= 6; ++g)
        CHECK(twist_count(chain_word(g)).positive == 8 * g * g + 4 * g);
    CHECK_THROWS_AS(chain_word(1), std::domain_error);
}

TEST_CASE("chain relation evaluates to the identity") {
    for (long long g = 2; g <= 4; ++g) {
        auto model = standard_model(g);
        CHECK(*evaluate(chain_word(g), model).matrix == SpMatrix::identity(g));
        CHECK(mcg::testing::oracle_is_identity(chain_word(g), model));
    }
}

TEST_CASE("T and T_1 are ten positive twists") {
    CHECK(twist_count(t_word()) == TwistCount{10, 0, 0});
    CHECK(twist_count(t1_word()) == TwistCount{10, 0, 0});
    CHECK(is_positive(t_word()));
    CHECK(is_positive(t1_word()));
    for (long long g = 2; g <= 4; ++g) {
        auto model = standard_model(g);
        check_leaves_resolve(t_word(), model);
        check_leaves_resolve(t1_word(), model);
    }
}

TEST_CASE("T_2 carries its declared count and derived image") {
    for (long long g = 2; g <= 4; ++g) {
        auto w = t2_word(g);
        const auto& block = std::get<OpaqueBlock>(w.node());
        CHECK(block.declared_positive_twists == 8 * g - 6);
        CHECK(block.kind == OpaqueKind::UnknownElement);
        CHECK(unresolved_opaques(w).empty());
        // The defining relation holds by construction of the image.
        auto rel = t2_defining_relation(g);
        auto model = standard_model(g);
        CHECK(certify_relation(rel.lhs, rel.rhs, model).verified());
    }
    CHECK_THROWS_AS(t2_word(1), std::domain_error);
}

TEST_CASE("factorization for g=2, h=1") {
    auto f = build_factorization(2, 1, 0, 1);
    CHECK(f.vanishing_cycles.size() == 10);
    CHECK(f.commutator_blocks.size() == 1);
    CHECK(f.section_self_intersection == 0);
    CHECK(f.boundary_twist_power == 0);
    CHECK(twist_count(f.word).negative == 0);
    for (const auto& c : f.vanishing_cycles) CHECK(c.non_separating());
    // At genus 2 the leaf c3 resolves to b.
    CHECK(f.vanishing_cycles[4].curve == "b");
}

TEST_CASE("factorization for g=2, h=2") {
    auto f = build_factorization(2, 2, 0, 1);
    CHECK(f.vanishing_cycles.size() == 100);
    CHECK(f.commutator_blocks.size() == 2);
    CHECK(f.boundary_twist_power == 0);  // 2 - 2h + k with k = 2
    long long anonymous = 0;
    for (const auto& c : f.vanishing_cycles)
        if (c.curve.empty()) ++anonymous;
    CHECK(anonymous == 10);  // 8g-6 per T_2 factor
}

TEST_CASE("empty factorization at m = 0, k = 0") {
    auto f = build_factorization(2, 1, 0, 0);
    CHECK(f.vanishing_cycles.empty());
    CHECK(f.commutator_blocks.size() == 1);  // C(0) is still emitted
    CHECK(twist_count(f.word) == TwistCount{0, 0, 1});
}

TEST_CASE("factorization parameter validation") {
    CHECK_THROWS_AS(build_factorization(1, 1, 0, 1), std::domain_error);
    CHECK_THROWS_AS(build_factorization(2, 0, 0, 1), std::domain_error);
    CHECK_THROWS_AS(build_factorization(2, 1, 1, 1), std::domain_error);  // n > 2h-2
    CHECK_THROWS_AS(build_factorization(2, 1, 0, -1), std::domain_error);
}

TEST_CASE("boundary twist power equals minus the section square") {
    for (long long h = 1; h <= 3; ++h)
        for (long long n = 2 * h - 2; n >= 2 * h - 6; n -= 2) {
            auto f = build_factorization(2, h, n, 1);
            CHECK(f.boundary_twist_power == -n);
        }
}

TEST_CASE("word twist counts match the critical count over the grid") {
    for (long long g : {2LL, 3LL}) {
        for (long long h : {1LL, 2LL, 3LL}) {
            for (long long n : {2 * h - 2, 2 * h - 4}) {
                for (long long m = 0; m <= 4; ++m) {
                    auto f = build_factorization(g, h, n, m);
                    long long declared_t2 = h > 1 ? (8 * g - 6) * m : 0;
                    CHECK(twist_count(f.word).positive + declared_t2 ==
                          critical_count(g, h, n, m));
                    CHECK(static_cast<long long>(f.vanishing_cycles.size()) ==
                          critical_count(g, h, n, m));
                    CHECK(static_cast<long long>(f.commutator_blocks.size()) == h);
                }
            }
        }
    }
}

TEST_CASE("critical count is strictly increasing in m") {
    for (long long g : {2LL, 3LL})
        for (long long h : {1LL, 2LL})
            for (long long n : {2 * h - 2, 2 * h - 4})
                for (long long m = 0; m < 6; ++m)
                    CHECK(critical_count(g, h, n, m + 1) > critical_count(g, h, n, m));
}

TEST_CASE("family relations certify as Indeterminate, never Refuted") {
    for (long long h : {1LL, 2LL, 3LL}) {
        auto rel = family_relation(2, h, 2 * h - 4, 2);
        auto model = standard_model(2);
        auto verdict = certify_relation(rel.lhs, rel.rhs, model);
        CHECK(verdict.kind == VerdictKind::Indeterminate);
        CHECK_FALSE(verdict.opaque_labels.empty());
    }
}

TEST_CASE("factorization words resolve over the standard model") {
    for (long long g : {2LL, 3LL}) {
        auto model = standard_model(g);
        auto f = build_factorization(g, 2, 0, 2);
        check_leaves_resolve(f.word, model);
    }
}
