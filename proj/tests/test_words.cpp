#include <doctest.h>

#include "generators.hpp"
#include "mcg/families.hpp"
#include "mcg/words.hpp"
#include "oracle.hpp"

using namespace mcg;
using mcg::testing::oracle_is_identity;
using mcg::testing::oracle_matches;

namespace {

TwistWord t(const std::string& c, long long e = 1) { return TwistWord::twist(c, e); }

}  // namespace

TEST_CASE("free reduction basics") {
    CHECK(reduce(TwistWord::product({t("c1"), t("c1", -1)})).is_empty_product());
    CHECK(reduce(TwistWord::power(TwistWord::product({t("c1"), t("c2")}), 0)).is_empty_product());
    CHECK(reduce(TwistWord::product({t("c1", 2), t("c1", -1)})) == t("c1"));
    // Flattening and cancellation across nesting.
    auto w = TwistWord::product(
        {TwistWord::product({t("c1"), t("c2")}), t("c2", -1), t("c3")});
    CHECK(reduce(w) == TwistWord::product({t("c1"), t("c3")}));
    // Power over an explicit subtree expands.
    CHECK(reduce(TwistWord::power(t("c1"), 3)) == t("c1", 3));
    CHECK(reduce(TwistWord::power(TwistWord::product({t("c1"), t("c2")}), -1)) ==
          TwistWord::product({t("c2", -1), t("c1", -1)}));
    // Trivial commutators vanish.
    CHECK(reduce(TwistWord::commutator(TwistWord(), t("c1"))).is_empty_product());
}

TEST_CASE("reduce cancels formal inverses of the same opaque block") {
    OpaqueBlock q;
    q.label = "Q";
    auto w = TwistWord::product(
        {TwistWord::opaque(q), TwistWord::power(TwistWord::opaque(q), -1)});
    CHECK(reduce(w).is_empty_product());
}

TEST_CASE("twist counts") {
    CHECK(twist_count(TwistWord()) == TwistCount{0, 0, 0});
    CHECK(twist_count(t_word()) == TwistCount{10, 0, 0});
    CHECK(twist_count(chain_word(2)) == TwistCount{40, 0, 0});
    CHECK(twist_count(t("c1", -2)) == TwistCount{0, 2, 0});
    // Negative powers swap signs.
    CHECK(twist_count(TwistWord::power(t_word(), -2)) == TwistCount{0, 20, 0});
    // [a,b] counts a b a^-1 b^-1.
    CHECK(twist_count(TwistWord::commutator(t("c1"), t("c2", 2))) == TwistCount{3, 3, 0});
    OpaqueBlock q;
    q.label = "Q";
    CHECK(twist_count(TwistWord::power(TwistWord::opaque(q), 3)) == TwistCount{0, 0, 3});
}

TEST_CASE("positivity and explicitness") {
    CHECK(is_positive(t_word()));
    CHECK_FALSE(is_positive(t("c1", -1)));
    OpaqueBlock c;
    c.label = "C";
    c.kind = OpaqueKind::Commutator;
    CHECK(is_positive(TwistWord::product({TwistWord::opaque(c), t_word()})));
    OpaqueBlock q;
    q.label = "Q";
    CHECK_FALSE(is_positive(TwistWord::opaque(q)));
    CHECK(is_positive(TwistWord::commutator(TwistWord::opaque(q), t("c1"))));
    CHECK(is_explicit(t_word()));
    CHECK_FALSE(is_explicit(TwistWord::opaque(q)));
    CHECK_FALSE(is_explicit(TwistWord::commutator(t("c1"), t("c2"))));
}

TEST_CASE("evaluate on the standard genus-2 model") {
    auto model = standard_model(2);
    auto id = SpMatrix::identity(2);
    CHECK(*evaluate(t("delta"), model).matrix == id);
    CHECK(*evaluate(TwistWord::commutator(t("c1"), t("c1")), model).matrix == id);
    CHECK(*evaluate(chain_word(2), model).matrix == id);
    CHECK_THROWS_AS(evaluate(t("nope"), model), UnknownCurveError);
}

TEST_CASE("evaluate agrees with the direct transvection oracle") {
    auto model = standard_model(2);
    CHECK(oracle_matches(t_word(), model, *evaluate(t_word(), model).matrix));
    CHECK(oracle_is_identity(chain_word(2), model));
    std::mt19937_64 rng(7101);
    for (int i = 0; i < 60; ++i) {
        auto w = mcg::testing::random_word(rng, 3, false);
        CHECK(oracle_matches(w, model, *evaluate(w, model).matrix));
    }
}

TEST_CASE("reduction and inversion preserve the image") {
    auto model = standard_model(2);
    std::mt19937_64 rng(7102);
    for (int i = 0; i < 120; ++i) {
        auto w = mcg::testing::random_word(rng, 3, false);
        CHECK(*evaluate(reduce(w), model).matrix == *evaluate(w, model).matrix);
        auto cancel = TwistWord::product({w, invert(w)});
        CHECK(*evaluate(cancel, model).matrix == SpMatrix::identity(2));
    }
}

TEST_CASE("symplectic check rejects bad matrices") {
    CHECK_THROWS_AS(SpMatrix::from_rows({{1, 1}, {1, 1}}), std::domain_error);
    CHECK_THROWS_AS(SpMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), std::domain_error);
    auto m = SpMatrix::from_rows({{1, -1}, {0, 1}});  // transvection along x_1 at genus 1
    CHECK(m == SpMatrix::transvection(HomologyClass::basis_x(1, 1)));
    CHECK(m * m.inverse() == SpMatrix::identity(1));
    CHECK(m.pow(3) == m * m * m);
    CHECK(m.pow(-2) == (m * m).inverse());
}

TEST_CASE("certify braid and commutation relations") {
    auto model = standard_model(2);
    auto braid_lhs = TwistWord::product({t("c1"), t("c2"), t("c1")});
    auto braid_rhs = TwistWord::product({t("c2"), t("c1"), t("c2")});
    CHECK(certify_relation(braid_lhs, braid_rhs, model).verified());
    auto comm_lhs = TwistWord::product({t("c1"), t("c3")});
    auto comm_rhs = TwistWord::product({t("c3"), t("c1")});
    CHECK(certify_relation(comm_lhs, comm_rhs, model).verified());
}

TEST_CASE("braid and commutation hold across the chain for genus up to 5") {
    for (long long g = 2; g <= 5; ++g) {
        auto model = standard_model(g);
        for (long long i = 1; i <= 2 * g; ++i) {
            for (long long j = i + 1; j <= 2 * g; ++j) {
                auto a = t("c" + std::to_string(i));
                auto b = t("c" + std::to_string(j));
                if (j == i + 1) {
                    CHECK(certify_relation(TwistWord::product({a, b, a}),
                                           TwistWord::product({b, a, b}), model)
                              .verified());
                } else {
                    auto ma = *evaluate(a, model).matrix;
                    auto mb = *evaluate(b, model).matrix;
                    CHECK(ma * mb == mb * ma);
                }
            }
        }
    }
}

TEST_CASE("refutation reports the first disagreeing basis vector") {
    auto model = standard_model(2);
    auto verdict = certify_relation(t("c1"), t("c2"), model);
    REQUIRE(verdict.kind == VerdictKind::Refuted);
    // t_c1 fixes x_1 while t_c2 moves it, so the witness is x_1.
    CHECK(*verdict.witness == HomologyClass::basis_x(2, 1));
}

TEST_CASE("opaque blocks propagate as Indeterminate") {
    auto model = standard_model(2);
    OpaqueBlock c1;
    c1.label = "C1";
    c1.kind = OpaqueKind::Commutator;
    OpaqueBlock cm;
    cm.label = "C";
    cm.kind = OpaqueKind::Commutator;
    cm.params["m"] = 1;
    auto rhs = TwistWord::product({TwistWord::opaque(c1), TwistWord::opaque(cm),
                                   TwistWord::power(t1_word(), 1),
                                   TwistWord::power(t2_word(2), 1)});
    auto lhs = TwistWord::power(t("delta"), -2);
    auto verdict = certify_relation(lhs, rhs, model);
    REQUIRE(verdict.kind == VerdictKind::Indeterminate);
    // T2 resolves through its derived image and is not listed.
    CHECK(verdict.opaque_labels == std::vector<std::string>{"C1", "C(m=1)"});
}

TEST_CASE("unresolved opaque collection respects images") {
    CHECK(unresolved_opaques(t2_word(2)).empty());
    OpaqueBlock q;
    q.label = "Q";
    auto w = TwistWord::product({t2_word(2), TwistWord::opaque(q), TwistWord::opaque(q)});
    CHECK(unresolved_opaques(w) == std::vector<std::string>{"Q"});
}

TEST_CASE("atom words cancel against their formal inverses") {
    // Free reduction cancels twist and opaque atoms; commutator atoms only
    // evaluate away (covered above).
    std::mt19937_64 rng(7103);
    for (int i = 0; i < 60; ++i) {
        std::vector<TwistWord> atoms;
        long long len = mcg::testing::pick(rng, 1, 6);
        for (long long k = 0; k < len; ++k) {
            if (mcg::testing::pick(rng, 0, 2) == 0) {
                OpaqueBlock q;
                q.label = mcg::testing::pick(rng, 0, 1) ? "Q1" : "Q2";
                atoms.push_back(TwistWord::power(TwistWord::opaque(q),
                                                 mcg::testing::nonzero_exponent(rng, 2)));
            } else {
                atoms.push_back(TwistWord::twist(mcg::testing::pick_curve(rng),
                                                 mcg::testing::nonzero_exponent(rng, 3)));
            }
        }
        auto w = TwistWord::product(std::move(atoms));
        CHECK(reduce(TwistWord::product({w, invert(w)})).is_empty_product());
    }
}
