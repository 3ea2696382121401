#include "mcg/families.hpp"

namespace mcg {

namespace {

TwistWord chain_base(long long g) {
    std::vector<TwistWord> factors;
    for (long long i = 1; i <= 2 * g - 2; ++i)
        factors.push_back(TwistWord::twist("c" + std::to_string(i)));
    factors.push_back(TwistWord::twist("b"));
    factors.push_back(TwistWord::twist("r"));
    return TwistWord::product(std::move(factors));
}

// t_c1 ... t_c{2g-3}
TwistWord chain_prefix(long long g) {
    std::vector<TwistWord> factors;
    for (long long i = 1; i <= 2 * g - 3; ++i)
        factors.push_back(TwistWord::twist("c" + std::to_string(i)));
    return TwistWord::product(std::move(factors));
}

// t_c1 ... t_c{2g-2} t_b
TwistWord chain_with_b(long long g) {
    std::vector<TwistWord> factors;
    for (long long i = 1; i <= 2 * g - 2; ++i)
        factors.push_back(TwistWord::twist("c" + std::to_string(i)));
    factors.push_back(TwistWord::twist("b"));
    return TwistWord::product(std::move(factors));
}

OpaqueBlock commutator_block(std::string label, std::map<std::string, long long> params = {}) {
    OpaqueBlock block;
    block.label = std::move(label);
    block.kind = OpaqueKind::Commutator;
    block.params = std::move(params);
    return block;
}

}  // namespace

TwistWord chain_word(long long g) {
    if (g < 2) throw std::domain_error("chain word requires genus >= 2");
    return TwistWord::power(chain_base(g), 4 * g + 2);
}

TwistWord t_word() {
    auto block = TwistWord::product(
        {TwistWord::twist("c1"), TwistWord::twist("c2"), TwistWord::twist("c3")});
    return TwistWord::product({TwistWord::twist("c2"), TwistWord::twist("c1"),
                               TwistWord::power(std::move(block), 2), TwistWord::twist("c1"),
                               TwistWord::twist("c2")});
}

TwistWord t1_word() {
    auto block = TwistWord::product(
        {TwistWord::twist("a1"), TwistWord::twist("r"), TwistWord::twist("b")});
    return TwistWord::product({TwistWord::twist("r"), TwistWord::twist("a1"),
                               TwistWord::twist("b"), TwistWord::twist("r"),
                               TwistWord::power(std::move(block), 2)});
}

TwistWord t2_word(long long g) {
    if (g < 2) throw std::domain_error("T_2 requires genus >= 2");
    OpaqueBlock block;
    block.label = "T2";
    block.kind = OpaqueKind::UnknownElement;
    block.params["g"] = g;
    block.declared_positive_twists = 8 * g - 6;
    // Image from the defining relation: (t_c1 ... t_c{2g-2} t_b)^{2g} times
    // the inverse of (t_c1 ... t_c{2g-3})^{2g-2}.
    TwistWord image = TwistWord::product({TwistWord::power(chain_with_b(g), 2 * g),
                                          TwistWord::power(chain_prefix(g), -(2 * g - 2))});
    block.image = std::make_shared<const TwistWord>(std::move(image));
    return TwistWord::opaque(std::move(block));
}

RelationTemplate t2_defining_relation(long long g) {
    RelationTemplate rel;
    rel.name = "t2-defining";
    rel.parameters["g"] = g;
    rel.lhs = TwistWord::product({t2_word(g), TwistWord::power(chain_prefix(g), 2 * g - 2)});
    rel.rhs = TwistWord::power(chain_with_b(g), 2 * g);
    rel.provenance = "defining relation for the T_2 factor on the genus-g chain";
    return rel;
}

RelationTemplate chain_relation(long long g) {
    RelationTemplate rel;
    rel.name = "chain";
    rel.parameters["g"] = g;
    rel.lhs = TwistWord::twist("delta");
    rel.rhs = chain_word(g);
    rel.provenance = "one-boundary chain relation on the genus-g chain";
    return rel;
}

void validate_family_parameters(long long g, long long h, long long n, long long m) {
    if (g < 2) throw std::domain_error("fiber genus must be at least 2");
    if (h < 1) throw std::domain_error("base genus must be at least 1");
    if (n > 2 * h - 2)
        throw std::domain_error("section self-intersection is bounded above by 2h-2");
    if (m < 0) throw std::domain_error("twist parameter m must be non-negative");
}

RelationTemplate family_relation(long long g, long long h, long long n, long long m) {
    Factorization f = build_factorization(g, h, n, m);
    RelationTemplate rel;
    rel.name = h == 1 ? "family-h1" : "family-hgt1";
    rel.parameters = {{"g", g}, {"h", h}, {"n", n}, {"m", m}};
    rel.lhs = f.boundary_twist_power == 0
                  ? TwistWord()
                  : TwistWord::power(TwistWord::twist("delta"), f.boundary_twist_power);
    rel.rhs = f.word;
    rel.provenance = "boundary-twist factorization with a self-intersection n section";
    return rel;
}

namespace {

void append_cycles(const TwistWord& w, long long g, const CurveModel& model,
                   std::vector<VanishingCycle>& out) {
    const auto& n = w.node();
    if (auto* t = std::get_if<Twist>(&n)) {
        if (t->exponent < 0)
            throw std::logic_error("negative twist in a positive factorization");
        const NamedCurve& curve = model.curve(t->curve);
        for (long long i = 0; i < t->exponent; ++i)
            out.push_back(VanishingCycle{curve.name, curve.separating_split});
        return;
    }
    if (auto* o = std::get_if<OpaqueBlock>(&n)) {
        if (o->kind == OpaqueKind::Commutator) return;
        long long declared = o->declared_positive_twists.value_or(0);
        for (long long i = 0; i < declared; ++i) out.push_back(VanishingCycle{"", std::nullopt});
        return;
    }
    if (auto* p = std::get_if<TwistWord::ProductNode>(&n)) {
        for (const auto& f : p->factors) append_cycles(f, g, model, out);
        return;
    }
    if (auto* p = std::get_if<TwistWord::PowerNode>(&n)) {
        if (p->exponent < 0)
            throw std::logic_error("negative power in a positive factorization");
        for (long long i = 0; i < p->exponent; ++i) append_cycles(p->base, g, model, out);
        return;
    }
    throw std::logic_error("unexpected commutator node among vanishing cycles");
}

}  // namespace

Factorization build_factorization(long long g, long long h, long long n, long long m) {
    validate_family_parameters(g, h, n, m);
    const long long k = 2 * h - 2 - n;

    Factorization f;
    f.fiber_genus = g;
    f.base_genus = h;
    f.section_self_intersection = n;
    f.twist_parameter = m;
    f.boundary_twist_power = -n;  // = 2 - 2h + k

    std::vector<TwistWord> factors;
    if (h == 1) {
        f.commutator_blocks.push_back(commutator_block("C", {{"m", m}}));
        factors.push_back(TwistWord::opaque(f.commutator_blocks.back()));
        if (m > 0) factors.push_back(TwistWord::power(t_word(), m));
    } else {
        for (long long i = 1; i < h; ++i) {
            f.commutator_blocks.push_back(commutator_block("C" + std::to_string(i)));
            factors.push_back(TwistWord::opaque(f.commutator_blocks.back()));
        }
        f.commutator_blocks.push_back(commutator_block("C", {{"m", m}}));
        factors.push_back(TwistWord::opaque(f.commutator_blocks.back()));
        if (m > 0) {
            factors.push_back(TwistWord::power(t1_word(), m));
            factors.push_back(TwistWord::power(t2_word(g), m));
        }
    }
    if (k > 0) factors.push_back(TwistWord::power(chain_base(g), checked_mul(4 * g + 2, k)));
    f.word = TwistWord::product(std::move(factors));

    CurveModel model = standard_model(g);
    append_cycles(f.word, g, model, f.vanishing_cycles);
    for (const auto& cycle : f.vanishing_cycles)
        if (!cycle.non_separating())
            throw std::logic_error("separating cycle in a family factorization");
    return f;
}

}  // namespace mcg
