#pragma once

// The explicit mapping-class-group relation templates on the genus-g
// one-holed surface and the assembly of the monodromy factorizations behind
// the fibration families X_{g,h,n}(m).
//
// All words are over standard_model(g). The commutator blocks C(m) and
// C_1, ..., C_{h-1} have no explicit twist expansion and stay opaque; T_2
// has a known twist count and a symplectic image derived from its defining
// relation, but no explicit positive word.

#include <string>
#include <vector>

#include "mcg/words.hpp"

namespace mcg {

struct RelationTemplate {
    std::string name;
    TwistWord lhs;
    TwistWord rhs;
    std::map<std::string, long long> parameters;
    std::string provenance;
};

// R = (t_c1 ... t_c{2g-2} t_b t_r)^{4g+2}, the one-boundary chain relation's
// right side; 8g^2 + 4g positive twists, representing the boundary twist.
TwistWord chain_word(long long g);

// T = t_c2 t_c1 (t_c1 t_c2 t_c3)^2 t_c1 t_c2, ten positive twists.
TwistWord t_word();

// T_1 = t_r t_a1 t_b t_r (t_a1 t_r t_b)^2, ten positive twists.
TwistWord t1_word();

// T_2 as an opaque block: 8g-6 declared positive twists, symplectic image
// derived from T_2 (t_c1 ... t_c{2g-3})^{2g-2} = (t_c1 ... t_c{2g-2} t_b)^{2g}.
TwistWord t2_word(long long g);

// The defining relation above, as a checkable template.
RelationTemplate t2_defining_relation(long long g);

// t_delta = R as a template (lhs is the boundary twist).
RelationTemplate chain_relation(long long g);

// The boundary-twist factorization templates:
//   h  = 1:  t_delta^k       = C(m) T^m R^k
//   h  > 1:  t_delta^{2-2h+k} = C_1 ... C_{h-1} C(m) T_1^m T_2^m R^k
RelationTemplate family_relation(long long g, long long h, long long n, long long m);

struct VanishingCycle {
    // Named curve in the fiber model; empty for the anonymous non-separating
    // cycles contributed by T_2.
    std::string curve;
    std::optional<long long> separating_split;

    bool non_separating() const { return !separating_split; }
    friend bool operator==(const VanishingCycle&, const VanishingCycle&) = default;
};

struct Factorization {
    long long fiber_genus = 0;
    long long base_genus = 0;
    long long section_self_intersection = 0;
    long long twist_parameter = 0;  // m
    // Exponent of t_delta on the left side; equals minus the section
    // self-intersection.
    long long boundary_twist_power = 0;
    TwistWord word;  // right side
    std::vector<VanishingCycle> vanishing_cycles;
    std::vector<OpaqueBlock> commutator_blocks;
};

// Assembles the factorization for X_{g,h,n}(m). Requires g >= 2, h >= 1,
// n <= 2h-2 and m >= 0; k = 2h-2-n is the chain-word power.
Factorization build_factorization(long long g, long long h, long long n, long long m);

// Parameter validation shared with the invariant formulas.
void validate_family_parameters(long long g, long long h, long long n, long long m);

}  // namespace mcg
