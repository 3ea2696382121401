#pragma once

// Abstract twist words: expression trees over Dehn-twist generators, free
// reduction, twist counting, and evaluation in Sp(2g, Z) as a relation
// certifier.
//
// Composition is functional throughout: in a product written left to right,
// the rightmost factor acts first.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mcg/surface.hpp"

namespace mcg {

class TwistWord;

enum class OpaqueKind { Commutator, UnknownElement };

// A named group element with no explicit twist expansion: the commutator
// blocks C(m), C_1, ..., and unspecified elements like T_2 or gluing maps.
//
// A block may carry a derived symplectic image (a word with the same image
// in Sp), in which case evaluation succeeds through it; otherwise any
// evaluation touching the block reports Indeterminate. It may also declare
// how many positive twists it is known to expand to, without naming them.
// Neither annotation takes part in structural equality.
struct OpaqueBlock {
    std::string label;
    OpaqueKind kind = OpaqueKind::UnknownElement;
    std::map<std::string, long long> params;

    std::optional<long long> declared_positive_twists;
    std::shared_ptr<const TwistWord> image;

    friend bool operator==(const OpaqueBlock& a, const OpaqueBlock& b) {
        return a.label == b.label && a.kind == b.kind && a.params == b.params;
    }
};

struct Twist {
    std::string curve;
    long long exponent = 1;  // nonzero
    friend bool operator==(const Twist&, const Twist&) = default;
};

class TwistWord {
public:
    struct ProductNode;
    struct PowerNode;
    struct CommutatorNode;
    using Node = std::variant<Twist, OpaqueBlock, ProductNode, PowerNode, CommutatorNode>;

    // Default: the empty word (empty product, the identity).
    TwistWord();
    explicit TwistWord(Node node);

    static TwistWord twist(std::string curve, long long exponent = 1);
    static TwistWord opaque(OpaqueBlock block);
    static TwistWord product(std::vector<TwistWord> factors);
    static TwistWord power(TwistWord base, long long exponent);
    static TwistWord commutator(TwistWord lhs, TwistWord rhs);

    const Node& node() const;
    bool is_empty_product() const;

    bool operator==(const TwistWord& other) const;
    bool operator!=(const TwistWord& other) const { return !(*this == other); }

private:
    std::shared_ptr<const Node> node_;
};

struct TwistWord::ProductNode {
    std::vector<TwistWord> factors;
};
struct TwistWord::PowerNode {
    TwistWord base;
    long long exponent;
};
struct TwistWord::CommutatorNode {
    TwistWord lhs, rhs;  // [a,b] = a b a^-1 b^-1
};

inline const TwistWord::Node& TwistWord::node() const { return *node_; }

// Formal inverse: reverses products, negates exponents, swaps commutator
// sides; an opaque block inverts to its formal power -1.
TwistWord invert(const TwistWord& w);

// True when every twist has exponent +1 and every opaque block is itself a
// commutator or occurs inside a commutator node.
bool is_positive(const TwistWord& w);

// True when no opaque block and no commutator node occurs anywhere below.
bool is_explicit(const TwistWord& w);

// Free reduction. Flattens products, expands powers over explicit subtrees,
// merges and cancels adjacent same-curve twists and adjacent formal powers
// of equal opaque blocks. (Cancelling x.x^-1 for an opaque x is sound: a
// block denotes a fixed group element.) The result is the empty word, a
// single atom, or a flat product of atoms; on opaque-free words it evaluates
// identically to the input.
TwistWord reduce(const TwistWord& w);

struct TwistCount {
    long long positive = 0;
    long long negative = 0;
    long long opaque = 0;
    friend bool operator==(const TwistCount&, const TwistCount&) = default;
};

// Counts single twists by sign after expanding powers, and opaque block
// occurrences. [a,b] contributes the counts of a b a^-1 b^-1. Declared twist
// counts on opaque blocks are *not* folded into `positive`.
TwistCount twist_count(const TwistWord& w);

// The opaque labels (rendered with their parameters) that block evaluation,
// in first-occurrence order, deduplicated. Blocks with a derived image
// resolve through it and are not listed.
std::vector<std::string> unresolved_opaques(const TwistWord& w);

// 2g x 2g integral matrix satisfying M^T J M = J; the identity is checked on
// every construction.
class SpMatrix {
public:
    static SpMatrix identity(long long genus);
    static SpMatrix transvection(const HomologyClass& c, long long exponent = 1);
    // Validates symplecticity; throws std::domain_error on failure.
    static SpMatrix from_rows(std::vector<std::vector<long long>> rows);

    long long genus() const { return dim_ / 2; }
    long long dimension() const { return dim_; }
    long long at(long long row, long long col) const { return m_[row * dim_ + col]; }

    SpMatrix operator*(const SpMatrix& o) const;
    SpMatrix inverse() const;
    SpMatrix pow(long long k) const;
    HomologyClass apply(const HomologyClass& v) const;

    friend bool operator==(const SpMatrix&, const SpMatrix&) = default;

private:
    SpMatrix(long long dim, std::vector<long long> entries);
    void check_symplectic() const;

    long long dim_ = 0;
    std::vector<long long> m_;  // row-major
};

enum class VerdictKind { Verified, Refuted, Indeterminate };

struct Verdict {
    VerdictKind kind = VerdictKind::Verified;
    // Refuted: the first basis vector (in basis order) on which the two
    // sides disagree.
    std::optional<HomologyClass> witness;
    // Indeterminate: the blocking opaque labels.
    std::vector<std::string> opaque_labels;

    bool verified() const { return kind == VerdictKind::Verified; }
};

struct Evaluation {
    std::optional<SpMatrix> matrix;          // present unless blocked
    std::vector<std::string> opaque_labels;  // non-empty iff blocked
};

// Image of the word in Sp(2g, Z), composing transvections functionally
// (rightmost factor first). Unknown curve identifiers raise
// UnknownCurveError.
Evaluation evaluate(const TwistWord& w, const CurveModel& model);

// Certifies lhs = rhs at the level of the symplectic representation. This is
// a necessary condition for the mapping-class relation, not a sufficient
// one: Verified means "not refuted homologically".
Verdict certify_relation(const TwistWord& lhs, const TwistWord& rhs, const CurveModel& model);

// "C(m=3)"-style rendering used in verdicts and diagnostics.
std::string opaque_display(const OpaqueBlock& block);

}  // namespace mcg
