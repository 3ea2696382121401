#include "mcg/words.hpp"

#include <algorithm>
#include <set>

namespace mcg {

TwistWord::TwistWord() : node_(std::make_shared<Node>(ProductNode{})) {}
TwistWord::TwistWord(Node node) : node_(std::make_shared<Node>(std::move(node))) {}

TwistWord TwistWord::twist(std::string curve, long long exponent) {
    if (exponent == 0) throw std::invalid_argument("twist exponent must be nonzero");
    return TwistWord(Twist{std::move(curve), exponent});
}

TwistWord TwistWord::opaque(OpaqueBlock block) { return TwistWord(Node(std::move(block))); }

TwistWord TwistWord::product(std::vector<TwistWord> factors) {
    return TwistWord(ProductNode{std::move(factors)});
}

TwistWord TwistWord::power(TwistWord base, long long exponent) {
    return TwistWord(PowerNode{std::move(base), exponent});
}

TwistWord TwistWord::commutator(TwistWord lhs, TwistWord rhs) {
    return TwistWord(CommutatorNode{std::move(lhs), std::move(rhs)});
}

bool TwistWord::is_empty_product() const {
    auto* p = std::get_if<ProductNode>(node_.get());
    return p && p->factors.empty();
}

bool TwistWord::operator==(const TwistWord& other) const {
    if (node_ == other.node_) return true;
    const Node& a = *node_;
    const Node& b = *other.node_;
    if (a.index() != b.index()) return false;
    if (auto* t = std::get_if<Twist>(&a)) return *t == std::get<Twist>(b);
    if (auto* o = std::get_if<OpaqueBlock>(&a)) return *o == std::get<OpaqueBlock>(b);
    if (auto* p = std::get_if<ProductNode>(&a)) {
        const auto& q = std::get<ProductNode>(b);
        return p->factors == q.factors;
    }
    if (auto* p = std::get_if<PowerNode>(&a)) {
        const auto& q = std::get<PowerNode>(b);
        return p->exponent == q.exponent && p->base == q.base;
    }
    const auto& ca = std::get<CommutatorNode>(a);
    const auto& cb = std::get<CommutatorNode>(b);
    return ca.lhs == cb.lhs && ca.rhs == cb.rhs;
}

TwistWord invert(const TwistWord& w) {
    const auto& n = w.node();
    if (auto* t = std::get_if<Twist>(&n)) return TwistWord::twist(t->curve, -t->exponent);
    if (std::holds_alternative<OpaqueBlock>(n)) return TwistWord::power(w, -1);
    if (auto* p = std::get_if<TwistWord::ProductNode>(&n)) {
        std::vector<TwistWord> rev;
        rev.reserve(p->factors.size());
        for (auto it = p->factors.rbegin(); it != p->factors.rend(); ++it) rev.push_back(invert(*it));
        return TwistWord::product(std::move(rev));
    }
    if (auto* p = std::get_if<TwistWord::PowerNode>(&n))
        return TwistWord::power(p->base, -p->exponent);
    const auto& c = std::get<TwistWord::CommutatorNode>(n);
    return TwistWord::commutator(c.rhs, c.lhs);  // [a,b]^-1 = [b,a]
}

namespace {

template <typename F>
void walk(const TwistWord& w, const F& f) {
    f(w);
    const auto& n = w.node();
    if (auto* p = std::get_if<TwistWord::ProductNode>(&n)) {
        for (const auto& x : p->factors) walk(x, f);
    } else if (auto* p = std::get_if<TwistWord::PowerNode>(&n)) {
        walk(p->base, f);
    } else if (auto* c = std::get_if<TwistWord::CommutatorNode>(&n)) {
        walk(c->lhs, f);
        walk(c->rhs, f);
    }
}

bool positive_impl(const TwistWord& w, bool inside_commutator) {
    const auto& n = w.node();
    if (auto* t = std::get_if<Twist>(&n)) return t->exponent == 1;
    if (auto* o = std::get_if<OpaqueBlock>(&n))
        return inside_commutator || o->kind == OpaqueKind::Commutator;
    if (auto* p = std::get_if<TwistWord::ProductNode>(&n)) {
        for (const auto& x : p->factors)
            if (!positive_impl(x, inside_commutator)) return false;
        return true;
    }
    if (auto* p = std::get_if<TwistWord::PowerNode>(&n))
        return p->exponent >= 0 && positive_impl(p->base, inside_commutator);
    const auto& c = std::get<TwistWord::CommutatorNode>(n);
    // Anything goes inside a commutator; it only has to be well-formed.
    (void)c;
    return true;
}

}  // namespace

bool is_positive(const TwistWord& w) { return positive_impl(w, false); }

bool is_explicit(const TwistWord& w) {
    bool ok = true;
    walk(w, [&](const TwistWord& x) {
        const auto& n = x.node();
        if (std::holds_alternative<OpaqueBlock>(n) ||
            std::holds_alternative<TwistWord::CommutatorNode>(n))
            ok = false;
    });
    return ok;
}

namespace {

bool contains_opaque(const TwistWord& w) {
    bool found = false;
    walk(w, [&](const TwistWord& x) {
        if (std::holds_alternative<OpaqueBlock>(x.node())) found = true;
    });
    return found;
}

// Atoms of a reduced word. Twists merge by curve; opaque blocks merge by
// structural equality of the block.
struct Atom {
    TwistWord word;            // Twist, OpaqueBlock, Power(opaque), Commutator, Power(other)
    bool mergeable = false;    // twist or opaque power
    bool is_twist = false;
    std::string curve;         // twist key
    OpaqueBlock block;         // opaque key
    long long exponent = 0;    // merged exponent for mergeable atoms

    TwistWord render() const {
        if (!mergeable) return word;
        if (is_twist) return TwistWord::twist(curve, exponent);
        if (exponent == 1) return TwistWord::opaque(block);
        return TwistWord::power(TwistWord::opaque(block), exponent);
    }
};

void push_atom(std::vector<Atom>& stack, Atom atom) {
    if (atom.mergeable) {
        if (atom.exponent == 0) return;
        if (!stack.empty() && stack.back().mergeable &&
            stack.back().is_twist == atom.is_twist &&
            (atom.is_twist ? stack.back().curve == atom.curve
                           : stack.back().block == atom.block)) {
            stack.back().exponent += atom.exponent;
            if (stack.back().exponent == 0) stack.pop_back();
            return;
        }
    }
    stack.push_back(std::move(atom));
}

void reduce_into(const TwistWord& w, std::vector<Atom>& stack);

void append_reduced(const TwistWord& reduced, std::vector<Atom>& stack) {
    const auto& n = reduced.node();
    if (auto* p = std::get_if<TwistWord::ProductNode>(&n)) {
        for (const auto& f : p->factors) reduce_into(f, stack);
        return;
    }
    reduce_into(reduced, stack);
}

TwistWord finish(std::vector<Atom>& stack) {
    if (stack.empty()) return TwistWord();
    if (stack.size() == 1) return stack.front().render();
    std::vector<TwistWord> out;
    out.reserve(stack.size());
    for (const auto& a : stack) out.push_back(a.render());
    return TwistWord::product(std::move(out));
}

void reduce_into(const TwistWord& w, std::vector<Atom>& stack) {
    const auto& n = w.node();
    if (auto* t = std::get_if<Twist>(&n)) {
        Atom a;
        a.mergeable = true;
        a.is_twist = true;
        a.curve = t->curve;
        a.exponent = t->exponent;
        push_atom(stack, std::move(a));
        return;
    }
    if (auto* o = std::get_if<OpaqueBlock>(&n)) {
        Atom a;
        a.mergeable = true;
        a.block = *o;
        a.exponent = 1;
        push_atom(stack, std::move(a));
        return;
    }
    if (auto* p = std::get_if<TwistWord::ProductNode>(&n)) {
        for (const auto& f : p->factors) reduce_into(f, stack);
        return;
    }
    if (auto* p = std::get_if<TwistWord::PowerNode>(&n)) {
        // A power of an opaque atom merges directly.
        if (auto* o = std::get_if<OpaqueBlock>(&p->base.node())) {
            Atom a;
            a.mergeable = true;
            a.block = *o;
            a.exponent = p->exponent;
            push_atom(stack, std::move(a));
            return;
        }
        TwistWord base = reduce(p->base);
        if (base.is_empty_product() || p->exponent == 0) {
            // Dropping x^0 must not erase opaque content silently; keep the
            // node when the base still mentions an opaque block.
            if (p->exponent == 0 && contains_opaque(base)) {
                Atom a;
                a.word = TwistWord::power(std::move(base), 0);
                push_atom(stack, std::move(a));
            }
            return;
        }
        if (is_explicit(base)) {
            TwistWord unit = p->exponent > 0 ? base : invert(base);
            long long reps = p->exponent > 0 ? p->exponent : -p->exponent;
            for (long long i = 0; i < reps; ++i) append_reduced(unit, stack);
            return;
        }
        if (p->exponent == 1) {
            append_reduced(base, stack);
            return;
        }
        Atom a;
        a.word = TwistWord::power(std::move(base), p->exponent);
        push_atom(stack, std::move(a));
        return;
    }
    const auto& c = std::get<TwistWord::CommutatorNode>(n);
    TwistWord lhs = reduce(c.lhs);
    TwistWord rhs = reduce(c.rhs);
    if (lhs.is_empty_product() || rhs.is_empty_product()) return;  // [1,w] = 1
    Atom a;
    a.word = TwistWord::commutator(std::move(lhs), std::move(rhs));
    push_atom(stack, std::move(a));
}

}  // namespace

TwistWord reduce(const TwistWord& w) {
    std::vector<Atom> stack;
    reduce_into(w, stack);
    return finish(stack);
}

namespace {

TwistCount swap_signs(TwistCount c) {
    std::swap(c.positive, c.negative);
    return c;
}

TwistCount scale(TwistCount c, long long k) {
    c.positive = checked_mul(c.positive, k);
    c.negative = checked_mul(c.negative, k);
    c.opaque = checked_mul(c.opaque, k);
    return c;
}

TwistCount add(TwistCount a, const TwistCount& b) {
    a.positive = checked_add(a.positive, b.positive);
    a.negative = checked_add(a.negative, b.negative);
    a.opaque = checked_add(a.opaque, b.opaque);
    return a;
}

}  // namespace

TwistCount twist_count(const TwistWord& w) {
    const auto& n = w.node();
    if (auto* t = std::get_if<Twist>(&n)) {
        TwistCount c;
        if (t->exponent > 0)
            c.positive = t->exponent;
        else
            c.negative = -t->exponent;
        return c;
    }
    if (std::holds_alternative<OpaqueBlock>(n)) return TwistCount{0, 0, 1};
    if (auto* p = std::get_if<TwistWord::ProductNode>(&n)) {
        TwistCount c;
        for (const auto& f : p->factors) c = add(c, twist_count(f));
        return c;
    }
    if (auto* p = std::get_if<TwistWord::PowerNode>(&n)) {
        TwistCount c = twist_count(p->base);
        if (p->exponent < 0) return scale(swap_signs(c), -p->exponent);
        return scale(c, p->exponent);
    }
    const auto& c = std::get<TwistWord::CommutatorNode>(n);
    TwistCount a = twist_count(c.lhs);
    TwistCount b = twist_count(c.rhs);
    return add(add(a, b), add(swap_signs(a), swap_signs(b)));
}

std::string opaque_display(const OpaqueBlock& block) {
    std::string out = block.label;
    if (!block.params.empty()) {
        out += "(";
        bool first = true;
        for (const auto& [k, v] : block.params) {
            if (!first) out += ",";
            first = false;
            out += k + "=" + std::to_string(v);
        }
        out += ")";
    }
    return out;
}

std::vector<std::string> unresolved_opaques(const TwistWord& w) {
    std::vector<std::string> labels;
    std::set<std::string> seen;
    walk(w, [&](const TwistWord& x) {
        if (auto* o = std::get_if<OpaqueBlock>(&x.node())) {
            if (o->image) {
                for (const auto& l : unresolved_opaques(*o->image))
                    if (seen.insert(l).second) labels.push_back(l);
                return;
            }
            std::string display = opaque_display(*o);
            if (seen.insert(display).second) labels.push_back(display);
        }
    });
    return labels;
}

SpMatrix::SpMatrix(long long dim, std::vector<long long> entries)
    : dim_(dim), m_(std::move(entries)) {
    check_symplectic();
}

void SpMatrix::check_symplectic() const {
    if (dim_ <= 0 || dim_ % 2 != 0 ||
        m_.size() != static_cast<std::size_t>(dim_ * dim_))
        throw std::domain_error("symplectic matrix must be 2g x 2g");
    // (M^T J M)(i,j) = sum_k M(k,i) (J M)(k,j), with J the block form
    // pairing x_i with y_i: (J v)_{2t} = v_{2t+1}, (J v)_{2t+1} = -v_{2t}.
    for (long long i = 0; i < dim_; ++i) {
        for (long long j = 0; j < dim_; ++j) {
            __int128 acc = 0;
            for (long long t = 0; t < dim_ / 2; ++t) {
                acc += static_cast<__int128>(at(2 * t, i)) * at(2 * t + 1, j);
                acc -= static_cast<__int128>(at(2 * t + 1, i)) * at(2 * t, j);
            }
            __int128 expect = 0;
            if (i / 2 == j / 2) {
                if (i % 2 == 0 && j % 2 == 1) expect = 1;
                if (i % 2 == 1 && j % 2 == 0) expect = -1;
            }
            if (acc != expect)
                throw std::domain_error("matrix is not symplectic for the block form");
        }
    }
}

SpMatrix SpMatrix::identity(long long genus) {
    if (genus <= 0) throw std::domain_error("genus must be positive");
    long long dim = 2 * genus;
    std::vector<long long> e(dim * dim, 0);
    for (long long i = 0; i < dim; ++i) e[i * dim + i] = 1;
    return SpMatrix(dim, std::move(e));
}

SpMatrix SpMatrix::transvection(const HomologyClass& c, long long exponent) {
    long long dim = c.dimension();
    if (dim == 0) throw std::domain_error("transvection requires positive genus");
    std::vector<long long> e(dim * dim, 0);
    // Column j is the image of the basis vector e_j: e_j + k<e_j, c>.c
    for (long long j = 0; j < dim; ++j) {
        long long pairing = (j % 2 == 0) ? c[j + 1] : -c[j - 1];  // <e_j, c>
        long long k = checked_mul(exponent, pairing);
        for (long long i = 0; i < dim; ++i) {
            long long v = (i == j) ? 1 : 0;
            e[i * dim + j] = checked_add(v, checked_mul(k, c[i]));
        }
    }
    return SpMatrix(dim, std::move(e));
}

SpMatrix SpMatrix::from_rows(std::vector<std::vector<long long>> rows) {
    long long dim = static_cast<long long>(rows.size());
    std::vector<long long> e;
    e.reserve(dim * dim);
    for (const auto& row : rows) {
        if (static_cast<long long>(row.size()) != dim)
            throw std::domain_error("matrix must be square");
        e.insert(e.end(), row.begin(), row.end());
    }
    return SpMatrix(dim, std::move(e));
}

SpMatrix SpMatrix::operator*(const SpMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("matrix dimension mismatch");
    std::vector<long long> e(dim_ * dim_, 0);
    for (long long i = 0; i < dim_; ++i) {
        for (long long j = 0; j < dim_; ++j) {
            __int128 acc = 0;
            for (long long k = 0; k < dim_; ++k)
                acc += static_cast<__int128>(at(i, k)) * o.at(k, j);
            if (acc > (1LL << 62) || acc < -(1LL << 62))
                throw std::overflow_error("integer overflow in matrix product");
            e[i * dim_ + j] = static_cast<long long>(acc);
        }
    }
    return SpMatrix(dim_, std::move(e));
}

SpMatrix SpMatrix::inverse() const {
    // For symplectic M: M^-1 = -J M^T J with J as in check_symplectic.
    std::vector<long long> e(dim_ * dim_, 0);
    auto jsign = [](long long i) { return i % 2 == 0 ? 1LL : -1LL; };
    auto jindex = [](long long i) { return i % 2 == 0 ? i + 1 : i - 1; };
    for (long long i = 0; i < dim_; ++i)
        for (long long j = 0; j < dim_; ++j) {
            // (-J M^T J)(i,j) = jsign(i) jsign(j) M(jindex(j), jindex(i))
            long long v = at(jindex(j), jindex(i));
            e[i * dim_ + j] = jsign(i) * jsign(j) * v;
        }
    return SpMatrix(dim_, std::move(e));
}

SpMatrix SpMatrix::pow(long long k) const {
    SpMatrix base = k >= 0 ? *this : inverse();
    unsigned long long reps = k >= 0 ? static_cast<unsigned long long>(k)
                                     : static_cast<unsigned long long>(-(k + 1)) + 1;
    SpMatrix acc = identity(genus());
    while (reps > 0) {
        if (reps & 1) acc = acc * base;
        reps >>= 1;
        if (reps) base = base * base;
    }
    return acc;
}

HomologyClass SpMatrix::apply(const HomologyClass& v) const {
    if (v.dimension() != dim_) throw std::invalid_argument("vector dimension mismatch");
    std::vector<long long> out(dim_, 0);
    for (long long i = 0; i < dim_; ++i) {
        __int128 acc = 0;
        for (long long j = 0; j < dim_; ++j) acc += static_cast<__int128>(at(i, j)) * v[j];
        if (acc > (1LL << 62) || acc < -(1LL << 62))
            throw std::overflow_error("integer overflow applying matrix");
        out[i] = static_cast<long long>(acc);
    }
    return HomologyClass(std::move(out));
}

namespace {

SpMatrix evaluate_known(const TwistWord& w, const CurveModel& model) {
    const auto& n = w.node();
    if (auto* t = std::get_if<Twist>(&n))
        return SpMatrix::transvection(model.curve(t->curve).homology, t->exponent);
    if (auto* o = std::get_if<OpaqueBlock>(&n)) return evaluate_known(*o->image, model);
    if (auto* p = std::get_if<TwistWord::ProductNode>(&n)) {
        SpMatrix acc = SpMatrix::identity(model.genus());
        for (const auto& f : p->factors) acc = acc * evaluate_known(f, model);
        return acc;
    }
    if (auto* p = std::get_if<TwistWord::PowerNode>(&n))
        return evaluate_known(p->base, model).pow(p->exponent);
    const auto& c = std::get<TwistWord::CommutatorNode>(n);
    SpMatrix a = evaluate_known(c.lhs, model);
    SpMatrix b = evaluate_known(c.rhs, model);
    return a * b * a.inverse() * b.inverse();
}

}  // namespace

Evaluation evaluate(const TwistWord& w, const CurveModel& model) {
    Evaluation result;
    result.opaque_labels = unresolved_opaques(w);
    if (!result.opaque_labels.empty()) return result;
    result.matrix = evaluate_known(w, model);
    return result;
}

Verdict certify_relation(const TwistWord& lhs, const TwistWord& rhs, const CurveModel& model) {
    Evaluation a = evaluate(lhs, model);
    Evaluation b = evaluate(rhs, model);
    if (!a.matrix || !b.matrix) {
        Verdict v;
        v.kind = VerdictKind::Indeterminate;
        v.opaque_labels = a.opaque_labels;
        std::set<std::string> seen(v.opaque_labels.begin(), v.opaque_labels.end());
        for (const auto& l : b.opaque_labels)
            if (seen.insert(l).second) v.opaque_labels.push_back(l);
        return v;
    }
    if (*a.matrix == *b.matrix) return Verdict{};
    // First basis vector on which the images differ = first differing column.
    long long dim = a.matrix->dimension();
    for (long long j = 0; j < dim; ++j) {
        for (long long i = 0; i < dim; ++i) {
            if (a.matrix->at(i, j) != b.matrix->at(i, j)) {
                std::vector<long long> e(dim, 0);
                e[j] = 1;
                Verdict v;
                v.kind = VerdictKind::Refuted;
                v.witness = HomologyClass(std::move(e));
                return v;
            }
        }
    }
    throw std::logic_error("unequal matrices with no differing column");
}

}  // namespace mcg
