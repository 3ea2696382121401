#pragma once

// Seeded random generators shared by the property tests. Everything is
// deterministic: a fixed seed per test site.

#include <random>

#include "mcg/spinal.hpp"
#include "mcg/words.hpp"

namespace mcg::testing {

using Rng = std::mt19937_64;

inline long long pick(Rng& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline std::string pick_curve(Rng& rng) {
    static const char* names[] = {"c1", "c2", "c3", "c4", "b", "r", "a1", "delta"};
    return names[pick(rng, 0, 7)];
}

inline long long nonzero_exponent(Rng& rng, long long bound) {
    long long e = pick(rng, 1, bound);
    return pick(rng, 0, 1) ? e : -e;
}

// Random word over the standard genus-2 model curves. Depth-bounded;
// opaque-free unless asked otherwise.
inline TwistWord random_word(Rng& rng, int depth, bool with_opaques) {
    long long shape = pick(rng, 0, depth <= 0 ? 1 : 9);
    if (shape <= 1) return TwistWord::twist(pick_curve(rng), nonzero_exponent(rng, 3));
    if (shape <= 5) {
        std::vector<TwistWord> factors;
        long long len = pick(rng, 0, 4);
        for (long long i = 0; i < len; ++i)
            factors.push_back(random_word(rng, depth - 1, with_opaques));
        return TwistWord::product(std::move(factors));
    }
    if (shape <= 7)
        return TwistWord::power(random_word(rng, depth - 1, with_opaques), pick(rng, -3, 3));
    if (shape == 8 || !with_opaques)
        return TwistWord::commutator(random_word(rng, depth - 1, with_opaques),
                                     random_word(rng, depth - 1, with_opaques));
    OpaqueBlock block;
    static const char* labels[] = {"Q1", "Q2", "alpha", "C1", "C2"};
    block.label = labels[pick(rng, 0, 4)];
    block.kind = block.label[0] == 'C' ? OpaqueKind::Commutator : OpaqueKind::UnknownElement;
    if (pick(rng, 0, 1)) block.params["m"] = pick(rng, 0, 9);
    return TwistWord::opaque(std::move(block));
}

// Random simple spinal open book with p paper and s spine components.
inline SpinalOpenBook random_book(Rng& rng, long long papers_count, long long spines_count,
                                  long long vertebra_genus) {
    long long page_genus = pick(rng, 0, 2);
    std::vector<PaperComponent> papers;
    std::vector<SpineComponent> spines;
    std::map<std::string, std::string> matching;
    for (long long pi = 1; pi <= papers_count; ++pi) {
        PaperComponent p;
        p.id = "P" + std::to_string(pi);
        p.page = Surface(page_genus, spines_count);
        p.monodromy = reduce(random_word(rng, 2, false));
        papers.push_back(std::move(p));
    }
    for (long long si = 1; si <= spines_count; ++si) {
        SpineComponent s;
        s.id = "S" + std::to_string(si);
        s.vertebra = Surface(vertebra_genus, papers_count);
        for (long long pi = 1; pi <= papers_count; ++pi) {
            std::string spine_label = s.id + "x" + std::to_string(pi);
            std::string paper_label = "P" + std::to_string(pi) + "x" + std::to_string(si);
            s.boundary_labels.push_back(spine_label);
            papers[pi - 1].boundary_labels.push_back(paper_label);
            matching[paper_label] = spine_label;
        }
        spines.push_back(std::move(s));
    }
    return SpinalOpenBook(std::move(papers), std::move(spines), std::move(matching));
}

// A valid tap spec for the book: a merge of two papers when possible and
// allowed, otherwise a same-boundary split (vertebra genus permitting).
inline TapSpec random_tap_spec(Rng& rng, const SpinalOpenBook& book, int serial) {
    TapSpec spec;
    spec.gluing = "glue" + std::to_string(serial);
    bool can_merge = book.papers().size() >= 2;
    bool can_split = book.vertebra().genus >= 1;
    bool merge = can_merge && (!can_split || pick(rng, 0, 1) == 0);
    if (merge) {
        std::size_t ia = static_cast<std::size_t>(
            pick(rng, 0, static_cast<long long>(book.papers().size()) - 1));
        std::size_t ib = static_cast<std::size_t>(
            pick(rng, 0, static_cast<long long>(book.papers().size()) - 2));
        if (ib >= ia) ++ib;
        spec.paper_a = book.papers()[ia].id;
        spec.paper_b = book.papers()[ib].id;
        for (std::size_t si = 0; si < book.spines().size(); ++si)
            spec.arcs.push_back(TapArc{book.spines()[si].boundary_labels[ia],
                                       book.spines()[si].boundary_labels[ib]});
    } else {
        std::size_t ia = static_cast<std::size_t>(
            pick(rng, 0, static_cast<long long>(book.papers().size()) - 1));
        spec.paper_a = spec.paper_b = book.papers()[ia].id;
        for (std::size_t si = 0; si < book.spines().size(); ++si)
            spec.arcs.push_back(TapArc{book.spines()[si].boundary_labels[ia],
                                       book.spines()[si].boundary_labels[ia]});
    }
    return spec;
}

}  // namespace mcg::testing
