#pragma once

// Abstract spinal open books and the spinal-tap rewrite.
//
// A spinal open book decomposes a 3-manifold into "paper" (a surface bundle
// over circles, with pages as fibers) and a "spine" (circle bundles over the
// vertebrae), glued along interface tori. All books here are symmetric
// (homeomorphic pages), uniform (homeomorphic vertebrae) and simple (each
// spine component meets each paper component along exactly one interface
// torus); constructors enforce this.
//
// The tap cuts every vertebra along an arc and rewrites the paper: an arc
// joining two distinct boundary circles of the vertebra merges the two
// adjacent paper components (monodromies concatenate through a symbolic
// gluing); an arc with both endpoints on one boundary circle splits the
// adjacent paper component in two. Folding is the inverse rewrite. Each tap
// realizes a Stein cobordism made of one 1-handle and b_1(S) 2-handles,
// where S is the closed tap surface F_1 u -F_2.
//
// Gluings are symbolic: a fresh opaque label g enters merged words as the
// conjugating pair g^-1 ... g, and split words as a trailing g^-1 with a
// complementary single-g word. Free reduction cancels matching labels, which
// is what makes tap-then-fold the identity on book values.

#include <optional>
#include <string>
#include <vector>

#include "mcg/surface.hpp"
#include "mcg/words.hpp"

namespace mcg {

struct PaperComponent {
    std::string id;
    Surface page;  // non-empty boundary
    TwistWord monodromy;
    std::vector<std::string> boundary_labels;  // one per page boundary circle
};

struct SpineComponent {
    std::string id;
    Surface vertebra;  // non-empty boundary
    std::vector<std::string> boundary_labels;
};

class SpinalOpenBook {
public:
    // Validates the bijection between paper and spine boundary labels and the
    // symmetric/uniform/simple conditions; throws std::domain_error.
    SpinalOpenBook(std::vector<PaperComponent> papers, std::vector<SpineComponent> spines,
                   std::map<std::string, std::string> matching);

    const std::vector<PaperComponent>& papers() const { return papers_; }
    const std::vector<SpineComponent>& spines() const { return spines_; }
    // paper boundary label -> spine boundary label
    const std::map<std::string, std::string>& matching() const { return matching_; }

    const PaperComponent& paper(const std::string& id) const;
    const SpineComponent& spine(const std::string& id) const;
    // Paper component owning the paper-side label matched to a spine label.
    const PaperComponent& paper_for_spine_label(const std::string& spine_label) const;

    Surface page() const { return papers_.front().page; }
    Surface vertebra() const { return spines_.front().vertebra; }

    long long total_vertebra_euler() const;

    bool operator==(const SpinalOpenBook& o) const;

private:
    std::vector<PaperComponent> papers_;
    std::vector<SpineComponent> spines_;
    std::map<std::string, std::string> matching_;
};

struct InterfaceSlope {
    long long p = 1;  // dividing slope (-p, q), p, q > 0
    long long q = 1;
    friend bool operator==(const InterfaceSlope&, const InterfaceSlope&) = default;
};

struct SpineFraming {
    // Degrees of the chosen section over a basis of the vertebra's first
    // homology (rank 2*genus + boundary - 1 for a bounded vertebra).
    std::vector<long long> degrees;
    // Self-intersection of the originating section when the book is the
    // boundary of an excised fibration.
    long long section_self_intersection = 0;
    friend bool operator==(const SpineFraming&, const SpineFraming&) = default;
};

class FramedSpinalOpenBook {
public:
    FramedSpinalOpenBook(SpinalOpenBook book, std::vector<SpineFraming> framings,
                         std::map<std::string, InterfaceSlope> interface_slopes);

    const SpinalOpenBook& underlying() const { return book_; }
    const std::vector<SpineFraming>& framings() const { return framings_; }
    // Keyed by the spine-side boundary label of the interface torus.
    const std::map<std::string, InterfaceSlope>& interface_slopes() const { return slopes_; }

    bool operator==(const FramedSpinalOpenBook& o) const;

private:
    SpinalOpenBook book_;
    std::vector<SpineFraming> framings_;
    std::map<std::string, InterfaceSlope> slopes_;
};

// Changing the section's degree leaves the underlying book (and hence the
// supported contact structure, up to isotopy) unchanged.
FramedSpinalOpenBook change_framing(const FramedSpinalOpenBook& fb, std::size_t spine_index,
                                    std::size_t basis_direction, long long delta);

struct TapArc {
    // Spine-side boundary labels of the arc endpoints; equal labels mean both
    // endpoints lie on the same boundary circle.
    std::string from;
    std::string to;
    bool same_boundary() const { return from == to; }
};

struct TapSpec {
    std::vector<TapArc> arcs;  // one per spine component, in spine order
    // Paper components carrying the designated fibers F_1 and F_2; equal ids
    // designate two parallel fibers of one component.
    std::string paper_a;
    std::string paper_b;
    std::string gluing;  // fresh symbolic identification F_1 -> F_2
};

struct FoldSpec {
    struct Band {
        // Spine-side boundary circles the band's feet rest on; equal labels
        // mean both feet on one circle (re-splitting a tap-merged circle).
        std::string from;
        std::string to;
        bool same_boundary() const { return from == to; }
    };
    std::vector<Band> bands;  // one per spine component, in spine order
    std::string paper_a;      // equal ids designate one component to split
    std::string paper_b;
    std::string gluing;
};

struct CobordismAccount {
    long long one_handles = 0;
    long long two_handles = 0;
    friend bool operator==(const CobordismAccount&, const CobordismAccount&) = default;
};

struct TapResult {
    SpinalOpenBook book;
    CobordismAccount account;
    FoldSpec inverse;  // folding with this spec undoes the tap
};

// Cut along the spinal tap surface determined by spec. The account is always
// (1, b_1(S)) with chi(S) = chi(F_1) + chi(F_2).
TapResult spinal_tap(const SpinalOpenBook& book, const TapSpec& spec);

// Inverse rewrite: attach a band to every vertebra and merge or split the
// designated paper components.
SpinalOpenBook fold(const SpinalOpenBook& book, const FoldSpec& spec);

// The ordinary open book of a Lefschetz fibration over the disk, as a spinal
// open book: one paper component with the given positive monodromy, one disk
// vertebra per page boundary circle.
SpinalOpenBook boundary_of_disk_fibration(const TwistWord& word, const Surface& page);

struct PageIdentification {
    std::string paper_id;
    // Symbolic identification with the common page model; empty = identity.
    std::string label;
};

// Total monodromy phi_1^{i_1} o ... o phi_n^{i_n} with phi^i = i o phi o
// i^-1, composed in the order given (rightmost acts first) and reduced.
TwistWord total_monodromy(const SpinalOpenBook& book,
                          const std::vector<PageIdentification>& identifications);

struct PositiveCosetCandidate {
    TwistWord twists;                    // positive part
    std::vector<TwistWord> commutators;  // commutator factors, possibly opaque
};

// Checks a certificate that phi factors as (positive twists) x (commutators)
// with strictly fewer than h commutators, at the symplectic level. Never
// searches for a factorization.
Verdict check_positive_coset_certificate(const TwistWord& phi,
                                         const PositiveCosetCandidate& candidate, long long h,
                                         const CurveModel& model);

}  // namespace mcg
