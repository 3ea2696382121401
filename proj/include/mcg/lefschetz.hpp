#pragma once

// Lefschetz fibration records over closed or bounded bases, their numerical
// invariants, fiber/section excision (producing allowable fibrations with
// spinal boundary), and fiber sums.
//
// Signature policy: the field is populated only when it is actually
// computable — the genus-2 closed forms, or an explicit hyperelliptic count
// via the signature formula. It is never estimated.

#include <optional>
#include <string>
#include <vector>

#include "mcg/families.hpp"
#include "mcg/spinal.hpp"

namespace mcg {

struct SectionRecord {
    std::string label;
    long long self_intersection = 0;
    friend bool operator==(const SectionRecord&, const SectionRecord&) = default;
};

struct LefschetzFibration {
    long long fiber_genus = 0;
    long long fiber_boundary_components = 0;
    long long base_genus = 0;
    long long base_boundary_components = 0;
    std::vector<VanishingCycle> vanishing_cycles;
    long long commutator_count = 0;
    std::vector<SectionRecord> sections;  // assumed pairwise disjoint

    long long euler = 0;
    std::optional<long long> signature;
    std::optional<TwistWord> monodromy;

    bool closed_fiber() const { return fiber_boundary_components == 0; }
    bool closed_base() const { return base_boundary_components == 0; }
    bool all_cycles_non_separating() const;
    // Bounded fiber and base, no fiber containing a closed embedded surface.
    bool allowable() const;
};

// Number of Lefschetz critical points of X_{g,h,n}(m):
//   h  = 1:  10m - (8g^2+4g) n
//   h  > 1:  (8g+4)m + (8g^2+4g)(2h-2-n)
// Strictly increasing in m.
long long critical_count(long long g, long long h, long long n, long long m);

// Euler characteristic of a fibration with closed fiber and closed base:
// (2-2g)(2-2h) + #cycles.
long long euler_characteristic(const LefschetzFibration& f);

struct IntegralityError : std::domain_error {
    using std::domain_error::domain_error;
};

// Signature of a hyperelliptic genus-g fibration from the cycle counts:
// N non-separating cycles and s_j separating cycles of genus split j.
// Exact rational evaluation; a non-integer value means inconsistent input
// and raises IntegralityError.
long long endo_signature(long long g, long long N,
                         const std::map<long long, long long>& separating_counts);

struct InvariantReport {
    long long M = 0;
    long long euler = 0;
    std::optional<long long> signature;
    std::optional<long long> c1_squared;  // 2e + 3s, when s is known
    std::optional<long long> c2;          // e, when s is known
    bool hyperelliptic = false;
};

// Closed-form invariants of X_{g,h,n}(m); signature and Chern numbers only
// for g = 2, cross-checked against the signature formula.
InvariantReport family_invariants(long long g, long long h, long long n, long long m);

// The closed total space of the family factorization, with a single
// self-intersection-n section.
LefschetzFibration family_fibration(long long g, long long h, long long n, long long m);

struct ExcisionResult {
    LefschetzFibration fibration;  // allowable, bounded fiber and base
    FramedSpinalOpenBook boundary;
};

// Excise fibered tubular neighborhoods of `fiber_count` regular fibers and
// the named sections. The base gains one boundary circle per fiber, the
// fiber one per section; the boundary spinal open book has one paper
// component per excised fiber (pages = fiber minus one disk per section) and
// one spine component per section (vertebrae = base minus one disk per
// fiber, framed by the section's self-intersection). Euler characteristic
// drops by e(F u S) = k e(F) + sum e(S_i) - k l; the signature is unchanged.
ExcisionResult excise_fiber_and_sections(const LefschetzFibration& f,
                                         const std::vector<std::string>& section_labels,
                                         long long fiber_count = 1);

// Fiber sum of a fibration over a closed base with one over the sphere,
// patching the paired sections (self-intersections add).
LefschetzFibration fiber_sum(const LefschetzFibration& f1, const LefschetzFibration& f2,
                             const std::vector<std::pair<std::string, std::string>>& section_pairing);

}  // namespace mcg
