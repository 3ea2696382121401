#pragma once

// Plumbing graphs for the boundary 3-manifolds Y_{g,h,n} and their
// generalizations: vertices are circle bundles over closed surfaces (genus,
// euler number), edges are plumbing identifications. First homology is
// computed from the standard presentation — base-surface classes contribute
// freely, fiber classes are presented by the linking matrix — with exact
// integer Smith normal form.

#include <string>
#include <vector>

#include "mcg/surface.hpp"

namespace mcg {

struct PlumbingVertex {
    long long genus = 0;
    long long euler_number = 0;
    friend bool operator==(const PlumbingVertex&, const PlumbingVertex&) = default;
};

struct PlumbingGraph {
    std::vector<PlumbingVertex> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // multi-edges allowed

    // Throws std::domain_error unless non-empty and connected.
    void validate() const;
};

// Two vertices (g, 0) and (h, n), one edge; g >= 2, h >= 1, n <= 2h-2.
PlumbingGraph build_Y(long long g, long long h, long long n);

// k top vertices (g, 0), l bottom vertices (h, framings[i]); every top
// vertex linked once to every bottom vertex.
PlumbingGraph build_generalized(long long k, long long l, long long g, long long h,
                                const std::vector<long long>& framings);

// Symmetric; diagonal = euler numbers, off-diagonal = edge multiplicities.
std::vector<std::vector<long long>> linking_matrix(const PlumbingGraph& p);

struct HomologyResult {
    long long free_rank = 0;
    std::vector<long long> torsion;  // each > 1, each dividing the next
    friend bool operator==(const HomologyResult&, const HomologyResult&) = default;
};

// Invariant factors of an integer matrix (the diagonal of its Smith normal
// form), made non-negative, zeros last.
std::vector<long long> smith_invariant_factors(std::vector<std::vector<long long>> matrix);

// H_1 of the plumbed 3-manifold: free rank = sum of 2*genus over vertices
// plus the corank of the linking matrix; torsion = its nontrivial invariant
// factors.
HomologyResult first_homology(const PlumbingGraph& p);

}  // namespace mcg
