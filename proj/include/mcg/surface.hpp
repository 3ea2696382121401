#pragma once

// Model surfaces with boundary, named simple closed curves with integral
// homology classes, the symplectic intersection pairing on H_1, and the
// transvection action of Dehn twists.
//
// Basis convention: H_1 of a genus-g surface (one boundary component or
// closed) is Z^{2g} with ordered basis x_1, y_1, ..., x_g, y_g and pairing
// <x_i, y_i> = +1, all other basis pairs 0.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcg {

// Exact integer arithmetic helpers. All linear algebra in this library is
// over Z; any overflow is a hard error, never a wrapped value.
long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

struct Surface {
    long long genus = 0;
    long long boundary_components = 0;
    long long marked_points = 0;

    Surface() = default;
    Surface(long long g, long long b, long long r = 0);

    long long euler_characteristic() const { return 2 - 2 * genus - boundary_components; }

    friend bool operator==(const Surface&, const Surface&) = default;
};

class HomologyClass {
public:
    HomologyClass() = default;
    explicit HomologyClass(std::vector<long long> coefficients);

    // Basis vectors x_i, y_i (1-based i) on a genus-g surface.
    static HomologyClass zero(long long genus);
    static HomologyClass basis_x(long long genus, long long i);
    static HomologyClass basis_y(long long genus, long long i);

    long long genus() const { return static_cast<long long>(coeffs_.size()) / 2; }
    long long dimension() const { return static_cast<long long>(coeffs_.size()); }
    bool is_zero() const;

    long long operator[](std::size_t k) const { return coeffs_[k]; }
    const std::vector<long long>& coefficients() const { return coeffs_; }

    HomologyClass operator+(const HomologyClass& o) const;
    HomologyClass operator-(const HomologyClass& o) const;
    HomologyClass scaled(long long k) const;

    friend bool operator==(const HomologyClass&, const HomologyClass&) = default;

private:
    std::vector<long long> coeffs_;  // length 2g, basis order x_1,y_1,...,x_g,y_g
};

// <u,v> under the block symplectic form. Throws std::invalid_argument on a
// dimension mismatch.
long long intersection(const HomologyClass& u, const HomologyClass& v);

// Action of the positive Dehn twist along class c: v + <v,c>.c
HomologyClass transvect(const HomologyClass& c, const HomologyClass& v);
// Inverse twist: v - <v,c>.c
HomologyClass transvect_inverse(const HomologyClass& c, const HomologyClass& v);

struct NamedCurve {
    std::string name;
    HomologyClass homology;
    // Present iff the curve separates: genus of one side, normalized to
    // min(j, g-j). A curve with nonzero homology class never carries it.
    std::optional<long long> separating_split;
    bool boundary_parallel = false;

    bool non_separating() const { return !homology.is_zero(); }
};

// Throws std::domain_error unless the separating metadata is consistent with
// the homology class (split present iff class is zero and not boundary
// parallel; 1 <= j <= g/2 after normalization).
NamedCurve make_curve(std::string name, HomologyClass homology,
                      std::optional<long long> separating_split = std::nullopt,
                      bool boundary_parallel = false);

class CurveModel {
public:
    explicit CurveModel(Surface surface) : surface_(surface) {}

    const Surface& surface() const { return surface_; }
    long long genus() const { return surface_.genus; }

    void add_curve(NamedCurve curve);
    void add_alias(const std::string& alias, const std::string& target);

    bool has(const std::string& name) const;
    const NamedCurve& curve(const std::string& name) const;  // throws UnknownCurveError
    const std::vector<NamedCurve>& curves() const { return curves_; }

private:
    Surface surface_;
    std::vector<NamedCurve> curves_;
    std::map<std::string, std::size_t> index_;
};

struct UnknownCurveError : std::domain_error {
    explicit UnknownCurveError(const std::string& name)
        : std::domain_error("unknown curve identifier: " + name), curve(name) {}
    std::string curve;
};

// The standard curve system on the genus-g surface with one boundary
// component, g >= 2: the chain c_1, ..., c_{2g-2}, b, r (with aliases
// c_{2g-1} = b and c_{2g} = r), the boundary-parallel curve delta, and a_1.
//
// Homology assignment: chain_{2i-1} -> x_i, chain_{2i} -> y_i - y_{i+1}
// (i < g), r -> y_g, delta -> 0. a_1 defaults to x_g + y_g and can be
// overridden; it is a declared model parameter, not forced by the chain.
CurveModel standard_model(long long g);
CurveModel standard_model(long long g, const HomologyClass& a1_class);

}  // namespace mcg
