#include "mcg/surface.hpp"

#include <cstdlib>
#include <utility>

namespace mcg {

namespace {
// Entries are capped well below the int64 range so that dot products of
// rows/columns can be accumulated in __int128 without wrapping.
constexpr long long kEntryCap = 1LL << 62;

long long capped(__int128 v, const char* what) {
    if (v > static_cast<__int128>(kEntryCap) || v < -static_cast<__int128>(kEntryCap))
        throw std::overflow_error(std::string("integer overflow in ") + what);
    return static_cast<long long>(v);
}
}  // namespace

long long checked_add(long long a, long long b) {
    return capped(static_cast<__int128>(a) + b, "addition");
}

long long checked_mul(long long a, long long b) {
    return capped(static_cast<__int128>(a) * b, "multiplication");
}

Surface::Surface(long long g, long long b, long long r)
    : genus(g), boundary_components(b), marked_points(r) {
    if (g < 0 || b < 0 || r < 0)
        throw std::domain_error("surface parameters must be non-negative");
}

HomologyClass::HomologyClass(std::vector<long long> coefficients)
    : coeffs_(std::move(coefficients)) {
    if (coeffs_.size() % 2 != 0)
        throw std::invalid_argument("homology vector length must be 2*genus");
}

HomologyClass HomologyClass::zero(long long genus) {
    if (genus < 0) throw std::domain_error("negative genus");
    return HomologyClass(std::vector<long long>(2 * genus, 0));
}

HomologyClass HomologyClass::basis_x(long long genus, long long i) {
    if (i < 1 || i > genus) throw std::invalid_argument("basis index out of range");
    auto v = zero(genus);
    v.coeffs_[2 * (i - 1)] = 1;
    return v;
}

HomologyClass HomologyClass::basis_y(long long genus, long long i) {
    if (i < 1 || i > genus) throw std::invalid_argument("basis index out of range");
    auto v = zero(genus);
    v.coeffs_[2 * (i - 1) + 1] = 1;
    return v;
}

bool HomologyClass::is_zero() const {
    for (long long c : coeffs_)
        if (c != 0) return false;
    return true;
}

namespace {
void require_same_dim(const HomologyClass& u, const HomologyClass& v) {
    if (u.dimension() != v.dimension())
        throw std::invalid_argument("homology classes live on different surfaces");
}
}  // namespace

HomologyClass HomologyClass::operator+(const HomologyClass& o) const {
    require_same_dim(*this, o);
    auto out = coeffs_;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = checked_add(out[k], o.coeffs_[k]);
    return HomologyClass(std::move(out));
}

HomologyClass HomologyClass::operator-(const HomologyClass& o) const {
    return *this + o.scaled(-1);
}

HomologyClass HomologyClass::scaled(long long k) const {
    auto out = coeffs_;
    for (auto& c : out) c = checked_mul(c, k);
    return HomologyClass(std::move(out));
}

long long intersection(const HomologyClass& u, const HomologyClass& v) {
    require_same_dim(u, v);
    __int128 acc = 0;
    for (long long i = 0; i < u.genus(); ++i) {
        acc += static_cast<__int128>(u[2 * i]) * v[2 * i + 1];
        acc -= static_cast<__int128>(u[2 * i + 1]) * v[2 * i];
    }
    if (acc > (1LL << 62) || acc < -(1LL << 62))
        throw std::overflow_error("integer overflow in intersection pairing");
    return static_cast<long long>(acc);
}

HomologyClass transvect(const HomologyClass& c, const HomologyClass& v) {
    return v + c.scaled(intersection(v, c));
}

HomologyClass transvect_inverse(const HomologyClass& c, const HomologyClass& v) {
    return v - c.scaled(intersection(v, c));
}

NamedCurve make_curve(std::string name, HomologyClass homology,
                      std::optional<long long> separating_split, bool boundary_parallel) {
    NamedCurve curve{std::move(name), std::move(homology), separating_split, boundary_parallel};
    const long long g = curve.homology.genus();
    if (!curve.homology.is_zero()) {
        if (curve.separating_split || curve.boundary_parallel)
            throw std::domain_error("curve " + curve.name +
                                    ": nonzero homology class admits no separating metadata");
        return curve;
    }
    if (curve.boundary_parallel) {
        if (curve.separating_split)
            throw std::domain_error("curve " + curve.name +
                                    ": boundary-parallel curve carries no genus split");
        return curve;
    }
    if (!curve.separating_split)
        throw std::domain_error("curve " + curve.name +
                                ": zero homology class requires a separating split");
    long long j = *curve.separating_split;
    if (j < 1 || j > g - 1)
        throw std::domain_error("curve " + curve.name + ": separating split out of range");
    curve.separating_split = std::min(j, g - j);
    return curve;
}

void CurveModel::add_curve(NamedCurve curve) {
    if (curve.homology.genus() != surface_.genus)
        throw std::invalid_argument("curve " + curve.name + " has the wrong homology dimension");
    if (index_.count(curve.name))
        throw std::invalid_argument("duplicate curve name: " + curve.name);
    index_[curve.name] = curves_.size();
    curves_.push_back(std::move(curve));
}

void CurveModel::add_alias(const std::string& alias, const std::string& target) {
    if (index_.count(alias)) throw std::invalid_argument("duplicate curve name: " + alias);
    auto it = index_.find(target);
    if (it == index_.end()) throw UnknownCurveError(target);
    index_[alias] = it->second;
}

bool CurveModel::has(const std::string& name) const { return index_.count(name) != 0; }

const NamedCurve& CurveModel::curve(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw UnknownCurveError(name);
    return curves_[it->second];
}

CurveModel standard_model(long long g) {
    if (g < 2) throw std::domain_error("standard model requires genus >= 2");
    HomologyClass a1 = HomologyClass::basis_x(g, g) + HomologyClass::basis_y(g, g);
    return standard_model(g, a1);
}

CurveModel standard_model(long long g, const HomologyClass& a1_class) {
    if (g < 2) throw std::domain_error("standard model requires genus >= 2");
    if (a1_class.genus() != g)
        throw std::invalid_argument("a_1 class has the wrong dimension");
    CurveModel model(Surface(g, 1));

    // The chain: positions 1..2g-2 are c_i, position 2g-1 is b, 2g is r.
    for (long long pos = 1; pos <= 2 * g; ++pos) {
        HomologyClass cls = HomologyClass::zero(g);
        if (pos % 2 == 1) {
            cls = HomologyClass::basis_x(g, (pos + 1) / 2);
        } else if (pos < 2 * g) {
            long long i = pos / 2;
            cls = HomologyClass::basis_y(g, i) - HomologyClass::basis_y(g, i + 1);
        } else {
            cls = HomologyClass::basis_y(g, g);
        }
        std::string name;
        if (pos <= 2 * g - 2)
            name = "c" + std::to_string(pos);
        else
            name = (pos == 2 * g - 1) ? "b" : "r";
        model.add_curve(make_curve(name, std::move(cls)));
    }
    model.add_alias("c" + std::to_string(2 * g - 1), "b");
    model.add_alias("c" + std::to_string(2 * g), "r");

    model.add_curve(make_curve("delta", HomologyClass::zero(g), std::nullopt,
                               /*boundary_parallel=*/true));
    model.add_curve(make_curve("a1", a1_class));
    return model;
}

}  // namespace mcg
