#include "mcg/lefschetz.hpp"

#include <algorithm>
#include <set>

#include "mcg/rational.hpp"

namespace mcg {

bool LefschetzFibration::all_cycles_non_separating() const {
    return std::all_of(vanishing_cycles.begin(), vanishing_cycles.end(),
                       [](const VanishingCycle& c) { return c.non_separating(); });
}

bool LefschetzFibration::allowable() const {
    return fiber_boundary_components > 0 && base_boundary_components > 0 &&
           all_cycles_non_separating();
}

long long critical_count(long long g, long long h, long long n, long long m) {
    validate_family_parameters(g, h, n, m);
    long long chain = checked_mul(4 * g, 2 * g + 1);  // 8g^2 + 4g
    if (h == 1) return checked_add(checked_mul(10, m), -checked_mul(chain, n));
    long long k = 2 * h - 2 - n;
    return checked_add(checked_mul(8 * g + 4, m), checked_mul(chain, k));
}

long long euler_characteristic(const LefschetzFibration& f) {
    if (!f.closed_fiber() || !f.closed_base())
        throw std::domain_error("product Euler formula needs closed fiber and base");
    return checked_add(
        checked_mul(2 - 2 * f.fiber_genus, 2 - 2 * f.base_genus),
        static_cast<long long>(f.vanishing_cycles.size()));
}

long long endo_signature(long long g, long long N,
                         const std::map<long long, long long>& separating_counts) {
    if (g < 1) throw std::domain_error("signature formula needs genus >= 1");
    if (N < 0) throw std::domain_error("cycle counts must be non-negative");
    Rational sigma = Rational(-(g + 1), 2 * g + 1) * Rational(N);
    for (const auto& [j, count] : separating_counts) {
        if (j < 1 || j > g / 2) throw std::domain_error("separating split out of range");
        if (count < 0) throw std::domain_error("cycle counts must be non-negative");
        Rational coeff = Rational(checked_mul(checked_mul(4, j), g - j), 2 * g + 1) - Rational(1);
        sigma = sigma + coeff * Rational(count);
    }
    if (!sigma.is_integer())
        throw IntegralityError("signature formula yields a non-integer; inconsistent counts");
    return sigma.num;
}

InvariantReport family_invariants(long long g, long long h, long long n, long long m) {
    InvariantReport report;
    report.M = critical_count(g, h, n, m);
    report.euler = checked_add(checked_mul(4, checked_mul(g - 1, h - 1)), report.M);
    report.hyperelliptic = (g == 2);
    if (g == 2) {
        long long k = 2 * h - 2 - n;
        long long sigma = h == 1 ? -6 * m + 24 * n : -12 * m - 24 * k;
        if (sigma != endo_signature(2, report.M, {}))
            throw std::logic_error("closed-form signature disagrees with the signature formula");
        report.signature = sigma;
        report.c1_squared = checked_add(checked_mul(2, report.euler), checked_mul(3, sigma));
        report.c2 = report.euler;
    }
    return report;
}

LefschetzFibration family_fibration(long long g, long long h, long long n, long long m) {
    Factorization fact = build_factorization(g, h, n, m);
    InvariantReport inv = family_invariants(g, h, n, m);

    LefschetzFibration f;
    f.fiber_genus = g;
    f.base_genus = h;
    f.vanishing_cycles = fact.vanishing_cycles;
    f.commutator_count = h;
    f.sections = {SectionRecord{"S", n}};
    f.euler = inv.euler;
    f.signature = inv.signature;
    f.monodromy = fact.word;
    if (euler_characteristic(f) != f.euler)
        throw std::logic_error("cycle count disagrees with the Euler formula");
    return f;
}

ExcisionResult excise_fiber_and_sections(const LefschetzFibration& f,
                                         const std::vector<std::string>& section_labels,
                                         long long fiber_count) {
    if (!f.closed_fiber() || !f.closed_base())
        throw std::domain_error("excision starts from a closed fiber and base");
    if (!f.all_cycles_non_separating())
        throw std::domain_error("a separating vanishing cycle obstructs allowability");
    if (section_labels.empty()) throw std::domain_error("at least one section must be excised");
    if (fiber_count < 1) throw std::domain_error("at least one fiber must be excised");
    if (!f.monodromy) throw std::domain_error("excision needs the monodromy word");

    std::vector<SectionRecord> excised;
    {
        std::set<std::string> wanted(section_labels.begin(), section_labels.end());
        if (wanted.size() != section_labels.size())
            throw std::domain_error("section labels must be distinct");
        for (const auto& s : f.sections)
            if (wanted.erase(s.label)) excised.push_back(s);
        if (!wanted.empty())
            throw std::domain_error("unknown section label: " + *wanted.begin());
    }
    // Keep the listed order.
    std::sort(excised.begin(), excised.end(), [&](const SectionRecord& a, const SectionRecord& b) {
        auto pos = [&](const std::string& l) {
            return std::find(section_labels.begin(), section_labels.end(), l);
        };
        return pos(a.label) < pos(b.label);
    });

    const long long k = fiber_count;
    const long long l = static_cast<long long>(excised.size());
    const long long g = f.fiber_genus;
    const long long h = f.base_genus;

    LefschetzFibration out = f;
    out.fiber_boundary_components = l;
    out.base_boundary_components = k;
    out.sections.clear();
    for (const auto& s : f.sections)
        if (std::find_if(excised.begin(), excised.end(), [&](const SectionRecord& e) {
                return e.label == s.label;
            }) == excised.end())
            out.sections.push_back(s);
    // e(F u S_1 u ... u S_l) for k parallel fibers: each section meets each
    // fiber once.
    long long removed = checked_add(checked_mul(k, 2 - 2 * g),
                                    checked_add(checked_mul(l, 2 - 2 * h), -checked_mul(k, l)));
    out.euler = checked_add(f.euler, -removed);
    // Novikov additivity: signature is unchanged.

    std::vector<PaperComponent> papers;
    std::vector<SpineComponent> spines;
    std::map<std::string, std::string> matching;
    for (long long pi = 1; pi <= k; ++pi) {
        PaperComponent p;
        p.id = "P" + std::to_string(pi);
        p.page = Surface(g, l);
        // All critical values collected over the first boundary circle.
        p.monodromy = pi == 1 ? *f.monodromy : TwistWord();
        for (long long sj = 1; sj <= l; ++sj) {
            std::string paper_label = p.id + "." + excised[sj - 1].label;
            p.boundary_labels.push_back(paper_label);
            matching[paper_label] = excised[sj - 1].label + ".P" + std::to_string(pi);
        }
        papers.push_back(std::move(p));
    }
    std::vector<SpineFraming> framings;
    for (long long sj = 1; sj <= l; ++sj) {
        SpineComponent s;
        s.id = excised[sj - 1].label;
        s.vertebra = Surface(h, k);
        for (long long pi = 1; pi <= k; ++pi)
            s.boundary_labels.push_back(s.id + ".P" + std::to_string(pi));
        spines.push_back(std::move(s));
        SpineFraming framing;
        framing.degrees.assign(2 * h + k - 1, 0);  // rank of H_1 of the vertebra
        framing.section_self_intersection = excised[sj - 1].self_intersection;
        framings.push_back(std::move(framing));
    }
    SpinalOpenBook book(std::move(papers), std::move(spines), std::move(matching));
    std::map<std::string, InterfaceSlope> slopes;
    for (const auto& [pl, sl] : book.matching()) {
        (void)pl;
        slopes[sl] = InterfaceSlope{1, 1};
    }
    return ExcisionResult{std::move(out),
                          FramedSpinalOpenBook(std::move(book), std::move(framings),
                                               std::move(slopes))};
}

LefschetzFibration fiber_sum(const LefschetzFibration& f1, const LefschetzFibration& f2,
                             const std::vector<std::pair<std::string, std::string>>& pairing) {
    if (f1.fiber_genus != f2.fiber_genus) throw std::domain_error("fiber genus mismatch");
    if (!f1.closed_fiber() || !f2.closed_fiber())
        throw std::domain_error("fiber sum glues along closed fibers");
    if (!f1.closed_base()) throw std::domain_error("first summand must have a closed base");
    if (!f2.closed_base() || f2.base_genus != 0)
        throw std::domain_error("second summand must fiber over the sphere");

    auto find_section = [](const LefschetzFibration& f, const std::string& label)
        -> const SectionRecord& {
        for (const auto& s : f.sections)
            if (s.label == label) return s;
        throw std::domain_error("unmatched section label: " + label);
    };

    if (f2.vanishing_cycles.empty()) {
        // A trivial sphere bundle only carries square-zero sections.
        for (const auto& [l1, l2] : pairing) {
            (void)l1;
            if (find_section(f2, l2).self_intersection != 0)
                throw std::domain_error(
                    "a critical-point-free sphere-base summand cannot carry a section of "
                    "nonzero square");
        }
    }

    LefschetzFibration out;
    out.fiber_genus = f1.fiber_genus;
    out.base_genus = f1.base_genus;  // + 0
    out.vanishing_cycles = f1.vanishing_cycles;
    out.vanishing_cycles.insert(out.vanishing_cycles.end(), f2.vanishing_cycles.begin(),
                                f2.vanishing_cycles.end());
    out.commutator_count = f1.commutator_count + f2.commutator_count;
    for (const auto& [l1, l2] : pairing) {
        const SectionRecord& s1 = find_section(f1, l1);
        const SectionRecord& s2 = find_section(f2, l2);
        out.sections.push_back(
            SectionRecord{s1.label, checked_add(s1.self_intersection, s2.self_intersection)});
    }
    out.euler = checked_add(checked_add(f1.euler, f2.euler),
                            -checked_mul(2, 2 - 2 * f1.fiber_genus));
    if (f1.signature && f2.signature)
        out.signature = checked_add(*f1.signature, *f2.signature);  // Novikov
    if (f1.monodromy && f2.monodromy)
        out.monodromy = reduce(TwistWord::product({*f1.monodromy, *f2.monodromy}));
    return out;
}

}  // namespace mcg
