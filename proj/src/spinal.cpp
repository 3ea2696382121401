#include "mcg/spinal.hpp"

#include <algorithm>
#include <set>

namespace mcg {

namespace {

// Merged boundary labels and component ids compose as "(x+y)"; splitting
// parses that shape back, and otherwise falls back to ".L"/".R" suffixes.
// The two directions are mutual inverses, which is what the tap/fold
// round-trip identities rest on.
std::string merge_names(const std::string& x, const std::string& y) {
    if (x.size() > 2 && y.size() > 2 && x.substr(0, x.size() - 2) == y.substr(0, y.size() - 2) &&
        x.substr(x.size() - 2) == ".L" && y.substr(y.size() - 2) == ".R")
        return x.substr(0, x.size() - 2);
    return "(" + x + "+" + y + ")";
}

std::optional<std::pair<std::string, std::string>> parse_merged(const std::string& name) {
    if (name.size() < 3 || name.front() != '(' || name.back() != ')') return std::nullopt;
    int depth = 0;
    for (std::size_t i = 1; i + 1 < name.size(); ++i) {
        char c = name[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '+' && depth == 0)
            return std::make_pair(name.substr(1, i - 1), name.substr(i + 1, name.size() - i - 2));
    }
    return std::nullopt;
}

std::pair<std::string, std::string> split_names(const std::string& name) {
    if (auto parsed = parse_merged(name)) return *parsed;
    return {name + ".L", name + ".R"};
}

}  // namespace

SpinalOpenBook::SpinalOpenBook(std::vector<PaperComponent> papers,
                               std::vector<SpineComponent> spines,
                               std::map<std::string, std::string> matching)
    : papers_(std::move(papers)), spines_(std::move(spines)), matching_(std::move(matching)) {
    if (papers_.empty() || spines_.empty())
        throw std::domain_error("a spinal open book needs paper and spine");

    std::sort(papers_.begin(), papers_.end(),
              [](const PaperComponent& a, const PaperComponent& b) { return a.id < b.id; });
    std::sort(spines_.begin(), spines_.end(),
              [](const SpineComponent& a, const SpineComponent& b) { return a.id < b.id; });

    std::set<std::string> ids;
    for (const auto& p : papers_)
        if (!ids.insert(p.id).second) throw std::domain_error("duplicate paper id: " + p.id);
    for (const auto& s : spines_)
        if (!ids.insert(s.id).second) throw std::domain_error("duplicate spine id: " + s.id);

    for (const auto& p : papers_) {
        if (p.page.boundary_components <= 0)
            throw std::domain_error("pages must have non-empty boundary");
        if (p.page != papers_.front().page)
            throw std::domain_error("book is not symmetric: pages differ");
        if (static_cast<long long>(p.boundary_labels.size()) != p.page.boundary_components)
            throw std::domain_error("paper " + p.id + ": one label per page boundary circle");
    }
    for (const auto& s : spines_) {
        if (s.vertebra.boundary_components <= 0)
            throw std::domain_error("vertebrae must have non-empty boundary");
        if (s.vertebra != spines_.front().vertebra)
            throw std::domain_error("book is not uniform: vertebrae differ");
        if (static_cast<long long>(s.boundary_labels.size()) != s.vertebra.boundary_components)
            throw std::domain_error("spine " + s.id + ": one label per vertebra boundary circle");
    }

    // The matching must be a bijection between the two label sets.
    std::set<std::string> paper_labels, spine_labels, hit;
    for (const auto& p : papers_)
        for (const auto& l : p.boundary_labels)
            if (!paper_labels.insert(l).second)
                throw std::domain_error("duplicate paper boundary label: " + l);
    for (const auto& s : spines_)
        for (const auto& l : s.boundary_labels)
            if (!spine_labels.insert(l).second)
                throw std::domain_error("duplicate spine boundary label: " + l);
    if (matching_.size() != paper_labels.size() || paper_labels.size() != spine_labels.size())
        throw std::domain_error("matching must pair every boundary circle");
    for (const auto& [from, to] : matching_) {
        if (!paper_labels.count(from))
            throw std::domain_error("matching source is not a paper label: " + from);
        if (!spine_labels.count(to))
            throw std::domain_error("matching target is not a spine label: " + to);
        if (!hit.insert(to).second)
            throw std::domain_error("matching is not injective at " + to);
    }

    // Simple: exactly one interface torus for every (spine, paper) pair.
    // This also fixes the canonical label order: papers list their circles
    // in spine order, spines list theirs in paper order.
    std::map<std::string, std::size_t> spine_of_label, paper_of_label;
    for (std::size_t i = 0; i < spines_.size(); ++i)
        for (const auto& l : spines_[i].boundary_labels) spine_of_label[l] = i;
    for (std::size_t i = 0; i < papers_.size(); ++i)
        for (const auto& l : papers_[i].boundary_labels) paper_of_label[l] = i;

    std::vector<std::vector<std::string>> paper_slots(papers_.size()),
        spine_slots(spines_.size());
    for (auto& v : paper_slots) v.resize(spines_.size());
    for (auto& v : spine_slots) v.resize(papers_.size());
    for (const auto& [pl, sl] : matching_) {
        std::size_t pi = paper_of_label.at(pl);
        std::size_t si = spine_of_label.at(sl);
        if (!paper_slots[pi][si].empty())
            throw std::domain_error("book is not simple: " + papers_[pi].id + " meets " +
                                    spines_[si].id + " twice");
        paper_slots[pi][si] = pl;
        spine_slots[si][pi] = sl;
    }
    for (std::size_t pi = 0; pi < papers_.size(); ++pi) {
        for (std::size_t si = 0; si < spines_.size(); ++si)
            if (paper_slots[pi][si].empty())
                throw std::domain_error("book is not simple: " + papers_[pi].id +
                                        " does not meet " + spines_[si].id);
        papers_[pi].boundary_labels = paper_slots[pi];
    }
    for (std::size_t si = 0; si < spines_.size(); ++si) spines_[si].boundary_labels = spine_slots[si];
}

const PaperComponent& SpinalOpenBook::paper(const std::string& id) const {
    for (const auto& p : papers_)
        if (p.id == id) return p;
    throw std::domain_error("no paper component with id " + id);
}

const SpineComponent& SpinalOpenBook::spine(const std::string& id) const {
    for (const auto& s : spines_)
        if (s.id == id) return s;
    throw std::domain_error("no spine component with id " + id);
}

const PaperComponent& SpinalOpenBook::paper_for_spine_label(const std::string& spine_label) const {
    for (const auto& [pl, sl] : matching_) {
        if (sl != spine_label) continue;
        for (const auto& p : papers_)
            for (const auto& l : p.boundary_labels)
                if (l == pl) return p;
    }
    throw std::domain_error("no interface torus with spine label " + spine_label);
}

long long SpinalOpenBook::total_vertebra_euler() const {
    long long total = 0;
    for (const auto& s : spines_) total += s.vertebra.euler_characteristic();
    return total;
}

bool SpinalOpenBook::operator==(const SpinalOpenBook& o) const {
    if (matching_ != o.matching_) return false;
    if (papers_.size() != o.papers_.size() || spines_.size() != o.spines_.size()) return false;
    for (std::size_t i = 0; i < papers_.size(); ++i) {
        const auto& a = papers_[i];
        const auto& b = o.papers_[i];
        if (a.id != b.id || a.page != b.page || a.boundary_labels != b.boundary_labels ||
            a.monodromy != b.monodromy)
            return false;
    }
    for (std::size_t i = 0; i < spines_.size(); ++i) {
        const auto& a = spines_[i];
        const auto& b = o.spines_[i];
        if (a.id != b.id || a.vertebra != b.vertebra || a.boundary_labels != b.boundary_labels)
            return false;
    }
    return true;
}

FramedSpinalOpenBook::FramedSpinalOpenBook(SpinalOpenBook book,
                                           std::vector<SpineFraming> framings,
                                           std::map<std::string, InterfaceSlope> interface_slopes)
    : book_(std::move(book)), framings_(std::move(framings)), slopes_(std::move(interface_slopes)) {
    if (framings_.size() != book_.spines().size())
        throw std::domain_error("one framing per spine component");
    for (const auto& [label, slope] : slopes_) {
        (void)label;
        if (slope.p <= 0 || slope.q <= 0)
            throw std::domain_error("interface dividing slope must be (-p, q) with p, q > 0");
    }
}

bool FramedSpinalOpenBook::operator==(const FramedSpinalOpenBook& o) const {
    return book_ == o.book_ && framings_ == o.framings_ && slopes_ == o.slopes_;
}

FramedSpinalOpenBook change_framing(const FramedSpinalOpenBook& fb, std::size_t spine_index,
                                    std::size_t basis_direction, long long delta) {
    auto framings = fb.framings();
    if (spine_index >= framings.size()) throw std::out_of_range("spine index out of range");
    auto& degrees = framings[spine_index].degrees;
    if (basis_direction >= degrees.size()) throw std::out_of_range("basis direction out of range");
    degrees[basis_direction] = checked_add(degrees[basis_direction], delta);
    return FramedSpinalOpenBook(fb.underlying(), std::move(framings), fb.interface_slopes());
}

namespace {

bool word_mentions_label(const TwistWord& w, const std::string& label) {
    const auto& n = w.node();
    if (auto* o = std::get_if<OpaqueBlock>(&n)) return o->label == label;
    if (auto* p = std::get_if<TwistWord::ProductNode>(&n)) {
        for (const auto& f : p->factors)
            if (word_mentions_label(f, label)) return true;
        return false;
    }
    if (auto* p = std::get_if<TwistWord::PowerNode>(&n)) return word_mentions_label(p->base, label);
    if (auto* c = std::get_if<TwistWord::CommutatorNode>(&n))
        return word_mentions_label(c->lhs, label) || word_mentions_label(c->rhs, label);
    return false;
}

TwistWord gluing_leaf(const std::string& label) {
    OpaqueBlock block;
    block.label = label;
    block.kind = OpaqueKind::UnknownElement;
    return TwistWord::opaque(std::move(block));
}

// u o (g^-1 v g), reduced. The conjugating pair cancels against marker atoms
// left by an earlier split with the same label.
TwistWord merge_words(const TwistWord& u, const TwistWord& v, const std::string& gluing) {
    TwistWord marker = gluing_leaf(gluing);
    return reduce(TwistWord::product(
        {u, TwistWord::power(marker, -1), v, marker}));
}

// Inverse of merge_words: extract (u, v) from u . g^-1 . v . g; a word
// without the marker splits as (w, empty).
std::pair<TwistWord, TwistWord> split_words(const TwistWord& w, const std::string& gluing) {
    TwistWord reduced = reduce(w);
    std::vector<TwistWord> atoms;
    if (auto* p = std::get_if<TwistWord::ProductNode>(&reduced.node()))
        atoms = p->factors;
    else if (!reduced.is_empty_product())
        atoms = {reduced};

    auto is_marker = [&](const TwistWord& atom, long long exponent) {
        if (exponent == 1) {
            auto* o = std::get_if<OpaqueBlock>(&atom.node());
            return o && o->label == gluing && o->params.empty();
        }
        auto* pw = std::get_if<TwistWord::PowerNode>(&atom.node());
        if (!pw || pw->exponent != exponent) return false;
        auto* o = std::get_if<OpaqueBlock>(&pw->base.node());
        return o && o->label == gluing && o->params.empty();
    };

    if (!atoms.empty() && is_marker(atoms.back(), 1)) {
        for (std::size_t i = 0; i + 1 < atoms.size(); ++i) {
            if (is_marker(atoms[i], -1)) {
                std::vector<TwistWord> u(atoms.begin(), atoms.begin() + i);
                std::vector<TwistWord> v(atoms.begin() + i + 1, atoms.end() - 1);
                return {reduce(TwistWord::product(std::move(u))),
                        reduce(TwistWord::product(std::move(v)))};
            }
        }
    }
    return {reduced, TwistWord()};
}

struct TapPlan {
    bool split = false;  // true: one paper splits; false: two papers merge
    std::size_t paper_a = 0, paper_b = 0;
};

std::size_t paper_index(const SpinalOpenBook& book, const std::string& id) {
    for (std::size_t i = 0; i < book.papers().size(); ++i)
        if (book.papers()[i].id == id) return i;
    throw std::domain_error("no paper component with id " + id);
}

}  // namespace

TapResult spinal_tap(const SpinalOpenBook& book, const TapSpec& spec) {
    if (spec.arcs.size() != book.spines().size())
        throw std::domain_error("tap spec needs one arc per spine component");
    if (spec.gluing.empty()) throw std::domain_error("tap spec needs a gluing label");
    for (const auto& p : book.papers())
        if (word_mentions_label(p.monodromy, spec.gluing))
            throw std::domain_error("gluing label already in use: " + spec.gluing);

    TapPlan plan;
    plan.split = spec.paper_a == spec.paper_b;
    plan.paper_a = paper_index(book, spec.paper_a);
    plan.paper_b = paper_index(book, spec.paper_b);

    const std::map<std::string, std::string>& matching = book.matching();
    std::map<std::string, std::string> spine_to_paper;
    for (const auto& [pl, sl] : matching) spine_to_paper[sl] = pl;

    // Validate the incidence condition: arc endpoints bound the designated
    // fibers.
    for (std::size_t si = 0; si < book.spines().size(); ++si) {
        const TapArc& arc = spec.arcs[si];
        const SpineComponent& s = book.spines()[si];
        auto owns = [&](const std::string& label) {
            return std::find(s.boundary_labels.begin(), s.boundary_labels.end(), label) !=
                   s.boundary_labels.end();
        };
        if (!owns(arc.from) || !owns(arc.to))
            throw std::domain_error("arc endpoints must lie on spine component " + s.id);
        if (plan.split != arc.same_boundary())
            throw std::domain_error("arc type disagrees with the designated fibers");
        const std::string& pa = book.papers()[plan.paper_a].boundary_labels[si];
        const std::string& pb = book.papers()[plan.paper_b].boundary_labels[si];
        if (spine_to_paper.at(arc.from) != pa)
            throw std::domain_error("arc endpoint " + arc.from + " does not bound fiber F_1");
        if (spine_to_paper.at(arc.to) != pb)
            throw std::domain_error("arc endpoint " + arc.to + " does not bound fiber F_2");
        if (plan.split && s.vertebra.genus < 1)
            throw std::domain_error(
                "a same-boundary arc on a planar vertebra separates it; "
                "the cut spine component would not stay connected");
    }

    std::vector<PaperComponent> papers = book.papers();
    std::vector<SpineComponent> spines = book.spines();
    std::map<std::string, std::string> new_matching = matching;

    FoldSpec inverse;
    inverse.gluing = spec.gluing;

    if (plan.split) {
        const PaperComponent original = papers[plan.paper_a];
        auto [wa, wb] = split_words(original.monodromy, spec.gluing);
        PaperComponent left, right;
        auto ids = split_names(original.id);
        left.id = ids.first;
        right.id = ids.second;
        left.page = right.page = original.page;
        left.monodromy = std::move(wa);
        right.monodromy = std::move(wb);

        for (std::size_t si = 0; si < spines.size(); ++si) {
            SpineComponent& s = spines[si];
            const std::string spine_label = spec.arcs[si].from;
            const std::string paper_label = original.boundary_labels[si];
            auto [sl, sr] = split_names(spine_label);
            auto [pl, pr] = split_names(paper_label);
            // Cut: one boundary circle becomes two, the genus drops.
            s.vertebra = Surface(s.vertebra.genus - 1, s.vertebra.boundary_components + 1,
                                 s.vertebra.marked_points);
            std::replace(s.boundary_labels.begin(), s.boundary_labels.end(), spine_label, sl);
            s.boundary_labels.push_back(sr);
            new_matching.erase(paper_label);
            new_matching[pl] = sl;
            new_matching[pr] = sr;
            left.boundary_labels.push_back(pl);
            right.boundary_labels.push_back(pr);
            inverse.bands.push_back(FoldSpec::Band{sl, sr});
        }
        papers.erase(papers.begin() + plan.paper_a);
        papers.push_back(std::move(left));
        papers.push_back(std::move(right));
        inverse.paper_a = ids.first;
        inverse.paper_b = ids.second;
    } else {
        const PaperComponent original_a = papers[plan.paper_a];
        const PaperComponent original_b = papers[plan.paper_b];
        PaperComponent merged;
        merged.id = merge_names(original_a.id, original_b.id);
        merged.page = original_a.page;
        merged.monodromy = merge_words(original_a.monodromy, original_b.monodromy, spec.gluing);

        for (std::size_t si = 0; si < spines.size(); ++si) {
            SpineComponent& s = spines[si];
            const TapArc& arc = spec.arcs[si];
            const std::string pa = original_a.boundary_labels[si];
            const std::string pb = original_b.boundary_labels[si];
            std::string joined_spine = merge_names(arc.from, arc.to);
            std::string joined_paper = merge_names(pa, pb);
            // Cut: the two boundary circles join into one.
            s.vertebra = Surface(s.vertebra.genus, s.vertebra.boundary_components - 1,
                                 s.vertebra.marked_points);
            s.boundary_labels.erase(
                std::remove(s.boundary_labels.begin(), s.boundary_labels.end(), arc.to),
                s.boundary_labels.end());
            std::replace(s.boundary_labels.begin(), s.boundary_labels.end(), arc.from,
                         joined_spine);
            new_matching.erase(pa);
            new_matching.erase(pb);
            new_matching[joined_paper] = joined_spine;
            merged.boundary_labels.push_back(joined_paper);
            inverse.bands.push_back(FoldSpec::Band{joined_spine, joined_spine});
        }
        std::size_t hi = std::max(plan.paper_a, plan.paper_b);
        std::size_t lo = std::min(plan.paper_a, plan.paper_b);
        papers.erase(papers.begin() + hi);
        papers.erase(papers.begin() + lo);
        inverse.paper_a = inverse.paper_b = merged.id;
        papers.push_back(std::move(merged));
    }

    TapResult result{SpinalOpenBook(std::move(papers), std::move(spines), std::move(new_matching)),
                     CobordismAccount{}, std::move(inverse)};
    long long chi_f1 = book.papers()[plan.paper_a].page.euler_characteristic();
    long long chi_f2 = book.papers()[plan.paper_b].page.euler_characteristic();
    result.account.one_handles = 1;
    result.account.two_handles = 2 - chi_f1 - chi_f2;  // b_1 of the closed tap surface
    return result;
}

SpinalOpenBook fold(const SpinalOpenBook& book, const FoldSpec& spec) {
    if (spec.bands.size() != book.spines().size())
        throw std::domain_error("fold spec needs one band per spine component");
    if (spec.gluing.empty()) throw std::domain_error("fold spec needs a gluing label");

    const bool splitting = spec.paper_a == spec.paper_b;
    std::size_t ia = paper_index(book, spec.paper_a);
    std::size_t ib = paper_index(book, spec.paper_b);
    if (book.papers()[ia].page != book.papers()[ib].page)
        throw std::domain_error("mismatched page topologies");

    const std::map<std::string, std::string>& matching = book.matching();
    std::map<std::string, std::string> spine_to_paper;
    for (const auto& [pl, sl] : matching) spine_to_paper[sl] = pl;

    std::vector<PaperComponent> papers = book.papers();
    std::vector<SpineComponent> spines = book.spines();
    std::map<std::string, std::string> new_matching = matching;

    for (std::size_t si = 0; si < book.spines().size(); ++si) {
        const auto& band = spec.bands[si];
        const SpineComponent& s = book.spines()[si];
        auto owns = [&](const std::string& label) {
            return std::find(s.boundary_labels.begin(), s.boundary_labels.end(), label) !=
                   s.boundary_labels.end();
        };
        if (!owns(band.from) || !owns(band.to))
            throw std::domain_error("band feet must lie on spine component " + s.id);
        if (band.same_boundary() != splitting)
            throw std::domain_error("band type disagrees with the designated pages");
    }

    if (splitting) {
        // Both band feet on one circle: the circle re-splits and the paper
        // component splits in two along the marker left by the gluing.
        const PaperComponent original = papers[ia];
        auto [wa, wb] = split_words(original.monodromy, spec.gluing);
        auto ids = split_names(original.id);
        PaperComponent left, right;
        left.id = ids.first;
        right.id = ids.second;
        left.page = right.page = original.page;
        left.monodromy = std::move(wa);
        right.monodromy = std::move(wb);

        for (std::size_t si = 0; si < spines.size(); ++si) {
            SpineComponent& s = spines[si];
            const std::string spine_label = spec.bands[si].from;
            if (spine_to_paper.at(spine_label) != original.boundary_labels[si])
                throw std::domain_error("band circle does not meet the designated paper");
            const std::string paper_label = original.boundary_labels[si];
            auto [sl, sr] = split_names(spine_label);
            auto [pl, pr] = split_names(paper_label);
            s.vertebra = Surface(s.vertebra.genus, s.vertebra.boundary_components + 1,
                                 s.vertebra.marked_points);
            std::replace(s.boundary_labels.begin(), s.boundary_labels.end(), spine_label, sl);
            s.boundary_labels.push_back(sr);
            new_matching.erase(paper_label);
            new_matching[pl] = sl;
            new_matching[pr] = sr;
            left.boundary_labels.push_back(pl);
            right.boundary_labels.push_back(pr);
        }
        papers.erase(papers.begin() + ia);
        papers.push_back(std::move(left));
        papers.push_back(std::move(right));
    } else {
        const PaperComponent original_a = papers[ia];
        const PaperComponent original_b = papers[ib];
        PaperComponent merged;
        merged.id = merge_names(original_a.id, original_b.id);
        merged.page = original_a.page;
        merged.monodromy = merge_words(original_a.monodromy, original_b.monodromy, spec.gluing);

        for (std::size_t si = 0; si < spines.size(); ++si) {
            SpineComponent& s = spines[si];
            const auto& band = spec.bands[si];
            if (spine_to_paper.at(band.from) != original_a.boundary_labels[si] ||
                spine_to_paper.at(band.to) != original_b.boundary_labels[si])
                throw std::domain_error("band feet do not meet the designated papers");
            std::string joined_spine = merge_names(band.from, band.to);
            std::string joined_paper =
                merge_names(original_a.boundary_labels[si], original_b.boundary_labels[si]);
            if (s.vertebra.boundary_components < 2)
                throw std::domain_error("cannot band a vertebra with one boundary circle");
            // Band joining two circles: one circle fewer, genus up by one.
            s.vertebra = Surface(s.vertebra.genus + 1, s.vertebra.boundary_components - 1,
                                 s.vertebra.marked_points);
            s.boundary_labels.erase(
                std::remove(s.boundary_labels.begin(), s.boundary_labels.end(), band.to),
                s.boundary_labels.end());
            std::replace(s.boundary_labels.begin(), s.boundary_labels.end(), band.from,
                         joined_spine);
            new_matching.erase(original_a.boundary_labels[si]);
            new_matching.erase(original_b.boundary_labels[si]);
            new_matching[joined_paper] = joined_spine;
            merged.boundary_labels.push_back(joined_paper);
        }
        std::size_t hi = std::max(ia, ib);
        std::size_t lo = std::min(ia, ib);
        papers.erase(papers.begin() + hi);
        papers.erase(papers.begin() + lo);
        papers.push_back(std::move(merged));
    }

    return SpinalOpenBook(std::move(papers), std::move(spines), std::move(new_matching));
}

SpinalOpenBook boundary_of_disk_fibration(const TwistWord& word, const Surface& page) {
    if (page.boundary_components <= 0)
        throw std::domain_error("the page of an open book must have boundary");
    if (!is_positive(word)) throw std::domain_error("monodromy must be a positive word");

    PaperComponent paper;
    paper.id = "P1";
    paper.page = page;
    paper.monodromy = word;

    std::vector<SpineComponent> spines;
    std::map<std::string, std::string> matching;
    for (long long i = 1; i <= page.boundary_components; ++i) {
        SpineComponent s;
        s.id = "S" + std::to_string(i);
        s.vertebra = Surface(0, 1);  // solid-torus spine component
        s.boundary_labels = {s.id + ".b1"};
        std::string paper_label = "P1.b" + std::to_string(i);
        paper.boundary_labels.push_back(paper_label);
        matching[paper_label] = s.boundary_labels.front();
        spines.push_back(std::move(s));
    }
    return SpinalOpenBook({std::move(paper)}, std::move(spines), std::move(matching));
}

TwistWord total_monodromy(const SpinalOpenBook& book,
                          const std::vector<PageIdentification>& identifications) {
    if (identifications.size() != book.papers().size())
        throw std::domain_error("one identification per paper component");
    std::set<std::string> seen;
    std::vector<TwistWord> factors;
    for (const auto& ident : identifications) {
        const PaperComponent& p = book.paper(ident.paper_id);
        if (!seen.insert(ident.paper_id).second)
            throw std::domain_error("paper component identified twice: " + ident.paper_id);
        if (p.page != book.page()) throw std::domain_error("mismatched page topologies");
        if (ident.label.empty()) {
            factors.push_back(p.monodromy);
        } else {
            TwistWord i = gluing_leaf(ident.label);
            factors.push_back(
                TwistWord::product({i, p.monodromy, TwistWord::power(std::move(i), -1)}));
        }
    }
    return reduce(TwistWord::product(std::move(factors)));
}

Verdict check_positive_coset_certificate(const TwistWord& phi,
                                         const PositiveCosetCandidate& candidate, long long h,
                                         const CurveModel& model) {
    if (static_cast<long long>(candidate.commutators.size()) >= h)
        throw std::domain_error("certificate must use strictly fewer than h commutators");
    if (!is_positive(candidate.twists))
        throw std::domain_error("certificate twists must form a positive word");
    std::vector<TwistWord> factors{candidate.twists};
    factors.insert(factors.end(), candidate.commutators.begin(), candidate.commutators.end());
    return certify_relation(phi, TwistWord::product(std::move(factors)), model);
}

}  // namespace mcg
