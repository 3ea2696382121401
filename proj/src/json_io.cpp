#include "mcg/json_io.hpp"

namespace mcg {

namespace {
constexpr long long kExactDoubleMax = (1LL << 53) - 1;
}

Json encode_int(long long v) {
    if (v > kExactDoubleMax || v < -kExactDoubleMax) return Json(std::to_string(v));
    return Json(v);
}

long long decode_int(const Json& j) {
    if (j.is_string()) return std::stoll(j.get<std::string>());
    if (j.is_number_integer()) return j.get<long long>();
    throw std::invalid_argument("expected an integer or a decimal string");
}

Json word_to_json(const TwistWord& w) {
    const auto& n = w.node();
    if (auto* t = std::get_if<Twist>(&n))
        return Json{{"type", "twist"}, {"curve", t->curve}, {"exp", encode_int(t->exponent)}};
    if (auto* o = std::get_if<OpaqueBlock>(&n)) {
        Json j{{"type", "opaque"},
               {"label", o->label},
               {"kind", o->kind == OpaqueKind::Commutator ? "commutator" : "unknown-element"}};
        if (!o->params.empty()) {
            Json params = Json::object();
            for (const auto& [k, v] : o->params) params[k] = encode_int(v);
            j["params"] = std::move(params);
        }
        if (o->declared_positive_twists)
            j["declared_positive_twists"] = encode_int(*o->declared_positive_twists);
        if (o->image) j["image"] = word_to_json(*o->image);
        return j;
    }
    if (auto* p = std::get_if<TwistWord::ProductNode>(&n)) {
        Json factors = Json::array();
        for (const auto& f : p->factors) factors.push_back(word_to_json(f));
        return Json{{"type", "product"}, {"factors", std::move(factors)}};
    }
    if (auto* p = std::get_if<TwistWord::PowerNode>(&n))
        return Json{{"type", "power"},
                    {"base", word_to_json(p->base)},
                    {"exp", encode_int(p->exponent)}};
    const auto& c = std::get<TwistWord::CommutatorNode>(n);
    return Json{{"type", "commutator"}, {"a", word_to_json(c.lhs)}, {"b", word_to_json(c.rhs)}};
}

TwistWord word_from_json(const Json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "twist")
        return TwistWord::twist(j.at("curve").get<std::string>(), decode_int(j.at("exp")));
    if (type == "opaque") {
        OpaqueBlock block;
        block.label = j.at("label").get<std::string>();
        block.kind = j.at("kind").get<std::string>() == "commutator" ? OpaqueKind::Commutator
                                                                     : OpaqueKind::UnknownElement;
        if (j.contains("params"))
            for (const auto& [k, v] : j.at("params").items()) block.params[k] = decode_int(v);
        if (j.contains("declared_positive_twists"))
            block.declared_positive_twists = decode_int(j.at("declared_positive_twists"));
        if (j.contains("image"))
            block.image = std::make_shared<const TwistWord>(word_from_json(j.at("image")));
        return TwistWord::opaque(std::move(block));
    }
    if (type == "product") {
        std::vector<TwistWord> factors;
        for (const auto& f : j.at("factors")) factors.push_back(word_from_json(f));
        return TwistWord::product(std::move(factors));
    }
    if (type == "power")
        return TwistWord::power(word_from_json(j.at("base")), decode_int(j.at("exp")));
    if (type == "commutator")
        return TwistWord::commutator(word_from_json(j.at("a")), word_from_json(j.at("b")));
    throw std::invalid_argument("unknown word node type: " + type);
}

namespace {

Json cycles_to_json(const std::vector<VanishingCycle>& cycles) {
    Json out = Json::array();
    for (const auto& c : cycles) {
        Json j = Json::object();
        if (!c.curve.empty()) j["curve"] = c.curve;
        if (c.separating_split) j["separating_split"] = encode_int(*c.separating_split);
        j["non_separating"] = c.non_separating();
        out.push_back(std::move(j));
    }
    return out;
}

std::vector<VanishingCycle> cycles_from_json(const Json& j) {
    std::vector<VanishingCycle> cycles;
    for (const auto& c : j) {
        VanishingCycle cycle;
        if (c.contains("curve")) cycle.curve = c.at("curve").get<std::string>();
        if (c.contains("separating_split"))
            cycle.separating_split = decode_int(c.at("separating_split"));
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

Json surface_to_json(const Surface& s) {
    return Json{{"genus", encode_int(s.genus)},
                {"boundary_components", encode_int(s.boundary_components)},
                {"marked_points", encode_int(s.marked_points)}};
}

Surface surface_from_json(const Json& j) {
    return Surface(decode_int(j.at("genus")), decode_int(j.at("boundary_components")),
                   j.contains("marked_points") ? decode_int(j.at("marked_points")) : 0);
}

}  // namespace

Json factorization_to_json(const Factorization& f) {
    Json commutators = Json::array();
    for (const auto& block : f.commutator_blocks)
        commutators.push_back(word_to_json(TwistWord::opaque(block)));
    return Json{{"schema", "factorization/1"},
                {"fiber_genus", encode_int(f.fiber_genus)},
                {"base_genus", encode_int(f.base_genus)},
                {"section_self_intersection", encode_int(f.section_self_intersection)},
                {"twist_parameter", encode_int(f.twist_parameter)},
                {"boundary_twist_power", encode_int(f.boundary_twist_power)},
                {"word", word_to_json(f.word)},
                {"vanishing_cycles", cycles_to_json(f.vanishing_cycles)},
                {"commutator_blocks", std::move(commutators)}};
}

Json fibration_to_json(const LefschetzFibration& f) {
    Json j{{"schema", "lefschetzfibration/1"},
           {"fiber_genus", encode_int(f.fiber_genus)},
           {"fiber_boundary_components", encode_int(f.fiber_boundary_components)},
           {"base_genus", encode_int(f.base_genus)},
           {"base_boundary_components", encode_int(f.base_boundary_components)},
           {"vanishing_cycles", cycles_to_json(f.vanishing_cycles)},
           {"commutator_count", encode_int(f.commutator_count)},
           {"euler", encode_int(f.euler)},
           {"allowable", f.allowable()}};
    Json sections = Json::array();
    for (const auto& s : f.sections)
        sections.push_back(
            Json{{"label", s.label}, {"self_intersection", encode_int(s.self_intersection)}});
    j["sections"] = std::move(sections);
    if (f.signature) j["signature"] = encode_int(*f.signature);
    if (f.monodromy) j["monodromy"] = word_to_json(*f.monodromy);
    return j;
}

LefschetzFibration fibration_from_json(const Json& j) {
    LefschetzFibration f;
    f.fiber_genus = decode_int(j.at("fiber_genus"));
    f.fiber_boundary_components = decode_int(j.at("fiber_boundary_components"));
    f.base_genus = decode_int(j.at("base_genus"));
    f.base_boundary_components = decode_int(j.at("base_boundary_components"));
    f.vanishing_cycles = cycles_from_json(j.at("vanishing_cycles"));
    f.commutator_count = decode_int(j.at("commutator_count"));
    f.euler = decode_int(j.at("euler"));
    for (const auto& s : j.at("sections"))
        f.sections.push_back(SectionRecord{s.at("label").get<std::string>(),
                                           decode_int(s.at("self_intersection"))});
    if (j.contains("signature")) f.signature = decode_int(j.at("signature"));
    if (j.contains("monodromy")) f.monodromy = word_from_json(j.at("monodromy"));
    return f;
}

Json book_to_json(const SpinalOpenBook& book) {
    Json papers = Json::array();
    for (const auto& p : book.papers())
        papers.push_back(Json{{"id", p.id},
                              {"page", surface_to_json(p.page)},
                              {"monodromy", word_to_json(p.monodromy)},
                              {"boundary_labels", p.boundary_labels}});
    Json spines = Json::array();
    for (const auto& s : book.spines())
        spines.push_back(Json{{"id", s.id},
                              {"vertebra", surface_to_json(s.vertebra)},
                              {"boundary_labels", s.boundary_labels}});
    Json matching = Json::object();
    for (const auto& [pl, sl] : book.matching()) matching[pl] = sl;
    return Json{{"schema", "spinalopenbook/1"},
                {"papers", std::move(papers)},
                {"spines", std::move(spines)},
                {"matching", std::move(matching)}};
}

SpinalOpenBook book_from_json(const Json& j) {
    std::vector<PaperComponent> papers;
    for (const auto& p : j.at("papers")) {
        PaperComponent out;
        out.id = p.at("id").get<std::string>();
        out.page = surface_from_json(p.at("page"));
        out.monodromy = word_from_json(p.at("monodromy"));
        out.boundary_labels = p.at("boundary_labels").get<std::vector<std::string>>();
        papers.push_back(std::move(out));
    }
    std::vector<SpineComponent> spines;
    for (const auto& s : j.at("spines")) {
        SpineComponent out;
        out.id = s.at("id").get<std::string>();
        out.vertebra = surface_from_json(s.at("vertebra"));
        out.boundary_labels = s.at("boundary_labels").get<std::vector<std::string>>();
        spines.push_back(std::move(out));
    }
    std::map<std::string, std::string> matching;
    for (const auto& [k, v] : j.at("matching").items()) matching[k] = v.get<std::string>();
    return SpinalOpenBook(std::move(papers), std::move(spines), std::move(matching));
}

Json framed_book_to_json(const FramedSpinalOpenBook& book) {
    Json framings = Json::array();
    for (const auto& f : book.framings()) {
        Json degrees = Json::array();
        for (long long d : f.degrees) degrees.push_back(encode_int(d));
        framings.push_back(Json{{"degrees", std::move(degrees)},
                                {"section_self_intersection",
                                 encode_int(f.section_self_intersection)}});
    }
    Json slopes = Json::object();
    for (const auto& [label, slope] : book.interface_slopes())
        slopes[label] = Json{{"p", encode_int(slope.p)}, {"q", encode_int(slope.q)}};
    Json j = book_to_json(book.underlying());
    j["schema"] = "framedspinalopenbook/1";
    j["framings"] = std::move(framings);
    j["interface_slopes"] = std::move(slopes);
    return j;
}

FramedSpinalOpenBook framed_book_from_json(const Json& j) {
    SpinalOpenBook book = book_from_json(j);
    std::vector<SpineFraming> framings;
    for (const auto& f : j.at("framings")) {
        SpineFraming out;
        for (const auto& d : f.at("degrees")) out.degrees.push_back(decode_int(d));
        out.section_self_intersection = decode_int(f.at("section_self_intersection"));
        framings.push_back(std::move(out));
    }
    std::map<std::string, InterfaceSlope> slopes;
    for (const auto& [label, slope] : j.at("interface_slopes").items())
        slopes[label] = InterfaceSlope{decode_int(slope.at("p")), decode_int(slope.at("q"))};
    return FramedSpinalOpenBook(std::move(book), std::move(framings), std::move(slopes));
}

Json tap_spec_to_json(const TapSpec& spec) {
    Json arcs = Json::array();
    for (const auto& a : spec.arcs) arcs.push_back(Json{{"from", a.from}, {"to", a.to}});
    return Json{{"schema", "tapspec/1"},
                {"arcs", std::move(arcs)},
                {"paper_a", spec.paper_a},
                {"paper_b", spec.paper_b},
                {"gluing", spec.gluing}};
}

TapSpec tap_spec_from_json(const Json& j) {
    TapSpec spec;
    for (const auto& a : j.at("arcs"))
        spec.arcs.push_back(TapArc{a.at("from").get<std::string>(), a.at("to").get<std::string>()});
    spec.paper_a = j.at("paper_a").get<std::string>();
    spec.paper_b = j.at("paper_b").get<std::string>();
    spec.gluing = j.at("gluing").get<std::string>();
    return spec;
}

Json fold_spec_to_json(const FoldSpec& spec) {
    Json bands = Json::array();
    for (const auto& b : spec.bands) bands.push_back(Json{{"from", b.from}, {"to", b.to}});
    return Json{{"schema", "foldspec/1"},
                {"bands", std::move(bands)},
                {"paper_a", spec.paper_a},
                {"paper_b", spec.paper_b},
                {"gluing", spec.gluing}};
}

FoldSpec fold_spec_from_json(const Json& j) {
    FoldSpec spec;
    for (const auto& b : j.at("bands"))
        spec.bands.push_back(
            FoldSpec::Band{b.at("from").get<std::string>(), b.at("to").get<std::string>()});
    spec.paper_a = j.at("paper_a").get<std::string>();
    spec.paper_b = j.at("paper_b").get<std::string>();
    spec.gluing = j.at("gluing").get<std::string>();
    return spec;
}

Json account_to_json(const CobordismAccount& account) {
    return Json{{"schema", "cobordismaccount/1"},
                {"one_handles", encode_int(account.one_handles)},
                {"two_handles", encode_int(account.two_handles)}};
}

Json plumbing_to_json(const PlumbingGraph& p) {
    Json vertices = Json::array();
    for (const auto& v : p.vertices)
        vertices.push_back(
            Json{{"genus", encode_int(v.genus)}, {"euler_number", encode_int(v.euler_number)}});
    Json edges = Json::array();
    for (const auto& [a, b] : p.edges)
        edges.push_back(Json::array({encode_int(static_cast<long long>(a)),
                                     encode_int(static_cast<long long>(b))}));
    return Json{
        {"schema", "plumbing/1"}, {"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

PlumbingGraph plumbing_from_json(const Json& j) {
    PlumbingGraph p;
    for (const auto& v : j.at("vertices"))
        p.vertices.push_back(
            PlumbingVertex{decode_int(v.at("genus")), decode_int(v.at("euler_number"))});
    for (const auto& e : j.at("edges"))
        p.edges.push_back({static_cast<std::size_t>(decode_int(e.at(0))),
                           static_cast<std::size_t>(decode_int(e.at(1)))});
    p.validate();
    return p;
}

Json homology_to_json(const HomologyResult& h) {
    Json torsion = Json::array();
    for (long long d : h.torsion) torsion.push_back(encode_int(d));
    return Json{{"schema", "homology/1"},
                {"free_rank", encode_int(h.free_rank)},
                {"torsion", std::move(torsion)}};
}

Json verdict_to_json(const Verdict& v) {
    Json j{{"schema", "verdict/1"}};
    switch (v.kind) {
        case VerdictKind::Verified:
            j["verdict"] = "verified";
            break;
        case VerdictKind::Refuted:
            j["verdict"] = "refuted";
            break;
        case VerdictKind::Indeterminate:
            j["verdict"] = "indeterminate";
            break;
    }
    if (v.witness) {
        Json witness = Json::array();
        for (long long c : v.witness->coefficients()) witness.push_back(encode_int(c));
        j["witness"] = std::move(witness);
    }
    if (!v.opaque_labels.empty()) j["opaque"] = v.opaque_labels;
    return j;
}

Json report_to_json(const InvariantReport& r) {
    Json j{{"schema", "invariantreport/1"},
           {"M", encode_int(r.M)},
           {"e", encode_int(r.euler)},
           {"hyperelliptic", r.hyperelliptic}};
    if (r.signature) j["sigma"] = encode_int(*r.signature);
    if (r.c1_squared) j["c1_squared"] = encode_int(*r.c1_squared);
    if (r.c2) j["c2"] = encode_int(*r.c2);
    return j;
}

}  // namespace mcg
