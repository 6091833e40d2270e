// JSON encodings of the library types (nlohmann::json).
//
// Schemas are documented in SCHEMAS.md. All numeric content is emitted from
// exact integers or exact rationals rendered as strings; nothing here
// depends on wall-clock state, so identical inputs serialize identically.

#pragma once

#include <string>

#include <json.hpp>

#include "wdtk/certificates.hpp"
#include "wdtk/diagram.hpp"
#include "wdtk/laurent.hpp"
#include "wdtk/layers.hpp"
#include "wdtk/manifold.hpp"
#include "wdtk/presentation.hpp"
#include "wdtk/satellite.hpp"

namespace wdtk {

using json = nlohmann::json;

inline json laurent_to_json(const LaurentPoly& p) {
    json j = json::object();
    for (const auto& [e, c] : p.terms())
        j[std::to_string(e)] = c.str();
    return j;
}

inline LaurentPoly laurent_from_json(const json& j) {
    LaurentPoly p;
    for (auto it = j.begin(); it != j.end(); ++it) {
        Int c(it.value().is_string() ? it.value().get<std::string>()
                                     : it.value().dump());
        p.add_term(std::stol(it.key()), c);
    }
    return p;
}

inline json word_to_json(const Word& w) {
    json j = json::array();
    for (int x : w)
        j.push_back(x);
    return j;
}

inline json presentation_to_json(const GroupPresentation& p) {
    json j;
    j["generators"] = p.generators;
    json rels = json::array();
    for (const auto& r : p.relators)
        rels.push_back(word_to_json(r));
    j["relators"] = rels;
    json per = json::array();
    for (const auto& ps : p.peripheral)
        per.push_back({{"meridian", word_to_json(ps.meridian)},
                       {"longitude", word_to_json(ps.longitude)}});
    j["peripheral"] = per;
    return j;
}

inline GroupPresentation presentation_from_json(const json& j) {
    GroupPresentation p;
    p.generators = j.at("generators").get<std::vector<std::string>>();
    for (const auto& r : j.at("relators"))
        p.relators.push_back(r.get<Word>());
    if (j.contains("peripheral"))
        for (const auto& ps : j.at("peripheral"))
            p.peripheral.push_back(
                {ps.at("meridian").get<Word>(), ps.at("longitude").get<Word>()});
    p.validate();
    return p;
}

inline json abelianization_to_json(const Abelianization& ab) {
    json t = json::array();
    for (const auto& d : ab.torsion)
        t.push_back(d.str());
    return {{"free_rank", ab.free_rank}, {"torsion", t}};
}

inline json diagram_to_json(const Diagram& d) {
    json j;
    j["pd"] = d.serialize();
    j["crossings"] = d.crossing_count();
    j["components"] = d.n_components();
    if (d.provenance()) {
        const auto& p = *d.provenance();
        j["provenance"] = {{"companion_pd", p.companion_pd},
                           {"tau", p.tau},
                           {"clasp_sign", p.clasp_sign},
                           {"clasp_crossings", p.clasp_crossings},
                           {"twist_crossings", p.twist_crossings},
                           {"companion_hash", p.companion_hash}};
    }
    return j;
}

inline json certificate_to_json(const RankCertificate& c) {
    json j;
    j["lower"] = c.lower;
    j["upper"] = c.upper ? json(*c.upper) : json(nullptr);
    j["exact"] = c.exact ? json(*c.exact) : json(nullptr);
    j["tunnel"] = {{"lower", c.tunnel.lower},
                   {"upper", c.tunnel.upper ? json(*c.tunnel.upper) : json(nullptr)}};
    j["provenance"] = c.provenance;
    return j;
}

inline json layer_structure_to_json(const LayerStructure& ls) {
    json pieces = json::array();
    for (const auto& p : ls.layers) {
        const char* kind = p.kind == LayerStructure::PieceKind::whitehead_complement
                               ? "hyperbolic-whitehead-complement"
                               : (p.kind == LayerStructure::PieceKind::seifert
                                      ? "seifert"
                                      : "companion-exterior");
        pieces.push_back(
            {{"kind", kind}, {"hyperbolic_count", p.hyperbolic_count}, {"label", p.label}});
    }
    return {{"n", ls.n}, {"pieces", pieces}, {"hyperbolic_total", ls.hyperbolic_total()}};
}

inline std::string rational_str(const Rational& r) {
    std::string s = boost::multiprecision::numerator(r).str();
    if (boost::multiprecision::denominator(r) != 1)
        s += "/" + boost::multiprecision::denominator(r).str();
    return s;
}

inline json ratio_table_to_json(const std::vector<RatioRow>& rows) {
    json j = json::array();
    for (const auto& r : rows) {
        json row;
        row["n"] = r.n;
        row["lower"] = r.lower;
        row["upper"] = r.upper ? json(*r.upper) : json(nullptr);
        row["lower_ratio"] = rational_str(r.lower_ratio);
        row["upper_ratio"] = r.upper_ratio ? json(rational_str(*r.upper_ratio)) : json(nullptr);
        j.push_back(row);
    }
    return j;
}

inline std::string layer_word_str(const LayerWord& w) {
    auto letter = [](LayerLetter x) { return x == LayerLetter::L ? "L" : "L*"; };
    std::string s;
    for (auto x : w.prefix)
        s += std::string(letter(x)) + " ";
    s += "(";
    for (size_t i = 0; i < w.tail.size(); ++i)
        s += std::string(i ? " " : "") + letter(w.tail[i]);
    s += ")^inf";
    return s;
}

inline json layer_word_to_json(const LayerWord& w) {
    auto arr = [](const std::vector<LayerLetter>& v) {
        json a = json::array();
        for (auto x : v)
            a.push_back(x == LayerLetter::L ? "L" : "L*");
        return a;
    };
    return {{"prefix", arr(w.prefix)}, {"tail", arr(w.tail)}};
}

inline LayerWord layer_word_from_json(const json& j) {
    auto parse = [](const json& a) {
        std::vector<LayerLetter> v;
        for (const auto& x : a) {
            std::string s = x.get<std::string>();
            require(s == "L" || s == "L*", "WordShapeMismatch",
                    "layer word letters must be L or L*");
            v.push_back(s == "L" ? LayerLetter::L : LayerLetter::Lstar);
        }
        return v;
    };
    return {parse(j.at("prefix")), parse(j.at("tail"))};
}

inline json manifold_spec_to_json(const ManifoldSpec& s) {
    return {{"pd", s.companion.serialize()},
            {"m", s.m},
            {"word", layer_word_to_json(s.word)},
            {"tau", s.tau},
            {"companion_alexander", laurent_to_json(s.companion_alexander)}};
}

inline json nonembed_report_to_json(const NonembedReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"l", row.l},
                        {"rank_lower_bound", row.rank_lower},
                        {"surjection", row.surjection}});
    json wit = json::object();
    for (const auto& [name, poly] : r.witnesses)
        wit[name] = laurent_to_json(poly);
    return {{"m", r.m},
            {"writhe", r.writhe_k},
            {"tau", r.tau},
            {"tau_formula", "tau = m/2 + writhe(K)"},
            {"tau_formula_ok", r.tau_formula_ok},
            {"surjections", rows},
            {"witnesses", wit},
            {"contradiction", r.contradiction},
            {"verdict", r.verdict}};
}

}  // namespace wdtk
