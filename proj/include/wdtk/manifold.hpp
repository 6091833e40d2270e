// Symbolic models of the contractible open manifolds W(K, m).
//
// A manifold spec records the companion diagram, the even half-twist count
// m, and the eventually periodic insertion word over {L, L*} describing the
// layer sequence (Bing: tail [L]; Sternfeld: tail [L, L*]). Classification
// is decided only through implemented invariants: different Alexander
// polynomials of the companions, or different twisting numbers detected by
// divisibility rigidity of the twist quadratics. tau = 0 degenerates the
// quadratic to a unit and is reported as inconclusive.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wdtk/alexander.hpp"
#include "wdtk/certificates.hpp"
#include "wdtk/diagram.hpp"
#include "wdtk/errors.hpp"
#include "wdtk/satellite.hpp"

namespace wdtk {

enum class LayerLetter { L, Lstar };

struct LayerWord {
    std::vector<LayerLetter> prefix;
    std::vector<LayerLetter> tail;  // repeated forever

    // canonical eventually-periodic form: primitive tail, shortest prefix
    LayerWord normalized() const {
        LayerWord w = *this;
        // primitive root of the tail
        for (size_t p = 1; p <= w.tail.size() / 2; ++p) {
            if (w.tail.size() % p)
                continue;
            bool periodic = true;
            for (size_t i = p; i < w.tail.size() && periodic; ++i)
                periodic = w.tail[i] == w.tail[i - p];
            if (periodic) {
                w.tail.resize(p);
                break;
            }
        }
        // absorb prefix letters that merely rotate the tail
        while (!w.prefix.empty() && w.prefix.back() == w.tail.back()) {
            w.prefix.pop_back();
            std::rotate(w.tail.begin(), w.tail.end() - 1, w.tail.end());
        }
        return w;
    }

    friend bool operator==(const LayerWord& a, const LayerWord& b) {
        LayerWord x = a.normalized(), y = b.normalized();
        return x.prefix == y.prefix && x.tail == y.tail;
    }
};

inline LayerWord bing_word() { return {{}, {LayerLetter::L}}; }
inline LayerWord sternfeld_word() { return {{}, {LayerLetter::L, LayerLetter::Lstar}}; }

struct ManifoldSpec {
    Diagram companion;
    long m = 0;
    LayerWord word;
    long tau = 0;
    LaurentPoly companion_alexander;
};

inline ManifoldSpec build_w(const Diagram& k, long m, const LayerWord& word = bing_word(),
                            WarningLog* warnings = nullptr) {
    require(m % 2 == 0, "OddTwist", "half-twist count m must be even");
    require(k.n_components() == 1, "MultiComponent", "companion must be a knot diagram");
    require(!word.tail.empty(), "WordShapeMismatch", "layer word needs a nonempty repeating tail");
    ManifoldSpec spec;
    spec.companion = k;
    spec.m = m;
    spec.word = word.normalized();
    spec.tau = m / 2 + (k.crossing_count() ? writhe(k) : 0);
    spec.companion_alexander = alexander_from_diagram(k);
    if (warnings && eq_up_to_units(spec.companion_alexander, LaurentPoly::one()))
        warnings->add("TriviallyUnknottedCompanion",
                      "companion has trivial Alexander polynomial; the construction requires a "
                      "nontrivial knot and Delta = 1 does not certify knottedness");
    return spec;
}

enum class ClassifyVerdict { distinct, indistinguishable_by_invariants, inconclusive_tau_zero };

inline std::string verdict_str(ClassifyVerdict v) {
    switch (v) {
        case ClassifyVerdict::distinct: return "distinct";
        case ClassifyVerdict::indistinguishable_by_invariants:
            return "indistinguishable-by-invariants";
        default: return "inconclusive-tau-zero";
    }
}

// Invariant-level comparison of W(K, m) and W(K', m'). Sound directions
// only: "distinct" is certified, "indistinguishable-by-invariants" is not a
// homeomorphism claim.
inline ClassifyVerdict classify(const ManifoldSpec& a, const ManifoldSpec& b) {
    require(a.word == b.word, "WordShapeMismatch",
            "classification applies to specs with the same layer word");
    if (!eq_up_to_units(a.companion_alexander, b.companion_alexander))
        return ClassifyVerdict::distinct;
    if (a.m != b.m) {
        if (a.tau != 0 && b.tau != 0)
            return ClassifyVerdict::distinct;  // divisibility rigidity of twist quadratics
        return ClassifyVerdict::inconclusive_tau_zero;
    }
    return ClassifyVerdict::indistinguishable_by_invariants;
}

struct NonembedReport {
    long m = 0;
    long writhe_k = 0;
    long tau = 0;
    bool tau_formula_ok = false;
    struct Row {
        long l;
        long rank_lower;
        std::string surjection;
    };
    std::vector<Row> rows;
    std::vector<std::pair<std::string, LaurentPoly>> witnesses;  // Delta(K_1), Delta(K_2)
    std::string contradiction;
    std::string verdict;
};

// The nonembeddability certificate: the surjection chain onto the K_l knot
// groups, the strictly increasing rank bounds l+1, and the finitely
// generated fundamental group contradiction.
inline NonembedReport nonembed_report(const ManifoldSpec& spec, long l_max) {
    require(l_max >= 2, "BadLMax", "report needs l_max >= 2");
    NonembedReport rep;
    rep.m = spec.m;
    rep.writhe_k = spec.companion.crossing_count() ? writhe(spec.companion) : 0;
    rep.tau = spec.tau;
    rep.tau_formula_ok = spec.tau == spec.m / 2 + rep.writhe_k;
    for (long l = 1; l <= l_max; ++l) {
        NonembedReport::Row row;
        row.l = l;
        row.rank_lower = kl_bound(l).lower;
        row.surjection =
            "pi_1(W \\ T0*) ->> pi_1(S^3 \\ K_" + std::to_string(l) + ")";
        rep.rows.push_back(row);
    }
    for (long l = 1; l <= std::min<long>(2, l_max); ++l) {
        auto fam = k_family(spec.companion, spec.m, l);
        rep.witnesses.push_back(
            {"Delta(K_" + std::to_string(l) + ")", alexander_from_diagram(fam.diagram)});
    }
    rep.contradiction =
        "If W(K, m) embedded as an open subset of a compact, locally connected, locally "
        "1-connected metric space X, then pi_1(X \\ Int T0*) would be finitely generated "
        "[Sternfeld 1977, Lemma 1.1]; yet it surjects onto pi_1(S^3 \\ K_l) for every l, "
        "and r(K_l) >= l+1 grows without bound. No finitely generated group surjects onto "
        "groups of unbounded rank, a contradiction.";
    rep.verdict = "nonembeddable: W(K, m) embeds in no compact, locally connected, locally "
                  "1-connected metric 3-space";
    return rep;
}

}  // namespace wdtk
