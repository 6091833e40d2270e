// Layer presentations for the nested-torus construction.
//
// One layer is the complement, inside a solid torus, of a twist-knot-shaped
// pattern with K spliced in. Its group is assembled from the twist-pattern
// link group (pattern plus axis circle, via the link Wirtinger routine) and
// a copy of the knot group of K, amalgamated over the meridian at the
// splice site -- the usual connected-sum decomposition. The layer exposes
// both cusps:
//
//   pattern cusp: meridian mu_P and 0-framed longitude lambda_P (composite:
//                 twist-pattern longitude times the K longitude);
//   axis cusp:    mu_C, lambda_C of the unknotted axis circle.
//
// On the outer torus of the solid torus the meridian is the axis circle's
// preferred longitude and the longitude is the axis meridian, so satellite
// regluing of the solid torus onto a companion C reads
//
//   lambda_C = mu(C),   mu_C = lambda(C),
//
// with lambda(C) the companion's preferred longitude. Because the pattern
// has winding number zero, its local 0-framed longitude stays the preferred
// longitude of the resulting satellite, which is what makes the identity
// iterate. The twisting is carried entirely by the half-twist box of each
// layer (tau full twists for the inner layers), which is isotopic to
// twisting the regluing maps instead; the family traced out is
// K_1 = TW_{m/2} # K and K_{i+1} = WD_tau(K_i) # K with
// tau = m/2 + writhe(K).

#pragma once

#include <string>
#include <vector>

#include "wdtk/alexander.hpp"
#include "wdtk/presentation.hpp"
#include "wdtk/satellite.hpp"

namespace wdtk {

inline Word shift_word(const Word& w, int offset) {
    Word r = w;
    for (auto& x : r)
        x = x > 0 ? x + offset : x - offset;
    return r;
}

struct LayerPieces {
    GroupPresentation pres;
    Word mu_pattern, lambda_pattern;
    Word mu_axis, lambda_axis;
};

// Group of one layer with j full twists in the box:
// (twist-pattern link group) *_<meridian> (knot group of K).
inline LayerPieces make_layer(const Diagram& k, long j, int clasp_sign = +1) {
    require(k.n_components() == 1, "MultiComponent", "layer companion must be a knot diagram");
    Diagram wl = twist_pattern_link(j, clasp_sign);
    GroupPresentation wlp = wirtinger(wl);  // peripheral[0] = pattern, [1] = axis
    LayerPieces out;
    if (k.crossing_count() == 0) {
        // trivial K: the layer is the twist-pattern link group itself
        out.pres = wlp;
        out.mu_pattern = wlp.peripheral[0].meridian;
        out.lambda_pattern = wlp.peripheral[0].longitude;
        out.mu_axis = wlp.peripheral[1].meridian;
        out.lambda_axis = wlp.peripheral[1].longitude;
        return out;
    }
    GroupPresentation kp = wirtinger(k);
    out.pres = amalgamated_product(
        wlp, kp, {{wlp.peripheral[0].meridian, kp.peripheral[0].meridian}});
    // carried peripherals: [0] pattern, [1] axis, [2] K cusp (shifted)
    out.mu_pattern = out.pres.peripheral[0].meridian;
    out.lambda_pattern =
        free_reduce(concat(out.pres.peripheral[0].longitude, out.pres.peripheral[2].longitude));
    out.mu_axis = out.pres.peripheral[1].meridian;
    out.lambda_axis = out.pres.peripheral[1].longitude;
    return out;
}

struct LayerQuotientResult {
    GroupPresentation presentation;
    long tau = 0;
    long m = 0;
    long l = 0;
    long tietze_steps = 0;
};

// Presentation of pi_1(S^3 minus K_l), assembled layer by layer and
// simplified. Level 1 fills the axis back in (killing its meridian, which
// is what collapsing everything beyond the truncation amounts to); each
// further level satellites the accumulated group as the companion of a
// fresh tau-twisted layer.
inline LayerQuotientResult layer_quotient(const Diagram& k, long m, long l,
                                          int clasp_sign = +1, long tietze_budget = 200000) {
    require(m % 2 == 0, "OddTwist", "half-twist count m must be even");
    require(l >= 1, "BadL", "layer count l must be >= 1");
    require(k.n_components() == 1, "MultiComponent", "companion must be a knot diagram");
    const long tau = m / 2 + (k.crossing_count() ? writhe(k) : 0);

    LayerPieces first = make_layer(k, m / 2, clasp_sign);
    GroupPresentation g = first.pres;
    g.relators.push_back(first.mu_axis);  // fill the axis: the K_1 knot group
    Word mu = first.mu_pattern;
    Word lambda = first.lambda_pattern;

    for (long i = 2; i <= l; ++i) {
        LayerPieces layer = make_layer(k, tau, clasp_sign);
        g = amalgamated_product(layer.pres, g,
                                {{layer.lambda_axis, mu}, {layer.mu_axis, lambda}});
        mu = layer.mu_pattern;
        lambda = layer.lambda_pattern;
    }

    g.peripheral = {{mu, lambda}};
    TietzeResult tz = tietze_simplify(std::move(g), tietze_budget);
    LayerQuotientResult res;
    res.presentation = std::move(tz.presentation);
    res.tau = tau;
    res.m = m;
    res.l = l;
    res.tietze_steps = tz.steps_used;
    return res;
}

}  // namespace wdtk
