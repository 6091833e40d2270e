// Whitehead doubling on PD codes.
//
// The double of a companion diagram is assembled from local tangles:
//
//   * every companion crossing becomes a 2x2 block of four crossings (each
//     lane of the doubled under-road crosses each lane of the over-road);
//   * a box is spliced into the road along the companion's lowest edge,
//     holding |tau - writhe| full twists of the lane pair followed by a
//     clasp where the two turnback hooks interlock;
//   * unclasping replaces the clasp by two pass-through arcs, which splits
//     the knot into the two-component ribbon boundary.
//
// The A lane runs parallel to the companion orientation on its right side;
// the B lane is its return lane. An unclasped link is emitted with both
// components oriented parallel to the companion, so its linking number is
// the twisting number: writhe(companion) from the blackboard framing plus
// one per inserted full twist. Tests pin this calibration against the
// twist-knot quadratic.

#pragma once

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "wdtk/diagram.hpp"
#include "wdtk/errors.hpp"
#include "wdtk/planar_builder.hpp"

namespace wdtk {

struct DoublingSpec {
    Diagram companion;
    long tau = 0;
    int clasp_sign = +1;
    long iterations = 1;
    std::optional<long> half_twists;  // m of the W(K, m) family, when derived from it

    void validate() const {
        require(companion.n_components() == 1, "MultiComponent",
                "doubling companion must be a knot diagram");
        if (half_twists) {
            require(*half_twists % 2 == 0, "OddTwist", "half-twist count m must be even");
            require(tau == *half_twists / 2 + writhe(companion), "InconsistentMeta",
                    "tau must equal m/2 + writhe(companion)");
        }
        require(clasp_sign == 1 || clasp_sign == -1, "InconsistentMeta", "clasp sign must be +-1");
    }
};

namespace detail {

struct LanePorts {
    PlanarBuilder::Port a;  // A-lane port at this side of the block
    PlanarBuilder::Port b;  // B-lane port
};

// Builds the doubled (or unclasped) diagram; optionally threads an axis
// circle around the lane pair (used for the pattern-in-solid-torus links).
struct DoubleBuild {
    Diagram diagram;
    std::vector<int> clasp_crossings;
    std::vector<int> twist_crossings;
};

inline DoubleBuild build_double(const Diagram& companion, long tau, int clasp_sign,
                                bool clasped, bool with_axis) {
    require(companion.n_components() == 1, "MultiComponent",
            "doubling companion must be a knot diagram");
    const long w = companion.crossing_count() ? writhe(companion) : 0;
    const long k = tau - w;  // full twists to insert
    const long half = 2 * std::labs(k);

    PlanarBuilder pb;
    using Port = PlanarBuilder::Port;

    // --- squares: four crossings per companion crossing -------------------
    const size_t c = companion.crossing_count();
    std::vector<std::array<int, 4>> sq(c);
    for (size_t i = 0; i < c; ++i) {
        for (int j = 0; j < 4; ++j)
            sq[i][static_cast<size_t>(j)] = pb.add_crossing(1);  // over-road lanes are over
        const auto& s = sq[i];
        if (companion.sign(i) > 0) {
            pb.connect({s[0], 2}, {s[2], 0});  // under A lane
            pb.connect({s[3], 0}, {s[1], 2});  // under B lane
            pb.connect({s[1], 1}, {s[0], 3});  // over A lane
            pb.connect({s[2], 3}, {s[3], 1});  // over B lane
        } else {
            pb.connect({s[2], 2}, {s[0], 0});
            pb.connect({s[1], 0}, {s[3], 2});
            pb.connect({s[0], 3}, {s[1], 1});
            pb.connect({s[3], 1}, {s[2], 3});
        }
    }

    // lane ports of a companion crossing at the side where edge `slot` sits
    auto side_ports = [&](size_t cr, int slot) -> LanePorts {
        const auto& s = sq[cr];
        if (companion.sign(cr) > 0) {
            switch (slot) {
                case 0: return {{s[0], 0}, {s[1], 0}};
                case 2: return {{s[2], 2}, {s[3], 2}};
                case 3: return {{s[1], 3}, {s[3], 3}};  // over-in side
                default: return {{s[0], 1}, {s[2], 1}};  // slot 1, over-out side
            }
        }
        switch (slot) {
            case 0: return {{s[2], 0}, {s[3], 0}};
            case 2: return {{s[0], 2}, {s[1], 2}};
            case 1: return {{s[0], 1}, {s[2], 1}};  // over-in side
            default: return {{s[1], 3}, {s[3], 3}};  // slot 3, over-out side
        }
    };

    // --- box: twists then clasp (or pass-through) --------------------------
    std::vector<int> twist_ids;
    for (long i = 0; i < half; ++i)
        twist_ids.push_back(pb.add_crossing(k > 0 ? 1 : 0, "twist"));
    for (long i = 0; i + 1 < half; ++i) {
        pb.connect({twist_ids[static_cast<size_t>(i)], 1}, {twist_ids[static_cast<size_t>(i + 1)], 0});
        pb.connect({twist_ids[static_cast<size_t>(i)], 2}, {twist_ids[static_cast<size_t>(i + 1)], 3});
    }

    // The two turnback hooks share two crossings; a genuine clasp has
    // alternating over/under there (same strand on top at both lets the
    // hooks slide apart).
    int c1 = -1, c2 = -1;
    if (clasped) {
        c1 = pb.add_crossing(clasp_sign > 0 ? 1 : 0, "clasp");
        c2 = pb.add_crossing(clasp_sign > 0 ? 0 : 1, "clasp");
        pb.connect({c2, 2}, {c1, 0});  // west hook through the east hook
        pb.connect({c1, 3}, {c2, 3});  // east hook turnback
    }

    // box-side ports facing the road
    Port box_w_lo = half ? Port{twist_ids.front(), 0} : (clasped ? Port{c2, 0} : Port{});
    Port box_w_hi = half ? Port{twist_ids.front(), 3} : (clasped ? Port{c1, 2} : Port{});
    Port box_e_lo, box_e_hi;
    if (clasped) {
        if (half) {
            pb.connect({twist_ids.back(), 1}, {c2, 0});
            pb.connect({twist_ids.back(), 2}, {c1, 2});
        }
        box_e_lo = {c2, 1};
        box_e_hi = {c1, 1};
    } else {
        box_e_lo = half ? Port{twist_ids.back(), 1} : Port{};
        box_e_hi = half ? Port{twist_ids.back(), 2} : Port{};
    }
    const bool box_has_crossings = clasped || half > 0;

    // --- optional axis circle around the lane pair -------------------------
    // Crossings: the circle passes over both lanes on its west arc and under
    // them on its east arc. Lane ports are E/W (slots 1/3), circle N/S.
    int aw = -1, bw = -1, ae = -1, be = -1;
    if (with_axis) {
        aw = pb.add_crossing(0, "axis");
        bw = pb.add_crossing(0, "axis");
        ae = pb.add_crossing(1, "axis");
        be = pb.add_crossing(1, "axis");
        pb.connect({aw, 0}, {ae, 0});  // circle bottom
        pb.connect({aw, 2}, {bw, 0});  // circle west
        pb.connect({ae, 2}, {be, 0});  // circle east
        pb.connect({bw, 2}, {be, 2});  // circle top
        pb.connect({aw, 1}, {ae, 3});  // lane A through the circle
        pb.connect({bw, 1}, {be, 3});  // lane B through the circle
    }

    // --- road ---------------------------------------------------------------
    std::vector<PlanarBuilder::Port> starts;
    int loops_to_add = 0;

    if (c == 0) {
        // companion is the 0-crossing unknot; the corridor connects the box
        // east face back to its west face (optionally through the axis)
        if (!box_has_crossings) {
            // nothing in the box at all
            if (with_axis) {
                pb.connect({ae, 1}, {aw, 3});
                pb.connect({be, 1}, {bw, 3});
                starts.push_back(Port{ae, 1});
                starts.push_back(Port{be, 1});
                starts.push_back(Port{aw, 2});
            } else {
                loops_to_add = clasped ? 1 : 2;
            }
        } else if (with_axis) {
            // lane A traverses the axis west to east, lane B east to west
            pb.connect(box_e_lo, {aw, 3});
            pb.connect({ae, 1}, box_w_lo);
            pb.connect(box_w_hi, {be, 1});
            pb.connect({bw, 3}, box_e_hi);
            starts.push_back(box_e_lo);
            starts.push_back(Port{aw, 2});
        } else {
            pb.connect(box_e_lo, box_w_lo);
            pb.connect(box_e_hi, box_w_hi);
            starts.push_back(box_e_lo);
            if (!clasped)
                starts.push_back(box_e_hi);
        }
    } else {
        require(!with_axis, "MultiComponent", "internal: axis only supported on the trivial companion");
        // For every companion edge, find its tail (departure) and head
        // (arrival) occurrences.
        const long n_labels = 2 * static_cast<long>(c);
        for (long e = 1; e <= n_labels; ++e) {
            std::optional<std::pair<size_t, int>> tail, head;
            for (size_t i = 0; i < c; ++i)
                for (int s = 0; s < 4; ++s) {
                    if (companion.crossings()[i].e[static_cast<size_t>(s)] != e)
                        continue;
                    bool is_head = (s == 0) || (s == companion.over_in_slot(i));
                    if (is_head)
                        head = {i, s};
                    else
                        tail = {i, s};
                }
            LanePorts from = side_ports(tail->first, tail->second);
            LanePorts to = side_ports(head->first, head->second);
            if (e == 1) {
                // splice the box into the lowest edge
                if (box_has_crossings) {
                    pb.connect(from.a, box_w_lo);
                    pb.connect(box_w_hi, from.b);
                    pb.connect(box_e_lo, to.a);
                    pb.connect(box_e_hi, to.b);
                    starts.push_back(box_e_lo);
                    if (!clasped)
                        starts.push_back(from.b);
                } else {
                    pb.connect(from.a, to.a);
                    pb.connect(to.b, from.b);
                    starts.push_back(from.a);
                    if (!clasped)
                        starts.push_back(from.b);
                }
            } else {
                pb.connect(from.a, to.a);
                pb.connect(to.b, from.b);
            }
        }
    }

    for (int i = 0; i < loops_to_add; ++i)
        pb.add_loop();

    auto built = pb.build(starts);
    DoubleBuild out;
    out.diagram = std::move(built.diagram);
    if (c1 >= 0) {
        out.clasp_crossings = {built.crossing_index[static_cast<size_t>(c1)],
                               built.crossing_index[static_cast<size_t>(c2)]};
        std::sort(out.clasp_crossings.begin(), out.clasp_crossings.end());
    }
    for (int id : twist_ids)
        out.twist_crossings.push_back(built.crossing_index[static_cast<size_t>(id)]);
    std::sort(out.twist_crossings.begin(), out.twist_crossings.end());
    return out;
}

}  // namespace detail

// tau-twisted Whitehead double of a knot diagram. Inserts tau - writhe(d)
// compensating full twists next to the clasp, so the twisting number of the
// result is exactly tau; crossing count 4c + 2 + 2|tau - writhe(d)|.
inline Diagram whitehead_double(const Diagram& d, long tau, int clasp_sign = +1) {
    require(clasp_sign == 1 || clasp_sign == -1, "InconsistentMeta", "clasp sign must be +-1");
    auto built = detail::build_double(d, tau, clasp_sign, true, false);
    long expected = 4 * static_cast<long>(d.crossing_count()) + 2 +
                    2 * std::labs(tau - (d.crossing_count() ? writhe(d) : 0));
    require(static_cast<long>(built.diagram.crossing_count()) == expected, "BadOrientation",
            "internal: doubled crossing count mismatch");
    DoubleProvenance prov;
    prov.companion_pd = d.serialize();
    prov.tau = tau;
    prov.clasp_sign = clasp_sign;
    prov.clasp_crossings = built.clasp_crossings;
    prov.twist_crossings = built.twist_crossings;
    prov.companion_hash = diagram_hash(d);
    return built.diagram.with_provenance(std::move(prov));
}

// Blackboard-framed double: no compensating twists, twisting number equals
// the companion diagram's writhe.
inline Diagram blackboard_double(const Diagram& d, int clasp_sign = +1) {
    require(d.n_components() == 1, "MultiComponent", "doubling companion must be a knot diagram");
    return whitehead_double(d, d.crossing_count() ? writhe(d) : 0, clasp_sign);
}

// Twist knot TW_j = j-twisted double of the unknot; 2|j| + 2 crossings.
inline Diagram twist_knot(long j, int clasp_sign = +1) {
    return whitehead_double(Diagram::unknot(), j, clasp_sign);
}

// Resolves the clasp of a doubled diagram into the two-component ribbon
// boundary. Components are emitted parallel to the companion orientation,
// so linking_number(result, 0, 1) is the twisting number.
inline Diagram unclasp_link(const Diagram& doubled) {
    require(doubled.provenance().has_value(), "NoClaspMetadata",
            "diagram carries no doubling provenance");
    const auto& prov = *doubled.provenance();
    Diagram companion = parse_pd(prov.companion_pd);
    auto built = detail::build_double(companion, prov.tau, prov.clasp_sign, false, false);
    return built.diagram;
}

struct IteratedDoubleResult {
    Diagram diagram;
    std::vector<long> taus;
};

// n-fold iterated double; level i uses tau_list[i].
inline IteratedDoubleResult iterated_double(const Diagram& d, const std::vector<long>& tau_list,
                                            int clasp_sign = +1, WarningLog* warnings = nullptr) {
    require(!tau_list.empty(), "EmptyTauList", "iterated double needs at least one twisting number");
    require(d.n_components() == 1, "MultiComponent", "doubling companion must be a knot diagram");
    if (warnings && tau_list.size() > 3 && d.crossing_count() >= 3)
        warnings->add("DeskScaleGuard",
                      "more than 3 doubling levels on a >=3 crossing companion; Alexander "
                      "computations will be slow");
    Diagram cur = d;
    for (long tau : tau_list)
        cur = whitehead_double(cur, tau, clasp_sign);
    return {cur, tau_list};
}

struct KFamilyResult {
    Diagram diagram;
    long tau = 0;
    long m = 0;
    long l = 0;
    // per level: (tau used, writhe of the running companion before doubling)
    std::vector<std::pair<long, long>> levels;
};

// K_1 = TW_{m/2} # K ; K_l = WD_tau(K_{l-1}) # K with tau = m/2 + writhe(K).
inline KFamilyResult k_family(const Diagram& k, long m, long l, int clasp_sign = +1) {
    require(m % 2 == 0, "OddTwist", "half-twist count m must be even");
    require(k.n_components() == 1, "MultiComponent", "companion must be a knot diagram");
    require(l >= 1, "BadL", "family index l must be >= 1");
    KFamilyResult res;
    res.m = m;
    res.tau = m / 2 + (k.crossing_count() ? writhe(k) : 0);
    res.l = l;
    Diagram cur = connected_sum(twist_knot(m / 2, clasp_sign), k);
    res.levels.push_back({res.tau, 0});
    for (long i = 2; i <= l; ++i) {
        long w = writhe(cur);
        cur = connected_sum(whitehead_double(cur, res.tau, clasp_sign), k);
        res.levels.push_back({res.tau, w});
    }
    res.diagram = cur;
    return res;
}

// Pattern-in-solid-torus link: the j-twist knot together with the axis
// circle of the complementary solid torus (the "Whitehead link with 2j
// half-twists"). Component 0 is the pattern, component 1 the axis;
// lk(pattern, axis) = 0 since the pattern has winding number zero.
inline Diagram twist_pattern_link(long j, int clasp_sign = +1) {
    auto built = detail::build_double(Diagram::unknot(), j, clasp_sign, true, true);
    return built.diagram;
}

}  // namespace wdtk
