// Oriented link diagrams as combinatorial PD codes.
//
// Conventions (see docs/conventions.md):
//   * A crossing X[a,b,c,d] lists the four incident edge labels
//     counterclockwise starting at the incoming under-strand edge a; the
//     under-strand leaves at c.
//   * Edge labels increase along each component's orientation and wrap at
//     the component's label interval, so orientation is carried entirely by
//     the labeling.
//   * A crossing is positive when the over-strand runs d -> b (equivalently,
//     rotating the over direction counterclockwise by a quarter turn gives
//     the under direction). The closure of the braid s1^3 then has writhe +3.
//   * Crossing-free unknot components are written "Loop[k]".
//
// Planarity of the code is NOT verified, only the combinatorial conditions
// above; inputs are trusted to be realizable.

#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wdtk/errors.hpp"

namespace wdtk {

struct Crossing {
    std::array<long, 4> e;  // (a, b, c, d)

    friend bool operator==(const Crossing& x, const Crossing& y) { return x.e == y.e; }
};

// Construction metadata carried by satellite diagrams so that the clasp can
// be resolved later (see satellite.hpp). The companion PD string plus the
// twisting parameters determine the construction.
struct DoubleProvenance {
    std::string companion_pd;
    long tau = 0;
    int clasp_sign = +1;
    std::vector<int> clasp_crossings;  // indices into crossings()
    std::vector<int> twist_crossings;
    std::string companion_hash;

    friend bool operator==(const DoubleProvenance&, const DoubleProvenance&) = default;
};

class Diagram {
public:
    Diagram() : n_loops_(1) {}  // default: the 0-crossing unknot? no -- see unknot()

    // A diagram is built from raw tuples plus a count of crossing-free
    // components; the constructor validates the full PD contract and derives
    // signs, components and orientation roles.
    Diagram(std::vector<Crossing> crossings, int n_loops,
            std::optional<DoubleProvenance> provenance = std::nullopt)
        : crossings_(std::move(crossings)), n_loops_(n_loops), provenance_(std::move(provenance)) {
        canonicalize();
        validate();
    }

    static Diagram unknot() { return Diagram({}, 1); }

    const std::vector<Crossing>& crossings() const { return crossings_; }
    size_t crossing_count() const { return crossings_.size(); }
    int n_loops() const { return n_loops_; }
    int n_components() const { return static_cast<int>(ranges_.size()) + n_loops_; }

    // Label intervals of the crossing-carrying components, ordered by their
    // low label. Loop components carry no labels and follow these.
    const std::vector<std::pair<long, long>>& component_ranges() const { return ranges_; }

    int sign(size_t crossing) const { return signs_[crossing]; }
    int under_component(size_t crossing) const { return under_comp_[crossing]; }
    int over_component(size_t crossing) const { return over_comp_[crossing]; }
    // Slot (1 or 3) at which the over-strand enters the crossing.
    int over_in_slot(size_t crossing) const { return over_in_slot_[crossing]; }

    const std::optional<DoubleProvenance>& provenance() const { return provenance_; }

    Diagram with_provenance(DoubleProvenance p) const {
        return Diagram(crossings_, n_loops_, std::move(p));
    }

    int component_of_label(long label) const {
        for (size_t i = 0; i < ranges_.size(); ++i)
            if (label >= ranges_[i].first && label <= ranges_[i].second)
                return static_cast<int>(i);
        fail("LabelCount", "label out of range: " + std::to_string(label));
    }

    long next_label(long x) const {
        const auto& r = ranges_[static_cast<size_t>(component_of_label(x))];
        return x == r.second ? r.first : x + 1;
    }

    friend bool operator==(const Diagram& a, const Diagram& b) {
        return a.crossings_ == b.crossings_ && a.n_loops_ == b.n_loops_;
    }
    friend bool operator!=(const Diagram& a, const Diagram& b) { return !(a == b); }

    std::string serialize() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& c : crossings_) {
            if (!first)
                os << " ";
            os << "X[" << c.e[0] << "," << c.e[1] << "," << c.e[2] << "," << c.e[3] << "]";
            first = false;
        }
        for (int i = 0; i < n_loops_; ++i) {
            if (!first)
                os << " ";
            os << "Loop[" << (i + 1) << "]";
            first = false;
        }
        return os.str();
    }

private:
    std::vector<Crossing> crossings_;
    int n_loops_ = 0;
    std::optional<DoubleProvenance> provenance_;

    // derived
    std::vector<std::pair<long, long>> ranges_;
    std::vector<int> signs_;
    std::vector<int> under_comp_, over_comp_;
    std::vector<int> over_in_slot_;

    void canonicalize() {
        std::sort(crossings_.begin(), crossings_.end(),
                  [](const Crossing& x, const Crossing& y) { return x.e < y.e; });
    }

    struct Occ {
        int cr;
        int slot;
    };

    void validate() {
        require(n_loops_ >= 0, "LabelCount", "negative loop count");
        const long c = static_cast<long>(crossings_.size());
        const long n_labels = 2 * c;

        // every label in 1..2c exactly twice
        std::vector<std::vector<Occ>> occ(static_cast<size_t>(n_labels) + 1);
        for (int i = 0; i < c; ++i)
            for (int s = 0; s < 4; ++s) {
                long lab = crossings_[static_cast<size_t>(i)].e[static_cast<size_t>(s)];
                require(lab >= 1 && lab <= n_labels, "LabelCount",
                        "edge label " + std::to_string(lab) + " outside 1.." +
                            std::to_string(n_labels));
                occ[static_cast<size_t>(lab)].push_back({i, s});
            }
        for (long lab = 1; lab <= n_labels; ++lab)
            require(occ[static_cast<size_t>(lab)].size() == 2, "LabelCount",
                    "edge label " + std::to_string(lab) + " does not appear exactly twice");

        // components: labels united when a strand runs straight through a
        // crossing (slots 0-2 and 1-3 carry one strand each)
        std::vector<long> parent(static_cast<size_t>(n_labels) + 1);
        for (long i = 0; i <= n_labels; ++i)
            parent[static_cast<size_t>(i)] = i;
        auto find = [&](long x) {
            while (parent[static_cast<size_t>(x)] != x)
                x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            return x;
        };
        auto unite = [&](long x, long y) { parent[static_cast<size_t>(find(x))] = find(y); };
        for (const auto& cr : crossings_) {
            unite(cr.e[0], cr.e[2]);
            unite(cr.e[1], cr.e[3]);
        }

        // label intervals per component, contiguous, partitioning 1..2c
        std::map<long, std::pair<long, long>> comp_bounds;
        for (long lab = 1; lab <= n_labels; ++lab) {
            long r = find(lab);
            auto it = comp_bounds.find(r);
            if (it == comp_bounds.end())
                comp_bounds[r] = {lab, lab};
            else {
                it->second.first = std::min(it->second.first, lab);
                it->second.second = std::max(it->second.second, lab);
            }
        }
        ranges_.clear();
        for (const auto& [root, b] : comp_bounds)
            ranges_.push_back(b);
        std::sort(ranges_.begin(), ranges_.end());
        long expect = 1;
        for (const auto& [lo, hi] : ranges_) {
            require(lo == expect, "BadOrientation",
                    "component label intervals do not partition 1..2c");
            for (long x = lo; x <= hi; ++x)
                require(find(x) == find(lo), "BadOrientation",
                        "component labels are not contiguous");
            expect = hi + 1;
        }
        require(expect == n_labels + 1, "BadOrientation", "label intervals do not cover 1..2c");

        auto succ = [&](long x) {
            for (const auto& [lo, hi] : ranges_)
                if (x >= lo && x <= hi)
                    return x == hi ? lo : x + 1;
            return x;
        };

        // under-strand: a -> c forced
        for (const auto& cr : crossings_)
            require(succ(cr.e[0]) == cr.e[2], "BadOrientation",
                    "under-strand labels at a crossing are not consecutive");

        // Resolve which over slot is the incoming one. role: 0 unknown,
        // 1 head (edge ends here), 2 tail (edge starts here).
        std::vector<std::array<int, 2>> role(static_cast<size_t>(n_labels) + 1, {0, 0});
        auto occ_index = [&](long lab, int cr, int slot) {
            const auto& v = occ[static_cast<size_t>(lab)];
            return (v[0].cr == cr && v[0].slot == slot) ? 0 : 1;
        };
        auto set_role = [&](long lab, int idx, int r) {
            auto& rr = role[static_cast<size_t>(lab)];
            require(rr[static_cast<size_t>(idx)] == 0 || rr[static_cast<size_t>(idx)] == r,
                    "BadOrientation", "inconsistent edge orientation at label " + std::to_string(lab));
            rr[static_cast<size_t>(idx)] = r;
            rr[static_cast<size_t>(1 - idx)] = 3 - r;  // the other occurrence is the opposite end
        };
        for (int i = 0; i < c; ++i) {
            set_role(crossings_[static_cast<size_t>(i)].e[0], occ_index(crossings_[static_cast<size_t>(i)].e[0], i, 0), 1);
            set_role(crossings_[static_cast<size_t>(i)].e[2], occ_index(crossings_[static_cast<size_t>(i)].e[2], i, 2), 2);
        }

        over_in_slot_.assign(static_cast<size_t>(c), 0);
        auto try_resolve = [&](int i, bool force) {
            if (over_in_slot_[static_cast<size_t>(i)] != 0)
                return false;
            const auto& cr = crossings_[static_cast<size_t>(i)];
            long b = cr.e[1], d = cr.e[3];
            int ob = occ_index(b, i, 1), od = occ_index(d, i, 3);
            // candidate 1: over runs d -> b (positive): d in (head at slot 3), b out
            bool cand_pos = succ(d) == b &&
                            (role[static_cast<size_t>(d)][static_cast<size_t>(od)] != 2) &&
                            (role[static_cast<size_t>(b)][static_cast<size_t>(ob)] != 1);
            // candidate 2: over runs b -> d (negative)
            bool cand_neg = succ(b) == d &&
                            (role[static_cast<size_t>(b)][static_cast<size_t>(ob)] != 2) &&
                            (role[static_cast<size_t>(d)][static_cast<size_t>(od)] != 1);
            require(cand_pos || cand_neg, "BadOrientation",
                    "over-strand labels at a crossing admit no orientation");
            if (cand_pos && cand_neg && !force)
                return false;
            if (cand_pos) {
                over_in_slot_[static_cast<size_t>(i)] = 3;
                set_role(d, od, 1);
                set_role(b, ob, 2);
            } else {
                over_in_slot_[static_cast<size_t>(i)] = 1;
                set_role(b, ob, 1);
                set_role(d, od, 2);
            }
            return true;
        };
        bool progress = true;
        while (progress) {
            progress = false;
            for (int i = 0; i < c; ++i)
                progress |= try_resolve(i, false);
        }
        // Components without any underpass can leave a residual binary
        // choice; resolve deterministically (positive reading first, lowest
        // crossing index first) and keep propagating.
        for (int i = 0; i < c; ++i) {
            if (try_resolve(i, true)) {
                progress = true;
                while (progress) {
                    progress = false;
                    for (int j = 0; j < c; ++j)
                        progress |= try_resolve(j, false);
                }
            }
        }
        for (long lab = 1; lab <= n_labels; ++lab)
            require(role[static_cast<size_t>(lab)][0] != 0, "BadOrientation",
                    "edge " + std::to_string(lab) + " has no consistent orientation");

        signs_.assign(static_cast<size_t>(c), 0);
        under_comp_.assign(static_cast<size_t>(c), 0);
        over_comp_.assign(static_cast<size_t>(c), 0);
        for (int i = 0; i < c; ++i) {
            signs_[static_cast<size_t>(i)] = over_in_slot_[static_cast<size_t>(i)] == 3 ? +1 : -1;
            under_comp_[static_cast<size_t>(i)] = component_of_label(crossings_[static_cast<size_t>(i)].e[0]);
            over_comp_[static_cast<size_t>(i)] = component_of_label(crossings_[static_cast<size_t>(i)].e[1]);
        }
    }
};

// ---------------------------------------------------------------------------
// Text format

inline Diagram parse_pd(const std::string& text) {
    std::vector<Crossing> crossings;
    int loops = 0;
    size_t i = 0;
    auto skip_sep = [&]() {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };
    skip_sep();
    require(i < text.size(), "EmptyInput", "no PD tuples in input");
    while (i < text.size()) {
        size_t start = i;
        if (text.compare(i, 2, "X[") == 0) {
            i += 2;
            std::array<long, 4> e{};
            for (int k = 0; k < 4; ++k) {
                size_t j = i;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                    ++j;
                require(j > i, "MalformedTuple",
                        "expected integer in tuple at offset " + std::to_string(i));
                e[static_cast<size_t>(k)] = std::stol(text.substr(i, j - i));
                i = j;
                char want = (k == 3) ? ']' : ',';
                require(i < text.size() && text[i] == want, "MalformedTuple",
                        std::string("expected '") + want + "' in tuple near offset " +
                            std::to_string(start));
                ++i;
            }
            crossings.push_back({e});
        } else if (text.compare(i, 5, "Loop[") == 0) {
            i += 5;
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            require(j > i && j < text.size() && text[j] == ']', "MalformedTuple",
                    "malformed Loop token");
            i = j + 1;
            ++loops;
        } else {
            fail("MalformedTuple", "unrecognized token at offset " + std::to_string(i));
        }
        skip_sep();
    }
    require(!crossings.empty() || loops > 0, "EmptyInput", "no PD tuples in input");
    return Diagram(std::move(crossings), loops);
}

// ---------------------------------------------------------------------------
// Elementary diagram invariants and moves

inline long writhe(const Diagram& d) {
    require(d.n_components() == 1, "MultiComponent", "writhe requires a knot diagram");
    long w = 0;
    for (size_t i = 0; i < d.crossing_count(); ++i)
        w += d.sign(i);
    return w;
}

inline Diagram mirror(const Diagram& d) {
    std::vector<Crossing> out;
    out.reserve(d.crossing_count());
    for (size_t i = 0; i < d.crossing_count(); ++i) {
        const auto& e = d.crossings()[i].e;
        // Swapping over and under re-roots the tuple at the old over-in slot.
        if (d.sign(i) > 0)
            out.push_back({{e[3], e[0], e[1], e[2]}});
        else
            out.push_back({{e[1], e[2], e[3], e[0]}});
    }
    return Diagram(std::move(out), d.n_loops());
}

inline long linking_number(const Diagram& d, int comp_a, int comp_b) {
    require(comp_a >= 0 && comp_a < d.n_components() && comp_b >= 0 && comp_b < d.n_components(),
            "BadComponentIndex", "component index out of range");
    require(comp_a != comp_b, "BadComponentIndex", "linking number needs two distinct components");
    long s = 0;
    for (size_t i = 0; i < d.crossing_count(); ++i) {
        int u = d.under_component(i), o = d.over_component(i);
        if ((u == comp_a && o == comp_b) || (u == comp_b && o == comp_a))
            s += d.sign(i);
    }
    require(s % 2 == 0, "BadOrientation", "odd signed inter-component count");
    return s / 2;
}

inline Diagram connected_sum(const Diagram& d1, const Diagram& d2);

// FNV-1a over the canonical serialization; used for provenance sidecars.
inline std::string diagram_hash(const Diagram& d) {
    const std::string s = d.serialize();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace wdtk
