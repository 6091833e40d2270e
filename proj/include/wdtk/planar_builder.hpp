// Half-edge scaffolding for diagram surgery.
//
// Constructions (connected sum, doubling, unclasping, axis links) are wired
// here as 4-valent graphs with a distinguished over-diagonal per vertex and
// then walked to recover a labeled PD code. Slots 0..3 of a vertex are its
// four arc ends in counterclockwise order; a strand entering at slot s
// leaves at slot s+2.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wdtk/diagram.hpp"
#include "wdtk/errors.hpp"

namespace wdtk {

class PlanarBuilder {
public:
    struct Port {
        int cr = -1;
        int slot = -1;
        bool valid() const { return cr >= 0; }
    };

    // over_diag: 0 means the strand through slots {0,2} is the over-strand,
    // 1 means slots {1,3}.
    int add_crossing(int over_diag, std::string tag = {}) {
        over_diag_.push_back(over_diag);
        tags_.push_back(std::move(tag));
        conn_.push_back({Port{}, Port{}, Port{}, Port{}});
        return static_cast<int>(conn_.size()) - 1;
    }

    void connect(Port a, Port b) {
        attach(a, b);
        attach(b, a);
    }

    void add_loop() { ++loops_; }

    struct Result {
        Diagram diagram;
        // crossing index in `diagram` for each builder vertex
        std::vector<int> crossing_index;
    };

    // Starts: begin a component's walk by leaving the port's crossing
    // through the port's slot.
    Result build(const std::vector<Port>& starts = {}) const {
        const int n = static_cast<int>(conn_.size());
        for (int i = 0; i < n; ++i)
            for (int s = 0; s < 4; ++s)
                require(conn_[static_cast<size_t>(i)][static_cast<size_t>(s)].valid(), "BadOrientation",
                        "builder port left unconnected");

        // incident edge label per (crossing, slot); 0 = unvisited
        std::vector<std::array<long, 4>> label(static_cast<size_t>(n), {0, 0, 0, 0});
        // slot at which the walk entered each crossing, per diagonal {0,2}->0, {1,3}->1
        std::vector<std::array<int, 2>> in_slot(static_cast<size_t>(n), {-1, -1});

        long next_label = 1;
        auto walk_from = [&](int cr, int slot) {
            // leave `cr` through `slot`; stop when the walk reenters the
            // starting arc end
            int cur_cr = cr, cur_slot = slot;
            while (true) {
                Port to = conn_[static_cast<size_t>(cur_cr)][static_cast<size_t>(cur_slot)];
                long lab = next_label++;
                label[static_cast<size_t>(cur_cr)][static_cast<size_t>(cur_slot)] = lab;
                label[static_cast<size_t>(to.cr)][static_cast<size_t>(to.slot)] = lab;
                in_slot[static_cast<size_t>(to.cr)][static_cast<size_t>(to.slot % 2)] = to.slot;
                cur_cr = to.cr;
                cur_slot = (to.slot + 2) % 4;
                if (label[static_cast<size_t>(cur_cr)][static_cast<size_t>(cur_slot)] != 0)
                    break;
            }
        };

        for (const auto& st : starts)
            if (label[static_cast<size_t>(st.cr)][static_cast<size_t>(st.slot)] == 0)
                walk_from(st.cr, st.slot);
        for (int i = 0; i < n; ++i)
            for (int s = 0; s < 4; ++s)
                if (label[static_cast<size_t>(i)][static_cast<size_t>(s)] == 0)
                    walk_from(i, s);

        std::vector<Crossing> tuples;
        tuples.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            int under_diag = 1 - over_diag_[static_cast<size_t>(i)];
            int a = in_slot[static_cast<size_t>(i)][static_cast<size_t>(under_diag)];
            require(a >= 0, "BadOrientation", "walk never entered a crossing's under strand");
            Crossing t{};
            for (int k = 0; k < 4; ++k)
                t.e[static_cast<size_t>(k)] = label[static_cast<size_t>(i)][static_cast<size_t>((a + k) % 4)];
            tuples.push_back(t);
        }

        Diagram dia(tuples, loops_);
        // map builder vertices to canonical crossing order
        std::vector<int> index(static_cast<size_t>(n), -1);
        std::vector<bool> used(dia.crossing_count(), false);
        for (int i = 0; i < n; ++i)
            for (size_t j = 0; j < dia.crossing_count(); ++j)
                if (!used[j] && dia.crossings()[j] == tuples[static_cast<size_t>(i)]) {
                    index[static_cast<size_t>(i)] = static_cast<int>(j);
                    used[j] = true;
                    break;
                }
        return {std::move(dia), std::move(index)};
    }

    const std::string& tag(int cr) const { return tags_[static_cast<size_t>(cr)]; }

    // Import an existing diagram: one vertex per crossing (slots match the
    // tuple rotation, so the over-diagonal is {1,3}), one arc per label.
    // Returns the ports of every label occurrence for later re-wiring.
    struct Imported {
        int first_crossing = 0;
        // ports[label] = the two arc ends carrying that label, tail first
        // (tail = where the edge leaves a crossing).
        std::vector<std::array<Port, 2>> ports;
    };

    Imported import_diagram(const Diagram& d, bool wire_all_edges = true,
                            const std::vector<long>& skip_labels = {}) {
        Imported im;
        im.first_crossing = static_cast<int>(conn_.size());
        const long n_labels = 2 * static_cast<long>(d.crossing_count());
        std::vector<std::array<Port, 2>> occ(static_cast<size_t>(n_labels) + 1);
        std::vector<std::array<bool, 2>> occ_is_tail(static_cast<size_t>(n_labels) + 1, {false, false});
        for (size_t i = 0; i < d.crossing_count(); ++i) {
            int v = add_crossing(1);
            for (int s = 0; s < 4; ++s) {
                long lab = d.crossings()[i].e[static_cast<size_t>(s)];
                bool is_tail = (s == 2) || (s == (d.over_in_slot(i) + 2) % 4);
                int k = occ[static_cast<size_t>(lab)][0].valid() ? 1 : 0;
                occ[static_cast<size_t>(lab)][static_cast<size_t>(k)] = {v, s};
                occ_is_tail[static_cast<size_t>(lab)][static_cast<size_t>(k)] = is_tail;
            }
        }
        im.ports.resize(static_cast<size_t>(n_labels) + 1);
        for (long lab = 1; lab <= n_labels; ++lab) {
            auto p = occ[static_cast<size_t>(lab)];
            if (!occ_is_tail[static_cast<size_t>(lab)][0])
                std::swap(p[0], p[1]);
            im.ports[static_cast<size_t>(lab)] = p;
            bool skip = false;
            for (long s : skip_labels)
                if (s == lab)
                    skip = true;
            if (wire_all_edges && !skip)
                connect(p[0], p[1]);
        }
        return im;
    }

private:
    void attach(Port at, Port to) {
        auto& slot = conn_.at(static_cast<size_t>(at.cr)).at(static_cast<size_t>(at.slot));
        require(!slot.valid(), "BadOrientation", "builder port connected twice");
        slot = to;
    }

    std::vector<std::array<Port, 4>> conn_;
    std::vector<int> over_diag_;
    std::vector<std::string> tags_;
    int loops_ = 0;
};

inline Diagram connected_sum(const Diagram& d1, const Diagram& d2) {
    require(d1.n_components() == 1, "MultiComponent", "connected sum needs knot diagrams");
    require(d2.n_components() == 1, "MultiComponent", "connected sum needs knot diagrams");
    if (d1.crossing_count() == 0)
        return d2;
    if (d2.crossing_count() == 0)
        return d1;
    PlanarBuilder pb;
    // splice at the lowest-labeled edge of each summand
    auto im1 = pb.import_diagram(d1, true, {1});
    auto im2 = pb.import_diagram(d2, true, {1});
    auto t1 = im1.ports[1][0], h1 = im1.ports[1][1];
    auto t2 = im2.ports[1][0], h2 = im2.ports[1][1];
    pb.connect(t1, h2);
    pb.connect(t2, h1);
    return pb.build({{t1.cr, t1.slot}}).diagram;
}

}  // namespace wdtk
