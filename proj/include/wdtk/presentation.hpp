// Finite group presentations with peripheral words.
//
// Words are sequences of signed 1-based generator indices. Wirtinger
// presentations attach one peripheral system per link component: meridian =
// the generator of the component's first arc, longitude = the product of
// overpassing arc generators (signed by crossing sign) along the component,
// corrected by meridian^-w to the 0-framed convention, w being the
// component's self-writhe.

#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wdtk/bigint.hpp"
#include "wdtk/diagram.hpp"
#include "wdtk/errors.hpp"

namespace wdtk {

using Word = std::vector<int>;

inline Word inverse_word(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        r.push_back(-*it);
    return r;
}

inline Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

inline Word free_reduce(const Word& w) {
    Word r;
    for (int x : w) {
        if (!r.empty() && r.back() == -x)
            r.pop_back();
        else
            r.push_back(x);
    }
    return r;
}

inline Word cyclic_reduce(Word w) {
    w = free_reduce(w);
    while (w.size() >= 2 && w.front() == -w.back()) {
        w.erase(w.begin());
        w.pop_back();
        w = free_reduce(w);
    }
    return w;
}

struct PeripheralSystem {
    Word meridian;
    Word longitude;
};

struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;
    std::vector<PeripheralSystem> peripheral;

    int gen_count() const { return static_cast<int>(generators.size()); }

    void check_word(const Word& w) const {
        for (int x : w)
            require(x != 0 && std::abs(x) <= gen_count(), "UnknownWordSymbol",
                    "word references generator index " + std::to_string(x));
    }

    void validate() const {
        for (const auto& r : relators)
            check_word(r);
        for (const auto& p : peripheral) {
            check_word(p.meridian);
            check_word(p.longitude);
        }
    }

    // <a,b | a b a^-1 b^-1> style printer.
    std::string str() const {
        std::ostringstream os;
        os << "⟨";
        for (int i = 0; i < gen_count(); ++i)
            os << (i ? "," : "") << generators[static_cast<size_t>(i)];
        os << " | ";
        for (size_t r = 0; r < relators.size(); ++r) {
            if (r)
                os << ", ";
            os << word_str(relators[r]);
        }
        os << "⟩";
        return os.str();
    }

    std::string word_str(const Word& w) const {
        if (w.empty())
            return "1";
        std::ostringstream os;
        for (size_t i = 0; i < w.size(); ++i) {
            if (i)
                os << " ";
            os << generators[static_cast<size_t>(std::abs(w[i]) - 1)];
            if (w[i] < 0)
                os << "^-1";
        }
        return os.str();
    }
};

// ---------------------------------------------------------------------------
// Wirtinger presentations

namespace detail {

// Arc id per edge label: arcs break after each underpass.
inline std::vector<int> arc_of_edge(const Diagram& d, int* arc_count) {
    const long n = 2 * static_cast<long>(d.crossing_count());
    // ends_under[x] = true when edge x is the under-in edge of some crossing
    std::vector<bool> ends_under(static_cast<size_t>(n) + 1, false);
    for (size_t i = 0; i < d.crossing_count(); ++i)
        ends_under[static_cast<size_t>(d.crossings()[i].e[0])] = true;

    std::vector<int> arc(static_cast<size_t>(n) + 1, -1);
    int next_arc = 0;
    for (const auto& [lo, hi] : d.component_ranges()) {
        // components with no underpass form a single closed arc
        long first_break = -1;
        for (long x = lo; x <= hi; ++x)
            if (ends_under[static_cast<size_t>(x)]) {
                first_break = x;
                break;
            }
        if (first_break < 0) {
            for (long x = lo; x <= hi; ++x)
                arc[static_cast<size_t>(x)] = next_arc;
            ++next_arc;
            continue;
        }
        // start a fresh arc right after the first underpass and walk around
        long len = hi - lo + 1;
        long x = first_break == hi ? lo : first_break + 1;
        int cur = next_arc++;
        for (long k = 0; k < len; ++k) {
            arc[static_cast<size_t>(x)] = cur;
            if (ends_under[static_cast<size_t>(x)] && k + 1 < len)
                cur = next_arc++;
            x = x == hi ? lo : x + 1;
        }
    }
    *arc_count = next_arc;
    return arc;
}

}  // namespace detail

// Wirtinger presentation of a link diagram: one generator per arc, one
// conjugation relator per crossing, one peripheral system per component
// (loop components contribute a free generator with empty longitude).
inline GroupPresentation wirtinger(const Diagram& d) {
    GroupPresentation p;
    int arc_count = 0;
    std::vector<int> arc = detail::arc_of_edge(d, &arc_count);

    for (int i = 0; i < arc_count + d.n_loops(); ++i)
        p.generators.push_back("x" + std::to_string(i + 1));

    for (size_t i = 0; i < d.crossing_count(); ++i) {
        const auto& e = d.crossings()[i].e;
        int a_in = arc[static_cast<size_t>(e[0])] + 1;
        int a_out = arc[static_cast<size_t>(e[2])] + 1;
        int o = arc[static_cast<size_t>(e[1])] + 1;
        // positive: out = o in o^-1 ; negative: out = o^-1 in o
        Word r;
        if (d.sign(i) > 0)
            r = {o, a_in, -o, -a_out};
        else
            r = {-o, a_in, o, -a_out};
        p.relators.push_back(r);
    }

    // peripheral systems, one per crossing-bearing component
    for (size_t ci = 0; ci < d.component_ranges().size(); ++ci) {
        const auto& [lo, hi] = d.component_ranges()[ci];
        PeripheralSystem ps;
        ps.meridian = {arc[static_cast<size_t>(lo)] + 1};
        Word lng;
        long self_writhe = 0;
        for (long x = lo; x <= hi; ++x) {
            // find the crossing where edge x goes under
            for (size_t i = 0; i < d.crossing_count(); ++i) {
                if (d.crossings()[i].e[0] != x)
                    continue;
                int o = arc[static_cast<size_t>(d.crossings()[i].e[1])] + 1;
                lng.push_back(d.sign(i) > 0 ? o : -o);
                if (d.over_component(i) == static_cast<int>(ci))
                    self_writhe += d.sign(i);
            }
        }
        for (long k = 0; k < std::labs(self_writhe); ++k)
            lng.push_back(self_writhe > 0 ? -ps.meridian[0] : ps.meridian[0]);
        ps.longitude = free_reduce(lng);
        p.peripheral.push_back(ps);
    }
    for (int i = 0; i < d.n_loops(); ++i) {
        PeripheralSystem ps;
        ps.meridian = {arc_count + i + 1};
        ps.longitude = {};
        p.peripheral.push_back(ps);
    }
    return p;
}

// ---------------------------------------------------------------------------
// Abelianization via Smith normal form

struct Abelianization {
    long free_rank = 0;
    std::vector<Int> torsion;  // prime-power decomposition, ascending

    friend bool operator==(const Abelianization&, const Abelianization&) = default;
};

namespace detail {

// Smith normal form of M (n x r), returning the diagonal and a unimodular P
// with P*M*Q = D. Only P is needed (to read off the free quotient), so Q is
// not accumulated.
inline void smith_form(std::vector<std::vector<Int>> m, std::vector<Int>* diag,
                       std::vector<std::vector<Int>>* p_out) {
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    std::vector<std::vector<Int>> P(rows, std::vector<Int>(rows, 0));
    for (size_t i = 0; i < rows; ++i)
        P[i][i] = 1;

    auto swap_rows = [&](size_t i, size_t j) {
        std::swap(m[i], m[j]);
        std::swap(P[i], P[j]);
    };
    auto add_row = [&](size_t dst, size_t src, const Int& f) {
        for (size_t k = 0; k < cols; ++k)
            m[dst][k] += f * m[src][k];
        for (size_t k = 0; k < rows; ++k)
            P[dst][k] += f * P[src][k];
    };
    auto negate_row = [&](size_t i) {
        for (auto& x : m[i])
            x = -x;
        for (auto& x : P[i])
            x = -x;
    };

    size_t t = 0;
    diag->clear();
    while (t < rows && t < cols) {
        // find a pivot in the remaining block
        size_t pi = rows, pj = cols;
        for (size_t i = t; i < rows && pi == rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (m[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == rows)
            break;
        if (pi != t)
            swap_rows(t, pi);
        if (pj != t)
            for (auto& row : m)
                std::swap(row[t], row[pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < rows; ++i)
                if (m[i][t] != 0) {
                    Int q = m[i][t] / m[t][t];
                    add_row(i, t, -q);
                    if (m[i][t] != 0) {
                        swap_rows(t, i);
                        clean = false;
                    }
                }
            for (size_t j = t + 1; j < cols; ++j)
                if (m[t][j] != 0) {
                    Int q = m[t][j] / m[t][t];
                    for (size_t i = 0; i < rows; ++i)
                        m[i][j] -= q * m[i][t];
                    if (m[t][j] != 0) {
                        for (auto& row : m)
                            std::swap(row[t], row[j]);
                        clean = false;
                    }
                }
        }
        if (m[t][t] < 0)
            negate_row(t);
        diag->push_back(m[t][t]);
        ++t;
    }
    // enforce divisibility d_i | d_{i+1} on the diagonal (gcd/lcm shuffle;
    // P is no longer exact for the torsion part after this, but the free
    // part -- zero diagonal entries -- is untouched, which is all the
    // abelianization functional needs)
    for (size_t i = 0; i + 1 < diag->size(); ++i)
        for (size_t j = i + 1; j < diag->size(); ++j) {
            Int a = (*diag)[i], b = (*diag)[j];
            if (a == 0 || b == 0)
                continue;
            Int g = gcd(a, b);
            (*diag)[i] = g;
            (*diag)[j] = a / g * b;
        }
    if (p_out)
        *p_out = std::move(P);
}

inline std::vector<Int> prime_power_split(const Int& d) {
    std::vector<Int> out;
    Int rest = d;
    for (Int p = 2; p * p <= rest && p < 1000000; ++p) {
        if (rest % p == 0) {
            Int q = 1;
            while (rest % p == 0) {
                q *= p;
                rest /= p;
            }
            out.push_back(q);
        }
    }
    if (rest > 1)
        out.push_back(rest);
    return out;
}

inline std::vector<std::vector<Int>> exponent_matrix_transposed(const GroupPresentation& p) {
    // n x r: column j = exponent vector of relator j
    std::vector<std::vector<Int>> m(static_cast<size_t>(p.gen_count()),
                                    std::vector<Int>(p.relators.size(), 0));
    for (size_t j = 0; j < p.relators.size(); ++j)
        for (int x : p.relators[j])
            m[static_cast<size_t>(std::abs(x) - 1)][j] += (x > 0 ? 1 : -1);
    return m;
}

}  // namespace detail

inline Abelianization abelianization(const GroupPresentation& p) {
    p.validate();
    Abelianization ab;
    if (p.gen_count() == 0)
        return ab;
    std::vector<Int> diag;
    detail::smith_form(detail::exponent_matrix_transposed(p), &diag, nullptr);
    long nonzero = 0;
    for (const auto& d : diag)
        if (d != 0)
            ++nonzero;
    ab.free_rank = p.gen_count() - nonzero;
    for (const auto& d : diag)
        if (d > 1)
            for (const auto& q : detail::prime_power_split(d))
                ab.torsion.push_back(q);
    std::sort(ab.torsion.begin(), ab.torsion.end());
    return ab;
}

// The exponent functional G -> Z = H_1 for presentations with H_1
// isomorphic to Z. Throws NotInfiniteCyclicH1 otherwise.
inline std::vector<long> abelianization_functional(const GroupPresentation& p) {
    p.validate();
    require(p.gen_count() > 0, "NotInfiniteCyclicH1", "presentation has no generators");
    std::vector<Int> diag;
    std::vector<std::vector<Int>> P;
    detail::smith_form(detail::exponent_matrix_transposed(p), &diag, &P);
    std::vector<size_t> free_rows;
    for (size_t i = 0; i < static_cast<size_t>(p.gen_count()); ++i)
        if (i >= diag.size() || diag[i] == 0)
            free_rows.push_back(i);
    require(free_rows.size() == 1, "NotInfiniteCyclicH1",
            "H1 has free rank " + std::to_string(free_rows.size()));
    for (const auto& d : diag)
        require(d <= 1, "NotInfiniteCyclicH1", "H1 has torsion");
    std::vector<long> phi(static_cast<size_t>(p.gen_count()));
    bool any_pos = false, any_neg = false;
    for (size_t j = 0; j < phi.size(); ++j) {
        phi[j] = static_cast<long>(P[free_rows[0]][j]);
        if (phi[j] > 0)
            any_pos = true;
        if (phi[j] < 0)
            any_neg = true;
    }
    // orient so that meridional generators map to t^(+1) when possible
    if (any_neg && !any_pos)
        for (auto& x : phi)
            x = -x;
    return phi;
}

// ---------------------------------------------------------------------------
// Tietze simplification

struct TietzeResult {
    GroupPresentation presentation;
    long steps_used = 0;
    bool budget_exhausted = false;
};

namespace detail {

inline Word substitute(const Word& w, int gen, const Word& replacement) {
    Word out;
    for (int x : w) {
        if (x == gen)
            out.insert(out.end(), replacement.begin(), replacement.end());
        else if (x == -gen) {
            Word inv = inverse_word(replacement);
            out.insert(out.end(), inv.begin(), inv.end());
        } else {
            out.push_back(x);
        }
    }
    return free_reduce(out);
}

inline Word canonical_cyclic(const Word& w) {
    if (w.empty())
        return w;
    auto min_rot = [](const Word& v) {
        Word best = v;
        Word cur = v;
        for (size_t i = 1; i < v.size(); ++i) {
            std::rotate(cur.begin(), cur.begin() + 1, cur.end());
            if (cur < best)
                best = cur;
        }
        return best;
    };
    Word a = min_rot(w);
    Word b = min_rot(inverse_word(w));
    return std::min(a, b);
}

}  // namespace detail

// Greedy, deterministic generator elimination: repeatedly picks the lowest
// indexed generator that occurs exactly once in some relator, solves that
// relator for it and substitutes everywhere (peripheral words included).
// Upper estimates only; never increases the generator count.
inline TietzeResult tietze_simplify(GroupPresentation p, long budget = 100000) {
    p.validate();
    TietzeResult res;
    auto reduce_all = [&]() {
        for (auto& r : p.relators)
            r = cyclic_reduce(r);
        // drop empty relators, dedupe up to rotation and inversion
        std::vector<Word> kept;
        std::set<Word> seen;
        for (auto& r : p.relators) {
            if (r.empty())
                continue;
            Word key = detail::canonical_cyclic(r);
            if (seen.insert(key).second)
                kept.push_back(r);
        }
        p.relators = std::move(kept);
    };
    reduce_all();

    while (res.steps_used < budget) {
        // find the lowest eligible generator and its shortest defining relator
        int best_gen = 0;
        size_t best_rel = 0;
        for (int g = 1; g <= p.gen_count() && best_gen == 0; ++g) {
            size_t candidate = SIZE_MAX;
            for (size_t ri = 0; ri < p.relators.size(); ++ri) {
                int occurrences = 0;
                for (int x : p.relators[ri])
                    if (std::abs(x) == g)
                        ++occurrences;
                if (occurrences == 1 &&
                    (candidate == SIZE_MAX ||
                     p.relators[ri].size() < p.relators[candidate].size()))
                    candidate = ri;
            }
            if (candidate != SIZE_MAX) {
                best_gen = g;
                best_rel = candidate;
            }
        }
        if (best_gen == 0)
            break;
        ++res.steps_used;

        // rotate the relator to start with +-g, then g = solved word
        Word r = p.relators[best_rel];
        size_t pos = 0;
        while (std::abs(r[pos]) != best_gen)
            ++pos;
        std::rotate(r.begin(), r.begin() + static_cast<long>(pos), r.end());
        Word rest(r.begin() + 1, r.end());
        // r = g^e * rest = 1 -> g^e = rest^-1
        Word solved = r[0] > 0 ? inverse_word(rest) : rest;

        p.relators.erase(p.relators.begin() + static_cast<long>(best_rel));
        for (auto& rel : p.relators)
            rel = detail::substitute(rel, best_gen, solved);
        for (auto& ps : p.peripheral) {
            ps.meridian = detail::substitute(ps.meridian, best_gen, solved);
            ps.longitude = detail::substitute(ps.longitude, best_gen, solved);
        }

        // remove the generator, shifting higher indices down
        p.generators.erase(p.generators.begin() + (best_gen - 1));
        auto shift = [&](Word& w) {
            for (auto& x : w) {
                int a = std::abs(x);
                require(a != best_gen, "UnknownWordSymbol", "eliminated generator survived");
                if (a > best_gen)
                    x = x > 0 ? x - 1 : x + 1;
            }
        };
        for (auto& rel : p.relators)
            shift(rel);
        for (auto& ps : p.peripheral) {
            shift(ps.meridian);
            shift(ps.longitude);
        }
        reduce_all();
    }
    res.budget_exhausted = res.steps_used >= budget;
    res.presentation = std::move(p);
    return res;
}

// ---------------------------------------------------------------------------
// Amalgamated products

// Disjoint union of two presentations plus one relator u v^-1 per gluing
// pair (u a word of p1, v a word of p2). Generators of p2 are shifted past
// those of p1; peripheral systems are carried over in order (p1's first).
inline GroupPresentation amalgamated_product(
    const GroupPresentation& p1, const GroupPresentation& p2,
    const std::vector<std::pair<Word, Word>>& gluing) {
    p1.validate();
    p2.validate();
    for (const auto& [u, v] : gluing) {
        p1.check_word(u);
        p2.check_word(v);
    }
    GroupPresentation out;
    out.generators = p1.generators;
    std::set<std::string> names(out.generators.begin(), out.generators.end());
    int offset = p1.gen_count();
    for (const auto& g : p2.generators) {
        std::string name = g;
        while (names.count(name))
            name += "'";
        names.insert(name);
        out.generators.push_back(name);
    }
    auto shift = [&](const Word& w) {
        Word r = w;
        for (auto& x : r)
            x = x > 0 ? x + offset : x - offset;
        return r;
    };
    out.relators = p1.relators;
    for (const auto& r : p2.relators)
        out.relators.push_back(shift(r));
    for (const auto& [u, v] : gluing)
        out.relators.push_back(free_reduce(concat(u, inverse_word(shift(v)))));
    out.peripheral = p1.peripheral;
    for (const auto& ps : p2.peripheral)
        out.peripheral.push_back({shift(ps.meridian), shift(ps.longitude)});
    return out;
}

}  // namespace wdtk
