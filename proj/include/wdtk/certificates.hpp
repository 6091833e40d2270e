// Rank and tunnel-number certificates for iterated Whitehead doubles.
//
// The JSJ decomposition of the complement of WD^n(K) contains one
// hyperbolic Whitehead-link-with-twists piece per doubling level; Weidmann's
// theorem turns the hyperbolic piece count h into the rank bound
// r >= h + 1. Hyperbolicity and tunnel numbers of companions are declared
// metadata, never computed: opaque companions count zero hyperbolic pieces,
// keeping every certificate sound if not sharp.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wdtk/bigint.hpp"
#include "wdtk/errors.hpp"

namespace wdtk {

struct CompanionMeta {
    std::string name;
    std::optional<bool> is_hyperbolic;
    std::optional<long> jsj_hyperbolic_pieces;
    std::optional<long> tunnel_number;

    // hyperbolic JSJ pieces of the companion exterior, counted conservatively
    long hyperbolic_pieces() const {
        if (jsj_hyperbolic_pieces)
            return *jsj_hyperbolic_pieces;
        if (is_hyperbolic && *is_hyperbolic)
            return 1;
        return 0;
    }

    void validate() const {
        if (tunnel_number)
            require(*tunnel_number >= 0, "InconsistentMeta", "negative tunnel number");
        if (jsj_hyperbolic_pieces)
            require(*jsj_hyperbolic_pieces >= 0, "InconsistentMeta",
                    "negative hyperbolic piece count");
        if (tunnel_number && *tunnel_number == 0) {
            // tunnel number 0 is the unknot; it is neither hyperbolic nor
            // does its exterior carry hyperbolic pieces
            require(!(is_hyperbolic && *is_hyperbolic), "InconsistentMeta",
                    "tunnel number 0 contradicts hyperbolicity");
            require(hyperbolic_pieces() == 0, "InconsistentMeta",
                    "tunnel number 0 contradicts hyperbolic JSJ pieces");
        }
        if (is_hyperbolic && *is_hyperbolic && jsj_hyperbolic_pieces)
            require(*jsj_hyperbolic_pieces >= 1, "InconsistentMeta",
                    "hyperbolic knot exterior must count one hyperbolic piece");
    }
};

struct LayerStructure {
    enum class PieceKind { whitehead_complement, companion_exterior, seifert };
    struct Piece {
        PieceKind kind;
        long hyperbolic_count;
        std::string label;
    };
    std::vector<Piece> layers;  // innermost first
    long n = 0;

    long hyperbolic_total() const {
        long h = 0;
        for (const auto& p : layers)
            h += p.hyperbolic_count;
        return h;
    }
};

// Symbolic JSJ bookkeeping: n Whitehead-complement layers plus the
// companion exterior with its declared hyperbolic count.
inline LayerStructure layer_structure(const CompanionMeta& meta, long n) {
    require(n >= 1, "BadN", "layer structure needs n >= 1");
    meta.validate();
    LayerStructure ls;
    ls.n = n;
    for (long i = 0; i < n; ++i)
        ls.layers.push_back({LayerStructure::PieceKind::whitehead_complement, 1,
                             "whitehead-complement layer " + std::to_string(i + 1)});
    long h = meta.hyperbolic_pieces();
    std::string label = "companion exterior (";
    if (meta.jsj_hyperbolic_pieces)
        label += std::to_string(h) + " declared hyperbolic JSJ pieces)";
    else if (meta.is_hyperbolic && *meta.is_hyperbolic)
        label += "hyperbolic)";
    else if (meta.is_hyperbolic && !*meta.is_hyperbolic)
        label += "non-hyperbolic)";
    else
        label += "opaque, counted 0)";
    ls.layers.push_back({LayerStructure::PieceKind::companion_exterior, h, label});
    return ls;
}

struct TunnelBounds {
    long lower = 0;
    std::optional<long> upper;
};

struct RankCertificate {
    long lower = 0;
    std::optional<long> upper;
    std::optional<long> exact;
    TunnelBounds tunnel;
    std::vector<std::string> provenance;

    void check() const {
        require(!upper || lower <= *upper, "InconsistentMeta", "certificate lower > upper");
        if (exact) {
            require(lower <= *exact, "InconsistentMeta", "certificate lower > exact");
            require(!upper || *exact <= *upper, "InconsistentMeta", "certificate exact > upper");
        }
        require(!tunnel.upper || tunnel.lower <= *tunnel.upper, "InconsistentMeta",
                "tunnel lower > upper");
    }
};

inline RankCertificate rank_certificate(const LayerStructure& ls, const CompanionMeta& meta) {
    meta.validate();
    RankCertificate c;
    const long n = ls.n;
    const long h = ls.hyperbolic_total();
    c.lower = h + 1;
    c.provenance.push_back("rank lower bound " + std::to_string(c.lower) + " = " +
                           std::to_string(h) +
                           " hyperbolic JSJ pieces + 1 [Weidmann 2002, Thm. 5]");
    c.tunnel.lower = n;
    c.provenance.push_back("tunnel number >= n = " + std::to_string(n) +
                           " from r <= t + 1 applied to the doubled knot");
    if (meta.tunnel_number) {
        c.upper = n + 1 + *meta.tunnel_number;
        c.tunnel.upper = *meta.tunnel_number + n + 1;
        c.provenance.push_back("rank upper bound n+1+t(K) = " + std::to_string(*c.upper) +
                               " via t(WD(K')) <= t(K')+1 iterated");
    }
    if (meta.is_hyperbolic && *meta.is_hyperbolic && meta.tunnel_number &&
        *meta.tunnel_number == 1) {
        c.exact = n + 2;
        c.lower = n + 2;
        c.provenance.push_back(
            "hyperbolic tunnel-one companion: Heegaard genus = rank = n+2 (the companion "
            "exterior adds one hyperbolic piece and the tunnel bound meets it)");
    }
    c.check();
    return c;
}

// Certificate for the K_l family: r(K_l) >= l + 1, from l hyperbolic layer
// pieces in the JSJ of the K_l complement plus Weidmann's bound.
inline RankCertificate kl_bound(long l) {
    require(l >= 1, "BadL", "K_l bound needs l >= 1");
    RankCertificate c;
    c.lower = l + 1;
    c.tunnel.lower = l;
    c.provenance.push_back("r(K_" + std::to_string(l) + ") >= " + std::to_string(l + 1) + " = " +
                           std::to_string(l) +
                           " hyperbolic layer pieces + 1 [Weidmann 2002, Thm. 5]");
    c.check();
    return c;
}

struct RatioRow {
    long n = 0;
    long lower = 0;
    std::optional<long> upper;
    Rational lower_ratio;              // lower / (n+1)
    std::optional<Rational> upper_ratio;
};

// Convergence table for r(WD^n(K)) / (n+1); the bracket width is
// t(K)/(n+1) when the tunnel number is declared.
inline std::vector<RatioRow> ratio_table(const CompanionMeta& meta, long n_max) {
    meta.validate();
    require(meta.tunnel_number.has_value(), "InconsistentMeta",
            "ratio table needs a declared tunnel number");
    require(n_max >= 0, "BadN", "n_max must be >= 0");
    std::vector<RatioRow> rows;
    for (long n = 0; n <= n_max; ++n) {
        RatioRow row;
        row.n = n;
        if (n == 0) {
            row.lower = 1;  // WD^0(K) = K; trivial bound
            row.upper = *meta.tunnel_number + 1;
        } else {
            RankCertificate c = rank_certificate(layer_structure(meta, n), meta);
            row.lower = c.lower;
            row.upper = c.upper;
        }
        row.lower_ratio = Rational(row.lower, n + 1);
        if (row.upper)
            row.upper_ratio = Rational(*row.upper, n + 1);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace wdtk
