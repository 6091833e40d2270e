// Fox calculus and Alexander polynomials.
//
// The Alexander matrix of a presentation is the Jacobian of Fox derivatives
// pushed through an abelianization G ->> Z = <t>. For a deficiency-one
// presentation the polynomial is the gcd of the maximal minors after
// deleting the column of a generator mapping to t^(+-1); for a Wirtinger
// presentation one relator is redundant, so a single determinant suffices.
//
// Determinants are computed fraction-free (Bareiss) after clearing negative
// t-exponents row by row. Above a size threshold the determinant is instead
// evaluated at integers and interpolated, with every inner determinant still
// running Bareiss elimination over Z; both engines agree and are cross-checked
// in the tests.

#pragma once

#include <cstdlib>
#include <numeric>
#include <vector>

#include "wdtk/laurent.hpp"
#include "wdtk/presentation.hpp"

namespace wdtk {
namespace detail {

using PolyZ = std::vector<Int>;  // dense, constant term first

inline void pz_trim(PolyZ& a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

inline bool pz_zero(const PolyZ& a) { return a.empty(); }

inline PolyZ pz_mul(const PolyZ& a, const PolyZ& b) {
    if (a.empty() || b.empty())
        return {};
    PolyZ r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    pz_trim(r);
    return r;
}

inline PolyZ pz_sub(const PolyZ& a, const PolyZ& b) {
    PolyZ r = a;
    if (r.size() < b.size())
        r.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    pz_trim(r);
    return r;
}

// Exact quotient a / b in Z[t]; Bareiss guarantees exactness.
inline PolyZ pz_exact_div(PolyZ a, const PolyZ& b) {
    pz_trim(a);
    if (a.empty())
        return {};
    require(!b.empty(), "ZeroDivisor", "internal: division by zero polynomial");
    PolyZ q(a.size() - b.size() + 1, Int(0));
    while (a.size() >= b.size()) {
        Int lead = a.back();
        if (lead == 0) {
            a.pop_back();
            continue;
        }
        require(lead % b.back() == 0, "ZeroDivisor", "internal: inexact Bareiss division");
        Int f = lead / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= f * b[i];
        pz_trim(a);
    }
    require(a.empty(), "ZeroDivisor", "internal: inexact Bareiss division");
    return q;
}

// Fraction-free determinant of a square polynomial matrix.
inline PolyZ det_bareiss(std::vector<std::vector<PolyZ>> m) {
    const size_t n = m.size();
    if (n == 0)
        return {Int(1)};
    int sign = 1;
    PolyZ prev = {Int(1)};
    for (size_t k = 0; k + 1 < n; ++k) {
        if (pz_zero(m[k][k])) {
            size_t swap_row = n;
            for (size_t i = k + 1; i < n; ++i)
                if (!pz_zero(m[i][k])) {
                    swap_row = i;
                    break;
                }
            if (swap_row == n)
                return {};  // column is zero from row k down
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                PolyZ num = pz_sub(pz_mul(m[i][j], m[k][k]), pz_mul(m[i][k], m[k][j]));
                m[i][j] = pz_exact_div(std::move(num), prev);
            }
            m[i][k] = {};
        }
        prev = m[k][k];
    }
    PolyZ det = m[n - 1][n - 1];
    if (sign < 0)
        for (auto& c : det)
            c = -c;
    return det;
}

// Fraction-free determinant over Z.
inline Int int_det_bareiss(std::vector<std::vector<Int>> m) {
    const size_t n = m.size();
    if (n == 0)
        return 1;
    int sign = 1;
    Int prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = n;
            for (size_t i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row == n)
                return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign < 0 ? Int(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

inline Int pz_eval(const PolyZ& p, const Int& x) {
    Int acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

// Determinant by evaluation at integers and Newton interpolation. Exact;
// used for large matrices where symbolic elimination is slow.
inline PolyZ det_interp(const std::vector<std::vector<PolyZ>>& m) {
    const size_t n = m.size();
    if (n == 0)
        return {Int(1)};
    size_t deg_bound = 0;
    for (size_t i = 0; i < n; ++i) {
        size_t row_deg = 0;
        for (size_t j = 0; j < n; ++j)
            if (!pz_zero(m[i][j]))
                row_deg = std::max(row_deg, m[i][j].size() - 1);
        deg_bound += row_deg;
    }
    const size_t npts = deg_bound + 1;
    std::vector<Int> xs(npts), ys(npts);
    for (size_t k = 0; k < npts; ++k) {
        // 0, 1, -1, 2, -2, ...
        long v = static_cast<long>((k + 1) / 2);
        xs[k] = (k % 2 == 1) ? Int(v) : Int(-v);
        std::vector<std::vector<Int>> mk(n, std::vector<Int>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                mk[i][j] = pz_eval(m[i][j], xs[k]);
        ys[k] = int_det_bareiss(std::move(mk));
    }
    // Newton divided differences over Q
    std::vector<Rational> coef(npts);
    std::vector<Rational> dd(npts);
    for (size_t k = 0; k < npts; ++k)
        dd[k] = Rational(ys[k]);
    coef[0] = dd[0];
    for (size_t level = 1; level < npts; ++level) {
        for (size_t k = 0; k + level < npts; ++k)
            dd[k] = (dd[k + 1] - dd[k]) / Rational(xs[k + level] - xs[k]);
        coef[level] = dd[0];
    }
    // expand the Newton form into monomial coefficients
    std::vector<Rational> poly = {Rational(0)};
    std::vector<Rational> basis = {Rational(1)};  // prod (x - x_i)
    for (size_t level = 0; level < npts; ++level) {
        if (poly.size() < basis.size())
            poly.resize(basis.size(), Rational(0));
        for (size_t i = 0; i < basis.size(); ++i)
            poly[i] += coef[level] * basis[i];
        if (level + 1 < npts) {
            // basis *= (x - xs[level])
            std::vector<Rational> nb(basis.size() + 1, Rational(0));
            for (size_t i = 0; i < basis.size(); ++i) {
                nb[i + 1] += basis[i];
                nb[i] -= basis[i] * Rational(xs[level]);
            }
            basis = std::move(nb);
        }
    }
    PolyZ out(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) {
        require(boost::multiprecision::denominator(poly[i]) == 1, "ZeroDivisor",
                "internal: interpolation produced a non-integer coefficient");
        out[i] = boost::multiprecision::numerator(poly[i]);
    }
    pz_trim(out);
    return out;
}

inline PolyZ det_auto(const std::vector<std::vector<PolyZ>>& m) {
    return m.size() <= 20 ? det_bareiss(m) : det_interp(m);
}

inline LaurentPoly pz_to_laurent(const PolyZ& p) { return LaurentPoly::from_dense(p); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Fox derivatives

// Row of Fox derivatives of one relator, mapped through phi (exponent of t
// per generator).
inline std::vector<LaurentPoly> fox_row(const Word& relator, const std::vector<long>& phi,
                                        int gen_count) {
    std::vector<LaurentPoly> row(static_cast<size_t>(gen_count));
    long prefix_exp = 0;
    for (int x : relator) {
        int g = std::abs(x) - 1;
        if (x > 0) {
            row[static_cast<size_t>(g)].add_term(prefix_exp, 1);
            prefix_exp += phi[static_cast<size_t>(g)];
        } else {
            prefix_exp -= phi[static_cast<size_t>(g)];
            row[static_cast<size_t>(g)].add_term(prefix_exp, -1);
        }
    }
    return row;
}

inline std::vector<std::vector<LaurentPoly>> fox_matrix(const GroupPresentation& p,
                                                        const std::vector<long>& phi) {
    std::vector<std::vector<LaurentPoly>> m;
    m.reserve(p.relators.size());
    for (const auto& r : p.relators)
        m.push_back(fox_row(r, phi, p.gen_count()));
    return m;
}

namespace detail {

// Clear negative exponents row by row (each shift multiplies the determinant
// by a unit) and drop one column.
inline std::vector<std::vector<PolyZ>> dense_alexander_matrix(
    const std::vector<std::vector<LaurentPoly>>& fox, size_t delete_col) {
    std::vector<std::vector<PolyZ>> out;
    out.reserve(fox.size());
    for (const auto& row : fox) {
        long shift = 0;
        for (size_t j = 0; j < row.size(); ++j)
            if (j != delete_col && !row[j].is_zero())
                shift = std::min(shift, row[j].min_exp());
        std::vector<PolyZ> r;
        r.reserve(row.size() - 1);
        for (size_t j = 0; j < row.size(); ++j) {
            if (j == delete_col)
                continue;
            r.push_back(row[j].shifted(-shift).dense_abs());
        }
        out.push_back(std::move(r));
    }
    return out;
}

inline void check_phi(const GroupPresentation& p, const std::vector<long>& phi) {
    require(phi.size() == static_cast<size_t>(p.gen_count()), "NonUnitAbelianizationImage",
            "abelianization map has wrong arity");
    long g = 0;
    for (long e : phi)
        g = std::gcd(g, std::labs(e));
    require(g == 1, "NonUnitAbelianizationImage",
            "generator images do not generate the infinite cyclic group");
    for (const auto& r : p.relators) {
        long s = 0;
        for (int x : r)
            s += (x > 0 ? 1 : -1) * phi[static_cast<size_t>(std::abs(x) - 1)];
        require(s == 0, "NonUnitAbelianizationImage",
                "abelianization map does not vanish on a relator");
    }
}

}  // namespace detail

// First elementary ideal generator: gcd of the maximal minors of the
// Alexander matrix with the column of a t^(+-1)-generator deleted,
// normalized up to units. H_1 of the presentation must be infinite cyclic.
inline LaurentPoly alexander_from_presentation(const GroupPresentation& p,
                                               const std::vector<long>& phi) {
    p.validate();
    if (p.gen_count() == 0)
        return LaurentPoly::one();
    {
        Abelianization ab = abelianization(p);
        require(ab.free_rank == 1 && ab.torsion.empty(), "NotInfiniteCyclicH1",
                "H1 of the presentation is not infinite cyclic");
    }
    detail::check_phi(p, phi);
    size_t delete_col = SIZE_MAX;
    for (size_t j = 0; j < phi.size(); ++j)
        if (std::labs(phi[j]) == 1) {
            delete_col = j;
            break;
        }
    require(delete_col != SIZE_MAX, "NonUnitAbelianizationImage",
            "no generator maps to t^(+-1)");

    const size_t n = static_cast<size_t>(p.gen_count());
    const size_t m = n - 1;
    if (m == 0)
        return LaurentPoly::one();
    const size_t r = p.relators.size();
    if (r < m)
        return LaurentPoly::zero();

    auto dense = detail::dense_alexander_matrix(fox_matrix(p, phi), delete_col);

    LaurentPoly g = LaurentPoly::zero();
    // enumerate row subsets of size m in lexicographic order
    std::vector<size_t> pick(m);
    for (size_t i = 0; i < m; ++i)
        pick[i] = i;
    while (true) {
        std::vector<std::vector<detail::PolyZ>> sub;
        sub.reserve(m);
        for (size_t i : pick)
            sub.push_back(dense[i]);
        LaurentPoly minor = detail::pz_to_laurent(detail::det_auto(sub));
        g = poly_gcd(g, minor);
        if (!g.is_zero() && g.is_unit())
            break;  // the gcd cannot shrink below a unit
        // next combination
        long k = static_cast<long>(m) - 1;
        while (k >= 0 && pick[static_cast<size_t>(k)] == static_cast<size_t>(k) + (r - m))
            --k;
        if (k < 0)
            break;
        ++pick[static_cast<size_t>(k)];
        for (size_t j = static_cast<size_t>(k) + 1; j < m; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    return g.normalized();
}

inline LaurentPoly alexander_from_presentation(const GroupPresentation& p) {
    return alexander_from_presentation(p, abelianization_functional(p));
}

// Diagram route: Wirtinger presentation, drop one redundant relator, delete
// the meridian column, one fraction-free determinant.
inline LaurentPoly alexander_from_diagram(const Diagram& d) {
    require(d.n_components() == 1, "MultiComponent",
            "Alexander polynomial route requires a knot diagram");
    if (d.crossing_count() == 0)
        return LaurentPoly::one();
    GroupPresentation p = wirtinger(d);
    std::vector<long> phi(static_cast<size_t>(p.gen_count()), 1);
    p.relators.pop_back();  // any single Wirtinger relator is redundant
    auto dense = detail::dense_alexander_matrix(fox_matrix(p, phi), 0);
    LaurentPoly delta = detail::pz_to_laurent(detail::det_auto(dense)).normalized();
    Int aug = delta.evaluate(1);
    require(aug == 1 || aug == -1, "BadOrientation",
            "internal: Alexander augmentation is not a unit; diagram is not a knot");
    return delta;
}

}  // namespace wdtk
