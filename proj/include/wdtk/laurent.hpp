// Integer Laurent polynomials in one variable t.
//
// This is the coefficient ring for everything Alexander-polynomial shaped.
// Values are defined up to units +-t^k; normalized form shifts the minimum
// exponent to 0 and makes the leading coefficient positive, and all equality
// used in tests is equality of normalized forms.

#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "wdtk/bigint.hpp"
#include "wdtk/errors.hpp"

namespace wdtk {

class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return monomial(1, 0); }
    static LaurentPoly t() { return monomial(1, 1); }

    static LaurentPoly monomial(Int coef, long exp) {
        LaurentPoly p;
        if (coef != 0)
            p.coef_[exp] = std::move(coef);
        return p;
    }

    bool is_zero() const { return coef_.empty(); }

    // Units of Z[t, t^-1] are exactly +-t^k.
    bool is_unit() const {
        return coef_.size() == 1 && abs(coef_.begin()->second) == 1;
    }

    Int coeff(long exp) const {
        auto it = coef_.find(exp);
        return it == coef_.end() ? Int(0) : it->second;
    }

    void add_term(long exp, const Int& c) {
        if (c == 0)
            return;
        Int& slot = coef_[exp];
        slot += c;
        if (slot == 0)
            coef_.erase(exp);
    }

    long min_exp() const { return is_zero() ? 0 : coef_.begin()->first; }
    long max_exp() const { return is_zero() ? 0 : coef_.rbegin()->first; }
    long span() const { return is_zero() ? 0 : max_exp() - min_exp(); }

    const std::map<long, Int>& terms() const { return coef_; }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.coef_)
            r.add_term(e, c);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.coef_)
            r.add_term(e, -c);
        return r;
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : coef_)
            r.coef_[e] = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.coef_)
            for (const auto& [eb, cb] : b.coef_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coef_ == b.coef_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
        return !(a == b);
    }

    LaurentPoly shifted(long k) const {
        LaurentPoly r;
        for (const auto& [e, c] : coef_)
            r.coef_[e + k] = c;
        return r;
    }

    // Normal form up to units: min exponent 0, leading coefficient positive.
    LaurentPoly normalized() const {
        if (is_zero())
            return *this;
        LaurentPoly r = shifted(-min_exp());
        if (r.coef_.rbegin()->second < 0)
            r = -r;
        return r;
    }

    Int content() const {
        Int g = 0;
        for (const auto& [e, c] : coef_)
            g = gcd(g, c);
        return g;
    }

    // Dense coefficient vector of the normalized representative, degree 0..span.
    std::vector<Int> dense() const {
        std::vector<Int> v(static_cast<size_t>(span()) + 1, Int(0));
        long lo = min_exp();
        for (const auto& [e, c] : coef_)
            v[static_cast<size_t>(e - lo)] = c;
        return v;
    }

    // Dense coefficients with absolute exponents 0..max_exp; requires that
    // no negative exponents are present.
    std::vector<Int> dense_abs() const {
        if (is_zero())
            return {};
        require(min_exp() >= 0, "ZeroDivisor", "internal: negative exponent in dense_abs");
        std::vector<Int> v(static_cast<size_t>(max_exp()) + 1, Int(0));
        for (const auto& [e, c] : coef_)
            v[static_cast<size_t>(e)] = c;
        return v;
    }

    static LaurentPoly from_dense(const std::vector<Int>& v, long lo = 0) {
        LaurentPoly p;
        for (size_t i = 0; i < v.size(); ++i)
            p.add_term(lo + static_cast<long>(i), v[i]);
        return p;
    }

    Int evaluate(const Int& x) const {
        // Horner on the normalized representative; the unit t^min_exp is
        // dropped, which is harmless for the +-1 augmentation checks this
        // feeds.
        std::vector<Int> v = dense();
        Int acc = 0;
        for (auto it = v.rbegin(); it != v.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    // Rendered with descending exponents, e.g. "5t^2 - 9t + 5".
    std::string str() const {
        if (is_zero())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) {
            Int c = it->second;
            if (first) {
                if (c < 0)
                    os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            Int a = abs(c);
            long e = it->first;
            if (a != 1 || e == 0)
                os << a.str();
            if (e != 0) {
                os << "t";
                if (e != 1)
                    os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }

private:
    std::map<long, Int> coef_;
};

inline bool eq_up_to_units(const LaurentPoly& a, const LaurentPoly& b) {
    return a.normalized() == b.normalized();
}

// tau t^2 + (1 - 2 tau) t + tau, the Alexander polynomial of the tau-twist
// knot, returned in normal form. Degenerates to 1 at tau = 0.
inline LaurentPoly twist_quadratic(const Int& tau) {
    LaurentPoly p;
    p.add_term(2, tau);
    p.add_term(1, 1 - 2 * tau);
    p.add_term(0, tau);
    return p.normalized();
}

namespace detail {

// Exact division helpers on dense integer polynomial vectors (lowest degree
// first). Used by divisibility tests and gcds; determinant code has its own
// copy-free routines.

inline void trim(std::vector<Int>& v) {
    while (!v.empty() && v.back() == 0)
        v.pop_back();
}

// Divide a by b over Q; returns true and the quotient if remainder is zero.
inline bool divide_exact_rational(const std::vector<Int>& a, const std::vector<Int>& b,
                                  std::vector<Rational>* quotient_out = nullptr) {
    if (b.empty())
        return false;
    std::vector<Rational> rem(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        rem[i] = a[i];
    const size_t db = b.size() - 1;
    std::vector<Rational> q;
    if (a.size() >= b.size())
        q.assign(a.size() - b.size() + 1, Rational(0));
    while (rem.size() >= b.size()) {
        Rational lead = rem.back();
        if (lead == 0) {
            rem.pop_back();
            continue;
        }
        Rational f = lead / Rational(b[db]);
        size_t shift = rem.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i)
            rem[shift + i] -= f * Rational(b[i]);
        rem.pop_back();
    }
    for (const auto& r : rem)
        if (r != 0)
            return false;
    if (quotient_out)
        *quotient_out = std::move(q);
    return true;
}

inline std::vector<Int> primitive_part(std::vector<Int> v, Int* content_out = nullptr) {
    trim(v);
    Int g = 0;
    for (const auto& c : v)
        g = gcd(g, c);
    if (content_out)
        *content_out = g;
    if (g > 1)
        for (auto& c : v)
            c /= g;
    return v;
}

}  // namespace detail

// True iff p divides q in Z[t, t^-1]. By Gauss's lemma this splits into
// divisibility of contents and exact division of primitive parts over Q.
inline bool divides(const LaurentPoly& p, const LaurentPoly& q) {
    require(!p.is_zero(), "ZeroDivisor", "division by the zero polynomial");
    if (q.is_zero())
        return true;
    if (p.is_unit())
        return true;
    Int cp, cq;
    std::vector<Int> pp = detail::primitive_part(p.normalized().dense(), &cp);
    std::vector<Int> pq = detail::primitive_part(q.normalized().dense(), &cq);
    if (cq % cp != 0)
        return false;
    return detail::divide_exact_rational(pq, pp);
}

// gcd in Z[t] of normalized representatives, itself normalized. Primitive
// pseudo-remainder sequence; fine at the sizes minors produce here.
inline LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero())
        return b.normalized();
    if (b.is_zero())
        return a.normalized();
    Int ca, cb;
    std::vector<Int> u = detail::primitive_part(a.normalized().dense(), &ca);
    std::vector<Int> v = detail::primitive_part(b.normalized().dense(), &cb);
    if (u.size() < v.size())
        std::swap(u, v);
    while (!v.empty()) {
        // pseudo-remainder of u by v
        std::vector<Int> r = u;
        const size_t dv = v.size() - 1;
        while (r.size() >= v.size()) {
            detail::trim(r);
            if (r.size() < v.size())
                break;
            Int lead = r.back();
            if (lead == 0) {
                r.pop_back();
                continue;
            }
            // scale r by lead(v), subtract lead * v shifted
            Int lv = v[dv];
            for (auto& c : r)
                c *= lv;
            size_t shift = r.size() - v.size();
            for (size_t i = 0; i < v.size(); ++i)
                r[shift + i] -= lead * v[i];
            detail::trim(r);
        }
        u = std::move(v);
        v = detail::primitive_part(std::move(r));
    }
    LaurentPoly g = LaurentPoly::from_dense(u);
    Int c = gcd(ca, cb);
    if (c > 1)
        g = g * LaurentPoly::monomial(c, 0);
    return g.normalized();
}

}  // namespace wdtk
