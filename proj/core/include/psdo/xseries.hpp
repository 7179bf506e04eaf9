#pragma once

#include "psdo/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace psdo {

// Precision at or above this sentinel means "exact": there is no truncation
// tail at all. Finite precisions stay far below it.
constexpr int kPrecExact = 1 << 20;

inline int prec_min(int a, int b) { return a < b ? a : b; }

// Shift a precision by d, respecting the exactness sentinel and flooring at 0.
inline int prec_shift(int p, int d) {
    if (p >= kPrecExact) return kPrecExact;
    long v = static_cast<long>(p) + d;
    if (v < 0) v = 0;
    if (v > kPrecExact) v = kPrecExact;
    return static_cast<int>(v);
}

struct Exp2 {
    int i = 0; // exponent of x1
    int j = 0; // exponent of x2
    auto operator<=>(const Exp2&) const = default;
};

// Bidegree under the anti-lexicographic order: the second component
// dominates, ties broken by the first.
struct GammaDeg {
    long d1 = 0;
    long d2 = 0;
    friend bool operator==(const GammaDeg&, const GammaDeg&) = default;
    friend bool operator<(const GammaDeg& a, const GammaDeg& b) {
        if (a.d2 != b.d2) return a.d2 < b.d2;
        return a.d1 < b.d1;
    }
    friend bool operator<=(const GammaDeg& a, const GammaDeg& b) { return a == b || a < b; }
    friend GammaDeg operator+(const GammaDeg& a, const GammaDeg& b) {
        return {a.d1 + b.d1, a.d2 + b.d2};
    }
};

// M-adic order of a truncated series. When the series is zero to its
// precision the order is only known to be >= floor; `finite` distinguishes
// the two cases so callers never see a fabricated value.
struct MOrd {
    bool finite = true;
    int v = 0; // the order when finite, otherwise the knowledge floor

    int floor() const { return v; }
    // True when this order is certainly >= b.
    bool at_least(int b) const { return finite ? v >= b : v >= b; }
};

struct Mat2 {
    Rat a11, a12, a21, a22;
    Rat det() const { return a11 * a22 - a12 * a21; }
    Mat2 inverse() const {
        Rat d = det();
        if (d.is_zero()) throw math_error("singular coordinate-change matrix");
        return Mat2{a22 / d, Rat(0) - a12 / d, Rat(0) - a21 / d, a11 / d};
    }
};

// Truncated bivariate power series over Q. All terms of total degree < prec
// are guaranteed correct; terms of total degree >= prec are never stored.
class XSeries {
  public:
    explicit XSeries(int prec = 0) : prec_(prec) {}

    static XSeries constant(const Rat& c, int prec) {
        XSeries r(prec);
        r.add_term(0, 0, c);
        return r;
    }
    static XSeries monomial(int i, int j, const Rat& c, int prec) {
        XSeries r(prec);
        r.add_term(i, j, c);
        return r;
    }
    static XSeries variable(int axis, int prec) {
        return monomial(axis == 1 ? 1 : 0, axis == 1 ? 0 : 1, Rat(1), prec);
    }

    int prec() const { return prec_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && t_.begin()->first == Exp2{0, 0});
    }
    const std::map<Exp2, Rat>& terms() const { return t_; }
    Rat coeff(int i, int j) const {
        auto it = t_.find(Exp2{i, j});
        return it == t_.end() ? Rat(0) : it->second;
    }
    Rat constant_term() const { return coeff(0, 0); }

    // Adds c*x1^i*x2^j, dropping the result if it lands at or above prec.
    void add_term(int i, int j, const Rat& c) {
        if (c.is_zero() || i < 0 || j < 0) return;
        if (long(i) + long(j) >= prec_) return;
        auto [it, ins] = t_.emplace(Exp2{i, j}, c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    XSeries truncated(int new_prec) const;

    MOrd ord_m() const;
    GammaDeg ord_gamma() const; // throws on a series that is zero to precision

    XSeries operator-() const;
    XSeries scaled(const Rat& c) const;
    friend XSeries operator+(const XSeries& a, const XSeries& b);
    friend XSeries operator-(const XSeries& a, const XSeries& b);
    friend XSeries operator*(const XSeries& a, const XSeries& b);

    XSeries d_dx(int axis) const;
    XSeries antideriv(int axis) const;

    // Inverse of a unit. A non-constant exact series has an infinite inverse,
    // so a finite target precision must be supplied for that case.
    XSeries invert_unit(int prec_cap = -1) const;
    // exp of a series with ord_M >= 1.
    XSeries exp_series() const;
    // Substitutes x_i = sum_j m_{ji} x'_j and re-expands.
    XSeries linear_substitute(const Mat2& m) const;

    XSeries pow(long n) const;

    // Cauchy product with the sharper sound claim
    // min(a.prec + ord_M(b), b.prec + ord_M(a)): unknown parts of one factor
    // only reach the output above the partner's order. Used by the operator
    // kernels, whose precision contracts are stated at this strength.
    static XSeries mul_refined(const XSeries& a, const XSeries& b);

    // Structural equality: identical terms and identical precision.
    friend bool operator==(const XSeries& a, const XSeries& b) {
        return a.prec_ == b.prec_ && a.t_ == b.t_;
    }

    // Equality of all coefficients of total degree < p.
    static bool agree_below(const XSeries& a, const XSeries& b, int p);

    std::string str() const;

  private:
    std::map<Exp2, Rat> t_;
    int prec_;
};

} // namespace psdo
