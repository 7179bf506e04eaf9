#include "psdo/xseries.hpp"

#include <algorithm>
#include <sstream>

namespace psdo {

XSeries XSeries::truncated(int new_prec) const {
    int p = prec_min(prec_, new_prec);
    XSeries r(p);
    for (const auto& [e, c] : t_) r.add_term(e.i, e.j, c);
    return r;
}

MOrd XSeries::ord_m() const {
    if (t_.empty()) return MOrd{false, prec_};
    long best = -1;
    for (const auto& [e, c] : t_) {
        long d = long(e.i) + e.j;
        if (best < 0 || d < best) best = d;
    }
    return MOrd{true, static_cast<int>(best)};
}

GammaDeg XSeries::ord_gamma() const {
    if (t_.empty()) throw math_error("zero series has no Gamma-order");
    bool first = true;
    GammaDeg best{};
    for (const auto& [e, c] : t_) {
        GammaDeg d{e.i, e.j};
        if (first || d < best) {
            best = d;
            first = false;
        }
    }
    return best;
}

XSeries XSeries::operator-() const { return scaled(Rat(-1)); }

XSeries XSeries::scaled(const Rat& c) const {
    XSeries r(prec_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : t_) r.t_.emplace(e, v * c);
    return r;
}

XSeries operator+(const XSeries& a, const XSeries& b) {
    XSeries r(prec_min(a.prec_, b.prec_));
    for (const auto& [e, c] : a.t_) r.add_term(e.i, e.j, c);
    for (const auto& [e, c] : b.t_) r.add_term(e.i, e.j, c);
    return r;
}

XSeries operator-(const XSeries& a, const XSeries& b) {
    XSeries r(prec_min(a.prec_, b.prec_));
    for (const auto& [e, c] : a.t_) r.add_term(e.i, e.j, c);
    for (const auto& [e, c] : b.t_) r.add_term(e.i, e.j, -c);
    return r;
}

XSeries operator*(const XSeries& a, const XSeries& b) {
    XSeries r(prec_min(a.prec_, b.prec_));
    if (a.t_.empty() || b.t_.empty()) return r;
    for (const auto& [ea, ca] : a.t_) {
        long da = long(ea.i) + ea.j;
        for (const auto& [eb, cb] : b.t_) {
            if (da + eb.i + eb.j >= r.prec_) continue;
            r.add_term(ea.i + eb.i, ea.j + eb.j, ca * cb);
        }
    }
    return r;
}

XSeries XSeries::mul_refined(const XSeries& a, const XSeries& b) {
    int p = prec_min(prec_shift(a.prec_, b.ord_m().floor()), prec_shift(b.prec_, a.ord_m().floor()));
    XSeries r(p);
    if (a.t_.empty() || b.t_.empty()) return r;
    for (const auto& [ea, ca] : a.t_) {
        long da = long(ea.i) + ea.j;
        for (const auto& [eb, cb] : b.t_) {
            if (da + eb.i + eb.j >= r.prec_) continue;
            r.add_term(ea.i + eb.i, ea.j + eb.j, ca * cb);
        }
    }
    return r;
}

XSeries XSeries::d_dx(int axis) const {
    XSeries r(prec_shift(prec_, -1));
    for (const auto& [e, c] : t_) {
        if (axis == 1) {
            if (e.i > 0) r.add_term(e.i - 1, e.j, c * Rat(e.i));
        } else {
            if (e.j > 0) r.add_term(e.i, e.j - 1, c * Rat(e.j));
        }
    }
    return r;
}

XSeries XSeries::antideriv(int axis) const {
    XSeries r(prec_shift(prec_, 1));
    for (const auto& [e, c] : t_) {
        if (axis == 1)
            r.add_term(e.i + 1, e.j, c / Rat(e.i + 1));
        else
            r.add_term(e.i, e.j + 1, c / Rat(e.j + 1));
    }
    return r;
}

XSeries XSeries::invert_unit(int prec_cap) const {
    Rat c0 = constant_term();
    if (c0.is_zero()) throw math_error("not a unit");
    int p = prec_;
    if (prec_cap >= 0) p = prec_min(p, prec_cap);
    if (p >= kPrecExact) {
        if (is_constant()) {
            return XSeries::constant(Rat(1) / c0, kPrecExact);
        }
        throw math_error("inverse of a non-constant exact series needs a target precision");
    }
    // Coefficients of the inverse by increasing total degree.
    XSeries r(p);
    Rat inv0 = Rat(1) / c0;
    r.add_term(0, 0, inv0);
    for (int d = 1; d < p; ++d) {
        for (int i = 0; i <= d; ++i) {
            int j = d - i;
            // sum over nonzero terms of *this of degree >= 1
            Rat acc(0);
            for (const auto& [e, c] : t_) {
                if (e.i == 0 && e.j == 0) continue;
                int bi = i - e.i, bj = j - e.j;
                if (bi < 0 || bj < 0) continue;
                Rat rb = r.coeff(bi, bj);
                if (!rb.is_zero()) acc += c * rb;
            }
            if (!acc.is_zero()) r.add_term(i, j, -(inv0 * acc));
        }
    }
    return r;
}

XSeries XSeries::exp_series() const {
    MOrd o = ord_m();
    if (o.finite && o.v < 1) throw math_error("exponent must have positive M-order");
    int p = prec_;
    if (p >= kPrecExact && !t_.empty())
        throw math_error("exp of a nonzero exact series needs a target precision");
    XSeries r = XSeries::constant(Rat(1), p);
    XSeries pk = XSeries::constant(Rat(1), p); // holds this^k
    for (int k = 1; k < p; ++k) {
        pk = pk * (*this);
        if (pk.is_zero()) break;
        r = r + pk.scaled(Rat(1) / factorial(k));
    }
    return r;
}

XSeries XSeries::linear_substitute(const Mat2& m) const {
    if (m.det().is_zero()) throw math_error("singular coordinate-change matrix");
    XSeries r(prec_);
    // x1 -> m11 x1' + m21 x2', x2 -> m12 x1' + m22 x2'
    XSeries img1(prec_), img2(prec_);
    img1.add_term(1, 0, m.a11);
    img1.add_term(0, 1, m.a21);
    img2.add_term(1, 0, m.a12);
    img2.add_term(0, 1, m.a22);
    // cache powers
    std::vector<XSeries> p1{XSeries::constant(Rat(1), prec_)};
    std::vector<XSeries> p2{XSeries::constant(Rat(1), prec_)};
    for (const auto& [e, c] : t_) {
        while (static_cast<int>(p1.size()) <= e.i) p1.push_back(p1.back() * img1);
        while (static_cast<int>(p2.size()) <= e.j) p2.push_back(p2.back() * img2);
        r = r + (p1[e.i] * p2[e.j]).scaled(c);
    }
    return r;
}

XSeries XSeries::pow(long n) const {
    XSeries r = XSeries::constant(Rat(1), prec_);
    for (long k = 0; k < n; ++k) r = r * (*this);
    return r;
}

bool XSeries::agree_below(const XSeries& a, const XSeries& b, int p) {
    for (const auto& [e, c] : a.t_) {
        if (long(e.i) + e.j >= p) continue;
        if (b.coeff(e.i, e.j) != c) return false;
    }
    for (const auto& [e, c] : b.t_) {
        if (long(e.i) + e.j >= p) continue;
        if (a.coeff(e.i, e.j) != c) return false;
    }
    return true;
}

std::string XSeries::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (e.i) os << "*x1^" << e.i;
        if (e.j) os << "*x2^" << e.j;
    }
    return os.str();
}

} // namespace psdo
