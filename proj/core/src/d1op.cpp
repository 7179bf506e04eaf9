#include "psdo/d1op.hpp"

#include <sstream>

namespace psdo {

bool D1Op::is_x1_free() const {
    for (const auto& [q, f] : c_)
        for (const auto& [e, c] : f.terms())
            if (e.i != 0) return false;
    return true;
}

bool D1Op::is_constant() const {
    if (c_.empty()) return true;
    return deg1() == 0 && c_.begin()->second.is_constant();
}

MOrd D1Op::ord_m_min() const {
    if (c_.empty()) return MOrd{false, prec_};
    MOrd best{false, prec_};
    bool first = true;
    for (const auto& [q, f] : c_) {
        MOrd o = f.ord_m();
        if (first || o.floor() < best.floor()) {
            best = o;
            first = false;
        }
    }
    return best;
}

D1Op D1Op::truncated(int new_prec) const {
    D1Op r(prec_min(prec_, new_prec));
    for (const auto& [q, f] : c_) r.set_coeff(q, f);
    r.tail_ = tail_;
    return r;
}

D1Op D1Op::operator-() const { return scaled(Rat(-1)); }

D1Op D1Op::scaled(const Rat& c) const {
    D1Op r(prec_);
    if (c.is_zero()) return r;
    for (const auto& [q, f] : c_) r.c_[q] = f.scaled(c);
    r.tail_ = tail_;
    return r;
}

D1Op operator+(const D1Op& a, const D1Op& b) {
    D1Op r(prec_min(a.prec_, b.prec_));
    for (const auto& [q, f] : a.c_) r.set_coeff(q, f);
    for (const auto& [q, f] : b.c_) r.set_coeff(q, r.coeff(q) + f);
    r.tail_ = tail_join(a.tail_, b.tail_);
    return r;
}

D1Op operator-(const D1Op& a, const D1Op& b) {
    return a + (-b);
}

D1Op D1Op::d_x(int axis) const {
    D1Op r(prec_shift(prec_, -1));
    for (const auto& [q, f] : c_) r.set_coeff(q, f.d_dx(axis));
    r.tail_ = tail_;
    return r;
}

D1Op D1Op::antideriv(int axis) const {
    D1Op r(prec_shift(prec_, 1));
    for (const auto& [q, f] : c_) r.set_coeff(q, f.antideriv(axis));
    r.tail_ = tail_;
    return r;
}

D1Op D1Op::shifted(int k) const {
    D1Op r(prec_);
    for (const auto& [q, f] : c_) {
        if (q + k >= 0) r.set_coeff(q + k, f);
    }
    r.tail_ = tail_;
    return r;
}

XSeries D1Op::apply(const XSeries& f) const {
    // Output precision: contributions a_k * d1^k(f); the same conservative
    // rule as the ring product.
    int p = prec_;
    for (const auto& [k, ak] : c_) p = prec_min(p, prec_shift(f.prec(), -k + ak.ord_m().floor()));
    XSeries out(p);
    XSeries der = f;
    int cur = 0;
    for (const auto& [k, ak] : c_) {
        while (cur < k) {
            der = der.d_dx(1);
            ++cur;
        }
        out = out + XSeries::mul_refined(ak, der).truncated(p);
    }
    return out;
}

D1Op d1_mul(const D1Op& a, const D1Op& b) {
    // g_q = sum_{k,l} C(k,l) a_k d1^l(b_{q+l-k}); each d1-derivative applied
    // to b costs one x-degree, offset by the M-order of the a-coefficient.
    int p = a.prec_;
    for (const auto& [k, ak] : a.c_)
        p = prec_min(p, prec_shift(b.prec_, -k + ak.ord_m().floor()));
    D1Op r(p);
    int kmax = a.deg1();
    for (const auto& [j, bj] : b.c_) {
        // derivatives d1^l(b_j), computed incrementally
        XSeries der = bj;
        for (int l = 0; l <= kmax; ++l) {
            if (l > 0) der = der.d_dx(1);
            if (der.is_zero()) break; // all further derivatives vanish to precision
            for (const auto& [k, ak] : a.c_) {
                if (l > k) continue;
                Rat c = binomial(k, l);
                XSeries term = XSeries::mul_refined(ak, der).scaled(c);
                int q = k + j - l;
                r.set_coeff(q, r.coeff(q) + term);
            }
        }
    }
    // Tail bookkeeping: a 0-degree unit factor preserves a provably infinite
    // tail; otherwise exactness only survives when both factors are exact.
    auto unit_function = [](const D1Op& x) {
        return x.is_function() && !x.coeff(0).constant_term().is_zero();
    };
    if (a.tail_ == Tail::exact && b.tail_ == Tail::exact)
        r.tail_ = Tail::exact;
    else if (b.tail_ == Tail::infinite && unit_function(a) && a.tail_ == Tail::exact)
        r.tail_ = Tail::infinite;
    else if (a.tail_ == Tail::infinite && unit_function(b) && b.tail_ == Tail::exact)
        r.tail_ = Tail::infinite;
    else
        r.tail_ = Tail::truncated;
    return r;
}

D1Op symbol_mul(const D1Op& a, const D1Op& b) {
    int p = prec_min(a.prec_, b.prec_);
    D1Op r(p);
    for (const auto& [k, ak] : a.c_)
        for (const auto& [j, bj] : b.c_)
            r.set_coeff(k + j, r.coeff(k + j) + XSeries::mul_refined(ak, bj));
    r.tail_ = tail_join(a.tail_, b.tail_);
    return r;
}

D1Op op_exp(const D1Op& a) {
    for (const auto& [q, f] : a.coeffs()) {
        MOrd o = f.ord_m();
        if (o.finite && o.v < 1) throw math_error("exponential does not converge in D1-hat");
    }
    int p = a.prec();
    if (p >= kPrecExact && !a.is_zero())
        throw math_error("exp of a nonzero exact operator needs a target precision");
    D1Op r = D1Op::one(p);
    D1Op pk = D1Op::one(p);
    for (int k = 1; k < p; ++k) {
        pk = symbol_mul(pk, a);
        if (pk.is_zero()) break;
        r = r + pk.scaled(Rat(1) / factorial(k));
    }
    if (a.deg1() >= 1)
        r.set_tail(Tail::infinite);
    else
        r.set_tail(a.tail());
    return r;
}

D1Op d1_pow(const D1Op& a, long n) {
    D1Op r = D1Op::one(a.prec());
    for (long k = 0; k < n; ++k) r = d1_mul(r, a);
    return r;
}

bool D1Op::agree_below(const D1Op& a, const D1Op& b, int p) {
    for (const auto& [q, f] : a.c_)
        if (!XSeries::agree_below(f, b.coeff(q), p)) return false;
    for (const auto& [q, f] : b.c_)
        if (!XSeries::agree_below(f, a.coeff(q), p)) return false;
    return true;
}

std::string D1Op::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [q, f] : c_) {
        if (!first) os << "  +  ";
        first = false;
        os << "(" << f.str() << ")";
        if (q) os << "*d1^" << q;
    }
    return os.str();
}

} // namespace psdo
