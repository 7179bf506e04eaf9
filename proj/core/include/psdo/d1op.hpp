#pragma once

#include "psdo/xseries.hpp"

#include <map>

namespace psdo {

// What is known about an operator beyond its stored terms.
//   exact:     everything beyond storage is exactly zero
//   truncated: beyond storage is unknown (below the working precision)
//   infinite:  provably nonzero terms exist beyond every stored degree
enum class Tail { exact, truncated, infinite };

inline Tail tail_join(Tail a, Tail b) {
    if (a == Tail::exact && b == Tail::exact) return Tail::exact;
    return Tail::truncated;
}

// Operator sum_q a_q(x1,x2) d1^q in the d1-completed ring: coefficients are
// truncated series sharing one x-precision; a coefficient that is zero to
// that precision is not stored.
class D1Op {
  public:
    explicit D1Op(int prec = 0) : prec_(prec) {}

    static D1Op zero(int prec) { return D1Op(prec); }
    static D1Op one(int prec) { return from_xseries(XSeries::constant(Rat(1), prec)); }
    static D1Op from_xseries(const XSeries& f) {
        D1Op r(f.prec());
        r.set_coeff(0, f);
        return r;
    }
    static D1Op d1_power(int q, int prec) {
        D1Op r(prec);
        r.set_coeff(q, XSeries::constant(Rat(1), prec));
        return r;
    }

    int prec() const { return prec_; }
    Tail tail() const { return tail_; }
    void set_tail(Tail t) { tail_ = t; }
    bool is_zero() const { return c_.empty(); }
    const std::map<int, XSeries>& coeffs() const { return c_; }
    XSeries coeff(int q) const {
        auto it = c_.find(q);
        return it == c_.end() ? XSeries(prec_) : it->second;
    }
    void set_coeff(int q, const XSeries& f) {
        XSeries g = f.truncated(prec_);
        if (g.is_zero())
            c_.erase(q);
        else
            c_[q] = g;
    }

    // Max stored d1-degree; -1 when zero to precision.
    int deg1() const { return c_.empty() ? -1 : c_.rbegin()->first; }
    bool is_function() const { return c_.empty() || deg1() == 0; }
    bool is_x1_free() const;
    bool is_constant() const; // single constant function coefficient at q==0 (or zero)

    // Minimal ord_M over stored coefficients, as a knowledge-honest order.
    MOrd ord_m_min() const;

    D1Op truncated(int new_prec) const;
    D1Op operator-() const;
    D1Op scaled(const Rat& c) const;
    friend D1Op operator+(const D1Op& a, const D1Op& b);
    friend D1Op operator-(const D1Op& a, const D1Op& b);

    // Coefficient-wise partial derivative (the inner derivations of the ring).
    D1Op d_x(int axis) const;
    // Coefficient-wise antiderivative with zero integration constant.
    D1Op antideriv(int axis) const;

    // Right multiplication by d1^k (degree shift, no Leibniz).
    D1Op shifted(int k) const;

    // Apply the operator to a series.
    XSeries apply(const XSeries& f) const;

    static bool agree_below(const D1Op& a, const D1Op& b, int p);

    std::string str() const;

  private:
    std::map<int, XSeries> c_;
    int prec_;
    Tail tail_ = Tail::exact;

    friend D1Op d1_mul(const D1Op& a, const D1Op& b);
    friend D1Op symbol_mul(const D1Op& a, const D1Op& b);
};

// Leibniz product in the d1-completed ring.
D1Op d1_mul(const D1Op& a, const D1Op& b);

// Product with d1 treated as a commuting symbol (no Leibniz action).
D1Op symbol_mul(const D1Op& a, const D1Op& b);

inline D1Op d1_commutator(const D1Op& a, const D1Op& b) {
    return d1_mul(a, b) - d1_mul(b, a);
}

// Normal-ordered exponential: sum_k (symbol power a^k)/k!. Requires every
// coefficient to have ord_M >= 1; coincides with the true operator
// exponential whenever the coefficients are x1-free.
D1Op op_exp(const D1Op& a);

D1Op d1_pow(const D1Op& a, long n);

} // namespace psdo
