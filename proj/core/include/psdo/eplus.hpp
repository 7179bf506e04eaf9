#pragma once

#include "psdo/d1op.hpp"

#include <map>
#include <utility>

namespace psdo {

enum class TriBool { no, yes, unknown };

// Operator sum_s p_s(x,d1) d2^s in the ring D1-hat((d2^-1)).
//
// Truncation model: slots below window_lo are unknown (floor == truncated) or
// exactly zero (floor == exact). A stored slot coefficient carries its own
// x-precision; an absent slot in the window is zero to x-precision zero_prec.
// Absent slots above the top stored slot are exactly zero: ring elements have
// a finite top in d2.
class EPlusOp {
  public:
    explicit EPlusOp(int prec = 0) : zero_prec_(prec) {}

    static EPlusOp zero(int prec) { return EPlusOp(prec); }
    static EPlusOp one(int prec) { return from_d1(D1Op::one(prec), 0); }
    // Literal single-slot operator: every other slot is exactly zero.
    static EPlusOp from_d1(const D1Op& c, int slot) {
        EPlusOp r(kPrecExact);
        r.set_slot(slot, c);
        if (slot > 0) r.window_lo_ = 0;
        return r;
    }
    static EPlusOp from_xseries(const XSeries& f) { return from_d1(D1Op::from_xseries(f), 0); }
    // d1^q d2^s with unit coefficient.
    static EPlusOp monomial_op(int q, int s, int prec = kPrecExact) {
        return from_d1(D1Op::d1_power(q, prec), s);
    }
    static EPlusOp d2_power(int s, int prec = kPrecExact) { return monomial_op(0, s, prec); }

    // Zero in value on every claim; zero-claim slots may still be stored.
    bool is_zero() const {
        for (const auto& [s, d] : slots_)
            if (!d.is_zero()) return false;
        return true;
    }
    const std::map<int, D1Op>& slots() const { return slots_; }
    D1Op slot(int s) const {
        auto it = slots_.find(s);
        return it == slots_.end() ? D1Op(prec_at(s)) : it->second;
    }
    void set_slot(int s, const D1Op& c) {
        if (s < window_lo_) window_lo_ = s;
        if (c.is_zero() && c.prec() >= zero_prec_)
            slots_.erase(s);
        else
            slots_[s] = c; // zero slots with a lower claim level stay, for honesty
    }

    int window_lo() const { return window_lo_; }
    void set_window(int w, Tail floor) {
        window_lo_ = w;
        floor_ = floor;
        auto it = slots_.begin();
        while (it != slots_.end() && it->first < w) it = slots_.erase(it);
    }
    Tail floor_tail() const { return floor_; }
    int zero_prec() const { return zero_prec_; }
    void set_zero_prec(int p) { zero_prec_ = p; }

    // Knowledge level for the coefficient of d2^s.
    int prec_at(int s) const {
        if (s < window_lo_) return floor_ == Tail::exact ? kPrecExact : 0;
        auto it = slots_.find(s);
        if (it != slots_.end()) return it->second.prec();
        if (!slots_.empty() && s > slots_.rbegin()->first) return kPrecExact;
        return zero_prec_;
    }

    int top_slot() const { return slots_.empty() ? window_lo_ : slots_.rbegin()->first; }

    // Gamma-order (d1-degree of the top slot, top slot index); throws on an
    // operator that is zero to its truncation.
    GammaDeg gamma_order() const;
    // Gamma-order plus the coefficient of the anti-lex-minimal x-monomial of
    // the leading series.
    std::pair<GammaDeg, Rat> highest_term() const;
    // The full leading coefficient series (of d1^k in the top slot).
    XSeries leading_series() const;

    EPlusOp operator-() const;
    EPlusOp scaled(const Rat& c) const;
    friend EPlusOp operator+(const EPlusOp& a, const EPlusOp& b);
    friend EPlusOp operator-(const EPlusOp& a, const EPlusOp& b);

    // Restrict claims to slots >= w.
    EPlusOp truncated_window(int w) const;
    // Lower every slot's x-precision to p.
    EPlusOp truncated_prec(int p) const;

    bool is_in_dhat() const; // no nonzero stored slot below 0
    TriBool is_pdo() const;  // additionally: genuinely polynomial coefficients

    static bool agree_on_claims(const EPlusOp& a, const EPlusOp& b);

    std::string str() const;

  private:
    std::map<int, D1Op> slots_;
    int window_lo_ = 0;
    int zero_prec_;
    Tail floor_ = Tail::exact;

    friend EPlusOp eplus_mul(const EPlusOp& a, const EPlusOp& b);
};

// Leibniz product: (sum a_i d2^i)(sum b_j d2^j) =
//   sum_{i,j,m>=0} C(i,m) a_i d2^m(b_j) d2^{i+j-m},
// with C(i,m) the falling-factorial binomial (exact for negative i) and the
// inner derivation acting coefficient-wise as d/dx2.
EPlusOp eplus_mul(const EPlusOp& a, const EPlusOp& b);

inline EPlusOp commutator(const EPlusOp& a, const EPlusOp& b) {
    return eplus_mul(a, b) - eplus_mul(b, a);
}

EPlusOp eplus_pow(const EPlusOp& a, long n);

// Inverse of an operator whose highest term is c*d2^l with c a unit series of
// d1-degree zero. Inverses of d1-positive leaders leave the ring and are
// rejected. The result is computed on slots >= target_window.
EPlusOp invert_monic(const EPlusOp& p, int target_window);

// Scales the operator so its leading rational coefficient becomes 1.
EPlusOp normalize_leader(const EPlusOp& p);

// True when every stored coefficient series is constant in x (used for
// constant-coefficient checks after conjugation).
bool has_constant_coefficients(const EPlusOp& p);

} // namespace psdo
