#pragma once

#include "psdo/eplus.hpp"

#include <set>
#include <vector>

namespace psdo {

// No tail truncation / no i-bound restriction.
constexpr int kTailMax = 1 << 20;
constexpr int kIBoundMax = 1 << 20;

// Monomial z1^{-i} z2^{j} with i >= 0.
struct ZExp {
    int i = 0;
    int j = 0;
    friend bool operator==(const ZExp&, const ZExp&) = default;
};

// Iteration order = anti-lex order of the exponent pair (-i, j): the z2
// exponent dominates, then smaller z1 exponent (larger i) first. begin() is
// the lowest term.
struct ZExpLess {
    bool operator()(const ZExp& a, const ZExp& b) const {
        if (a.j != b.j) return a.j < b.j;
        return a.i > b.i;
    }
};

// Truncated element of k[z1^-1]((z2)): terms with j >= tail_prec or
// i > i_bound are unknown.
class ZSeries {
  public:
    explicit ZSeries(int tail_prec = kTailMax, int i_bound = kIBoundMax)
        : tail_(tail_prec), ib_(i_bound) {}

    static ZSeries monomial(int i, int j, const Rat& c, int tail_prec = kTailMax,
                            int i_bound = kIBoundMax) {
        ZSeries r(tail_prec, i_bound);
        r.add_term(i, j, c);
        return r;
    }

    int tail_prec() const { return tail_; }
    int i_bound() const { return ib_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<ZExp, Rat, ZExpLess>& terms() const { return t_; }
    Rat coeff(int i, int j) const {
        auto it = t_.find(ZExp{i, j});
        return it == t_.end() ? Rat(0) : it->second;
    }

    void add_term(int i, int j, const Rat& c) {
        if (c.is_zero() || i < 0) return;
        if (j >= tail_ || i > ib_) return;
        auto [it, ins] = t_.emplace(ZExp{i, j}, c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    // Lowest term under the anti-lex order; throws when zero to claims.
    std::pair<ZExp, Rat> lt() const {
        if (t_.empty()) throw math_error("zero series has no lowest term");
        return {t_.begin()->first, t_.begin()->second};
    }

    ZSeries truncated(int tail_prec, int i_bound = kIBoundMax) const {
        ZSeries r(prec_min(tail_, tail_prec), prec_min(ib_, i_bound));
        for (const auto& [e, c] : t_) r.add_term(e.i, e.j, c);
        return r;
    }

    ZSeries scaled(const Rat& c) const {
        ZSeries r(tail_, ib_);
        if (c.is_zero()) return r;
        for (const auto& [e, v] : t_) r.t_.emplace(e, v * c);
        return r;
    }
    ZSeries operator-() const { return scaled(Rat(-1)); }
    friend ZSeries operator+(const ZSeries& a, const ZSeries& b) {
        ZSeries r(prec_min(a.tail_, b.tail_), prec_min(a.ib_, b.ib_));
        for (const auto& [e, c] : a.t_) r.add_term(e.i, e.j, c);
        for (const auto& [e, c] : b.t_) r.add_term(e.i, e.j, c);
        return r;
    }
    friend ZSeries operator-(const ZSeries& a, const ZSeries& b) { return a + (-b); }

    // All claimed coefficients equal (on the joint claimed region).
    static bool agree_on_claims(const ZSeries& a, const ZSeries& b) {
        for (const auto& [e, c] : a.t_) {
            if (e.j >= b.tail_ || e.i > b.ib_) continue;
            if (b.coeff(e.i, e.j) != c) return false;
        }
        for (const auto& [e, c] : b.t_) {
            if (e.j >= a.tail_ || e.i > a.ib_) continue;
            if (a.coeff(e.i, e.j) != c) return false;
        }
        return true;
    }

    std::string str() const;

  private:
    std::map<ZExp, Rat, ZExpLess> t_;
    int tail_;
    int ib_;
};

// Image of an operator modulo (x1, x2): sets x = 0 and maps d1^q d2^s to
// z1^{-q} z2^{-s}.
ZSeries reduce_to_v(const EPlusOp& p);

// Right module action: lifts each monomial of v (z2^j with j > 0 lifts to
// d2^{-j}), composes with p, and reduces.
ZSeries right_act(const ZSeries& v, const EPlusOp& p);

// Lowest-term monomials of the row-reduced span.
std::set<ZExp, ZExpLess> support(const std::vector<ZSeries>& vs);

// Cone membership of a z-series viewed as a constant-coefficient operator:
// every monomial z1^{-p} z2^{e} must satisfy p <= alpha*(l + e) + k.
bool zseries_in_cone(const ZSeries& v, const Rat& alpha, long k, long l);

} // namespace psdo
