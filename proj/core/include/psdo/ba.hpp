#pragma once

#include "psdo/dressing.hpp"

namespace psdo {

// Formal eigenfunction data: an operator applied to the exponential kernel
// exp(x1/z1 + x2/z2), on which d1 and d2 act as multiplication by 1/z1 and
// 1/z2. Stored as x-monomial -> z-series, with the exponential factor
// implicit.
class BAFunction {
  public:
    BAFunction() = default;

    void add_term(int a, int b, int zi, int zj, const Rat& c) {
        if (c.is_zero()) return;
        auto& zs = body_[Exp2{a, b}];
        if (zs.tail_prec() >= kTailMax && tail_ < kTailMax) zs = ZSeries(tail_);
        zs.add_term(zi, zj, c);
        if (zs.is_zero()) body_.erase(Exp2{a, b});
    }
    void set_tail(int t) { tail_ = t; }
    int tail_prec() const { return tail_; }
    const std::map<Exp2, ZSeries>& body() const { return body_; }
    ZSeries at(int a, int b) const {
        auto it = body_.find(Exp2{a, b});
        return it == body_.end() ? ZSeries(tail_) : it->second;
    }
    std::string str() const;

  private:
    std::map<Exp2, ZSeries> body_;
    int tail_ = kTailMax;
};

// T = sum t_ab(x) d1^a d2^b  applied to the exponential kernel:
// d1^a d2^b -> z1^{-a} z2^{-b} coefficient-wise.
BAFunction apply_to_exponential(const EPlusOp& t);

// For s = 1 + lower and p commuting with the dressed pair, computes
// s p s^{-1}, verifies it has constant coefficients, and returns it as the
// eigenvalue z-series.
ZSeries eigenvalue_check(const EPlusOp& p, const EPlusOp& s, int window_floor);

struct SatoWilsonRHS {
    EPlusOp t1, t2, t3;
};

// The three isospectral-flow right-hand sides evaluated at s1:
//   t1: (1/4) s1_x2x2x2 - (3/2) (s1_x2)^2
//   t2: -(s1_x2)(s1_x1) - (1/2) s1_x2x2 d1
//   t3: -(s1_x1)^2 - s1_x1x2 d1 - s1_x2 d1^2
SatoWilsonRHS sato_wilson_rhs(const D1Op& s1);

} // namespace psdo
