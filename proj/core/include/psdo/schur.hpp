#pragma once

#include "psdo/zseries.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace psdo {

// Monomial u^a t^b with a >= 0.
struct UTExp {
    int a = 0;
    int b = 0;
    friend bool operator==(const UTExp&, const UTExp&) = default;
};
// Iteration order: t-exponent first, then u-exponent; begin() is the
// valuation-lowest term.
struct UTExpLess {
    bool operator()(const UTExp& x, const UTExp& y) const {
        if (x.b != y.b) return x.b < y.b;
        return x.a < y.a;
    }
};

// Rank-two valuation (u-order of the leading t-coefficient, t-order).
struct Valuation2 {
    long nu_u = 0;
    long nu_t = 0;
    friend bool operator==(const Valuation2&, const Valuation2&) = default;
};

// Truncated element of k[[u]]((t)): terms with b >= tail_prec or a >= u_prec
// are unknown.
class UTSeries {
  public:
    explicit UTSeries(int tail_prec = kTailMax, int u_prec = kIBoundMax)
        : tail_(tail_prec), uprec_(u_prec) {}

    static UTSeries monomial(int a, int b, const Rat& c, int tail_prec = kTailMax,
                             int u_prec = kIBoundMax) {
        UTSeries r(tail_prec, u_prec);
        r.add_term(a, b, c);
        return r;
    }

    int tail_prec() const { return tail_; }
    int u_prec() const { return uprec_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<UTExp, Rat, UTExpLess>& terms() const { return t_; }
    Rat coeff(int a, int b) const {
        auto it = t_.find(UTExp{a, b});
        return it == t_.end() ? Rat(0) : it->second;
    }
    void add_term(int a, int b, const Rat& c) {
        if (c.is_zero() || a < 0) return;
        if (b >= tail_ || a >= uprec_) return;
        auto [it, ins] = t_.emplace(UTExp{a, b}, c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    std::pair<UTExp, Rat> lt() const {
        if (t_.empty()) throw math_error("zero series has no valuation");
        return {t_.begin()->first, t_.begin()->second};
    }

    UTSeries truncated(int tail_p, int u_p = kIBoundMax) const {
        UTSeries r(prec_min(tail_, tail_p), prec_min(uprec_, u_p));
        for (const auto& [e, c] : t_) r.add_term(e.a, e.b, c);
        return r;
    }
    UTSeries scaled(const Rat& c) const {
        UTSeries r(tail_, uprec_);
        if (c.is_zero()) return r;
        for (const auto& [e, v] : t_) r.t_.emplace(e, v * c);
        return r;
    }
    UTSeries operator-() const { return scaled(Rat(-1)); }
    friend UTSeries operator+(const UTSeries& x, const UTSeries& y) {
        UTSeries r(prec_min(x.tail_, y.tail_), prec_min(x.uprec_, y.uprec_));
        for (const auto& [e, c] : x.t_) r.add_term(e.a, e.b, c);
        for (const auto& [e, c] : y.t_) r.add_term(e.a, e.b, c);
        return r;
    }
    friend UTSeries operator-(const UTSeries& x, const UTSeries& y) { return x + (-y); }
    friend UTSeries operator*(const UTSeries& x, const UTSeries& y);

    static bool agree_on_claims(const UTSeries& x, const UTSeries& y) {
        for (const auto& [e, c] : x.t_) {
            if (e.b >= y.tail_ || e.a >= y.uprec_) continue;
            if (y.coeff(e.a, e.b) != c) return false;
        }
        for (const auto& [e, c] : y.t_) {
            if (e.b >= x.tail_ || e.a >= x.uprec_) continue;
            if (x.coeff(e.a, e.b) != c) return false;
        }
        return true;
    }

    std::string str() const;

  private:
    std::map<UTExp, Rat, UTExpLess> t_;
    int tail_;
    int uprec_;
};

// Inverse of a monic element: the valuation-leading coefficient is 1 and the
// leading t-coefficient is a unit of k[[u]].
UTSeries ut_invert(const UTSeries& v, int tail_target);
UTSeries ut_pow(const UTSeries& v, long n, int tail_target);

Valuation2 nu(const UTSeries& v);

// The coordinate trick: z1^{-i} z2^j maps to u^i t^{j-i} and back. A
// truncated series with unbounded z1-support is only representable up to a
// u-degree cap (default: its stored extent).
UTSeries psi1(const ZSeries& v, int u_cap = -1);
ZSeries psi1_inv(const UTSeries& v);

// Operator action on ut-series, implemented literally as transport, act,
// transport back.
UTSeries ut_act(const UTSeries& w, const EPlusOp& t, int u_cap = -1);

// All products of the generators up to the cutoff word length, reduced to a
// valuation-echelon spanning set.
std::vector<UTSeries> ring_closure(const std::vector<UTSeries>& gens, int word_cutoff);

struct InvariantsNA {
    long n_a = 0;       // gcd of |nu_t| over elements with nu = (0,*)
    long tilde_n_a = 0; // gcd of |nu_t| over all elements
    bool admissible = false;
    bool strongly_admissible = false;
};
InvariantsNA invariants_NA(const std::vector<UTSeries>& closure);

struct FiltrationDim {
    bool conclusive = false;
    long dim = 0;
};
// dim of (span cap t^i k((u))[[t]]) / (span cap t^j k((u))[[t]]).
FiltrationDim filtration_dims(const std::vector<UTSeries>& space, int i, int j);

struct Recoordinatization {
    UTSeries t_new; // nu = (0, N_A)
    UTSeries u_new; // nu = (1, 0)
    int tail_target = 0;
    long n_a = 1;
    // Greedy re-expansion of v as a series in (u_new, t_new); coefficients
    // returned as a series in the new variables' exponents.
    UTSeries rewrite(const UTSeries& v) const;
    // Expansion of u_new^a t_new^b back in (u, t).
    UTSeries expand(const UTSeries& in_new_vars) const;
};
Recoordinatization recoordinatize(const std::vector<UTSeries>& closure, long n_a, int tail_target);

struct SchurPairData {
    std::vector<UTSeries> a_gens;
    std::vector<UTSeries> w_basis;
    long rank_r = 0;
    long n_a = 0;
    long tilde_n_a = 0;
    int cutoff = 0;
};

struct SchurCheck {
    std::string name;
    TriBool status = TriBool::unknown;
    std::string witness;
};

struct SchurValidation {
    bool valid = false;
    std::vector<SchurCheck> checks;
    SchurPairData data;
};

struct SchurCutoffs {
    int word_cutoff = 3;
    int support_a = 4; // u-degree box for the support check
    int support_j = 4; // t-depth box for the support check
};

// Support, stabilizer, invariant and surrogate-transcendence checks for a
// candidate pair.
SchurValidation validate_schur_pair(const std::vector<UTSeries>& a_gens,
                                    const std::vector<UTSeries>& w_basis,
                                    const SchurCutoffs& cutoffs);

} // namespace psdo
