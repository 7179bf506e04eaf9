#pragma once

#include "psdo/dressing.hpp"

#include <random>

// Deterministic generators and independent oracles shared by the test suites.
namespace psdo::testing {

using Rng = std::mt19937_64;

inline Rat rand_rat(Rng& rng, long max_abs = 6) {
    std::uniform_int_distribution<long> num(-max_abs, max_abs);
    std::uniform_int_distribution<long> den(1, 3);
    return Rat(num(rng), den(rng));
}

inline Rat rand_rat_nonzero(Rng& rng, long max_abs = 6) {
    Rat r = rand_rat(rng, max_abs);
    while (r.is_zero()) r = rand_rat(rng, max_abs);
    return r;
}

inline XSeries rand_xseries(Rng& rng, int prec, int max_terms = 4, int min_ord = 0) {
    XSeries r(prec);
    std::uniform_int_distribution<int> nt(1, max_terms);
    int n = nt(rng);
    for (int t = 0; t < n; ++t) {
        std::uniform_int_distribution<int> deg(min_ord, std::max(min_ord, prec - 1));
        int d = deg(rng);
        std::uniform_int_distribution<int> split(0, d);
        int i = split(rng);
        r.add_term(i, d - i, rand_rat(rng));
    }
    return r;
}

inline D1Op rand_d1op(Rng& rng, int prec, int max_deg = 2, int max_terms = 3, int min_ord = 0) {
    D1Op r(prec);
    std::uniform_int_distribution<int> qd(0, max_deg);
    for (int t = 0; t < max_terms; ++t) {
        int q = qd(rng);
        r.set_coeff(q, r.coeff(q) + rand_xseries(rng, prec, 2, min_ord));
    }
    return r;
}

// Random operator 1 + (strictly negative slots), the dressing shape.
inline EPlusOp rand_unit_plus_lower(Rng& rng, int prec, int depth, int max_deg = 2) {
    EPlusOp r = EPlusOp::one(prec);
    std::uniform_int_distribution<int> pick(0, 1);
    for (int s = 1; s <= depth; ++s) {
        D1Op c = rand_d1op(rng, prec, max_deg, 2);
        if (!c.is_zero()) r.set_slot(-s, c);
    }
    return r;
}

// Random differential operator (finite slots >= 0).
inline EPlusOp rand_pdo(Rng& rng, int prec, int max_slot = 2, int max_deg = 2) {
    EPlusOp r(kPrecExact);
    std::uniform_int_distribution<int> sd(0, max_slot);
    for (int t = 0; t < 3; ++t) {
        int s = sd(rng);
        D1Op c = rand_d1op(rng, prec, max_deg, 2);
        if (!c.is_zero()) r.set_slot(s, r.slot(s) + c);
    }
    if (r.is_zero()) r.set_slot(0, D1Op::one(prec));
    return r;
}

// Independent evaluation oracle: apply a d2-free operator to a series using
// only series primitives.
inline XSeries apply_d1_oracle(const D1Op& a, const XSeries& f) {
    XSeries out(prec_shift(f.prec(), -std::max(a.deg1(), 0)));
    for (const auto& [q, c] : a.coeffs()) {
        XSeries der = f;
        for (int t = 0; t < q; ++t) der = der.d_dx(1);
        out = out + (c * der).truncated(out.prec());
    }
    return out;
}

inline bool op_is_zero(const EPlusOp& p) {
    for (const auto& [s, d] : p.slots())
        if (!d.is_zero()) return false;
    return true;
}

} // namespace psdo::testing
