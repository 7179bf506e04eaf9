#pragma once

#include "psdo/ba.hpp"
#include "psdo/schur.hpp"

namespace psdo {

struct Check {
    std::string name;
    std::string status; // "pass" | "fail" | "inconclusive"
    std::string witness;
};
using Report = std::vector<Check>;

inline bool report_all_pass(const Report& r) {
    for (const auto& c : r)
        if (c.status != "pass") return false;
    return true;
}

struct CuspExample {
    EPlusOp p, q;
    SubspaceW w;
    Report report;
};

// One-variable commuting pair on the x2 axis: p = d2^2 - 2(1-x2)^{-2},
// q = d2^3 - 3(1-x2)^{-2} d2 - 3(1-x2)^{-3}; the report checks [p,q] = 0,
// q^2 - p^3 = 0, the support of the associated subspace, and the
// reconstruction roundtrip against p.
CuspExample example_burchnall_chaundy(int prec, int window_floor);

struct ToricExample {
    EPlusOp p, q, pp;
    Report report;
};

// The projection-kernel family: p = d2^2 - 2 g^2 E, q = d1 d2 + g E d1,
// pp = d2^3 - 3 g^2 E d2 - 3 g^3 E with g = (1-x2)^{-1} and E the
// normal-ordered exponential of -x1 d1. The report checks the three
// commutators, the cone certificates, and the stabilizer property of the
// transported images.
ToricExample example_toric(int prec, int window_floor);

struct CalogeroExample {
    EPlusOp l1, l2;           // original operators
    EPlusOp l1_new, l2_new;   // after the linear change
    Report report;
};

// Symbol-level content of the elliptic two-body family: the potential enters
// as a caller-supplied truncated series w(y) standing for the shifted
// Weierstrass coefficient function evaluated at y = x1 - x2; only the linear
// change identities and symbols are verified.
CalogeroExample example_calogero_symbols(const XSeries& pp_series, const Rat& coupling_m);

} // namespace psdo
