#pragma once

#include "psdo/sato.hpp"

#include <vector>

namespace psdo {

// Unique k-th root L = d2 + u_0 + u_{-1} d2^{-1} + ... of a monic operator
// with Gamma-order (0,k), computed down to the window floor by the
// discrepancy recursion.
EPlusOp kth_root(const EPlusOp& p, long k, int window_floor);

// L1 = q * l2^{-exponent}; with q of Gamma-order (1,l) and exponent = l this
// yields an operator of Gamma-order (1,0).
EPlusOp l1_from_q(const EPlusOp& q, const EPlusOp& l2, long exponent, int window_floor);

struct NormalizeResult {
    XSeries f;        // invertible function stage
    EPlusOp p, q;     // conjugated pair
};

// Function conjugation bringing a commuting monic pair with Gamma-orders
// (0,k), (1,l) to almost-normalized form (leading slots exactly d2^k and
// d1 d2^l).
NormalizeResult almost_normalize(const EPlusOp& p, const EPlusOp& q);

struct FullNormalizeResult {
    D1Op s;        // total conjugator (function stages times the operator stage)
    D1Op s_inv;    // its inverse, computed in the d1-completed ring
    EPlusOp p, q;  // normalized pair: p has zero d2^{k-1} slot
};

FullNormalizeResult normalize(const EPlusOp& p, const EPlusOp& q);

// Dressing: S = 1 + S^- with S^{-1} d1 S = l1 and S^{-1}(d2 + u0)S = l2,
// built stage by stage down to the window floor. Inputs must be commuting
// almost-normalized operators of Gamma-orders (1,0) and (0,1) with u0
// independent of x1.
EPlusOp dress(const EPlusOp& l1, const EPlusOp& l2, int window_floor);

// Conjugation s * x * s^{-1} with s = 1 + lower.
EPlusOp conjugate_by(const EPlusOp& s, const EPlusOp& x, int window_floor);

// Admissibility of an operator: order-zero invertible T whose conjugates of
// d1 and d2 have constant coefficients (within claims).
TriBool is_admissible_operator(const EPlusOp& t, int window_floor);

struct SchurRingData {
    EPlusOp s_total;     // conjugator to constant-coefficient form
    EPlusOp s_total_inv;
    std::vector<ZSeries> a_elements; // images of the generators
    SubspaceW w;
    std::vector<std::string> notes;
};

struct SchurOptions {
    int i_bound = 4;
    int j_bound = 4;
    int window_floor = -6;
};

// Full pipeline from a commuting generator list with designated quasi-
// elliptic pair (P at p_index, Q at q_index) to its spectral-side data:
// normalize, take the k-th root, dress, conjugate every generator to
// constant-coefficient form, and cut the subspace.
SchurRingData schur_from_ring(const std::vector<EPlusOp>& gens, std::size_t p_index,
                              std::size_t q_index, const SchurOptions& opts);

} // namespace psdo
