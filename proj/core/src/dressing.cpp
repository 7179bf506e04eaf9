#include "psdo/dressing.hpp"

#include <algorithm>
#include <sstream>

namespace psdo {

namespace {

bool is_exact_one(const XSeries& f) { return f.is_constant() && f.constant_term() == Rat(1); }

void require_monic_0k(const EPlusOp& p, long k) {
    GammaDeg g = p.gamma_order();
    if (g.d1 != 0 || g.d2 != k) {
        std::ostringstream os;
        os << "expected a monic operator of Gamma-order (0," << k << "), found (" << g.d1 << ","
           << g.d2 << ")";
        throw math_error(os.str());
    }
    if (!is_exact_one(p.leading_series()))
        throw math_error("operator is not monic: leading series is not 1 (scale it first)");
}

// Checks the coefficient of d2^l is exactly d1 (plus a pure function g,
// which is returned).
XSeries top_deviation_1l(const EPlusOp& q, long l) {
    D1Op top = q.slot(static_cast<int>(l));
    if (top.deg1() != 1) throw math_error("expected a leading coefficient of d1-degree 1");
    if (!is_exact_one(top.coeff(1)))
        throw math_error("operator is not monic: leading series is not 1 (scale it first)");
    return top.coeff(0);
}

EPlusOp conj_by_function(const EPlusOp& x, const XSeries& f, const XSeries& f_inv) {
    return eplus_mul(eplus_mul(EPlusOp::from_xseries(f_inv), x), EPlusOp::from_xseries(f));
}

EPlusOp conj_by_d1op(const EPlusOp& x, const D1Op& s, const D1Op& s_inv) {
    return eplus_mul(eplus_mul(EPlusOp::from_d1(s_inv, 0), x), EPlusOp::from_d1(s, 0));
}

bool d1op_is_zero_to_claims(const D1Op& d) { return d.is_zero(); }

} // namespace

EPlusOp kth_root(const EPlusOp& p, long k, int window_floor) {
    if (k < 1) throw math_error("root exponent must be positive");
    require_monic_0k(p, k);
    EPlusOp root = EPlusOp::d2_power(1);
    int depth = -window_floor;
    for (int t = 0; t <= depth; ++t) {
        EPlusOp d = p - eplus_pow(root, k);
        // everything above the working slot must already agree
        for (const auto& [s, c] : d.slots()) {
            if (s > static_cast<int>(k) - 1 - t && !c.is_zero())
                throw math_error("root recursion out of order: unexpected high-slot discrepancy");
        }
        int s_t = static_cast<int>(k) - 1 - t;
        if (d.prec_at(s_t) < 1) {
            std::ostringstream os;
            os << "input too shallow for window floor " << window_floor
               << ": knowledge exhausted at root slot " << -t;
            throw math_error(os.str());
        }
        D1Op u = d.slot(s_t).scaled(Rat(1, k));
        // a coefficient that is zero only to its precision must keep its
        // claim level, or later stages would overstate what they know
        root.set_slot(-t, root.slot(-t) + u);
    }
    return root.truncated_window(window_floor);
}

EPlusOp l1_from_q(const EPlusOp& q, const EPlusOp& l2, long exponent, int window_floor) {
    GammaDeg g = q.gamma_order();
    if (g.d1 != 1) throw math_error("expected an operator of Gamma-order (1,l)");
    top_deviation_1l(q, g.d2);
    EPlusOp r;
    if (exponent >= 0) {
        EPlusOp inv = invert_monic(eplus_pow(l2, exponent), window_floor - static_cast<int>(g.d2));
        r = eplus_mul(q, inv);
    } else {
        r = eplus_mul(q, eplus_pow(l2, -exponent));
    }
    return r.truncated_window(window_floor);
}

NormalizeResult almost_normalize(const EPlusOp& p, const EPlusOp& q) {
    GammaDeg gp = p.gamma_order();
    GammaDeg gq = q.gamma_order();
    long k = gp.d2, l = gq.d2;
    require_monic_0k(p, k);
    XSeries g = top_deviation_1l(q, l);
    if (gp.d1 != 0) throw math_error("designated pair is not quasi-elliptic");

    // Stage 1: f = exp(-antideriv_x1(g)) removes the function deviation of
    // q's top slot.
    NormalizeResult out{XSeries::constant(Rat(1), kPrecExact), p, q};
    if (!g.is_zero()) {
        XSeries f = (-g.antideriv(1)).exp_series();
        XSeries f_inv = g.antideriv(1).exp_series();
        out.f = f;
        out.p = conj_by_function(p, f, f_inv);
        out.q = conj_by_function(q, f, f_inv);
        XSeries dev = top_deviation_1l(out.q, l);
        if (!dev.is_zero()) throw math_error("normalization stage failed to clear the top slot");
    }

    // Stage 2: an x2-only unit removes the d1-free part of the d2^{k-1}
    // coefficient. Commutativity forces that coefficient to be x1-free.
    D1Op h = out.p.slot(static_cast<int>(k - 1));
    if (!h.d_x(1).is_zero())
        throw math_error("operators do not commute: d2^{k-1} coefficient depends on x1");
    XSeries a0 = h.coeff(0);
    if (!a0.is_zero()) {
        XSeries f2 = (-a0.scaled(Rat(1, k)).antideriv(2)).exp_series();
        XSeries f2_inv = a0.scaled(Rat(1, k)).antideriv(2).exp_series();
        out.f = out.f * f2;
        out.p = conj_by_function(out.p, f2, f2_inv);
        out.q = conj_by_function(out.q, f2, f2_inv);
    }
    return out;
}

FullNormalizeResult normalize(const EPlusOp& p, const EPlusOp& q) {
    NormalizeResult an = almost_normalize(p, q);
    GammaDeg gp = an.p.gamma_order();
    long k = gp.d2;

    D1Op h = an.p.slot(static_cast<int>(k - 1));
    FullNormalizeResult out{D1Op::from_xseries(an.f), D1Op::from_xseries(an.f.invert_unit()),
                            an.p, an.q};
    if (!h.is_zero()) {
        if (!h.d_x(1).is_zero())
            throw math_error("operators do not commute: d2^{k-1} coefficient depends on x1");
        D1Op b = h.antideriv(2).scaled(Rat(1, k));
        D1Op s3 = op_exp(-b);
        D1Op s3_inv = op_exp(b);
        if (!d1op_is_zero_to_claims(d1_mul(s3, s3_inv) - D1Op::one(s3.prec())))
            throw math_error("operator exponential failed to invert");
        out.p = conj_by_d1op(out.p, s3, s3_inv);
        out.q = conj_by_d1op(out.q, s3, s3_inv);
        out.s = d1_mul(out.s, s3);
        out.s_inv = d1_mul(s3_inv, out.s_inv);
        D1Op cleared = out.p.slot(static_cast<int>(k - 1));
        if (!cleared.is_zero())
            throw math_error("normalization failed to clear the d2^{k-1} slot");
    }
    return out;
}

EPlusOp dress(const EPlusOp& l1, const EPlusOp& l2, int window_floor) {
    // shape checks
    {
        D1Op head1 = l1.slot(0);
        if (head1.deg1() != 1 || !is_exact_one(head1.coeff(1)) || !head1.coeff(0).is_zero())
            throw math_error("dressing expects l1 = d1 + lower-order slots");
        for (const auto& [s, d] : l1.slots())
            if (s > 0 && !d.is_zero()) throw math_error("dressing expects Gamma-order (1,0)");
        D1Op head2 = l2.slot(1);
        if (head2.deg1() != 0 || !is_exact_one(head2.coeff(0)))
            throw math_error("dressing expects l2 = d2 + u0 + lower-order slots");
        for (const auto& [s, d] : l2.slots())
            if (s > 1 && !d.is_zero()) throw math_error("dressing expects Gamma-order (0,1)");
    }
    D1Op u0 = l2.slot(0);
    if (!u0.d_x(1).is_zero()) throw math_error("dressing expects u0 independent of x1");

    EPlusOp cur1 = l1, cur2 = l2;
    EPlusOp s_acc = EPlusOp::one(kPrecExact); // accumulates S = ... S_2^{-1} S_1^{-1}
    int depth = -window_floor;
    for (int t = 1; t <= depth; ++t) {
        if (cur1.prec_at(-t) < 1 || cur2.prec_at(-t) < 1) {
            std::ostringstream os;
            os << "input too shallow for window floor " << window_floor
               << ": knowledge exhausted at stage " << t;
            throw math_error(os.str());
        }
        D1Op v_t = cur1.slot(-t);
        D1Op u_t = cur2.slot(-t);
        // compatibility of the stage system doubles as the commutativity check
        D1Op compat = v_t.d_x(2) - u_t.d_x(1) + d1_commutator(u0, v_t);
        if (!compat.is_zero()) {
            std::ostringstream os;
            os << "operators do not commute at stage " << t;
            throw math_error(os.str());
        }
        D1Op iv = v_t.antideriv(1);
        D1Op inner = v_t.d_x(2).antideriv(1) - u_t + d1_commutator(u0, iv);
        D1Op s_t = -iv + inner.antideriv(2);
        // zero-valued stages still carry a claim level through the caps
        EPlusOp cap = EPlusOp::one(kPrecExact);
        cap.set_slot(-t, s_t);
        EPlusOp cap_inv = invert_monic(cap, window_floor - 1);
        cur1 = eplus_mul(eplus_mul(cap_inv, cur1), cap).truncated_window(window_floor - 1);
        cur2 = eplus_mul(eplus_mul(cap_inv, cur2), cap).truncated_window(window_floor - 1);
        if (!cur1.slot(-t).is_zero() || !cur2.slot(-t).is_zero())
            throw math_error("dressing stage failed to clear its slot");
        s_acc = eplus_mul(cap_inv, s_acc);
    }
    return s_acc.truncated_window(window_floor);
}

EPlusOp conjugate_by(const EPlusOp& s, const EPlusOp& x, int window_floor) {
    EPlusOp s_inv = invert_monic(s, window_floor + std::min(0, -x.top_slot()) - 1);
    return eplus_mul(eplus_mul(s, x), s_inv).truncated_window(window_floor);
}

TriBool is_admissible_operator(const EPlusOp& t, int window_floor) {
    GammaDeg g;
    try {
        g = t.gamma_order();
    } catch (const math_error&) {
        return TriBool::no;
    }
    if (!(g == GammaDeg{0, 0})) return TriBool::no;
    EPlusOp c1, c2;
    try {
        c1 = conjugate_by(t, EPlusOp::monomial_op(1, 0), window_floor);
        c2 = conjugate_by(t, EPlusOp::d2_power(1), window_floor);
    } catch (const math_error&) {
        return TriBool::no;
    }
    if (!has_constant_coefficients(c1) || !has_constant_coefficients(c2)) return TriBool::no;
    if (c1.prec_at(window_floor) < 1 || c2.prec_at(window_floor) < 1) return TriBool::unknown;
    return TriBool::yes;
}

SchurRingData schur_from_ring(const std::vector<EPlusOp>& gens, std::size_t p_index,
                              std::size_t q_index, const SchurOptions& opts) {
    if (p_index >= gens.size() || q_index >= gens.size() || p_index == q_index)
        throw math_error("invalid designated generator indices");
    for (std::size_t a = 0; a < gens.size(); ++a) {
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
            EPlusOp c = commutator(gens[a], gens[b]);
            for (const auto& [s, d] : c.slots()) {
                if (!d.is_zero()) {
                    std::ostringstream os;
                    os << "generators " << a << " and " << b << " do not commute";
                    throw math_error(os.str());
                }
            }
        }
    }
    const EPlusOp& p = gens[p_index];
    const EPlusOp& q = gens[q_index];
    GammaDeg gp = p.gamma_order(), gq = q.gamma_order();
    if (gp.d1 != 0 || gq.d1 != 1)
        throw math_error("designated operators do not form a quasi-elliptic pair");
    long k = gp.d2, l = gq.d2;

    SchurRingData out;
    FullNormalizeResult nr = normalize(p, q);
    int wf = opts.window_floor;
    EPlusOp l2 = kth_root(nr.p, k, wf);
    EPlusOp l1 = l1_from_q(nr.q, l2, l, wf);
    EPlusOp s_d = dress(l1, l2, wf);

    // total conjugator: X -> (s_d s^{-1}) X (s_d s^{-1})^{-1}
    EPlusOp s_inv_op = EPlusOp::from_d1(nr.s_inv, 0);
    EPlusOp s_op = EPlusOp::from_d1(nr.s, 0);
    out.s_total = eplus_mul(s_d, s_inv_op).truncated_window(wf);
    EPlusOp s_d_inv = invert_monic(s_d, wf);
    out.s_total_inv = eplus_mul(s_op, s_d_inv).truncated_window(wf);

    for (std::size_t i = 0; i < gens.size(); ++i) {
        EPlusOp conj =
            eplus_mul(eplus_mul(out.s_total, gens[i]), out.s_total_inv).truncated_window(wf);
        if (!has_constant_coefficients(conj)) {
            std::ostringstream os;
            os << "conjugated generator " << i
               << " has non-constant coefficients (insufficient window or non-commuting input)";
            throw math_error(os.str());
        }
        out.a_elements.push_back(reduce_to_v(conj));
    }

    // Subspace rows W0 * S_total^{-1}.
    std::vector<ZSeries> rows;
    for (int i = 0; i <= opts.i_bound; ++i)
        for (int j = 0; j <= opts.j_bound; ++j)
            rows.push_back(right_act(ZSeries::monomial(i, -j, Rat(1)), out.s_total_inv));
    out.w = echelon_basis(rows, opts.i_bound, opts.j_bound);

    // Stabilizer verification for each image.
    for (std::size_t i = 0; i < gens.size(); ++i) {
        EPlusOp cop =
            eplus_mul(eplus_mul(out.s_total, gens[i]), out.s_total_inv).truncated_window(wf);
        StabilizerReport rep = stabilizes(out.w, cop);
        if (rep.verdict == TriBool::no) {
            std::ostringstream os;
            os << "image of generator " << i << " does not stabilize the subspace: " << rep.detail;
            throw math_error(os.str());
        }
        if (rep.verdict == TriBool::unknown)
            out.notes.push_back("stabilizer check inconclusive for generator " +
                                std::to_string(i) + ": " + rep.detail);
    }
    return out;
}

} // namespace psdo
