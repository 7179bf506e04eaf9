#include "psdo/examples.hpp"

#include "psdo/growth.hpp"
#include "psdo/symbols.hpp"

#include <sstream>

namespace psdo {

namespace {

// The operator vanishes identically: every claimed coefficient is zero and
// the claims cover [window_floor, top] x (x-degree < prec).
Check check_zero_to(const std::string& name, const EPlusOp& c, int prec, int window_floor) {
    for (const auto& [s, d] : c.slots()) {
        if (!d.is_zero()) {
            auto g = c.gamma_order();
            std::ostringstream os;
            os << "nonzero coefficient at d2-slot " << g.d2;
            return Check{name, "fail", os.str()};
        }
    }
    for (int s = window_floor; s <= std::max(c.top_slot(), 0); ++s) {
        if (c.prec_at(s) < prec) {
            std::ostringstream os;
            os << "claims at slot " << s << " reach x-precision " << c.prec_at(s) << " < " << prec;
            return Check{name, "inconclusive", os.str()};
        }
    }
    return Check{name, "pass", ""};
}

Check check_cert(const std::string& name, const GrowthCert& cert) {
    if (cert.verdict == Verdict::holds) return Check{name, "pass", ""};
    std::ostringstream os;
    if (cert.witness)
        os << "at d1^" << cert.witness->d1_deg << " d2^" << cert.witness->d2_slot << ": ord "
           << cert.witness->ord << " needs " << cert.witness->needed;
    return Check{name, cert.verdict == Verdict::fails ? "fail" : "inconclusive", os.str()};
}

Check check_tri(const std::string& name, TriBool v, const std::string& wit) {
    return Check{name, v == TriBool::yes ? "pass" : (v == TriBool::no ? "fail" : "inconclusive"),
                 wit};
}

} // namespace

CuspExample example_burchnall_chaundy(int prec, int window_floor) {
    int p_in = prec + 8;
    XSeries one_minus_x2 = XSeries::constant(Rat(1), p_in) - XSeries::variable(2, p_in);
    XSeries g = one_minus_x2.invert_unit();
    XSeries g2 = g * g, g3 = g2 * g;

    CuspExample ex;
    ex.p = EPlusOp::d2_power(2) + EPlusOp::from_xseries(g2.scaled(Rat(-2)));
    ex.q = EPlusOp::d2_power(3) + EPlusOp::from_d1(D1Op::from_xseries(g2.scaled(Rat(-3))), 1) +
           EPlusOp::from_xseries(g3.scaled(Rat(-3)));

    ex.report.push_back(check_zero_to("commutator_pq", commutator(ex.p, ex.q), prec, window_floor));
    EPlusOp rel = eplus_mul(ex.q, ex.q) - eplus_pow(ex.p, 3);
    ex.report.push_back(check_zero_to("q2_minus_p3", rel, prec, window_floor));

    // The associated subspace: z1^{-i} (1 + z2) and z1^{-i} z2^{-j}.
    int I = 2, J = std::max(4, -window_floor);
    std::vector<ZSeries> gens;
    for (int i = 0; i <= I; ++i) {
        ZSeries head = ZSeries::monomial(i, 0, Rat(1));
        head.add_term(i, 1, Rat(1));
        gens.push_back(head);
        for (int j = 1; j <= J; ++j) gens.push_back(ZSeries::monomial(i, -j, Rat(1)));
    }
    ex.w = echelon_basis(gens, I, J);
    {
        bool ok = true;
        std::ostringstream os;
        // support rows: w_{0,0} = 1 + z2, w_{0,j} = z2^{-j}
        ZSeries w00 = ex.w.row(0, 0);
        ZSeries expect = ZSeries::monomial(0, 0, Rat(1));
        expect.add_term(0, 1, Rat(1));
        if (!ZSeries::agree_on_claims(w00, expect)) {
            ok = false;
            os << "w_{0,0} != 1 + z2";
        }
        for (int j = 1; j <= J && ok; ++j) {
            if (!ZSeries::agree_on_claims(ex.w.row(0, j), ZSeries::monomial(0, -j, Rat(1)))) {
                ok = false;
                os << "w_{0," << j << "} != z2^-" << j;
            }
        }
        ex.report.push_back(Check{"subspace_rows", ok ? "pass" : "fail", os.str()});
    }

    // Reconstruction roundtrip: the dressed square returns p.
    {
        int Ir = 5, Jr = std::min(J + 2, 8);
        std::vector<ZSeries> gens2;
        for (int i = 0; i <= Ir; ++i) {
            ZSeries head = ZSeries::monomial(i, 0, Rat(1));
            head.add_term(i, 1, Rat(1));
            gens2.push_back(head);
            for (int j = 1; j <= Jr; ++j) gens2.push_back(ZSeries::monomial(i, -j, Rat(1)));
        }
        SubspaceW w2 = echelon_basis(gens2, Ir, Jr);
        EPlusOp s = reconstruct_s(w2);
        EPlusOp conj = conjugate_by(s, EPlusOp::d2_power(2), window_floor);
        // compare on the joint guaranteed region
        bool ok = EPlusOp::agree_on_claims(conj, ex.p);
        bool x1free = true;
        for (const auto& [sl, d] : s.slots())
            if (!d.d_x(1).is_zero()) x1free = false;
        std::string wit;
        if (!ok) wit = "dressed d2^2 does not match p";
        if (!x1free) wit += " / dressing operator depends on x1";
        ex.report.push_back(Check{"dressing_roundtrip", ok && x1free ? "pass" : "fail", wit});
    }
    return ex;
}

ToricExample example_toric(int prec, int window_floor) {
    int p_in = prec + 6;
    XSeries one_minus_x2 = XSeries::constant(Rat(1), p_in) - XSeries::variable(2, p_in);
    XSeries g = one_minus_x2.invert_unit();
    XSeries g2 = g * g, g3 = g2 * g;
    D1Op E = op_exp(-D1Op::from_xseries(XSeries::variable(1, p_in)).shifted(1));

    ToricExample ex;
    D1Op p0 = d1_mul(D1Op::from_xseries(g2.scaled(Rat(-2))), E);
    ex.p = EPlusOp::d2_power(2) + EPlusOp::from_d1(p0, 0);
    D1Op q0 = d1_mul(D1Op::from_xseries(g), E).shifted(1);
    ex.q = EPlusOp::monomial_op(1, 1) + EPlusOp::from_d1(q0, 0);
    D1Op pp1 = d1_mul(D1Op::from_xseries(g2.scaled(Rat(-3))), E);
    D1Op pp0 = d1_mul(D1Op::from_xseries(g3.scaled(Rat(-3))), E);
    ex.pp = EPlusOp::d2_power(3) + EPlusOp::from_d1(pp1, 1) + EPlusOp::from_d1(pp0, 0);

    ex.report.push_back(check_zero_to("commutator_pq", commutator(ex.p, ex.q), prec, window_floor));
    ex.report.push_back(
        check_zero_to("commutator_ppp", commutator(ex.p, ex.pp), prec, window_floor));
    ex.report.push_back(
        check_zero_to("commutator_qpp", commutator(ex.q, ex.pp), prec, window_floor));

    ex.report.push_back(check_cert("cone_p", check_A_self(ex.p, Rat(1))));
    ex.report.push_back(check_cert("cone_q", check_A_self(ex.q, Rat(1))));
    ex.report.push_back(check_cert("cone_pp", check_A_self(ex.pp, Rat(1))));

    // Stabilizer of the subspace by the transported images d2^2, d1 d2, d2^3.
    {
        int I = 6, J = 6;
        std::vector<ZSeries> gens;
        ZSeries head = ZSeries::monomial(0, 0, Rat(1));
        head.add_term(0, 1, Rat(1));
        gens.push_back(head);
        for (int i = 1; i <= I + J; ++i)
            for (int j = 0; j <= i; ++j) gens.push_back(ZSeries::monomial(j, j - i, Rat(1)));
        SubspaceW w = echelon_basis(gens, I, J);
        StabilizerReport s1 = stabilizes(w, EPlusOp::d2_power(2));
        StabilizerReport s2 = stabilizes(w, EPlusOp::monomial_op(1, 1));
        StabilizerReport s3 = stabilizes(w, EPlusOp::d2_power(3));
        ex.report.push_back(check_tri("stabilizer_t-2", s1.verdict, s1.detail));
        ex.report.push_back(check_tri("stabilizer_ut-2", s2.verdict, s2.detail));
        ex.report.push_back(check_tri("stabilizer_t-3", s3.verdict, s3.detail));
    }
    return ex;
}

CalogeroExample example_calogero_symbols(const XSeries& pp_series, const Rat& coupling_m) {
    int prec = pp_series.prec();
    if (prec >= kPrecExact) prec = 12;
    Rat mm1 = coupling_m * (coupling_m + Rat(1));

    // potential series in one variable, evaluated at y = x1 - x2
    XSeries y = XSeries::variable(1, prec) - XSeries::variable(2, prec);
    XSeries pot(prec);
    {
        XSeries ypow = XSeries::constant(Rat(1), prec);
        int last = 0;
        for (const auto& [e, c] : pp_series.terms()) {
            if (e.j != 0)
                throw math_error("potential series must be given in the first variable only");
            while (last < e.i) {
                ypow = ypow * y;
                ++last;
            }
            pot = pot + ypow.scaled(c);
        }
    }

    CalogeroExample ex;
    ex.l1 = EPlusOp::monomial_op(1, 0) + EPlusOp::d2_power(1);
    ex.l2 = EPlusOp::from_d1(D1Op::d1_power(2, kPrecExact), 0) + EPlusOp::d2_power(2) +
            EPlusOp::from_xseries(pot.scaled(-mm1));

    Mat2 m{Rat(1), Rat(0), Rat(1), Rat(1)}; // x1 = x1' + x2', x2 = x2'
    ex.l1_new = linear_change(ex.l1, m);
    ex.l2_new = linear_change(ex.l2, m);

    // l1 becomes the pure second derivation
    {
        bool ok = EPlusOp::agree_on_claims(ex.l1_new, EPlusOp::d2_power(1));
        ex.report.push_back(Check{"l1_image", ok ? "pass" : "fail", ok ? "" : ex.l1_new.str()});
    }
    // symbol of the transformed l2
    {
        SymbolPoly want;
        want.add_term(2, 0, Rat(2));
        want.add_term(1, 1, Rat(-2));
        want.add_term(0, 2, Rat(1));
        bool ok = false;
        std::string wit;
        try {
            SymbolPoly got = principal_symbol(ex.l2_new);
            ok = got == want;
            if (!ok) wit = got.str();
        } catch (const math_error& e) {
            wit = e.what();
        }
        ex.report.push_back(Check{"l2_symbol", ok ? "pass" : "fail", wit});
    }
    // potential transports to a function of x1' alone
    {
        XSeries moved = pot.linear_substitute(m);
        bool ok = true;
        for (const auto& [e, c] : moved.terms())
            if (e.j != 0) ok = false;
        ex.report.push_back(Check{"potential_x1_only", ok ? "pass" : "fail", ""});
    }
    // naturality of the change on the commutator
    {
        EPlusOp lhs = commutator(ex.l1_new, ex.l2_new);
        EPlusOp rhs = linear_change(commutator(ex.l1, ex.l2), m);
        bool ok = EPlusOp::agree_on_claims(lhs, rhs);
        ex.report.push_back(Check{"commutator_naturality", ok ? "pass" : "fail", ""});
    }
    // the quasi-elliptic pair in the new coordinates
    {
        EPlusOp l2p = ex.l2_new - eplus_mul(ex.l1_new, ex.l1_new);
        bool orders = false;
        try {
            orders = ex.l1_new.gamma_order() == GammaDeg{0, 1} &&
                     l2p.gamma_order() == GammaDeg{1, 1};
        } catch (const math_error&) {
        }
        GrowthCert c1 = check_A_self(ex.l1_new, Rat(1));
        GrowthCert c2 = check_A_self(l2p, Rat(1));
        bool certs = c1.verdict == Verdict::holds && c2.verdict == Verdict::holds;
        ex.report.push_back(
            Check{"quasi_elliptic_pair", orders && certs ? "pass" : "fail", ""});
    }
    return ex;
}

} // namespace psdo
