#include "psdo/symbols.hpp"

#include <sstream>

namespace psdo {

std::string SymbolPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (e.i) os << "*xi1^" << e.i;
        if (e.j) os << "*xi2^" << e.j;
    }
    return os.str();
}

bool SymbolField::agree_below(const SymbolField& o, int p) const {
    for (const auto& [e, c] : t_)
        if (!XSeries::agree_below(c, o.coeff(e.i, e.j), p)) return false;
    for (const auto& [e, c] : o.t_)
        if (!XSeries::agree_below(c, coeff(e.i, e.j), p)) return false;
    return true;
}

long total_order(const EPlusOp& p) {
    if (p.is_pdo() == TriBool::no) throw math_error("total order defined for differential operators only");
    long m = -1;
    for (const auto& [s, d] : p.slots()) {
        if (s < 0 || d.is_zero()) continue;
        m = std::max(m, static_cast<long>(d.deg1()) + s);
    }
    if (m < 0) throw math_error("zero operator has no order");
    return m;
}

SymbolField symbol_at(const EPlusOp& p, long m) {
    SymbolField r;
    for (const auto& [s, d] : p.slots()) {
        if (s < 0) continue;
        if (s <= m) r.note_prec(d.prec()); // absent coefficients claim no more
        for (const auto& [q, f] : d.coeffs()) {
            if (q + s == m) r.add_term(q, s, f);
        }
    }
    if (p.zero_prec() < kPrecExact) r.note_prec(p.zero_prec());
    return r;
}

bool check_constant_symbol(const EPlusOp& p) {
    SymbolField top = symbol_at(p, total_order(p));
    for (const auto& [e, c] : top.terms())
        if (!c.is_constant()) return false;
    return true;
}

SymbolPoly principal_symbol(const EPlusOp& p) {
    if (p.is_pdo() == TriBool::no)
        throw math_error("principal symbol defined for differential operators only");
    SymbolField top = symbol_at(p, total_order(p));
    SymbolPoly r;
    for (const auto& [e, c] : top.terms()) {
        if (!c.is_constant())
            throw math_error("principal symbol has a non-constant coefficient");
        r.add_term(e.i, e.j, c.constant_term());
    }
    return r;
}

SymbolField poisson_bracket(const SymbolField& f, const SymbolField& g) {
    SymbolField r;
    // df/dxi_v: shift the xi-exponent down and scale; d_v acts on coefficients.
    auto accumulate = [&r](const SymbolField& u, const SymbolField& v, const Rat& sign) {
        for (const auto& [eu, cu] : u.terms()) {
            for (int axis = 1; axis <= 2; ++axis) {
                int de = axis == 1 ? eu.i : eu.j;
                if (de == 0) continue;
                XSeries du = cu.scaled(Rat(de));
                int e1 = eu.i - (axis == 1 ? 1 : 0);
                int e2 = eu.j - (axis == 2 ? 1 : 0);
                for (const auto& [ev, cv] : v.terms()) {
                    XSeries dv = cv.d_dx(axis);
                    if (dv.is_zero() && dv.prec() >= kPrecExact) continue;
                    r.add_term(e1 + ev.i, e2 + ev.j, (du * dv).scaled(sign));
                }
            }
        }
    };
    accumulate(f, g, Rat(1));
    accumulate(g, f, Rat(-1));
    return r;
}

SymbolPoly poisson_bracket(const SymbolPoly& f, const SymbolPoly& g) {
    // Constant coefficients: both sums vanish termwise.
    (void)f;
    (void)g;
    return SymbolPoly{};
}

EPlusOp linear_change(const EPlusOp& p, const Mat2& m) {
    if (p.is_pdo() == TriBool::no)
        throw math_error("coordinate change defined for differential operators only");
    Mat2 minv = m.inverse(); // throws when singular

    // Images of the derivations: d_i -> sum_j minv[i][j] d'_j; constant
    // combinations need no Leibniz when kept to the right of coefficients.
    auto d1_image = [&minv](int prec) {
        EPlusOp r = EPlusOp::monomial_op(1, 0, prec).scaled(minv.a11);
        return r + EPlusOp::monomial_op(0, 1, prec).scaled(minv.a12);
    };
    auto d2_image = [&minv](int prec) {
        EPlusOp r = EPlusOp::monomial_op(1, 0, prec).scaled(minv.a21);
        return r + EPlusOp::monomial_op(0, 1, prec).scaled(minv.a22);
    };

    // Internal consistency: the images of d_i and x_j must satisfy
    // [image(d_i), image(x_j)] = delta_ij.
    {
        int tp = 8;
        EPlusOp X1 = EPlusOp::from_xseries(XSeries::variable(1, tp).linear_substitute(m));
        EPlusOp X2 = EPlusOp::from_xseries(XSeries::variable(2, tp).linear_substitute(m));
        EPlusOp D1 = d1_image(tp), D2 = d2_image(tp);
        auto is_delta = [tp](const EPlusOp& c, const Rat& want) {
            return EPlusOp::agree_on_claims(c, EPlusOp::from_xseries(XSeries::constant(want, tp)));
        };
        if (!is_delta(commutator(D1, X1), Rat(1)) || !is_delta(commutator(D2, X2), Rat(1)) ||
            !is_delta(commutator(D1, X2), Rat(0)) || !is_delta(commutator(D2, X1), Rat(0)))
            throw math_error("coordinate change does not preserve commutation relations");
    }

    bool any = false;
    EPlusOp acc(kPrecExact);
    for (const auto& [s, d] : p.slots()) {
        if (s < 0 && !d.is_zero())
            throw math_error("coordinate change defined for differential operators only");
        for (const auto& [q, f] : d.coeffs()) {
            if (f.is_zero()) continue;
            int prec = f.prec();
            EPlusOp term = EPlusOp::from_xseries(f.linear_substitute(m));
            EPlusOp dpart = EPlusOp::one(kPrecExact);
            EPlusOp D1 = d1_image(prec), D2 = d2_image(prec);
            for (int t = 0; t < q; ++t) dpart = eplus_mul(dpart, D1);
            for (int t = 0; t < s; ++t) dpart = eplus_mul(dpart, D2);
            term = eplus_mul(term, dpart);
            if (!any) {
                acc = term;
                any = true;
            } else {
                acc = acc + term;
            }
        }
    }
    return any ? acc : EPlusOp(p.zero_prec());
}

} // namespace psdo
