#include "psdo/ba.hpp"

#include <climits>
#include <sstream>

namespace psdo {

std::string BAFunction::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, zs] : body_) {
        if (!first) os << " + ";
        first = false;
        os << "x1^" << e.i << "*x2^" << e.j << "*(" << zs.str() << ")";
    }
    if (first) os << "0";
    os << " * e^eps";
    return os.str();
}

BAFunction apply_to_exponential(const EPlusOp& t) {
    BAFunction r;
    long bad = LONG_MIN / 4;
    if (t.floor_tail() == Tail::truncated) bad = t.window_lo();
    for (const auto& [s, d] : t.slots()) {
        for (const auto& [q, f] : d.coeffs()) {
            for (const auto& [e, c] : f.terms()) r.add_term(e.i, e.j, q, -s, c);
        }
    }
    if (bad > LONG_MIN / 8) r.set_tail(static_cast<int>(-bad + 1));
    return r;
}

ZSeries eigenvalue_check(const EPlusOp& p, const EPlusOp& s, int window_floor) {
    EPlusOp conj = conjugate_by(s, p, window_floor);
    if (!has_constant_coefficients(conj))
        throw math_error("conjugate is not constant-coefficient: no eigenvalue series");
    return reduce_to_v(conj);
}

SatoWilsonRHS sato_wilson_rhs(const D1Op& s1) {
    D1Op sx1 = s1.d_x(1);
    D1Op sx2 = s1.d_x(2);
    D1Op sx22 = sx2.d_x(2);
    D1Op sx222 = sx22.d_x(2);
    D1Op sx12 = sx1.d_x(2);

    D1Op t1 = sx222.scaled(Rat(1, 4)) - d1_mul(sx2, sx2).scaled(Rat(3, 2));
    D1Op t2 = -d1_mul(sx2, sx1) - d1_mul(sx22, D1Op::d1_power(1, sx22.prec())).scaled(Rat(1, 2));
    D1Op t3 = -d1_mul(sx1, sx1) - d1_mul(sx12, D1Op::d1_power(1, sx12.prec())) -
              d1_mul(sx2, D1Op::d1_power(2, sx2.prec()));
    return SatoWilsonRHS{EPlusOp::from_d1(t1, 0), EPlusOp::from_d1(t2, 0),
                         EPlusOp::from_d1(t3, 0)};
}

} // namespace psdo
