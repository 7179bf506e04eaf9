#include "psdo/examples.hpp"
#include "psdo/growth.hpp"
#include "psdo/json_io.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace psdo;
using namespace psdo::testing;

TEST_CASE("application to the exponential kernel") {
    BAFunction one = apply_to_exponential(EPlusOp::one(6));
    CHECK(one.at(0, 0).coeff(0, 0) == Rat(1));
    CHECK(one.body().size() == 1);

    BAFunction sq = apply_to_exponential(EPlusOp::d2_power(2));
    CHECK(sq.at(0, 0).coeff(0, -2) == Rat(1));

    EPlusOp t = EPlusOp::one(6) +
                EPlusOp::from_d1(D1Op::from_xseries(XSeries::variable(1, 6)), -1);
    BAFunction f = apply_to_exponential(t);
    CHECK(f.at(0, 0).coeff(0, 0) == Rat(1));
    CHECK(f.at(1, 0).coeff(0, 1) == Rat(1)); // x1 * z2
}

TEST_CASE("eigenvalue extraction") {
    ZSeries ev = eigenvalue_check(EPlusOp::d2_power(2), EPlusOp::one(8), -4);
    CHECK(ZSeries::agree_on_claims(ev, ZSeries::monomial(0, -2, Rat(1))));

    // non-constant conjugates are rejected
    EPlusOp p = EPlusOp::from_d1(D1Op::from_xseries(XSeries::variable(2, 8)), 0);
    CHECK_THROWS_AS(eigenvalue_check(p, EPlusOp::one(8), -4), math_error);
}

TEST_CASE("isospectral right-hand sides") {
    SatoWilsonRHS z = sato_wilson_rhs(D1Op::zero(8));
    CHECK(op_is_zero(z.t1));
    CHECK(op_is_zero(z.t2));
    CHECK(op_is_zero(z.t3));

    SatoWilsonRHS lin = sato_wilson_rhs(D1Op::from_xseries(XSeries::variable(2, 8)));
    CHECK(lin.t1.slot(0).coeff(0).constant_term() == Rat(-3, 2));
    CHECK(lin.t1.slot(0).coeff(0).is_constant());

    // the first dressing coefficient of the projection-kernel family
    int prec = 9;
    XSeries g = (XSeries::constant(Rat(1), prec) - XSeries::variable(2, prec)).invert_unit();
    D1Op e = op_exp(D1Op::from_xseries(-XSeries::variable(1, prec)).shifted(1));
    D1Op s1 = d1_mul(D1Op::from_xseries(g), e);
    SatoWilsonRHS r = sato_wilson_rhs(s1);
    // this seed is a stationary point of all three flows: the right-hand
    // sides vanish identically on their claimed regions
    CHECK(op_is_zero(r.t1));
    CHECK(op_is_zero(r.t2));
    CHECK(op_is_zero(r.t3));
    CHECK(r.t1.prec_at(0) >= prec - 4);
    // the slot coefficient of the dressing operator is cone-certified
    CHECK(check_AA(s1, Rat(1)).verdict == Verdict::holds);

    // a generic seed produces nonzero right-hand sides
    Rng rng(5);
    D1Op generic = rand_d1op(rng, prec, 1, 2);
    generic.set_coeff(0, generic.coeff(0) + XSeries::monomial(0, 2, Rat(1), prec));
    SatoWilsonRHS rg = sato_wilson_rhs(generic);
    CHECK_FALSE(op_is_zero(rg.t1));
}

TEST_CASE("cusp example report") {
    CuspExample ex = example_burchnall_chaundy(10, -6);
    for (const auto& c : ex.report) {
        INFO(c.name, ": ", c.status, " ", c.witness);
        CHECK(c.status == "pass");
    }
}

TEST_CASE("toric example report") {
    ToricExample ex = example_toric(8, -4);
    for (const auto& c : ex.report) {
        INFO(c.name, ": ", c.status, " ", c.witness);
        CHECK(c.status == "pass");
    }
}

TEST_CASE("calogero symbol report") {
    // placeholder potential: a generic truncated rational series
    XSeries pp(8);
    pp.add_term(0, 0, Rat(1, 4));
    pp.add_term(1, 0, Rat(-2, 3));
    pp.add_term(2, 0, Rat(5));
    pp.add_term(3, 0, Rat(1, 7));
    CalogeroExample ex = example_calogero_symbols(pp, Rat(1));
    for (const auto& c : ex.report) {
        INFO(c.name, ": ", c.status, " ", c.witness);
        CHECK(c.status == "pass");
    }
}

TEST_CASE("reports are reproducible") {
    ToricExample a = example_toric(7, -3);
    ToricExample b = example_toric(7, -3);
    CHECK(to_json(a.report).dump() == to_json(b.report).dump());
    CuspExample c = example_burchnall_chaundy(8, -4);
    CuspExample d = example_burchnall_chaundy(8, -4);
    CHECK(to_json(c.report).dump() == to_json(d.report).dump());
}
