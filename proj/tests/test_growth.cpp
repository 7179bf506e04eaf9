#include "psdo/growth.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace psdo;
using namespace psdo::testing;

namespace {

// Random operator built to satisfy the cone condition at (alpha, k, l) with
// exactly-zero tails, so certificates are conclusive.
EPlusOp rand_cone_op(Rng& rng, const Rat& alpha, long k, long l, int prec) {
    EPlusOp r(kPrecExact);
    std::uniform_int_distribution<int> jd(static_cast<int>(l) - 2, static_cast<int>(l));
    std::uniform_int_distribution<int> id(0, static_cast<int>(k) + 2);
    for (int t = 0; t < 4; ++t) {
        int j = jd(rng), i = id(rng);
        Rat bound = Rat(i) - alpha * Rat(l - j) - Rat(k);
        int need = bound.sign() > 0 ? static_cast<int>(ceil_to_long(bound)) : 0;
        if (need >= prec) continue;
        XSeries c = rand_xseries(rng, prec, 2, need);
        if (c.is_zero()) continue;
        D1Op d = r.slot(j);
        d.set_coeff(i, d.coeff(i) + c);
        r.set_slot(j, d);
    }
    // guarantee the anchor is the Gamma-order
    D1Op top = r.slot(static_cast<int>(l));
    top.set_coeff(static_cast<int>(k), XSeries::constant(Rat(1), prec));
    r.set_slot(static_cast<int>(l), top);
    return r;
}

D1Op rand_aa_op(Rng& rng, long f, int prec) {
    D1Op r(prec);
    std::uniform_int_distribution<int> sd(0, static_cast<int>(f) + 2);
    for (int t = 0; t < 3; ++t) {
        int s = sd(rng);
        int need = std::max(0, s - static_cast<int>(f));
        if (need >= prec) continue;
        XSeries c = rand_xseries(rng, prec, 2, need);
        r.set_coeff(s, r.coeff(s) + c);
    }
    return r;
}

} // namespace

TEST_CASE("cone checks") {
    CHECK(check_A(EPlusOp::monomial_op(1, 1), Rat(1), 1, 1).verdict == Verdict::holds);

    D1Op e = op_exp(D1Op::from_xseries(-XSeries::variable(1, 9)).shifted(1));
    CHECK(check_A(EPlusOp::from_d1(e, 0), Rat(1), 0, 0).verdict == Verdict::holds);

    EPlusOp bad = EPlusOp::from_d1(D1Op::from_xseries(XSeries::variable(1, 9)).shifted(2), 0);
    GrowthCert c = check_A(bad, Rat(1), 0, 0);
    CHECK(c.verdict == Verdict::fails);
    REQUIRE(c.witness.has_value());
    CHECK(c.witness->d1_deg == 2);
    CHECK(c.witness->ord == 1);
    CHECK(c.witness->needed == 2);
}

TEST_CASE("strong and super-strong") {
    EPlusOp a = EPlusOp::d2_power(2) +
                EPlusOp::from_d1(D1Op::from_xseries(XSeries::variable(2, 9)), 1);
    CHECK(check_super_strong(a, Rat(1), 0, 2).verdict == Verdict::holds);

    D1Op e = op_exp(D1Op::from_xseries(-XSeries::variable(1, 9)).shifted(1));
    CHECK(check_strong(EPlusOp::from_d1(e, 0), Rat(1), 0, 0).verdict == Verdict::fails);

    // implication chain on random super-strong operators
    Rng rng(23);
    for (int t = 0; t < 30; ++t) {
        EPlusOp p = rand_cone_op(rng, Rat(1), 1, 2, 7);
        if (check_super_strong(p, Rat(1), 1, 2).verdict == Verdict::holds) {
            CHECK(check_strong(p, Rat(1), 1, 2).verdict == Verdict::holds);
        }
        if (check_strong(p, Rat(1), 1, 2).verdict == Verdict::holds) {
            CHECK(check_A(p, Rat(1), 1, 2).verdict == Verdict::holds);
        }
    }
}

TEST_CASE("full order and anchor search") {
    CHECK(ford(EPlusOp::monomial_op(1, 1), Rat(1)) == Rat(2));
    CHECK(ford(EPlusOp::d2_power(3), Rat(1)) == Rat(3));
    CHECK(ford(EPlusOp::monomial_op(2, 1), Rat(2)) == Rat(2));
    CHECK_THROWS_AS(ford(EPlusOp::d2_power(1), Rat(0)), math_error);

    GrowthCert c1 = in_Pi_alpha(EPlusOp::d2_power(-1), Rat(1));
    CHECK(c1.verdict == Verdict::holds);
    CHECK(c1.anchor_k == 0);
    CHECK(c1.anchor_l == -1);

    GrowthCert c2 = in_Pi_alpha(EPlusOp::monomial_op(3, 0), Rat(1));
    CHECK(c2.verdict == Verdict::holds);
    CHECK(Rat(c2.anchor_k) + Rat(c2.anchor_l) == Rat(3));

    Rng rng(29);
    for (int t = 0; t < 20; ++t) {
        EPlusOp p = rand_pdo(rng, 7, 2, 2);
        CHECK(in_Pi_alpha(p, Rat(1)).verdict != Verdict::fails);
    }
}

TEST_CASE("product closure of the cone condition") {
    Rng rng(31);
    std::vector<Rat> alphas{Rat(1), Rat(3, 2), Rat(2)};
    for (int t = 0; t < 60; ++t) {
        Rat alpha = alphas[t % alphas.size()];
        long k1 = t % 2, l1 = 1 + t % 2, k2 = (t + 1) % 2, l2 = 1;
        EPlusOp p1 = rand_cone_op(rng, alpha, k1, l1, 7);
        EPlusOp p2 = rand_cone_op(rng, alpha, k2, l2, 7);
        REQUIRE(check_A(p1, alpha, k1, l1).verdict == Verdict::holds);
        REQUIRE(check_A(p2, alpha, k2, l2).verdict == Verdict::holds);
        GrowthCert cp = check_A(eplus_mul(p1, p2), alpha, k1 + k2, l1 + l2);
        CHECK(cp.verdict != Verdict::fails);
    }
}

TEST_CASE("single-variable closure") {
    Rng rng(37);
    for (int t = 0; t < 40; ++t) {
        long f1 = t % 3, f2 = (t + 1) % 3;
        D1Op a = rand_aa_op(rng, f1, 7);
        D1Op b = rand_aa_op(rng, f2, 7);
        REQUIRE(check_AA(a, Rat(f1)).verdict == Verdict::holds);
        REQUIRE(check_AA(b, Rat(f2)).verdict == Verdict::holds);
        CHECK(check_AA(d1_mul(a, b), Rat(f1 + f2)).verdict != Verdict::fails);
    }
}

TEST_CASE("inverse closure") {
    Rng rng(41);
    for (int t = 0; t < 20; ++t) {
        EPlusOp s = EPlusOp::one(7);
        // strictly lower cone-certified tail at anchor (0,0)
        for (int d = 1; d <= 3; ++d) {
            D1Op c(7);
            std::uniform_int_distribution<int> id(0, d);
            int i = id(rng);
            int need = std::max(0, i + d > d ? i : 0); // bound i - alpha*d
            need = std::max(0, i - d);
            XSeries coeff = rand_xseries(rng, 7, 2, need);
            c.set_coeff(i, coeff);
            if (!c.is_zero()) s.set_slot(-d, c);
        }
        REQUIRE(check_A(s, Rat(1), 0, 0).verdict == Verdict::holds);
        EPlusOp inv = invert_monic(s, -4);
        CHECK(check_A(inv, Rat(1), 0, 0).verdict != Verdict::fails);
    }
}

TEST_CASE("monotonicity and anchor shift") {
    Rng rng(43);
    for (int t = 0; t < 20; ++t) {
        EPlusOp p = rand_cone_op(rng, Rat(1), 1, 1, 7);
        REQUIRE(check_A(p, Rat(1), 1, 1).verdict == Verdict::holds);
        CHECK(check_A(p, Rat(2), 1, 1).verdict == Verdict::holds);
        // anchors with the same full order certify as well: (k,l) -> (k+a, l-a)
        CHECK(check_A(p, Rat(1), 2, 0).verdict == Verdict::holds);
    }
}

TEST_CASE("seeded violators never pass") {
    // Stored terms always sit below the precision, so a violating
    // coefficient is either visible (definitive failure) or entirely
    // dropped from the truncated object; the checks may never say holds
    // on a visible violation.
    Rng rng(47);
    int not_passed = 0;
    for (int t = 0; t < 60; ++t) {
        EPlusOp p = rand_cone_op(rng, Rat(1), 0, 1, 7);
        D1Op d = p.slot(0);
        int q = 3 + t % 3;                          // bound is q - 1
        XSeries viol = rand_xseries(rng, 7, 1, 0);  // order below the bound
        viol.add_term(0, 0, Rat(1));
        d.set_coeff(q, viol);
        p.set_slot(0, d);
        GrowthCert c = check_A(p, Rat(1), 0, 1);
        CHECK(c.verdict != Verdict::holds);
        CHECK(c.verdict == Verdict::fails);
        REQUIRE(c.witness.has_value());
        CHECK(c.witness->needed > c.witness->ord);
        if (c.verdict != Verdict::holds) ++not_passed;
    }
    CHECK(not_passed == 60);
}
