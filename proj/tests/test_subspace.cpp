#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace psdo;
using namespace psdo::testing;

namespace {

std::vector<ZSeries> w0_monomials(int I, int J) {
    std::vector<ZSeries> v;
    for (int i = 0; i <= I; ++i)
        for (int j = 0; j <= J; ++j) v.push_back(ZSeries::monomial(i, -j, Rat(1)));
    return v;
}

std::vector<ZSeries> cusp_generators(int I, int J) {
    std::vector<ZSeries> v;
    for (int i = 0; i <= I; ++i) {
        ZSeries head = ZSeries::monomial(i, 0, Rat(1));
        head.add_term(i, 1, Rat(1));
        v.push_back(head);
        for (int j = 1; j <= J; ++j) v.push_back(ZSeries::monomial(i, -j, Rat(1)));
    }
    return v;
}

} // namespace

TEST_CASE("echelon basis") {
    SubspaceW w0 = echelon_basis(w0_monomials(3, 3), 3, 3);
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j)
            CHECK(ZSeries::agree_on_claims(w0.row(i, j), ZSeries::monomial(i, -j, Rat(1))));

    SubspaceW cusp = echelon_basis(cusp_generators(2, 4), 2, 4);
    ZSeries w00 = ZSeries::monomial(0, 0, Rat(1));
    w00.add_term(0, 1, Rat(1));
    CHECK(ZSeries::agree_on_claims(cusp.row(0, 0), w00));
    CHECK(ZSeries::agree_on_claims(cusp.row(0, 2), ZSeries::monomial(0, -2, Rat(1))));
}

TEST_CASE("uniqueness under re-presentation and idempotence") {
    Rng rng(5);
    SubspaceW base = echelon_basis(cusp_generators(2, 4), 2, 4);
    std::vector<ZSeries> gens = cusp_generators(2, 4);
    // random invertible recombination of the generators
    for (int t = 0; t < 40; ++t) {
        std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
        std::size_t a = pick(rng), b = pick(rng);
        if (a == b) continue;
        gens[a] = gens[a] + gens[b].scaled(rand_rat(rng));
    }
    std::shuffle(gens.begin(), gens.end(), rng);
    SubspaceW again = echelon_basis(gens, 2, 4);
    for (const auto& [key, row] : base.rows())
        CHECK(ZSeries::agree_on_claims(row, again.row(key.first, key.second)));

    // idempotence: rerunning on the output reproduces it
    SubspaceW third = echelon_basis(again.elements(), 2, 4);
    for (const auto& [key, row] : again.rows())
        CHECK(ZSeries::agree_on_claims(row, third.row(key.first, key.second)));
}

TEST_CASE("support defect reporting") {
    std::vector<ZSeries> gens = w0_monomials(2, 2);
    // remove one required monomial
    gens.erase(std::remove_if(gens.begin(), gens.end(),
                              [](const ZSeries& v) {
                                  auto [e, c] = v.lt();
                                  return e == ZExp{1, -1};
                              }),
               gens.end());
    try {
        echelon_basis(gens, 2, 2);
        CHECK(false);
    } catch (const math_error& e) {
        CHECK(std::string(e.what()).find("z1^-1*z2^-1") != std::string::npos);
    }

    // a pivot with positive z2 exponent is not a big-cell support
    std::vector<ZSeries> bad = w0_monomials(1, 1);
    bad.push_back(ZSeries::monomial(0, 2, Rat(1)));
    CHECK_THROWS_AS(echelon_basis(bad, 1, 1), math_error);
}

TEST_CASE("stabilizer checks") {
    SubspaceW w0 = echelon_basis(w0_monomials(4, 4), 4, 4);

    CHECK(stabilizes(w0, EPlusOp::monomial_op(1, 1)).verdict == TriBool::yes);

    StabilizerReport neg = stabilizes(w0, EPlusOp::d2_power(-1));
    CHECK(neg.verdict == TriBool::no);

    D1Op e = op_exp(D1Op::from_xseries(-XSeries::variable(1, 9)).shifted(1));
    CHECK(stabilizes(w0, EPlusOp::from_d1(e, 0)).verdict == TriBool::yes);

    // sampled both directions: finite differential operators stabilize,
    // negative-slot contaminations fail
    Rng rng(17);
    for (int t = 0; t < 20; ++t) {
        EPlusOp p = rand_pdo(rng, 9, 2, 2);
        CHECK(stabilizes(w0, p).verdict == TriBool::yes);

        EPlusOp bad = p + EPlusOp::from_d1(D1Op::one(9).scaled(rand_rat_nonzero(rng)), -1);
        CHECK(stabilizes(w0, bad).verdict == TriBool::no);
    }
}
