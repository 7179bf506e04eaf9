#include "psdo/growth.hpp"

#include <algorithm>

namespace psdo {

namespace {

// Required lower bound on ord_M(p_{ij}) for the cone at (alpha, k, l):
// max(0, i - alpha*(l - j) - k), as an exact rational.
Rat cone_bound(const Rat& alpha, long k, long l, long i, long j) {
    Rat b = Rat(i) - alpha * Rat(l - j) - Rat(k);
    return b.sign() > 0 ? b : Rat(0);
}

// Verdict for one coefficient with knowledge-honest order `o` against `need`.
// Exact orders decide; floors certify only when the floor reaches the bound.
void judge(Verdict& v, std::optional<GrowthWitness>& w, const MOrd& o, const Rat& need, int i,
           int j) {
    if (need.sign() <= 0) return;
    long needed = ceil_to_long(need);
    if (o.finite) {
        if (Rat(o.v) >= need) return;
        v = Verdict::fails;
        w = GrowthWitness{i, j, o.v, needed, false};
        return;
    }
    if (Rat(o.v) >= need) return; // zero to a depth at least the bound
    if (v == Verdict::holds) {
        v = Verdict::inconclusive;
        if (!w) w = GrowthWitness{i, j, o.v, needed, true};
    }
}

GrowthCert check_cone(const EPlusOp& p, const Rat& alpha, long k, long l, CondKind kind) {
    GrowthCert cert{alpha, k, l, kind, Verdict::holds, std::nullopt};
    for (const auto& [j, d] : p.slots()) {
        if (d.is_zero()) continue; // zero at this truncation
        int qmax = d.deg1();
        for (int q = 0; q <= qmax; ++q) {
            XSeries f = d.coeff(q);
            Rat need = cone_bound(alpha, k, l, q, j);
            if (kind == CondKind::plain) {
                MOrd o = f.is_zero() ? MOrd{false, d.prec()} : f.ord_m();
                judge(cert.verdict, cert.witness, o, need, q, j);
            } else {
                // strong: vanishing outside the cone, on the stored object
                if (need.sign() > 0 && !f.is_zero()) {
                    cert.verdict = Verdict::fails;
                    cert.witness = GrowthWitness{q, j, f.ord_m().v, ceil_to_long(need), false};
                }
            }
            if (cert.verdict == Verdict::fails) return cert;
        }
        if (kind == CondKind::super_strong) {
            // the coefficient at the cone boundary must be constant
            Rat edge = alpha * Rat(l - j) + Rat(k);
            if (edge.is_integer() && edge.sign() >= 0) {
                long q = edge.num_long();
                XSeries f = d.coeff(static_cast<int>(q));
                if (!f.is_constant()) {
                    cert.verdict = Verdict::fails;
                    cert.witness = GrowthWitness{static_cast<int>(q), j, 0, 0, false};
                    return cert;
                }
            }
        }
    }
    return cert;
}

} // namespace

GrowthCert check_A(const EPlusOp& p, const Rat& alpha, long k, long l) {
    return check_cone(p, alpha, k, l, CondKind::plain);
}

GrowthCert check_strong(const EPlusOp& p, const Rat& alpha, long k, long l) {
    return check_cone(p, alpha, k, l, CondKind::strong);
}

GrowthCert check_super_strong(const EPlusOp& p, const Rat& alpha, long k, long l) {
    GrowthCert c = check_cone(p, alpha, k, l, CondKind::super_strong);
    if (c.verdict != Verdict::fails) {
        GrowthCert b = check_cone(p, alpha, k, l, CondKind::strong);
        if (b.verdict == Verdict::fails) {
            b.kind = CondKind::super_strong;
            return b;
        }
        if (b.verdict == Verdict::inconclusive && c.verdict == Verdict::holds)
            c.verdict = Verdict::inconclusive;
    }
    return c;
}

GrowthCert check_A_self(const EPlusOp& p, const Rat& alpha) {
    GammaDeg g = p.gamma_order();
    return check_A(p, alpha, g.d1, g.d2);
}

namespace {
AACert check_aa_kind(const D1Op& p, const Rat& f, CondKind kind) {
    AACert cert{f, Verdict::holds, std::nullopt};
    int qmax = p.deg1();
    for (int q = 0; q <= qmax; ++q) {
        XSeries c = p.coeff(q);
        Rat need = Rat(q) - f;
        if (kind == CondKind::plain) {
            if (need.sign() <= 0) continue;
            MOrd o = c.is_zero() ? MOrd{false, p.prec()} : c.ord_m();
            judge(cert.verdict, cert.witness, o, need, q, 0);
        } else {
            if (need.sign() > 0 && !c.is_zero()) {
                cert.verdict = Verdict::fails;
                cert.witness = GrowthWitness{q, 0, c.ord_m().v, ceil_to_long(need), false};
            }
        }
        if (cert.verdict == Verdict::fails) return cert;
    }
    if (kind == CondKind::super_strong && f.is_integer() && f.sign() >= 0) {
        XSeries c = p.coeff(static_cast<int>(f.num_long()));
        if (!c.is_constant()) {
            cert.verdict = Verdict::fails;
            cert.witness = GrowthWitness{static_cast<int>(f.num_long()), 0, 0, 0, false};
        }
    }
    return cert;
}
} // namespace

AACert check_AA(const D1Op& p, const Rat& f) { return check_aa_kind(p, f, CondKind::plain); }
AACert check_BB(const D1Op& p, const Rat& f) { return check_aa_kind(p, f, CondKind::strong); }
AACert check_CC(const D1Op& p, const Rat& f) { return check_aa_kind(p, f, CondKind::super_strong); }

Rat ford(const EPlusOp& p, const Rat& alpha) {
    if (alpha.sign() <= 0) throw math_error("full order requires positive alpha");
    GammaDeg g = p.gamma_order();
    return Rat(g.d1) / alpha + Rat(g.d2);
}

GrowthCert in_Pi_alpha(const EPlusOp& p, const Rat& alpha) {
    if (p.is_zero()) {
        GrowthCert c{alpha, 0, 0, CondKind::plain, Verdict::holds, std::nullopt};
        return c;
    }
    // Constraint per coefficient: k + alpha*l >= q + alpha*j - ord(p_{qj}).
    bool any = false;
    Rat cstar(0);
    for (const auto& [j, d] : p.slots()) {
        for (const auto& [q, f] : d.coeffs()) {
            Rat c = Rat(q) + alpha * Rat(j) - Rat(f.ord_m().v);
            if (!any || c > cstar) cstar = c;
            any = true;
        }
    }
    long l0 = p.top_slot();
    Rat kq = cstar - alpha * Rat(l0);
    long k0 = kq.sign() > 0 ? ceil_to_long(kq) : 0;
    return check_A(p, alpha, k0, l0);
}

} // namespace psdo
