#include "psdo/schur.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace psdo {

std::string UTSeries::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (e.a) os << "*u^" << e.a;
        if (e.b) os << "*t^" << e.b;
    }
    return os.str();
}

UTSeries operator*(const UTSeries& x, const UTSeries& y) {
    // Tail contamination: unknown high-b terms of one factor shifted by the
    // other's lowest b; same for the u direction.
    int bx = x.is_zero() ? 0 : x.lt().first.b;
    int by = y.is_zero() ? 0 : y.lt().first.b;
    int ax = kIBoundMax, ay = kIBoundMax;
    for (const auto& [e, c] : x.terms()) ax = std::min(ax, e.a);
    for (const auto& [e, c] : y.terms()) ay = std::min(ay, e.a);
    if (x.is_zero()) ax = 0;
    if (y.is_zero()) ay = 0;
    int tail = prec_min(prec_shift(x.tail_, by), prec_shift(y.tail_, bx));
    if (x.tail_ >= kTailMax && y.tail_ >= kTailMax) tail = kTailMax;
    int uprec = prec_min(prec_shift(x.uprec_, ay), prec_shift(y.uprec_, ax));
    if (x.uprec_ >= kIBoundMax && y.uprec_ >= kIBoundMax) uprec = kIBoundMax;
    UTSeries r(tail, uprec);
    for (const auto& [ex, cx] : x.t_)
        for (const auto& [ey, cy] : y.t_) r.add_term(ex.a + ey.a, ex.b + ey.b, cx * cy);
    return r;
}

Valuation2 nu(const UTSeries& v) {
    auto [e, c] = v.lt();
    return Valuation2{e.a, e.b};
}

UTSeries ut_invert(const UTSeries& v, int tail_target) {
    auto [e, c] = v.lt();
    if (!(c == Rat(1)))
        throw math_error("inverse requires a monic element (leading coefficient 1)");
    if (e.a != 0) throw math_error("inverse requires a unit leading t-coefficient");
    int m = e.b;
    // v = t^m (c0(u) + N) with c0 the t-leading u-series, N strictly higher.
    UTSeries c0(kTailMax, v.u_prec());
    UTSeries n(v.tail_prec() >= kTailMax ? kTailMax : v.tail_prec() - m, v.u_prec());
    for (const auto& [w, cv] : v.terms()) {
        if (w.b == m)
            c0.add_term(w.a, 0, cv);
        else
            n.add_term(w.a, w.b - m, cv);
    }
    // invert c0 = 1 + (positive u-part) in k[[u]] by the geometric series
    UTSeries c0inv = UTSeries::monomial(0, 0, Rat(1), kTailMax, v.u_prec());
    {
        UTSeries rest = c0 - UTSeries::monomial(0, 0, Rat(1));
        if (!rest.is_zero() && v.u_prec() >= kIBoundMax)
            throw math_error("inverse of a u-dependent leading coefficient needs a u-precision");
        UTSeries acc = UTSeries::monomial(0, 0, Rat(1), kTailMax, v.u_prec());
        UTSeries pw = UTSeries::monomial(0, 0, Rat(1), kTailMax, v.u_prec());
        for (int q = 1; q <= v.u_prec() && !rest.is_zero(); ++q) {
            pw = pw * rest;
            if (pw.is_zero()) break;
            acc = acc + pw.scaled(Rat(q % 2 == 0 ? 1 : -1));
        }
        c0inv = acc;
    }
    // (c0 + N)^{-1} = sum_q (-c0inv N)^q c0inv
    UTSeries xn = (c0inv.scaled(Rat(-1))) * n;
    UTSeries acc = c0inv;
    UTSeries pw = UTSeries::monomial(0, 0, Rat(1));
    int depth = tail_target + std::abs(m) + 2;
    for (int q = 1; q <= depth; ++q) {
        pw = pw * xn;
        if (pw.is_zero()) break;
        acc = acc + pw * c0inv;
    }
    UTSeries shift = UTSeries::monomial(0, -m, Rat(1));
    return (shift * acc).truncated(tail_target);
}

UTSeries ut_pow(const UTSeries& v, long nexp, int tail_target) {
    if (nexp < 0) return ut_pow(ut_invert(v, tail_target + 1 - static_cast<int>(nexp) * 2), -nexp,
                                tail_target);
    UTSeries r = UTSeries::monomial(0, 0, Rat(1));
    for (long q = 0; q < nexp; ++q) r = r * v;
    return r.truncated(tail_target);
}

UTSeries psi1(const ZSeries& v, int u_cap) {
    // The image knowledge region is the diagonal half-plane a + b < tail of
    // the source; a truncated series is therefore representable only on a
    // rectangle {a < U} x {b < tail - U + 1} for a chosen u-cap U.
    int ib = v.i_bound();
    int tz = v.tail_prec();
    if (tz >= kTailMax) {
        int uprec = ib >= kIBoundMax ? kIBoundMax : ib + 1;
        UTSeries r(kTailMax, uprec);
        for (const auto& [e, c] : v.terms()) r.add_term(e.i, e.j - e.i, c);
        return r;
    }
    int U;
    if (ib < kIBoundMax) {
        U = ib + 1;
    } else if (u_cap > 0) {
        U = u_cap;
    } else {
        int imax = 0;
        for (const auto& [e, c] : v.terms()) imax = std::max(imax, e.i);
        U = imax + 1;
    }
    UTSeries r(tz - U + 1, U);
    for (const auto& [e, c] : v.terms()) r.add_term(e.i, e.j - e.i, c);
    return r;
}

ZSeries psi1_inv(const UTSeries& v) {
    int up = v.u_prec();
    int tb = v.tail_prec();
    int ib = up >= kIBoundMax ? kIBoundMax : up - 1;
    int tail = (tb >= kTailMax) ? kTailMax : tb;
    ZSeries r(tail, ib);
    for (const auto& [e, c] : v.terms()) r.add_term(e.a, e.a + e.b, c);
    return r;
}

UTSeries ut_act(const UTSeries& w, const EPlusOp& t, int u_cap) {
    return psi1(right_act(psi1_inv(w), t), u_cap);
}

namespace {

// Insert into a valuation-echelon row set.
void echelon_insert(std::map<UTExp, UTSeries, UTExpLess>& rows, UTSeries v) {
    while (!v.is_zero()) {
        auto [e, c] = v.lt();
        auto it = rows.find(e);
        if (it == rows.end()) {
            rows.emplace(e, v.scaled(Rat(1) / c));
            return;
        }
        v = v - it->second.scaled(c);
    }
}

} // namespace

std::vector<UTSeries> ring_closure(const std::vector<UTSeries>& gens, int word_cutoff) {
    std::map<UTExp, UTSeries, UTExpLess> rows;
    std::vector<UTSeries> level = gens;
    for (const auto& g : gens) echelon_insert(rows, g);
    for (int len = 2; len <= word_cutoff; ++len) {
        std::vector<UTSeries> next;
        for (const auto& w : level)
            for (const auto& g : gens) next.push_back(w * g);
        for (const auto& v : next) echelon_insert(rows, v);
        level = std::move(next);
    }
    std::vector<UTSeries> out;
    for (const auto& [e, v] : rows) out.push_back(v);
    return out;
}

InvariantsNA invariants_NA(const std::vector<UTSeries>& closure) {
    InvariantsNA inv;
    long g0 = 0, gall = 0;
    for (const auto& v : closure) {
        if (v.is_zero()) continue;
        Valuation2 n = nu(v);
        long t = std::abs(n.nu_t);
        gall = std::gcd(gall, t);
        if (n.nu_u == 0) g0 = std::gcd(g0, t);
        if (n.nu_u == 1) inv.admissible = true;
    }
    inv.n_a = g0;
    inv.tilde_n_a = gall;
    inv.strongly_admissible = inv.admissible && inv.n_a == inv.tilde_n_a && inv.n_a != 0;
    return inv;
}

FiltrationDim filtration_dims(const std::vector<UTSeries>& space, int i, int j) {
    if (i >= j) throw math_error("filtration requires i < j");
    std::map<UTExp, UTSeries, UTExpLess> rows;
    FiltrationDim out;
    int min_tail = kTailMax;
    for (const auto& v : space) {
        echelon_insert(rows, v);
        min_tail = std::min(min_tail, v.tail_prec());
    }
    if (min_tail < j) return out; // cannot see up to t^j
    long d = 0;
    for (const auto& [e, v] : rows)
        if (e.b >= i && e.b < j) ++d;
    out.conclusive = true;
    out.dim = d;
    return out;
}

Recoordinatization recoordinatize(const std::vector<UTSeries>& closure, long n_a,
                                  int tail_target) {
    InvariantsNA inv = invariants_NA(closure);
    if (!inv.strongly_admissible || inv.n_a != n_a)
        throw math_error("re-coordinatization requires a strongly admissible closure");

    // Find two nu_u = 0 elements whose t-orders realize the gcd, and an
    // admissibility witness with nu_u = 1. Shallow valuations carry the most
    // tail knowledge, so prefer them.
    const UTSeries* wit = nullptr;
    std::vector<const UTSeries*> zeros;
    for (const auto& v : closure) {
        if (v.is_zero()) continue;
        Valuation2 n = nu(v);
        if (n.nu_u == 0) zeros.push_back(&v);
        if (n.nu_u == 1 && (!wit || std::abs(n.nu_t) < std::abs(nu(*wit).nu_t))) wit = &v;
    }
    std::sort(zeros.begin(), zeros.end(), [](const UTSeries* x, const UTSeries* y) {
        return std::abs(nu(*x).nu_t) < std::abs(nu(*y).nu_t);
    });
    if (!wit) throw math_error("no admissibility witness in closure");
    const UTSeries *xa = nullptr, *xb = nullptr;
    for (std::size_t s = 0; s < zeros.size() && !xa; ++s) {
        long ts = std::abs(nu(*zeros[s]).nu_t);
        if (ts == n_a) xa = xb = zeros[s];
    }
    if (!xa) {
        for (std::size_t s = 0; s < zeros.size() && !xa; ++s)
            for (std::size_t r = s + 1; r < zeros.size() && !xa; ++r) {
                long ts = std::abs(nu(*zeros[s]).nu_t), tr = std::abs(nu(*zeros[r]).nu_t);
                if (std::gcd(ts, tr) == n_a) {
                    xa = zeros[s];
                    xb = zeros[r];
                }
            }
    }
    if (!xa) throw math_error("gcd of t-orders is not realized by a pair of elements");

    Recoordinatization rc;
    rc.tail_target = tail_target;
    rc.n_a = n_a;
    if (xa == xb) {
        // single element of t-order exactly N_A
        rc.t_new = ut_invert(*xa, tail_target); // nu_t = +N_A
    } else {
        long ta = nu(*xa).nu_t, tb = nu(*xb).nu_t;
        // solve m*ta + n*tb = n_a over the integers
        long g = 0, mm = 0, nn = 0;
        {
            long r0 = std::abs(ta), r1 = std::abs(tb);
            long s0 = 1, s1 = 0, t0 = 0, t1 = 1;
            while (r1) {
                long qd = r0 / r1;
                std::tie(r0, r1) = std::make_pair(r1, r0 - qd * r1);
                std::tie(s0, s1) = std::make_pair(s1, s0 - qd * s1);
                std::tie(t0, t1) = std::make_pair(t1, t0 - qd * t1);
            }
            g = r0;
            mm = s0;
            nn = t0;
        }
        if (g != n_a) throw math_error("gcd pair mismatch");
        // |ta|*mm + |tb|*nn = n_a; with ta,tb negative: ta*(-mm) + tb*(-nn) = n_a
        long ea = ta < 0 ? -mm : mm;
        long eb = tb < 0 ? -nn : nn;
        rc.t_new = (ut_pow(*xa, ea, tail_target + 8) * ut_pow(*xb, eb, tail_target + 8))
                       .truncated(tail_target);
    }
    if (rc.t_new.is_zero()) throw math_error("insufficient tail depth for re-coordinatization");
    Valuation2 nt = nu(rc.t_new);
    if (!(nt == Valuation2{0, n_a})) throw math_error("re-coordinatization t' has wrong valuation");
    long ew = -nu(*wit).nu_t / n_a;
    rc.u_new = ((*wit) * ut_pow(rc.t_new, ew, tail_target + 8)).truncated(tail_target);
    if (rc.u_new.is_zero()) throw math_error("insufficient tail depth for re-coordinatization");
    Valuation2 nw = nu(rc.u_new);
    if (!(nw == Valuation2{1, 0})) throw math_error("re-coordinatization u' has wrong valuation");
    return rc;
}

UTSeries Recoordinatization::rewrite(const UTSeries& v) const {
    UTSeries rem = v;
    UTSeries out(rem.tail_prec(), rem.u_prec());
    int guard = 4096;
    while (!rem.is_zero() && guard-- > 0) {
        auto [e, c] = rem.lt();
        if (e.b % n_a != 0)
            throw math_error("element does not lie in the re-coordinatized ring (t-order not divisible)");
        long bq = e.b / n_a;
        UTSeries mon = ut_pow(u_new, e.a, tail_target + 8) * ut_pow(t_new, bq, tail_target + 8);
        rem = rem - mon.scaled(c);
        out.add_term(e.a, static_cast<int>(bq), c);
        if (!rem.is_zero()) {
            auto lt2 = rem.lt().first;
            UTExpLess less;
            if (!less(e, lt2)) throw math_error("re-coordinatization did not reduce the lowest term");
        }
    }
    return out;
}

UTSeries Recoordinatization::expand(const UTSeries& in_new_vars) const {
    UTSeries acc(tail_target, kIBoundMax);
    for (const auto& [e, c] : in_new_vars.terms()) {
        UTSeries mon =
            ut_pow(u_new, e.a, tail_target + 8) * ut_pow(t_new, e.b, tail_target + 8);
        acc = acc + mon.scaled(c).truncated(tail_target);
    }
    return acc;
}

SchurValidation validate_schur_pair(const std::vector<UTSeries>& a_gens,
                                    const std::vector<UTSeries>& w_basis,
                                    const SchurCutoffs& cutoffs) {
    SchurValidation out;
    out.valid = true;
    auto add_check = [&out](const std::string& name, TriBool st, const std::string& wit) {
        out.checks.push_back(SchurCheck{name, st, wit});
        if (st == TriBool::no) out.valid = false;
    };

    // Support of the w-span must be the cone <u^i t^{-j} : 0 <= i <= j>.
    {
        std::map<UTExp, UTSeries, UTExpLess> rows;
        for (const auto& v : w_basis) echelon_insert(rows, v);
        TriBool st = TriBool::yes;
        std::string wit;
        for (const auto& [e, v] : rows) {
            if (!(e.b <= 0 && e.a <= -e.b)) {
                st = TriBool::no;
                std::ostringstream os;
                os << "pivot u^" << e.a << " t^" << e.b << " outside the cone";
                wit = os.str();
                break;
            }
        }
        if (st == TriBool::yes) {
            for (int j = 0; j <= cutoffs.support_j && st == TriBool::yes; ++j)
                for (int a = 0; a <= std::min(j, cutoffs.support_a); ++a)
                    if (!rows.count(UTExp{a, -j})) {
                        st = TriBool::unknown;
                        std::ostringstream os;
                        os << "cone monomial u^" << a << " t^" << -j << " not attained in cutoffs";
                        wit = os.str();
                        break;
                    }
        }
        add_check("support", st, wit);
    }

    // Stabilizer: a*w reduces to zero in the span. A residue head outside
    // the support cone is a definitive failure (no element of the space has
    // such a lowest term); an unattained in-cone head means the enumeration
    // ran out, so that product is undecidable at these cutoffs.
    {
        std::map<UTExp, UTSeries, UTExpLess> rows;
        for (const auto& v : w_basis) echelon_insert(rows, v);
        auto in_cone = [](const UTExp& e) { return e.b <= 0 && e.a <= -e.b; };
        TriBool st = TriBool::yes;
        int decided = 0;
        bool skipped = false;
        std::string wit;
        for (std::size_t gi = 0; gi < a_gens.size() && st != TriBool::no; ++gi) {
            for (const auto& w : w_basis) {
                UTSeries y = a_gens[gi] * w;
                UTSeries rem = y;
                bool undecidable = false;
                bool failed = false;
                while (!rem.is_zero()) {
                    auto [e, c] = rem.lt();
                    auto it = rows.find(e);
                    if (it == rows.end()) {
                        if (in_cone(e)) {
                            undecidable = true;
                        } else {
                            failed = true;
                        }
                        break;
                    }
                    rem = rem - it->second.scaled(c);
                }
                if (failed) {
                    std::ostringstream os;
                    auto [e, c] = rem.lt();
                    st = TriBool::no;
                    os << "generator " << gi << " maps a basis element outside the span at u^"
                       << e.a << " t^" << e.b;
                    wit = os.str();
                    break;
                }
                if (undecidable) {
                    skipped = true;
                    continue;
                }
                ++decided;
            }
        }
        if (st == TriBool::yes && decided == 0) {
            st = TriBool::unknown;
            wit = "cutoffs too small to decide any product";
        } else if (st == TriBool::yes && skipped) {
            wit = "verified on the reliable region";
        }
        add_check("stabilizer", st, wit);
    }

    std::vector<UTSeries> closure = ring_closure(a_gens, cutoffs.word_cutoff);
    InvariantsNA inv = invariants_NA(closure);
    add_check("admissible", inv.admissible ? TriBool::yes : TriBool::no,
              inv.admissible ? "" : "no element with nu = (1,*)");
    add_check("strongly_admissible", inv.strongly_admissible ? TriBool::yes : TriBool::no, "");

    // Surrogate for the transcendence-degree condition: independent nu
    // directions (0,*) and (1,*) exist. This is a checkable stand-in, not
    // the full condition.
    bool dir0 = false, dir1 = false;
    for (const auto& v : closure) {
        if (v.is_zero()) continue;
        Valuation2 n = nu(v);
        if (n.nu_u == 0 && n.nu_t != 0) dir0 = true;
        if (n.nu_u == 1) dir1 = true;
    }
    add_check("trdeg_surrogate", (dir0 && dir1) ? TriBool::yes : TriBool::no,
              "surrogate: independent valuation directions");

    out.data.a_gens = a_gens;
    out.data.w_basis = w_basis;
    out.data.n_a = inv.n_a;
    out.data.tilde_n_a = inv.tilde_n_a;
    out.data.rank_r = inv.n_a;
    out.data.cutoff = cutoffs.word_cutoff;
    return out;
}

} // namespace psdo
