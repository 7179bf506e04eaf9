#include "psdo/sato.hpp"

#include <algorithm>
#include <sstream>

namespace psdo {

namespace {

void require_unit_plus_lower(const EPlusOp& s) {
    if (s.top_slot() > 0) {
        for (const auto& [k, d] : s.slots())
            if (k > 0 && !d.is_zero()) throw math_error("operator is not of the form 1 + lower");
    }
    D1Op head = s.slot(0);
    if (head.deg1() != 0 || !(head.coeff(0).constant_term() == Rat(1)) ||
        !head.coeff(0).is_constant())
        throw math_error("operator is not of the form 1 + lower");
}

// Taylor slices of S in anti-lex order, each slice a z-series.
struct SliceTable {
    std::map<std::pair<int, int>, ZSeries> slice; // (k,l) -> d1^k d2^l (S)(0)
    std::map<std::pair<int, int>, bool> available;
};

std::vector<std::pair<int, int>> antilex_pairs(int imax, int jmax) {
    std::vector<std::pair<int, int>> v;
    for (int l = 0; l <= jmax; ++l)
        for (int k = 0; k <= imax; ++k) v.emplace_back(k, l);
    return v;
}

// Lift a slice into operator Taylor data: monomial z1^{-p} z2^{m} of the
// (k,l)-slice contributes c/(k! l!) x1^k x2^l to the d1^p coefficient of
// slot -m.
void add_slice_to_op(std::map<int, std::map<int, XSeries>>& slots, const ZSeries& sl, int k, int l,
                     int xcap) {
    Rat scale = Rat(1) / (factorial(k) * factorial(l));
    for (const auto& [e, c] : sl.terms()) {
        int slot = -e.j;
        auto& d1map = slots[slot];
        auto it = d1map.find(e.i);
        if (it == d1map.end()) it = d1map.emplace(e.i, XSeries(xcap)).first;
        it->second.add_term(k, l, c * scale);
    }
}

} // namespace

SubspaceW w_from_s(const EPlusOp& s, int i_bound, int j_bound) {
    require_unit_plus_lower(s);
    auto make_row = [&s](int i, int j) -> ZSeries {
        ZSeries row = right_act(ZSeries::monomial(i, -j, Rat(1)), s);
        if (row.tail_prec() <= -j) {
            std::ostringstream os;
            os << "insufficient x-precision to populate the requested bounds: row (" << i << ","
               << j << ") needs x-precision >= " << (i + j + 1);
            throw math_error(os.str());
        }
        return row;
    };
    std::vector<ZSeries> rows;
    for (int i = 0; i <= i_bound; ++i)
        for (int j = 0; j <= j_bound; ++j) rows.push_back(make_row(i, j));
    // Canonicalizing edge rows can call for pivots with larger z1-index;
    // supply them from the operator on demand.
    return echelon_basis_ext(rows, i_bound, j_bound,
                             [&make_row](int i, int j) -> std::optional<ZSeries> {
                                 return make_row(i, j);
                             });
}

namespace {
struct SliceCheck {
    const Rat* alpha = nullptr;
    long bad_k = 0, bad_l = 0;
    bool failed = false;
};
} // namespace

static EPlusOp reconstruct_impl(const SubspaceW& w, SliceCheck* sc) {
    const int I = w.bound_i(), J = w.bound_j();
    // Attempt all Taylor indices up to a generous cap; availability pruning
    // trims what the bounds cannot support.
    const int kcap = I, lcap = J;

    SliceTable tab;
    // Partial operator with exact internal precision: the slice relation at
    // (k,l) only ever reads Taylor coefficients (a,b) <= (k,l) of it, and
    // those are exact once computed.
    EPlusOp partial = EPlusOp::one(kPrecExact);
    std::map<int, std::map<int, XSeries>> partial_slots; // slot -> q -> Taylor data

    auto rebuild_partial = [&partial_slots]() {
        EPlusOp p(kPrecExact);
        p.set_slot(0, D1Op::one(kPrecExact));
        for (const auto& [slot, d1map] : partial_slots) {
            D1Op d(kPrecExact);
            for (const auto& [q, f] : d1map) {
                XSeries g(kPrecExact);
                for (const auto& [e, c] : f.terms()) g.add_term(e.i, e.j, c);
                d.set_coeff(q, g);
            }
            p.set_slot(slot, d);
        }
        return p;
    };

    auto avail = [&tab](int k, int l) {
        auto it = tab.available.find({k, l});
        return it != tab.available.end() && it->second;
    };

    for (auto [k, l] : antilex_pairs(kcap, lcap)) {
        // all componentwise-smaller slices must be available
        bool ok = true;
        for (int a = 0; a <= k && ok; ++a)
            for (int b = 0; b <= l && ok; ++b)
                if (!(a == k && b == l) && !avail(a, b)) ok = false;
        if (!ok) {
            tab.available[{k, l}] = false;
            continue;
        }
        ZSeries r = right_act(ZSeries::monomial(k, -l, Rat(1)), partial);
        // Known part of the row relation; the unknown slice enters once with
        // unit coefficient and has no big-cell monomials (except at (0,0)).
        ZSeries slice(r.tail_prec());
        bool fits = true;
        for (const auto& [e, c] : r.terms()) {
            if (e.j > 0) continue;
            int i2 = e.i, j2 = -e.j;
            if (!w.has(i2, j2)) {
                fits = false;
                break;
            }
            slice = slice + w.row(i2, j2).scaled(c);
        }
        if (!fits || slice.tail_prec() < 1) {
            tab.available[{k, l}] = false;
            continue;
        }
        slice = slice - r;
        // big-cell part must cancel exactly; what remains is the strictly
        // z2-positive tail of the slice
        for (const auto& [e, c] : slice.terms()) {
            if (e.j <= 0)
                throw math_error("slice recursion produced an unexpected big-cell term");
        }
        if (sc && sc->alpha && !zseries_in_cone(slice, *sc->alpha, k, l) && !sc->failed) {
            sc->failed = true;
            sc->bad_k = k;
            sc->bad_l = l;
        }
        tab.slice[{k, l}] = slice;
        tab.available[{k, l}] = true;
        add_slice_to_op(partial_slots, slice, k, l, kPrecExact);
        partial = rebuild_partial();
    }

    // Ledger: slot -m is guaranteed to x-degree
    //   min( {k+l : slice (k,l) unavailable} u {k+l : tail(k,l) <= m} ),
    // capped by the attempted Taylor box.
    int box = std::min(kcap, lcap) + 1; // full (k,l) square attempted
    auto slot_prec = [&](int m) {
        int p = box;
        for (auto [k, l] : antilex_pairs(kcap, lcap)) {
            bool a = avail(k, l);
            if (!a) {
                p = std::min(p, k + l);
                continue;
            }
            if (tab.slice[{k, l}].tail_prec() <= m) p = std::min(p, k + l);
        }
        return p;
    };

    EPlusOp out(0);
    std::map<int, std::map<int, XSeries>> final_slots;
    for (const auto& [kl, sl] : tab.slice) add_slice_to_op(final_slots, sl, kl.first, kl.second, kPrecExact);
    int p0 = slot_prec(0);
    int zp = p0;
    int wlo = 0;
    std::map<int, D1Op> assembled;
    // depth limit: deepest tail over slices
    int max_depth = 0;
    for (const auto& [kl, sl] : tab.slice)
        for (const auto& [e, c] : sl.terms()) max_depth = std::max(max_depth, e.j);
    for (int m = 1; m <= max_depth; ++m) {
        int pm = slot_prec(m);
        if (pm < 1) break;
        D1Op d(pm);
        auto it = final_slots.find(-m);
        if (it != final_slots.end())
            for (const auto& [q, f] : it->second) d.set_coeff(q, f.truncated(pm));
        d.set_tail(Tail::truncated);
        assembled[-m] = d;
        wlo = -m;
        zp = std::min(zp, pm);
    }
    out.set_zero_prec(zp);
    out.set_window(wlo, Tail::truncated);
    D1Op head = D1Op::one(p0);
    head.set_tail(Tail::truncated);
    out.set_slot(0, head);
    for (const auto& [s, d] : assembled) out.set_slot(s, d);
    return out;
}

EPlusOp reconstruct_s(const SubspaceW& w) { return reconstruct_impl(w, nullptr); }

std::pair<EPlusOp, GrowthCert> reconstruct_s_certified(const SubspaceW& w, const Rat& alpha) {
    for (const auto& [key, row] : w.rows()) {
        if (!zseries_in_cone(row, alpha, key.first, key.second)) {
            std::ostringstream os;
            os << "basis element (" << key.first << "," << key.second
               << ") violates the cone condition";
            throw math_error(os.str());
        }
    }
    SliceCheck sc;
    sc.alpha = &alpha;
    EPlusOp s = reconstruct_impl(w, &sc);
    GrowthCert cert = check_A(s, alpha, 0, 0);
    if (sc.failed) {
        cert.verdict = Verdict::fails;
        cert.witness = GrowthWitness{static_cast<int>(sc.bad_k), static_cast<int>(sc.bad_l), 0, 0,
                                     false};
    }
    return {s, cert};
}

} // namespace psdo
