#include "psdo/subspace.hpp"

#include <algorithm>
#include <sstream>

namespace psdo {

SubspaceW echelon_basis_ext(const std::vector<ZSeries>& generators, int i_bound, int j_bound,
                            const std::function<std::optional<ZSeries>(int, int)>& fetch_extra) {
    // Stage 1: triangularize by lowest terms.
    std::map<ZExp, ZSeries, ZExpLess> raw;
    auto insert = [&raw](ZSeries r) {
        while (!r.is_zero()) {
            auto [e, c] = r.lt();
            auto it = raw.find(e);
            if (it == raw.end()) {
                raw.emplace(e, r.scaled(Rat(1) / c));
                return;
            }
            r = r - it->second.scaled(c);
        }
    };
    for (const auto& g : generators) insert(g);

    // Pivots must be big-cell monomials.
    for (const auto& [e, row] : raw) {
        if (e.j > 0) {
            std::ostringstream os;
            os << "support is not the big cell: pivot z1^-" << e.i << " z2^" << e.j;
            throw math_error(os.str());
        }
    }
    // All required pivots must be attained.
    std::vector<ZExp> missing;
    for (int i = 0; i <= i_bound; ++i)
        for (int j = 0; j <= j_bound; ++j)
            if (!raw.count(ZExp{i, -j})) missing.push_back(ZExp{i, -j});
    if (!missing.empty()) {
        std::ostringstream os;
        os << "support defect, missing basis monomials:";
        for (const auto& e : missing) os << " z1^-" << e.i << "*z2^-" << -e.j;
        throw math_error(os.str());
    }

    // Stage 2: canonicalize. Every non-head big-cell monomial in a row is
    // anti-lex greater than the head, so the recursion terminates; rows
    // beyond the grid are pulled in through the supplier on demand.
    std::map<ZExp, ZSeries, ZExpLess> canon;
    std::function<const ZSeries&(ZExp)> canonical = [&](ZExp head) -> const ZSeries& {
        auto cit = canon.find(head);
        if (cit != canon.end()) return cit->second;
        auto rit = raw.find(head);
        if (rit == raw.end()) {
            std::optional<ZSeries> extra;
            if (fetch_extra) extra = fetch_extra(head.i, -head.j);
            if (!extra) {
                std::ostringstream os;
                os << "support defect: canonicalization needs out-of-bounds pivot z1^-" << head.i
                   << "*z2^" << head.j;
                throw math_error(os.str());
            }
            insert(*extra);
            rit = raw.find(head);
            if (rit == raw.end()) throw math_error("supplied row has the wrong lowest term");
        }
        ZSeries r = rit->second;
        bool progress = true;
        while (progress) {
            progress = false;
            for (const auto& [e, c] : r.terms()) {
                if (e.j > 0) continue;        // tail territory, fine
                if (e == head) continue;      // own head
                r = r - canonical(e).scaled(c);
                progress = true;
                break;
            }
        }
        return canon.emplace(head, std::move(r)).first->second;
    };

    SubspaceW w(i_bound, j_bound);
    for (int i = 0; i <= i_bound; ++i)
        for (int j = 0; j <= j_bound; ++j) canonical(ZExp{i, -j});
    // keep every canonical row computed along the way: callers can use the
    // extra columns
    for (const auto& [e, row] : canon) w.set_row(e.i, -e.j, row);
    return w;
}

SubspaceW echelon_basis(const std::vector<ZSeries>& generators, int i_bound, int j_bound) {
    return echelon_basis_ext(generators, i_bound, j_bound, nullptr);
}

SpanReduction reduce_in_span(const SubspaceW& w, const ZSeries& v) {
    SpanReduction out;
    ZSeries r = v;
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& [e, c] : r.terms()) {
            if (e.j > 0) continue; // only big-cell monomials are eliminated
            int i = e.i, j = -e.j;
            if (i > w.bound_i() || j > w.bound_j() || !w.has(i, j)) {
                // a head beyond the bounds: leave it in the remainder
                if (!out.out_of_bounds) out.out_monomial = e;
                out.out_of_bounds = true;
                continue;
            }
            r = r - w.row(i, j).scaled(c);
            out.coeffs[{i, j}] += c;
            progress = true;
            break;
        }
    }
    out.remainder = r;
    return out;
}

StabilizerReport stabilizes(const SubspaceW& w, const EPlusOp& p) {
    // A row is decidable when its image can be fully reduced at these
    // bounds: every big-cell head is in range. An out-of-range head leaves
    // the row outside the reliable region (a remaining positive residue
    // could still be matched by unseen basis tails), so it is skipped; a
    // nonzero residue on a fully reduced row is a definitive failure.
    StabilizerReport rep;
    bool any_skipped = false;
    int decided = 0;
    for (const auto& [key, row] : w.rows()) {
        ZSeries y = right_act(row, p);
        if (y.tail_prec() < 1) {
            any_skipped = true;
            continue;
        }
        SpanReduction red = reduce_in_span(w, y);
        if (red.out_of_bounds) {
            any_skipped = true;
            continue;
        }
        if (!red.remainder.is_zero()) {
            auto [e, c] = red.remainder.lt();
            std::ostringstream os;
            os << "row (" << key.first << "," << key.second << ") maps outside the span: residue "
               << c.str() << " at z1^-" << e.i << "*z2^" << e.j;
            rep.verdict = TriBool::no;
            rep.detail = os.str();
            return rep;
        }
        ++decided;
    }
    if (decided == 0) {
        rep.verdict = TriBool::unknown;
        rep.detail = "bounds too small to decide any row";
        return rep;
    }
    rep.verdict = TriBool::yes;
    if (any_skipped) rep.detail = "verified on the reliable region (some rows out of bounds)";
    return rep;
}

} // namespace psdo
