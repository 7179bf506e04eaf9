#include "psdo/zseries.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace psdo {

std::string ZSeries::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (e.i) os << "*z1^-" << e.i;
        if (e.j) os << "*z2^" << e.j;
    }
    os << "  {tail<" << tail_ << "}";
    return os.str();
}

ZSeries reduce_to_v(const EPlusOp& p) {
    // A stored-but-dropped d1-coefficient has ord_M >= prec >= 1, so its
    // value at x = 0 is known to vanish whenever the slot claims anything.
    long bad_from = LONG_MIN / 4; // slots <= bad_from - 1 unknown
    if (p.floor_tail() == Tail::truncated) bad_from = p.window_lo();
    if (p.zero_prec() < 1) bad_from = std::max(bad_from, long(p.top_slot()) + 1);
    for (const auto& [s, d] : p.slots())
        if (d.prec() < 1) bad_from = std::max(bad_from, long(s) + 1);
    int tail = bad_from <= LONG_MIN / 8 ? kTailMax
                                        : static_cast<int>(std::min(long(kTailMax), -bad_from + 1));
    ZSeries r(tail);
    for (const auto& [s, d] : p.slots()) {
        if (d.prec() < 1) continue;
        for (const auto& [q, f] : d.coeffs()) {
            Rat c = f.constant_term();
            if (!c.is_zero()) r.add_term(q, -s, c);
        }
    }
    return r;
}

ZSeries right_act(const ZSeries& v, const EPlusOp& p) {
    if (v.is_zero()) {
        // propagate the knowledge bounds only
        ZSeries r(v.tail_prec() == kTailMax ? kTailMax : v.tail_prec());
        return r;
    }
    int top_p = std::max(p.top_slot(), 0);
    bool first = true;
    ZSeries acc;
    for (const auto& [e, c] : v.terms()) {
        EPlusOp lift = EPlusOp::monomial_op(e.i, -e.j);
        ZSeries img = reduce_to_v(eplus_mul(lift, p)).scaled(c);
        acc = first ? img : acc + img;
        first = false;
    }
    // Unknown terms of v beyond its claims contaminate deep output.
    if (v.tail_prec() < kTailMax) {
        int cap = v.tail_prec() - top_p;
        acc = acc.truncated(cap);
    }
    if (v.i_bound() < kIBoundMax) {
        int pmax = 0;
        for (const auto& [s, d] : p.slots()) pmax = std::max(pmax, prec_min(d.prec(), kTailMax));
        int ib = std::max(0, v.i_bound() - pmax + 1);
        acc = acc.truncated(kTailMax, ib);
    }
    return acc;
}

std::set<ZExp, ZExpLess> support(const std::vector<ZSeries>& vs) {
    std::map<ZExp, ZSeries, ZExpLess> rows;
    for (const auto& g : vs) {
        ZSeries r = g;
        while (!r.is_zero()) {
            auto [e, c] = r.lt();
            auto it = rows.find(e);
            if (it == rows.end()) {
                rows.emplace(e, r.scaled(Rat(1) / c));
                break;
            }
            r = r - it->second.scaled(c);
        }
    }
    std::set<ZExp, ZExpLess> out;
    for (const auto& [e, row] : rows) out.insert(e);
    return out;
}

bool zseries_in_cone(const ZSeries& v, const Rat& alpha, long k, long l) {
    for (const auto& [e, c] : v.terms()) {
        // monomial z1^{-p} z2^{ej} as operator d1^p d2^{-ej}
        Rat bound = alpha * Rat(l + e.j) + Rat(k);
        if (Rat(e.i) > bound) return false;
    }
    return true;
}

} // namespace psdo
