#include "psdo/eplus.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <sstream>

namespace psdo {

GammaDeg EPlusOp::gamma_order() const {
    for (auto it = slots_.rbegin(); it != slots_.rend(); ++it) {
        if (!it->second.is_zero()) return GammaDeg{it->second.deg1(), it->first};
    }
    throw math_error("zero operator has no Gamma-order");
}

std::pair<GammaDeg, Rat> EPlusOp::highest_term() const {
    GammaDeg g = gamma_order();
    XSeries lead = leading_series();
    GammaDeg xg = lead.ord_gamma();
    return {g, lead.coeff(static_cast<int>(xg.d1), static_cast<int>(xg.d2))};
}

XSeries EPlusOp::leading_series() const {
    GammaDeg g = gamma_order();
    return slot(static_cast<int>(g.d2)).coeff(static_cast<int>(g.d1));
}

EPlusOp EPlusOp::operator-() const { return scaled(Rat(-1)); }

EPlusOp EPlusOp::scaled(const Rat& c) const {
    EPlusOp r(zero_prec_);
    r.window_lo_ = window_lo_;
    r.floor_ = floor_;
    if (c.is_zero()) return r;
    for (const auto& [s, d] : slots_) r.slots_[s] = d.scaled(c);
    return r;
}

EPlusOp operator+(const EPlusOp& a, const EPlusOp& b) {
    EPlusOp r(prec_min(a.zero_prec_, b.zero_prec_));
    if (a.floor_ == Tail::exact && b.floor_ == Tail::exact) {
        r.floor_ = Tail::exact;
        r.window_lo_ = std::min(a.window_lo_, b.window_lo_);
    } else {
        r.floor_ = Tail::truncated;
        long wa = a.floor_ == Tail::exact ? LONG_MIN / 4 : a.window_lo_;
        long wb = b.floor_ == Tail::exact ? LONG_MIN / 4 : b.window_lo_;
        r.window_lo_ = static_cast<int>(std::max({wa, wb, long(INT_MIN / 4)}));
    }
    std::set<int> keys;
    for (const auto& [s, d] : a.slots_) keys.insert(s);
    for (const auto& [s, d] : b.slots_) keys.insert(s);
    for (int s : keys) {
        if (s < r.window_lo_) continue;
        D1Op da = a.slot(s), db = b.slot(s);
        D1Op out = da + db;
        if (!out.is_zero() || out.prec() < r.zero_prec_) r.slots_[s] = out;
    }
    return r;
}

EPlusOp operator-(const EPlusOp& a, const EPlusOp& b) { return a + (-b); }

EPlusOp EPlusOp::truncated_window(int w) const {
    // Forgets everything below w: claims below the cut are never kept, even
    // when the input was exact there.
    EPlusOp r(zero_prec_);
    r.floor_ = Tail::truncated;
    r.window_lo_ = std::max(w, floor_ == Tail::exact ? w : window_lo_);
    for (const auto& [s, d] : slots_)
        if (s >= r.window_lo_) r.slots_[s] = d;
    return r;
}

EPlusOp EPlusOp::truncated_prec(int p) const {
    EPlusOp r(prec_min(zero_prec_, p));
    r.window_lo_ = window_lo_;
    r.floor_ = floor_;
    for (const auto& [s, d] : slots_) {
        D1Op t = d.truncated(p);
        if (!t.is_zero() || t.prec() < r.zero_prec_) r.slots_[s] = t;
    }
    return r;
}

bool EPlusOp::is_in_dhat() const {
    for (const auto& [s, d] : slots_)
        if (s < 0 && !d.is_zero()) return false;
    return true;
}

TriBool EPlusOp::is_pdo() const {
    if (!is_in_dhat()) return TriBool::no;
    for (const auto& [s, d] : slots_)
        if (d.tail() == Tail::infinite) return TriBool::no;
    bool certain = true;
    for (const auto& [s, d] : slots_)
        if (d.tail() == Tail::truncated) certain = false;
    if (floor_ == Tail::truncated && window_lo_ < 0) certain = false;
    if (zero_prec_ < kPrecExact) certain = false;
    return certain ? TriBool::yes : TriBool::unknown;
}

bool EPlusOp::agree_on_claims(const EPlusOp& a, const EPlusOp& b) {
    auto check = [](const EPlusOp& x, const EPlusOp& y) {
        for (const auto& [s, d] : x.slots_) {
            int p = prec_min(d.prec(), y.prec_at(s));
            if (p <= 0) continue;
            if (!D1Op::agree_below(d, y.slot(s), p)) return false;
        }
        return true;
    };
    return check(a, b) && check(b, a);
}

EPlusOp eplus_mul(const EPlusOp& a, const EPlusOp& b) {
    // Stored zero-claim slots participate in the convolution below, so only
    // absent window slots bound the ambient zero level here.
    int zp_a = a.zero_prec_, zp_b = b.zero_prec_;
    int zp = prec_min(zp_a, zp_b);
    if (a.slots_.empty() || b.slots_.empty()) {
        EPlusOp r(zp);
        r.floor_ = tail_join(a.floor_, b.floor_);
        r.window_lo_ = std::min(a.window_lo_, b.window_lo_);
        return r;
    }
    int top_a = a.top_slot(), top_b = b.top_slot();

    // Window contamination from unknown deep slots of either factor.
    long win = LONG_MIN / 4;
    if (a.floor_ == Tail::truncated) win = std::max(win, long(a.window_lo_) + top_b);
    if (b.floor_ == Tail::truncated) win = std::max(win, long(b.window_lo_) + top_a);
    Tail floor_out =
        (a.floor_ == Tail::exact && b.floor_ == Tail::exact) ? Tail::exact : Tail::truncated;

    std::map<int, D1Op> acc;
    long prec_killed_below = LONG_MIN / 4;
    int max_m_used = 0;

    auto merge = [&acc](int s, D1Op&& term) {
        auto it = acc.find(s);
        if (it == acc.end())
            acc.emplace(s, std::move(term));
        else
            it->second = it->second + term;
    };

    for (const auto& [i, ai] : a.slots_) {
        for (const auto& [j, bj] : b.slots_) {
            D1Op der = bj; // d2^m(b_j)
            for (int m = 0;; ++m) {
                if (m > 0) der = der.d_x(2);
                if (i >= 0 && m > i) break;
                if (der.prec() < 1) {
                    prec_killed_below = std::max(prec_killed_below, long(i) + j - m);
                    floor_out = Tail::truncated;
                    break;
                }
                if (der.is_zero() && der.prec() >= kPrecExact) break; // exact zero from here on
                merge(i + j - m, d1_mul(ai, der).scaled(binomial(i, m)));
                if (m > 0) max_m_used = std::max(max_m_used, m);
            }
        }
    }

    // Knowledge cap from zero slots of either factor: those are only zero to
    // the factor's effective zero level, and on the b side they may
    // additionally be differentiated.
    // The ambient zero level only contaminates when a factor actually has
    // absent slots inside its window (absent above the top is exactly zero).
    auto has_gaps = [](const EPlusOp& o) {
        if (o.slots_.empty()) return false;
        for (int s = std::max(o.window_lo_, o.top_slot() - 64); s <= o.top_slot(); ++s)
            if (!o.slots_.count(s)) return true;
        return o.window_lo_ < o.top_slot() - 64;
    };
    int kmax_a = 0;
    for (const auto& [i, ai] : a.slots_) kmax_a = std::max(kmax_a, std::max(0, ai.deg1()));
    int zcap = kPrecExact;
    if (zp_a < kPrecExact && has_gaps(a)) zcap = prec_min(zcap, zp_a);
    if (zp_b < kPrecExact && has_gaps(b)) {
        long lowest = acc.empty() ? 0 : acc.begin()->first;
        long mreach = std::max<long>(max_m_used, top_a + top_b - lowest);
        zcap = prec_min(zcap, prec_shift(zp_b, static_cast<int>(-(mreach + kmax_a))));
    }

    EPlusOp r(prec_min(zp, zcap));
    long wl = std::max(win, prec_killed_below + 1);
    for (auto& [s, d] : acc) {
        if (s < wl) continue;
        D1Op out = d.truncated(zcap);
        if (out.prec() < 1) {
            wl = std::max(wl, long(s) + 1);
            floor_out = Tail::truncated;
            continue;
        }
        if (!out.is_zero() || out.prec() < r.zero_prec_) r.slots_[s] = out;
    }
    for (auto it = r.slots_.begin(); it != r.slots_.end();) {
        if (it->first < wl)
            it = r.slots_.erase(it);
        else
            ++it;
    }
    if (floor_out == Tail::exact)
        r.window_lo_ = std::min(a.window_lo_ + b.window_lo_, 0);
    else
        r.window_lo_ = static_cast<int>(std::max(wl, long(INT_MIN / 4)));
    r.floor_ = floor_out;
    return r;
}

EPlusOp eplus_pow(const EPlusOp& a, long n) {
    EPlusOp r = EPlusOp::one(kPrecExact);
    for (long k = 0; k < n; ++k) r = eplus_mul(r, a);
    return r;
}

EPlusOp invert_monic(const EPlusOp& p, int target_window) {
    GammaDeg g;
    try {
        g = p.gamma_order();
    } catch (const math_error&) {
        throw math_error("not invertible within E-plus: zero operator");
    }
    if (g.d1 != 0)
        throw math_error("not invertible within E-plus: leading coefficient has positive d1-degree");
    int l = static_cast<int>(g.d2);
    D1Op top = p.slot(l);
    XSeries c = top.coeff(0);
    if (c.constant_term().is_zero())
        throw math_error("not invertible within E-plus: leading series is not a unit");

    // p = (c + N') d2^l with N' strictly below slot 0 after the shift.
    EPlusOp shifted = eplus_mul(p, EPlusOp::d2_power(-l));
    EPlusOp nprime = shifted - EPlusOp::from_xseries(c);
    XSeries cinv = c.invert_unit();
    EPlusOp cinv_op = EPlusOp::from_xseries(cinv);
    // (c + N')^{-1} = sum_q (-cinv N')^q cinv
    EPlusOp x = eplus_mul(cinv_op.scaled(Rat(-1)), nprime);
    EPlusOp acc = cinv_op;
    EPlusOp powx = EPlusOp::one(kPrecExact);
    int depth = -(target_window - l) + 1;
    for (int q = 1; q <= depth; ++q) {
        powx = eplus_mul(powx, x);
        if (powx.slots().empty()) break;
        acc = acc + eplus_mul(powx, cinv_op);
        if (powx.is_zero()) break; // zero-valued: claims folded, nothing deeper
        if (powx.top_slot() < target_window - l) break;
    }
    EPlusOp r = eplus_mul(EPlusOp::d2_power(-l), acc);
    return r.truncated_window(target_window);
}

EPlusOp normalize_leader(const EPlusOp& p) {
    Rat lead = p.highest_term().second;
    if (lead.is_zero()) throw math_error("zero operator has no leader to normalize");
    return p.scaled(Rat(1) / lead);
}

bool has_constant_coefficients(const EPlusOp& p) {
    for (const auto& [s, d] : p.slots())
        for (const auto& [q, f] : d.coeffs())
            if (!f.is_constant()) return false;
    return true;
}

std::string EPlusOp::str() const {
    if (slots_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = slots_.rbegin(); it != slots_.rend(); ++it) {
        if (!first) os << "\n + ";
        first = false;
        os << "[" << it->second.str() << "]";
        if (it->first) os << " * d2^" << it->first;
        os << "   {prec " << it->second.prec() << "}";
    }
    return os.str();
}

} // namespace psdo
