#include "psdo/json_io.hpp"

namespace psdo {

namespace {

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    throw io_error("rational must be an integer or a \"p/q\" string");
}

int int_field(const json& j, const char* key) {
    if (!j.contains(key)) throw io_error(std::string("missing field: ") + key);
    return j.at(key).get<int>();
}

} // namespace

json to_json(const XSeries& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back(json::array({e.i, e.j, c.str()}));
    return json{{"prec", f.prec()}, {"terms", std::move(terms)}};
}

XSeries xseries_from_json(const json& j) {
    XSeries r(int_field(j, "prec"));
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 3) throw io_error("series term must be [i, j, coeff]");
        r.add_term(t[0].get<int>(), t[1].get<int>(), rat_from_json(t[2]));
    }
    return r;
}

json to_json(const EPlusOp& p) {
    json slots = json::array();
    for (const auto& [s, d] : p.slots()) {
        json d1 = json::array();
        for (const auto& [q, f] : d.coeffs()) d1.push_back(json{{"q", q}, {"series", to_json(f)}});
        json slot{{"s", s}, {"prec", d.prec()}, {"d1", std::move(d1)}};
        if (d.tail() != Tail::exact)
            slot["tail"] = d.tail() == Tail::truncated ? "truncated" : "infinite";
        slots.push_back(std::move(slot));
    }
    json out{{"window_lo", p.window_lo()}, {"slots", std::move(slots)}};
    if (p.floor_tail() != Tail::exact) out["floor"] = "truncated";
    if (p.zero_prec() < kPrecExact) out["zero_prec"] = p.zero_prec();
    return out;
}

EPlusOp eplus_from_json(const json& j) {
    EPlusOp r(j.contains("zero_prec") ? j.at("zero_prec").get<int>() : kPrecExact);
    int window = int_field(j, "window_lo");
    for (const auto& slot : j.at("slots")) {
        int s = int_field(slot, "s");
        D1Op d(int_field(slot, "prec"));
        for (const auto& e : slot.at("d1"))
            d.set_coeff(int_field(e, "q"), xseries_from_json(e.at("series")));
        if (slot.contains("tail"))
            d.set_tail(slot.at("tail") == "infinite" ? Tail::infinite : Tail::truncated);
        r.set_slot(s, d);
    }
    bool trunc = j.contains("floor") && j.at("floor") == "truncated";
    r.set_window(window, trunc ? Tail::truncated : Tail::exact);
    return r;
}

json to_json(const ZSeries& v) {
    json terms = json::array();
    for (const auto& [e, c] : v.terms()) terms.push_back(json::array({e.i, e.j, c.str()}));
    json out{{"tail_prec", v.tail_prec()}, {"terms", std::move(terms)}};
    if (v.i_bound() < kIBoundMax) out["i_bound"] = v.i_bound();
    return out;
}

ZSeries zseries_from_json(const json& j) {
    int ib = j.contains("i_bound") ? j.at("i_bound").get<int>() : kIBoundMax;
    ZSeries r(int_field(j, "tail_prec"), ib);
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 3) throw io_error("series term must be [i, j, coeff]");
        r.add_term(t[0].get<int>(), t[1].get<int>(), rat_from_json(t[2]));
    }
    return r;
}

json to_json(const UTSeries& v) {
    json terms = json::array();
    for (const auto& [e, c] : v.terms()) terms.push_back(json::array({e.a, e.b, c.str()}));
    json out{{"tail_prec", v.tail_prec()}, {"terms", std::move(terms)}};
    if (v.u_prec() < kIBoundMax) out["u_prec"] = v.u_prec();
    return out;
}

UTSeries utseries_from_json(const json& j) {
    int up = j.contains("u_prec") ? j.at("u_prec").get<int>() : kIBoundMax;
    UTSeries r(int_field(j, "tail_prec"), up);
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 3) throw io_error("series term must be [a, b, coeff]");
        r.add_term(t[0].get<int>(), t[1].get<int>(), rat_from_json(t[2]));
    }
    return r;
}

json to_json(const SubspaceW& w) {
    json basis = json::array();
    for (const auto& [key, row] : w.rows())
        basis.push_back(json{{"i", key.first}, {"j", key.second}, {"series", to_json(row)}});
    return json{{"bounds", json::array({w.bound_i(), w.bound_j()})}, {"basis", std::move(basis)}};
}

SubspaceW subspace_from_json(const json& j) {
    const auto& b = j.at("bounds");
    SubspaceW w(b.at(0).get<int>(), b.at(1).get<int>());
    for (const auto& e : j.at("basis"))
        w.set_row(int_field(e, "i"), int_field(e, "j"), zseries_from_json(e.at("series")));
    return w;
}

json to_json(const GrowthCert& c) {
    json out{{"alpha", c.alpha.str()},
             {"anchor", json::array({c.anchor_k, c.anchor_l})},
             {"kind", c.kind == CondKind::plain       ? "A"
                      : c.kind == CondKind::strong    ? "strong"
                                                      : "super_strong"},
             {"verdict", c.verdict == Verdict::holds    ? "holds"
                         : c.verdict == Verdict::fails  ? "fails"
                                                        : "inconclusive"}};
    if (c.witness) {
        out["witness"] = json{{"i", c.witness->d1_deg},
                              {"j", c.witness->d2_slot},
                              {"ord", c.witness->ord},
                              {"ord_is_floor", c.witness->ord_is_floor},
                              {"needed", c.witness->needed}};
    }
    return out;
}

json to_json(const Report& r) {
    json checks = json::array();
    for (const auto& c : r) {
        json e{{"name", c.name}, {"status", c.status}};
        if (!c.witness.empty()) e["witness"] = c.witness;
        checks.push_back(std::move(e));
    }
    return json{{"checks", std::move(checks)}};
}

json to_json(const BAFunction& f) {
    json body = json::array();
    for (const auto& [e, zs] : f.body())
        body.push_back(json{{"x1", e.i}, {"x2", e.j}, {"series", to_json(zs)}});
    return json{{"factor", "exp(x1/z1 + x2/z2)"}, {"body", std::move(body)}};
}

json to_json(const SchurValidation& v) {
    json checks = json::array();
    for (const auto& c : v.checks) {
        json e{{"name", c.name},
               {"status", c.status == TriBool::yes   ? "pass"
                          : c.status == TriBool::no  ? "fail"
                                                     : "inconclusive"}};
        if (!c.witness.empty()) e["witness"] = c.witness;
        checks.push_back(std::move(e));
    }
    return json{{"valid", v.valid},
                {"rank_r", v.data.rank_r},
                {"n_a", v.data.n_a},
                {"tilde_n_a", v.data.tilde_n_a},
                {"cutoff", v.data.cutoff},
                {"checks", std::move(checks)}};
}

} // namespace psdo
