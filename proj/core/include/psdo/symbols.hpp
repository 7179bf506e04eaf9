#pragma once

#include "psdo/eplus.hpp"

namespace psdo {

// Homogeneous polynomial in the symbols xi1, xi2 with rational coefficients.
class SymbolPoly {
  public:
    SymbolPoly() = default;
    void add_term(int e1, int e2, const Rat& c) {
        if (c.is_zero()) return;
        auto [it, ins] = t_.emplace(Exp2{e1, e2}, c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    const std::map<Exp2, Rat>& terms() const { return t_; }
    Rat coeff(int e1, int e2) const {
        auto it = t_.find(Exp2{e1, e2});
        return it == t_.end() ? Rat(0) : it->second;
    }
    bool is_zero() const { return t_.empty(); }
    friend bool operator==(const SymbolPoly&, const SymbolPoly&) = default;
    std::string str() const;

  private:
    std::map<Exp2, Rat> t_;
};

// Homogeneous symbol with series coefficients, the general form entering the
// Poisson bracket.
class SymbolField {
  public:
    explicit SymbolField(int prec = kPrecExact) : prec_(prec) {}
    // Folds a knowledge level into the field even when no term is stored.
    void note_prec(int p) { prec_ = prec_min(prec_, p); }
    void add_term(int e1, int e2, const XSeries& c) {
        if (c.is_zero()) return;
        prec_ = prec_min(prec_, c.prec());
        auto [it, ins] = t_.emplace(Exp2{e1, e2}, c);
        if (!ins) {
            XSeries s = it->second + c;
            if (s.is_zero())
                t_.erase(it);
            else
                it->second = s;
        }
    }
    const std::map<Exp2, XSeries>& terms() const { return t_; }
    XSeries coeff(int e1, int e2) const {
        auto it = t_.find(Exp2{e1, e2});
        return it == t_.end() ? XSeries(prec_) : it->second;
    }
    bool is_zero() const { return t_.empty(); }
    int prec() const { return prec_; }
    bool agree_below(const SymbolField& o, int p) const;

  private:
    std::map<Exp2, XSeries> t_;
    int prec_;
};

// Total (filtration) order of a differential operator: max d1-degree +
// d2-degree over nonzero terms. Requires a PDO-shaped operator.
long total_order(const EPlusOp& p);

// Degree-m homogeneous symbol with series coefficients.
SymbolField symbol_at(const EPlusOp& p, long m);

// True when the top-order homogeneous part has constant coefficients.
bool check_constant_symbol(const EPlusOp& p);

// Principal symbol with constant coefficients; throws if the operator is not
// PDO-shaped or a top-order coefficient is non-constant.
SymbolPoly principal_symbol(const EPlusOp& p);

// {f, g} = sum_v df/dxi_v d_v(g) - dg/dxi_v d_v(f), homogeneous of degree
// deg f + deg g - 1.
SymbolField poisson_bracket(const SymbolField& f, const SymbolField& g);
SymbolPoly poisson_bracket(const SymbolPoly& f, const SymbolPoly& g);

// Linear change of coordinates: substitutes x_i = sum_j m_{ji} x'_j in every
// coefficient and rewrites the derivations accordingly; defined for
// differential operators with nonsingular m. Commutation relations of the
// images are verified internally.
EPlusOp linear_change(const EPlusOp& p, const Mat2& m);

} // namespace psdo
