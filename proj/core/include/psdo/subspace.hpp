#pragma once

#include "psdo/zseries.hpp"

#include <functional>
#include <optional>
#include <string>

namespace psdo {

// Canonical echelon presentation of a subspace of k[z1^-1]((z2)) whose
// support is k[z1^-1, z2^-1] within bounds: basis elements
// w_{i,j} = z1^{-i} z2^{-j} + tail with tail supported on strictly positive
// z2 exponents. This basis is unique.
class SubspaceW {
  public:
    SubspaceW() = default;
    SubspaceW(int i_bound, int j_bound) : I_(i_bound), J_(j_bound) {}

    int bound_i() const { return I_; }
    int bound_j() const { return J_; }
    bool has(int i, int j) const { return rows_.count(std::pair<int, int>{i, j}) > 0; }
    const ZSeries& row(int i, int j) const {
        auto it = rows_.find({i, j});
        if (it == rows_.end()) throw math_error("subspace basis row out of bounds");
        return it->second;
    }
    const std::map<std::pair<int, int>, ZSeries>& rows() const { return rows_; }
    void set_row(int i, int j, const ZSeries& v) { rows_[{i, j}] = v; }

    std::vector<ZSeries> elements() const {
        std::vector<ZSeries> r;
        for (const auto& [k, v] : rows_) r.push_back(v);
        return r;
    }

  private:
    std::map<std::pair<int, int>, ZSeries> rows_;
    int I_ = 0, J_ = 0;
};

// Row-reduces the generators to the unique canonical basis. Throws when a
// pivot falls outside the big-cell support or when a required basis element
// in the bounds is missing; the message lists the missing monomials.
SubspaceW echelon_basis(const std::vector<ZSeries>& generators, int i_bound, int j_bound);

// Same, with a supplier for rows beyond the requested grid: canonicalizing
// an edge row may need pivots with larger z1-index than the bounds. The
// supplier returns the raw subspace element with the given head, or nullopt
// when it cannot provide one.
SubspaceW echelon_basis_ext(const std::vector<ZSeries>& generators, int i_bound, int j_bound,
                            const std::function<std::optional<ZSeries>(int, int)>& fetch_extra);

struct StabilizerReport {
    TriBool verdict = TriBool::unknown;
    std::string detail;
};

// Whether every basis row, acted on by p, stays in the span (within claims).
StabilizerReport stabilizes(const SubspaceW& w, const EPlusOp& p);

// Expresses v in the basis within claims: returns the coefficient list and
// the reduction remainder (which is zero iff v lies in the span as far as
// the truncation can see).
struct SpanReduction {
    std::map<std::pair<int, int>, Rat> coeffs;
    ZSeries remainder;
    bool out_of_bounds = false;
    ZExp out_monomial{};
};
SpanReduction reduce_in_span(const SubspaceW& w, const ZSeries& v);

} // namespace psdo
