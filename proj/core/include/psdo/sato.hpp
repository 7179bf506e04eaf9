#pragma once

#include "psdo/growth.hpp"
#include "psdo/subspace.hpp"

namespace psdo {

// Rows z1^{-i} z2^{-j} * s for 0 <= i <= I, 0 <= j <= J, in canonical echelon
// form. Requires s = 1 + (strictly negative d2 slots) and enough x-precision
// to populate the requested bounds.
SubspaceW w_from_s(const EPlusOp& s, int i_bound, int j_bound);

// The unique operator S = 1 + S^- with W0*S = W, recovered slice by slice in
// anti-lex order. The output carries an honest per-slot precision ledger
// derived from the basis tails and bounds.
EPlusOp reconstruct_s(const SubspaceW& w);

// Same, with a cone-condition certificate: every basis row must lie in the
// alpha-cone for its own index, each slice is checked during the recursion,
// and the assembled operator is certified at anchor (0,0).
std::pair<EPlusOp, GrowthCert> reconstruct_s_certified(const SubspaceW& w, const Rat& alpha);

} // namespace psdo
