#pragma once

#include "psdo/eplus.hpp"

#include <optional>

namespace psdo {

enum class Verdict { holds, fails, inconclusive };
enum class CondKind { plain, strong, super_strong };

struct GrowthWitness {
    int d1_deg = 0;   // i
    int d2_slot = 0;  // j
    int ord = 0;      // observed ord_M (or knowledge floor)
    long needed = 0;  // required bound
    bool ord_is_floor = false;
};

// Certificate for a cone condition at a given anchor. Verdicts describe the
// stored truncation: `fails` carries an exact witness; `inconclusive` means
// some coefficient's precision cannot certify its order against the bound.
struct GrowthCert {
    Rat alpha;
    long anchor_k = 0, anchor_l = 0;
    CondKind kind = CondKind::plain;
    Verdict verdict = Verdict::holds;
    std::optional<GrowthWitness> witness;
};

GrowthCert check_A(const EPlusOp& p, const Rat& alpha, long k, long l);
GrowthCert check_strong(const EPlusOp& p, const Rat& alpha, long k, long l);
GrowthCert check_super_strong(const EPlusOp& p, const Rat& alpha, long k, long l);

// Anchor-free variant: check at the operator's own Gamma-order.
GrowthCert check_A_self(const EPlusOp& p, const Rat& alpha);

// Single-variable cone condition on a d1-operator: ord_M(p_s) >= s - f.
struct AACert {
    Rat f;
    Verdict verdict = Verdict::holds;
    std::optional<GrowthWitness> witness;
};
AACert check_AA(const D1Op& p, const Rat& f);
AACert check_BB(const D1Op& p, const Rat& f);
AACert check_CC(const D1Op& p, const Rat& f);

// Full order k/alpha + l; alpha must be positive.
Rat ford(const EPlusOp& p, const Rat& alpha);

// Searches for an anchor certifying the cone condition and reports the
// minimal l + k/alpha anchor found.
GrowthCert in_Pi_alpha(const EPlusOp& p, const Rat& alpha);

} // namespace psdo
