#pragma once

#include <vector>

#include "nlnum/partition.hpp"
#include "nlnum/symfunc.hpp"

namespace nlnum {

// A triple (α,β,γ) with c_{α,β}^μ c_{α,γ}^ν c_{β,γ}^λ > 0, certifying
// N_{μ,ν,λ} > 0; multiplicity is that product.
struct Witness {
  Partition alpha, beta, gamma;
  Int multiplicity = 0;

  friend bool operator==(const Witness&, const Witness&) = default;
};

// Coefficient sums of s_[μ]s_[ν] graded by partition size:
// values[t] = Σ over |λ| = |μΔν| + 2t of N_{μ,ν,λ}, t = 0..|μ∧ν|.
struct HProfile {
  Partition mu, nu;
  std::vector<Int> values;
};

// N_{μ,ν,λ} = Σ_{α,β,γ} c_{α,β}^μ c_{α,γ}^ν c_{β,γ}^λ. The sum collapses to
// a finite loop: |α| is pinned by 2|α| + |λ| = |μ| + |ν| with α ⊆ μ∧ν, and
// likewise for β ⊆ μ∧λ, γ ⊆ ν∧λ. Returns 0 immediately on parity or
// triangle failure.
Int nl_number(const Partition& mu, const Partition& nu, const Partition& lam);

// All witnesses with positive multiplicity; multiplicities sum to nl_number.
// Order follows the subpartition generator (α outer, then β, then γ).
std::vector<Witness> nl_witnesses(const Partition& mu, const Partition& nu,
                                  const Partition& lam);

// s_[μ]·s_[(p)] by the Pieri-type rule: remove a horizontal strip of j boxes
// (0 ≤ j ≤ p) from μ, then add a horizontal strip of p-j boxes; coefficients
// count the ways.
KTExpansion nl_pieri(const Partition& mu, Int p);

// Full expansion s_[μ]s_[ν] = Σ_λ N_{μ,ν,λ} s_[λ], accumulated from witness
// pairs: for each α ⊆ μ∧ν the product of skew expansions s_{μ/α}·s_{ν/α}
// contributes its Schur support. Memoized.
KTExpansion nl_product(const Partition& mu, const Partition& nu);

HProfile h_profile(const Partition& mu, const Partition& nu);

// For |λ| even, the explicit μ with c_{μ,μ}^λ > 0: even parts are halved,
// odd parts get +1 in the top half of the odd rows and -1 in the bottom
// half. Throws std::invalid_argument for odd |λ|; the postcondition
// c_{μ,μ}^λ > 0 is checked before returning.
Partition detection_witness(const Partition& lam);

// Coefficient of s_[λ] in s_[(1)]^k: walks of length k in Young's lattice
// from ∅ to λ, one box added or removed per step.
Int oscillating_count(const Partition& lam, Int k);

}  // namespace nlnum
