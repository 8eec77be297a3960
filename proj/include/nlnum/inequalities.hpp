#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nlnum/partition.hpp"

namespace nlnum {

// A Horn inequality index: subsets I, J, K of [n] of common cardinality d
// (1-based, increasing) whose derived partitions τ(I) = (i_d-d ≥ … ≥ i_1-1)
// satisfy c_{τ(I),τ(J)}^{τ(K)} > 0.
struct HornTriple {
  int d = 0;
  std::vector<int> I, J, K;
  Partition tauI, tauJ, tauK;
};

// All valid Horn triples for every d < n, subsets in combinadic order.
// Cached per n.
const std::vector<HornTriple>& horn_triples(int n);

// Σ_{k∈K} λ_k ≤ Σ_{i∈I} μ_i + Σ_{j∈J} ν_j for every triple at level n.
// No size assumption; this is the necessary-condition form.
bool horn_holds(const Partition& mu, const Partition& nu, const Partition& lam,
                int n);
std::optional<std::string> first_horn_violation(const Partition& mu,
                                                const Partition& nu,
                                                const Partition& lam, int n);

// Exact positivity decision for c_{μ,ν}^λ via the Horn characterization at
// n = max length + 1. Throws std::invalid_argument unless |μ| + |ν| = |λ|.
bool lr_positive_via_horn(const Partition& mu, const Partition& nu,
                          const Partition& lam);

// The extended Weyl inequalities, over all index tuples
// 1 ≤ k ≤ i < j ≤ l ≤ n, 0 ≤ p ≤ m = min(i-k, l-j), M = max(i-k, l-j):
//   μ_i - μ_j + λ_l - λ_k ≤ ν_{m-p+1} + ν_{M+p+2}
// checked for all six permutations of (μ,ν,λ). Entries beyond a partition's
// length read 0.
bool extended_weyl_holds(const Partition& mu, const Partition& nu,
                         const Partition& lam, int n);
std::optional<std::string> first_extended_weyl_violation(const Partition& mu,
                                                         const Partition& nu,
                                                         const Partition& lam,
                                                         int n);

// Complete membership test for NL₂: parity, the triangle inequalities, the
// nine two-row Horn/Weyl inequalities, and the six extended Weyl
// inequalities. Throws std::invalid_argument if any partition has more than
// two parts. Coincides with nl_number > 0.
bool nl2_member(const Partition& mu, const Partition& nu, const Partition& lam);

// Name of the first violated NL₂ condition, checked in the order above;
// empty when (μ,ν,λ) is a member.
std::optional<std::string> first_nl2_violation(const Partition& mu,
                                               const Partition& nu,
                                               const Partition& lam);

}  // namespace nlnum
