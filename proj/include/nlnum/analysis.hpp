#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "nlnum/newell_littlewood.hpp"
#include "nlnum/partition.hpp"
#include "nlnum/symfunc.hpp"

namespace nlnum {

// One failed case of a scanned property: the input tuple plus a short
// observed-vs-expected description.
struct Counterexample {
  std::vector<Partition> inputs;
  std::string detail;

  friend bool operator<(const Counterexample& a, const Counterexample& b) {
    if (a.inputs != b.inputs) return a.inputs < b.inputs;
    return a.detail < b.detail;
  }
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct ScanReport {
  std::string scan_name;
  std::vector<std::pair<std::string, Int>> parameters;
  std::vector<Counterexample> counterexamples;  // sorted by input
  Int checked_count = 0;

  [[nodiscard]] bool clean() const { return counterexamples.empty(); }
};

// Values N_{kμ,kν,kλ} for k = 1..K.
struct NLFunctionSample {
  Partition mu, nu, lam;
  std::vector<Int> values;
};

bool is_unimodal(const std::vector<Int>& seq);
bool is_log_concave(const std::vector<Int>& seq);

// Unimodality of every h-profile with |μ|,|ν| ≤ max_size (ordered pairs).
ScanReport check_unimodality(Int max_size, int threads = 1);

// Saturation: over all triples with sizes ≤ max_size and even total size,
// flags nl_number(kμ,kν,kλ) > 0 with nl_number(μ,ν,λ) = 0 for 2 ≤ k ≤ max_k.
ScanReport check_saturation(Int max_size, Int max_k, int threads = 1);

// is_nl_multiplicity_free against the max coefficient of nl_product, over
// all ordered pairs with |μ|,|ν| ≤ max_size.
ScanReport check_multiplicity_free(Int max_size, int threads = 1);

// nl_number(λ,λ,λ) > 0 ⟺ |λ| even, for |λ| ≤ max_size; for even sizes the
// detection witness μ is verified to give c_{μ,μ}^λ > 0.
ScanReport check_hahn(Int max_size, int threads = 1);

// Σ_θ N_{μ,ν,θ}N_{θ,λ,τ} = Σ_θ N_{ν,λ,θ}N_{μ,θ,τ} over all quadruples with
// sizes ≤ max_size.
ScanReport check_associativity(Int max_size, int threads = 1);

NLFunctionSample nl_function(const Partition& mu, const Partition& nu,
                             const Partition& lam, Int max_k);

// The classification: (I) one of the pair is ∅ or a single box, (II) single
// row with a rectangle, (III) single column with a rectangle.
bool is_nl_multiplicity_free(const Partition& mu, const Partition& nu);

// The three nonnegative difference expansions:
//   [0] s_[μ∧ν]s_[μ∨ν] − s_[μ]s_[ν]
//   [1] s_[⌊(μ+ν)/2⌋]s_[⌈(μ+ν)/2⌉] − s_[μ]s_[ν]
//   [2] s_[sort1(μ,ν)]s_[sort2(μ,ν)] − s_[μ]s_[ν]
std::array<KTExpansion, 3> meetjoin_differences(const Partition& mu,
                                                const Partition& nu);

// Products s_[λ]s_[λ^∨] over unordered pairs of complementary partitions in
// an a×b rectangle, as an integer matrix in the Koike-Terada basis; returns
// (rank, pair_count) with the rank computed by fraction-free elimination.
std::pair<Int, Int> kleber_rank(Int a, Int b);

// Evaluation of candidate interpolating polynomials for the odd/even
// restrictions of 𝔑 at (μ,ν,λ) = ((2,1,1),(2,1,1),(1,1,1,1)), reported per
// sample point and never asserted.
struct HypothesisReport {
  std::string name;
  std::vector<Int> observed;
  std::vector<Int> predicted;
  bool matches = false;
};
std::vector<HypothesisReport> check_floorex_candidates(Int max_k);

}  // namespace nlnum
