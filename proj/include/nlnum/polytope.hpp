#pragma once

#include <array>
#include <string>
#include <vector>

#include "nlnum/partition.hpp"
#include "nlnum/tableau.hpp"

namespace nlnum {

// A lattice point of the Newell-Littlewood polytope: three n×n nonnegative
// integer matrices indexed [label][row] (0-based). alpha[i][j] counts the
// entries i+1 in row j+1 of the tableau contributing to ν, and so on.
struct LatticePoint {
  std::vector<std::vector<Int>> alpha, beta, gamma;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// One materialized constraint: Σ coef·x ≤ rhs or Σ coef·x = rhs, with all
// coefficients ±1. Variables are indexed 0..3n²-1.
struct LinearConstraint {
  std::vector<std::pair<int, int>> terms;  // (variable index, ±1)
  bool equality = false;
  Int rhs = 0;
};

// The polytope P_{μ,ν,λ} ⊆ R^{3n²} cut out by nonnegativity, the shape
// equalities, the semistandardness inequalities, and the ballot
// inequalities. Its lattice points biject with the LR tableau triples
// counted by N_{μ,ν,λ}.
class NLPolytope {
 public:
  // Throws std::invalid_argument unless n ≥ max(ℓ(μ), ℓ(ν), ℓ(λ)) and n ≥ 1.
  static NLPolytope build(const Partition& mu, const Partition& nu,
                          const Partition& lam, std::size_t n);

  // Same constraint system for (kμ, kν, kλ); coincides with the k-fold
  // dilation of this polytope.
  [[nodiscard]] NLPolytope dilate(Int k) const;

  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] std::size_t dimension() const { return 3 * n_ * n_; }
  [[nodiscard]] const Partition& mu() const { return mu_; }
  [[nodiscard]] const Partition& nu() const { return nu_; }
  [[nodiscard]] const Partition& lam() const { return lam_; }

  // Variable indexing: kind 0 = α, 1 = β, 2 = γ; i = label, j = row
  // (both 0-based). Names render 1-based as a[i][j], b[i][j], c[i][j].
  [[nodiscard]] std::size_t var_index(int kind, std::size_t i, std::size_t j) const;
  [[nodiscard]] std::string var_name(std::size_t index) const;

  // All constraints of families (1)-(4), in a fixed documented order.
  [[nodiscard]] std::vector<LinearConstraint> constraints() const;
  [[nodiscard]] std::string constraint_text() const;

  [[nodiscard]] bool satisfies(const LatticePoint& pt) const;

  [[nodiscard]] std::vector<Int> flatten(const LatticePoint& pt) const;

 private:
  std::size_t n_ = 0;
  Partition mu_, nu_, lam_;
};

// Exact lattice-point count by depth-first enumeration: β variables first
// (label-major), then γ, then α, each bounded by its shape-equation
// residuals, with ballot and semistandardness checked incrementally.
Int count_lattice_points(const NLPolytope& p);

// All lattice points, in the DFS order of count_lattice_points.
std::vector<LatticePoint> enumerate_lattice_points(const NLPolytope& p);

// The bijection of lattice points with triples of LR tableaux (T,U,V) of
// shapes μ/α, ν/γ, λ/β and contents β, α, γ.
std::array<Filling, 3> lattice_point_to_tableaux(const NLPolytope& p,
                                                 const LatticePoint& pt);
LatticePoint tableaux_to_lattice_point(const NLPolytope& p,
                                       const std::array<Filling, 3>& tabs);

}  // namespace nlnum
