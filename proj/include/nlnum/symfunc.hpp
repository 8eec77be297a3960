#pragma once

#include <map>
#include <string>
#include <vector>

#include "nlnum/partition.hpp"
#include "nlnum/tableau.hpp"

namespace nlnum {

// A finitely supported integer combination of basis elements indexed by
// partitions. The tag keeps Schur-basis and Koike-Terada-basis values from
// being mixed by accident; the representation is identical.
template <class BasisTag>
class Expansion {
 public:
  using Terms = std::map<Partition, Int>;

  Expansion() = default;

  [[nodiscard]] Int coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(const Partition& p, Int c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  Expansion& operator+=(const Expansion& other) {
    for (const auto& [p, c] : other.terms_) add_term(p, c);
    return *this;
  }
  Expansion& operator-=(const Expansion& other) {
    for (const auto& [p, c] : other.terms_) add_term(p, -c);
    return *this;
  }
  Expansion& operator*=(Int k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [p, c] : terms_) c = checked_mul(c, k);
    return *this;
  }
  friend Expansion operator+(Expansion a, const Expansion& b) { return a += b; }
  friend Expansion operator-(Expansion a, const Expansion& b) { return a -= b; }
  friend Expansion operator*(Int k, Expansion a) { return a *= k; }

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t term_count() const { return terms_.size(); }

  // Sum of all coefficients (total multiplicity mass).
  [[nodiscard]] Int total() const {
    Int t = 0;
    for (const auto& [p, c] : terms_) t = checked_add(t, c);
    return t;
  }

  friend bool operator==(const Expansion& a, const Expansion& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

struct SchurBasis {};
struct KoikeTeradaBasis {};

using SchurExpansion = Expansion<SchurBasis>;
using KTExpansion = Expansion<KoikeTeradaBasis>;

// s_mu · s_nu in the Schur basis, via LR coefficients. Memoized.
SchurExpansion schur_product_basis(const Partition& mu, const Partition& nu);

// Bilinear extension of schur_product_basis.
SchurExpansion schur_product(const SchurExpansion& a, const SchurExpansion& b);

// s_{outer/inner} = Σ_ν c_{inner,ν}^{outer} s_ν; zero if inner ⊄ outer.
SchurExpansion skew_schur(const SkewShape& shape);

// Hall inner product: ⟨s_λ, s_μ⟩ = δ_{λμ}, extended bilinearly.
Int inner_product(const SchurExpansion& a, const SchurExpansion& b);

// The Koike-Terada element s_[λ] written in the Schur basis, from the n×n
// determinant in complete homogeneous functions with columns
// h_{λ*} and h_{λ*+j(1^n)} + h_{λ*-j(1^n)}, n = ℓ(λ). Memoized.
SchurExpansion kt_to_schur(const Partition& lam);

// Same determinant evaluated at a given n ≥ ℓ(λ) (stability check hook).
SchurExpansion kt_to_schur_at(const Partition& lam, std::size_t n);

// Inverse change of basis by peeling leading terms: s_[λ] = s_λ + smaller.
// Throws std::logic_error (with the offending residue) if peeling fails to
// make progress, which would indicate a broken kt_to_schur.
KTExpansion schur_to_kt(const SchurExpansion& e);

// s_[μ]·s_[ν] computed entirely through the Schur basis:
// schur_to_kt(kt_to_schur(μ) · kt_to_schur(ν)). Independent of the
// triple-sum route in newell_littlewood.
KTExpansion kt_product_via_schur(const Partition& mu, const Partition& nu);

}  // namespace nlnum
