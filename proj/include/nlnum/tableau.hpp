#pragma once

#include <vector>

#include "nlnum/partition.hpp"

namespace nlnum {

// A skew shape outer/inner. Not validated at construction; operations that
// need a genuine skew shape check valid() themselves.
struct SkewShape {
  Partition outer;
  Partition inner;

  [[nodiscard]] bool valid() const { return outer.contains(inner); }
  [[nodiscard]] Int size() const { return outer.size() - inner.size(); }
};

// A filling of a skew shape: rows[r] holds the entries of row r, left to
// right, one per box of outer/inner in that row.
struct Filling {
  SkewShape shape;
  std::vector<std::vector<Int>> rows;

  friend bool operator==(const Filling& a, const Filling& b) {
    return a.shape.outer == b.shape.outer && a.shape.inner == b.shape.inner &&
           a.rows == b.rows;
  }
};

// Right-to-left, top-to-bottom row reading word.
std::vector<Int> row_word(const Filling& f);

// Rows weakly increase, columns strictly increase.
bool is_semistandard(const Filling& f);

// Every prefix of the reading word has #{i} ≥ #{i+1} for all i.
// Precondition: f is semistandard.
bool is_ballot(const Filling& f);

// Content of the filling, as counts per entry value (index 0 = entry 1).
std::vector<Int> content_of(const Filling& f);

// The Littlewood-Richardson coefficient c_{mu,nu}^{lam}: the number of
// ballot semistandard tableaux of shape lam/mu and content nu. Returns 0
// whenever mu ⊄ lam or |mu| + |nu| ≠ |lam|. Memoized in-process.
Int lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lam);

// All LR tableaux of the given shape and content, in the deterministic order
// produced by filling boxes in reading order with ascending entries.
// Length always equals lr_coefficient(shape.inner, content, shape.outer).
std::vector<Filling> enumerate_lr_tableaux(const SkewShape& shape,
                                           const Partition& content);

// Number of standard Young tableaux of shape lam, by the hook length formula.
Int standard_count(const Partition& lam);

// Same count by explicit corner-removal recursion; the cross-check oracle.
Int standard_count_enumerated(const Partition& lam);

}  // namespace nlnum
