#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace nlnum {

using Int = std::int64_t;

// Addition/multiplication with hard overflow errors. Desk-scale inputs never
// get close, but silent wraparound would corrupt counts.
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

// An integer partition in canonical form: weakly decreasing positive parts,
// no trailing zeros. The empty partition is the empty sequence.
//
// Text encoding (used by every CLI flag and JSON field): comma-separated
// decimal parts, e.g. "4,2,1"; the empty partition is the literal "-".
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<Int> parts);
  Partition(std::initializer_list<Int> parts);

  // Throws std::invalid_argument on malformed text.
  static Partition parse(const std::string& text);

  [[nodiscard]] std::string to_text() const;     // "4,2,1" / "-"
  [[nodiscard]] std::string to_bracket() const;  // "[4,2,1]" / "[]"

  [[nodiscard]] Int size() const { return size_; }  // |λ|, number of boxes
  [[nodiscard]] std::size_t length() const { return parts_.size(); }
  [[nodiscard]] bool empty() const { return parts_.empty(); }

  // 0-based row access; rows beyond length() read 0.
  [[nodiscard]] Int part(std::size_t i) const {
    return i < parts_.size() ? parts_[i] : 0;
  }
  [[nodiscard]] const std::vector<Int>& parts() const { return parts_; }

  // other ⊆ *this, componentwise with zero padding.
  [[nodiscard]] bool contains(const Partition& other) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  // Canonical total order used everywhere a deterministic partition order is
  // needed (expansion keys, report sorting, matrix columns): by size first,
  // then lexicographically on the part vectors.
  friend bool operator<(const Partition& a, const Partition& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    return a.parts_ < b.parts_;
  }

 private:
  std::vector<Int> parts_;
  Int size_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

// Transpose of the Young diagram; an involution.
Partition conjugate(const Partition& p);

// Componentwise min / max (meet and join in Young's lattice).
Partition meet(const Partition& a, const Partition& b);
Partition join(const Partition& a, const Partition& b);

// |aΔb|: boxes in exactly one of the two diagrams, = |a| + |b| - 2|a∧b|.
Int sym_diff_size(const Partition& a, const Partition& b);

// Multiset union of the parts, sorted decreasing.
Partition union_sorted(const Partition& a, const Partition& b);

// Componentwise sum and scalar multiple (k ≥ 1).
Partition add(const Partition& a, const Partition& b);
Partition scale(Int k, const Partition& p);

// Coordinatewise ⌊(a+b)/2⌋ and ⌈(a+b)/2⌉ after zero-padding.
Partition half_floor(const Partition& a, const Partition& b);
Partition half_ceil(const Partition& a, const Partition& b);

// Odd/even-indexed entries (1-based) of union_sorted(a, b).
Partition sort1(const Partition& a, const Partition& b);
Partition sort2(const Partition& a, const Partition& b);

// All α ⊆ bound with |α| = s, each exactly once, in lexicographically
// decreasing order of the part vectors.
std::vector<Partition> subpartitions_of_size(const Partition& bound, Int s);

// All α ⊆ bound, grouped by size ascending, lex decreasing within a size.
std::vector<Partition> subpartitions(const Partition& bound);

// All partitions of total size exactly s (s ≥ 0), lex decreasing.
std::vector<Partition> partitions_of(Int s);

// All partitions with size ≤ max_size, in canonical order.
std::vector<Partition> partitions_up_to(Int max_size);

// All partitions inside a rows × cols rectangle, in canonical order.
std::vector<Partition> partitions_in_rectangle(Int rows, Int cols);

}  // namespace nlnum
