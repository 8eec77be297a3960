#include "nlnum/tableau.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <mutex>
#include <unordered_map>

namespace nlnum {

std::vector<Int> row_word(const Filling& f) {
  std::vector<Int> word;
  for (const auto& row : f.rows)
    for (auto it = row.rbegin(); it != row.rend(); ++it) word.push_back(*it);
  return word;
}

bool is_semistandard(const Filling& f) {
  const Partition& outer = f.shape.outer;
  const Partition& inner = f.shape.inner;
  if (!f.shape.valid()) return false;
  if (f.rows.size() != outer.length()) return false;
  for (std::size_t r = 0; r < outer.length(); ++r) {
    Int lo = inner.part(r), hi = outer.part(r);
    if (static_cast<Int>(f.rows[r].size()) != hi - lo) return false;
    for (std::size_t c = 0; c < f.rows[r].size(); ++c) {
      Int v = f.rows[r][c];
      if (v < 1) return false;
      if (c > 0 && f.rows[r][c - 1] > v) return false;
      if (r > 0) {
        Int col = lo + static_cast<Int>(c);  // absolute column index
        Int lo_up = inner.part(r - 1), hi_up = outer.part(r - 1);
        if (col >= lo_up && col < hi_up) {
          Int above = f.rows[r - 1][static_cast<std::size_t>(col - lo_up)];
          if (above >= v) return false;
        }
      }
    }
  }
  return true;
}

bool is_ballot(const Filling& f) {
  std::vector<Int> counts;
  for (Int v : row_word(f)) {
    if (v < 1) return false;
    if (static_cast<std::size_t>(v) > counts.size()) counts.resize(v, 0);
    ++counts[static_cast<std::size_t>(v - 1)];
    if (v > 1 && counts[v - 1] > counts[v - 2]) return false;
  }
  return true;
}

std::vector<Int> content_of(const Filling& f) {
  std::vector<Int> counts;
  for (const auto& row : f.rows)
    for (Int v : row) {
      if (static_cast<std::size_t>(v) > counts.size()) counts.resize(v, 0);
      ++counts[static_cast<std::size_t>(v - 1)];
    }
  return counts;
}

namespace {

struct TripleKey {
  Partition a, b, c;
  bool operator==(const TripleKey&) const = default;
};

struct TripleHash {
  std::size_t operator()(const TripleKey& k) const noexcept {
    PartitionHash h;
    std::size_t r = h(k.a);
    r = r * 1000003u ^ h(k.b);
    r = r * 1000003u ^ h(k.c);
    return r;
  }
};

std::unordered_map<TripleKey, Int, TripleHash> lr_cache;
std::mutex lr_cache_mutex;

// Backtracking enumeration over the boxes of outer/inner in reading order
// (right to left within each row, top to bottom). In that order the right
// neighbor and the full row above are already placed, so semistandardness
// and ballot prefixes can be checked as each box is filled.
struct LrSearch {
  const Partition& outer;
  const Partition& inner;
  std::vector<Int> remaining;                // per entry value, 1-based-1
  std::vector<Int> prefix;                   // ballot counts so far
  std::vector<std::vector<Int>> rows;        // partial filling
  Int count = 0;
  std::vector<Filling>* sink = nullptr;      // set to collect tableaux

  LrSearch(const Partition& out, const Partition& inn, const Partition& content)
      : outer(out), inner(inn) {
    remaining.assign(content.parts().begin(), content.parts().end());
    prefix.assign(remaining.size(), 0);
    rows.resize(outer.length());
    for (std::size_t r = 0; r < outer.length(); ++r)
      rows[r].assign(static_cast<std::size_t>(outer.part(r) - inner.part(r)), 0);
  }

  Int entry_at(std::size_t r, Int col) const {
    // absolute column -> row-local index; caller guarantees box exists
    return rows[r][static_cast<std::size_t>(col - inner.part(r))];
  }

  void run(std::size_t r, Int col) {
    // advance to the next box in reading order
    while (r < outer.length() && col < inner.part(r)) {
      ++r;
      col = r < outer.length() ? outer.part(r) - 1 : 0;
    }
    if (r >= outer.length()) {
      ++count;
      if (sink) {
        Filling f;
        f.shape = SkewShape{outer, inner};
        f.rows = rows;
        sink->push_back(f);
      }
      return;
    }
    Int hi = static_cast<Int>(remaining.size());
    // weak increase along the row: bounded by the right neighbor
    if (col + 1 < outer.part(r)) hi = std::min(hi, entry_at(r, col + 1));
    Int above = 0;
    if (r > 0 && col >= inner.part(r - 1) && col < outer.part(r - 1))
      above = entry_at(r - 1, col);
    for (Int v = above + 1; v <= hi; ++v) {
      std::size_t vi = static_cast<std::size_t>(v - 1);
      if (remaining[vi] == 0) continue;
      if (v > 1 && prefix[vi] + 1 > prefix[vi - 1]) continue;  // ballot prune
      --remaining[vi];
      ++prefix[vi];
      rows[r][static_cast<std::size_t>(col - inner.part(r))] = v;
      if (col > inner.part(r))
        run(r, col - 1);
      else
        run(r + 1, r + 1 < outer.length() ? outer.part(r + 1) - 1 : 0);
      ++remaining[vi];
      --prefix[vi];
    }
  }
};

bool lr_trivially_zero(const Partition& mu, const Partition& nu,
                       const Partition& lam) {
  if (checked_add(mu.size(), nu.size()) != lam.size()) return true;
  if (!lam.contains(mu) || !lam.contains(nu)) return true;
  if (nu.length() + mu.length() < lam.length()) return true;
  // Weyl bounds λ_i ≤ μ_i + ν_1 and λ_i ≤ ν_i + μ_1
  for (std::size_t i = 0; i < lam.length(); ++i) {
    if (lam.part(i) > mu.part(i) + nu.part(0)) return true;
    if (lam.part(i) > nu.part(i) + mu.part(0)) return true;
  }
  return false;
}

}  // namespace

Int lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lam) {
  if (lr_trivially_zero(mu, nu, lam)) return 0;
  if (nu.empty()) return 1;  // mu == lam at this point
  TripleKey key{mu, nu, lam};
  {
    std::lock_guard<std::mutex> lock(lr_cache_mutex);
    auto it = lr_cache.find(key);
    if (it != lr_cache.end()) return it->second;
  }
  LrSearch search(lam, mu, nu);
  search.run(0, lam.part(0) - 1);
  {
    std::lock_guard<std::mutex> lock(lr_cache_mutex);
    lr_cache.emplace(std::move(key), search.count);
  }
  return search.count;
}

std::vector<Filling> enumerate_lr_tableaux(const SkewShape& shape,
                                           const Partition& content) {
  std::vector<Filling> out;
  if (!shape.valid()) return out;
  if (shape.size() != content.size()) return out;
  if (shape.size() == 0) {
    Filling f;
    f.shape = shape;
    f.rows.resize(shape.outer.length());
    out.push_back(f);
    return out;
  }
  LrSearch search(shape.outer, shape.inner, content);
  search.sink = &out;
  search.run(0, shape.outer.part(0) - 1);
  return out;
}

Int standard_count(const Partition& lam) {
  if (lam.empty()) return 1;
  Partition conj = conjugate(lam);
  // f^λ = |λ|! / ∏ hooks; cancel factors by gcd so every step stays exact.
  std::vector<Int> denom;
  for (std::size_t r = 0; r < lam.length(); ++r)
    for (Int c = 0; c < lam.part(r); ++c)
      denom.push_back((lam.part(r) - c) +
                      (conj.part(static_cast<std::size_t>(c)) - static_cast<Int>(r)) - 1);
  Int result = 1;
  for (Int k = 1; k <= lam.size(); ++k) {
    Int num = k;
    for (Int& d : denom) {
      if (d == 1 || num == 1) continue;
      Int g = std::gcd(num, d);
      num /= g;
      d /= g;
    }
    result = checked_mul(result, num);
  }
  return result;
}

namespace {

std::map<Partition, Int>& syt_cache() {
  static std::map<Partition, Int> cache;
  return cache;
}
std::mutex syt_mutex;

Int syt_rec(const Partition& lam) {
  if (lam.size() <= 1) return 1;
  {
    std::lock_guard<std::mutex> lock(syt_mutex);
    auto it = syt_cache().find(lam);
    if (it != syt_cache().end()) return it->second;
  }
  Int total = 0;
  const auto& parts = lam.parts();
  for (std::size_t r = 0; r < parts.size(); ++r) {
    bool corner = (r + 1 == parts.size()) || (parts[r] > parts[r + 1]);
    if (!corner) continue;
    std::vector<Int> smaller = parts;
    --smaller[r];
    total = checked_add(total, syt_rec(Partition(std::move(smaller))));
  }
  {
    std::lock_guard<std::mutex> lock(syt_mutex);
    syt_cache().emplace(lam, total);
  }
  return total;
}

}  // namespace

Int standard_count_enumerated(const Partition& lam) { return syt_rec(lam); }

}  // namespace nlnum
