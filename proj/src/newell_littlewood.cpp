#include "nlnum/newell_littlewood.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "nlnum/tableau.hpp"

namespace nlnum {

namespace {

struct WitnessSizes {
  Int alpha, beta, gamma;
  bool possible;
};

WitnessSizes witness_sizes(const Partition& mu, const Partition& nu,
                           const Partition& lam) {
  Int m = mu.size(), n = nu.size(), l = lam.size();
  WitnessSizes s{0, 0, 0, false};
  if ((m + n + l) % 2 != 0) return s;                       // parity
  if (m + n < l || m + l < n || n + l < m) return s;        // triangle
  s.alpha = (m + n - l) / 2;
  s.beta = (m + l - n) / 2;
  s.gamma = (n + l - m) / 2;
  s.possible = true;
  return s;
}

template <class Visit>
void for_each_witness(const Partition& mu, const Partition& nu,
                      const Partition& lam, Visit visit) {
  WitnessSizes s = witness_sizes(mu, nu, lam);
  if (!s.possible) return;
  auto alphas = subpartitions_of_size(meet(mu, nu), s.alpha);
  auto betas = subpartitions_of_size(meet(mu, lam), s.beta);
  auto gammas = subpartitions_of_size(meet(nu, lam), s.gamma);
  for (const Partition& alpha : alphas) {
    // γ with c_{α,γ}^ν > 0, hoisted out of the β loop
    std::vector<std::pair<const Partition*, Int>> good_gammas;
    for (const Partition& gamma : gammas) {
      Int c2 = lr_coefficient(alpha, gamma, nu);
      if (c2) good_gammas.emplace_back(&gamma, c2);
    }
    if (good_gammas.empty()) continue;
    for (const Partition& beta : betas) {
      Int c1 = lr_coefficient(alpha, beta, mu);
      if (!c1) continue;
      for (const auto& [gamma, c2] : good_gammas) {
        Int c3 = lr_coefficient(beta, *gamma, lam);
        if (!c3) continue;
        visit(alpha, beta, *gamma, checked_mul(checked_mul(c1, c2), c3));
      }
    }
  }
}

}  // namespace

Int nl_number(const Partition& mu, const Partition& nu, const Partition& lam) {
  Int total = 0;
  for_each_witness(mu, nu, lam,
                   [&](const Partition&, const Partition&, const Partition&,
                       Int m) { total = checked_add(total, m); });
  return total;
}

std::vector<Witness> nl_witnesses(const Partition& mu, const Partition& nu,
                                  const Partition& lam) {
  std::vector<Witness> out;
  for_each_witness(mu, nu, lam,
                   [&](const Partition& a, const Partition& b,
                       const Partition& g, Int m) {
                     out.push_back(Witness{a, b, g, m});
                   });
  return out;
}

namespace {

// Shapes reachable from p by removing a horizontal strip of exactly j boxes.
std::vector<Partition> remove_horizontal_strips(const Partition& p, Int j) {
  std::vector<Partition> out;
  if (j < 0 || j > p.size()) return out;
  std::vector<Int> current;
  // removed boxes in row i are capped by p_{i+1}: the shrunken row must stay
  // at least as long as the row below
  std::function<void(std::size_t, Int)> rec = [&](std::size_t row, Int left) {
    if (row == p.length()) {
      if (left == 0) out.emplace_back(current);
      return;
    }
    Int lo = std::max(p.part(row + 1), p.part(row) - left);
    for (Int v = p.part(row); v >= lo; --v) {
      current.push_back(v);
      rec(row + 1, left - (p.part(row) - v));
      current.pop_back();
    }
  };
  rec(0, j);
  return out;
}

std::vector<Partition> add_horizontal_strips(const Partition& p, Int j) {
  std::vector<Partition> out;
  if (j == 0) {
    out.push_back(p);
    return out;
  }
  const std::size_t len = p.length();
  std::vector<Int> current;
  // new boxes in row i are capped by the old length of row i-1
  std::function<void(std::size_t, Int)> rec = [&](std::size_t row, Int left) {
    if (left == 0) {
      std::size_t mark = current.size();
      for (std::size_t r = row; r < len; ++r) current.push_back(p.part(r));
      out.emplace_back(current);
      current.resize(mark);
      return;
    }
    if (row < len) {
      Int hi = p.part(row) + left;
      if (row > 0) hi = std::min(hi, p.part(row - 1));
      for (Int v = hi; v >= p.part(row); --v) {
        current.push_back(v);
        rec(row + 1, left - (v - p.part(row)));
        current.pop_back();
      }
    } else if (row == len && (len == 0 || left <= p.part(len - 1))) {
      current.push_back(left);
      rec(row + 1, 0);
      current.pop_back();
    }
  };
  rec(0, j);
  return out;
}

struct PairKey {
  Partition a, b;
  bool operator==(const PairKey&) const = default;
};
struct PairHash {
  std::size_t operator()(const PairKey& k) const noexcept {
    PartitionHash h;
    return h(k.a) * 1000003u ^ h(k.b);
  }
};

std::unordered_map<PairKey, KTExpansion, PairHash> nl_product_cache;
std::mutex nl_product_cache_mutex;

}  // namespace

KTExpansion nl_pieri(const Partition& mu, Int p) {
  if (p < 0) throw std::invalid_argument("nl_pieri: p must be nonnegative");
  KTExpansion result;
  for (Int j = 0; j <= p; ++j)
    for (const Partition& beta : remove_horizontal_strips(mu, j))
      for (const Partition& lam : add_horizontal_strips(beta, p - j))
        result.add_term(lam, 1);
  return result;
}

KTExpansion nl_product(const Partition& mu, const Partition& nu) {
  const Partition& a = nu < mu ? nu : mu;
  const Partition& b = nu < mu ? mu : nu;
  PairKey key{a, b};
  {
    std::lock_guard<std::mutex> lock(nl_product_cache_mutex);
    auto it = nl_product_cache.find(key);
    if (it != nl_product_cache.end()) return it->second;
  }
  // Σ_α s_{μ/α} s_{ν/α} over α ⊆ μ∧ν carries coefficient N_{μ,ν,λ} on s_λ;
  // regrouping (1.1) by the witness α makes the support come out for free.
  SchurExpansion accumulated;
  for (const Partition& alpha : subpartitions(meet(a, b))) {
    SchurExpansion skew_mu = skew_schur(SkewShape{a, alpha});
    SchurExpansion skew_nu = skew_schur(SkewShape{b, alpha});
    accumulated += schur_product(skew_mu, skew_nu);
  }
  KTExpansion result;
  for (const auto& [lam, c] : accumulated.terms()) result.add_term(lam, c);
  {
    std::lock_guard<std::mutex> lock(nl_product_cache_mutex);
    nl_product_cache.emplace(std::move(key), result);
  }
  return result;
}

HProfile h_profile(const Partition& mu, const Partition& nu) {
  HProfile profile;
  profile.mu = mu;
  profile.nu = nu;
  Int base = sym_diff_size(mu, nu);
  profile.values.assign(static_cast<std::size_t>(meet(mu, nu).size()) + 1, 0);
  KTExpansion prod = nl_product(mu, nu);
  for (const auto& [lam, c] : prod.terms()) {
    Int t = (lam.size() - base) / 2;
    profile.values.at(static_cast<std::size_t>(t)) =
        checked_add(profile.values.at(static_cast<std::size_t>(t)), c);
  }
  return profile;
}

Partition detection_witness(const Partition& lam) {
  if (lam.size() % 2 != 0)
    throw std::invalid_argument("detection witness requires even |λ|");
  std::vector<std::size_t> odd_rows;
  for (std::size_t i = 0; i < lam.length(); ++i)
    if (lam.part(i) % 2 != 0) odd_rows.push_back(i);
  std::size_t k = odd_rows.size() / 2;  // even count since |λ| is even
  std::vector<Int> parts(lam.length());
  for (std::size_t i = 0; i < lam.length(); ++i) {
    Int v = lam.part(i);
    if (v % 2 == 0) {
      parts[i] = v / 2;
    } else if (k > 0 && i <= odd_rows[k - 1]) {
      parts[i] = (v + 1) / 2;  // top half of the odd rows
    } else {
      parts[i] = (v - 1) / 2;  // bottom half
    }
  }
  Partition mu(std::move(parts));
  if (lr_coefficient(mu, mu, lam) <= 0)
    throw std::logic_error("detection witness failed for " + lam.to_text());
  return mu;
}

Int oscillating_count(const Partition& lam, Int k) {
  if (k < 0) throw std::invalid_argument("oscillating_count: k must be nonnegative");
  std::map<Partition, Int> current{{Partition{}, 1}};
  for (Int step = 0; step < k; ++step) {
    std::map<Partition, Int> next;
    for (const auto& [p, ways] : current) {
      const auto& parts = p.parts();
      for (std::size_t r = 0; r <= parts.size(); ++r) {
        // add a box at the end of row r where the diagram stays a partition
        if (r < parts.size()) {
          if (r == 0 || parts[r] < parts[r - 1]) {
            std::vector<Int> grown = parts;
            ++grown[r];
            next[Partition(std::move(grown))] += ways;
          }
        } else {
          std::vector<Int> grown = parts;
          grown.push_back(1);
          next[Partition(std::move(grown))] += ways;
        }
      }
      for (std::size_t r = 0; r < parts.size(); ++r) {
        // remove a corner box
        if (r + 1 == parts.size() || parts[r] > parts[r + 1]) {
          std::vector<Int> shrunk = parts;
          --shrunk[r];
          next[Partition(std::move(shrunk))] += ways;
        }
      }
    }
    current = std::move(next);
  }
  auto it = current.find(lam);
  return it == current.end() ? 0 : it->second;
}

}  // namespace nlnum
