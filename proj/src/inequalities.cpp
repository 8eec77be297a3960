#include "nlnum/inequalities.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "nlnum/tableau.hpp"

namespace nlnum {

namespace {

Partition tau(const std::vector<int>& subset) {
  std::vector<Int> parts;
  int d = static_cast<int>(subset.size());
  for (int t = d; t >= 1; --t)
    parts.push_back(subset[static_cast<std::size_t>(t - 1)] - t);
  return Partition(std::move(parts));
}

std::vector<std::vector<int>> subsets_of_size(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = d - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - d + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::map<int, std::vector<HornTriple>> horn_cache;
std::mutex horn_cache_mutex;

std::string subset_text(const std::vector<int>& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  os << '}';
  return os.str();
}

Int subset_sum(const Partition& p, const std::vector<int>& subset) {
  Int sum = 0;
  for (int i : subset) sum = checked_add(sum, p.part(static_cast<std::size_t>(i - 1)));
  return sum;
}

}  // namespace

const std::vector<HornTriple>& horn_triples(int n) {
  if (n < 1) throw std::invalid_argument("horn_triples: n must be positive");
  {
    std::lock_guard<std::mutex> lock(horn_cache_mutex);
    auto it = horn_cache.find(n);
    if (it != horn_cache.end()) return it->second;
  }
  std::vector<HornTriple> triples;
  for (int d = 1; d < n; ++d) {
    auto subsets = subsets_of_size(n, d);
    for (const auto& I : subsets) {
      Partition tI = tau(I);
      for (const auto& J : subsets) {
        Partition tJ = tau(J);
        for (const auto& K : subsets) {
          Partition tK = tau(K);
          if (lr_coefficient(tI, tJ, tK) > 0)
            triples.push_back(HornTriple{d, I, J, K, tI, tJ, tK});
        }
      }
    }
  }
  std::lock_guard<std::mutex> lock(horn_cache_mutex);
  return horn_cache.emplace(n, std::move(triples)).first->second;
}

std::optional<std::string> first_horn_violation(const Partition& mu,
                                                const Partition& nu,
                                                const Partition& lam, int n) {
  for (const HornTriple& t : horn_triples(n)) {
    Int lhs = subset_sum(lam, t.K);
    Int rhs = checked_add(subset_sum(mu, t.I), subset_sum(nu, t.J));
    if (lhs > rhs) {
      std::ostringstream os;
      os << "horn d=" << t.d << " I=" << subset_text(t.I) << " J="
         << subset_text(t.J) << " K=" << subset_text(t.K) << ": " << lhs
         << " > " << rhs;
      return os.str();
    }
  }
  return std::nullopt;
}

bool horn_holds(const Partition& mu, const Partition& nu, const Partition& lam,
                int n) {
  return !first_horn_violation(mu, nu, lam, n).has_value();
}

bool lr_positive_via_horn(const Partition& mu, const Partition& nu,
                          const Partition& lam) {
  if (checked_add(mu.size(), nu.size()) != lam.size())
    throw std::invalid_argument("lr_positive_via_horn requires |mu| + |nu| = |lam|");
  int n = static_cast<int>(
              std::max({mu.length(), nu.length(), lam.length(), std::size_t{1}})) +
          1;
  return horn_holds(mu, nu, lam, n);
}

namespace {

// One oriented instance: a_i - a_j + c_l - c_k ≤ b_{m-p+1} + b_{M+p+2},
// with a carrying the difference, b the two summed entries, c the (k,l)
// difference. 1-based indices.
std::optional<std::string> extended_weyl_oriented(const Partition& a,
                                                  const Partition& b,
                                                  const Partition& c, int n,
                                                  const char* names) {
  for (int k = 1; k <= n; ++k)
    for (int i = k; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int l = j; l <= n; ++l) {
          int m = std::min(i - k, l - j);
          int M = std::max(i - k, l - j);
          for (int p = 0; p <= m; ++p) {
            Int lhs = a.part(static_cast<std::size_t>(i - 1)) -
                      a.part(static_cast<std::size_t>(j - 1)) +
                      c.part(static_cast<std::size_t>(l - 1)) -
                      c.part(static_cast<std::size_t>(k - 1));
            Int rhs = b.part(static_cast<std::size_t>(m - p)) +
                      b.part(static_cast<std::size_t>(M + p + 1));
            if (lhs > rhs) {
              std::ostringstream os;
              os << "extended-weyl (" << names << ") i=" << i << " j=" << j
                 << " k=" << k << " l=" << l << " p=" << p << ": " << lhs
                 << " > " << rhs;
              return os.str();
            }
          }
        }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> first_extended_weyl_violation(const Partition& mu,
                                                         const Partition& nu,
                                                         const Partition& lam,
                                                         int n) {
  const std::array<std::array<const Partition*, 3>, 6> perms = {{
      {&mu, &nu, &lam},
      {&mu, &lam, &nu},
      {&nu, &mu, &lam},
      {&nu, &lam, &mu},
      {&lam, &mu, &nu},
      {&lam, &nu, &mu},
  }};
  const std::array<const char*, 6> names = {"mu,nu,lam", "mu,lam,nu",
                                            "nu,mu,lam", "nu,lam,mu",
                                            "lam,mu,nu", "lam,nu,mu"};
  for (std::size_t s = 0; s < perms.size(); ++s) {
    auto violation = extended_weyl_oriented(*perms[s][0], *perms[s][1],
                                            *perms[s][2], n, names[s]);
    if (violation) return violation;
  }
  return std::nullopt;
}

bool extended_weyl_holds(const Partition& mu, const Partition& nu,
                         const Partition& lam, int n) {
  return !first_extended_weyl_violation(mu, nu, lam, n).has_value();
}

std::optional<std::string> first_nl2_violation(const Partition& mu,
                                               const Partition& nu,
                                               const Partition& lam) {
  if (mu.length() > 2 || nu.length() > 2 || lam.length() > 2)
    throw std::invalid_argument("nl2_member requires partitions of length <= 2");
  auto check = [](bool ok, const char* name) -> std::optional<std::string> {
    if (ok) return std::nullopt;
    return std::string(name);
  };
  Int m1 = mu.part(0), m2 = mu.part(1);
  Int n1 = nu.part(0), n2 = nu.part(1);
  Int l1 = lam.part(0), l2 = lam.part(1);
  Int sm = mu.size(), sn = nu.size(), sl = lam.size();

  const std::pair<bool, const char*> conditions[] = {
      {(sm + sn + sl) % 2 == 0, "parity |mu|+|nu|+|lam| even"},
      {sm + sn >= sl, "triangle |mu|+|nu| >= |lam|"},
      {sm + sl >= sn, "triangle |mu|+|lam| >= |nu|"},
      {sn + sl >= sm, "triangle |nu|+|lam| >= |mu|"},
      // two-row Horn/Weyl inequalities and their cyclic images
      {l1 <= m1 + n1, "lam1 <= mu1+nu1"},
      {n1 <= l1 + m1, "nu1 <= lam1+mu1"},
      {m1 <= l1 + n1, "mu1 <= lam1+nu1"},
      {l2 <= m1 + n2, "lam2 <= mu1+nu2"},
      {n2 <= l1 + m2, "nu2 <= lam1+mu2"},
      {m2 <= l1 + n2, "mu2 <= lam1+nu2"},
      {l2 <= m2 + n1, "lam2 <= mu2+nu1"},
      {n2 <= l2 + m1, "nu2 <= lam2+mu1"},
      {m2 <= l2 + n1, "mu2 <= lam2+nu1"},
      // extended Weyl inequalities, all six orientations
      {n1 - n2 <= m1 + m2 + l1 - l2, "nu1-nu2 <= mu1+mu2+lam1-lam2"},
      {m1 - m2 <= l1 + l2 + n1 - n2, "mu1-mu2 <= lam1+lam2+nu1-nu2"},
      {l1 - l2 <= n1 + n2 + m1 - m2, "lam1-lam2 <= nu1+nu2+mu1-mu2"},
      {l1 - l2 <= m1 + m2 + n1 - n2, "lam1-lam2 <= mu1+mu2+nu1-nu2"},
      {m1 - m2 <= n1 + n2 + l1 - l2, "mu1-mu2 <= nu1+nu2+lam1-lam2"},
      {n1 - n2 <= l1 + l2 + m1 - m2, "nu1-nu2 <= lam1+lam2+mu1-mu2"},
  };
  for (const auto& [ok, name] : conditions) {
    auto v = check(ok, name);
    if (v) return v;
  }
  return std::nullopt;
}

bool nl2_member(const Partition& mu, const Partition& nu, const Partition& lam) {
  return !first_nl2_violation(mu, nu, lam).has_value();
}

}  // namespace nlnum
