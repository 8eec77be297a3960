#include "nlnum/symfunc.hpp"

#include <bit>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace nlnum {

namespace {

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

std::unordered_map<PairKey, SchurExpansion, PairHash> product_cache;
std::mutex product_cache_mutex;

// Candidate outer shapes for s_mu s_nu: λ ⊇ mu of size |mu|+|nu| with
// λ_i ≤ mu_i + nu_1 and at most ℓ(mu)+ℓ(nu) rows. LR coefficients then
// decide membership exactly.
void candidate_shapes(const Partition& mu, const Partition& nu,
                      std::vector<Partition>& out) {
  Int total = checked_add(mu.size(), nu.size());
  std::size_t max_rows = mu.length() + nu.length();
  std::vector<Int> current;
  std::function<void(std::size_t, Int)> rec = [&](std::size_t row, Int remaining) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (row >= max_rows) return;
    Int hi = std::min(mu.part(row) + nu.part(0), remaining);
    if (row > 0) hi = std::min(hi, current[row - 1]);
    for (Int v = hi; v >= std::max<Int>(mu.part(row), 1); --v) {
      current.push_back(v);
      rec(row + 1, remaining - v);
      current.pop_back();
    }
  };
  rec(0, total);
}

}  // namespace

SchurExpansion schur_product_basis(const Partition& mu, const Partition& nu) {
  // symmetric; normalize the cache key
  const Partition& a = nu < mu ? nu : mu;
  const Partition& b = nu < mu ? mu : nu;
  PairKey key{a, b};
  {
    std::lock_guard<std::mutex> lock(product_cache_mutex);
    auto it = product_cache.find(key);
    if (it != product_cache.end()) return it->second;
  }
  SchurExpansion result;
  std::vector<Partition> shapes;
  candidate_shapes(b, a, shapes);  // wider bound partition first is cheaper
  for (const Partition& lam : shapes) {
    Int c = lr_coefficient(b, a, lam);
    if (c) result.add_term(lam, c);
  }
  {
    std::lock_guard<std::mutex> lock(product_cache_mutex);
    product_cache.emplace(std::move(key), result);
  }
  return result;
}

SchurExpansion schur_product(const SchurExpansion& a, const SchurExpansion& b) {
  SchurExpansion result;
  for (const auto& [mu, cm] : a.terms())
    for (const auto& [nu, cn] : b.terms()) {
      SchurExpansion prod = schur_product_basis(mu, nu);
      prod *= checked_mul(cm, cn);
      result += prod;
    }
  return result;
}

SchurExpansion skew_schur(const SkewShape& shape) {
  SchurExpansion result;
  if (!shape.valid()) return result;
  Int boxes = shape.size();
  for (const Partition& nu : partitions_of(boxes)) {
    Int c = lr_coefficient(shape.inner, nu, shape.outer);
    if (c) result.add_term(nu, c);
  }
  return result;
}

Int inner_product(const SchurExpansion& a, const SchurExpansion& b) {
  // iterate the smaller support
  const SchurExpansion& s = a.term_count() <= b.term_count() ? a : b;
  const SchurExpansion& t = a.term_count() <= b.term_count() ? b : a;
  Int result = 0;
  for (const auto& [p, c] : s.terms())
    result = checked_add(result, checked_mul(c, t.coeff(p)));
  return result;
}

namespace {

// Multiply an expansion by h_t = s_(t): Pieri, add a horizontal t-strip.
// New boxes in row i are capped at the old length of row i-1, so no two of
// them share a column.
SchurExpansion multiply_by_h(const SchurExpansion& e, Int t) {
  if (t < 0) return {};
  if (t == 0) return e;
  SchurExpansion result;
  for (const auto& [p, c] : e.terms()) {
    const std::size_t len = p.length();
    std::vector<Int> current;
    std::function<void(std::size_t, Int)> rec = [&](std::size_t row, Int left) {
      if (left == 0) {
        std::size_t mark = current.size();
        for (std::size_t r = row; r < len; ++r) current.push_back(p.part(r));
        result.add_term(Partition(current), c);
        current.resize(mark);
        return;
      }
      if (row < len) {
        Int lo = p.part(row);
        Int hi = lo + left;
        if (row > 0) hi = std::min(hi, p.part(row - 1));
        for (Int v = hi; v >= lo; --v) {
          current.push_back(v);
          rec(row + 1, left - (v - lo));
          current.pop_back();
        }
      } else if (row == len) {
        // one new row may take all that is left
        if (len == 0 || left <= p.part(len - 1)) {
          current.push_back(left);
          rec(row + 1, 0);
          current.pop_back();
        }
      }
    };
    rec(0, t);
  }
  return result;
}

std::unordered_map<Partition, SchurExpansion, PartitionHash> kt_cache;
std::mutex kt_cache_mutex;

}  // namespace

SchurExpansion kt_to_schur_at(const Partition& lam, std::size_t n) {
  if (n < std::max<std::size_t>(lam.length(), 1))
    throw std::invalid_argument("kt_to_schur_at: n smaller than ℓ(λ)");
  // staircase-shifted parts λ*_i = λ_i - (i-1), i = 1..n
  std::vector<Int> star(n);
  for (std::size_t i = 0; i < n; ++i)
    star[i] = lam.part(i) - static_cast<Int>(i);

  // Cofactor expansion with minors memoized over column subsets: minor(S)
  // uses rows 1..|S| and the column set S. Column j = 0 contributes h_{λ*_i};
  // column j ≥ 1 contributes h_{λ*_i + j} + h_{λ*_i - j}.
  std::vector<SchurExpansion> minor(std::size_t{1} << n);
  {
    SchurExpansion unit;
    unit.add_term(Partition{}, 1);
    minor[0] = unit;
  }
  for (std::size_t mask = 1; mask < minor.size(); ++mask) {
    std::size_t row = static_cast<std::size_t>(std::popcount(mask));  // 1-based
    SchurExpansion acc;
    int sign = (row % 2 == 1) ? +1 : -1;  // (-1)^{row-1} · (-1)^{bit index}
    std::size_t bit_index = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      const SchurExpansion& sub = minor[mask ^ (std::size_t{1} << j)];
      if (!sub.zero()) {
        SchurExpansion contrib =
            multiply_by_h(sub, star[row - 1] + static_cast<Int>(j));
        if (j > 0) contrib += multiply_by_h(sub, star[row - 1] - static_cast<Int>(j));
        contrib *= (bit_index % 2 == 0) ? sign : -sign;
        acc += contrib;
      }
      ++bit_index;
    }
    minor[mask] = std::move(acc);
  }
  return minor[minor.size() - 1];
}

SchurExpansion kt_to_schur(const Partition& lam) {
  {
    std::lock_guard<std::mutex> lock(kt_cache_mutex);
    auto it = kt_cache.find(lam);
    if (it != kt_cache.end()) return it->second;
  }
  SchurExpansion result = kt_to_schur_at(lam, std::max<std::size_t>(lam.length(), 1));
  {
    std::lock_guard<std::mutex> lock(kt_cache_mutex);
    kt_cache.emplace(lam, result);
  }
  return result;
}

KTExpansion schur_to_kt(const SchurExpansion& e) {
  KTExpansion result;
  SchurExpansion work = e;
  while (!work.zero()) {
    // largest remaining term in the canonical (size, lex) order
    auto it = std::prev(work.terms().end());
    Partition lam = it->first;
    Int c = it->second;
    SchurExpansion image = kt_to_schur(lam);
    if (image.coeff(lam) != 1) {
      std::ostringstream os;
      os << "schur_to_kt: leading coefficient of s_[" << lam.to_text()
         << "] is " << image.coeff(lam) << ", residue has " << work.term_count()
         << " terms";
      throw std::logic_error(os.str());
    }
    result.add_term(lam, c);
    image *= c;
    work -= image;
    if (work.coeff(lam) != 0)
      throw std::logic_error("schur_to_kt: no progress on s_" + lam.to_text());
  }
  return result;
}

KTExpansion kt_product_via_schur(const Partition& mu, const Partition& nu) {
  return schur_to_kt(schur_product(kt_to_schur(mu), kt_to_schur(nu)));
}

}  // namespace nlnum
