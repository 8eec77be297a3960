#include "nlnum/polytope.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace nlnum {

NLPolytope NLPolytope::build(const Partition& mu, const Partition& nu,
                             const Partition& lam, std::size_t n) {
  if (n < 1) throw std::invalid_argument("polytope dimension n must be positive");
  if (n < std::max({mu.length(), nu.length(), lam.length()}))
    throw std::invalid_argument("polytope dimension n smaller than a partition length");
  NLPolytope p;
  p.n_ = n;
  p.mu_ = mu;
  p.nu_ = nu;
  p.lam_ = lam;
  return p;
}

NLPolytope NLPolytope::dilate(Int k) const {
  if (k < 1) throw std::invalid_argument("dilation factor must be positive");
  return build(scale(k, mu_), scale(k, nu_), scale(k, lam_), n_);
}

std::size_t NLPolytope::var_index(int kind, std::size_t i, std::size_t j) const {
  return (static_cast<std::size_t>(kind) * n_ + i) * n_ + j;
}

std::string NLPolytope::var_name(std::size_t index) const {
  static const char* names = "abc";
  std::size_t kind = index / (n_ * n_);
  std::size_t i = (index / n_) % n_;
  std::size_t j = index % n_;
  std::ostringstream os;
  os << names[kind] << '[' << (i + 1) << "][" << (j + 1) << ']';
  return os.str();
}

std::vector<LinearConstraint> NLPolytope::constraints() const {
  std::vector<LinearConstraint> out;
  const std::size_t n = n_;
  const std::array<const Partition*, 3> shape_rhs = {&mu_, &nu_, &lam_};
  // family (2), shape equalities: label totals of one matrix plus row totals
  // of the next; the (α,β,γ) cycle pairs (α,β)→μ, (γ,α)→ν, (β,γ)→λ
  const std::array<std::pair<int, int>, 3> cycle = {{{0, 1}, {2, 0}, {1, 2}}};

  // (1) nonnegativity, as -x ≤ 0
  for (std::size_t v = 0; v < dimension(); ++v) {
    LinearConstraint c;
    c.terms.emplace_back(static_cast<int>(v), -1);
    c.rhs = 0;
    out.push_back(std::move(c));
  }
  // (2) shape
  for (std::size_t f = 0; f < 3; ++f) {
    auto [label_kind, row_kind] = cycle[f];
    for (std::size_t k = 0; k < n; ++k) {
      LinearConstraint c;
      c.equality = true;
      c.rhs = shape_rhs[f]->part(k);
      for (std::size_t j = 0; j < n; ++j)
        c.terms.emplace_back(static_cast<int>(var_index(label_kind, k, j)), +1);
      for (std::size_t i = 0; i < n; ++i)
        c.terms.emplace_back(static_cast<int>(var_index(row_kind, i, k)), +1);
      out.push_back(std::move(c));
    }
  }
  // (3) semistandardness: for the tableau with inner-shape matrix `inner`
  // and entry matrix `entries`, rows k,k+1 and prefix label l:
  //   innerTot[k+1] + Σ_{i≤l} entries[i][k+1] ≤ innerTot[k] + Σ_{i<l} entries[i][k]
  for (std::size_t f = 0; f < 3; ++f) {
    auto [inner_kind, entry_kind] = cycle[f];
    for (std::size_t k = 0; k + 1 < n; ++k) {
      for (std::size_t l = 1; l <= n; ++l) {
        LinearConstraint c;
        c.rhs = 0;
        for (std::size_t j = 0; j < n; ++j) {
          c.terms.emplace_back(static_cast<int>(var_index(inner_kind, k + 1, j)), +1);
          c.terms.emplace_back(static_cast<int>(var_index(inner_kind, k, j)), -1);
        }
        for (std::size_t i = 0; i < l; ++i)
          c.terms.emplace_back(static_cast<int>(var_index(entry_kind, i, k + 1)), +1);
        for (std::size_t i = 0; i + 1 < l; ++i)
          c.terms.emplace_back(static_cast<int>(var_index(entry_kind, i, k)), -1);
        out.push_back(std::move(c));
      }
    }
  }
  // (4) ballot, per matrix: Σ_{j≤k} x[l+1][j] ≤ Σ_{j<k} x[l][j]
  for (int kind = 0; kind < 3; ++kind) {
    for (std::size_t l = 0; l + 1 < n; ++l) {
      for (std::size_t k = 0; k < n; ++k) {
        LinearConstraint c;
        c.rhs = 0;
        for (std::size_t j = 0; j <= k; ++j)
          c.terms.emplace_back(static_cast<int>(var_index(kind, l + 1, j)), +1);
        for (std::size_t j = 0; j < k; ++j)
          c.terms.emplace_back(static_cast<int>(var_index(kind, l, j)), -1);
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

std::string NLPolytope::constraint_text() const {
  std::ostringstream os;
  for (const auto& c : constraints()) {
    bool first = true;
    for (const auto& [v, coef] : c.terms) {
      if (!first) os << ' ';
      os << (coef > 0 ? "+1 " : "-1 ") << var_name(static_cast<std::size_t>(v));
      first = false;
    }
    os << (c.equality ? " == " : " <= ") << c.rhs << '\n';
  }
  return os.str();
}

std::vector<Int> NLPolytope::flatten(const LatticePoint& pt) const {
  std::vector<Int> x(dimension(), 0);
  const std::array<const std::vector<std::vector<Int>>*, 3> mats = {
      &pt.alpha, &pt.beta, &pt.gamma};
  for (int kind = 0; kind < 3; ++kind)
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        x[var_index(kind, i, j)] = (*mats[kind])[i][j];
  return x;
}

bool NLPolytope::satisfies(const LatticePoint& pt) const {
  std::vector<Int> x = flatten(pt);
  for (Int v : x)
    if (v < 0) return false;
  for (const auto& c : constraints()) {
    Int lhs = 0;
    for (const auto& [v, coef] : c.terms) lhs += coef * x[static_cast<std::size_t>(v)];
    if (c.equality ? lhs != c.rhs : lhs > c.rhs) return false;
  }
  return true;
}

namespace {

using Matrix = std::vector<std::vector<Int>>;

// Staged DFS over the 3n² variables. β is assigned first (label-major),
// then γ, then α. Each variable is bounded by the residuals of its two
// shape equations; ballot prefixes bound it further as it is placed, and
// the semistandardness family for a tableau is checked as soon as all of
// its variables are known.
struct LatticeSearch {
  std::size_t n;
  std::vector<Int> mu, nu, lam;  // zero-padded to n
  Matrix A, B, C;
  Int count = 0;
  std::vector<LatticePoint>* sink = nullptr;

  explicit LatticeSearch(const NLPolytope& p) : n(p.n()) {
    auto pad = [&](const Partition& q) {
      std::vector<Int> v(n, 0);
      for (std::size_t i = 0; i < n; ++i) v[i] = q.part(i);
      return v;
    };
    mu = pad(p.mu());
    nu = pad(p.nu());
    lam = pad(p.lam());
    A.assign(n, std::vector<Int>(n, 0));
    B.assign(n, std::vector<Int>(n, 0));
    C.assign(n, std::vector<Int>(n, 0));
  }

  static std::vector<Int> label_totals(const Matrix& m) {
    std::vector<Int> t(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (Int v : m[i]) t[i] += v;
    return t;
  }

  // Semistandardness family (3) for a tableau with the given inner-shape
  // totals and entry matrix.
  bool semistandard_ok(const std::vector<Int>& inner_tot, const Matrix& entries) const {
    for (std::size_t k = 0; k + 1 < n; ++k) {
      Int upper = inner_tot[k];     // inner[k] + Σ_{i<l} entries[i][k]
      Int lower = inner_tot[k + 1]; // inner[k+1] + Σ_{i≤l} entries[i][k+1]
      for (std::size_t l = 0; l < n; ++l) {
        lower += entries[l][k + 1];
        if (lower > upper) return false;
        upper += entries[l][k];
      }
    }
    return true;
  }

  // One label-major matrix phase. row_cap/label_cap give the shape-equation
  // residual capacities; exact targets (when the phase closes an equality)
  // are enforced by *_exact. done runs at the end of the phase.
  //
  // prefix[i][j] = Σ_{r<j} m[i][r] along the current path. Entries are
  // rewritten before any read that depends on them, so no save/restore is
  // needed on backtrack: prefix[i][j] is only read once rows 0..j-1 of
  // label i are assigned, and the previous label is complete by then.
  void assign_matrix(Matrix& m, const std::vector<Int>& label_cap,
                     const std::vector<Int>& row_cap, bool label_exact,
                     bool row_exact, const std::function<void()>& done) {
    std::vector<Int> row_used(n, 0), label_used(n, 0);
    Matrix prefix(n, std::vector<Int>(n + 1, 0));

    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                            std::size_t j) {
      if (j == n) {
        if (label_exact && label_used[i] != label_cap[i]) return;
        if (i + 1 == n) {
          if (row_exact)
            for (std::size_t r = 0; r < n; ++r)
              if (row_used[r] != row_cap[r]) return;
          done();
        } else {
          rec(i + 1, 0);
        }
        return;
      }
      Int ub = std::min(label_cap[i] - label_used[i], row_cap[j] - row_used[j]);
      // ballot: Σ_{r≤j} m[i][r] may not exceed Σ_{r<j} m[i-1][r]
      if (i > 0) ub = std::min(ub, prefix[i - 1][j] - prefix[i][j]);
      if (ub < 0) return;
      Int lo = 0;
      if (label_exact && j + 1 == n) lo = label_cap[i] - label_used[i];
      if (row_exact && i + 1 == n) {
        Int forced = row_cap[j] - row_used[j];
        if (forced < lo || forced > ub) return;
        lo = ub = forced;
      }
      if (lo > ub) return;
      for (Int v = lo; v <= ub; ++v) {
        m[i][j] = v;
        label_used[i] += v;
        row_used[j] += v;
        prefix[i][j + 1] = prefix[i][j] + v;
        rec(i, j + 1);
        label_used[i] -= v;
        row_used[j] -= v;
      }
      m[i][j] = 0;
    };

    rec(0, 0);
  }

  void run() { phase_beta(); }

  void phase_beta() {
    // β[i][j] ≤ residual of S_μ(row j) and of S_λ(label i)
    assign_matrix(
        B, lam, mu, /*label_exact=*/false, /*row_exact=*/false,
        [&]() {
          // inner shape of T is forced: αTot[k] = μ_k - Σ_i β[i][k]
          std::vector<Int> alpha_tot(n, 0);
          std::vector<Int> beta_row(n, 0);
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) beta_row[k] += B[i][k];
          for (std::size_t k = 0; k < n; ++k) alpha_tot[k] = mu[k] - beta_row[k];
          if (!semistandard_ok(alpha_tot, B)) return;
          phase_gamma(alpha_tot);
        });
  }

  void phase_gamma(const std::vector<Int>& alpha_tot) {
    std::vector<Int> beta_tot = label_totals(B);
    std::vector<Int> row_target(n, 0);
    Int need = 0, avail = 0;
    for (std::size_t j = 0; j < n; ++j) {
      row_target[j] = lam[j] - beta_tot[j];
      if (row_target[j] < 0) return;
      need += row_target[j];
      avail += nu[j];
    }
    if (need > avail) return;
    assign_matrix(
        C, nu, row_target, /*label_exact=*/false, /*row_exact=*/true,
        [&]() {
          if (!semistandard_ok(beta_tot, C)) return;
          phase_alpha(alpha_tot);
        });
  }

  void phase_alpha(const std::vector<Int>& alpha_tot) {
    std::vector<Int> gamma_tot = label_totals(C);
    std::vector<Int> row_target(n, 0);
    Int label_sum = 0, row_sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
      row_target[j] = nu[j] - gamma_tot[j];
      if (row_target[j] < 0) return;
      row_sum += row_target[j];
      label_sum += alpha_tot[j];
    }
    if (label_sum != row_sum) return;
    assign_matrix(
        A, alpha_tot, row_target, /*label_exact=*/true, /*row_exact=*/true,
        [&]() {
          if (!semistandard_ok(gamma_tot, A)) return;
          ++count;
          if (sink) sink->push_back(LatticePoint{A, B, C});
        });
  }
};

}  // namespace

Int count_lattice_points(const NLPolytope& p) {
  LatticeSearch search(p);
  search.run();
  return search.count;
}

std::vector<LatticePoint> enumerate_lattice_points(const NLPolytope& p) {
  std::vector<LatticePoint> out;
  LatticeSearch search(p);
  search.sink = &out;
  search.run();
  return out;
}

std::array<Filling, 3> lattice_point_to_tableaux(const NLPolytope& p,
                                                 const LatticePoint& pt) {
  auto totals = [&](const Matrix& m) {
    std::vector<Int> t;
    for (const auto& row : m) {
      Int s = 0;
      for (Int v : row) s += v;
      t.push_back(s);
    }
    return Partition(std::move(t));
  };
  Partition alpha = totals(pt.alpha);
  Partition beta = totals(pt.beta);
  Partition gamma = totals(pt.gamma);

  auto make = [&](const Partition& outer, const Partition& inner,
                  const Matrix& entries) {
    Filling f;
    f.shape = SkewShape{outer, inner};
    f.rows.resize(outer.length());
    for (std::size_t j = 0; j < outer.length(); ++j)
      for (std::size_t i = 0; i < entries.size(); ++i)
        for (Int rep = 0; rep < entries[i][j]; ++rep)
          f.rows[j].push_back(static_cast<Int>(i + 1));
    return f;
  };
  return {make(p.mu(), alpha, pt.beta), make(p.nu(), gamma, pt.alpha),
          make(p.lam(), beta, pt.gamma)};
}

LatticePoint tableaux_to_lattice_point(const NLPolytope& p,
                                       const std::array<Filling, 3>& tabs) {
  const std::size_t n = p.n();
  LatticePoint pt;
  pt.alpha.assign(n, std::vector<Int>(n, 0));
  pt.beta.assign(n, std::vector<Int>(n, 0));
  pt.gamma.assign(n, std::vector<Int>(n, 0));
  const std::array<Matrix*, 3> mats = {&pt.beta, &pt.alpha, &pt.gamma};
  for (std::size_t t = 0; t < 3; ++t) {
    const Filling& f = tabs[t];
    for (std::size_t j = 0; j < f.rows.size(); ++j)
      for (Int v : f.rows[j])
        ++(*mats[t])[static_cast<std::size_t>(v - 1)][j];
  }
  return pt;
}

}  // namespace nlnum
