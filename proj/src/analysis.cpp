#include "nlnum/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "nlnum/tableau.hpp"

namespace nlnum {

bool is_unimodal(const std::vector<Int>& seq) {
  std::size_t i = 1;
  while (i < seq.size() && seq[i - 1] <= seq[i]) ++i;
  while (i < seq.size() && seq[i - 1] >= seq[i]) ++i;
  return i >= seq.size();
}

bool is_log_concave(const std::vector<Int>& seq) {
  for (std::size_t t = 1; t + 1 < seq.size(); ++t)
    if (checked_mul(seq[t], seq[t]) < checked_mul(seq[t - 1], seq[t + 1]))
      return false;
  return true;
}

namespace {

std::string join_values(const std::vector<Int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

// Sweeps are embarrassingly parallel over the input tuples; locally found
// counterexamples are merged and sorted by input so every thread count
// produces the same report.
std::vector<Counterexample> run_indexed(
    std::size_t total, int threads,
    const std::function<void(std::size_t, std::vector<Counterexample>&)>& body) {
  threads = std::max(threads, 1);
  std::vector<Counterexample> merged;
  if (threads == 1) {
    for (std::size_t i = 0; i < total; ++i) body(i, merged);
  } else {
    std::vector<std::vector<Counterexample>> locals(static_cast<std::size_t>(threads));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (int t = 0; t < threads; ++t)
      workers.emplace_back([&, t]() {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= total) break;
          body(i, locals[static_cast<std::size_t>(t)]);
        }
      });
    for (auto& w : workers) w.join();
    for (auto& local : locals)
      merged.insert(merged.end(), local.begin(), local.end());
  }
  std::sort(merged.begin(), merged.end());
  return merged;
}

}  // namespace

ScanReport check_unimodality(Int max_size, int threads) {
  ScanReport report;
  report.scan_name = "unimodality";
  report.parameters = {{"max-size", max_size}};
  auto parts = partitions_up_to(max_size);
  std::size_t n = parts.size();
  report.checked_count = static_cast<Int>(n * n);
  report.counterexamples =
      run_indexed(n * n, threads, [&](std::size_t t, std::vector<Counterexample>& out) {
        const Partition& mu = parts[t / n];
        const Partition& nu = parts[t % n];
        HProfile profile = h_profile(mu, nu);
        if (!is_unimodal(profile.values))
          out.push_back(Counterexample{
              {mu, nu}, "h-profile " + join_values(profile.values) + " is not unimodal"});
      });
  return report;
}

ScanReport check_saturation(Int max_size, Int max_k, int threads) {
  ScanReport report;
  report.scan_name = "saturation";
  report.parameters = {{"max-size", max_size}, {"max-k", max_k}};
  auto parts = partitions_up_to(max_size);
  std::size_t n = parts.size();
  std::vector<std::array<std::size_t, 3>> sweep;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if ((parts[a].size() + parts[b].size() + parts[c].size()) % 2 == 0)
          sweep.push_back({a, b, c});
  report.checked_count = static_cast<Int>(sweep.size());
  report.counterexamples = run_indexed(
      sweep.size(), threads, [&](std::size_t t, std::vector<Counterexample>& out) {
        const Partition& mu = parts[sweep[t][0]];
        const Partition& nu = parts[sweep[t][1]];
        const Partition& lam = parts[sweep[t][2]];
        if (nl_number(mu, nu, lam) > 0) return;
        for (Int k = 2; k <= max_k; ++k) {
          Int scaled = nl_number(scale(k, mu), scale(k, nu), scale(k, lam));
          if (scaled > 0) {
            std::ostringstream os;
            os << "N=0 at k=1 but N=" << scaled << " at k=" << k;
            out.push_back(Counterexample{{mu, nu, lam}, os.str()});
            return;
          }
        }
      });
  return report;
}

ScanReport check_multiplicity_free(Int max_size, int threads) {
  ScanReport report;
  report.scan_name = "multiplicity-free";
  report.parameters = {{"max-size", max_size}};
  auto parts = partitions_up_to(max_size);
  std::size_t n = parts.size();
  report.checked_count = static_cast<Int>(n * n);
  report.counterexamples =
      run_indexed(n * n, threads, [&](std::size_t t, std::vector<Counterexample>& out) {
        const Partition& mu = parts[t / n];
        const Partition& nu = parts[t % n];
        Int max_coeff = 0;
        KTExpansion prod = nl_product(mu, nu);
        for (const auto& [lam, c] : prod.terms())
          max_coeff = std::max(max_coeff, c);
        bool observed = max_coeff <= 1;
        bool classified = is_nl_multiplicity_free(mu, nu);
        if (observed != classified) {
          std::ostringstream os;
          os << "classifier says " << (classified ? "free" : "not free")
             << " but max coefficient is " << max_coeff;
          out.push_back(Counterexample{{mu, nu}, os.str()});
        }
      });
  return report;
}

ScanReport check_hahn(Int max_size, int threads) {
  ScanReport report;
  report.scan_name = "hahn";
  report.parameters = {{"max-size", max_size}};
  auto parts = partitions_up_to(max_size);
  report.checked_count = static_cast<Int>(parts.size());
  report.counterexamples = run_indexed(
      parts.size(), threads, [&](std::size_t t, std::vector<Counterexample>& out) {
        const Partition& lam = parts[t];
        Int triple = nl_number(lam, lam, lam);
        bool even = lam.size() % 2 == 0;
        if (even != (triple > 0)) {
          std::ostringstream os;
          os << "N(lam,lam,lam)=" << triple << " with |lam|=" << lam.size();
          out.push_back(Counterexample{{lam}, os.str()});
          return;
        }
        if (!even) return;
        try {
          detection_witness(lam);  // throws if c_{mu,mu}^lam fails to be positive
        } catch (const std::exception& e) {
          out.push_back(Counterexample{{lam}, e.what()});
        }
      });
  return report;
}

ScanReport check_associativity(Int max_size, int threads) {
  ScanReport report;
  report.scan_name = "associativity";
  report.parameters = {{"max-size", max_size}};
  auto parts = partitions_up_to(max_size);
  std::size_t n = parts.size();
  std::size_t total = n * n * n * n;
  report.checked_count = static_cast<Int>(total);
  report.counterexamples = run_indexed(
      total, threads, [&](std::size_t t, std::vector<Counterexample>& out) {
        const Partition& mu = parts[t / (n * n * n)];
        const Partition& nu = parts[(t / (n * n)) % n];
        const Partition& lam = parts[(t / n) % n];
        const Partition& tau = parts[t % n];
        Int lhs = 0, rhs = 0;
        KTExpansion left = nl_product(mu, nu);
        for (const auto& [theta, c] : left.terms())
          lhs = checked_add(lhs, checked_mul(c, nl_number(theta, lam, tau)));
        KTExpansion right = nl_product(nu, lam);
        for (const auto& [theta, c] : right.terms())
          rhs = checked_add(rhs, checked_mul(c, nl_number(mu, theta, tau)));
        if (lhs != rhs) {
          std::ostringstream os;
          os << "lhs=" << lhs << " rhs=" << rhs;
          out.push_back(Counterexample{{mu, nu, lam, tau}, os.str()});
        }
      });
  return report;
}

NLFunctionSample nl_function(const Partition& mu, const Partition& nu,
                             const Partition& lam, Int max_k) {
  if (max_k < 1) throw std::invalid_argument("nl_function: max_k must be >= 1");
  NLFunctionSample sample;
  sample.mu = mu;
  sample.nu = nu;
  sample.lam = lam;
  for (Int k = 1; k <= max_k; ++k)
    sample.values.push_back(
        nl_number(scale(k, mu), scale(k, nu), scale(k, lam)));
  return sample;
}

bool is_nl_multiplicity_free(const Partition& mu, const Partition& nu) {
  auto is_box_or_empty = [](const Partition& p) {
    return p.empty() || (p.length() == 1 && p.part(0) == 1);
  };
  auto is_single_row = [](const Partition& p) { return p.length() == 1; };
  auto is_single_column = [](const Partition& p) {
    return !p.empty() && p.part(0) == 1;
  };
  auto is_rectangle = [](const Partition& p) {
    return !p.empty() && p.part(0) == p.part(p.length() - 1);
  };
  if (is_box_or_empty(mu) || is_box_or_empty(nu)) return true;
  if (is_single_row(mu) && is_rectangle(nu)) return true;
  if (is_single_row(nu) && is_rectangle(mu)) return true;
  if (is_single_column(mu) && is_rectangle(nu)) return true;
  if (is_single_column(nu) && is_rectangle(mu)) return true;
  return false;
}

std::array<KTExpansion, 3> meetjoin_differences(const Partition& mu,
                                                const Partition& nu) {
  KTExpansion base = nl_product(mu, nu);
  std::array<KTExpansion, 3> out;
  out[0] = nl_product(meet(mu, nu), join(mu, nu)) - base;
  out[1] = nl_product(half_floor(mu, nu), half_ceil(mu, nu)) - base;
  out[2] = nl_product(sort1(mu, nu), sort2(mu, nu)) - base;
  return out;
}

namespace {

using Wide = __int128;

Int matrix_rank_fraction_free(std::vector<std::vector<Wide>> m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  Wide prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j)
        m[i][j] = (m[i][j] * m[rank][col] - m[i][col] * m[rank][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return static_cast<Int>(rank);
}

}  // namespace

std::pair<Int, Int> kleber_rank(Int a, Int b) {
  if (a < 1 || b < 1)
    throw std::invalid_argument("kleber_rank: rectangle sides must be positive");
  auto inside = partitions_in_rectangle(a, b);
  auto complement = [&](const Partition& p) {
    std::vector<Int> parts;
    for (Int i = a; i >= 1; --i)
      parts.push_back(b - p.part(static_cast<std::size_t>(i - 1)));
    return Partition(std::move(parts));
  };
  // unordered pairs, lexicographically smaller member first
  std::set<std::pair<Partition, Partition>> pairs;
  for (const Partition& p : inside) {
    Partition q = complement(p);
    if (p.parts() <= q.parts())
      pairs.emplace(p, q);
    else
      pairs.emplace(q, p);
  }
  std::vector<KTExpansion> products;
  std::set<Partition> support;
  for (const auto& [p, q] : pairs) {
    products.push_back(nl_product(p, q));
    for (const auto& [lam, c] : products.back().terms()) support.insert(lam);
  }
  std::vector<Partition> columns(support.begin(), support.end());
  std::vector<std::vector<Wide>> matrix;
  for (const auto& row : products) {
    std::vector<Wide> r;
    r.reserve(columns.size());
    for (const Partition& lam : columns) r.push_back(row.coeff(lam));
    matrix.push_back(std::move(r));
  }
  Int rank = matrix_rank_fraction_free(std::move(matrix));
  return {rank, static_cast<Int>(pairs.size())};
}

std::vector<HypothesisReport> check_floorex_candidates(Int max_k) {
  const Partition mu{2, 1, 1}, nu{2, 1, 1}, lam{1, 1, 1, 1};
  HypothesisReport odd, even;
  odd.name = "odd restriction ~ k(k+1)(k+2)/3";
  even.name = "even restriction ~ (2k+3)(k+2)(k+1)/6";
  for (Int k = 1; k <= max_k; ++k) {
    odd.observed.push_back(
        nl_number(scale(2 * k - 1, mu), scale(2 * k - 1, nu), scale(2 * k - 1, lam)));
    odd.predicted.push_back(k * (k + 1) * (k + 2) / 3);
    even.observed.push_back(
        nl_number(scale(2 * k, mu), scale(2 * k, nu), scale(2 * k, lam)));
    even.predicted.push_back((2 * k + 3) * (k + 2) * (k + 1) / 6);
  }
  odd.matches = odd.observed == odd.predicted;
  even.matches = even.observed == even.predicted;
  return {odd, even};
}

}  // namespace nlnum
