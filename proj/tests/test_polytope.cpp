#include <doctest.h>

#include <stdexcept>

#include <random>

#include "nlnum/newell_littlewood.hpp"
#include "nlnum/partition.hpp"
#include "nlnum/polytope.hpp"

using namespace nlnum;

TEST_SUITE_BEGIN("polytope");

TEST_CASE("build validation and tiny systems") {
  CHECK_THROWS_AS(NLPolytope::build({2, 1}, {1}, {1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(NLPolytope::build({}, {}, {}, 0), std::invalid_argument);

  NLPolytope origin = NLPolytope::build({}, {}, {}, 1);
  auto pts = enumerate_lattice_points(origin);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].alpha == std::vector<std::vector<Int>>{{0}});
  CHECK(pts[0].beta == std::vector<std::vector<Int>>{{0}});
  CHECK(pts[0].gamma == std::vector<std::vector<Int>>{{0}});

  CHECK(NLPolytope::build({2, 2}, {2, 2}, {2, 2}, 2).dimension() == 12);
  CHECK(count_lattice_points(NLPolytope::build({1}, {1}, {1}, 1)) == 0);
  CHECK(count_lattice_points(NLPolytope::build({2, 2}, {2, 2}, {2, 2}, 2)) == 2);
}

TEST_CASE("constraint dump names the n=1 shape equations") {
  NLPolytope p = NLPolytope::build({1}, {1}, {}, 1);
  std::string text = p.constraint_text();
  CHECK(text.find("+1 a[1][1] +1 b[1][1] == 1") != std::string::npos);
  CHECK(text.find("+1 c[1][1] +1 a[1][1] == 1") != std::string::npos);
  CHECK(text.find("+1 b[1][1] +1 c[1][1] == 0") != std::string::npos);
  CHECK(count_lattice_points(p) == 1);  // alpha=1, beta=gamma=0
}

TEST_CASE("every enumerated point satisfies the materialized constraints") {
  auto parts = partitions_up_to(4);
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    const Partition& mu = parts[pick(rng)];
    const Partition& nu = parts[pick(rng)];
    const Partition& lam = parts[pick(rng)];
    std::size_t n = std::max(
        {mu.length(), nu.length(), lam.length(), std::size_t{1}});
    NLPolytope p = NLPolytope::build(mu, nu, lam, n);
    for (const auto& pt : enumerate_lattice_points(p)) CHECK(p.satisfies(pt));
  }
}

TEST_CASE("oracle equivalence on all triples to size 4") {
  auto parts = partitions_up_to(4);
  for (const auto& mu : parts)
    for (const auto& nu : parts)
      for (const auto& lam : parts) {
        std::size_t n = std::max(
            {mu.length(), nu.length(), lam.length(), std::size_t{1}});
        CHECK(count_lattice_points(NLPolytope::build(mu, nu, lam, n)) ==
              nl_number(mu, nu, lam));
      }
}

TEST_CASE("count is stable in n") {
  auto parts = partitions_up_to(4);
  std::mt19937 rng(17);
  std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
  for (int trial = 0; trial < 25; ++trial) {
    const Partition& mu = parts[pick(rng)];
    const Partition& nu = parts[pick(rng)];
    const Partition& lam = parts[pick(rng)];
    std::size_t n = std::max(
        {mu.length(), nu.length(), lam.length(), std::size_t{1}});
    Int base = count_lattice_points(NLPolytope::build(mu, nu, lam, n));
    CHECK(count_lattice_points(NLPolytope::build(mu, nu, lam, n + 1)) == base);
    CHECK(count_lattice_points(NLPolytope::build(mu, nu, lam, n + 2)) == base);
  }
}

TEST_CASE("lattice points round trip through tableau triples") {
  auto parts = partitions_up_to(4);
  std::mt19937 rng(29);
  std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
  int seen = 0;
  for (int trial = 0; trial < 60 && seen < 30; ++trial) {
    const Partition& mu = parts[pick(rng)];
    const Partition& nu = parts[pick(rng)];
    const Partition& lam = parts[pick(rng)];
    std::size_t n = std::max(
        {mu.length(), nu.length(), lam.length(), std::size_t{1}});
    NLPolytope p = NLPolytope::build(mu, nu, lam, n);
    for (const auto& pt : enumerate_lattice_points(p)) {
      auto tabs = lattice_point_to_tableaux(p, pt);
      for (const auto& t : tabs) {
        CHECK(is_semistandard(t));
        CHECK(is_ballot(t));
      }
      CHECK(tableaux_to_lattice_point(p, tabs) == pt);
      ++seen;
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("semigroup additivity of lattice points") {
  NLPolytope p = NLPolytope::build({2, 1}, {1, 1}, {2, 1}, 2);
  NLPolytope q = NLPolytope::build({2, 2}, {2, 2}, {2, 2}, 2);
  NLPolytope sum_poly =
      NLPolytope::build(add({2, 1}, {2, 2}), add({1, 1}, {2, 2}),
                        add({2, 1}, {2, 2}), 2);
  auto ps = enumerate_lattice_points(p);
  auto qs = enumerate_lattice_points(q);
  REQUIRE(!ps.empty());
  REQUIRE(!qs.empty());
  for (const auto& x : ps)
    for (const auto& y : qs) {
      LatticePoint sum = x;
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
          sum.alpha[i][j] += y.alpha[i][j];
          sum.beta[i][j] += y.beta[i][j];
          sum.gamma[i][j] += y.gamma[i][j];
        }
      CHECK(sum_poly.satisfies(sum));
    }
}

TEST_CASE("dilation") {
  NLPolytope p = NLPolytope::build({1, 1}, {1, 1}, {1, 1}, 2);
  CHECK(count_lattice_points(p) == 1);
  CHECK(count_lattice_points(p.dilate(2)) == 2);
  CHECK(count_lattice_points(p.dilate(1)) == 1);
  CHECK(p.dilate(1).constraint_text() == p.constraint_text());

  // positivity is preserved under dilation
  auto parts = partitions_up_to(3);
  std::mt19937 rng(31);
  std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
  for (int trial = 0; trial < 30; ++trial) {
    const Partition& mu = parts[pick(rng)];
    const Partition& nu = parts[pick(rng)];
    const Partition& lam = parts[pick(rng)];
    std::size_t n = std::max(
        {mu.length(), nu.length(), lam.length(), std::size_t{1}});
    NLPolytope base = NLPolytope::build(mu, nu, lam, n);
    if (count_lattice_points(base) == 0) continue;
    for (Int k = 2; k <= 4; ++k)
      CHECK(count_lattice_points(base.dilate(k)) >= 1);
  }
}

TEST_SUITE_END();
