#include <doctest.h>

#include <random>

#include "nlnum/newell_littlewood.hpp"
#include "nlnum/partition.hpp"
#include "nlnum/symfunc.hpp"

using namespace nlnum;

TEST_SUITE_BEGIN("symfunc");

namespace {

SchurExpansion single(const Partition& p, Int c = 1) {
  SchurExpansion e;
  e.add_term(p, c);
  return e;
}

}  // namespace

TEST_CASE("schur products, small") {
  SchurExpansion sq = schur_product_basis({1}, {1});
  CHECK(sq.term_count() == 2);
  CHECK(sq.coeff({2}) == 1);
  CHECK(sq.coeff({1, 1}) == 1);

  SchurExpansion p = schur_product_basis({2, 1}, {1});
  CHECK(p.term_count() == 3);
  CHECK(p.coeff({3, 1}) == 1);
  CHECK(p.coeff({2, 2}) == 1);
  CHECK(p.coeff({2, 1, 1}) == 1);
}

TEST_CASE("bilinearity on random small inputs") {
  std::mt19937 rng(7);
  auto parts = partitions_up_to(4);
  std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
  std::uniform_int_distribution<Int> coeff(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    SchurExpansion a = single(parts[pick(rng)], coeff(rng));
    SchurExpansion b = single(parts[pick(rng)], coeff(rng));
    SchurExpansion c = single(parts[pick(rng)], coeff(rng));
    CHECK(schur_product(a, b + c) == schur_product(a, b) + schur_product(a, c));
  }
}

TEST_CASE("skew schur") {
  CHECK(skew_schur(SkewShape{{4, 2}, {}}) == single({4, 2}));
  SchurExpansion s = skew_schur(SkewShape{{2, 1}, {1}});
  CHECK(s.term_count() == 2);
  CHECK(s.coeff({2}) == 1);
  CHECK(s.coeff({1, 1}) == 1);
  CHECK(skew_schur(SkewShape{{1}, {2}}).zero());
}

TEST_CASE("inner product") {
  CHECK(inner_product(single({3, 1}), single({3, 1})) == 1);
  CHECK(inner_product(single({2}) + 2 * single({1, 1}), single({1, 1})) == 2);
  CHECK(inner_product(single({2}), single({1, 1})) == 0);
}

TEST_CASE("asymmetric formula for N") {
  // N(mu,nu,lam) = sum over alpha ⊆ mu∧nu of <s_{mu/alpha} s_{nu/alpha}, s_lam>
  auto parts = partitions_up_to(5);
  for (const auto& mu : parts)
    for (const auto& nu : parts) {
      SchurExpansion sum;
      for (const auto& alpha : subpartitions(meet(mu, nu)))
        sum += schur_product(skew_schur(SkewShape{mu, alpha}),
                             skew_schur(SkewShape{nu, alpha}));
      for (const auto& [lam, c] : sum.terms())
        CHECK(c == nl_number(mu, nu, lam));
      // and the support agrees with the product expansion
      KTExpansion prod = nl_product(mu, nu);
      CHECK(prod.term_count() == sum.term_count());
    }
}

TEST_CASE("kt_to_schur determinant example") {
  SchurExpansion e = kt_to_schur({4, 2, 1});
  SchurExpansion expected = single({4, 2, 1}) - single({4, 1}) - single({3, 2}) -
                            single({3, 1, 1}) + single({3}) + single({2, 1});
  CHECK(e == expected);

  CHECK(kt_to_schur({}) == single({}));
  CHECK(kt_to_schur({1}) == single({1}));
}

TEST_CASE("kt_to_schur unitriangularity and n-stability") {
  for (const auto& lam : partitions_up_to(8)) {
    SchurExpansion e = kt_to_schur(lam);
    CHECK(e.coeff(lam) == 1);
    for (const auto& [p, c] : e.terms()) {
      if (p == lam) continue;
      CHECK(p.size() < lam.size());
      CHECK((lam.size() - p.size()) % 2 == 0);
    }
    // evaluating the determinant one row larger gives the same element
    CHECK(kt_to_schur_at(lam, lam.length() + 1) == e);
  }
}

TEST_CASE("schur_to_kt round trips") {
  for (const auto& lam : partitions_up_to(8)) {
    KTExpansion back = schur_to_kt(kt_to_schur(lam));
    CHECK(back.term_count() == 1);
    CHECK(back.coeff(lam) == 1);
  }
  CHECK(schur_to_kt(SchurExpansion{}).zero());

  // inverting the determinant example: s_{4,2,1} = s_[4,2,1] + smaller
  KTExpansion e = schur_to_kt(single({4, 2, 1}));
  CHECK(e.coeff({4, 2, 1}) == 1);
  for (const auto& [p, c] : e.terms()) {
    if (p == Partition{4, 2, 1}) continue;
    CHECK(p.size() <= 5);
  }
}

TEST_CASE("kt product via schur matches the appendix line") {
  KTExpansion e = kt_product_via_schur({2}, {2, 2});
  CHECK(e.term_count() == 7);
  for (const auto& [p, c] : e.terms()) CHECK(c == 1);
  CHECK(e.coeff({2}) == 1);
  CHECK(e.coeff({2, 1, 1}) == 1);
  CHECK(e.coeff({2, 2}) == 1);
  CHECK(e.coeff({3, 1}) == 1);
  CHECK(e.coeff({2, 2, 2}) == 1);
  CHECK(e.coeff({3, 2, 1}) == 1);
  CHECK(e.coeff({4, 2}) == 1);

  KTExpansion unit = kt_product_via_schur({1}, {1});
  CHECK(unit.term_count() == 3);
  CHECK(unit.coeff({}) == 1);
  CHECK(unit.coeff({1, 1}) == 1);
  CHECK(unit.coeff({2}) == 1);
}

TEST_CASE("the central cross-validation: both product routes agree") {
  // the triple-sum route and the determinant route compute the same product
  auto parts = partitions_up_to(6);
  for (const auto& mu : parts)
    for (const auto& nu : parts) {
      if (nu < mu) continue;  // the product is symmetric
      CHECK(kt_product_via_schur(mu, nu) == nl_product(mu, nu));
    }
}

TEST_CASE("associativity of both products on random triples") {
  std::mt19937 rng(11);
  auto parts = partitions_up_to(4);
  std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
  for (int trial = 0; trial < 10; ++trial) {
    SchurExpansion a = single(parts[pick(rng)]);
    SchurExpansion b = single(parts[pick(rng)]);
    SchurExpansion c = single(parts[pick(rng)]);
    CHECK(schur_product(schur_product(a, b), c) ==
          schur_product(a, schur_product(b, c)));
  }
}

TEST_SUITE_END();
