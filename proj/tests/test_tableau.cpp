#include <doctest.h>

#include <set>

#include "nlnum/partition.hpp"
#include "nlnum/tableau.hpp"

using namespace nlnum;

TEST_SUITE_BEGIN("tableau");

namespace {

Filling make_filling(Partition outer, Partition inner,
                     std::vector<std::vector<Int>> rows) {
  Filling f;
  f.shape = SkewShape{std::move(outer), std::move(inner)};
  f.rows = std::move(rows);
  return f;
}

}  // namespace

TEST_CASE("ballot words") {
  // shape (5,4,2)/(3,1) with reading word (1,1,2,2,1,3,1)
  Filling t1 = make_filling({5, 4, 2}, {3, 1}, {{1, 1}, {1, 2, 2}, {1, 3}});
  CHECK(is_semistandard(t1));
  CHECK(row_word(t1) == std::vector<Int>{1, 1, 2, 2, 1, 3, 1});
  CHECK(is_ballot(t1));

  Filling ones = make_filling({4}, {}, {{1, 1, 1, 1}});
  CHECK(is_ballot(ones));

  // first read letter 2 fails the prefix at once
  Filling bad = make_filling({2}, {1}, {{2}});
  CHECK_FALSE(is_ballot(bad));
}

TEST_CASE("lr_coefficient pinned values") {
  CHECK(lr_coefficient({3, 1}, {4, 2, 1}, {5, 4, 2}) == 2);
  CHECK(lr_coefficient({}, {3, 2}, {3, 2}) == 1);
  CHECK(lr_coefficient({1}, {1}, {2}) == 1);
  CHECK(lr_coefficient({1}, {1}, {1, 1}) == 1);
  CHECK(lr_coefficient({2}, {2}, {1, 1, 1, 1}) == 0);
}

TEST_CASE("enumerate_lr_tableaux") {
  auto tabs = enumerate_lr_tableaux(SkewShape{{5, 4, 2}, {3, 1}}, {4, 2, 1});
  REQUIRE(tabs.size() == 2);
  Filling t1 = make_filling({5, 4, 2}, {3, 1}, {{1, 1}, {1, 2, 2}, {1, 3}});
  Filling t2 = make_filling({5, 4, 2}, {3, 1}, {{1, 1}, {1, 1, 2}, {2, 3}});
  std::set<std::vector<Int>> words{row_word(tabs[0]), row_word(tabs[1])};
  CHECK(words.count(row_word(t1)) == 1);
  CHECK(words.count(row_word(t2)) == 1);
  for (const auto& t : tabs) {
    CHECK(is_semistandard(t));
    CHECK(is_ballot(t));
  }

  // unique highest-weight filling: row i all i's
  auto straight = enumerate_lr_tableaux(SkewShape{{3, 2}, {}}, {3, 2});
  REQUIRE(straight.size() == 1);
  CHECK(straight[0].rows == std::vector<std::vector<Int>>{{1, 1, 1}, {2, 2}});

  // column strictness impossible in one row
  CHECK(enumerate_lr_tableaux(SkewShape{{2}, {}}, {1, 1}).empty());
}

TEST_CASE("lr enumeration length matches coefficient") {
  auto parts = partitions_up_to(6);
  for (const auto& lam : parts)
    for (const auto& mu : parts) {
      if (!lam.contains(mu)) continue;
      for (const auto& nu : partitions_of(lam.size() - mu.size())) {
        auto tabs = enumerate_lr_tableaux(SkewShape{lam, mu}, nu);
        CHECK(static_cast<Int>(tabs.size()) == lr_coefficient(mu, nu, lam));
      }
    }
}

TEST_CASE("symmetry and conjugation invariance") {
  for (Int size = 0; size <= 8; ++size) {
    for (const auto& lam : partitions_of(size)) {
      for (Int a = 0; a <= size; ++a) {
        for (const auto& mu : partitions_of(a)) {
          if (!lam.contains(mu)) continue;
          for (const auto& nu : partitions_of(size - a)) {
            Int c = lr_coefficient(mu, nu, lam);
            CHECK(c == lr_coefficient(nu, mu, lam));
            CHECK(c == lr_coefficient(conjugate(mu), conjugate(nu), conjugate(lam)));
          }
        }
      }
    }
  }
}

TEST_CASE("degree vanishing") {
  CHECK(lr_coefficient({2, 1}, {2}, {3, 1}) == 0);  // sizes 3+2 != 4
  CHECK(lr_coefficient({5}, {1}, {2, 1}) == 0);
}

TEST_CASE("Pieri: single-row content gives 0/1, horizontal strips") {
  for (const auto& mu : partitions_up_to(6)) {
    for (Int p = 0; p <= 4; ++p) {
      for (const auto& lam : partitions_of(mu.size() + p)) {
        Int c = lr_coefficient(mu, Partition{p}, lam);
        CHECK(c <= 1);
        bool strip = lam.contains(mu);
        if (strip)
          for (std::size_t i = 0; i + 1 < lam.length(); ++i)
            if (lam.part(i + 1) > mu.part(i)) strip = false;
        CHECK(c == (strip ? 1 : 0));
      }
    }
  }
}

TEST_CASE("rectangle duality") {
  // inside an l x (m-l) rectangle with |mu|+|nu| = l(m-l), the coefficient
  // of the full rectangle is 1 exactly when nu complements mu
  for (Int l = 1; l <= 3; ++l) {
    for (Int w = 1; w <= 3; ++w) {
      std::vector<Int> rect_parts(static_cast<std::size_t>(l), w);
      Partition rect(rect_parts);
      for (const auto& mu : partitions_in_rectangle(l, w)) {
        std::vector<Int> comp;
        for (Int i = l; i >= 1; --i)
          comp.push_back(w - mu.part(static_cast<std::size_t>(i - 1)));
        Partition mu_vee(comp);
        for (const auto& nu : partitions_of(rect.size() - mu.size())) {
          Int c = lr_coefficient(mu, nu, rect);
          CHECK(c == ((nu == mu_vee) ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("standard_count") {
  CHECK(standard_count({1}) == 1);
  CHECK(standard_count({2, 1}) == 2);
  CHECK(standard_count({2, 2}) == 2);
  CHECK(standard_count({}) == 1);
  for (const auto& lam : partitions_up_to(9))
    CHECK(standard_count(lam) == standard_count_enumerated(lam));
}

TEST_SUITE_END();
