#include "hk/combinat.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"

#include "hk/rewrite.hpp"

using namespace hk;

TEST_CASE("catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(4) == 14);
  CHECK(catalan(8) == 1430);
}

TEST_CASE("pattern avoidance counts") {
  CHECK(avoiders_321(2) == 2);
  CHECK(avoiders_321(3) == 5);
  for (int m = 1; m <= 8; ++m) CHECK(avoiders_321(m) == catalan(m));
  CHECK(list_321_avoiders(3).size() == 5);
}

TEST_CASE("short braid avoidance") {
  Perm w321;
  w321.img = {3, 2, 1};
  CHECK_FALSE(is_short_braid_avoiding(w321));
  CHECK(is_short_braid_avoiding(Perm::identity(4)));
  int count = 0;
  Perm p = Perm::identity(4);
  std::sort(p.img.begin(), p.img.end());
  do {
    if (is_short_braid_avoiding(p)) ++count;
  } while (std::next_permutation(p.img.begin(), p.img.end()));
  CHECK(count == 14);
  // equivalent to 321-avoidance
  for (int m = 2; m <= 5; ++m) {
    Perm q = Perm::identity(m);
    std::sort(q.img.begin(), q.img.end());
    do {
      CHECK(is_short_braid_avoiding(q) == is_321_avoiding(q));
    } while (std::next_permutation(q.img.begin(), q.img.end()));
  }
}

TEST_CASE("strongly special words") {
  auto w1 = strongly_special_words(1);
  CHECK(w1.size() == 2);
  auto w2 = strongly_special_words(2);
  std::set<Word> got(w2.begin(), w2.end());
  CHECK(got == std::set<Word>{Word(), word_from_digits("1"), word_from_digits("2"),
                              word_from_digits("12"), word_from_digits("21")});

  CHECK(strongly_special_classes(1) == 2);
  CHECK(strongly_special_classes(2) == 5);
  for (int n = 1; n <= 5; ++n) CHECK(strongly_special_classes(n) == catalan(n + 1));

  // strongly special words are special
  for (int n = 1; n <= 4; ++n) {
    auto strong = strongly_special_words(n);
    auto special = special_words(n);
    std::set<Word> sp(special.begin(), special.end());
    for (const Word& w : strong) CHECK(sp.count(w));
  }
}

TEST_CASE("special word counts match the full collapse") {
  CHECK(special_words_count(1) == 2);
  CHECK(special_words_count(2) == 5);
  bool capped = false;
  for (int n = 1; n <= 3; ++n) {
    FiniteMonoid k = monoid_of_graph(kiselman_graph(n));
    CHECK(special_words_count(n, &capped) == k.size());
    CHECK_FALSE(capped);
  }
}

TEST_CASE("the fully collapsed graph") {
  MixedGraph g = kiselman_graph(2);
  CHECK(g.has_arrow(2, 1));
  CHECK(g.edges.size() == 1);
  g = kiselman_graph(3);
  CHECK(g.has_arrow(2, 1));
  CHECK(g.has_arrow(3, 1));
  CHECK(g.has_arrow(3, 2));
  CHECK(monoid_of_graph(kiselman_graph(2)).size() == 5);
}

TEST_CASE("csv table") {
  std::string csv = catalan_csv(3);
  CHECK(csv.find("n,catalan") == 0);
  CHECK(csv.find("3,14,14,14,18,14,18") != std::string::npos);
}
