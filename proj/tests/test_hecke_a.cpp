#include "hk/hecke_a.hpp"

#include <set>

#include "doctest.h"

#include "hk/rewrite.hpp"

using namespace hk;

namespace {

Perm perm(std::initializer_list<int> images) {
  Perm p;
  for (int v : images) p.img.push_back(static_cast<char>(v));
  return p;
}

Word W(const char* digits) { return word_from_digits(digits); }

}  // namespace

TEST_CASE("length counts inversions") {
  CHECK(length(Perm::identity(3)) == 0);
  CHECK(length(perm({2, 1, 3})) == 1);
  CHECK(length(perm({3, 2, 1})) == 3);
}

TEST_CASE("one-sided multiplication saturates") {
  CHECK(right_mult_gen(Perm::identity(3), 1) == perm({2, 1, 3}));
  CHECK(right_mult_gen(perm({2, 1, 3}), 1) == perm({2, 1, 3}));
  CHECK(right_mult_gen(perm({2, 1, 3}), 2) == perm({2, 3, 1}));
  CHECK_THROWS_AS(right_mult_gen(Perm::identity(3), 3), std::invalid_argument);

  // left and right actions are idempotent per generator, exhaustively
  for (int n = 2; n <= 4; ++n) {
    HeckeMonoid h = enumerate_hecke(n);
    for (const Perm& x : h.elements)
      for (int i = 1; i <= n; ++i) {
        CHECK(left_mult_gen(left_mult_gen(x, i), i) == left_mult_gen(x, i));
        CHECK(right_mult_gen(right_mult_gen(x, i), i) == right_mult_gen(x, i));
      }
  }
}

TEST_CASE("braid relation on the left action") {
  for (int n = 2; n <= 4; ++n) {
    HeckeMonoid h = enumerate_hecke(n);
    for (const Perm& x : h.elements)
      for (int i = 1; i < n; ++i) {
        Perm a = left_mult_gen(left_mult_gen(left_mult_gen(x, i), i + 1), i);
        Perm b = left_mult_gen(left_mult_gen(left_mult_gen(x, i + 1), i), i + 1);
        CHECK(a == b);
      }
  }
}

TEST_CASE("words evaluate through the saturated action") {
  CHECK(element_of_word(Word(), 2) == Perm::identity(3));
  CHECK(element_of_word(W("121"), 2) == perm({3, 2, 1}));
  CHECK(element_of_word(W("121"), 2) == element_of_word(W("212"), 2));
  CHECK(element_of_word(W("11"), 2) == element_of_word(W("1"), 2));
}

TEST_CASE("reduced words are reduced and rebuild the permutation") {
  for (int n = 2; n <= 4; ++n) {
    HeckeMonoid h = enumerate_hecke(n);
    for (const Perm& x : h.elements) {
      Word w = reduced_word(x);
      CHECK(static_cast<int>(w.size()) == length(x));
      CHECK(element_of_word(w, n) == x);
    }
  }
}

TEST_CASE("enumeration sizes") {
  CHECK(enumerate_hecke(2).m.size() == 6);
  CHECK(enumerate_hecke(3).m.size() == 24);
  CHECK(idempotents(enumerate_hecke(3).m).size() == 8);
  CHECK_THROWS_AS(enumerate_hecke(8), std::invalid_argument);
}

TEST_CASE("parabolic longest elements are the idempotents") {
  CHECK(longest_parabolic({}, 2) == Perm::identity(3));
  CHECK(longest_parabolic({1, 2}, 2) == perm({3, 2, 1}));
  for (int n = 2; n <= 4; ++n) {
    HeckeMonoid h = enumerate_hecke(n);
    std::set<uint32_t> parabolic;
    for (uint32_t sub = 0; sub < (1u << n); ++sub) {
      std::vector<int> x;
      for (int i = 1; i <= n; ++i)
        if (sub & (1u << (i - 1))) x.push_back(i);
      uint32_t e = h.index_of(longest_parabolic(x, n));
      CHECK(h.m.mult(e, e) == e);
      parabolic.insert(e);
    }
    auto idem = idempotents(h.m);
    CHECK(parabolic == std::set<uint32_t>(idem.begin(), idem.end()));
  }
}

TEST_CASE("collapse pairs along an oriented path") {
  auto pairs = kiselman_congruence_pairs(parse_graph("vertices 2\n1 -> 2\n"));
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].first == element_of_word(W("121"), 2));
  CHECK(pairs[0].second == element_of_word(W("12"), 2));

  CHECK(kiselman_congruence_pairs(parse_graph("vertices 2\n1 -- 2\n")).empty());
  CHECK(kiselman_congruence_pairs(parse_graph("vertices 3\n1 -> 2\n3 -> 2\n")).size() == 2);
  CHECK_THROWS_AS(kiselman_congruence_pairs(parse_graph("vertices 3\n1 -> 3\n")),
                  std::invalid_argument);
}

TEST_CASE("quotients match the rewriting engine") {
  for (int n = 1; n <= 3; ++n) {
    HeckeMonoid h = enumerate_hecke(n);
    const int masks = 1 << std::max(0, n - 1);
    for (int mask = 0; mask < masks; ++mask) {
      MixedGraph g = oriented_path(n, static_cast<uint32_t>(mask));
      std::vector<std::pair<uint32_t, uint32_t>> pairs;
      for (const auto& [a, b] : kiselman_congruence_pairs(g))
        pairs.emplace_back(h.index_of(a), h.index_of(b));
      QuotientResult q = quotient(h.m, congruence_closure(h.m, pairs));
      FiniteMonoid rw = monoid_of_graph(g);
      CHECK(are_isomorphic(q.m, rw).has_value());
    }
  }
  // a partially oriented path quotients the same way
  MixedGraph g = parse_graph("vertices 3\n1 -- 2\n2 -> 3\n");
  HeckeMonoid h = enumerate_hecke(3);
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  for (const auto& [a, b] : kiselman_congruence_pairs(g))
    pairs.emplace_back(h.index_of(a), h.index_of(b));
  QuotientResult q = quotient(h.m, congruence_closure(h.m, pairs));
  CHECK(are_isomorphic(q.m, monoid_of_graph(g)).has_value());
}

TEST_CASE("the engine monoid is J-trivial") {
  for (int n = 1; n <= 4; ++n) CHECK(is_j_trivial(enumerate_hecke(n).m));
}
