#include "hk/monoid.hpp"

#include <set>

#include "doctest.h"

#include "hk/hecke_a.hpp"
#include "hk/rewrite.hpp"

using namespace hk;

namespace {

Word W(const char* digits) { return word_from_digits(digits); }

// left-zero semigroup {a, b} with an identity adjoined: xy = x
FiniteMonoid left_zero_with_identity() {
  auto [m, vals] = close_monoid<int>(
      0, {1, 2}, [](int x, int g) { return x == 0 ? g : x; }, 100);
  (void)vals;
  return std::move(m);
}

uint32_t elem(const FiniteMonoid& m, const char* digits) { return m.eval(W(digits)); }

}  // namespace

TEST_CASE("closure from generators") {
  // single idempotent generator
  auto [m1, v1] = close_monoid<int>(0, {1}, [](int, int g) { return g; }, 10);
  CHECK(m1.size() == 2);
  // no generators
  auto [m0, v0] = close_monoid<int>(0, {}, [](int x, int) { return x; }, 10);
  CHECK(m0.size() == 1);
  // budget
  CHECK_THROWS_AS((close_monoid<int>(0, {1}, [](int x, int) { return x + 1; }, 5)),
                  BudgetError);
  // generator words and contents line up
  FiniteMonoid hk12 = monoid_of_graph(parse_graph("vertices 2\n1 -> 2\n"));
  for (uint32_t x = 0; x < hk12.size(); ++x)
    CHECK(hk12.content_of[x] == content_mask(hk12.word_of[x]));
}

TEST_CASE("idempotents") {
  FiniteMonoid hk12 = monoid_of_graph(parse_graph("vertices 2\n1 -> 2\n"));
  auto idem = idempotents(hk12);
  CHECK(std::set<uint32_t>(idem.begin(), idem.end()) ==
        std::set<uint32_t>{hk12.identity, elem(hk12, "1"), elem(hk12, "2"), elem(hk12, "12")});

  for (int n = 1; n <= 4; ++n) {
    FiniteMonoid band = monoid_of_graph(MixedGraph(n));
    CHECK(band.size() == (1u << n));
    CHECK(idempotents(band).size() == band.size());
  }
  CHECK(idempotents(enumerate_hecke(3).m).size() == 8);
}

TEST_CASE("J-triviality") {
  CHECK(is_j_trivial(monoid_of_graph(parse_graph("vertices 2\n1 -> 2\n"))));
  CHECK(is_j_trivial(enumerate_hecke(2).m));
  CHECK_FALSE(is_j_trivial(left_zero_with_identity()));
}

TEST_CASE("congruence closure on the rank-2 engine") {
  HeckeMonoid h = enumerate_hecke(2);
  uint32_t s1s2s1 = h.index_of(element_of_word(W("121"), 2));
  uint32_t s1s2 = h.index_of(element_of_word(W("12"), 2));
  Congruence c = congruence_closure(h.m, {{s1s2s1, s1s2}});
  CHECK(c.num_classes == 5);
  // the only merged pair is {s1s2, s1s2s1}
  CHECK(c.class_of[s1s2s1] == c.class_of[s1s2]);
  uint32_t e = h.index_of(Perm::identity(3));
  uint32_t s1 = h.index_of(element_of_word(W("1"), 2));
  uint32_t s2 = h.index_of(element_of_word(W("2"), 2));
  uint32_t s2s1 = h.index_of(element_of_word(W("21"), 2));
  std::set<uint32_t> singles{c.class_of[e], c.class_of[s1], c.class_of[s2], c.class_of[s2s1]};
  CHECK(singles.size() == 4);
  CHECK_FALSE(singles.count(c.class_of[s1s2]));

  Congruence discrete = congruence_closure(h.m, {});
  CHECK(discrete.num_classes == h.m.size());

  // collapsing a generator onto the identity in the commutative band
  FiniteMonoid band = monoid_of_graph(MixedGraph(2));
  Congruence c2 = congruence_closure(band, {{band.identity, elem(band, "1")}});
  CHECK(c2.num_classes == 2);
  CHECK(c2.class_of[elem(band, "2")] == c2.class_of[elem(band, "12")]);
}

TEST_CASE("quotients") {
  HeckeMonoid h = enumerate_hecke(2);
  uint32_t a = h.index_of(element_of_word(W("121"), 2));
  uint32_t b = h.index_of(element_of_word(W("12"), 2));
  QuotientResult q = quotient(h.m, congruence_closure(h.m, {{a, b}}));
  CHECK(q.m.size() == 5);
  CHECK(are_isomorphic(q.m, monoid_of_graph(parse_graph("vertices 2\n1 -> 2\n"))).has_value());
  CHECK(q.image_of[a] == q.image_of[b]);

  QuotientResult copy = quotient(h.m, congruence_closure(h.m, {}));
  CHECK(are_isomorphic(copy.m, h.m).has_value());

  std::vector<std::pair<uint32_t, uint32_t>> all;
  for (uint32_t x = 1; x < h.m.size(); ++x) all.emplace_back(0, x);
  CHECK(quotient(h.m, congruence_closure(h.m, all)).m.size() == 1);

  // an incompatible partition is rejected
  Congruence bad;
  bad.num_classes = h.m.size() - 1;
  bad.class_of.resize(h.m.size());
  for (uint32_t x = 0; x < h.m.size(); ++x) bad.class_of[x] = x ? x - 1 : 0;
  CHECK_THROWS_AS(quotient(h.m, bad), std::invalid_argument);
}

TEST_CASE("irreducible generators") {
  FiniteMonoid hk12 = monoid_of_graph(parse_graph("vertices 2\n1 -> 2\n"));
  auto irr = irreducible_generators(hk12);
  CHECK(std::set<uint32_t>(irr.begin(), irr.end()) ==
        std::set<uint32_t>{elem(hk12, "1"), elem(hk12, "2")});

  FiniteMonoid band = monoid_of_graph(MixedGraph(2));
  CHECK(irreducible_generators(band).size() == 2);

  auto irr_h = irreducible_generators(enumerate_hecke(2).m);
  CHECK(irr_h.size() == 2);
}

TEST_CASE("isomorphism and anti-isomorphism") {
  FiniteMonoid a = monoid_of_graph(parse_graph("vertices 2\n1 -> 2\n"));
  FiniteMonoid b = monoid_of_graph(parse_graph("vertices 2\n2 -> 1\n"));
  CHECK(are_isomorphic(a, b).has_value());
  CHECK_FALSE(are_isomorphic(a, monoid_of_graph(parse_graph("vertices 2\n1 -- 2\n"))));

  FiniteMonoid vee = monoid_of_graph(parse_graph("vertices 3\n1 -> 2\n3 -> 2\n"));
  FiniteMonoid chain = monoid_of_graph(parse_graph("vertices 3\n1 -> 2\n2 -> 3\n"));
  CHECK_FALSE(are_isomorphic(vee, chain).has_value());

  CHECK(are_anti_isomorphic(a, b).has_value());
  FiniteMonoid rev = monoid_of_graph(parse_graph("vertices 3\n3 -> 2\n2 -> 1\n"));
  CHECK(are_anti_isomorphic(chain, rev).has_value());
  // out-star vs in-star: anti-isomorphic but not isomorphic
  FiniteMonoid out_star = monoid_of_graph(parse_graph("vertices 3\n2 -> 1\n2 -> 3\n"));
  CHECK(are_anti_isomorphic(vee, out_star).has_value());
  CHECK_FALSE(are_isomorphic(vee, out_star).has_value());
  // commutative monoid is anti-isomorphic to itself
  FiniteMonoid band = monoid_of_graph(MixedGraph(3));
  CHECK(are_anti_isomorphic(band, band).has_value());

  // a found bijection is multiplicative everywhere
  auto phi = are_isomorphic(a, b);
  REQUIRE(phi);
  for (uint32_t x = 0; x < a.size(); ++x)
    for (uint32_t y = 0; y < a.size(); ++y)
      CHECK((*phi)[a.mult(x, y)] == b.mult((*phi)[x], (*phi)[y]));
}

TEST_CASE("generator map verification") {
  FiniteMonoid braid = monoid_of_graph(parse_graph("vertices 2\n1 -- 2\n"));
  FiniteMonoid band = monoid_of_graph(MixedGraph(2));
  GeneratorMapReport rep = verify_generator_map(braid, band, band.gens);
  CHECK(rep.is_homomorphism);
  CHECK(rep.is_surjective);
  CHECK_FALSE(rep.is_injective);

  FiniteMonoid path3 = monoid_of_graph(path_graph(3));
  GeneratorMapReport mono =
      verify_generator_map(braid, path3, {path3.gens[0], path3.gens[1]});
  CHECK(mono.is_homomorphism);
  CHECK(mono.is_injective);
  CHECK_FALSE(mono.is_surjective);

  GeneratorMapReport idm = verify_generator_map(band, band, band.gens);
  CHECK((idm.is_homomorphism && idm.is_injective && idm.is_surjective));

  // the non-full embedding of the edgeless pair into the path is not a
  // homomorphism: the images no longer commute
  FiniteMonoid band2 = monoid_of_graph(MixedGraph(2));
  GeneratorMapReport bad = verify_generator_map(band2, path3, {path3.gens[0], path3.gens[1]});
  CHECK_FALSE(bad.is_homomorphism);

  CHECK_THROWS_AS(verify_generator_map(band, band, {band.gens[0]}), std::invalid_argument);
}

TEST_CASE("canonical projections realize content") {
  // the projection onto the edgeless monoid sends each element to its
  // content, read through the subset identification
  for (int n = 1; n <= 3; ++n) {
    FiniteMonoid band = monoid_of_graph(MixedGraph(n));
    for (const MixedGraph& g : enumerate_mixed_graphs(n)) {
      FiniteMonoid m;
      try {
        m = monoid_of_graph(g);
      } catch (const BudgetError&) {
        continue;
      }
      GeneratorMapReport rep = verify_generator_map(m, band, band.gens);
      CHECK(rep.is_homomorphism);
      CHECK(rep.is_surjective);
      std::vector<uint32_t> phi(m.size());
      for (uint32_t x = 0; x < m.size(); ++x) phi[x] = band.eval(m.word_of[x]);
      for (uint32_t x = 0; x < m.size(); ++x)
        CHECK(band.content_of[phi[x]] == m.content_of[x]);
    }
  }
  // full chain through any middle graph when the top is finite
  for (int n = 1; n <= 2; ++n) {
    MixedGraph full(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) full.add_unoriented(i, j);
    FiniteMonoid top = monoid_of_graph(full);
    for (const MixedGraph& g : enumerate_mixed_graphs(n)) {
      FiniteMonoid mid = monoid_of_graph(g);
      GeneratorMapReport down = verify_generator_map(top, mid, mid.gens);
      CHECK(down.is_homomorphism);
      CHECK(down.is_surjective);
    }
  }
}

TEST_CASE("quotient never grows and strictly shrinks on real merges") {
  HeckeMonoid h = enumerate_hecke(3);
  std::vector<std::pair<uint32_t, uint32_t>> pairs = {{1, 1}};
  CHECK(quotient(h.m, congruence_closure(h.m, pairs)).m.size() == h.m.size());
  pairs = {{h.index_of(element_of_word(W("121"), 3)), h.index_of(element_of_word(W("12"), 3))}};
  CHECK(quotient(h.m, congruence_closure(h.m, pairs)).m.size() < h.m.size());
}

TEST_CASE("exports") {
  FiniteMonoid hk12 = monoid_of_graph(parse_graph("vertices 2\n1 -> 2\n"));
  std::string csv = mult_table_csv(hk12);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  std::string json = greens_report_json(hk12);
  CHECK(json.find("\"j_trivial\":true") != std::string::npos);
  CHECK(json.find("\"num_idempotents\":4") != std::string::npos);
}
