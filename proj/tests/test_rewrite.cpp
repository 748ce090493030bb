#include "hk/rewrite.hpp"

#include <bit>
#include <map>
#include <set>

#include "doctest.h"

using namespace hk;

namespace {

Word W(const char* digits) { return word_from_digits(digits); }

std::set<std::pair<Word, Word>> relation_set(const Presentation& p) {
  return {p.relations.begin(), p.relations.end()};
}

// Independent oracle: the congruence generated by the relations,
// restricted to words of bounded length, by bidirectional closure.
struct WordCongruence {
  std::map<Word, int> cls;

  WordCongruence(const Presentation& p, int cap) {
    std::vector<Word> words;
    Word w;
    auto gen = [&](auto&& self) -> void {
      words.push_back(w);
      if (static_cast<int>(w.size()) == cap) return;
      for (int a = 1; a <= p.n; ++a) {
        w.push_back(static_cast<char>(a));
        self(self);
        w.pop_back();
      }
    };
    gen(gen);
    std::map<Word, int> index;
    for (size_t i = 0; i < words.size(); ++i) index[words[i]] = static_cast<int>(i);
    std::vector<int> up(words.size());
    for (size_t i = 0; i < up.size(); ++i) up[i] = static_cast<int>(i);
    auto find = [&](int x) {
      while (up[x] != x) x = up[x] = up[up[x]];
      return x;
    };
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) up[std::max(a, b)] = std::min(a, b);
    };
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < words.size(); ++i) {
        const Word& u = words[i];
        for (const auto& [lhs, rhs] : p.relations) {
          for (int dir = 0; dir < 2; ++dir) {
            const Word& from = dir ? rhs : lhs;
            const Word& to = dir ? lhs : rhs;
            for (size_t pos = 0; pos + from.size() <= u.size(); ++pos) {
              if (u.compare(pos, from.size(), from) != 0) continue;
              Word v = u.substr(0, pos) + to + u.substr(pos + from.size());
              if (static_cast<int>(v.size()) > cap) continue;
              int a = find(static_cast<int>(i)), b = find(index.at(v));
              if (a != b) {
                unite(a, b);
                changed = true;
              }
            }
          }
        }
      }
    }
    for (size_t i = 0; i < words.size(); ++i) cls[words[i]] = find(static_cast<int>(i));
  }
};

}  // namespace

TEST_CASE("presentations read off the graph") {
  CHECK(relation_set(presentation_of(MixedGraph(2))) ==
        std::set<std::pair<Word, Word>>{{W("11"), W("1")}, {W("22"), W("2")}, {W("12"), W("21")}});
  CHECK(relation_set(presentation_of(parse_graph("vertices 2\n1 -- 2\n"))) ==
        std::set<std::pair<Word, Word>>{{W("11"), W("1")}, {W("22"), W("2")}, {W("121"), W("212")}});
  CHECK(relation_set(presentation_of(parse_graph("vertices 2\n1 -> 2\n"))) ==
        std::set<std::pair<Word, Word>>{
            {W("11"), W("1")}, {W("22"), W("2")}, {W("121"), W("12")}, {W("212"), W("12")}});
}

TEST_CASE("completion of the two-generator presentations") {
  RewriteSystem rs = kb_complete(presentation_of(MixedGraph(2)));
  REQUIRE(rs.status == RsStatus::Complete);
  std::set<std::pair<Word, Word>> rules;
  for (const Rule& r : rs.rules) rules.emplace(r.lhs, r.rhs);
  CHECK(rules == std::set<std::pair<Word, Word>>{
                     {W("11"), W("1")}, {W("22"), W("2")}, {W("21"), W("12")}});

  rs = kb_complete(presentation_of(parse_graph("vertices 2\n1 -> 2\n")));
  REQUIRE(rs.status == RsStatus::Complete);
  CHECK(rs.normal_form(W("121")) == W("12"));
  CHECK(rs.normal_form(W("212")) == W("12"));
  CHECK(rs.normal_form(Word()) == Word());
  EnumerationResult er = enumerate(rs);
  REQUIRE(er.status == EnumStatus::Finite);
  std::set<Word> elems(er.elements.begin(), er.elements.end());
  CHECK(elems == std::set<Word>{Word(), W("1"), W("2"), W("12"), W("21")});

  er = enumerate(kb_complete(presentation_of(parse_graph("vertices 2\n1 -- 2\n"))));
  CHECK(er.elements.size() == 6);
}

TEST_CASE("rules strictly decrease shortlex order") {
  for (const MixedGraph& g : enumerate_mixed_graphs(3)) {
    RewriteSystem rs = kb_complete(presentation_of(g));
    for (const Rule& r : rs.rules) CHECK(shortlex_less(r.rhs, r.lhs));
  }
}

TEST_CASE("complete systems are locally confluent") {
  for (const MixedGraph& g : enumerate_mixed_graphs(3)) {
    RewriteSystem rs = kb_complete(presentation_of(g));
    REQUIRE(rs.status == RsStatus::Complete);
    CHECK(is_locally_confluent(rs));
  }
}

TEST_CASE("normal form equality matches the word congruence") {
  std::vector<MixedGraph> graphs = {
      MixedGraph(2),
      parse_graph("vertices 2\n1 -> 2\n"),
      parse_graph("vertices 2\n1 -- 2\n"),
      parse_graph("vertices 3\n1 -> 2\n3 -> 2\n"),
      parse_graph("vertices 3\n2 -> 1\n3 -> 2\n"),
      parse_graph("vertices 3\n1 -- 2\n2 -- 3\n"),
      parse_graph("vertices 3\n2 -> 1\n3 -> 1\n3 -> 2\n"),
  };
  for (const MixedGraph& g : graphs) {
    Presentation p = presentation_of(g);
    RewriteSystem rs = kb_complete(p);
    REQUIRE(rs.status == RsStatus::Complete);
    WordCongruence oracle(p, 9);
    // enumerate all words of length <= 6 and bucket by oracle class
    std::map<int, std::set<Word>> nf_by_class;
    Word w;
    auto walk = [&](auto&& self) -> void {
      nf_by_class[oracle.cls.at(w)].insert(rs.normal_form(w));
      if (w.size() == 6) return;
      for (int a = 1; a <= p.n; ++a) {
        w.push_back(static_cast<char>(a));
        self(self);
        w.pop_back();
      }
    };
    walk(walk);
    std::set<Word> seen;
    for (const auto& [cls, nfs] : nf_by_class) {
      CHECK(nfs.size() == 1);  // congruent words share a normal form
      CHECK(seen.insert(*nfs.begin()).second);  // distinct classes never collide
    }
  }
}

TEST_CASE("enumeration bookkeeping") {
  RewriteSystem rs = kb_complete(presentation_of(parse_graph("vertices 3\n2 -> 1\n3 -> 2\n")));
  EnumerationResult er = enumerate(rs);
  REQUIRE(er.status == EnumStatus::Finite);
  CHECK(er.elements.size() == 14);
  CHECK(er.content[0] == 0);
  for (uint32_t x = 0; x < er.elements.size(); ++x) {
    CHECK(content_mask(er.elements[x]) == er.content[x]);
    for (int g = 1; g <= 3; ++g)
      CHECK(er.content[er.right(x, g, 3)] == (er.content[x] | (1u << (g - 1))));
  }
  // single-content elements are exactly the generators
  int singletons = 0;
  for (uint32_t x = 0; x < er.elements.size(); ++x)
    if (er.elements[x].size() == 1) ++singletons;
  for (uint32_t x = 0; x < er.elements.size(); ++x)
    if (std::popcount(er.content[x]) == 1) CHECK(er.elements[x].size() == 1);
  CHECK(singletons == 3);
}

TEST_CASE("budget statuses") {
  Presentation p = presentation_of(path_graph(3));
  CHECK_THROWS_AS(kb_complete(p, 2, 64), std::invalid_argument);  // below relation count
  RewriteSystem rs = kb_complete(p, p.relations.size(), 2);
  CHECK(rs.status == RsStatus::BudgetExceeded);
  CHECK_THROWS_AS(rs.normal_form(W("1")), std::logic_error);
  CHECK_THROWS_AS(enumerate(rs), std::logic_error);
}

TEST_CASE("infinite monoids are certified, not enumerated") {
  MixedGraph tri = parse_graph("vertices 3\n1 -- 2\n2 -- 3\n1 -- 3\n");
  RewriteSystem rs = kb_complete(presentation_of(tri));
  REQUIRE(rs.status == RsStatus::Complete);
  CHECK_FALSE(irreducible_language_is_finite(rs));
  EnumerationResult er = enumerate(rs);
  CHECK(er.status == EnumStatus::BudgetExceeded);
  CHECK(er.certified_infinite);

  // finite certificates agree with termination across the 3-vertex classes
  for (const MixedGraph& g : enumerate_mixed_graphs(3)) {
    RewriteSystem s = kb_complete(presentation_of(g));
    REQUIRE(s.status == RsStatus::Complete);
    EnumerationResult e = enumerate(s);
    CHECK((e.status == EnumStatus::Finite) == irreducible_language_is_finite(s));
  }
}

TEST_CASE("monoid handoff") {
  RewriteSystem rs = kb_complete(presentation_of(parse_graph("vertices 2\n1 -> 2\n")));
  EnumerationResult er = enumerate(rs);
  FiniteMonoid m = monoid_of(rs, er);
  CHECK(m.size() == 5);
  CHECK(m.identity == 0);
  for (uint32_t x = 0; x < m.size(); ++x) {
    CHECK(m.eval(m.word_of[x]) == x);
    CHECK(m.mult(m.identity, x) == x);
    CHECK(m.mult(x, m.identity) == x);
  }
  // left and right actions agree with word multiplication
  for (uint32_t x = 0; x < m.size(); ++x)
    for (int g = 1; g <= 2; ++g) {
      CHECK(m.right(x, g) == m.eval(m.word_of[x] + static_cast<char>(g)));
      CHECK(m.left(x, g) == m.eval(static_cast<char>(g) + m.word_of[x]));
    }
}

TEST_CASE("json and dot exports") {
  RewriteSystem rs = kb_complete(presentation_of(parse_graph("vertices 2\n1 -> 2\n")));
  EnumerationResult er = enumerate(rs);
  std::string json = enumeration_to_json(er, 2);
  CHECK(json.find("\"status\":\"finite\"") != std::string::npos);
  CHECK(json.find("\"size\":5") != std::string::npos);
  CHECK(json.find("\"12\"") != std::string::npos);
  std::string dot = cayley_to_dot(er, 2);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("label=\"e\"") != std::string::npos);
}
