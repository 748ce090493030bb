#ifndef HK_REWRITE_HPP
#define HK_REWRITE_HPP

#include <memory>
#include <vector>

#include "hk/mixed_graph.hpp"
#include "hk/monoid.hpp"
#include "hk/word.hpp"

namespace hk {

struct Presentation {
  int n = 0;
  std::vector<std::pair<Word, Word>> relations;
};

// Defining relations read off the graph: squares for every generator,
// commutations for non-edges, braid relations for unoriented edges, and
// the collapsed braid pair for oriented edges.
Presentation presentation_of(const MixedGraph& g);

enum class RsStatus { Complete, BudgetExceeded };

struct Rule {
  Word lhs, rhs;  // rhs strictly shortlex-smaller than lhs
};

namespace detail {
struct Matcher;
}

struct RewriteSystem {
  int n = 0;
  RsStatus status = RsStatus::BudgetExceeded;
  std::vector<Rule> rules;

  // Unique irreducible word of the congruence class of w. Requires a
  // Complete system.
  Word normal_form(const Word& w) const;

 private:
  mutable std::shared_ptr<const detail::Matcher> matcher_;
};

// Shortlex Knuth-Bendix completion. Pending critical pairs are processed
// in shortlex order of their overlap words, which makes the result a
// deterministic function of the presentation and the budgets.
RewriteSystem kb_complete(const Presentation& p, size_t max_rules = 20000, size_t max_len = 64);

enum class EnumStatus { Finite, BudgetExceeded };

struct EnumerationResult {
  EnumStatus status = EnumStatus::BudgetExceeded;
  bool certified_infinite = false;        // automaton found a live cycle
  std::vector<Word> elements;             // normal forms, index 0 = identity
  std::vector<uint32_t> right_cayley;     // flattened size x n
  std::vector<uint32_t> content;          // letter masks

  uint32_t right(uint32_t x, int g, int n) const { return right_cayley[x * n + (g - 1)]; }
};

// Breadth-first closure of the identity under right multiplication by the
// generators, with all words kept in normal form. The acyclicity
// certificate is consulted first: when it shows the language of
// irreducible words is infinite, enumeration stops after a small partial
// sample instead of filling the whole budget.
EnumerationResult enumerate(const RewriteSystem& rs, size_t max_elements = 200000);

// Finiteness certificate: the language of irreducible words is finite iff
// the factor-avoidance automaton of the left-hand sides is acyclic on its
// live states.
bool irreducible_language_is_finite(const RewriteSystem& rs);

// Test helper: every critical pair of the system resolves to a common
// normal form.
bool is_locally_confluent(const RewriteSystem& rs);

FiniteMonoid monoid_of(const RewriteSystem& rs, const EnumerationResult& er);

// Complete, enumerate and hand off in one step; throws BudgetError if
// either stage stops early.
FiniteMonoid monoid_of_graph(const MixedGraph& g, size_t max_rules = 20000, size_t max_len = 64,
                             size_t max_elements = 200000);

std::string enumeration_to_json(const EnumerationResult& er, int n);
std::string cayley_to_dot(const EnumerationResult& er, int n);

}  // namespace hk

#endif
