#ifndef HK_MONOID_HPP
#define HK_MONOID_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hk/word.hpp"

namespace hk {

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumerated finite monoid. Elements are indices 0..size-1 in
// breadth-first order from the identity under right multiplication by the
// distinguished generators, so parent[x] < x for x != identity and
// word_of[x] is the shortlex-least generator word reaching x along the
// discovery tree.
struct FiniteMonoid {
  int num_gens = 0;
  uint32_t identity = 0;
  std::vector<uint32_t> gens;        // element index of each generator 1..num_gens
  std::vector<uint32_t> right_tab;   // x * gen, flattened size*num_gens
  std::vector<uint32_t> left_tab;    // gen * x
  std::vector<Word> word_of;
  std::vector<uint32_t> content_of;  // letter mask of word_of
  std::vector<uint32_t> parent;      // BFS tree; parent[identity] = identity
  std::vector<uint8_t> parent_gen;   // 1-based generator labelling the tree edge

  size_t size() const { return word_of.size(); }

  uint32_t right(uint32_t x, int g) const { return right_tab[x * num_gens + (g - 1)]; }
  uint32_t left(uint32_t x, int g) const { return left_tab[x * num_gens + (g - 1)]; }

  uint32_t eval(const Word& w) const {
    uint32_t x = identity;
    for (unsigned char c : w) x = right(x, c);
    return x;
  }

  uint32_t mult(uint32_t x, uint32_t y) const {
    for (unsigned char c : word_of[y]) x = right(x, c);
    return x;
  }

  // All products a*b for fixed a, computed in O(size) via the BFS tree.
  std::vector<uint32_t> left_row(uint32_t a) const {
    std::vector<uint32_t> row(size());
    row[identity] = a;
    for (uint32_t x = 0; x < size(); ++x) {
      if (x == identity) continue;
      row[x] = right(row[parent[x]], parent_gen[x]);
    }
    return row;
  }
};

// Closure of a generating set under an associative product, by
// breadth-first search with deduplication on values.
template <typename State, typename RightMult, typename Hash = std::hash<State>,
          typename Eq = std::equal_to<State>>
std::pair<FiniteMonoid, std::vector<State>> close_monoid(const State& id,
                                                         const std::vector<State>& gen_values,
                                                         RightMult rmult,
                                                         size_t max_elements = 200000) {
  FiniteMonoid m;
  m.num_gens = static_cast<int>(gen_values.size());
  std::vector<State> values;
  std::unordered_map<State, uint32_t, Hash, Eq> index;
  values.push_back(id);
  index.emplace(id, 0);
  m.identity = 0;
  m.parent.push_back(0);
  m.parent_gen.push_back(0);
  m.word_of.emplace_back();
  m.content_of.push_back(0);
  for (uint32_t x = 0; x < values.size(); ++x) {
    for (int g = 0; g < m.num_gens; ++g) {
      State v = rmult(values[x], gen_values[g]);
      auto [it, inserted] = index.emplace(std::move(v), static_cast<uint32_t>(values.size()));
      if (inserted) {
        if (values.size() >= max_elements)
          throw BudgetError("monoid closure exceeded element budget");
        values.push_back(it->first);
        m.parent.push_back(x);
        m.parent_gen.push_back(static_cast<uint8_t>(g + 1));
        m.word_of.push_back(m.word_of[x] + static_cast<char>(g + 1));
        m.content_of.push_back(m.content_of[x] | (1u << g));
      }
      m.right_tab.push_back(it->second);
    }
  }
  m.gens.resize(m.num_gens);
  for (int g = 0; g < m.num_gens; ++g) m.gens[g] = index.at(gen_values[g]);
  m.left_tab.assign(values.size() * m.num_gens, 0);
  for (int g = 0; g < m.num_gens; ++g) {
    std::vector<uint32_t> row = m.left_row(m.gens[g]);
    for (uint32_t x = 0; x < values.size(); ++x) m.left_tab[x * m.num_gens + g] = row[x];
  }
  return {std::move(m), std::move(values)};
}

std::vector<uint32_t> idempotents(const FiniteMonoid& m);

// True iff distinct elements generate distinct principal two-sided ideals,
// checked via strongly connected components of the combined left/right
// Cayley graph.
bool is_j_trivial(const FiniteMonoid& m);

struct Congruence {
  uint32_t num_classes = 0;
  std::vector<uint32_t> class_of;  // classes numbered by least member
};

// Least congruence containing the given pairs (union-find with a worklist
// propagating merges through both Cayley actions).
Congruence congruence_closure(const FiniteMonoid& m,
                              const std::vector<std::pair<uint32_t, uint32_t>>& pairs);

struct QuotientResult {
  FiniteMonoid m;
  std::vector<uint32_t> image_of;  // element of the source -> element of the quotient
};

// Throws std::invalid_argument if the partition is not compatible with
// multiplication.
QuotientResult quotient(const FiniteMonoid& m, const Congruence& c);

// Elements with no factorization a*b avoiding the identity and the
// element itself; equivalently, elements outside the submonoid generated
// by the others. Throws std::runtime_error if the returned set fails to
// generate M.
std::vector<uint32_t> irreducible_generators(const FiniteMonoid& m);

FiniteMonoid opposite_monoid(const FiniteMonoid& m);

// Element bijection M -> N if one exists. Search assigns irreducible
// generators to irreducible generators, pruned by isomorphism-invariant
// profiles, then extends by word evaluation and verifies multiplicativity
// on all pairs.
std::optional<std::vector<uint32_t>> are_isomorphic(const FiniteMonoid& m, const FiniteMonoid& n);

std::optional<std::vector<uint32_t>> are_anti_isomorphic(const FiniteMonoid& m,
                                                         const FiniteMonoid& n);

struct GeneratorMapReport {
  bool is_homomorphism = false;
  bool is_injective = false;
  bool is_surjective = false;
};

// gen_images[g] is the element of N assigned to generator g+1 of M; the
// map extends by word evaluation and is checked on all products.
GeneratorMapReport verify_generator_map(const FiniteMonoid& m, const FiniteMonoid& n,
                                        const std::vector<uint32_t>& gen_images);

std::string mult_table_csv(const FiniteMonoid& m);
std::string greens_report_json(const FiniteMonoid& m);

}  // namespace hk

#endif
