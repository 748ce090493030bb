#ifndef HK_COMBINAT_HPP
#define HK_COMBINAT_HPP

#include <cstdint>
#include <vector>

#include "hk/hecke_a.hpp"
#include "hk/mixed_graph.hpp"
#include "hk/word.hpp"

namespace hk {

// Exact n-th Catalan number, binom(2n, n) / (n + 1).
unsigned long long catalan(int n);

// Permutations of S_m with no descending subsequence of length 3.
unsigned long long avoiders_321(int m);
std::vector<Perm> list_321_avoiders(int m);
bool is_321_avoiding(const Perm& w);

// No reduced word of w contains a factor s_i s_j s_i with |i-j| = 1;
// decided by walking the full reduced-word tree.
bool is_short_braid_avoiding(const Perm& w);

// Words where consecutive equal letters a_i enclose both an a_{i-1} and
// an a_{i+1}; in particular a_1 and a_n never repeat.
std::vector<Word> strongly_special_words(int n);

// Number of classes of strongly special words under commutation of
// letters at distance > 1, computed by closure over adjacent swaps.
unsigned long long strongly_special_classes(int n);

// Words where consecutive equal letters enclose both a smaller and a
// larger letter. Counted as words, with no commutation quotient.
std::vector<Word> special_words(int n, bool* length_cap_hit = nullptr);
unsigned long long special_words_count(int n, bool* length_cap_hit = nullptr);

// Complete graph with every edge oriented from the larger label to the
// smaller.
MixedGraph kiselman_graph(int n);

std::string catalan_csv(int n_max);

}  // namespace hk

#endif
