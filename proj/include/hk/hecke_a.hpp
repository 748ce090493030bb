#ifndef HK_HECKE_A_HPP
#define HK_HECKE_A_HPP

#include <unordered_map>
#include <vector>

#include "hk/mixed_graph.hpp"
#include "hk/monoid.hpp"
#include "hk/word.hpp"

namespace hk {

// Permutation of {1..m}, stored as the image sequence w(1),...,w(m) in
// raw bytes. Doubles as the basis element H_w of the type-A 0-Hecke
// monoid of rank m-1.
struct Perm {
  std::string img;

  static Perm identity(int m);
  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int k) const { return static_cast<unsigned char>(img[k - 1]); }
  bool is_identity() const;

  bool operator==(const Perm&) const = default;
};

struct PermHash {
  size_t operator()(const Perm& p) const { return std::hash<std::string>{}(p.img); }
};

// Number of inversions.
int length(const Perm& w);

// w * eps_i: w s_i when the length goes up, otherwise w unchanged.
Perm right_mult_gen(const Perm& w, int i);
// eps_i * w, symmetric on the left.
Perm left_mult_gen(const Perm& w, int i);

// Fold right_mult_gen over the letters starting from the identity of
// S_{n+1}.
Perm element_of_word(const Word& word, int n);

// Reduced word by repeatedly removing the least left descent.
Word reduced_word(const Perm& w);

// H_x * H_y via a reduced decomposition of the right factor.
Perm hecke_product(const Perm& x, const Perm& y);

struct HeckeMonoid {
  FiniteMonoid m;
  std::vector<Perm> elements;
  std::unordered_map<std::string, uint32_t> index;

  uint32_t index_of(const Perm& p) const { return index.at(p.img); }
};

// All (n+1)! basis elements with the Eq-style multiplication. n <= 7.
HeckeMonoid enumerate_hecke(int n);

// Longest element of the parabolic subgroup generated by {s_i : i in X},
// computed by subgroup closure.
Perm longest_parabolic(const std::vector<int>& X, int n);

// For each oriented edge i -> j of a (possibly partially) oriented path
// with the natural labeling, the pair (H of iji, H of ij). Unoriented
// edges contribute nothing.
std::vector<std::pair<Perm, Perm>> kiselman_congruence_pairs(const MixedGraph& g);

}  // namespace hk

#endif
