#include "hk/hecke_a.hpp"

#include <algorithm>
#include <stdexcept>

namespace hk {

Perm Perm::identity(int m) {
  Perm p;
  p.img.resize(m);
  for (int k = 1; k <= m; ++k) p.img[k - 1] = static_cast<char>(k);
  return p;
}

bool Perm::is_identity() const {
  for (int k = 1; k <= degree(); ++k)
    if ((*this)(k) != k) return false;
  return true;
}

int length(const Perm& w) {
  int inv = 0;
  const int m = w.degree();
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b)
      if (w(a) > w(b)) ++inv;
  return inv;
}

Perm right_mult_gen(const Perm& w, int i) {
  if (i < 1 || i >= w.degree())
    throw std::invalid_argument("right_mult_gen: generator index out of range");
  if (w(i) >= w(i + 1)) return w;  // length would not increase
  Perm out = w;
  std::swap(out.img[i - 1], out.img[i]);
  return out;
}

Perm left_mult_gen(const Perm& w, int i) {
  if (i < 1 || i >= w.degree())
    throw std::invalid_argument("left_mult_gen: generator index out of range");
  int pi = 0, pj = 0;
  for (int k = 1; k <= w.degree(); ++k) {
    if (w(k) == i) pi = k;
    if (w(k) == i + 1) pj = k;
  }
  if (pi > pj) return w;
  Perm out = w;
  std::swap(out.img[pi - 1], out.img[pj - 1]);
  return out;
}

Perm element_of_word(const Word& word, int n) {
  Perm p = Perm::identity(n + 1);
  for (unsigned char c : word) p = right_mult_gen(p, c);
  return p;
}

Word reduced_word(const Perm& w) {
  Perm cur = w;
  const int m = cur.degree();
  std::vector<int> pos(m + 2, 0);
  Word out;
  while (true) {
    for (int k = 1; k <= m; ++k) pos[cur(k)] = k;
    int descent = 0;
    for (int i = 1; i < m; ++i)
      if (pos[i] > pos[i + 1]) {
        descent = i;
        break;
      }
    if (!descent) break;
    out.push_back(static_cast<char>(descent));
    std::swap(cur.img[pos[descent] - 1], cur.img[pos[descent + 1] - 1]);
  }
  return out;
}

Perm hecke_product(const Perm& x, const Perm& y) {
  Perm out = x;
  for (unsigned char c : reduced_word(y)) out = right_mult_gen(out, c);
  return out;
}

HeckeMonoid enumerate_hecke(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("enumerate_hecke: n must be in 1..7");
  std::vector<Perm> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(right_mult_gen(Perm::identity(n + 1), i));
  auto [m, values] = close_monoid<Perm, decltype(&hecke_product), PermHash>(
      Perm::identity(n + 1), gens, &hecke_product, 50000);
  HeckeMonoid h;
  h.m = std::move(m);
  h.elements = std::move(values);
  for (uint32_t i = 0; i < h.elements.size(); ++i) h.index.emplace(h.elements[i].img, i);
  return h;
}

Perm longest_parabolic(const std::vector<int>& X, int n) {
  const int m = n + 1;
  std::vector<Perm> gens;
  for (int i : X) {
    if (i < 1 || i > n) throw std::invalid_argument("longest_parabolic: index out of range");
    Perm s = Perm::identity(m);
    std::swap(s.img[i - 1], s.img[i]);
    gens.push_back(s);
  }
  std::vector<Perm> members = {Perm::identity(m)};
  std::unordered_map<std::string, uint8_t> seen = {{members[0].img, 1}};
  Perm best = members[0];
  int best_len = 0;
  for (size_t i = 0; i < members.size(); ++i) {
    for (const Perm& s : gens) {
      Perm next;
      next.img.resize(m);
      for (int k = 1; k <= m; ++k) next.img[k - 1] = static_cast<char>(members[i](s(k)));
      if (seen.emplace(next.img, 1).second) {
        int len = length(next);
        if (len > best_len) {
          best_len = len;
          best = next;
        }
        members.push_back(std::move(next));
      }
    }
  }
  return best;
}

std::vector<std::pair<Perm, Perm>> kiselman_congruence_pairs(const MixedGraph& g) {
  if (!is_natural_path(g))
    throw std::invalid_argument(
        "kiselman_congruence_pairs: underlying graph must be the naturally labeled path");
  std::vector<std::pair<Perm, Perm>> pairs;
  const int n = g.n;
  for (int v = 1; v < n; ++v) {
    int from, to;
    if (g.has_arrow(v, v + 1))
      from = v, to = v + 1;
    else if (g.has_arrow(v + 1, v))
      from = v + 1, to = v;
    else
      continue;  // unoriented: braid relation already holds
    Word iji, ij;
    iji.push_back(static_cast<char>(from));
    iji.push_back(static_cast<char>(to));
    iji.push_back(static_cast<char>(from));
    ij = iji.substr(0, 2);
    pairs.emplace_back(element_of_word(iji, n), element_of_word(ij, n));
  }
  return pairs;
}

}  // namespace hk
