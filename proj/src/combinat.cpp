#include "hk/combinat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "hk/rewrite.hpp"

namespace hk {

unsigned long long catalan(int n) {
  if (n < 0 || n > 30) throw std::invalid_argument("catalan: n must be in 0..30");
  unsigned long long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

bool is_321_avoiding(const Perm& w) {
  const int m = w.degree();
  int run_max = 0;
  std::vector<int> suffix_min(m + 2, m + 1);
  for (int k = m; k >= 1; --k) suffix_min[k] = std::min(suffix_min[k + 1], w(k));
  for (int j = 1; j <= m; ++j) {
    if (run_max > w(j) && suffix_min[j + 1] < w(j)) return false;
    run_max = std::max(run_max, w(j));
  }
  return true;
}

unsigned long long avoiders_321(int m) {
  if (m < 1 || m > 10) throw std::invalid_argument("avoiders_321: m must be in 1..10");
  Perm p = Perm::identity(m);
  unsigned long long count = 0;
  std::string& img = p.img;
  std::sort(img.begin(), img.end());
  do {
    if (is_321_avoiding(p)) ++count;
  } while (std::next_permutation(img.begin(), img.end()));
  return count;
}

std::vector<Perm> list_321_avoiders(int m) {
  if (m < 1 || m > 8) throw std::invalid_argument("list_321_avoiders: m must be in 1..8");
  Perm p = Perm::identity(m);
  std::vector<Perm> out;
  std::string& img = p.img;
  std::sort(img.begin(), img.end());
  do {
    if (is_321_avoiding(p)) out.push_back(p);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

namespace {

// Walk every reduced word (letters accumulated from the right end);
// a factor s_a s_b s_a reads the same reversed, so the check works on the
// reversed prefix. Returns false as soon as any branch shows the factor.
bool reduced_words_avoid(Perm w, std::vector<int>& tail) {
  const int m = w.degree();
  for (int i = 1; i < m; ++i) {
    if (w(i) <= w(i + 1)) continue;
    size_t k = tail.size();
    if (k >= 2 && tail[k - 1] != i && tail[k - 2] == i && std::abs(tail[k - 1] - i) == 1)
      return false;
    tail.push_back(i);
    Perm next = w;
    std::swap(next.img[i - 1], next.img[i]);
    bool ok = reduced_words_avoid(std::move(next), tail);
    tail.pop_back();
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool is_short_braid_avoiding(const Perm& w) {
  if (w.degree() > 8)
    throw std::invalid_argument("is_short_braid_avoiding: rank too large for reduced-word search");
  std::vector<int> tail;
  return reduced_words_avoid(w, tail);
}

namespace {

// Shared enumerator for the two repeat conditions. between_ok(i, seen)
// says whether the letters seen since the previous i allow another i.
template <typename BetweenOk>
std::vector<Word> enumerate_repeat_constrained(int n, size_t max_len, BetweenOk between_ok,
                                               bool* length_cap_hit) {
  std::vector<Word> out;
  Word w;
  // per letter: mask of letters seen since its last occurrence, or ~0 if
  // the letter has not occurred yet
  std::vector<uint32_t> since(n + 1, UINT32_MAX);
  bool cap_hit = false;
  auto rec = [&](auto&& self) -> void {
    out.push_back(w);
    if (w.size() >= max_len) {
      cap_hit = true;
      return;
    }
    for (int i = 1; i <= n; ++i) {
      if (since[i] != UINT32_MAX && !between_ok(i, since[i])) continue;
      std::vector<uint32_t> saved = since;
      w.push_back(static_cast<char>(i));
      for (int j = 1; j <= n; ++j)
        if (since[j] != UINT32_MAX) since[j] |= 1u << (i - 1);
      since[i] = 0;
      self(self);
      w.pop_back();
      since = saved;
    }
  };
  rec(rec);
  if (length_cap_hit) *length_cap_hit = cap_hit;
  return out;
}

}  // namespace

std::vector<Word> strongly_special_words(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("strongly_special_words: n must be in 1..7");
  auto ok = [n](int i, uint32_t seen) {
    if (i == 1 || i == n) return false;
    return (seen & (1u << (i - 2))) && (seen & (1u << i));
  };
  return enumerate_repeat_constrained(n, size_t{1} << n, ok, nullptr);
}

unsigned long long strongly_special_classes(int n) {
  std::vector<Word> words = strongly_special_words(n);
  std::unordered_map<Word, uint32_t> index;
  for (uint32_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
  std::vector<uint32_t> up(words.size());
  std::iota(up.begin(), up.end(), 0u);
  auto find = [&](uint32_t x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  };
  for (uint32_t i = 0; i < words.size(); ++i) {
    const Word& w = words[i];
    for (size_t p = 0; p + 1 < w.size(); ++p) {
      int a = static_cast<unsigned char>(w[p]), b = static_cast<unsigned char>(w[p + 1]);
      if (std::abs(a - b) <= 1) continue;
      Word v = w;
      std::swap(v[p], v[p + 1]);
      auto it = index.find(v);
      if (it == index.end())
        throw std::logic_error("strongly special words are not closed under commutation");
      uint32_t ra = find(i), rb = find(it->second);
      if (ra != rb) up[std::max(ra, rb)] = std::min(ra, rb);
    }
  }
  unsigned long long classes = 0;
  for (uint32_t i = 0; i < words.size(); ++i)
    if (find(i) == i) ++classes;
  return classes;
}

std::vector<Word> special_words(int n, bool* length_cap_hit) {
  if (n < 1 || n > 4) throw std::invalid_argument("special_words: n must be in 1..4");
  uint32_t below[33] = {};
  for (int i = 1; i <= n; ++i) below[i] = (1u << (i - 1)) - 1;
  auto ok = [&below, n](int i, uint32_t seen) {
    uint32_t above = ((1u << n) - 1) & ~below[i] & ~(1u << (i - 1));
    return (seen & below[i]) && (seen & above);
  };
  return enumerate_repeat_constrained(n, size_t{1} << n, ok, length_cap_hit);
}

unsigned long long special_words_count(int n, bool* length_cap_hit) {
  return special_words(n, length_cap_hit).size();
}

MixedGraph kiselman_graph(int n) {
  if (n < 1) throw std::invalid_argument("kiselman_graph: n must be positive");
  MixedGraph g(n);
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j) g.add_arrow(i, j);
  return g;
}

std::string catalan_csv(int n_max) {
  std::string out = "n,catalan_n_plus_1,avoiders_321_S_n_plus_1,strongly_special_classes,"
                    "special_words,hk_linear,hk_kiselman\n";
  for (int n = 1; n <= n_max; ++n) {
    out += std::to_string(n) + "," + std::to_string(catalan(n + 1));
    out += "," + (n + 1 <= 10 ? std::to_string(avoiders_321(n + 1)) : std::string("-"));
    out += "," + (n <= 7 ? std::to_string(strongly_special_classes(n)) : std::string("-"));
    out += "," + (n <= 4 ? std::to_string(special_words_count(n)) : std::string("-"));
    auto size_of = [](const MixedGraph& g) -> std::string {
      auto rs = kb_complete(presentation_of(g));
      if (rs.status != RsStatus::Complete) return "-";
      auto er = enumerate(rs);
      if (er.status != EnumStatus::Finite) return "-";
      return std::to_string(er.elements.size());
    };
    out += "," + (n <= 8 ? size_of(linear_path(n)) : std::string("-"));
    out += "," + (n <= 4 ? size_of(kiselman_graph(n)) : std::string("-"));
    out += "\n";
  }
  return out;
}

}  // namespace hk
