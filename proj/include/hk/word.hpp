#ifndef HK_WORD_HPP
#define HK_WORD_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hk {

// A word over the generators 1..n. Letters are stored as raw byte values
// (1, 2, ...), not ASCII digits; the empty word is the identity.
using Word = std::string;

inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Bit i-1 is set iff generator i occurs in w.
inline uint32_t content_mask(const Word& w) {
  uint32_t m = 0;
  for (unsigned char c : w) m |= 1u << (c - 1);
  return m;
}

std::vector<int> mask_to_set(uint32_t mask);

// The set of distinct letters of w.
inline std::vector<int> content(const Word& w) { return mask_to_set(content_mask(w)); }

// "121" -> word {1,2,1}. Only digits 1..9.
Word word_from_digits(std::string_view digits);

// Renders letters as digits for alphabets up to 9 generators, and as
// comma-separated integers beyond that.
std::string word_to_string(const Word& w, int n);

}  // namespace hk

#endif
