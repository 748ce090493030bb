#include "hk/word.hpp"

#include <stdexcept>

namespace hk {

std::vector<int> mask_to_set(uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i + 1);
  return out;
}

Word word_from_digits(std::string_view digits) {
  Word w;
  w.reserve(digits.size());
  for (char c : digits) {
    if (c < '1' || c > '9') throw std::invalid_argument("word_from_digits: expected digits 1-9");
    w.push_back(static_cast<char>(c - '0'));
  }
  return w;
}

std::string word_to_string(const Word& w, int n) {
  std::string out;
  if (n <= 9) {
    for (unsigned char c : w) out.push_back(static_cast<char>('0' + c));
  } else {
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(static_cast<int>(static_cast<unsigned char>(w[i])));
    }
  }
  return out;
}

}  // namespace hk
