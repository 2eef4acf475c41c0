#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qtwist/error.hpp"

namespace qtwist {

/// A word is a string of generator indices (one char per letter, index = sort
/// position). A tensor key concatenates the words of every leg, each prefixed
/// by its length byte.
using Word = std::string;
using Letter = unsigned char;

inline constexpr std::size_t kMaxWordLength = 255;

namespace keys {

inline std::string make(const std::vector<std::string_view>& legs) {
  std::string k;
  for (auto w : legs) {
    if (w.size() > kMaxWordLength) throw Error("word too long for a tensor key");
    k.push_back(static_cast<char>(w.size()));
    k.append(w);
  }
  return k;
}

inline std::string single(std::string_view w) { return make({w}); }

inline std::vector<std::string_view> split(std::string_view k) {
  std::vector<std::string_view> legs;
  std::size_t i = 0;
  while (i < k.size()) {
    std::size_t n = static_cast<unsigned char>(k[i]);
    legs.push_back(k.substr(i + 1, n));
    i += n + 1;
  }
  return legs;
}

inline std::string_view leg(std::string_view k, int index) {
  std::size_t i = 0;
  for (int l = 0;; ++l) {
    std::size_t n = static_cast<unsigned char>(k.at(i));
    if (l == index) return k.substr(i + 1, n);
    i += n + 1;
  }
}

/// Key of the tensor product of two keys.
inline std::string concat(std::string_view a, std::string_view b) {
  std::string k(a);
  k.append(b);
  return k;
}

}  // namespace keys
}  // namespace qtwist
