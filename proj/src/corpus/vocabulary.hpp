#pragma once

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace charlab {

// Bijection between the distinct characters of a corpus and dense ids
// in [0, K). Ids are assigned in increasing Unicode scalar order, so the
// mapping is a pure function of the character set.
class Vocabulary {
 public:
  Vocabulary() = default;

  static Vocabulary from_text(std::u32string_view text);   // distinct chars, sorted
  static Vocabulary from_chars(std::u32string chars);      // chars already in id order

  int size() const { return static_cast<int>(chars_.size()); }

  int encode(char32_t c) const;       // throws on unknown char
  int try_encode(char32_t c) const;   // -1 on unknown char
  char32_t decode(int id) const;

  std::vector<int> encode_all(std::u32string_view text) const;
  std::u32string decode_all(std::span<const int> ids) const;

  const std::u32string& chars() const { return chars_; }
  std::string chars_utf8() const;
  std::string hash() const;  // hash of the id-ordered character string

 private:
  std::u32string chars_;
  std::unordered_map<char32_t, int> index_;
};

}  // namespace charlab
