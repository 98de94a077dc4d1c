#include "corpus/vocabulary.hpp"

#include <algorithm>
#include <stdexcept>

#include "util/hash.hpp"
#include "util/utf8.hpp"

namespace charlab {

Vocabulary Vocabulary::from_text(std::u32string_view text) {
  if (text.empty()) throw std::invalid_argument("cannot build a vocabulary from empty text");
  std::u32string chars(text);
  std::sort(chars.begin(), chars.end());
  chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
  return from_chars(std::move(chars));
}

Vocabulary Vocabulary::from_chars(std::u32string chars) {
  Vocabulary v;
  v.chars_ = std::move(chars);
  v.index_.reserve(v.chars_.size());
  for (size_t i = 0; i < v.chars_.size(); ++i) {
    const auto [_, inserted] = v.index_.emplace(v.chars_[i], static_cast<int>(i));
    if (!inserted) throw std::invalid_argument("duplicate character in vocabulary");
  }
  return v;
}

int Vocabulary::encode(char32_t c) const {
  const int id = try_encode(c);
  if (id < 0) throw std::invalid_argument("character U+" + hex64(c).substr(10) + " not in vocabulary");
  return id;
}

int Vocabulary::try_encode(char32_t c) const {
  const auto it = index_.find(c);
  return it == index_.end() ? -1 : it->second;
}

char32_t Vocabulary::decode(int id) const {
  if (id < 0 || id >= size()) throw std::invalid_argument("character id out of range: " + std::to_string(id));
  return chars_[static_cast<size_t>(id)];
}

std::vector<int> Vocabulary::encode_all(std::u32string_view text) const {
  std::vector<int> ids;
  ids.reserve(text.size());
  for (char32_t c : text) ids.push_back(encode(c));
  return ids;
}

std::u32string Vocabulary::decode_all(std::span<const int> ids) const {
  std::u32string out;
  out.reserve(ids.size());
  for (int id : ids) out.push_back(decode(id));
  return out;
}

std::string Vocabulary::chars_utf8() const { return encode_utf8(chars_); }

std::string Vocabulary::hash() const { return hash_hex(chars_utf8()); }

}  // namespace charlab
