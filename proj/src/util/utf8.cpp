#include "util/utf8.hpp"

#include <stdexcept>

namespace charlab {

Utf8Error decode_utf8(std::string_view bytes, std::u32string& out) {
  out.clear();
  out.reserve(bytes.size());
  size_t i = 0;
  const size_t n = bytes.size();
  while (i < n) {
    const unsigned char b0 = static_cast<unsigned char>(bytes[i]);
    char32_t cp = 0;
    size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      return {false, i};
    }
    if (i + len > n) return {false, i};
    for (size_t k = 1; k < len; ++k) {
      const unsigned char bk = static_cast<unsigned char>(bytes[i + k]);
      if ((bk & 0xC0) != 0x80) return {false, i + k};
      cp = (cp << 6) | (bk & 0x3F);
    }
    // overlong encodings
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000)) return {false, i};
    // surrogates and out-of-range
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return {false, i};
    out.push_back(cp);
    i += len;
  }
  return {true, 0};
}

std::u32string decode_utf8_or_throw(std::string_view bytes, std::string_view origin) {
  std::u32string out;
  const Utf8Error e = decode_utf8(bytes, out);
  if (!e.ok) {
    throw std::runtime_error("invalid UTF-8 in " + std::string(origin) + " at byte offset " +
                             std::to_string(e.byte_offset));
  }
  return out;
}

std::string encode_utf8(char32_t cp) {
  std::string s;
  if (cp < 0x80) {
    s += static_cast<char>(cp);
  } else if (cp < 0x800) {
    s += static_cast<char>(0xC0 | (cp >> 6));
    s += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    s += static_cast<char>(0xE0 | (cp >> 12));
    s += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    s += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    s += static_cast<char>(0xF0 | (cp >> 18));
    s += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    s += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    s += static_cast<char>(0x80 | (cp & 0x3F));
  }
  return s;
}

std::string encode_utf8(std::u32string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char32_t cp : text) s += encode_utf8(cp);
  return s;
}

}  // namespace charlab
