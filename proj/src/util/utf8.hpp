#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace charlab {

struct Utf8Error {
  bool ok = true;
  size_t byte_offset = 0;  // offset of the offending byte when !ok
};

// Strict UTF-8 decode to Unicode scalar values. Rejects overlong forms,
// surrogates, values above U+10FFFF and truncated sequences.
Utf8Error decode_utf8(std::string_view bytes, std::u32string& out);

// Throwing wrapper; message names the byte offset.
std::u32string decode_utf8_or_throw(std::string_view bytes, std::string_view origin);

std::string encode_utf8(char32_t cp);
std::string encode_utf8(std::u32string_view text);

}  // namespace charlab
