#include "util/hash.hpp"

#include <array>

namespace charlab {

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

std::string hash_hex(std::string_view bytes) { return hex64(fnv1a64(bytes)); }

}  // namespace charlab
