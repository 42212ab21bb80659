#pragma once

#include <string>
#include <string_view>

namespace ircsna::text {

/// Re-encodes `bytes` as valid UTF-8, replacing every ill-formed sequence
/// with U+FFFD.
std::string sanitize_utf8(std::string_view bytes);

/// Unicode default case folding of a UTF-8 string. ASCII input takes a
/// fast path that never touches ICU.
std::string fold_case(std::string_view utf8);

bool is_ascii(std::string_view s) noexcept;

/// Characters that may appear inside an IRC nickname when it is quoted in a
/// message body. Any byte >= 0x80 counts as a nick character so that UTF-8
/// nicknames survive tokenization intact.
constexpr bool is_nick_char(char c) noexcept {
  const auto u = static_cast<unsigned char>(c);
  if (u >= 0x80) return true;
  if ((u >= 'a' && u <= 'z') || (u >= 'A' && u <= 'Z') || (u >= '0' && u <= '9')) return true;
  switch (c) {
    case '_': case '-': case '[': case ']': case '\\':
    case '`': case '^': case '{': case '}': case '|':
      return true;
    default:
      return false;
  }
}

}  // namespace ircsna::text
