#include "ircsna/text.hpp"

#include <algorithm>

#include <unicode/unistr.h>
#include <unicode/uchar.h>

namespace ircsna::text {

bool is_ascii(std::string_view s) noexcept {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return static_cast<unsigned char>(c) < 0x80; });
}

std::string sanitize_utf8(std::string_view bytes) {
  if (is_ascii(bytes)) return std::string(bytes);
  // fromUTF8 substitutes U+FFFD for ill-formed input.
  const auto ustr = icu::UnicodeString::fromUTF8(
      icu::StringPiece(bytes.data(), static_cast<int32_t>(bytes.size())));
  std::string out;
  ustr.toUTF8String(out);
  return out;
}

std::string fold_case(std::string_view utf8) {
  if (is_ascii(utf8)) {
    std::string out(utf8);
    for (auto& c : out) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
  }
  auto ustr = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  ustr.foldCase(U_FOLD_CASE_DEFAULT);
  std::string out;
  ustr.toUTF8String(out);
  return out;
}

}  // namespace ircsna::text
