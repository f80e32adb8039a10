#pragma once

#include <cstddef>
#include <string>
#include <string_view>

// Minimal UTF-8 helpers for Latin-script text. Letter classification and case
// folding cover Basic Latin, Latin-1, Latin Extended-A/B, Greek and Cyrillic,
// which is what French and Spanish input needs.
namespace condense::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

struct Decoded {
  char32_t cp;
  std::size_t length;  // bytes consumed, always >= 1
};

// Decodes the code point starting at `pos`. Malformed sequences decode as
// U+FFFD consuming one byte.
Decoded DecodeAt(std::string_view text, std::size_t pos);

void Append(std::string& out, char32_t cp);

bool IsLetter(char32_t cp);
bool IsDigit(char32_t cp);
bool IsWhitespace(char32_t cp);
bool IsApostrophe(char32_t cp);
bool IsHyphen(char32_t cp);

char32_t ToLower(char32_t cp);

std::string Lowercase(std::string_view text);

std::size_t CountCodePoints(std::string_view text);

// Strips leading and trailing whitespace (including no-break spaces).
std::string_view Trim(std::string_view text);

}  // namespace condense::utf8
