#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace splitkit {

// Minimal UTF-8 handling for the corpus pipeline. Decoding is tolerant:
// invalid bytes are passed through as single replacement codepoints so a
// stray byte in a crawled corpus cannot abort a run.

std::vector<char32_t> decode_utf8(std::string_view s);
std::string encode_utf8(const std::vector<char32_t>& cps);

// Character classes follow Unicode general categories P* (punctuation) and
// L* (letters) on the ranges that occur in this corpus: full ASCII and
// Latin-1 coverage plus the General Punctuation and CJK punctuation blocks.
bool is_punct_cp(char32_t cp);
bool is_alpha_cp(char32_t cp);

// ASCII lowercasing plus the Latin-1 uppercase range.
std::string lowercase(std::string_view s);

std::vector<std::string> split_whitespace(std::string_view s);
std::string join(const std::vector<std::string>& tokens, std::string_view sep = " ");

// "1.5" -> trimmed view helpers used by the line-oriented readers.
std::string_view trim(std::string_view s);
bool starts_with(std::string_view s, std::string_view prefix);

}  // namespace splitkit
