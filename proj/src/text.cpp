#include "splitkit/text.hpp"

#include <algorithm>
#include <cctype>

namespace splitkit {

std::vector<char32_t> decode_utf8(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    char32_t cp = 0;
    std::size_t len = 1;
    if (b0 < 0x80) {
      cp = b0;
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
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    if (i + len > s.size()) {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    bool ok = true;
    for (std::size_t k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    if (!ok) {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string encode_utf8(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

bool is_punct_cp(char32_t cp) {
  if (cp < 0x80) {
    return std::ispunct(static_cast<int>(cp)) != 0;
  }
  // Latin-1 punctuation (Po/Pi/Pf/Ps/Pe in 0xA0-0xBF).
  switch (cp) {
    case 0x00A1:  // inverted exclamation
    case 0x00A7:  // section sign
    case 0x00AB:  // left guillemet
    case 0x00B6:  // pilcrow
    case 0x00B7:  // middle dot
    case 0x00BB:  // right guillemet
    case 0x00BF:  // inverted question
      return true;
    default:
      break;
  }
  // General Punctuation block (dashes, curly quotes, ellipsis, ...).
  if (cp >= 0x2010 && cp <= 0x2027) return true;
  if (cp >= 0x2030 && cp <= 0x205E) return true;
  // CJK symbols and fullwidth forms used as punctuation.
  if (cp >= 0x3001 && cp <= 0x3011) return true;
  if (cp >= 0xFF01 && cp <= 0xFF0F) return true;
  if (cp >= 0xFF1A && cp <= 0xFF1F) return true;
  return false;
}

bool is_alpha_cp(char32_t cp) {
  if (cp < 0x80) {
    return std::isalpha(static_cast<int>(cp)) != 0;
  }
  // Latin-1 letters: 0xC0-0xFF except the two multiplication/division signs.
  if (cp >= 0x00C0 && cp <= 0x00FF) {
    return cp != 0x00D7 && cp != 0x00F7;
  }
  // Latin extended, IPA, Greek, Cyrillic, Hebrew, Arabic letter ranges.
  if (cp >= 0x0100 && cp <= 0x02AF) return true;
  if (cp >= 0x0370 && cp <= 0x03FF) return cp != 0x0374 && cp != 0x0375 && cp != 0x037E && cp != 0x0387;
  if (cp >= 0x0400 && cp <= 0x04FF) return true;
  if (cp >= 0x0530 && cp <= 0x058F) return cp < 0x0589;
  if (cp >= 0x05D0 && cp <= 0x05EA) return true;
  if (cp >= 0x0620 && cp <= 0x064A) return true;
  // CJK unified ideographs and kana.
  if (cp >= 0x3040 && cp <= 0x30FF) return true;
  if (cp >= 0x4E00 && cp <= 0x9FFF) return true;
  return false;
}

std::string lowercase(std::string_view s) {
  auto cps = decode_utf8(s);
  for (auto& cp : cps) {
    if (cp < 0x80) {
      cp = static_cast<char32_t>(std::tolower(static_cast<int>(cp)));
    } else if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) {
      cp += 0x20;
    }
  }
  return encode_utf8(cps);
}

std::vector<std::string> split_whitespace(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string join(const std::vector<std::string>& tokens, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.append(sep);
    out.append(tokens[i]);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

}  // namespace splitkit
