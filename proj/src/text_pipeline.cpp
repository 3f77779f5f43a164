#include "pageclass/text_pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include "pageclass/error.hpp"

namespace pageclass {

namespace detail {
extern const std::string_view kDefaultStopwordsText;
}

namespace {

// Decodes one codepoint at `pos`; invalid sequences yield a negative value
// and advance past the offending byte.
UChar32 next_codepoint(std::string_view text, int32_t& pos) {
  UChar32 c;
  U8_NEXT(reinterpret_cast<const uint8_t*>(text.data()), pos, static_cast<int32_t>(text.size()), c);
  return c;
}

void append_utf8(std::string& out, UChar32 c) {
  char buf[U8_MAX_LENGTH];
  int32_t len = 0;
  UBool error = false;
  U8_APPEND(reinterpret_cast<uint8_t*>(buf), len, U8_MAX_LENGTH, c, error);
  if (!error) out.append(buf, static_cast<std::size_t>(len));
}

bool has_upper(std::string_view token) {
  int32_t pos = 0;
  while (pos < static_cast<int32_t>(token.size())) {
    const UChar32 c = next_codepoint(token, pos);
    if (c >= 0 && u_tolower(c) != c) return true;
  }
  return false;
}

}  // namespace

TokenList tokenize(std::string_view text) {
  TokenList tokens;
  std::string current;
  int32_t pos = 0;
  const auto size = static_cast<int32_t>(text.size());
  while (pos < size) {
    const int32_t start = pos;
    const UChar32 c = next_codepoint(text, pos);
    if (c >= 0 && u_isalnum(c)) {
      current.append(text.substr(static_cast<std::size_t>(start), static_cast<std::size_t>(pos - start)));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::string to_lower(std::string_view token) {
  std::string out;
  out.reserve(token.size());
  int32_t pos = 0;
  while (pos < static_cast<int32_t>(token.size())) {
    const int32_t start = pos;
    const UChar32 c = next_codepoint(token, pos);
    if (c < 0) {
      out.append(token.substr(static_cast<std::size_t>(start), static_cast<std::size_t>(pos - start)));
    } else if (c < 0x80) {
      out += static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
    } else {
      append_utf8(out, u_tolower(c));
    }
  }
  return out;
}

bool is_numeric(std::string_view token) {
  if (token.empty()) return false;
  int32_t pos = 0;
  while (pos < static_cast<int32_t>(token.size())) {
    const UChar32 c = next_codepoint(token, pos);
    if (c < 0 || !u_isdigit(c)) return false;
  }
  return true;
}

TokenList normalize(TokenList tokens, const PipelineConfig& config) {
  TokenList out;
  out.reserve(tokens.size());
  for (auto& token : tokens) {
    if (config.lowercase) token = to_lower(token);
    if (config.stopwords.contains(token)) continue;
    if (!config.keep_numeric && is_numeric(token)) continue;
    if (config.stem) token = porter_stem(token);
    out.push_back(std::move(token));
  }
  return out;
}

PipelineConfig PipelineConfig::defaults() {
  PipelineConfig config;
  config.stopwords = default_stopwords();
  return config;
}

PipelineConfig PipelineConfig::identity() {
  PipelineConfig config;
  config.lowercase = false;
  config.stem = false;
  config.keep_numeric = true;
  return config;
}

void PipelineConfig::validate() const {
  if (!lowercase) return;
  for (const auto& word : stopwords)
    if (has_upper(word)) throw Error("stopword '" + word + "' is not lowercase");
}

StopwordSet parse_stopwords(std::string_view text) {
  StopwordSet words;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t");
    words.emplace(line.substr(first, last - first + 1));
  }
  return words;
}

const StopwordSet& default_stopwords() {
  static const StopwordSet words = parse_stopwords(detail::kDefaultStopwordsText);
  return words;
}

StopwordSet load_stopwords(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open stopword file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_stopwords(buf.str());
}

}  // namespace pageclass
