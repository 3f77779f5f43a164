#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pageclass {

using Token = std::string;
using TokenList = std::vector<Token>;
using StopwordSet = std::set<std::string, std::less<>>;

struct PipelineConfig {
  bool lowercase = true;
  StopwordSet stopwords;
  bool stem = true;
  bool keep_numeric = true;

  // Lowercase + bundled English stopwords + Porter stemming, numbers kept.
  static PipelineConfig defaults();
  // Every stage disabled: normalize() returns its input unchanged.
  static PipelineConfig identity();

  // Throws Error if lowercase is on and a stopword has uppercase letters.
  void validate() const;

  bool operator==(const PipelineConfig&) const = default;
};

// Splits UTF-8 text on maximal runs of codepoints that are neither letters
// nor digits. Invalid UTF-8 bytes act as separators.
TokenList tokenize(std::string_view text);

// Lowercase, drop stopwords, drop numeric tokens (unless keep_numeric), stem.
// Survivors keep their relative order.
TokenList normalize(TokenList tokens, const PipelineConfig& config);

std::string to_lower(std::string_view token);
bool is_numeric(std::string_view token);

const StopwordSet& default_stopwords();
StopwordSet parse_stopwords(std::string_view text);
// UTF-8, one word per line, '#' starts a comment line. Throws Error.
StopwordSet load_stopwords(const std::filesystem::path& path);

// Classic Porter (1980) suffix stripping. Only words made of ASCII a-z are
// stemmed; anything else is returned unchanged.
std::string porter_stem(std::string_view word);

}  // namespace pageclass
